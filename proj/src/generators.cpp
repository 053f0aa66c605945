#include "cubic/generators.hpp"

#include <algorithm>
#include <string>

#include "cubic/hc_count.hpp"
#include "cubic/io.hpp"

#ifndef CUBIC_FIXTURE_DIR
#define CUBIC_FIXTURE_DIR "data/fixtures"
#endif

namespace cubic {

Graph generalized_petersen(int m, int k) {
    if (m < 3 || k < 1 || 2 * k >= m)
        throw BadParameters("generalized_petersen requires m >= 3 and 1 <= k < m/2");
    std::vector<Edge> edges;
    edges.reserve(3 * m);
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(i, (i + 1) % m);          // outer cycle
        edges.emplace_back(m + i, m + (i + k) % m);  // inner circulant
        edges.emplace_back(i, m + i);                // spoke
    }
    return build_graph(2 * m, std::move(edges));
}

Graph ring_of_ladders(int m, int k) {
    if (m < 2 || k < 2) throw BadParameters("ring_of_ladders requires m >= 2 and k >= 2");
    auto u = [&](int i, int j) { return 2 * k * i + (j - 1); };      // rail u_1..u_k
    auto v = [&](int i, int j) { return 2 * k * i + k + (j - 1); };  // rail v_1..v_k
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = 1; j < k; ++j) {
            edges.emplace_back(u(i, j), u(i, j + 1));
            edges.emplace_back(v(i, j), v(i, j + 1));
        }
        for (int j = 1; j <= k; ++j) edges.emplace_back(u(i, j), v(i, j));  // rungs
        int next = (i + 1) % m;
        edges.emplace_back(u(i, 1), v(next, 1));
        edges.emplace_back(u(i, k), v(next, k));
    }
    return build_graph(2 * m * k, std::move(edges));
}

LayeredGraph nanotube(int w, int k) {
    if (w < 3 || k < 1) throw BadParameters("nanotube requires w >= 3 and k >= 1");
    auto V = [&](int j, int i) { return w + 2 * w * (j - 1) + i; };
    auto W = [&](int j, int i) { return w + 2 * w * (j - 1) + w + i; };
    int end_base = w + 2 * w * k;

    LayeredGraph lg;
    lg.width = w;
    lg.length = k;
    std::vector<Edge> edges;
    for (int i = 0; i < w; ++i) {
        edges.emplace_back(i, (i + 1) % w);                          // start cycle
        edges.emplace_back(end_base + i, end_base + (i + 1) % w);    // end cycle
    }
    for (int j = 1; j <= k; ++j) {
        for (int i = 0; i < w; ++i) {
            edges.emplace_back(V(j, i), W(j, i));
            edges.emplace_back(V(j, i), W(j, (i + 1) % w));
        }
    }
    lg.cuts.resize(k + 1);
    for (int i = 0; i < w; ++i) {
        lg.cuts[0].push_back({std::min(i, V(1, i)), std::max(i, V(1, i))});
        for (int j = 1; j < k; ++j)
            lg.cuts[j].push_back({W(j, i), V(j + 1, i)});
        lg.cuts[k].push_back({W(k, i), end_base + i});
    }
    for (const auto& cut : lg.cuts)
        for (auto e : cut) edges.push_back(e);
    lg.graph = build_graph(2 * w * (k + 1), std::move(edges));
    return lg;
}

namespace {

void validate_handle(const Graph& g, const FourCycleHandle& c) {
    int n = g.vertex_count();
    int vs[4] = {c.v1, c.v2, c.v3, c.v4};
    for (int x : vs)
        if (x < 0 || x >= n) throw NotInducedFourCycle("handle vertex out of range");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j]) throw NotInducedFourCycle("handle vertices not distinct");
    for (int i = 0; i < 4; ++i)
        if (!g.has_edge(vs[i], vs[(i + 1) % 4]))
            throw NotInducedFourCycle("ring edge missing");
    if (g.has_edge(c.v1, c.v3) || g.has_edge(c.v2, c.v4))
        throw NotInducedFourCycle("4-cycle has a chord");
    for (int x : vs)
        if (g.degree(x) != 3) throw NotInducedFourCycle("handle vertex degree != 3");
}

}  // namespace

Graph ladder_extension(const Graph& g, const FourCycleHandle& c, bool verify) {
    validate_handle(g, c);
    Graph cut_open = remove_edges(g, {{c.v1, c.v2}, {c.v3, c.v4}});
    // A disconnected remainder is trivially non-Hamiltonian, so it satisfies
    // the hypothesis without a search.
    if (verify && is_connected(cut_open) && is_hamiltonian(cut_open))
        throw HypothesisViolated("graph minus the two replaced edges is Hamiltonian");

    int n = g.vertex_count();
    int x1 = n, x2 = n + 1, y1 = n + 2, y2 = n + 3;
    std::vector<Edge> edges = cut_open.edges();
    edges.insert(edges.end(), {{c.v1, x1}, {x1, x2}, {x2, c.v2},
                               {c.v3, y2}, {y2, y1}, {y1, c.v4},
                               {x1, y1}, {x2, y2}});
    return build_graph(n + 4, std::move(edges));
}

std::vector<FourCycleHandle> induced_four_cycles(const Graph& g) {
    std::vector<FourCycleHandle> found;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        const auto& nb = g.neighbors(a);
        for (size_t bi = 0; bi < nb.size(); ++bi) {
            for (size_t di = bi + 1; di < nb.size(); ++di) {
                int b = nb[bi], d = nb[di];
                if (b < a || d < a) continue;  // a is the smallest ring vertex
                for (int c : g.neighbors(b)) {
                    if (c <= a || c == d || !g.has_edge(c, d)) continue;
                    if (g.has_edge(a, c) || g.has_edge(b, d)) continue;  // chord
                    if (g.degree(a) != 3 || g.degree(b) != 3 || g.degree(c) != 3 ||
                        g.degree(d) != 3)
                        continue;
                    found.push_back({a, b, c, d});
                }
            }
        }
    }
    return found;
}

namespace {

// Outer 20-cycle a_0..a_19; a 10-cycle through b_0,b_2,..,b_18 with spokes
// to the even a's; eight inner vertices attached to the remaining odd a's
// (except a_5 and a_15, which get a chord), tied into two 4-rings.
Graph make_base38() {
    std::vector<Edge> edges;
    for (int x = 0; x < 20; ++x) edges.emplace_back(x, (x + 1) % 20);
    for (int t = 0; t < 10; ++t) {
        edges.emplace_back(20 + t, 20 + (t + 1) % 10);  // b-cycle b_0-b_2-..-b_18
        edges.emplace_back(20 + t, 2 * t);              // spoke b_{2t}-a_{2t}
    }
    const int cx[8] = {1, 3, 7, 9, 11, 13, 17, 19};  // c ids 30..37 in this order
    for (int s = 0; s < 8; ++s) edges.emplace_back(30 + s, cx[s]);
    edges.emplace_back(5, 15);
    // path c7-c9-c11-c13 closed by the chord c7-c13
    edges.insert(edges.end(), {{32, 33}, {33, 34}, {34, 35}, {32, 35}});
    // path c17-c19-c1-c3 closed by the chord c17-c3
    edges.insert(edges.end(), {{36, 37}, {37, 30}, {30, 31}, {36, 31}});
    return build_graph(38, std::move(edges));
}

}  // namespace

Graph fixture(const std::string& name) { return fixture(name, CUBIC_FIXTURE_DIR); }

Graph fixture(const std::string& name, const std::string& data_dir) {
    if (name == "base38") return make_base38();
    if (name == "cc5_64_a" || name == "cc5_64_b" || name == "fullerene56")
        return read_edge_list_file(data_dir + "/" + name + ".edges");
    throw UnknownFixture("unknown fixture \"" + name + "\"");
}

}  // namespace cubic
