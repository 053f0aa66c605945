#include "cubic/hc_count.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace cubic {

namespace {

enum class EState : std::uint8_t { Undecided, In, Out };

// Edge-state backtracking search. One instance per invocation; the search
// owns all mutable state, so concurrent invocations are independent.
struct Searcher {
    // Called with the full edge-state vector for every Hamilton cycle found;
    // return false to stop the search.
    using CycleSink = std::function<bool(const std::vector<EState>&)>;

    const Graph& g;
    int n, m;
    std::vector<std::vector<std::pair<int, int>>> inc;  // per vertex: (edge, other end)
    std::vector<EState> state;
    std::vector<int> deg_in;     // decided-in edges at each vertex
    std::vector<int> deg_undec;  // undecided edges at each vertex
    int in_total = 0;

    // Union-find over vertices, by size, no path compression: merges are
    // undone in reverse order via merge_log (absorbed roots).
    std::vector<int> parent, comp_size;
    std::vector<int> merge_log;

    // Assignment trail: edge index * 2 + (1 if the assignment merged two
    // components). Out assignments never merge.
    std::vector<int> trail;
    std::vector<int> worklist;  // vertices queued for propagation

    std::uint64_t found = 0;
    CycleSink sink;
    bool stopped = false;

    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline;
    std::uint64_t tick = 0;

    explicit Searcher(const Graph& graph) : g(graph) {
        n = g.vertex_count();
        m = g.edge_count();
        inc.assign(n, {});
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges()[e];
            inc[u].emplace_back(e, v);
            inc[v].emplace_back(e, u);
        }
        state.assign(m, EState::Undecided);
        deg_in.assign(n, 0);
        deg_undec.assign(n, 0);
        for (int v = 0; v < n; ++v) deg_undec[v] = g.degree(v);
        parent.resize(n);
        std::iota(parent.begin(), parent.end(), 0);
        comp_size.assign(n, 1);
    }

    int find(int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    void record_cycle() {
        if (found == UINT64_MAX) throw Overflow("Hamilton cycle count overflowed");
        ++found;
        if (sink && !sink(state)) stopped = true;
    }

    // Applies one edge assignment and queues both endpoints for propagation.
    // Returns false when the assignment is contradictory. A closing edge that
    // completes a spanning cycle is counted here and still reported as a
    // contradiction, because nothing below it remains to explore.
    bool apply(int e, EState s) {
        auto [u, v] = g.edges()[e];
        int merged = 0;
        if (s == EState::In) {
            // Eager saturation check: keeps the in-subgraph at degree <= 2 at
            // all times, which is what makes the closure test below complete.
            if (deg_in[u] == 2 || deg_in[v] == 2) return false;
            int ru = find(u), rv = find(v);
            if (ru == rv) {
                // Closing a cycle is only valid when it spans all n vertices.
                if (in_total + 1 == n) {
                    state[e] = EState::In;
                    trail.push_back(e * 2);
                    record_cycle();
                    return false;
                }
                return false;
            }
            if (comp_size[ru] > comp_size[rv]) std::swap(ru, rv);
            parent[ru] = rv;
            comp_size[rv] += comp_size[ru];
            merge_log.push_back(ru);
            merged = 1;
            ++in_total;
            ++deg_in[u];
            ++deg_in[v];
        }
        state[e] = s;
        --deg_undec[u];
        --deg_undec[v];
        trail.push_back(e * 2 + merged);
        worklist.push_back(u);
        worklist.push_back(v);
        return true;
    }

    // Forces the undecided edges at v as required; false on contradiction.
    bool propagate_vertex(int v) {
        int need = 2 - deg_in[v];
        if (need < 0) return false;
        if (deg_undec[v] < need) return false;
        if (need == 0 && deg_undec[v] > 0) {
            for (auto [e, w] : inc[v])
                if (state[e] == EState::Undecided && !apply(e, EState::Out)) return false;
        } else if (need > 0 && deg_undec[v] == need) {
            for (auto [e, w] : inc[v])
                if (state[e] == EState::Undecided && !apply(e, EState::In)) return false;
        }
        return true;
    }

    // Assigns e := s and propagates to a fixpoint. Returns false on
    // contradiction; the caller must unwind the trail either way.
    bool assign(int e, EState s) {
        if (!apply(e, s)) return false;
        while (!worklist.empty()) {
            int v = worklist.back();
            worklist.pop_back();
            if (!propagate_vertex(v)) {
                worklist.clear();
                return false;
            }
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            int entry = trail.back();
            trail.pop_back();
            int e = entry / 2;
            auto [u, v] = g.edges()[e];
            if (state[e] == EState::In) {
                if (entry % 2) {
                    int ru = merge_log.back();
                    merge_log.pop_back();
                    comp_size[parent[ru]] -= comp_size[ru];
                    parent[ru] = ru;
                    --in_total;
                    --deg_in[u];
                    --deg_in[v];
                    ++deg_undec[u];
                    ++deg_undec[v];
                } else {
                    // closing edge: apply() changed nothing but the state
                }
            } else {
                ++deg_undec[u];
                ++deg_undec[v];
            }
            state[e] = EState::Undecided;
        }
    }

    // Next decision edge: continue from an endpoint of the most recent path
    // (an in-edge endpoint with exactly one in-edge and an undecided edge
    // left), falling back to the first undecided edge.
    int pick_edge() {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            int e = *it / 2;
            if (state[e] != EState::In) continue;
            for (int x : {g.edges()[e].first, g.edges()[e].second}) {
                if (deg_in[x] == 1 && deg_undec[x] > 0) {
                    for (auto [f, w] : inc[x])
                        if (state[f] == EState::Undecided) return f;
                }
            }
        }
        for (int e = 0; e < m; ++e)
            if (state[e] == EState::Undecided) return e;
        return -1;
    }

    void check_budget() {
        if (has_deadline && (++tick & 0xFFF) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            throw Timeout("counting budget exceeded");
    }

    void dfs() {
        if (stopped) return;
        check_budget();
        int e = pick_edge();
        if (e < 0) return;  // unreachable once anything is decided; see notes
        size_t mark = trail.size();
        for (EState s : {EState::In, EState::Out}) {
            if (assign(e, s)) dfs();
            undo_to(mark);
            if (stopped) return;
        }
    }

    void run(std::optional<double> budget_seconds) {
        if (budget_seconds) {
            has_deadline = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*budget_seconds));
        }
        dfs();
    }
};

void require_countable(const Graph& g) {
    if (g.vertex_count() < 3) throw BadParameters("need at least 3 vertices");
    if (!is_connected(g)) throw Disconnected("graph is not connected");
}

}  // namespace

HamiltonCount count_hamilton_cycles(const Graph& g, const CountOptions& opts) {
    require_countable(g);
    auto t0 = std::chrono::steady_clock::now();
    Searcher s(g);
    std::map<Edge, std::uint64_t> tally;
    if (opts.per_edge) {
        for (auto e : g.edges()) tally[e] = 0;
        s.sink = [&](const std::vector<EState>& state) {
            for (int e = 0; e < s.m; ++e)
                if (state[e] == EState::In) ++tally[g.edges()[e]];
            return true;
        };
    }
    s.run(opts.budget_seconds);
    HamiltonCount result;
    result.total = s.found;
    if (opts.per_edge) result.per_edge = std::move(tally);
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

bool is_hamiltonian(const Graph& g, std::optional<double> budget_seconds) {
    require_countable(g);
    Searcher s(g);
    s.sink = [](const std::vector<EState>&) { return false; };  // stop at first
    s.run(budget_seconds);
    return s.found > 0;
}

std::map<int, std::uint64_t> count_by_crossing_type(const LayeredGraph& lg,
                                                    std::optional<double> budget_seconds) {
    require_countable(lg.graph);
    const Graph& g = lg.graph;
    int m = g.edge_count();
    int ncuts = static_cast<int>(lg.cuts.size());
    std::vector<int> cut_of(m, -1);
    for (int c = 0; c < ncuts; ++c) {
        for (auto [u, v] : lg.cuts[c]) {
            int e = g.edge_index(u, v);
            if (e < 0) throw BadParameters("cut edge missing from graph");
            cut_of[e] = c;
        }
    }

    std::map<int, std::uint64_t> buckets;
    std::vector<int> used(ncuts);
    Searcher s(g);
    s.sink = [&](const std::vector<EState>& state) {
        std::fill(used.begin(), used.end(), 0);
        for (int e = 0; e < m; ++e)
            if (state[e] == EState::In && cut_of[e] >= 0) ++used[cut_of[e]];
        for (int c = 1; c < ncuts; ++c)
            if (used[c] != used[0])
                throw CutInvariantViolated(
                    "Hamilton cycle uses " + std::to_string(used[0]) + " edges in cut 0 but " +
                    std::to_string(used[c]) + " in cut " + std::to_string(c));
        if (used[0] % 2 != 0)
            throw CutInvariantViolated("Hamilton cycle uses an odd number of cut edges");
        ++buckets[used[0]];
        return true;
    };
    s.run(budget_seconds);
    return buckets;
}

}  // namespace cubic
