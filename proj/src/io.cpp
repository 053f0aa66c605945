#include "cubic/io.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

#include "cubic/errors.hpp"
#include "cubic/hc_count.hpp"

namespace cubic {

namespace {

constexpr char kPlanarCodeHeader[] = ">>planar_code<<";
constexpr std::size_t kHeaderLen = 15;

}  // namespace

std::vector<Graph> read_planar_code(std::istream& in) {
    if (in.peek() == '>') {
        char buf[kHeaderLen];
        in.read(buf, kHeaderLen);
        if (static_cast<std::size_t>(in.gcount()) != kHeaderLen ||
            std::string(buf, kHeaderLen) != kPlanarCodeHeader)
            throw BadHeader("stream starts with '>' but not with \">>planar_code<<\"");
    }
    std::vector<Graph> graphs;
    for (;;) {
        int first = in.get();
        if (first < 0) break;  // clean end of stream
        if (first == 0)
            throw UnsupportedSize("two-byte planar_code vertex counts are not supported");
        int n = first;
        std::vector<std::pair<int, int>> arcs;
        for (int v = 0; v < n; ++v) {
            for (;;) {
                int b = in.get();
                if (b < 0) throw TruncatedStream("planar_code record ends inside a graph");
                if (b == 0) break;
                if (b > n) throw ParseError("planar_code neighbor exceeds the vertex count");
                arcs.emplace_back(v, b - 1);
            }
        }
        // Arc multiplicities must match in both directions; the Graph builder
        // then rejects loops and parallel edges.
        std::vector<int> cnt(static_cast<std::size_t>(n) * n, 0);
        for (auto [u, v] : arcs) ++cnt[static_cast<std::size_t>(u) * n + v];
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            if (cnt[static_cast<std::size_t>(u) * n + u] > 0) edges.emplace_back(u, u);
            for (int v = u + 1; v < n; ++v) {
                int uv = cnt[static_cast<std::size_t>(u) * n + v];
                int vu = cnt[static_cast<std::size_t>(v) * n + u];
                if (uv != vu)
                    throw AsymmetricAdjacency("planar_code adjacency lists disagree between " +
                                              std::to_string(u) + " and " + std::to_string(v));
                for (int i = 0; i < uv; ++i) edges.emplace_back(u, v);
            }
        }
        graphs.push_back(build_graph(n, edges));
    }
    return graphs;
}

void write_planar_code(const std::vector<Graph>& graphs, std::ostream& out, bool header) {
    if (header) out.write(kPlanarCodeHeader, kHeaderLen);
    for (const Graph& g : graphs) {
        int n = g.vertex_count();
        if (n < 1 || n > 255)
            throw UnsupportedSize("planar_code output needs 1..255 vertices, got " +
                                  std::to_string(n));
        out.put(static_cast<char>(n));
        for (int v = 0; v < n; ++v) {
            for (int w : g.neighbors(v)) out.put(static_cast<char>(w + 1));
            out.put('\0');
        }
    }
}

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("expected \"n m\" as the first two tokens");
    if (n < 0 || m < 0) throw ParseError("negative counts in edge list header");
    if (n > std::numeric_limits<int>::max()) throw ParseError("vertex count does not fit in int");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) {
            if (in.eof())
                throw InconsistentCounts("edge list declares " + std::to_string(m) +
                                         " edges but ends after " + std::to_string(i));
            throw ParseError("malformed edge line " + std::to_string(i));
        }
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("edge " + std::to_string(u) + " " + std::to_string(v) +
                                   " leaves 0.." + std::to_string(n - 1));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return build_graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

namespace {

struct GraphResult {
    enum Kind { kCounted, kTimeout, kFiltered } kind = kCounted;
    std::uint64_t total = 0;
    std::exception_ptr error;
};

}  // namespace

std::vector<SurveyRow> survey(const std::vector<Graph>& corpus, const SurveyOptions& opts) {
    std::vector<GraphResult> results(corpus.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&corpus, &opts, &results, &cursor] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= corpus.size()) return;
            GraphResult& r = results[i];
            try {
                if (opts.cc_filter &&
                    !is_cyclically_k_edge_connected(corpus[i], *opts.cc_filter)) {
                    r.kind = GraphResult::kFiltered;
                    continue;
                }
                CountOptions copts;
                copts.budget_seconds = opts.budget_seconds;
                r.total = count_hamilton_cycles(corpus[i], copts).total;
            } catch (const Timeout&) {
                r.kind = GraphResult::kTimeout;
            } catch (...) {
                r.error = std::current_exception();
            }
        }
    };
    std::size_t workers = opts.workers ? opts.workers : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(corpus.size(), 1));
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t t = 0; t + 1 < workers; ++t) pool.emplace_back(work);
    work();
    for (std::thread& th : pool) th.join();

    for (const GraphResult& r : results)
        if (r.error) std::rethrow_exception(r.error);

    // Aggregate in corpus order so ties in max_hc resolve to the first id.
    std::map<int, SurveyRow> rows;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const GraphResult& r = results[i];
        if (r.kind == GraphResult::kFiltered) continue;
        SurveyRow& row = rows[corpus[i].vertex_count()];
        row.n = corpus[i].vertex_count();
        ++row.graph_count;
        if (r.kind == GraphResult::kTimeout) {
            ++row.timeouts;
            continue;
        }
        if (r.total == 0) continue;
        if (row.hamiltonian_count == 0 || r.total < row.min_hc) row.min_hc = r.total;
        if (row.hamiltonian_count == 0 || r.total > row.max_hc) {
            row.max_hc = r.total;
            row.argmax_id = static_cast<std::int64_t>(i);
        }
        ++row.hamiltonian_count;
    }
    std::vector<SurveyRow> out;
    out.reserve(rows.size());
    for (auto& [n, row] : rows) out.push_back(row);
    return out;
}

void write_survey_csv(const std::vector<SurveyRow>& rows, std::ostream& out) {
    out << "n,graphs,hamiltonian,min,max,argmax_id\n";
    for (const SurveyRow& r : rows) {
        out << r.n << ',' << r.graph_count << ',' << r.hamiltonian_count << ',';
        if (r.hamiltonian_count > 0)
            out << r.min_hc << ',' << r.max_hc << ',' << r.argmax_id << '\n';
        else
            out << ",,\n";
    }
}

std::string survey_table(const std::vector<SurveyRow>& rows) {
    std::ostringstream out;
    out << std::setw(4) << "n" << std::setw(10) << "graphs" << std::setw(13) << "hamiltonian"
        << std::setw(14) << "min" << std::setw(16) << "max" << std::setw(11) << "argmax_id"
        << std::setw(10) << "timeouts" << '\n';
    for (const SurveyRow& r : rows) {
        out << std::setw(4) << r.n << std::setw(10) << r.graph_count << std::setw(13)
            << r.hamiltonian_count;
        if (r.hamiltonian_count > 0)
            out << std::setw(14) << r.min_hc << std::setw(16) << r.max_hc << std::setw(11)
                << r.argmax_id;
        else
            out << std::setw(14) << '-' << std::setw(16) << '-' << std::setw(11) << '-';
        out << std::setw(10) << r.timeouts << '\n';
    }
    return out.str();
}

}  // namespace cubic
