#include "cubic/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cubic {

void TerminalPartition::canonicalize() {
    for (auto& [a, b] : pairs)
        if (a > b) std::swap(a, b);
    std::sort(pairs.begin(), pairs.end());
}

std::vector<int> TerminalPartition::covered() const {
    std::vector<int> out;
    for (auto [a, b] : pairs) {
        out.push_back(a);
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TerminalPartition TerminalPartition::rotated(int s) const {
    TerminalPartition r{width, pairs};
    s = ((s % width) + width) % width;
    for (auto& [a, b] : r.pairs) {
        a = (a + s) % width;
        b = (b + s) % width;
    }
    r.canonicalize();
    return r;
}

std::string TerminalPartition::to_string() const {
    auto glyph = [](int p) {
        return static_cast<char>(p < 10 ? '0' + p : 'a' + (p - 10));
    };
    std::vector<std::vector<int>> cells;
    std::vector<char> in_pair(width, 0);
    for (auto [a, b] : pairs) {
        cells.push_back({a, b});
        in_pair[a] = in_pair[b] = 1;
    }
    for (int p = 0; p < width; ++p)
        if (!in_pair[p]) cells.push_back({p});
    std::sort(cells.begin(), cells.end());
    std::string out = "{";
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += '|';
        for (int p : cells[i]) out += glyph(p);
    }
    return out + "}";
}

bool pairs_cross(std::pair<int, int> p, std::pair<int, int> q) {
    auto [a, b] = p;
    auto [c, d] = q;
    bool c_inside = a < c && c < b;
    bool d_inside = a < d && d < b;
    return c_inside != d_inside;
}

std::vector<TerminalPartition> noncrossing_pair_partitions(int w, int c) {
    if (c < 1 || 2 * c > w)
        throw BadParameters("need 1 <= 2c <= w");
    std::vector<TerminalPartition> out;
    std::vector<int> free_pos(w);
    std::iota(free_pos.begin(), free_pos.end(), 0);
    std::vector<std::pair<int, int>> pairs;

    // Pair the smallest free position with any larger one, or drop it as a
    // singleton; generates every pair set exactly once.
    auto gen = [&](auto&& self, std::vector<int> free, int left) -> void {
        if (left == 0) {
            for (size_t i = 0; i < pairs.size(); ++i)
                for (size_t j = i + 1; j < pairs.size(); ++j)
                    if (pairs_cross(pairs[i], pairs[j])) return;
            TerminalPartition p{w, pairs};
            p.canonicalize();
            out.push_back(std::move(p));
            return;
        }
        if (static_cast<int>(free.size()) < 2 * left) return;
        int a = free.front();
        for (size_t i = 1; i < free.size(); ++i) {
            std::vector<int> rest;
            for (size_t j = 1; j < free.size(); ++j)
                if (j != i) rest.push_back(free[j]);
            pairs.emplace_back(a, free[i]);
            self(self, std::move(rest), left - 1);
            pairs.pop_back();
        }
        free.erase(free.begin());  // a stays a singleton
        self(self, std::move(free), left);
    };
    gen(gen, free_pos, c);
    std::sort(out.begin(), out.end(),
              [](const TerminalPartition& a, const TerminalPartition& b) { return a < b; });
    return out;
}

std::vector<RotationOrbit> rotation_orbits(int w,
                                           const std::vector<TerminalPartition>& parts) {
    std::map<TerminalPartition, int> pos;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].width != w) throw BadParameters("partition width mismatch");
        pos[parts[i]] = static_cast<int>(i);
    }
    std::vector<char> seen(parts.size(), 0);
    std::vector<RotationOrbit> orbits;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (seen[i]) continue;
        RotationOrbit orbit;
        TerminalPartition cur = parts[i];
        do {
            auto it = pos.find(cur);
            if (it == pos.end())
                throw NotRotationClosed("rotation of " + cur.rotated(-1).to_string() +
                                        " is missing from the input");
            if (!seen[it->second]) {
                seen[it->second] = 1;
                orbit.members.push_back(cur);
            }
            cur = cur.rotated(1);
        } while (!(cur == parts[i]));
        std::sort(orbit.members.begin(), orbit.members.end(),
                  [](const TerminalPartition& a, const TerminalPartition& b) { return a < b; });
        orbit.representative = orbit.members.front();
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [](const RotationOrbit& a, const RotationOrbit& b) {
        return a.representative < b.representative;
    });
    return orbits;
}

namespace {

// Paths of a ring-edge subset: each path as its two endpoint ring vertices.
// Assumes no vertex of degree 0 and that the subset is not the full ring.
std::vector<std::pair<int, int>> trace_paths(int ring, std::uint32_t mask) {
    auto present = [&](int e) { return (mask >> ((e % ring + ring) % ring)) & 1u; };
    auto deg = [&](int t) { return present(t - 1) + present(t); };
    std::vector<char> visited(ring, 0);
    std::vector<std::pair<int, int>> paths;
    for (int start = 0; start < ring; ++start) {
        if (visited[start] || deg(start) != 1) continue;
        int cur = start, prev_edge = -1;
        visited[cur] = 1;
        for (;;) {
            int e1 = (cur - 1 + ring) % ring, e2 = cur;
            int e = (present(e1) && e1 != prev_edge) ? e1 : e2;
            int next = (e == cur) ? (cur + 1) % ring : e;
            visited[next] = 1;
            if (deg(next) == 1) {
                paths.emplace_back(start, next);
                break;
            }
            prev_edge = e;
            cur = next;
        }
    }
    return paths;
}

void check_width(int w) {
    if (2 * w > 26) throw WidthTooLarge("2w > 26 exceeds the tile enumeration guard");
    if (w < 3) throw BadParameters("width must be at least 3");
}

}  // namespace

std::vector<Tile> internal_tiles(int w, int c) {
    check_width(w);
    if (c < 1 || 2 * c > w) throw BadParameters("need 1 <= 2c <= w");
    int ring = 2 * w;
    std::uint32_t full = (ring == 32) ? 0xFFFFFFFFu : ((1u << ring) - 1);
    std::vector<Tile> tiles;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        // A vertex sits between two absent edges iff the complement has two
        // cyclically adjacent bits; such masks leave a vertex uncovered.
        std::uint32_t comp = ~mask & full;
        if (comp & ((comp >> 1) | (comp << (ring - 1)))) continue;

        Tile t;
        t.kind = Tile::Kind::Internal;
        t.width = w;
        t.edge_mask = mask;
        bool ok = true;
        for (int rv = 0; rv < ring && ok; ++rv) {
            int d = ((mask >> ((rv - 1 + ring) % ring)) & 1u) + ((mask >> rv) & 1u);
            if (d != 1) continue;
            if (rv % 2 == 0) {  // V_{rv/2}
                t.left_terminals.push_back(rv / 2);
                ok = static_cast<int>(t.left_terminals.size()) <= 2 * c;
            } else {  // W_{(rv+1)/2 mod w}
                t.right_terminals.push_back(((rv + 1) / 2) % w);
                ok = static_cast<int>(t.right_terminals.size()) <= 2 * c;
            }
        }
        if (!ok || static_cast<int>(t.left_terminals.size()) != 2 * c ||
            static_cast<int>(t.right_terminals.size()) != 2 * c)
            continue;
        std::sort(t.right_terminals.begin(), t.right_terminals.end());
        for (auto [a, b] : trace_paths(ring, mask)) {
            auto encode = [&](int rv) {
                return rv % 2 == 0 ? rv / 2 : w + ((rv + 1) / 2) % w;
            };
            int ea = encode(a), eb = encode(b);
            if (ea > eb) std::swap(ea, eb);
            t.pairings.emplace_back(ea, eb);
        }
        std::sort(t.pairings.begin(), t.pairings.end());
        tiles.push_back(std::move(t));
    }
    return tiles;
}

std::vector<Tile> end_tiles(int w, int c) {
    check_width(w);
    if (c < 1 || 2 * c > w) throw BadParameters("need 1 <= 2c <= w");
    std::uint32_t full = (1u << w) - 1;
    std::vector<Tile> tiles;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        std::uint32_t comp = ~mask & full;
        if (comp & ((comp >> 1) | (comp << (w - 1)))) continue;

        Tile t;
        t.kind = Tile::Kind::End;
        t.width = w;
        t.edge_mask = mask;
        bool ok = true;
        for (int rv = 0; rv < w && ok; ++rv) {
            int d = ((mask >> ((rv - 1 + w) % w)) & 1u) + ((mask >> rv) & 1u);
            if (d == 1) {
                t.right_terminals.push_back(rv);
                ok = static_cast<int>(t.right_terminals.size()) <= 2 * c;
            }
        }
        if (!ok || static_cast<int>(t.right_terminals.size()) != 2 * c) continue;
        for (auto [a, b] : trace_paths(w, mask)) {
            if (a > b) std::swap(a, b);
            t.pairings.emplace_back(a, b);
        }
        std::sort(t.pairings.begin(), t.pairings.end());
        tiles.push_back(std::move(t));
    }
    return tiles;
}

TerminalPartition end_tile_partition(const Tile& t) {
    if (t.kind != Tile::Kind::End) throw BadParameters("end tile expected");
    TerminalPartition p{t.width, t.pairings};
    p.canonicalize();
    return p;
}

namespace {

struct MiniDsu {
    std::vector<int> parent;
    explicit MiniDsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false when x,y already joined
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

}  // namespace

std::optional<TerminalPartition> transfer_step(int w, const TerminalPartition& pi,
                                               const Tile& t) {
    if (pi.width != w || t.width != w)
        throw WidthMismatch("partition and tile widths must both equal w");
    if (t.kind != Tile::Kind::Internal) throw BadParameters("internal tile expected");
    if (pi.covered() != t.left_terminals) return std::nullopt;

    // Left endpoints keep their position id, right endpoints live at w+pos.
    MiniDsu dsu(2 * w);
    for (auto [a, b] : pi.pairs) dsu.unite(a, b);
    for (auto [x, y] : t.pairings) {
        if (!dsu.unite(x, y)) return std::nullopt;  // premature cycle
    }
    std::map<int, std::vector<int>> by_root;
    for (int rp : t.right_terminals) by_root[dsu.find(w + rp)].push_back(rp);
    TerminalPartition result{w, {}};
    for (auto& [root, members] : by_root) {
        if (members.size() != 2)
            throw std::logic_error("merged state is not a pairing of right terminals");
        result.pairs.emplace_back(members[0], members[1]);
    }
    result.canonicalize();
    return result;
}

bool end_tile_closes(const TerminalPartition& pi, const Tile& t) {
    if (pi.width != t.width) throw WidthMismatch("partition and tile widths differ");
    if (t.kind != Tile::Kind::End) throw BadParameters("end tile expected");
    std::vector<int> cov = pi.covered();
    if (cov != t.right_terminals) return false;
    if (cov.empty()) return false;
    MiniDsu dsu(pi.width);
    for (auto [a, b] : pi.pairs) dsu.unite(a, b);
    for (auto [x, y] : t.pairings) dsu.unite(x, y);
    // Every terminal has degree 2 in the merged structure, so the components
    // are disjoint cycles; a Hamilton closure is exactly one cycle.
    int root = dsu.find(cov.front());
    return std::all_of(cov.begin(), cov.end(), [&](int p) { return dsu.find(p) == root; });
}

BigMatrix matrix_multiply(const BigMatrix& x, const BigMatrix& y) {
    if (x.n != y.n) throw BadParameters("matrix size mismatch");
    BigMatrix r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < x.n; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

BigMatrix matrix_power(BigMatrix base, std::uint64_t exp) {
    BigMatrix result(base.n);
    for (int i = 0; i < base.n; ++i) result.at(i, i) = 1;
    while (exp > 0) {
        if (exp & 1) result = matrix_multiply(result, base);
        exp >>= 1;
        if (exp) base = matrix_multiply(base, base);
    }
    return result;
}

TransferSystem build_transfer_system(int w, int c, bool reduced) {
    if (w > 13) throw WidthTooLarge("width capped at 13 (tile enumeration 2^(2w))");
    auto parts = noncrossing_pair_partitions(w, c);
    auto orbits = rotation_orbits(w, parts);
    auto tiles = internal_tiles(w, c);
    auto ends = end_tiles(w, c);

    std::map<TerminalPartition, int> slot_of;  // partition -> row/column index
    TransferSystem sys;
    sys.width = w;
    sys.pairs = c;
    sys.reduced = reduced;
    if (reduced) {
        for (size_t i = 0; i < orbits.size(); ++i) {
            sys.index.push_back(orbits[i].representative);
            sys.orbit_sizes.push_back(static_cast<int>(orbits[i].members.size()));
            for (const auto& member : orbits[i].members)
                slot_of[member] = static_cast<int>(i);
        }
    } else {
        for (size_t i = 0; i < parts.size(); ++i) {
            sys.index.push_back(parts[i]);
            slot_of[parts[i]] = static_cast<int>(i);
        }
    }

    int dim = static_cast<int>(sys.index.size());
    sys.M = BigMatrix(dim);
    sys.v_s.assign(dim, 0);
    sys.v_f.assign(dim, 0);
    for (int i = 0; i < dim; ++i) {
        for (const auto& tile : tiles) {
            auto next = transfer_step(w, sys.index[i], tile);
            if (!next) continue;
            auto it = slot_of.find(*next);
            if (it == slot_of.end())
                throw std::logic_error("transfer left the partition family: " +
                                       next->to_string());
            sys.M.at(i, it->second) += 1;
        }
        for (const auto& end : ends)
            if (end_tile_closes(sys.index[i], end)) sys.v_f[i] += 1;
    }
    for (const auto& end : ends) {
        auto p = end_tile_partition(end);
        auto it = slot_of.find(p);
        if (it == slot_of.end())
            throw std::logic_error("end tile induced an unknown partition: " + p.to_string());
        sys.v_s[it->second] += 1;
    }
    return sys;
}

BigInt system_count(const TransferSystem& sys, std::uint64_t k) {
    BigMatrix p = matrix_power(sys.M, k);
    BigInt total = 0;
    for (int i = 0; i < p.n; ++i) {
        if (sys.v_s[i] == 0) continue;
        for (int j = 0; j < p.n; ++j) total += sys.v_s[i] * p.at(i, j) * sys.v_f[j];
    }
    return total;
}

BigInt typed_count(int w, int c, std::uint64_t k) {
    return system_count(build_transfer_system(w, c, true), k);
}

BigInt total_nanotube_count(int w, std::uint64_t k) {
    BigInt total = 0;
    for (int c = 1; 2 * c <= w; ++c) total += typed_count(w, c, k);
    return total;
}

std::vector<BigInt> characteristic_polynomial(const BigMatrix& m) {
    int n = m.n;
    std::vector<BigInt> coeff(n + 1, 0);
    coeff[n] = 1;
    if (n == 0) return coeff;
    auto trace = [&](const BigMatrix& x) {
        BigInt t = 0;
        for (int i = 0; i < n; ++i) t += x.at(i, i);
        return t;
    };
    BigMatrix mk = m;
    coeff[n - 1] = -trace(m);
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) mk.at(i, i) += coeff[n - k + 1];
        mk = matrix_multiply(m, mk);
        BigInt t = trace(mk);
        if (t % k != 0) throw std::logic_error("characteristic polynomial division failed");
        coeff[n - k] = -t / k;
    }
    return coeff;
}

namespace {

int poly_degree(const std::vector<BigInt>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void poly_trim(std::vector<BigInt>& p) {
    p.resize(static_cast<size_t>(std::max(poly_degree(p), 0)) + 1);
}

std::vector<BigInt> poly_derivative(const std::vector<BigInt>& p) {
    if (p.size() <= 1) return {0};
    std::vector<BigInt> d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<int>(i);
    return d;
}

BigInt poly_content(const std::vector<BigInt>& p) {
    BigInt c = 0;
    for (const auto& x : p) c = boost::multiprecision::gcd(c, x);
    return c;
}

std::vector<BigInt> poly_primitive(std::vector<BigInt> p) {
    poly_trim(p);
    BigInt c = poly_content(p);
    if (c > 1)
        for (auto& x : p) x /= c;
    if (poly_degree(p) >= 0 && p[poly_degree(p)] < 0)
        for (auto& x : p) x = -x;
    return p;
}

// lc(b)^(deg a - deg b + 1) * a mod b, the integer pseudo-remainder.
std::vector<BigInt> poly_pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    int db = poly_degree(b);
    const BigInt& lb = b[db];
    while (true) {
        int da = poly_degree(a);
        if (da < db) break;
        BigInt s = a[da];
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= s * b[i];
        a[da] = 0;
    }
    poly_trim(a);
    return a;
}

std::vector<BigInt> poly_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
    a = poly_primitive(std::move(a));
    b = poly_primitive(std::move(b));
    if (poly_degree(a) < poly_degree(b)) std::swap(a, b);
    while (poly_degree(b) >= 0 && !(poly_degree(b) == 0 && b[0] == 0)) {
        auto r = poly_pseudo_rem(a, b);
        a = std::move(b);
        b = poly_primitive(std::move(r));
        if (poly_degree(b) < 0 || (b.size() == 1 && b[0] == 0)) break;
        if (poly_degree(b) == 0) {
            b = {BigInt(0)};
            a = {BigInt(1)};  // coprime
            break;
        }
    }
    return poly_primitive(std::move(a));
}

double poly_eval(const std::vector<BigInt>& p, double x) {
    double acc = 0;
    for (int i = poly_degree(p); i >= 0; --i) acc = acc * x + p[i].convert_to<double>();
    return acc;
}

}  // namespace

std::optional<std::vector<BigInt>> poly_divide_exact(const std::vector<BigInt>& p,
                                                     const std::vector<BigInt>& d) {
    int dp = poly_degree(p), dd = poly_degree(d);
    if (dd < 0) return std::nullopt;
    if (dp < dd) return std::nullopt;
    std::vector<BigInt> rem(p.begin(), p.begin() + dp + 1);
    std::vector<BigInt> quot(dp - dd + 1, 0);
    const BigInt& lead = d[dd];
    for (int i = dp - dd; i >= 0; --i) {
        BigInt top = rem[i + dd];
        if (top % lead != 0) return std::nullopt;
        BigInt q = top / lead;
        quot[i] = q;
        if (q != 0)
            for (int j = 0; j <= dd; ++j) rem[i + j] -= q * d[j];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return quot;
}

GrowthConstants growth_constants(int w, int c) {
    TransferSystem sys = build_transfer_system(w, c, true);
    GrowthConstants out;
    out.char_poly = characteristic_polynomial(sys.M);

    // Empirical zero pattern of the count sequence over a sampling window.
    std::vector<bool> nonzero;
    {
        std::vector<BigInt> v = sys.v_f;
        for (int k = 1; k <= 12; ++k) {
            std::vector<BigInt> next(v.size(), 0);
            for (int i = 0; i < sys.M.n; ++i)
                for (int j = 0; j < sys.M.n; ++j) next[i] += sys.M.at(i, j) * v[j];
            v = std::move(next);
            BigInt count = 0;
            for (size_t i = 0; i < v.size(); ++i) count += sys.v_s[i] * v[i];
            nonzero.push_back(count != 0);
        }
    }
    bool any_odd = false, any_even = false, all_odd = true, all_even = true;
    for (int k = 1; k <= 12; ++k) {
        bool nz = nonzero[k - 1];
        if (k % 2) {
            any_odd |= nz;
            all_odd &= nz;
        } else {
            any_even |= nz;
            all_even &= nz;
        }
    }
    int residue;  // k residue (mod period) where counts are nonzero
    if (all_odd && all_even) {
        out.period = 1;
        residue = 0;
    } else if (all_odd && !any_even) {
        out.period = 2;
        residue = 1;
    } else if (all_even && !any_odd) {
        out.period = 2;
        residue = 0;
    } else if (!any_odd && !any_even) {
        throw NoRealDominantRoot("count sequence is identically zero");
    } else {
        throw NoRealDominantRoot("count sequence has an irregular zero pattern");
    }

    // Power iteration on M + I in doubles: the shift breaks modulus ties
    // between eigenvalue pairs of opposite sign, so the iteration converges
    // to 1 + spectral radius.
    int n = sys.M.n;
    std::vector<double> md(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) md[static_cast<size_t>(i) * n + j] = sys.M.at(i, j).convert_to<double>();
    std::vector<double> x(n, 1.0), y(n);
    double lambda = 1.0;
    for (int it = 0; it < 2000; ++it) {
        double norm = 0;
        for (int i = 0; i < n; ++i) {
            double acc = x[i];  // the +I shift
            for (int j = 0; j < n; ++j) acc += md[static_cast<size_t>(i) * n + j] * x[j];
            y[i] = acc;
            norm = std::max(norm, std::abs(acc));
        }
        if (norm == 0) throw NoRealDominantRoot("power iteration collapsed to zero");
        for (int i = 0; i < n; ++i) y[i] /= norm;
        lambda = norm;
        x = y;
    }
    double rho_est = lambda - 1.0;

    // Refine on the square-free part of the characteristic polynomial: its
    // sign changes at the (simple) spectral radius, so bisection applies.
    std::vector<BigInt> p = out.char_poly;
    std::vector<BigInt> g = poly_gcd(p, poly_derivative(p));
    std::vector<BigInt> q = p;
    if (poly_degree(g) >= 1) {
        auto divided = poly_divide_exact(p, g);
        if (divided) q = poly_primitive(std::move(*divided));
    }
    double lo = rho_est, hi = rho_est, delta = 0.25;
    bool bracketed = false;
    for (int tries = 0; tries < 64; ++tries) {
        lo = rho_est - delta;
        hi = rho_est + delta;
        if (poly_eval(q, lo) == 0) { hi = lo; bracketed = true; break; }
        if ((poly_eval(q, lo) < 0) != (poly_eval(q, hi) < 0)) {
            bracketed = true;
            break;
        }
        delta *= 2;
    }
    if (!bracketed) throw NoRealDominantRoot("failed to bracket the dominant root");
    for (int it = 0; it < 200 && lo < hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if ((poly_eval(q, mid) < 0) == (poly_eval(q, lo) < 0))
            lo = mid;
        else
            hi = mid;
    }
    out.dominant_root = 0.5 * (lo + hi);
    out.step_factor = out.period == 2 ? out.dominant_root * out.dominant_root
                                      : out.dominant_root;

    out.prefactor_k = 41;
    while (out.period == 2 && out.prefactor_k % 2 != residue % 2) --out.prefactor_k;
    BigInt exact = system_count(sys, static_cast<std::uint64_t>(out.prefactor_k));
    out.prefactor_estimate =
        exact.convert_to<double>() / std::pow(out.dominant_root, out.prefactor_k);
    return out;
}

}  // namespace cubic
