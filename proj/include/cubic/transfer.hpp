#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubic/errors.hpp"

namespace cubic {

using BigInt = boost::multiprecision::cpp_int;

// Pairing of the cut positions {0..w-1}: c disjoint pairs, every uncovered
// position an implicit singleton. Pairs are kept canonical ((a,b) with a<b,
// sorted) and must be non-crossing in the circular order.
struct TerminalPartition {
    int width = 0;
    std::vector<std::pair<int, int>> pairs;

    void canonicalize();
    // Sorted list of all positions covered by a pair.
    std::vector<int> covered() const;
    // Image under the rotation i -> (i+s) mod width, canonicalized.
    TerminalPartition rotated(int s) const;
    // Display form, cells sorted by least element: "{04|13|2}". Positions
    // beyond 9 print as lowercase letters.
    std::string to_string() const;

    friend bool operator==(const TerminalPartition&, const TerminalPartition&) = default;
    friend auto operator<=>(const TerminalPartition& a, const TerminalPartition& b) {
        if (auto c = a.width <=> b.width; c != 0) return c;
        return a.pairs <=> b.pairs;
    }
};

// True iff two canonical pairs interleave in the circular order; with a < b,
// that is exactly one of c,d falling strictly between a and b.
bool pairs_cross(std::pair<int, int> p, std::pair<int, int> q);

// The piece of a Hamilton cycle inside one layer: a union of vertex-disjoint
// paths on the layer cycle, no vertex left uncovered, no full cycle.
//
// Internal tiles live on the 2w-cycle; its vertices in ring order are
// V_0, W_1, V_1, W_2, ..., V_{w-1}, W_0, and ring edge t joins ring vertices
// t and t+1 (mod 2w). A degree-1 V_i means the left attachment at position i
// is used; a degree-1 W_i means the right attachment at position i is used.
// End tiles live on the w-cycle (ring edge t joins positions t and t+1) and
// have a single attachment side; their terminals are stored in
// right_terminals and their pairings use plain positions.
//
// `pairings` lists each path's two endpoints, encoded as the position for
// left/end-cycle endpoints and width+position for right endpoints.
struct Tile {
    enum class Kind { Internal, End };
    Kind kind = Kind::Internal;
    int width = 0;
    std::uint32_t edge_mask = 0;
    std::vector<int> left_terminals;
    std::vector<int> right_terminals;
    std::vector<std::pair<int, int>> pairings;
};

// All partitions of {0..w-1} into exactly c non-crossing pairs plus
// singletons, sorted. Requires 1 <= 2c <= w (BadParameters).
std::vector<TerminalPartition> noncrossing_pair_partitions(int w, int c);

struct RotationOrbit {
    TerminalPartition representative;  // lexicographically least member
    std::vector<TerminalPartition> members;
};

// Groups partitions into orbits of the rotation i -> i+1 (mod w); the input
// must be closed under that rotation (NotRotationClosed). Orbits are sorted
// by representative.
std::vector<RotationOrbit> rotation_orbits(int w, const std::vector<TerminalPartition>& parts);

// Every internal tile of width w with exactly 2c terminals per side, found
// by scanning all subsets of the 2w ring edges. WidthTooLarge when 2w > 26.
std::vector<Tile> internal_tiles(int w, int c);

// Every end tile of width w with exactly 2c terminals.
std::vector<Tile> end_tiles(int w, int c);

// The terminal partition induced by an end tile's path pairings.
TerminalPartition end_tile_partition(const Tile& t);

// Pushes the partial-cycle state `pi` through an internal tile. Returns
// nothing when the tile is incompatible (its left terminals differ from
// pi's covered set) or when joining pi's pairs to the tile paths closes a
// cycle, which at an internal layer is always premature. Otherwise returns
// the pairing of the tile's right terminals induced by the merged paths.
// Throws WidthMismatch.
std::optional<TerminalPartition> transfer_step(int w, const TerminalPartition& pi,
                                               const Tile& t);

// True iff the end tile `t` closes the state `pi` into one single cycle.
bool end_tile_closes(const TerminalPartition& pi, const Tile& t);

struct BigMatrix {
    int n = 0;
    std::vector<BigInt> a;  // row-major

    explicit BigMatrix(int size = 0) : n(size), a(static_cast<size_t>(size) * size) {}
    BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    friend bool operator==(const BigMatrix&, const BigMatrix&) = default;
};

BigMatrix matrix_multiply(const BigMatrix& x, const BigMatrix& y);
BigMatrix matrix_power(BigMatrix base, std::uint64_t exp);

// Transfer system for width w and c pairs: counts v_s^T M^k v_f realize the
// type-2c Hamilton cycle counts of the width-w tube of length k. Reduced
// systems are indexed by rotation orbits (index holds the representatives),
// full systems by all partitions.
struct TransferSystem {
    int width = 0;
    int pairs = 0;
    bool reduced = true;
    std::vector<TerminalPartition> index;
    std::vector<int> orbit_sizes;  // reduced systems only
    BigMatrix M;
    std::vector<BigInt> v_s;
    std::vector<BigInt> v_f;
};

TransferSystem build_transfer_system(int w, int c, bool reduced = true);

// v_s^T M^k v_f for the given system.
BigInt system_count(const TransferSystem& sys, std::uint64_t k);

// Exact type-2c count for the width-w tube of length k, via the reduced
// system and matrix powers by repeated squaring.
BigInt typed_count(int w, int c, std::uint64_t k);

// Sum of typed_count over all c with 2 <= 2c <= w; the total Hamilton cycle
// count of nanotube(w,k).
BigInt total_nanotube_count(int w, std::uint64_t k);

// Growth data for the type-2c count sequence. char_poly lists the exact
// characteristic polynomial of the reduced matrix, coefficient i belonging
// to x^i, leading coefficient 1. dominant_root is its largest real root
// (the spectral radius). When the counts vanish on alternating k the period
// is 2 and step_factor = dominant_root^2 is the growth per two steps;
// otherwise period is 1 and step_factor = dominant_root. prefactor_estimate
// is typed_count(w,c,k) / dominant_root^k evaluated at k = prefactor_k, the
// largest k <= 41 with a nonzero count.
struct GrowthConstants {
    std::vector<BigInt> char_poly;
    double dominant_root = 0.0;
    int period = 1;
    double step_factor = 0.0;
    double prefactor_estimate = 0.0;
    int prefactor_k = 0;
};

GrowthConstants growth_constants(int w, int c);

// Characteristic polynomial of an integer matrix, exactly (coefficient i for
// x^i, monic).
std::vector<BigInt> characteristic_polynomial(const BigMatrix& m);

// Quotient p / d when d divides p exactly over the integers, else nothing.
std::optional<std::vector<BigInt>> poly_divide_exact(const std::vector<BigInt>& p,
                                                     const std::vector<BigInt>& d);

}  // namespace cubic
