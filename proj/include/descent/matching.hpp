#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "descent/descent_set.hpp"
#include "descent/params.hpp"
#include "descent/perm.hpp"

namespace descent {

struct Arc {
    int left = 0;
    int right = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A partial matching on the points 1..n.
class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : partner_(n, 0) {}
    /// Arcs may be given in either orientation; they must be disjoint.
    Matching(int n, const std::vector<std::pair<int, int>>& arcs);

    int n() const { return static_cast<int>(partner_.size()); }
    /// Partner of point i, or 0 when i is unmatched.
    int partner(int i) const { return partner_[i - 1]; }
    bool matched(int i) const { return partner_[i - 1] != 0; }
    /// Arcs sorted by left endpoint.
    std::vector<Arc> arcs() const;
    int unmatched() const;
    bool is_perfect() const { return unmatched() == 0; }

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching&, const Matching&) = default;

private:
    std::vector<int> partner_;
};

Permutation to_involution(const Matching& m);
/// Throws unless p is an involution; fixed points become unmatched points.
Matching from_involution(const Permutation& p);

DescentSet des(const Matching& m);
/// Geometric descents: adjacent arc, crossing arcs, or unmatched-then-matched.
DescentSet mdes(const Matching& m);
/// Cyclic geometric descents, with indices mod n and chords on a circle.
DescentSet cmdes(const Matching& m);
/// Relabels every point i as i+1 (mod n).
Matching rotate(const Matching& m);

/// Largest set of mutually crossing arcs (0 for no arcs).
int crossing_number(const Matching& m);
/// Largest set of mutually nested arcs (0 for no arcs).
int nesting_number(const Matching& m);
int crossing_number(const Permutation& involution);
int nesting_number(const Permutation& involution);

/// Exhaustive subset scans, kept separate from the production algorithm.
/// Throw when the matching has more than 16 arcs.
int crossing_number_oracle(const Matching& m);
int nesting_number_oracle(const Matching& m);

struct StatTuple {
    DescentSet des;
    DescentSet mdes;
    DescentSet cmdes;
    int cr = 0;
    int ne = 0;
    int um = 0;
};
StatTuple stats(const Matching& m);

/// M_{n,k} in canonical order: the smallest free point is first left
/// unmatched (when budget remains), then paired with each later free point.
std::vector<Matching> enumerate_matchings(int n, int k);
/// All matchings on n points, k ascending.
std::vector<Matching> enumerate_matchings(int n);
/// I_{n,k} as involutions, same order as enumerate_matchings.
std::vector<Permutation> enumerate_involutions(int n, int k);
/// I_{n,k,j}: the involutions of I_{n,k} with nesting number j.
std::vector<Permutation> enumerate_inkj(int n, int k, int j);

// Codec "1-6,3-4,5-7" with n supplied separately; "-" or "" is the empty matching.
Matching parse_matching(std::string_view text, int n);
std::string format_matching(const Matching& m);

}  // namespace descent
