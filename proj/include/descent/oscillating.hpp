#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descent/descent_set.hpp"
#include "descent/matching.hpp"
#include "descent/perm.hpp"
#include "descent/tableau.hpp"

namespace descent {

/// Outcome of checking a shape sequence against the oscillating-tableau rules.
struct ValidationReport {
    bool ok = true;
    int step = -1;  // index of the offending shape, -1 when ok
    std::string message;
};

/// Checks: at least one shape, both ends empty, and consecutive shapes
/// differ by exactly one box.
ValidationReport validate(std::span<const Shape> shapes);

/// A closed walk of length 2n in Young's lattice from the empty shape back
/// to itself, stored as its 2n+1 shapes.
class OscillatingTableau {
public:
    OscillatingTableau() : shapes_(1) {}
    /// Throws with the validation message when `shapes` is not a valid walk.
    explicit OscillatingTableau(std::vector<Shape> shapes);

    const std::vector<Shape>& shapes() const { return shapes_; }
    /// Length of the walk (2n).
    int size() const { return static_cast<int>(shapes_.size()) - 1; }

    OscillatingTableau reversed() const;

    friend bool operator==(const OscillatingTableau&, const OscillatingTableau&) = default;
    friend auto operator<=>(const OscillatingTableau&, const OscillatingTableau&) = default;

private:
    std::vector<Shape> shapes_;
};

/// All oscillating tableaux of length `length` (even), generated as walks:
/// at each step adds (by row) are tried before removals (by row).
std::vector<OscillatingTableau> enumerate_oscillating(int length);

/// Sundaram's bijection on fixed-point-free involutions; also returns the
/// labelled tableaux when `trace` is given.
OscillatingTableau sundaram(const Permutation& involution, std::vector<Tableau>* trace = nullptr);
Permutation sundaram_inverse(const OscillatingTableau& o);

/// Pointwise transpose of every shape.
OscillatingTableau transpose(const OscillatingTableau& o);

/// Chen et al.'s involution s^{-1} o tr o s on perfect matchings.
Permutation chen_iota(const Permutation& fixed_point_free);
Matching chen_iota(const Matching& perfect);

/// Descent set read off the add/delete pattern of the walk.
DescentSet kim_des(const OscillatingTableau& o);

// Codec: shapes joined by ';', each a comma list or '-' for empty.
OscillatingTableau parse_oscillating(std::string_view text);
std::string format_oscillating(const OscillatingTableau& o);

}  // namespace descent
