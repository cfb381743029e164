#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descent/descent_set.hpp"

namespace descent {

/// A bijection of [n] in one-line form. Values and positions are 1-based.
class Permutation {
public:
    Permutation() = default;
    /// Validates that `images` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    std::span<const int> one_line() const { return images_; }

    Permutation inverse() const;
    /// (this * other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Weakly decreasing cycle lengths.
struct CycleType {
    std::vector<int> parts;
    friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> enumerate_permutations(int n);

DescentSet des(const Permutation& p);
/// Cellini's cyclic descent set, reading position n+1 as position 1.
DescentSet cellini_cdes(const Permutation& p);
/// [p1..pn] -> [pn, p1, .., p(n-1)], the rotation paired with Cellini's map.
Permutation cellini_rotate(const Permutation& p);

std::vector<int> fixed_points(const Permutation& p);
CycleType cycle_type(const Permutation& p);
bool is_involution(const Permutation& p);

/// w0 p w0 with w0(i) = n+1-i.
Permutation conjugate_w0(const Permutation& p);

/// Order-isomorphic permutation of [len(word)]. Throws on repeated letters.
Permutation standardize(std::span<const int> word);

/// All interleavings of two words over disjoint letter sets, relabelled to
/// [|a|+|b|] by order. Ordered lexicographically by the positions occupied
/// by `a`.
std::vector<Permutation> shuffles(std::span<const int> a, std::span<const int> b);

// Codecs. Cycle notation: "(1,6)(3,4)(5,7)", fixed points optional.
// One-line notation: "[6,2,4,3,7,1,5,8]".
Permutation parse_cycles(std::string_view text, int n);
std::string format_cycles(const Permutation& p);
Permutation parse_one_line(std::string_view text);
std::string format_one_line(const Permutation& p);

}  // namespace descent
