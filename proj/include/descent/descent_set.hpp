#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace descent {

/// A subset of [n-1] (linear) or [n] (cyclic), stored as a bitmask together
/// with its ambient size so the two flavours never compare equal by accident.
/// Bit i-1 holds member i. Supports n <= 63.
class DescentSet {
public:
    static constexpr int kMaxN = 63;

    DescentSet() = default;
    DescentSet(int n, bool cyclic);

    static DescentSet linear(int n, std::initializer_list<int> members = {});
    static DescentSet cyclic(int n, std::initializer_list<int> members = {});
    static DescentSet from_mask(int n, bool cyclic, std::uint64_t mask);

    int n() const { return n_; }
    bool is_cyclic() const { return cyclic_; }
    std::uint64_t mask() const { return mask_; }

    /// Largest admissible member: n-1 for linear sets, n for cyclic ones.
    int universe() const { return cyclic_ ? n_ : (n_ > 0 ? n_ - 1 : 0); }

    bool contains(int i) const;
    void insert(int i);
    int size() const;
    bool empty() const { return mask_ == 0; }
    /// True when the set equals its whole universe.
    bool full() const;

    std::vector<int> members() const;

    /// Intersection with [n-1], as a linear set.
    DescentSet linear_part() const;
    /// {i+1 mod n : i in D}, with representatives in [n]. Cyclic sets only.
    DescentSet rotated() const;

    /// "{1,3,5}"; the empty set prints as "{}".
    std::string to_string() const;

    friend bool operator==(const DescentSet&, const DescentSet&) = default;
    friend auto operator<=>(const DescentSet&, const DescentSet&) = default;

private:
    int n_ = 0;
    bool cyclic_ = false;
    std::uint64_t mask_ = 0;
};

}  // namespace descent
