#include "descent/descent_set.hpp"

#include <bit>
#include <stdexcept>

namespace descent {

DescentSet::DescentSet(int n, bool cyclic) : n_(n), cyclic_(cyclic) {
    if (n < 0 || n > kMaxN) {
        throw std::invalid_argument("descent set: ambient size out of range: " + std::to_string(n));
    }
}

DescentSet DescentSet::linear(int n, std::initializer_list<int> members) {
    DescentSet d(n, false);
    for (int i : members) d.insert(i);
    return d;
}

DescentSet DescentSet::cyclic(int n, std::initializer_list<int> members) {
    DescentSet d(n, true);
    for (int i : members) d.insert(i);
    return d;
}

DescentSet DescentSet::from_mask(int n, bool cyclic, std::uint64_t mask) {
    DescentSet d(n, cyclic);
    const int u = d.universe();
    const std::uint64_t allowed = (1ULL << u) - 1;
    if ((mask & ~allowed) != 0) throw std::invalid_argument("descent set: mask exceeds universe");
    d.mask_ = mask;
    return d;
}

bool DescentSet::contains(int i) const {
    if (i < 1 || i > universe()) return false;
    return (mask_ >> (i - 1)) & 1ULL;
}

void DescentSet::insert(int i) {
    if (i < 1 || i > universe()) {
        throw std::out_of_range("descent set: member " + std::to_string(i) + " outside [" +
                                std::to_string(universe()) + "]");
    }
    mask_ |= 1ULL << (i - 1);
}

int DescentSet::size() const { return std::popcount(mask_); }

bool DescentSet::full() const {
    const int u = universe();
    return mask_ == ((1ULL << u) - 1);
}

std::vector<int> DescentSet::members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

DescentSet DescentSet::linear_part() const {
    DescentSet d(n_, false);
    const int u = d.universe();
    d.mask_ = mask_ & ((1ULL << u) - 1);
    return d;
}

DescentSet DescentSet::rotated() const {
    if (!cyclic_) throw std::logic_error("descent set: rotation needs a cyclic set");
    DescentSet d(n_, true);
    if (n_ == 0) return d;
    const bool top = contains(n_);
    d.mask_ = (mask_ << 1) & ((1ULL << n_) - 1);
    if (top) d.mask_ |= 1ULL;
    return d;
}

std::string DescentSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : members()) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

}  // namespace descent
