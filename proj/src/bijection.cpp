#include "descent/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "descent/matching.hpp"
#include "descent/oscillating.hpp"

namespace descent {

namespace {

void require_involution(const Permutation& p, const char* who) {
    if (!is_involution(p)) throw std::invalid_argument(std::string(who) + ": not an involution");
}

std::vector<int> complement(const std::vector<int>& fixed, int n) {
    std::vector<char> in(n + 1, 0);
    for (int j : fixed) in[j] = 1;
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (!in[i]) out.push_back(i);
    }
    return out;
}

}  // namespace

ShuffleElement::ShuffleElement(Permutation word, int k) : word_(std::move(word)), k_(k) {
    const int n = word_.size();
    if (k < 0 || k > n || (n - k) % 2 != 0) throw std::invalid_argument("shuffle element: need n-k even");
    int last_big = 0;
    for (int i = 1; i <= n; ++i) {
        if (word_(i) > n - k) {
            if (word_(i) < last_big) throw std::invalid_argument("shuffle element: big letters not increasing");
            last_big = word_(i);
        }
    }
    const Permutation sigma = small_involution();
    if (!is_involution(sigma) || !fixed_points(sigma).empty()) {
        throw std::invalid_argument("shuffle element: small letters are not a fixed-point-free involution");
    }
}

std::vector<int> ShuffleElement::big_positions() const {
    std::vector<int> out;
    for (int i = 1; i <= n(); ++i) {
        if (word_(i) > n() - k_) out.push_back(i);
    }
    return out;
}

Permutation ShuffleElement::small_involution() const {
    std::vector<int> small;
    for (int i = 1; i <= n(); ++i) {
        if (word_(i) <= n() - k_) small.push_back(word_(i));
    }
    return Permutation(std::move(small));
}

Restriction res(const Permutation& involution) {
    require_involution(involution, "res");
    Restriction r{fixed_points(involution), {}};
    std::vector<int> word;
    for (int i : complement(r.fixed, involution.size())) word.push_back(involution(i));
    r.sigma = standardize(word);
    return r;
}

ShuffleElement emb(const std::vector<int>& fixed, const Permutation& sigma) {
    const int k = static_cast<int>(fixed.size());
    const int n = k + sigma.size();
    if (!std::is_sorted(fixed.begin(), fixed.end()) ||
        std::adjacent_find(fixed.begin(), fixed.end()) != fixed.end() ||
        (!fixed.empty() && (fixed.front() < 1 || fixed.back() > n))) {
        throw std::invalid_argument("emb: positions must be distinct, ascending and inside [n]");
    }
    std::vector<int> word(n, 0);
    int big = n - k;
    for (int j : fixed) word[j - 1] = ++big;
    int next = 1;
    for (int& w : word) {
        if (w == 0) w = sigma(next++);
    }
    return ShuffleElement(Permutation(std::move(word)), k);
}

Permutation unrestrict(const std::vector<int>& fixed, const Permutation& sigma) {
    const int n = static_cast<int>(fixed.size()) + sigma.size();
    const auto rest = complement(fixed, n);
    std::vector<int> images(n);
    for (int j : fixed) images[j - 1] = j;
    for (int a = 1; a <= sigma.size(); ++a) images[rest[a - 1] - 1] = rest[sigma(a) - 1];
    return Permutation(std::move(images));
}

ShuffleElement phi(const Permutation& involution) {
    const Restriction r = res(involution);
    return emb(r.fixed, chen_iota(r.sigma));
}

Permutation phi_inverse(const ShuffleElement& t) {
    return unrestrict(t.big_positions(), chen_iota(t.small_involution()));
}

Permutation q_map(const ShuffleElement& t) {
    const Tableau q = rs_pair(t.word()).q;
    return rs_inverse(q, q);
}

ShuffleElement q_map_inverse(const Permutation& involution) {
    require_involution(involution, "q_map_inverse");
    const int k = static_cast<int>(fixed_points(involution).size());
    return ShuffleElement(q_inverse_shuffle(rs_pair(involution).q, k), k);
}

Permutation iota_hat(const Permutation& involution) { return q_map(phi(involution)); }

Permutation iota_hat_inverse(const Permutation& involution) { return phi_inverse(q_map_inverse(involution)); }

Tableau h_map(const Permutation& involution) { return rs_pair(iota_hat(involution)).q; }

Permutation h_map_inverse(const Tableau& t) {
    if (!t.is_standard()) throw std::invalid_argument("h_map_inverse: tableau must be standard");
    return iota_hat_inverse(rs_inverse(t, t));
}

std::pair<int, int> shuffle_cr_ne(const ShuffleElement& t) {
    const Matching m = from_involution(t.small_involution());
    return {crossing_number(m), nesting_number(m)};
}

Permutation chen_iota_partial(const Permutation& involution) {
    const Restriction r = res(involution);
    return unrestrict(r.fixed, chen_iota(r.sigma));
}

}  // namespace descent
