#pragma once

#include <utility>
#include <vector>

#include "descent/perm.hpp"
#include "descent/tableau.hpp"

namespace descent {

/// A word in I_{n-k,0} shuffled with [n-k+1..n]: the k largest letters
/// appear in increasing order, and the remaining letters are order-isomorphic
/// to a fixed-point-free involution. Validated on construction.
class ShuffleElement {
public:
    ShuffleElement(Permutation word, int k);

    const Permutation& word() const { return word_; }
    int n() const { return word_.size(); }
    int k() const { return k_; }
    /// Positions holding the letters n-k+1..n, ascending.
    std::vector<int> big_positions() const;
    /// The word with the big letters deleted (already a permutation of [n-k]).
    Permutation small_involution() const;

    friend bool operator==(const ShuffleElement&, const ShuffleElement&) = default;

private:
    Permutation word_;
    int k_ = 0;
};

struct Restriction {
    std::vector<int> fixed;  // Fix(p), ascending
    Permutation sigma;       // standardised fixed-point-free part
};

Restriction res(const Permutation& involution);
/// Puts n-k+1..n at the positions `fixed` and sigma's one-line word elsewhere.
ShuffleElement emb(const std::vector<int>& fixed, const Permutation& sigma);
/// Inverse of res: relabels sigma onto the complement of `fixed`.
Permutation unrestrict(const std::vector<int>& fixed, const Permutation& sigma);

/// emb o (id, chen_iota) o res.
ShuffleElement phi(const Permutation& involution);
Permutation phi_inverse(const ShuffleElement& t);

/// RS preimage of (Q_t, Q_t): an involution with k fixed points.
Permutation q_map(const ShuffleElement& t);
ShuffleElement q_map_inverse(const Permutation& involution);

/// q o phi: I_{n,k} -> I_{n,k}, taking MDes to Des and cr to ne.
Permutation iota_hat(const Permutation& involution);
Permutation iota_hat_inverse(const Permutation& involution);

/// Q o iota_hat: I_{n,k} -> SYT_{n,k}.
Tableau h_map(const Permutation& involution);
Permutation h_map_inverse(const Tableau& t);

/// (cr, ne) of the small-letter involution of t.
std::pair<int, int> shuffle_cr_ne(const ShuffleElement& t);

/// Chen et al.'s involution extended to involutions with fixed points: the
/// fixed points stay put and the rest is transformed as a perfect matching.
Permutation chen_iota_partial(const Permutation& involution);

}  // namespace descent
