#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "descent/descent_set.hpp"
#include "descent/perm.hpp"
#include "descent/tableau.hpp"

namespace descent {

/// Cap on the number of witness lines reported by a failed comparison.
inline constexpr std::size_t kWitnessCap = 20;

/// One summand q^a t^b F_{n,D}.
struct QSymTerm {
    int a = 0;
    int b = 0;
    DescentSet d;

    friend bool operator==(const QSymTerm&, const QSymTerm&) = default;
    friend auto operator<=>(const QSymTerm&, const QSymTerm&) = default;
};

std::string to_string(const QSymTerm& term);

/// A sum of fundamental quasisymmetric functions weighted by q^a t^b, kept as
/// a multiset of terms.
class FormalQSym {
public:
    explicit FormalQSym(int n = 0) : n_(n) {}

    int n() const { return n_; }
    /// Throws if `d` is not a linear subset of [n-1] or an exponent is negative.
    void add(int a, int b, const DescentSet& d, long count = 1);
    const std::map<QSymTerm, long>& terms() const { return terms_; }
    long total() const;

    friend bool operator==(const FormalQSym&, const FormalQSym&) = default;

private:
    int n_;
    std::map<QSymTerm, long> terms_;
};

/// Multiset difference lines "+c x" (only in lhs) / "-c x" (only in rhs),
/// at most kWitnessCap of them. Empty iff the multisets agree.
template <class Key, class Fmt>
std::vector<std::string> multiset_diff(const std::map<Key, long>& lhs, const std::map<Key, long>& rhs, Fmt fmt) {
    std::vector<std::string> out;
    auto emit = [&](char sign, long count, const Key& key) {
        if (out.size() < kWitnessCap) out.push_back(sign + std::to_string(count) + " " + fmt(key));
    };
    for (const auto& [key, count] : lhs) {
        auto it = rhs.find(key);
        const long other = it == rhs.end() ? 0 : it->second;
        if (count > other) emit('+', count - other, key);
    }
    for (const auto& [key, count] : rhs) {
        auto it = lhs.find(key);
        const long other = it == lhs.end() ? 0 : it->second;
        if (count > other) emit('-', count - other, key);
    }
    return out;
}

std::vector<std::string> diff(const FormalQSym& lhs, const FormalQSym& rhs);

/// F_{n,D} in `num_vars` variables: the multiset of exponent vectors of the
/// chains i_1 <= ... <= i_n with i_j < i_{j+1} for j in D.
std::map<std::vector<int>, long> fundamental_eval(int n, const DescentSet& d, int num_vars);
/// Termwise evaluation, keyed by (a, b, exponent vector).
std::map<std::tuple<int, int, std::vector<int>>, long> evaluate(const FormalQSym& f, int num_vars);

/// {Des(T) : T in SYT(shape)}; the F-expansion of the Schur function.
std::map<DescentSet, long> schur_descent_multiset(const Shape& shape);

/// {(um, cr, MDes)} over all matchings on [n].
FormalQSym lhs_main0(int n);
/// {(oc(shape), floor(height/2), Des(T))} over all SYT of size n.
FormalQSym rhs_main0(int n);

/// Outcome of one identity check, as reported by the CLI.
struct VerifyResult {
    std::string identity;
    int n = -1;
    int k = -1;
    int j = -1;
    bool ok = true;
    std::vector<std::string> witness_diff;
    double elapsed_ms = 0.0;
    std::map<std::string, long> counts;
    /// Extra key/value facts (e.g. Escherian classification).
    std::map<std::string, std::string> extra;
};

VerifyResult verify_main0(int n);
/// Des/MDes symmetry on M_{n2,0}, with the (cr, ne) refinement.
VerifyResult verify_lemma_main1(int n2);
VerifyResult verify_main11(int n, int k);
VerifyResult verify_main111(int n, int k);

/// Permutations of cycle type mu + nu whose letters on some m-subset U form a
/// union of cycles order-isomorphic to pi, with sigma on the complement.
/// `pi` acts on [m], `sigma` on [n] (read as m+1..m+n); their cycle types
/// must share no part. Listed by U in lexicographic order.
std::vector<Permutation> gessel_class(const Permutation& pi, const Permutation& sigma);
/// Des multiset of gessel_class against that of pi's word shuffled with
/// sigma's word shifted by m.
VerifyResult verify_gessel(const Permutation& pi, const Permutation& sigma);
/// verify_gessel over every pair with m, n >= 1, m + n <= max_total and
/// cycle types sharing no part.
VerifyResult verify_gessel_all(int max_total);

/// Des(iota(m)) = MDes(m) and (cr, ne) swapped under iota on M_{n2,0}.
VerifyResult verify_chen(int n2);
/// Sundaram's map is a bijection between M_{n2,0} and oscillating tableaux
/// of length n2 (enumerated independently).
VerifyResult verify_sundaram_roundtrip(int n2);
/// Kim's descent set of s(m) equals Des(m) on M_{n2,0}.
VerifyResult verify_kim(int n2);
/// s(w0 m w0) is s(m) reversed on M_{n2,0}.
VerifyResult verify_roby(int n2);

}  // namespace descent
