#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent/descent_set.hpp"
#include "descent/perm.hpp"
#include "descent/tableau.hpp"

namespace descent {

// Cyclic descent extensions transported from cMDes on matchings:
//   cDes = cMDes o iota_hat^{-1},   p = iota_hat o r o iota_hat^{-1}
// on involutions, and the same through h = Q o iota_hat on tableaux.
DescentSet cdes_involution(const Permutation& involution);
Permutation p_map_involution(const Permutation& involution);
/// `expected_k` >= 0 additionally checks the odd-column count.
DescentSet cdes_syt(const Tableau& t, int expected_k = -1);
Tableau p_map_syt(const Tableau& t, int expected_k = -1);

enum class Escher { non_escherian, escherian };
/// Escherian exactly when k = n, or k = 0 and j = n/2.
Escher classify_escherian(int n, int k, int j);
const char* to_string(Escher e);

/// Result of checking the three cyclic-extension axioms on a finite set.
struct CdesReport {
    std::string set_id;
    int n = 0;
    std::size_t size = 0;
    bool extension_ok = true;
    bool equivariance_ok = true;
    bool non_escher_ok = true;
    std::vector<std::string> escher_witnesses;
    /// Elements breaking extension or equivariance (capped).
    std::vector<std::string> failures;
    /// Sorted orbit sizes of p.
    std::vector<int> orbit_sizes;
};

/// Orbits of a bijection `p` of `ground`, each listed from its first element
/// in ground order. Throws if `p` is not a bijection of `ground`.
template <class T, class PFn>
std::vector<std::vector<T>> orbits(const std::vector<T>& ground, PFn p) {
    std::map<T, std::size_t> index;
    for (std::size_t i = 0; i < ground.size(); ++i) index.emplace(ground[i], i);
    if (index.size() != ground.size()) throw std::invalid_argument("orbits: ground set has duplicates");
    std::vector<std::size_t> next(ground.size());
    std::vector<char> hit(ground.size(), 0);
    for (std::size_t i = 0; i < ground.size(); ++i) {
        auto it = index.find(p(ground[i]));
        if (it == index.end()) throw std::invalid_argument("orbits: map leaves the ground set");
        if (hit[it->second]) throw std::invalid_argument("orbits: map is not injective");
        hit[it->second] = 1;
        next[i] = it->second;
    }
    std::vector<std::vector<T>> out;
    std::vector<char> seen(ground.size(), 0);
    for (std::size_t i = 0; i < ground.size(); ++i) {
        if (seen[i]) continue;
        std::vector<T> orbit;
        for (std::size_t j = i; !seen[j]; j = next[j]) {
            seen[j] = 1;
            orbit.push_back(ground[j]);
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

/// Checks extension, equivariance and non-Escher for (cdes, p) extending
/// `des` on `ground`, and records the orbit sizes of p.
template <class T, class DesFn, class CdesFn, class PFn, class FmtFn>
CdesReport verify_cdes(std::string set_id, int n, const std::vector<T>& ground, DesFn des_fn, CdesFn cdes_fn,
                       PFn p_fn, FmtFn fmt) {
    constexpr std::size_t kCap = 20;
    CdesReport report;
    report.set_id = std::move(set_id);
    report.n = n;
    report.size = ground.size();
    for (const auto& orbit : orbits(ground, p_fn)) report.orbit_sizes.push_back(static_cast<int>(orbit.size()));
    std::sort(report.orbit_sizes.begin(), report.orbit_sizes.end());

    for (const T& x : ground) {
        const DescentSet c = cdes_fn(x);
        if (c.linear_part() != des_fn(x)) {
            report.extension_ok = false;
            if (report.failures.size() < kCap) report.failures.push_back("extension: " + fmt(x));
        }
        if (cdes_fn(p_fn(x)) != c.rotated()) {
            report.equivariance_ok = false;
            if (report.failures.size() < kCap) report.failures.push_back("equivariance: " + fmt(x));
        }
        if (c.empty() || c.full()) {
            report.non_escher_ok = false;
            if (report.escher_witnesses.size() < kCap) {
                report.escher_witnesses.push_back(fmt(x) + " cDes=" + c.to_string());
            }
        }
    }
    return report;
}

/// verify_cdes on I_{n,k,j} (all of I_{n,k} when j < 0).
CdesReport verify_cdes_involutions(int n, int k, int j = -1);
/// verify_cdes on SYT_{n,k,j} (all of SYT_{n,k} when j < 0).
CdesReport verify_cdes_syt(int n, int k, int j = -1);
/// Cellini's (cDes, rotation) on all of S_n.
CdesReport verify_cdes_cellini(int n);

/// The hand-built extension on the transpositions of S_4, with its map p.
struct TranspositionFixture {
    std::vector<Permutation> elements;
    std::map<Permutation, DescentSet> cdes;
    std::map<Permutation, Permutation> p;
};
TranspositionFixture s4_transposition_fixture();
CdesReport verify_cdes_s4_transpositions();

}  // namespace descent
