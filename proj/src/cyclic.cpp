#include "descent/cyclic.hpp"

#include "descent/bijection.hpp"
#include "descent/matching.hpp"

namespace descent {

namespace {

void check_syt_k(const Tableau& t, int expected_k) {
    if (expected_k >= 0 && t.shape().odd_cols() != expected_k) {
        throw std::invalid_argument("tableau has " + std::to_string(t.shape().odd_cols()) +
                                    " odd columns, expected " + std::to_string(expected_k));
    }
}

std::string class_id(const char* family, int n, int k, int j) {
    std::string id = std::string(family) + "(n=" + std::to_string(n) + ",k=" + std::to_string(k);
    if (j >= 0) id += ",j=" + std::to_string(j);
    return id + ")";
}

}  // namespace

DescentSet cdes_involution(const Permutation& involution) {
    return cmdes(from_involution(iota_hat_inverse(involution)));
}

Permutation p_map_involution(const Permutation& involution) {
    const Matching m = from_involution(iota_hat_inverse(involution));
    return iota_hat(to_involution(rotate(m)));
}

DescentSet cdes_syt(const Tableau& t, int expected_k) {
    check_syt_k(t, expected_k);
    return cmdes(from_involution(h_map_inverse(t)));
}

Tableau p_map_syt(const Tableau& t, int expected_k) {
    check_syt_k(t, expected_k);
    const Matching m = from_involution(h_map_inverse(t));
    return h_map(to_involution(rotate(m)));
}

Escher classify_escherian(int n, int k, int j) {
    check_nkj(n, k, j);
    return (k == n || (k == 0 && 2 * j == n)) ? Escher::escherian : Escher::non_escherian;
}

const char* to_string(Escher e) { return e == Escher::escherian ? "escherian" : "non_escherian"; }

CdesReport verify_cdes_involutions(int n, int k, int j) {
    const auto ground = j < 0 ? enumerate_involutions(n, k) : enumerate_inkj(n, k, j);
    return verify_cdes(
        class_id("I", n, k, j), n, ground, [](const Permutation& p) { return des(p); }, cdes_involution,
        p_map_involution, format_cycles);
}

CdesReport verify_cdes_syt(int n, int k, int j) {
    const auto ground = j < 0 ? enumerate_syt_nk(n, k) : enumerate_syt_nkj(n, k, j);
    return verify_cdes(
        class_id("SYT", n, k, j), n, ground, [](const Tableau& t) { return des(t); },
        [](const Tableau& t) { return cdes_syt(t); }, [](const Tableau& t) { return p_map_syt(t); },
        format_tableau);
}

CdesReport verify_cdes_cellini(int n) {
    const auto ground = enumerate_permutations(n);
    return verify_cdes(
        "S(n=" + std::to_string(n) + ") Cellini", n, ground, [](const Permutation& p) { return des(p); },
        cellini_cdes, cellini_rotate, format_one_line);
}

TranspositionFixture s4_transposition_fixture() {
    TranspositionFixture f;
    auto P = [](std::initializer_list<int> w) { return Permutation(std::vector<int>(w)); };
    const Permutation t2134 = P({2, 1, 3, 4}), t3214 = P({3, 2, 1, 4}), t4231 = P({4, 2, 3, 1});
    const Permutation t1324 = P({1, 3, 2, 4}), t1432 = P({1, 4, 3, 2}), t1243 = P({1, 2, 4, 3});
    f.elements = {t2134, t3214, t4231, t1324, t1432, t1243};
    f.cdes = {
        {t2134, DescentSet::cyclic(4, {1, 4})}, {t3214, DescentSet::cyclic(4, {1, 2})},
        {t4231, DescentSet::cyclic(4, {1, 3})}, {t1324, DescentSet::cyclic(4, {2, 4})},
        {t1432, DescentSet::cyclic(4, {2, 3})}, {t1243, DescentSet::cyclic(4, {3, 4})},
    };
    f.p = {
        {t3214, t1432}, {t1432, t1243}, {t1243, t2134}, {t2134, t3214}, {t4231, t1324}, {t1324, t4231},
    };
    return f;
}

CdesReport verify_cdes_s4_transpositions() {
    const auto f = s4_transposition_fixture();
    return verify_cdes(
        "S4 transpositions (fixture)", 4, f.elements, [](const Permutation& p) { return des(p); },
        [&](const Permutation& p) { return f.cdes.at(p); }, [&](const Permutation& p) { return f.p.at(p); },
        format_one_line);
}

}  // namespace descent
