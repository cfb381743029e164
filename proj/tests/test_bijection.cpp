#include <doctest.h>

#include <stdexcept>

#include <set>

#include "descent/bijection.hpp"
#include "descent/matching.hpp"
#include "descent/oscillating.hpp"

using namespace descent;

namespace {

Permutation W(const char* text) { return parse_one_line(text); }
Permutation C(const char* text, int n) { return parse_cycles(text, n); }

std::vector<ShuffleElement> all_shuffle_elements(int n, int k) {
    std::vector<ShuffleElement> out;
    std::vector<int> big;
    for (int x = n - k + 1; x <= n; ++x) big.push_back(x);
    for (const auto& sigma : enumerate_involutions(n - k, 0)) {
        for (const auto& tau : shuffles(sigma.one_line(), big)) out.emplace_back(tau, k);
    }
    return out;
}

}  // namespace

TEST_CASE("shuffle elements are validated") {
    CHECK_NOTHROW(ShuffleElement(W("[4,5,3,2,6,1]"), 2));
    CHECK_THROWS_AS(ShuffleElement(W("[4,6,3,2,5,1]"), 2), std::invalid_argument);
    CHECK_THROWS_AS(ShuffleElement(W("[1,5,3,2,6,4]"), 2), std::invalid_argument);
    CHECK_THROWS_AS(ShuffleElement(W("[2,1,3]"), 2), std::invalid_argument);
    const ShuffleElement t(W("[4,5,3,2,6,1]"), 2);
    CHECK(t.big_positions() == std::vector<int>{2, 5});
    CHECK(t.small_involution() == W("[4,3,2,1]"));
}

TEST_CASE("restriction and embedding") {
    const auto r = res(W("[4,2,6,1,5,3]"));
    CHECK(r.fixed == std::vector<int>{2, 5});
    CHECK(r.sigma == C("(1,3)(2,4)", 4));
    const auto id = res(Permutation::identity(3));
    CHECK(id.fixed == std::vector<int>{1, 2, 3});
    CHECK(id.sigma.size() == 0);
    const auto swap = res(W("[2,1]"));
    CHECK(swap.fixed.empty());
    CHECK(swap.sigma == W("[2,1]"));
    CHECK_THROWS_AS(res(W("[2,3,1]")), std::invalid_argument);

    CHECK(emb({2, 5}, C("(1,4)(2,3)", 4)).word() == W("[4,5,3,2,6,1]"));
    CHECK(emb({}, C("(1,3)(2,4)", 4)).word() == C("(1,3)(2,4)", 4));
    CHECK(emb({1, 2, 3}, Permutation::identity(0)).word() == Permutation::identity(3));
    CHECK_THROWS_AS(emb({2, 9}, C("(1,4)(2,3)", 4)), std::invalid_argument);
    CHECK(unrestrict(r.fixed, r.sigma) == W("[4,2,6,1,5,3]"));
}

TEST_CASE("phi and q on the worked example") {
    const Permutation pi = W("[4,2,6,1,5,3]");
    const ShuffleElement t = phi(pi);
    CHECK(t.word() == W("[4,5,3,2,6,1]"));
    CHECK(phi_inverse(t) == pi);
    CHECK(q_map(t) == W("[1,6,4,3,5,2]"));
    CHECK(q_map_inverse(W("[1,6,4,3,5,2]")) == t);
    CHECK(iota_hat(pi) == W("[1,6,4,3,5,2]"));
    CHECK(iota_hat_inverse(W("[1,6,4,3,5,2]")) == pi);
    CHECK(mdes(from_involution(pi)) == DescentSet::linear(6, {2, 3, 5}));
    CHECK(des(iota_hat(pi)) == DescentSet::linear(6, {2, 3, 5}));
    CHECK(crossing_number(pi) == 2);
    CHECK(nesting_number(iota_hat(pi)) == 2);

    const Permutation fpf = C("(1,5)(2,4)(3,8)(6,7)", 8);
    CHECK(phi(fpf).word() == chen_iota(fpf));
    CHECK(phi(Permutation::identity(4)).word() == Permutation::identity(4));
    CHECK(iota_hat(Permutation::identity(5)) == Permutation::identity(5));

    for (const auto& sigma : enumerate_involutions(6, 0)) CHECK(q_map(ShuffleElement(sigma, 0)) == sigma);

    const ShuffleElement tau(W("[3,5,1,7,6,8,2,4]"), 2);
    const Tableau q = parse_tableau("1,2,4,6/3,5,8/7");
    CHECK(q_map(tau) == rs_inverse(q, q));
    CHECK(rs_pair(q_map(tau)).q == q);
}

TEST_CASE("h map") {
    const Permutation pi = W("[4,2,6,1,5,3]");
    const Tableau h = h_map(pi);
    CHECK(h == rs_pair(W("[1,6,4,3,5,2]")).q);
    CHECK(h.shape().odd_cols() == 2);
    CHECK(h_map_inverse(h) == pi);
    CHECK(h_map(Permutation::identity(4)) == parse_tableau("1,2,3,4"));
    std::set<Tableau> images;
    for (const auto& p : enumerate_involutions(6, 2)) images.insert(h_map(p));
    CHECK(images.size() == 45);
    CHECK_THROWS_AS(h_map_inverse(parse_tableau("1,3")), std::invalid_argument);
}

TEST_CASE("crossing and nesting of shuffle elements") {
    const auto [cr, ne] = shuffle_cr_ne(ShuffleElement(W("[3,4,5,1,6,2]"), 2));
    CHECK(cr == 2);
    CHECK(ne == 1);
    const Permutation m = C("(1,5)(2,4)(3,8)(6,7)", 8);
    CHECK(shuffle_cr_ne(ShuffleElement(m, 0)) == std::pair{crossing_number(m), nesting_number(m)});
    CHECK(shuffle_cr_ne(ShuffleElement(Permutation::identity(4), 4)) == std::pair{0, 0});
}

TEST_CASE("phi transports statistics and is a bijection") {
    for (int n = 0; n <= 8; ++n) {
        for (int k = n % 2; k <= n; k += 2) {
            std::set<Permutation> words;
            for (const auto& p : enumerate_involutions(n, k)) {
                const ShuffleElement t = phi(p);
                const auto [cr, ne] = shuffle_cr_ne(t);
                REQUIRE(des(t.word()) == mdes(from_involution(p)));
                REQUIRE(cr == nesting_number(p));
                REQUIRE(ne == crossing_number(p));
                REQUIRE(phi_inverse(t) == p);
                words.insert(t.word());
            }
            std::set<Permutation> all;
            for (const auto& t : all_shuffle_elements(n, k)) all.insert(t.word());
            REQUIRE(words == all);
        }
    }
}

TEST_CASE("q preserves descents and nesting but not crossings") {
    bool crossing_witness = false;
    for (int n = 0; n <= 8; ++n) {
        for (int k = n % 2; k <= n; k += 2) {
            for (const auto& t : all_shuffle_elements(n, k)) {
                const Permutation q = q_map(t);
                const auto [cr, ne] = shuffle_cr_ne(t);
                REQUIRE(is_involution(q));
                REQUIRE(static_cast<int>(fixed_points(q).size()) == k);
                REQUIRE(des(q) == des(t.word()));
                REQUIRE(nesting_number(q) == ne);
                REQUIRE(ne == rs_pair(t.word()).q.height() / 2);
                REQUIRE(q_map_inverse(q) == t);
                if (crossing_number(q) != cr) crossing_witness = true;
            }
        }
    }
    CHECK(crossing_witness);
}

TEST_CASE("iota hat transports MDes to Des and cr to ne") {
    for (int n = 0; n <= 8; ++n) {
        for (int k = n % 2; k <= n; k += 2) {
            std::set<Permutation> images;
            for (const auto& p : enumerate_involutions(n, k)) {
                const Permutation im = iota_hat(p);
                REQUIRE(static_cast<int>(fixed_points(im).size()) == k);
                REQUIRE(des(im) == mdes(from_involution(p)));
                REQUIRE(nesting_number(im) == crossing_number(p));
                REQUIRE(iota_hat_inverse(im) == p);
                images.insert(im);
            }
            REQUIRE(images.size() == enumerate_involutions(n, k).size());
        }
    }
}

TEST_CASE("Chen's involution does not transport descents once fixed points appear") {
    const Permutation pi = C("(1,4)(2,5)", 5);
    const Permutation sigma = chen_iota_partial(pi);
    CHECK(sigma == C("(1,5)(2,4)", 5));
    CHECK(chen_iota_partial(sigma) == pi);
    CHECK(des(pi) == DescentSet::linear(5, {2, 3}));
    CHECK(mdes(from_involution(sigma)) == DescentSet::linear(5, {3}));
    CHECK(des(pi) != mdes(from_involution(sigma)));
    CHECK(des(sigma) == DescentSet::linear(5, {1, 2, 3, 4}));
    CHECK(mdes(from_involution(pi)) == DescentSet::linear(5, {1, 3, 4}));
    CHECK(des(sigma) != mdes(from_involution(pi)));
    // iota hat repairs this instance.
    CHECK(des(iota_hat(pi)) == mdes(from_involution(pi)));
}
