#include <doctest.h>

#include <stdexcept>

#include <set>

#include "descent/perm.hpp"
#include "oracles.hpp"

using namespace descent;

namespace {

Permutation P(std::initializer_list<int> w) { return Permutation(std::vector<int>(w)); }

std::vector<int> word(const Permutation& p) { return {p.one_line().begin(), p.one_line().end()}; }

}  // namespace

TEST_CASE("permutation construction validates images") {
    CHECK_THROWS_AS(P({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(P({1, 3}), std::invalid_argument);
    CHECK(Permutation::identity(3) == P({1, 2, 3}));
    CHECK(P({2, 3, 1}).inverse() == P({3, 1, 2}));
    CHECK(P({2, 3, 1})(1) == 2);
}

TEST_CASE("des") {
    CHECK(des(P({6, 2, 4, 3, 7, 1, 5, 8})) == DescentSet::linear(8, {1, 3, 5}));
    CHECK(des(Permutation::identity(5)).empty());
    CHECK(des(P({5, 4, 8, 2, 1, 7, 6, 3})) == DescentSet::linear(8, {1, 3, 4, 6, 7}));
    for (int n = 1; n <= 6; ++n) {
        for (const auto& w : oracle::all_words(n)) CHECK(des(Permutation(w)) == oracle::as_linear(n, oracle::des(w)));
    }
}

TEST_CASE("cellini cyclic descents") {
    CHECK(cellini_cdes(P({3, 2, 1, 4})) == DescentSet::cyclic(4, {1, 2, 4}));
    CHECK(cellini_cdes(P({2, 1, 3, 4})) == DescentSet::cyclic(4, {1, 4}));
    CHECK(cellini_cdes(Permutation::identity(5)) == DescentSet::cyclic(5, {5}));
    CHECK(cellini_rotate(P({1, 2, 3, 4})) == P({4, 1, 2, 3}));

    for (int n = 1; n <= 7; ++n) {
        for (const auto& p : enumerate_permutations(n)) {
            const DescentSet c = cellini_cdes(p);
            REQUIRE(c.linear_part() == des(p));
            REQUIRE(cellini_cdes(cellini_rotate(p)) == c.rotated());
        }
    }
}

TEST_CASE("fixed points, cycle type, involutions") {
    CHECK(fixed_points(P({4, 2, 6, 1, 5, 3})) == std::vector<int>{2, 5});
    CHECK(fixed_points(Permutation::identity(3)) == std::vector<int>{1, 2, 3});
    CHECK(fixed_points(P({2, 1})).empty());

    CHECK(cycle_type(P({3, 1, 2, 4})).parts == std::vector<int>{3, 1});
    CHECK(cycle_type(P({2, 1, 4, 3})).parts == std::vector<int>{2, 2});
    CHECK(is_involution(P({2, 1, 4, 3})));
    CHECK(cycle_type(P({4, 2, 6, 1, 5, 3})).parts == std::vector<int>{2, 2, 1, 1});
    CHECK(is_involution(P({4, 2, 6, 1, 5, 3})));
    CHECK_FALSE(is_involution(P({2, 3, 1})));

    for (int n = 1; n <= 6; ++n) {
        for (const auto& w : oracle::all_words(n)) {
            const Permutation p(w);
            CHECK(cycle_type(p).parts == oracle::cycle_lengths(w));
            CHECK(is_involution(p) == oracle::is_involution(w));
        }
    }
}

TEST_CASE("w0 conjugation") {
    CHECK(conjugate_w0(P({2, 1, 4, 3})) == P({2, 1, 4, 3}));
    CHECK(conjugate_w0(Permutation::identity(4)) == Permutation::identity(4));
    CHECK(conjugate_w0(P({3, 4, 1, 2})) == P({3, 4, 1, 2}));
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : enumerate_permutations(n)) {
            const Permutation c = conjugate_w0(p);
            REQUIRE(conjugate_w0(c) == p);
            for (int i = 1; i <= n; ++i) REQUIRE(c(i) == n + 1 - p(n + 1 - i));
        }
    }
}

TEST_CASE("shuffles") {
    const std::vector<int> a12{1, 2}, a21{2, 1}, b43{4, 3};
    std::set<std::vector<int>> got;
    for (const auto& s : shuffles(a12, b43)) got.insert(word(s));
    for (const auto& s : shuffles(a21, b43)) got.insert(word(s));
    const std::set<std::vector<int>> expected{{1, 2, 4, 3}, {1, 4, 2, 3}, {1, 4, 3, 2}, {4, 1, 2, 3},
                                              {4, 1, 3, 2}, {4, 3, 1, 2}, {2, 1, 4, 3}, {2, 4, 1, 3},
                                              {2, 4, 3, 1}, {4, 2, 1, 3}, {4, 2, 3, 1}, {4, 3, 2, 1}};
    CHECK(got == expected);

    const std::vector<int> a312{3, 1, 2}, b4{4};
    const auto s = shuffles(a312, b4);
    REQUIRE(s.size() == 4);
    CHECK(s[0] == P({3, 1, 2, 4}));
    CHECK(s[1] == P({3, 1, 4, 2}));
    CHECK(s[2] == P({3, 4, 1, 2}));
    CHECK(s[3] == P({4, 3, 1, 2}));

    const std::vector<int> one{1}, two{2};
    const auto t = shuffles(one, two);
    REQUIRE(t.size() == 2);
    CHECK(t[0] == P({1, 2}));
    CHECK(t[1] == P({2, 1}));

    const std::vector<int> clash{1, 2};
    CHECK_THROWS_AS(shuffles(clash, one), std::invalid_argument);

    for (int total = 1; total <= 10; ++total) {
        for (int m = 0; m <= total; ++m) {
            std::vector<int> a, b;
            for (int i = 1; i <= m; ++i) a.push_back(i);
            for (int i = m + 1; i <= total; ++i) b.push_back(i);
            const auto all = shuffles(a, b);
            std::set<Permutation> distinct(all.begin(), all.end());
            REQUIRE(static_cast<long>(all.size()) == oracle::binomial(total, m));
            REQUIRE(distinct.size() == all.size());
        }
    }
}

TEST_CASE("standardize") {
    const std::vector<int> w1{4, 6, 1, 3}, w2{9, 2, 7}, rep{1, 1};
    CHECK(standardize(w1) == P({3, 4, 1, 2}));
    CHECK(standardize(w2) == P({3, 1, 2}));
    CHECK_THROWS_AS(standardize(rep), std::invalid_argument);
    for (const auto& p : enumerate_permutations(5)) CHECK(standardize(p.one_line()) == p);
}

TEST_CASE("cycle and one-line codecs") {
    CHECK(parse_cycles("(1,6)(3,4)(5,7)", 8) == P({6, 2, 4, 3, 7, 1, 5, 8}));
    CHECK(parse_cycles("", 3) == Permutation::identity(3));
    CHECK(parse_cycles("()", 3) == Permutation::identity(3));
    CHECK(parse_cycles(" ( 1 , 2 ) (3)", 3) == P({2, 1, 3}));
    CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1,4)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1,2", 3), std::invalid_argument);
    CHECK(format_cycles(P({6, 2, 4, 3, 7, 1, 5, 8})) == "(1,6)(3,4)(5,7)");
    CHECK(format_cycles(Permutation::identity(2)) == "()");

    CHECK(parse_one_line("[3,1,2]") == P({3, 1, 2}));
    CHECK(format_one_line(P({3, 1, 2})) == "[3,1,2]");
    CHECK_THROWS_AS(parse_one_line("[3,1,3]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_one_line("3,1,2"), std::invalid_argument);

    for (int n = 1; n <= 5; ++n) {
        for (const auto& p : enumerate_permutations(n)) {
            REQUIRE(parse_one_line(format_one_line(p)) == p);
            REQUIRE(parse_cycles(format_cycles(p), n) == p);
        }
    }
}
