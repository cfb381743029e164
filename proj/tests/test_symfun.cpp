#include <doctest.h>

#include <stdexcept>

#include <set>

#include "descent/matching.hpp"
#include "descent/report_json.hpp"
#include "descent/symfun.hpp"
#include "oracles.hpp"

using namespace descent;

namespace {

Permutation W(const char* text) { return parse_one_line(text); }

std::set<int> members(const DescentSet& d) {
    const auto m = d.members();
    return {m.begin(), m.end()};
}

}  // namespace

TEST_CASE("formal quasisymmetric sums") {
    FormalQSym f(3), g(3);
    f.add(1, 0, DescentSet::linear(3, {1}));
    f.add(0, 2, DescentSet::linear(3));
    g.add(0, 2, DescentSet::linear(3));
    g.add(1, 0, DescentSet::linear(3, {1}));
    CHECK(f == g);
    CHECK(diff(f, g).empty());
    g.add(0, 0, DescentSet::linear(3, {2}), 2);
    CHECK(f != g);
    CHECK(diff(f, g) == std::vector<std::string>{"-2 q^0 t^0 F{2}"});
    CHECK(g.total() == 4);
    CHECK_THROWS_AS(f.add(-1, 0, DescentSet::linear(3)), std::invalid_argument);
    CHECK_THROWS_AS(f.add(0, 0, DescentSet::linear(4)), std::invalid_argument);
    CHECK_THROWS_AS(f.add(0, 0, DescentSet::cyclic(3)), std::invalid_argument);

    FormalQSym big(4);
    for (int i = 0; i < 30; ++i) big.add(i, 0, DescentSet::linear(4));
    CHECK(diff(big, FormalQSym(4)).size() == kWitnessCap);
}

TEST_CASE("fundamental quasisymmetric evaluation") {
    const auto h2 = fundamental_eval(2, DescentSet::linear(2), 2);
    CHECK(h2 == std::map<std::vector<int>, long>{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
    const auto e2 = fundamental_eval(2, DescentSet::linear(2, {1}), 2);
    CHECK(e2 == std::map<std::vector<int>, long>{{{1, 1}, 1}});
    CHECK(fundamental_eval(3, DescentSet::linear(3, {1}), 2) == oracle::fundamental(3, {1}, 2));
    CHECK_THROWS_AS(fundamental_eval(3, DescentSet::linear(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(fundamental_eval(3, DescentSet::linear(3), 0), std::invalid_argument);
    for (int n = 0; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < (n > 0 ? (1u << (n - 1)) : 1u); ++mask) {
            const DescentSet d = DescentSet::from_mask(n, false, mask);
            REQUIRE(fundamental_eval(n, d, 3) == oracle::fundamental(n, members(d), 3));
        }
    }
}

TEST_CASE("Schur descent multisets") {
    CHECK(schur_descent_multiset(Shape({5})) == std::map<DescentSet, long>{{DescentSet::linear(5), 1}});
    CHECK(schur_descent_multiset(Shape({1, 1, 1})) ==
          std::map<DescentSet, long>{{DescentSet::linear(3, {1, 2}), 1}});
    CHECK(schur_descent_multiset(Shape({2, 2})) ==
          std::map<DescentSet, long>{{DescentSet::linear(4, {2}), 1}, {DescentSet::linear(4, {1, 3}), 1}});
    CHECK(schur_descent_multiset(Shape({2, 1})) ==
          std::map<DescentSet, long>{{DescentSet::linear(3, {1}), 1}, {DescentSet::linear(3, {2}), 1}});
}

TEST_CASE("tableau counts by odd columns equal involution counts") {
    for (int n = 0; n <= 9; ++n) {
        for (int k = n % 2; k <= n; k += 2) {
            long tableaux = 0;
            for (const auto& shape : partitions(n)) {
                if (shape.odd_cols() == k) tableaux += oracle::syt_count(shape.parts());
            }
            REQUIRE(tableaux == oracle::involution_count(n, k));
        }
    }
}

TEST_CASE("fixed-point and crossing refinement of the Schur expansion") {
    const FormalQSym l1 = lhs_main0(1);
    CHECK(l1.terms() == std::map<QSymTerm, long>{{QSymTerm{1, 0, DescentSet::linear(1)}, 1}});
    CHECK(l1 == rhs_main0(1));

    FormalQSym two(2);
    two.add(2, 0, DescentSet::linear(2));
    two.add(0, 1, DescentSet::linear(2, {1}));
    CHECK(lhs_main0(2) == two);
    CHECK(rhs_main0(2) == two);

    for (int n = 0; n <= 9; ++n) {
        const auto r = verify_main0(n);
        INFO(n);
        REQUIRE(r.ok);
        REQUIRE(r.witness_diff.empty());
    }
    for (int n = 0; n <= 6; ++n) REQUIRE(evaluate(lhs_main0(n), 3) == evaluate(rhs_main0(n), 3));
}

TEST_CASE("Des/MDes symmetry on perfect matchings") {
    for (int n2 = 0; n2 <= 10; n2 += 2) REQUIRE(verify_lemma_main1(n2).ok);
    CHECK(verify_lemma_main1(4).counts.at("matchings") == 3);
    CHECK_THROWS_AS(verify_lemma_main1(5), std::invalid_argument);

    // The three perfect matchings on 4 points.
    std::map<std::pair<DescentSet, DescentSet>, long> pairs;
    for (const auto& m : enumerate_matchings(4, 0)) ++pairs[{des(m), mdes(m)}];
    std::map<std::pair<DescentSet, DescentSet>, long> swapped;
    for (const auto& [k, c] : pairs) swapped[{k.second, k.first}] += c;
    CHECK(pairs == swapped);
}

TEST_CASE("crossing/MDes against nesting/Des") {
    std::map<std::pair<int, DescentSet>, long> cr_side, ne_side;
    for (const auto& m : enumerate_matchings(4, 0)) {
        ++cr_side[{crossing_number(m), mdes(m)}];
        ++ne_side[{nesting_number(m), des(m)}];
    }
    const std::map<std::pair<int, DescentSet>, long> expected{{{1, DescentSet::linear(4, {1, 3})}, 1},
                                                              {{2, DescentSet::linear(4, {1, 2, 3})}, 1},
                                                              {{1, DescentSet::linear(4, {2})}, 1}};
    CHECK(cr_side == expected);
    CHECK(ne_side == expected);

    const auto nn = verify_main11(5, 5);
    CHECK(nn.ok);
    CHECK(nn.counts.at("matchings") == 1);
    CHECK_THROWS_AS(verify_main11(5, 2), std::invalid_argument);

    for (int n = 0; n <= 9; ++n) {
        for (int k = n % 2; k <= n; k += 2) {
            INFO(n, " ", k);
            REQUIRE(verify_main11(n, k).ok);
            REQUIRE(verify_main111(n, k).ok);
        }
    }
}

TEST_CASE("Gessel classes") {
    const auto cls = gessel_class(W("[3,1,2]"), W("[1]"));
    REQUIRE(cls.size() == 4);
    const std::set<Permutation> got(cls.begin(), cls.end());
    CHECK(got == std::set<Permutation>{W("[3,1,2,4]"), W("[4,1,3,2]"), W("[4,2,1,3]"), W("[1,4,2,3]")});
    CHECK(verify_gessel(W("[3,1,2]"), W("[1]")).ok);
    CHECK(verify_gessel(W("[1]"), W("[2,3,1]")).ok);
    CHECK_THROWS_AS(gessel_class(W("[2,1]"), W("[2,1,3]")), std::invalid_argument);

    // Constructive listing against the filtered-S_N oracle.
    for (int total = 2; total <= 6; ++total) {
        for (int m = 1; m < total; ++m) {
            for (const auto& pi : enumerate_permutations(m)) {
                for (const auto& sigma : enumerate_permutations(total - m)) {
                    std::set<int> a, b;
                    for (int x : cycle_type(pi).parts) a.insert(x);
                    bool clash = false;
                    for (int x : cycle_type(sigma).parts) clash = clash || a.count(x) > 0;
                    if (clash) continue;
                    const auto mine = gessel_class(pi, sigma);
                    std::set<std::vector<int>> as_words;
                    for (const auto& w : mine) as_words.insert({w.one_line().begin(), w.one_line().end()});
                    REQUIRE(as_words.size() == mine.size());
                    REQUIRE(as_words == oracle::gessel_class({pi.one_line().begin(), pi.one_line().end()},
                                                             {sigma.one_line().begin(), sigma.one_line().end()}));
                }
            }
        }
    }

    const auto all = verify_gessel_all(7);
    CHECK(all.ok);
    CHECK(all.counts.at("pairs") > 0);
}

TEST_CASE("transport checks on perfect matchings") {
    for (int n2 = 0; n2 <= 10; n2 += 2) {
        CHECK(verify_chen(n2).ok);
        CHECK(verify_sundaram_roundtrip(n2).ok);
        CHECK(verify_kim(n2).ok);
        if (n2 <= 8) CHECK(verify_roby(n2).ok);
    }
    CHECK_THROWS_AS(verify_kim(3), std::invalid_argument);
}

TEST_CASE("verification reports serialize with a stable schema") {
    const auto r = verify_main11(4, 0);
    const Json j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"identity", "params", "ok", "witness_diff", "elapsed_ms", "counts"});
    CHECK(j["params"]["n"] == 4);
    CHECK(j["params"]["k"] == 0);
    CHECK(j["params"]["j"].is_null());
    CHECK(j["counts"]["matchings"] == 3);
}
