#include <catch2/catch_amalgamated.hpp>

#include "acfp/attack.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace acfp;

TEST_CASE("averaging attack on the worked example") {
    const Code c = fixtures::example_code();
    CHECK(averaging_attack(c, {1, 2, 3}) == fixtures::word({{0, 1}, {2, 3}, {2, 3}, {1, 3}}));
    CHECK(averaging_attack(c, {1, 2, 3, 4, 5}) ==
          fixtures::word({{1, 5}, {2, 5}, {2, 5}, {2, 5}}));
}

TEST_CASE("single colluder reproduces the codeword") {
    const Code c = fixtures::example_code();
    for (int j = 1; j <= c.M(); ++j) {
        const GeneratedWord x = averaging_attack(c, IndexSet{j});
        for (int i = 1; i <= c.n(); ++i) {
            CHECK(x.entry(i).num() == c.symbol(i, j));
            CHECK(x.entry(i).den() == 1);
        }
    }
}

TEST_CASE("attack rejects bad colluder sets") {
    const Code c = fixtures::example_code();
    CHECK_THROWS_AS(averaging_attack(c, IndexSet{}), std::invalid_argument);
    CHECK_THROWS_AS(averaging_attack(c, IndexSet{6}), std::invalid_argument);
}

TEST_CASE("attack denominators divide the colluder count") {
    const Code c = fixtures::example_code();
    for (const auto& S : oracle::subsets_upto(c.M(), c.M())) {
        const GeneratedWord x = averaging_attack(c, IndexSet(S));
        for (const auto& e : x.entries()) {
            CHECK(e >= Rational(0, 1));
            CHECK(e <= Rational(1, 1));
            CHECK(Int(S.size()) % e.den() == 0);
        }
    }
}

TEST_CASE("multiset attack on the inner code") {
    const Code d = fixtures::inner_code();
    CodewordMultiset ms;
    ms.add(2, 2);
    ms.add(3, 1);
    CHECK(multiset_averaging_attack(d, ms) == fixtures::word({{2, 3}, {1, 3}}));

    CodewordMultiset ones;
    ones.add(1);
    ones.add(2);
    ones.add(3);
    CHECK(multiset_averaging_attack(d, ones) == fixtures::word({{1, 3}, {1, 3}}));

    CodewordMultiset repeated;
    repeated.add(2, 5);
    CHECK(multiset_averaging_attack(d, repeated) == averaging_attack(d, IndexSet{2}));

    CHECK_THROWS_AS(multiset_averaging_attack(d, CodewordMultiset{}), std::invalid_argument);
}

TEST_CASE("multiset attack with unit multiplicities equals the set attack") {
    const Code c = fixtures::example_code();
    for (const auto& S : oracle::subsets_upto(c.M(), 3)) {
        CodewordMultiset ms;
        for (int j : S) ms.add(j);
        CHECK(multiset_averaging_attack(c, ms) == averaging_attack(c, IndexSet(S)));
    }
}

TEST_CASE("residual matches the worked example") {
    const Code c = fixtures::example_code();
    const GeneratedWord x = fixtures::word({{0, 1}, {2, 3}, {2, 3}, {1, 3}});
    CHECK(residual_word(x, 3, IndexSet{3}, c) == fixtures::word({{0, 1}, {1, 1}, {1, 2}, {0, 1}}));
    CHECK(residual_word(x, 3, IndexSet{}, c) == x);
    // removing {3,1} leaves exactly codeword 2
    CHECK(residual_word(x, 3, IndexSet{1, 3}, c) == averaging_attack(c, IndexSet{2}));
}

TEST_CASE("residual of every attack equals the attack of the remaining set") {
    const Code c = fixtures::example_code();
    for (const auto& S : oracle::subsets_upto(c.M(), c.M())) {
        const GeneratedWord x = averaging_attack(c, IndexSet(S));
        for (const auto& T : oracle::subsets_upto(c.M(), c.M())) {
            const IndexSet ts(T);
            if (!ts.subset_of(IndexSet(S)) || T.size() >= S.size()) continue;
            const IndexSet rest = IndexSet(S).set_difference(ts);
            CHECK(residual_word(x, static_cast<long long>(S.size()), ts, c) ==
                  averaging_attack(c, rest));
        }
    }
}

TEST_CASE("residual rejects inconsistent inputs") {
    const Code c = fixtures::example_code();
    const GeneratedWord x = averaging_attack(c, {1, 2, 3});
    CHECK_THROWS_AS(residual_word(x, 3, IndexSet{1, 2, 3}, c), std::invalid_argument);
    // c4 is not a colluder: subtracting it drives position 1 negative
    CHECK_THROWS_AS(residual_word(x, 3, IndexSet{4}, c), std::domain_error);
}
