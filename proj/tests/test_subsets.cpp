#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "fmchow/errors.hpp"
#include "fmchow/subsets.hpp"
#include "support.hpp"

using namespace fmchow;

using namespace fmchow::testing;

TEST_CASE("overlap predicate") {
    CHECK(overlaps(SubsetLabel({1, 2}, 4), SubsetLabel({2, 3}, 4)));
    CHECK_FALSE(overlaps(SubsetLabel({1, 2}, 4), SubsetLabel({1, 2, 3}, 4)));
    CHECK_FALSE(overlaps(SubsetLabel({1, 2}, 4), SubsetLabel({3, 4}, 4)));
    CHECK_THROWS_AS(overlaps(SubsetLabel({1, 2}, 3), SubsetLabel({1, 2}, 4)), ArgumentError);
}

TEST_CASE("subset labels") {
    const SubsetLabel s({3, 1}, 4);
    CHECK(s.to_string() == "{1,3}");
    CHECK(s.compact() == "13");
    CHECK(s.size() == 2);
    CHECK(s.min_member() == 1);
    CHECK(SubsetLabel({1, 2}, 3) < SubsetLabel({1, 3}, 3));
    CHECK(SubsetLabel({2, 3}, 3) < SubsetLabel({1, 2, 3}, 3));
    CHECK(SubsetLabel({1, 3}, 3).permuted(std::vector<int>{2, 1, 3}) == SubsetLabel({2, 3}, 3));
    CHECK_THROWS_AS(SubsetLabel(0u, 3), ArgumentError);
    CHECK_THROWS_AS(SubsetLabel({4}, 3), ArgumentError);
}

TEST_CASE("nest predicate") {
    CHECK(is_nest(std::vector<SubsetLabel>{SubsetLabel({1}, 2), SubsetLabel({2}, 2)}, 2));
    CHECK(is_nest(std::vector<SubsetLabel>{SubsetLabel({1}, 2), SubsetLabel({2}, 2), SubsetLabel({1, 2}, 2)}, 2));
    CHECK_FALSE(is_nest(std::vector<SubsetLabel>{SubsetLabel({1}, 3), SubsetLabel({2}, 3), SubsetLabel({3}, 3),
                                                 SubsetLabel({1, 2}, 3), SubsetLabel({2, 3}, 3)},
                        3));
    CHECK_FALSE(is_nest(std::vector<SubsetLabel>{SubsetLabel({1}, 2)}, 2));
}

TEST_CASE("nest enumeration examples") {
    CHECK(enumerate_nests(1).size() == 1);
    CHECK(enumerate_nests(2).size() == 2);
    const auto n3 = enumerate_nests(3);
    CHECK(n3.size() == 8);
    CHECK(n3.front().is_trivial());
    CHECK_THROWS_AS(enumerate_nests(7), ResourceError);
}

TEST_CASE("chain enumeration examples") {
    CHECK(enumerate_chains(2, false).size() == 2);
    CHECK(enumerate_chains(3, false).size() == 8);
    CHECK(enumerate_chains(2, true).size() == 6);
    CHECK(enumerate_chains(3, false).front().to_string() == "∅");
    CHECK(enumerate_chains(3, false).back().to_string() == "{1,2,3}>{2,3}");
}

TEST_CASE("nest enumeration matches brute force for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const auto expected = brute_nests(n);
        CAPTURE(n);
        CHECK(enumerate_nests(n).size() == expected.size());
        CHECK(enumerated_nests(n) == expected);
    }
}

TEST_CASE("chain enumeration matches brute force for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (bool singletons : {false, true}) {
            const auto expected = brute_chains(n, singletons);
            CAPTURE(n);
            CAPTURE(singletons);
            CHECK(enumerate_chains(n, singletons).size() == expected.size());
            CHECK(enumerated_chains(n, singletons) == expected);
        }
    }
}

TEST_CASE("forest statistics") {
    const Nest trivial = Nest::trivial(3);
    auto st = forest_stats(trivial);
    CHECK(st.component_count == 3);
    for (const auto& [s, sons] : st.sons) CHECK(sons == 0);

    const Nest one = Nest::with_singletons({SubsetLabel({1, 2}, 3)}, 3);
    st = forest_stats(one);
    CHECK(st.component_count == 2);
    CHECK(st.sons.at(SubsetLabel({1, 2}, 3)) == 2);

    const Nest two = Nest::with_singletons({SubsetLabel({1, 2}, 3), SubsetLabel({1, 2, 3}, 3)}, 3);
    st = forest_stats(two);
    CHECK(st.component_count == 1);
    CHECK(st.sons.at(SubsetLabel({1, 2, 3}, 3)) == 2);
    CHECK(st.sons.at(SubsetLabel({1, 2}, 3)) == 2);
    CHECK(two.roots() == std::vector<SubsetLabel>{SubsetLabel({1, 2, 3}, 3)});
}

TEST_CASE("multiplicity examples") {
    const Chain top({SubsetLabel({1, 2, 3}, 3)}, false);
    const auto mu = chain_multiplicities(top, 1);
    REQUIRE(mu.size() == 2);
    CHECK(mu[0].total == 1);
    CHECK(mu[1].total == 2);
    CHECK(chain_multiplicities(Chain({SubsetLabel({1, 2, 3}, 3), SubsetLabel({1, 2}, 3)}, false), 1).empty());
    const auto empty = chain_multiplicities(Chain(), 3);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].total == 0);
    CHECK_THROWS_AS(chain_multiplicities(top, 0), ArgumentError);

    const Nest n12 = Nest::with_singletons({SubsetLabel({1, 2}, 2)}, 2);
    const auto m2 = nest_multiplicities(n12, 2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0].total == 1);
    CHECK(nest_multiplicities(n12, 1).empty());
    const auto t = nest_multiplicities(Nest::trivial(3), 2);
    REQUIRE(t.size() == 1);
    CHECK(t[0].total == 0);
}

TEST_CASE("multiplicity counts match closed-form products on random chains and nests") {
    CHECK(multiplicity_mismatches(100, 20261015) == 0);
}

TEST_CASE("permutations") {
    CHECK(identity_permutation(3) == std::vector<int>{1, 2, 3});
    CHECK(all_permutations(3).size() == 6);
    CHECK(all_permutations(4).size() == 24);
    const Nest nest = Nest::with_singletons({SubsetLabel({1, 2}, 3)}, 3);
    CHECK(nest.permuted(std::vector<int>{3, 2, 1}).to_string() == Nest::with_singletons({SubsetLabel({2, 3}, 3)}, 3).to_string());
}
