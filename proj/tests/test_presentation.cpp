#include <doctest.h>

#include "fmchow/errors.hpp"
#include "fmchow/groebner.hpp"
#include "fmchow/polynomial_io.hpp"
#include "fmchow/presentation.hpp"
#include "fmchow/verifier.hpp"
#include "support.hpp"

using namespace fmchow;

namespace {

std::size_t incomparable_pairs(int n) {
    const auto xs = all_subsets(n, 2);
    std::size_t count = 0;
    for (std::size_t a = 0; a < xs.size(); ++a) {
        for (std::size_t b = a + 1; b < xs.size(); ++b) {
            if (!xs[a].is_subset_of(xs[b]) && !xs[b].is_subset_of(xs[a])) ++count;
        }
    }
    return count;
}

bool contains_relation(const RingPresentation& p, const std::string& text) {
    const auto target = parse_polynomial(text, p.table()).monic();
    for (const auto& r : p.relations()) {
        if (r.poly == target) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("brackets n=2 m=2") {
    const auto p = build_brackets({2, 2, 1});
    CHECK(p.table()->names() == std::vector<std::string>{"h1", "h2", "x12"});
    CHECK(p.relations().size() == 5);
    for (const char* r : {"h1^3", "h2^3", "h1^2*x12", "h2^2*x12", "x12^2 - (h1+h2)*x12 + h1*h2"}) {
        CAPTURE(r);
        CHECK(contains_relation(p, r));
    }
    CHECK(presentation_ranks(p) == RankVector{1, 3, 5, 3, 1});
}

TEST_CASE("codim 0 leaves only the ambient relations") {
    for (int m = 1; m <= 3; ++m) {
        const auto p = build_brackets({m, 2, 0});
        CHECK(p.table()->size() == 2);
        CHECK(p.count(RelationRule::Ambient) == p.relations().size());
    }
    CHECK_THROWS_AS(build_brackets({2, 2, 2}), UnsupportedFeature);
    CHECK_THROWS_AS(build_distinct({2, 2, 2}), UnsupportedFeature);
}

TEST_CASE("relation counts follow closed forms") {
    for (int n = 2; n <= 4; ++n) {
        const auto p = build_brackets({1, n, 1});
        std::size_t sum_sizes = 0;
        const auto xs = all_subsets(n, 2);
        for (const auto& s : xs) sum_sizes += static_cast<std::size_t>(s.size());
        CAPTURE(n);
        CHECK(p.relations().size() == static_cast<std::size_t>(n) + incomparable_pairs(n) + sum_sizes + xs.size());
        CHECK(p.count(RelationRule::OverlapXX) == incomparable_pairs(n));
    }
    PresentationOptions standard;
    standard.semantics = OverlapSemantics::Standard;
    CHECK(build_brackets({1, 4, 1}, standard).count(RelationRule::OverlapXX) + 3 ==
          build_brackets({1, 4, 1}).count(RelationRule::OverlapXX));
}

TEST_CASE("distinct n=2 m=2 relation list") {
    const auto p = build_distinct({2, 2, 1, Space::Distinct});
    CHECK(p.table()->names() == std::vector<std::string>{"h1", "h2", "x12", "y12"});
    for (const char* r : {"(h1-h2)*y12", "y12^2 - 3*h1*y12 + h1^2 + h1*h2 + h2^2", "x12^2 - (h1+h2)*x12 + h1*h2",
                          "h1^2*x12", "h2^2*x12", "h1^3", "h2^3"}) {
        CAPTURE(r);
        CHECK(contains_relation(p, r));
    }
}

TEST_CASE("Fulton-MacPherson degenerations") {
    CHECK(presentation_ranks(build_distinct({2, 2, 0, Space::Distinct})) == RankVector{1, 3, 4, 3, 1});
    const auto p = build_distinct({1, 2, 0, Space::Distinct});
    CHECK(contains_relation(p, "-y12 + h1 + h2"));
    CHECK(presentation_ranks(p) == RankVector{1, 2, 1});
}

TEST_CASE("intermediate stage endpoints") {
    for (int m = 1; m <= 2; ++m) {
        for (int n = 2; n <= 3; ++n) {
            const GeometrySpec spec{m, n, 1};
            CAPTURE(n);
            CHECK(build_intermediate(spec, 1, 0) == build_brackets(spec));
            GeometrySpec ds = spec;
            ds.space = Space::Distinct;
            CHECK(testing::same_ideal_after_renaming(build_intermediate(spec, n - 1, n - 1), build_distinct(ds)));
        }
    }
    CHECK_THROWS_AS(build_intermediate({1, 3, 1}, 3, 0), ArgumentError);
    CHECK_THROWS_AS(build_intermediate({1, 3, 1}, 1, 2), ArgumentError);
}

TEST_CASE("each intermediate stage adds the new exceptional classes") {
    const GeometrySpec spec{1, 4, 1};
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= i; ++k) {
            std::size_t fresh = 0;
            for (const auto& s : all_subsets(4, 2)) {
                if (s.contains(i + 1) && s.size() == i - k + 2 && s.members().back() <= i + 1) ++fresh;
            }
            CAPTURE(i);
            CAPTURE(k);
            CHECK(build_intermediate(spec, i, k).table()->size() - build_intermediate(spec, i, k - 1).table()->size() ==
                  fresh);
        }
    }
}

TEST_CASE("permutation action") {
    const auto p = build_brackets({1, 3, 1});
    CHECK(apply_permutation(p, identity_permutation(3)) == p);
    const std::vector<int> swap{2, 1, 3};
    const auto q = apply_permutation(p, swap);
    const auto x13 = p.table()->require("x13");
    const auto x23 = p.table()->require("x23");
    for (std::size_t k = 0; k < p.relations().size(); ++k) {
        const auto& before = p.relations()[k].poly;
        const auto& after = q.relations()[k].poly;
        bool had13 = false, has23 = false;
        for (const auto& t : before.terms()) had13 = had13 || t.monomial[x13] > 0;
        for (const auto& t : after.terms()) has23 = has23 || t.monomial[x23] > 0;
        CHECK(had13 == has23);
    }
    for (const auto& sigma : all_permutations(3)) {
        CHECK(presentation_ranks(apply_permutation(p, sigma)) == presentation_ranks(p));
    }
    CHECK_THROWS_AS(apply_permutation(p, std::vector<int>{1, 1, 2}), ArgumentError);
}

TEST_CASE("text and json dumps") {
    const auto p = build_brackets({2, 2, 1});
    const auto text = p.to_text();
    CHECK(text.find("(3) chern-x: ") != std::string::npos);
    const auto j = p.to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["relations"].size() == 5);
    CHECK(nlohmann::ordered_json::parse(j.dump()).dump() == j.dump());
    CHECK(parse_rule_tag("xy-mixed") == RelationRule::MixedXY);
    CHECK(rule_number(PresentationFamily::Intermediate, RelationRule::DiagonalChernPlus) == "(4b)");
}
