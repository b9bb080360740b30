#include <doctest.h>

#include "fmchow/errors.hpp"
#include "fmchow/geometry.hpp"
#include "fmchow/groebner.hpp"
#include "fmchow/polynomial_io.hpp"

using namespace fmchow;

namespace {

// Rank of the image of A^*(X^n) -> A^*(stratum) degree by degree, read off as
// the Hilbert function of the ambient ring modulo the kernel.
RankVector kernel_quotient_ranks(const GeometrySpec& spec, const StratumLabel& label) {
    auto [table, rels] = ambient_presentation(spec);
    for (auto& k : subvariety_kernel(spec, label, table)) rels.push_back(k);
    return hilbert_series(buchberger(rels, TermOrder()));
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS((GeometrySpec{0, 2, 0}).validate(), ArgumentError);
    CHECK_THROWS_AS((GeometrySpec{1, 0, 0}).validate(), ArgumentError);
    CHECK_THROWS_AS((GeometrySpec{1, 2, 2}).validate(), ArgumentError);
    CHECK_NOTHROW((GeometrySpec{2, 2, 2}).validate());
    CHECK(parse_space("distinct") == Space::Distinct);
    CHECK_THROWS_AS(parse_space("other"), ArgumentError);
}

TEST_CASE("ambient presentation") {
    auto [t, rels] = ambient_presentation({1, 2, 1});
    CHECK(rels == std::vector<Polynomial>{parse_polynomial("h1^2", t), parse_polynomial("h2^2", t)});
    auto [t2, rels2] = ambient_presentation({2, 1, 1});
    CHECK(rels2 == std::vector<Polynomial>{parse_polynomial("h1^3", t2)});
    auto [t3, rels3] = ambient_presentation({2, 2, 1});
    CHECK(hilbert_series(buchberger(rels3, TermOrder())) == RankVector{1, 2, 3, 2, 1});
}

TEST_CASE("restriction kernels") {
    const GeometrySpec spec{2, 2, 1};
    auto [t, rels] = ambient_presentation(spec);
    CHECK(subvariety_kernel(spec, StratumLabel::ds(SubsetLabel({1, 2}, 2)), t) ==
          std::vector<Polynomial>{parse_polynomial("h1^2", t), parse_polynomial("h2^2", t)});
    const GeometrySpec s3{2, 3, 1};
    auto [t3, r3] = ambient_presentation(s3);
    CHECK(subvariety_kernel(s3, StratumLabel::diagonal(SubsetLabel({1, 2, 3}, 3)), t3) ==
          std::vector<Polynomial>{parse_polynomial("h1 - h2", t3), parse_polynomial("h2 - h3", t3)});
    const GeometrySpec p1{1, 2, 1};
    auto [tp, rp] = ambient_presentation(p1);
    CHECK(subvariety_kernel(p1, StratumLabel::ds(SubsetLabel({2}, 2)), tp) ==
          std::vector<Polynomial>{parse_polynomial("h2", tp)});
    CHECK_THROWS_AS(subvariety_kernel({2, 2, 2}, StratumLabel::ds(SubsetLabel({1}, 2))), UnsupportedFeature);
    CHECK_THROWS_AS(subvariety_kernel({2, 2, 0}, StratumLabel::ds(SubsetLabel({1}, 2))), ArgumentError);
}

TEST_CASE("kernel quotients have the stratum's ranks") {
    for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 3; ++n) {
            const GeometrySpec spec{m, n, 1};
            for (const auto& s : all_subsets(n, 1)) {
                const auto label = StratumLabel::ds(s);
                CHECK(kernel_quotient_ranks(spec, label) == poincare_of(spec, label));
                if (s.size() >= 2) {
                    const auto d = StratumLabel::diagonal(s);
                    CHECK(kernel_quotient_ranks(spec, d) == poincare_of(spec, d));
                }
            }
        }
    }
}

TEST_CASE("Chern polynomials of D_S") {
    const GeometrySpec spec{2, 2, 1};
    auto [t, r] = ambient_presentation(spec);
    const auto p12 = chern_polynomial_ds(spec, SubsetLabel({1, 2}, 2), t);
    CHECK(p12.degree() == 2);
    CHECK(p12.coeff(1) == parse_polynomial("h1 + h2", t));
    CHECK(p12.coeff(0) == parse_polynomial("h1*h2", t));
    const auto p1 = chern_polynomial_ds(spec, SubsetLabel({1}, 2), t);
    CHECK(p1.evaluate(Polynomial(t)) == parse_polynomial("h1", t));
    const auto rel = relative_chern_polynomial_ds(spec, SubsetLabel({1}, 2), SubsetLabel({1, 2}, 2), t);
    CHECK(rel.coeff(0) == parse_polynomial("h2", t));
}

TEST_CASE("diagonal Chern polynomial") {
    auto [t1, r1] = ambient_presentation({1, 2, 1});
    const auto c1 = cab_polynomial({1, 2, 1}, 1, 2, t1);
    CHECK(c1.degree() == 1);
    CHECK(c1.coeff(1) == Polynomial::constant(t1, -1));
    CHECK(c1.coeff(0) == parse_polynomial("h1 + h2", t1));

    auto [t2, r2] = ambient_presentation({2, 2, 1});
    const auto c2 = cab_polynomial({2, 2, 1}, 1, 2, t2);
    CHECK(c2.coeff(2) == Polynomial::constant(t2, 1));
    CHECK(c2.coeff(1) == parse_polynomial("-3*h1", t2));
    CHECK(c2.coeff(0) == parse_polynomial("h1^2 + h1*h2 + h2^2", t2));
}

TEST_CASE("diagonal class is symmetric in a and b") {
    for (int m = 1; m <= 3; ++m) {
        const GeometrySpec spec{m, 3, 1};
        auto [t, r] = ambient_presentation(spec);
        const auto ab = cab_polynomial(spec, 1, 3, t);
        const auto ba = cab_polynomial(spec, 3, 1, t);
        CHECK(ab.coeff(0) == ba.coeff(0));
    }
}

TEST_CASE("stratum ranks") {
    CHECK(poincare_of({2, 2, 1}, StratumLabel::ds(SubsetLabel({1, 2}, 2))) == RankVector{1, 2, 1});
    CHECK(poincare_of({1, 3, 1}, StratumLabel::ds(SubsetLabel({1, 2}, 3))) == RankVector{1, 1});
    CHECK(poincare_of({2, 2, 1}, StratumLabel::ambient()) == RankVector{1, 2, 3, 2, 1});
    CHECK(brackets_space_ranks(1, 1, 3) == RankVector{1, 7, 7, 1});
    CHECK(brackets_space_ranks(2, 0, 2) == RankVector{1, 2, 3, 2, 1});
    CHECK(projective_space_ranks(3) == RankVector{1, 1, 1, 1});
    CHECK(StratumLabel::ds(SubsetLabel({1, 2}, 3)).type_name(3) == "D^2×X");
    CHECK(StratumLabel::ambient().type_name(2) == "X^2");
}
