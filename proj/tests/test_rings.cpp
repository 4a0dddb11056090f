#include "oracles.hpp"

#include "wedgeforge/corpus.hpp"
#include "wedgeforge/io.hpp"
#include "wedgeforge/rings.hpp"

#include <gtest/gtest.h>

using namespace wedgeforge;

namespace {

std::vector<std::int64_t> ones_then_zeros(int ones, int total) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(total), 0);
    for (int i = 0; i < ones && i < total; ++i) v[static_cast<std::size_t>(i)] = 1;
    return v;
}

std::vector<std::vector<int>> as_vectors(const std::vector<Exponents>& e) { return {e.begin(), e.end()}; }

std::vector<std::vector<Integer>> forms(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Integer>> out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return out;
}

const IntMatrix kCP1{{-1, 1}};
const IntMatrix kCP2{{1, 0, -1}, {0, 1, -1}};

} // namespace

TEST(Rings, StanleyReisnerIdeals) {
    EXPECT_EQ(sr_ideal(corpus::two_points()), (std::vector<Exponents>{{1, 1}}));
    EXPECT_EQ(sr_ideal(corpus::boundary_triangle()), (std::vector<Exponents>{{1, 1, 1}}));
    EXPECT_EQ(sr_ideal(corpus::square()), (std::vector<Exponents>{{1, 0, 1, 0}, {0, 1, 0, 1}}));
}

TEST(Rings, WeightedIdeals) {
    for (int k = 1; k <= 5; ++k)
        EXPECT_EQ(weighted_ideal(corpus::two_points(), WedgeVector({k, 1})), (std::vector<Exponents>{{k, 1}}));
    for (const auto& [name, k] : corpus::complexes())
        EXPECT_EQ(weighted_ideal(k, WedgeVector::ones(k.vertex_count())), sr_ideal(k)) << name;
    EXPECT_EQ(weighted_ideal(corpus::square(), WedgeVector({2, 1, 2, 1})), (std::vector<Exponents>{{2, 0, 2, 0}, {0, 1, 0, 1}}));
    EXPECT_THROW(weighted_ideal(corpus::square(), WedgeVector({1})), Error);
}

TEST(Rings, LinearIdeals) {
    EXPECT_EQ(linear_ideal(kCP1), forms({{-1, 1}}));
    EXPECT_EQ(linear_ideal(kCP2), forms({{1, 0, -1}, {0, 1, -1}}));
    EXPECT_TRUE(linear_ideal(IntMatrix(2, 3)).empty());
}

TEST(Rings, CondensedPresentations) {
    for (int k = 1; k <= 4; ++k) {
        const auto p = presentation_condensed(corpus::two_points(), kCP1, WedgeVector({k, 1}));
        EXPECT_EQ(p.variables.size(), 2u);
        EXPECT_EQ(p.monomial_generators, (std::vector<Exponents>{{k, 1}}));
        EXPECT_EQ(p.linear_forms, forms({{-1, 1}}));
    }
    const auto p = presentation_condensed(corpus::boundary_triangle(), kCP2, WedgeVector::ones(3));
    EXPECT_EQ(io::presentation_string(p), "Z[v1,v2,v3]/(v1 v2 v3, v1 - v3, v2 - v3)");
    EXPECT_THROW(presentation_condensed(corpus::two_points(), IntMatrix{{2, 1}}, WedgeVector({1, 1})), Error);
}

TEST(Rings, StandardPresentations) {
    const auto p = presentation_standard(corpus::boundary_triangle(), kCP2, WedgeVector({2, 1, 1}));
    EXPECT_EQ(p.variables.size(), 4u);
    EXPECT_EQ(p.monomial_generators, (std::vector<Exponents>{{1, 1, 1, 1}}));
    EXPECT_EQ(p.linear_forms.size(), 3u);
    EXPECT_EQ(p.variables[0].name, "v1.1");
    // J = 1: same ring data as the condensed form.
    const auto s = presentation_standard(corpus::boundary_triangle(), kCP2, WedgeVector::ones(3));
    const auto c = presentation_condensed(corpus::boundary_triangle(), kCP2, WedgeVector::ones(3));
    EXPECT_EQ(s.monomial_generators, c.monomial_generators);
    EXPECT_EQ(s.linear_forms, c.linear_forms);
}

TEST(Rings, EliminationGivesTruncatedPolynomialRing) {
    for (int k = 1; k <= 10; ++k) {
        for (bool standard : {false, true}) {
            const auto base = standard ? presentation_standard(corpus::two_points(), kCP1, WedgeVector({k, 1}))
                                       : presentation_condensed(corpus::two_points(), kCP1, WedgeVector({k, 1}));
            const auto p = eliminate_unit_variables(base);
            ASSERT_EQ(p.variables.size(), 1u) << k;
            EXPECT_TRUE(p.linear_forms.empty());
            EXPECT_TRUE(p.polynomial_generators.empty());
            EXPECT_EQ(p.monomial_generators, (std::vector<Exponents>{{k + 1}})) << k;
        }
    }
    RingPresentation bare{numbered_variables(2), {{1, 1}}, {}, {}};
    EXPECT_EQ(eliminate_unit_variables(bare), bare);
}

TEST(Rings, HilbertSeriesAgainstMonomialCount) {
    for (const auto& [name, k] : corpus::complexes()) {
        for (const auto& j : corpus::weight_vectors_bounded(k.vertex_count(), 3)) {
            const auto coeffs = hilbert_weighted(k, j).coefficients(10);
            const auto gens = as_vectors(weighted_ideal(k, j));
            for (int d = 0; d <= 10; ++d)
                EXPECT_EQ(coeffs[static_cast<std::size_t>(d)], oracle::count_standard_monomials(k.vertex_count(), d, gens))
                    << name << " " << j.str() << " degree " << d;
        }
    }
}

TEST(Rings, HilbertSeriesExamples) {
    for (int k = 1; k <= 6; ++k) {
        const auto h = hilbert_weighted(corpus::two_points(), WedgeVector({k, 1})).reduced();
        // (1 - t^{k+1}) / (1-t)^2
        std::vector<Integer> num(static_cast<std::size_t>(k + 2), 0);
        num[0] = 1;
        num[static_cast<std::size_t>(k + 1)] = -1;
        const HilbertSeries expected = HilbertSeries{num, 2}.reduced();
        EXPECT_EQ(h.numerator, expected.numerator);
        EXPECT_EQ(h.denominator_power, expected.denominator_power);
    }
    const auto tri = hilbert_weighted(corpus::boundary_triangle(), WedgeVector::ones(3)).coefficients(6);
    EXPECT_EQ(tri, (std::vector<Integer>{1, 3, 6, 9, 12, 15, 18}));
    EXPECT_EQ(hilbert_stanley_reisner(corpus::boundary_triangle()).coefficients(6), tri);
}

TEST(Rings, GradedDims) {
    for (int k = 1; k <= 6; ++k) {
        RingPresentation p{numbered_variables(1), {{k + 1}}, {}, {}};
        EXPECT_EQ(graded_dims(p, 8), ones_then_zeros(k + 1, 9));
    }
    const auto cp2 = presentation_condensed(corpus::boundary_triangle(), kCP2, WedgeVector::ones(3));
    EXPECT_EQ(graded_dims(cp2, 5), ones_then_zeros(3, 6));
    RingPresentation sr{numbered_variables(2), weighted_ideal(corpus::two_points(), WedgeVector({2, 1})), {}, {}};
    const auto coeffs = hilbert_weighted(corpus::two_points(), WedgeVector({2, 1})).coefficients(8);
    const auto dims = graded_dims(sr, 8);
    for (std::size_t d = 0; d <= 8; ++d) EXPECT_EQ(Integer(dims[d]), coeffs[d]);
    EXPECT_THROW(graded_dims(sr, 13), Error);
    EXPECT_NO_THROW(graded_dims(sr, 13, 13));
}

TEST(Rings, PresentationsAgree) {
    for (const auto& e : corpus::characteristic_pairs()) {
        const int m = static_cast<int>(e.pair.K.vertex_count());
        for (const auto& j : corpus::weight_vectors_up_to(e.pair.K.vertex_count(), m + 2)) {
            const auto c = graded_dims(presentation_condensed(e.pair.K, e.pair.lambda, j), 8);
            EXPECT_EQ(c, graded_dims(presentation_standard(e.pair.K, e.pair.lambda, j), 8)) << e.name << " " << j.str();
            EXPECT_EQ(c, graded_dims(eliminate_unit_variables(presentation_condensed(e.pair.K, e.pair.lambda, j)), 8))
                << e.name << " " << j.str();
            EXPECT_EQ(c[1], static_cast<std::int64_t>(e.pair.lambda.cols() - e.pair.lambda.rows()));
        }
    }
}

TEST(Rings, HirzebruchNeedsPolynomialRelations) {
    // Eliminating with a = 2 leaves a binomial relation; ranks are preserved.
    const auto base = presentation_condensed(corpus::square(), corpus::hirzebruch_lambda(2), WedgeVector::ones(4));
    const auto red = eliminate_unit_variables(base);
    EXPECT_EQ(red.variables.size(), 2u);
    EXPECT_EQ(graded_dims(red, 4), (std::vector<std::int64_t>{1, 2, 1, 0, 0}));
}

TEST(Rings, BettiNumbers) {
    for (int k = 1; k <= 8; ++k)
        EXPECT_EQ(betti_MJ(corpus::two_points(), kCP1, WedgeVector({k, 1})).values, ones_then_zeros(k + 1, k + 1));
    const auto h = corpus::hirzebruch_lambda(1);
    EXPECT_EQ(betti_MJ(corpus::square(), h, WedgeVector::ones(4)).values, (std::vector<std::int64_t>{1, 2, 1}));
    const auto b = betti_MJ(corpus::square(), h, WedgeVector({2, 1, 1, 1}));
    EXPECT_EQ(b.values, (std::vector<std::int64_t>{1, 2, 2, 1}));
    EXPECT_TRUE(b.manifold_certified);
}

TEST(Rings, BettiIsPalindromic) {
    for (const auto& e : corpus::characteristic_pairs()) {
        const int m = static_cast<int>(e.pair.K.vertex_count());
        for (const auto& j : corpus::weight_vectors_up_to(e.pair.K.vertex_count(), m + 3)) {
            const auto v = betti_MJ(e.pair.K, e.pair.lambda, j).values;
            EXPECT_TRUE(std::equal(v.begin(), v.end(), v.rbegin())) << e.name << " " << j.str();
        }
    }
}

TEST(Rings, RegularSequenceShadow) {
    for (const auto& [name, k] : corpus::complexes()) {
        const int m = static_cast<int>(k.vertex_count());
        for (const auto& j : corpus::weight_vectors_up_to(k.vertex_count(), m + 3)) {
            HilbertSeries h = hilbert_weighted(k, j);
            h.denominator_power += j.d() - m;
            EXPECT_EQ(h.coefficients(10), hilbert_stanley_reisner(wedge_J(k, j).complex).coefficients(10)) << name << " " << j.str();
        }
    }
}
