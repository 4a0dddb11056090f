#include "oracles.hpp"

#include "wedgeforge/intlin.hpp"

#include <gtest/gtest.h>

using namespace wedgeforge;

namespace {

bool certified(const IntMatrix& a, const SmithForm& s) {
    if (!(s.U * a * s.V == s.D)) return false;
    if (abs(det(s.U)) != 1 || abs(det(s.V)) != 1) return false;
    for (std::size_t r = 0; r < s.D.rows(); ++r)
        for (std::size_t c = 0; c < s.D.cols(); ++c)
            if (r != c && s.D(r, c) != 0) return false;
    for (std::size_t t = 0; t + 1 < s.divisors.size(); ++t) {
        const Integer& a0 = s.divisors[t];
        const Integer& a1 = s.divisors[t + 1];
        if (a0 < 0 || (a0 == 0 ? a1 != 0 : a1 % a0 != 0)) return false;
    }
    return true;
}

std::vector<std::vector<long long>> plain(const IntMatrix& m) {
    std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = static_cast<long long>(m(r, c));
    return out;
}

} // namespace

TEST(IntLin, Determinants) {
    EXPECT_EQ(det(IntMatrix::identity(3)), 1);
    EXPECT_EQ(det(IntMatrix{{-1}}), -1);
    const IntMatrix cp2{{1, 0, -1}, {0, 1, -1}};
    EXPECT_EQ(minor(cp2, {0, 1}, {0, 2}), -1);
    EXPECT_EQ(det(IntMatrix(0, 0)), 1);
    EXPECT_EQ(minor(cp2, {}, {}), 1);
    EXPECT_EQ(det(IntMatrix{{2}}), 2);
    EXPECT_THROW(det(cp2), Error);
    EXPECT_THROW(minor(cp2, {0}, {0, 1}), Error);
    EXPECT_THROW(minor(cp2, {5}, {0}), Error);
}

TEST(IntLin, DeterminantMatchesLeibniz) {
    std::uint64_t state = 1;
    for (int t = 0; t < 300; ++t) {
        const auto m = oracle::random_matrix(4, 4, -3, 3, state);
        EXPECT_EQ(det(m), oracle::leibniz_det(plain(m)));
    }
    for (int t = 0; t < 50; ++t) {
        const auto m = oracle::random_matrix(6, 6, -9, 9, state);
        EXPECT_EQ(det(m), oracle::leibniz_det(plain(m)));
    }
}

TEST(IntLin, DeterminantIsExactForLargeEntries) {
    // Entries near 2^62 overflow int64 products; the result must be exact.
    const Integer big = Integer(1) << 62;
    IntMatrix m(2, 2);
    m(0, 0) = big;
    m(0, 1) = big - 1;
    m(1, 0) = big + 1;
    m(1, 1) = big;
    EXPECT_EQ(det(m), 1);
}

TEST(IntLin, SmithExamples) {
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).divisors, (std::vector<Integer>{1, 6}));
    EXPECT_EQ(smith_normal_form(IntMatrix{{-1, 1}}).divisors, (std::vector<Integer>{1}));
    EXPECT_EQ(smith_normal_form(IntMatrix(2, 2)).divisors, (std::vector<Integer>{0, 0}));
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).divisors, (std::vector<Integer>{2, 6, 12}));
}

TEST(IntLin, SmithCertificatesOnRandomMatrices) {
    std::uint64_t state = 99;
    for (int t = 0; t < 300; ++t) {
        const std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 5;
        const auto m = oracle::random_matrix(r, c, -7, 7, state);
        const auto s = smith_normal_form(m);
        ASSERT_TRUE(certified(m, s)) << t;
        // Product of divisors of a square matrix equals |det|.
        if (r == c) {
            Integer prod = 1;
            for (const auto& d : s.divisors) prod *= d;
            EXPECT_EQ(prod, abs(det(m)));
        }
    }
}

TEST(IntLin, KernelBasis) {
    EXPECT_EQ(kernel_basis(IntMatrix{{-1, 1}}), (IntMatrix{{1}, {1}}));
    EXPECT_EQ(kernel_basis(IntMatrix::identity(3)).cols(), 0u);
    EXPECT_EQ(kernel_basis(IntMatrix::identity(3)).rows(), 3u);
    EXPECT_EQ(kernel_basis(IntMatrix{{1, 0, -1}, {0, 1, -1}}), (IntMatrix{{1}, {1}, {1}}));
}

TEST(IntLin, KernelIsSaturated) {
    std::uint64_t state = 5;
    for (int t = 0; t < 100; ++t) {
        const auto m = oracle::random_matrix(2, 5, -4, 4, state);
        const auto s = kernel_basis(m);
        EXPECT_TRUE((m * s).is_zero());
        EXPECT_EQ(s.cols(), 5 - rank(m));
        EXPECT_TRUE(smith_normal_form(s).all_unit());
    }
    // Non-saturated naive kernel: 2x = 4y has kernel spanned by (2,1).
    EXPECT_EQ(kernel_basis(IntMatrix{{2, -4}}), (IntMatrix{{2}, {1}}));
}

TEST(IntLin, Rank) {
    EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
    EXPECT_EQ(rank(IntMatrix(3, 2)), 0u);
    EXPECT_EQ(rank(IntMatrix::identity(4)), 4u);
}

TEST(IntLin, AccessChecks) {
    IntMatrix m(2, 2);
    EXPECT_THROW(m.at(2, 0), Error);
    EXPECT_NO_THROW(m.at(1, 1));
}
