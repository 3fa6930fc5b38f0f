#include "pcsub/pencil.hpp"
#include "pcsub/random.hpp"

#include <gtest/gtest.h>

using namespace pcsub;

namespace {

QMatrix j2() {
    QMatrix m(2, 2);
    m << 0, 1, -1, 0;
    return m;
}

QMatrix direct_sum(const QMatrix& a, const QMatrix& b) {
    QMatrix out = zero_matrix(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

// Kronecker block of size 3: A pairs e0 with f, B pairs e1 with f.
SkewPencil kronecker3() {
    QMatrix a = zero_matrix(3, 3), b = zero_matrix(3, 3);
    a(0, 2) = 1;
    a(2, 0) = -1;
    b(1, 2) = 1;
    b(2, 1) = -1;
    return {a, b};
}

// Kronecker block of size 3 plus a 2x2 Jordan block singular at t = -1.
SkewPencil kronecker_plus_jordan() {
    const auto k = kronecker3();
    return {direct_sum(k.a, j2()), direct_sum(k.b, j2())};
}

QMatrix random_skew(std::mt19937_64& rng, Eigen::Index n) {
    QMatrix m = zero_matrix(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            m(i, j) = draw_integer(rng, 5);
            m(j, i) = -m(i, j);
        }
    return m;
}

}  // namespace

TEST(UPoly, ArithmeticGcdAndRoots) {
    const UPoly t = UPoly::linear(0, 1);
    const UPoly p = (t - UPoly(1)) * (t + UPoly(Rational(1, 2))) * (t * t - UPoly(2));
    EXPECT_EQ(p.degree(), 4);
    EXPECT_EQ(rational_roots(p), (std::vector<Rational>{Rational(-1, 2), Rational(1)}));
    EXPECT_EQ(gcd(p, t - UPoly(1)), t - UPoly(1));
    EXPECT_EQ(exact_quotient(p, t * t - UPoly(2)), (t - UPoly(1)) * (t + UPoly(Rational(1, 2))));
    EXPECT_THROW(exact_quotient(p, t - UPoly(3)), std::domain_error);
    const UPoly inv = inverse_mod(t + UPoly(1), t * t - UPoly(2));
    EXPECT_EQ(divmod(inv * (t + UPoly(1)), t * t - UPoly(2)).second, UPoly(1));
}

TEST(Pencil, RankAndKernelBasics) {
    const auto z = rank_and_kernel(zero_matrix(3, 3));
    EXPECT_EQ(z.rank, 0);
    EXPECT_EQ(z.kernel.cols(), 3);
    const auto j = rank_and_kernel(j2());
    EXPECT_EQ(j.rank, 2);
    EXPECT_EQ(j.kernel.cols(), 0);
    QMatrix bad(2, 2);
    bad << 0, 1, 1, 0;
    EXPECT_THROW(rank_and_kernel(bad), std::invalid_argument);
}

TEST(Pencil, ProportionalPencil) {
    const auto res = singular_parameters({j2(), QMatrix(-j2())});
    EXPECT_TRUE(res.singular.proportional);
    EXPECT_EQ(res.singular.finite, (std::vector<Rational>{Rational(1)}));
    EXPECT_FALSE(res.singular.infinity);
    EXPECT_THROW(singular_parameters({zero_matrix(2, 2), zero_matrix(2, 2)}), std::invalid_argument);
}

TEST(Pencil, TwoJordanLines) {
    const SkewPencil p{direct_sum(j2(), j2()), direct_sum(j2(), QMatrix(Rational(2) * j2()))};
    const auto res = singular_parameters(p);
    EXPECT_EQ(res.generic_rank, 4);
    EXPECT_EQ(res.singular.finite, (std::vector<Rational>{Rational(-1), Rational(-1, 2)}));
    const auto prof = jk_profile(p);
    EXPECT_EQ(prof.jordan_line_count, 2);
    EXPECT_EQ(prof.kernel_sum_dim, 0);
    EXPECT_TRUE(prof.consistent) << prof.consistency_detail;
}

TEST(Pencil, IrrationalSingularLine) {
    // member (1 + 2t + ... ) : A + tB restricted to a block with det (t^2 - 2)
    QMatrix a = zero_matrix(4, 4), b = zero_matrix(4, 4);
    // block1: (t - s) J with s^2 = 2 realized over Q as J ⊗ [[0,1],[1,0]]-type 4x4 pencil
    // A + tB = [[0, M(t)], [-M(t)^T, 0]] with M(t) = [[t, 2], [1, t]] and det M = t^2 - 2
    QMatrix ma(2, 2), mb(2, 2);
    ma << 0, 2, 1, 0;
    mb << 1, 0, 0, 1;
    a.topRightCorner(2, 2) = ma;
    a.bottomLeftCorner(2, 2) = -ma.transpose();
    b.topRightCorner(2, 2) = mb;
    b.bottomLeftCorner(2, 2) = -mb.transpose();
    const auto res = singular_parameters({a, b});
    EXPECT_EQ(res.generic_rank, 4);
    EXPECT_TRUE(res.singular.finite.empty());
    ASSERT_EQ(res.singular.algebraic.size(), 1u);
    EXPECT_EQ(res.singular.algebraic[0].factor, UPoly(std::vector<Rational>{-2, 0, 1}));
    EXPECT_EQ(res.singular.algebraic[0].rank, 2);
    EXPECT_EQ(res.singular.line_count(), 2);
}

TEST(Pencil, InfinitySingular) {
    // sl2 pencil at a point of D(alpha): pi_inf = 0, pi_0 has rank 2
    QMatrix a = zero_matrix(3, 3);
    a(1, 0) = 2;  // {h,e}_0 = 2e, e-coordinate 1
    a(0, 1) = -2;
    a(1, 2) = -2;  // {h,f}_0 = -2f, f-coordinate 1
    a(2, 1) = 2;
    const auto res = singular_parameters({a, zero_matrix(3, 3)});
    EXPECT_TRUE(res.singular.infinity);
    EXPECT_TRUE(res.singular.finite.empty());
}

TEST(Pencil, KroneckerBlockProfile) {
    const auto prof = jk_profile(kronecker3());
    EXPECT_EQ(prof.generic_rank, 2);
    EXPECT_TRUE(prof.singular.empty());
    EXPECT_EQ(prof.kronecker_block_count, 1);
    EXPECT_EQ(prof.kernel_sum_dim, 2);
    EXPECT_EQ(prof.jordan_line_count, 0);
    EXPECT_TRUE(prof.consistent);
}

TEST(Pencil, KernelSumErrors) {
    EXPECT_THROW(kernel_sum(kronecker3(), 3, 1), InsufficientSamplesError);
    EXPECT_THROW(kernel_sum({zero_matrix(3, 3), zero_matrix(3, 3)}, 10, 1), std::invalid_argument);
}

TEST(Pencil, SingleJordanLineStatement) {
    const auto p = kronecker_plus_jordan();
    const auto prof = jk_profile(p);
    EXPECT_EQ(prof.generic_rank, 4);
    EXPECT_EQ(prof.jordan_line_count, 1);
    EXPECT_EQ(prof.kernel_sum_dim, 5 - 2 - 1);
    EXPECT_TRUE(prof.consistent) << prof.consistency_detail;
    const auto chk = check_single_jordan_line(p);
    EXPECT_TRUE(chk.hypotheses_hold) << chk.failed_hypothesis;
    EXPECT_EQ(chk.dim_l, 2);
    EXPECT_EQ(chk.dim_l_cap_ker_c, 1);
    EXPECT_TRUE(chk.passed());
}

TEST(Pencil, SingleJordanLineReportsFailedHypothesis) {
    const SkewPencil p{direct_sum(j2(), j2()), direct_sum(j2(), QMatrix(Rational(2) * j2()))};
    const auto chk = check_single_jordan_line(p);
    EXPECT_FALSE(chk.hypotheses_hold);
    EXPECT_FALSE(chk.failed_hypothesis.empty());
}

TEST(PencilProperty, RandomPencilsEvenRanksAndStableKernelSum) {
    auto rng = stream_for(3, "pencil-property");
    for (int trial = 0; trial < 12; ++trial) {
        const Eigen::Index n = 3 + trial % 4;
        SkewPencil p{random_skew(rng, n), random_skew(rng, n)};
        const auto prof = jk_profile(p, trial);
        EXPECT_EQ(prof.generic_rank % 2, 0);
        EXPECT_TRUE(prof.consistent) << prof.consistency_detail;
        const auto k1 = kernel_sum(p, static_cast<int>(n) + 1, trial);
        const auto k2 = kernel_sum(p, static_cast<int>(n) + 3, trial + 100);
        EXPECT_EQ(k1.dim, k2.dim);
        for (int s = 0; s < 5; ++s) {
            const Rational t(draw_integer(rng, 30), 1 + draw_integer(rng, 3) + 3);
            EXPECT_EQ(rank_and_kernel(p.member(PencilParam::finite(t))).rank % 2, 0);
        }
    }
}
