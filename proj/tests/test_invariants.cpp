#include "pcsub/brackets.hpp"
#include "pcsub/invariants.hpp"
#include "pcsub/linalg.hpp"
#include "pcsub/random.hpp"

#include <gtest/gtest.h>

using namespace pcsub;

namespace {

// det(λ - M) for a numeric matrix via Newton identities on traces of powers
std::vector<Rational> charpoly_numeric(const QMatrix& m) {
    const auto n = m.rows();
    std::vector<Rational> p(n + 1), e(n + 1);
    QMatrix power = QMatrix::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        power = QMatrix(power * m);
        p[k] = power.trace();
    }
    e[0] = 1;
    for (Eigen::Index k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (Eigen::Index i = 1; i <= k; ++i) acc += (i % 2 ? 1 : -1) * e[k - i] * p[i];
        e[k] = acc / Rational(k);
    }
    return e;
}

}  // namespace

TEST(Invariants, Sl2CasimirUpToScalar) {
    const auto g = build_classical(Series::A, 1);
    const auto inv = basic_invariants(g);
    ASSERT_EQ(inv.size(), 1u);
    EXPECT_EQ(inv.degrees, (std::vector<int>{2}));
    const Poly e = Poly::variable(3, 0), h = Poly::variable(3, 1), f = Poly::variable(3, 2);
    // det of [[h/2, f], [e, -h/2]]
    EXPECT_EQ(inv.polys[0], Rational(-1, 4) * (h * h + Rational(4) * e * f));
    EXPECT_TRUE(check_adg_invariance(h * h + Rational(4) * e * f, g));
    EXPECT_FALSE(check_adg_invariance(h * h, g));
}

TEST(Invariants, DegreesSumToMagicNumber) {
    const std::vector<std::tuple<Series, int, std::vector<int>>> table{
        {Series::A, 2, {2, 3}}, {Series::A, 3, {2, 3, 4}}, {Series::C, 2, {2, 4}}, {Series::B, 2, {2, 4}}};
    for (const auto& [s, l, degs] : table) {
        const auto g = build_classical(s, l);
        const auto inv = basic_invariants(g);
        EXPECT_EQ(inv.degrees, degs);
        int sum = 0;
        for (int d : inv.degrees) sum += d;
        EXPECT_EQ(sum, g.magic_number());
        for (std::size_t j = 0; j < inv.size(); ++j) {
            EXPECT_TRUE(inv.polys[j].is_homogeneous());
            EXPECT_EQ(inv.polys[j].degree(), inv.degrees[j]);
            EXPECT_TRUE(check_adg_invariance(inv.polys[j], g)) << to_string(s) << l << " H" << j + 1;
        }
    }
}

TEST(InvariantsProperty, MatchNumericCharacteristicPolynomial) {
    // oracle: evaluate at ξ, compare with det(λ - Y) for the matrix Y dual to ξ
    auto rng = stream_for(17, "charpoly");
    for (auto [s, l] : std::vector<std::pair<Series, int>>{{Series::A, 3}, {Series::C, 2}, {Series::B, 2}}) {
        const auto g = build_classical(s, l);
        const auto inv = basic_invariants(g);
        const QMatrix ginv = *inverse_exact(g.form());
        for (int trial = 0; trial < 4; ++trial) {
            const QVector xi = random_integer_point(rng, g.dim(), 9);
            const QMatrix y = g.matrix_of(QVector(ginv * xi));
            const auto e = charpoly_numeric(y);
            for (std::size_t j = 0; j < inv.size(); ++j) {
                const int k = inv.degrees[j];
                EXPECT_EQ(inv.polys[j].evaluate(xi), (k % 2 ? -1 : 1) * e[k]);
            }
        }
    }
}

TEST(Invariants, PfaffianSquaresToDeterminantForD4) {
    const auto g = build_classical(Series::D, 4);
    const auto inv = basic_invariants(g);
    EXPECT_EQ(inv.degrees, (std::vector<int>{2, 4, 4, 6}));
    EXPECT_EQ(inv.info[1].origin, "charpoly-coefficient-4");
    EXPECT_EQ(inv.info[2].origin, "pfaffian");
    auto rng = stream_for(2, "pfaffian");
    const QMatrix ginv = *inverse_exact(g.form());
    for (int trial = 0; trial < 3; ++trial) {
        const QVector xi = random_integer_point(rng, g.dim(), 5);
        const QMatrix y = g.matrix_of(QVector(ginv * xi));
        const Rational pf = inv.polys[2].evaluate(xi);
        // Pf(JY)^2 = det(JY) = det(J) det(Y), det(J) = 1 for the 8x8 antidiagonal ones matrix
        const auto e = charpoly_numeric(y);
        EXPECT_EQ(pf * pf, e[8]);
    }
}

TEST(Invariants, DoubleHasInterleavedCopies) {
    const auto g = build_classical(Series::A, 2);
    const auto s = make_splitting(Scenario::Manin, g);
    const auto inv = basic_invariants(*s.algebra);
    ASSERT_EQ(inv.size(), 4u);
    EXPECT_EQ(inv.degrees, (std::vector<int>{2, 2, 3, 3}));
    EXPECT_EQ(inv.info[0].label, "H1,I");
    EXPECT_EQ(inv.info[3].label, "H2,II");
    for (const auto& p : inv.polys) EXPECT_TRUE(check_adg_invariance(p, *s.algebra));
}

TEST(Invariants, BorelDecompositionExamples) {
    const auto g = build_classical(Series::A, 1);
    const auto s = make_splitting(Scenario::Borel, g);
    const Poly e = Poly::variable(3, 0), h = Poly::variable(3, 1), f = Poly::variable(3, 2);
    const Poly cas = h * h + Rational(4) * e * f;
    const auto comps = bihomogeneous_decompose(cas, s.partition());
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].first, (BiDegree{1, 1}));
    EXPECT_EQ(comps[0].second, Rational(4) * e * f);
    EXPECT_EQ(comps[1].first, (BiDegree{2, 0}));
    EXPECT_EQ(comps[1].second, h * h);
    EXPECT_EQ(apply_phi(cas, s.partition(), Rational(7)), h * h + Rational(28) * e * f);
    QVector y(3);
    y << -1, 2, 1;
    QVector d = differential_at(e * f, y);
    EXPECT_EQ(d, (QVector(3) << 1, 0, -1).finished());
}
