#include "pcsub/brackets.hpp"
#include "pcsub/generators.hpp"

#include <gtest/gtest.h>

using namespace pcsub;

namespace {

struct Setup {
    Splitting s;
    InvariantSet inv;
};

Setup setup(Scenario sc, Series series, int l) {
    Setup out{make_splitting(sc, build_classical(series, l)), {}};
    out.inv = basic_invariants(*out.s.algebra);
    return out;
}

bool pairwise_commute(const GeneratorSet& gs, const PoissonStructure& pb) {
    for (std::size_t a = 0; a < gs.size(); ++a)
        for (std::size_t b = a + 1; b < gs.size(); ++b)
            if (!pb.bracket(gs.items[a].poly, gs.items[b].poly).is_zero()) return false;
    return true;
}

bool central(const GeneratorSet& gs, const PoissonStructure& pb) {
    for (const auto& it : gs.items)
        for (std::size_t k = 0; k < pb.dim(); ++k)
            if (!pb.bracket(it.poly, Poly::variable(pb.dim(), k)).is_zero()) return false;
    return true;
}

}  // namespace

TEST(Generators, Sl2Borel) {
    auto [s, inv] = setup(Scenario::Borel, Series::A, 1);
    const Poly e = Poly::variable(3, 0), h = Poly::variable(3, 1), f = Poly::variable(3, 2);
    const auto pc = pc_generators(s, inv);
    ASSERT_EQ(pc.size(), 2u);
    EXPECT_EQ(pc.expected_count, 2u);
    EXPECT_EQ(pc.items[0].poly, h);
    // (h^2 + 4ef) scaled by -1/4
    EXPECT_EQ(pc.items[1].poly, Rational(-1) * e * f);
    const auto z0 = center_generators(s, CenterEnd::Zero, inv);
    ASSERT_EQ(z0.size(), 1u);
    EXPECT_EQ(*z0.items[0].bidegree, (BiDegree{1, 1}));
    const auto zinf = center_generators(s, CenterEnd::Infinity, inv);
    ASSERT_EQ(zinf.size(), 1u);
    EXPECT_EQ(zinf.items[0].poly, h);
}

TEST(Generators, Sl2InvolutionSubstitution) {
    auto [s, inv] = setup(Scenario::Involution, Series::A, 1);
    const auto& g = *s.algebra;
    const Poly e = Poly::variable(3, *g.index_of("e12")), h = Poly::variable(3, *g.index_of("h1")),
               k = Poly::variable(3, *g.index_of("k12"));
    const auto pc = pc_generators(s, inv);
    ASSERT_EQ(pc.size(), 2u);
    // f = e - k substituted into -(h^2 + 4ef)/4
    EXPECT_EQ(pc.items[0].poly, Rational(-1, 4) * (Rational(-4) * e * k));
    EXPECT_EQ(pc.items[1].poly, Rational(-1, 4) * (h * h + Rational(4) * e * e));
}

TEST(Generators, CountsMatchMagicNumber) {
    const std::vector<std::tuple<Scenario, Series, int, std::size_t>> table{
        {Scenario::Borel, Series::A, 2, 5},      {Scenario::Borel, Series::A, 3, 9},
        {Scenario::Borel, Series::C, 2, 6},      {Scenario::Borel, Series::B, 2, 6},
        {Scenario::Involution, Series::A, 2, 5}, {Scenario::Involution, Series::A, 3, 9},
        {Scenario::Manin, Series::A, 1, 4},      {Scenario::Manin, Series::A, 2, 10}};
    for (const auto& [sc, series, l, count] : table) {
        auto [s, inv] = setup(sc, series, l);
        const auto pc = pc_generators(s, inv);
        EXPECT_EQ(pc.size(), count) << to_string(sc) << to_string(series) << l;
        EXPECT_EQ(pc.expected_count, count);
    }
}

TEST(GeneratorsProperty, CommuteUnderWholeFamilyAndCentresAreCentral) {
    const std::vector<std::tuple<Scenario, Series, int>> table{{Scenario::Borel, Series::A, 2},
                                                               {Scenario::Borel, Series::C, 2},
                                                               {Scenario::Involution, Series::A, 2},
                                                               {Scenario::Manin, Series::A, 1},
                                                               {Scenario::Manin, Series::A, 2}};
    for (const auto& [sc, series, l] : table) {
        auto [s, inv] = setup(sc, series, l);
        const auto pc = pc_generators(s, inv);
        for (const auto& t : {BracketParam::finite(0), BracketParam::finite(1), BracketParam::finite(Rational(-3, 2)),
                              BracketParam::infinity()})
            EXPECT_TRUE(pairwise_commute(pc, PoissonStructure::of_splitting(s, t)))
                << to_string(sc) << to_string(series) << l << " t=" << t.to_string();
        const auto z0 = center_generators(s, CenterEnd::Zero, inv);
        const auto zinf = center_generators(s, CenterEnd::Infinity, inv);
        EXPECT_EQ(z0.size(), z0.expected_count);
        EXPECT_EQ(zinf.size(), zinf.expected_count);
        EXPECT_TRUE(central(z0, PoissonStructure::of_splitting(s, BracketParam::finite(0))))
            << to_string(sc) << to_string(series) << l;
        EXPECT_TRUE(central(zinf, PoissonStructure::of_splitting(s, BracketParam::infinity())))
            << to_string(sc) << to_string(series) << l;
    }
}

TEST(Generators, AddingRootVectorBreaksCommutativity) {
    auto [s, inv] = setup(Scenario::Borel, Series::A, 1);
    auto pc = pc_generators(s, inv);
    pc.items.push_back({Poly::variable(3, 0), "extra", "e12", BiDegree{1, 0}});
    EXPECT_FALSE(pairwise_commute(pc, PoissonStructure::lie(*s.algebra)));
}

TEST(Generators, TopInvariantIsHighestRootMonomial) {
    for (auto [series, l] : std::vector<std::pair<Series, int>>{
             {Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::C, 2}, {Series::B, 2}}) {
        auto [s, inv] = setup(Scenario::Borel, series, l);
        const auto c = top_invariant_scalar(s, inv);
        ASSERT_TRUE(c.has_value()) << to_string(series) << l;
        EXPECT_NE(*c, 0);
    }
    const auto sp4 = build_classical(Series::C, 2);
    const auto mono = top_invariant_monomial(sp4);
    const auto& rs = *sp4.roots();
    EXPECT_EQ(mono.terms().begin()->first[rs.f_index[rs.simple_roots[0]]], 2);
    EXPECT_EQ(mono.terms().begin()->first[rs.f_index[rs.simple_roots[1]]], 1);
}

TEST(Generators, GoodGeneratingSystemDegreeSums) {
    for (auto sc : {Scenario::Borel, Scenario::Involution, Scenario::Manin}) {
        auto [s, inv] = setup(sc, Series::A, 2);
        const auto ggs = ggs_degree_sum(s, inv);
        EXPECT_EQ(ggs.sum, ggs.dim_v) << to_string(sc);
    }
    auto [s, inv] = setup(Scenario::Borel, Series::C, 2);
    EXPECT_EQ(ggs_degree_sum(s, inv).sum, 4);
}

TEST(Generators, VandermondeClosure) {
    for (auto sc : {Scenario::Borel, Scenario::Involution, Scenario::Manin}) {
        auto [s, inv] = setup(sc, Series::A, 2);
        const auto pc = pc_generators(s, inv);
        EXPECT_EQ(vandermonde_closure(s, inv, pc, {Rational(2), Rational(-3, 5)}), "") << to_string(sc);
        auto smaller = pc;
        // drop the last non-coordinate generator
        for (auto it = smaller.items.rbegin(); it != smaller.items.rend(); ++it)
            if (it->poly.degree() > 1) {
                smaller.items.erase(std::next(it).base());
                break;
            }
        EXPECT_NE(vandermonde_closure(s, inv, smaller, {Rational(2)}), "") << to_string(sc);
    }
}

TEST(Generators, WitnessSetSize) {
    auto [s, inv] = setup(Scenario::Borel, Series::A, 1);
    const auto w = maximality_witness(s, inv);
    // {h, e, f}: the component ef is itself e_δ f_1
    EXPECT_EQ(w.size(), 3u);
    EXPECT_EQ(w.expected_count, 3u);
    auto sl3 = setup(Scenario::Borel, Series::A, 2);
    EXPECT_EQ(maximality_witness(sl3.s, sl3.inv).size(), 7u);
    auto inv_setup = setup(Scenario::Involution, Series::A, 1);
    EXPECT_THROW(maximality_witness(inv_setup.s, inv_setup.inv), UnsupportedError);
}
