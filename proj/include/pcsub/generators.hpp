#pragma once

#include "pcsub/invariants.hpp"
#include "pcsub/poly.hpp"
#include "pcsub/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcsub {

enum class CenterEnd { Zero, Infinity };

struct GeneratorItem {
    Poly poly;
    std::string tag;     ///< what kind of element this is, e.g. "bihomogeneous-component"
    std::string origin;  ///< e.g. "(H2)_{1,2}", "h1", "(H1,I - H1,II)^top-r"
    std::optional<BiDegree> bidegree;
};

struct GeneratorSet {
    std::string kind;  ///< "pc-subalgebra", "center-0", "center-inf", "witness"
    Scenario scenario = Scenario::Borel;
    std::vector<GeneratorItem> items;
    std::size_t expected_count = 0;

    std::vector<Poly> polys() const;
    std::size_t size() const { return items.size(); }
};

/// Generators of the Poisson centre of g_(0) or g_(∞) for the scenario of the splitting.
GeneratorSet center_generators(const Splitting& s, CenterEnd end, const InvariantSet& inv);

/// Free generators of the Poisson-commutative subalgebra Z_<h,r> of the scenario.
/// Zero components are dropped, so size() < expected_count signals a defect.
GeneratorSet pc_generators(const Splitting& s, const InvariantSet& inv);

/// Borel scenario: Cartan basis, components (H_j)_{i,d_j-i} with 1 ≤ i ≤ d_j-1 except H_l^top-r
/// (a multiple of e_δ Π f_i^{a_i}), then e_δ, f_1..f_l; b(g) + l elements.
GeneratorSet maximality_witness(const Splitting& s, const InvariantSet& inv);

/// Scalar c with H_l^top-r = c · e_δ Π f_i^{a_i}, or nullopt if H_l^top-r is not such a multiple.
std::optional<Rational> top_invariant_scalar(const Splitting& s, const InvariantSet& inv);

/// The monomial e_δ Π f_i^{a_i}.
Poly top_invariant_monomial(const LieAlgebra& g);

/// Sum over the g.g.s. of the maximal degree in V against dim V, where V is the abelian ideal
/// of the relevant contraction: u_- for borel, h for involution and manin.
struct GgsDegreeSum {
    int sum = 0;
    int dim_v = 0;
    std::string side;
};
GgsDegreeSum ggs_degree_sum(const Splitting& s, const InvariantSet& inv);

/// Checks that φ_t(H) lies in span(gens) + S(coordinate generators) for each basic invariant H
/// and each t. Returns an empty string on success, otherwise the first failure.
std::string vandermonde_closure(const Splitting& s, const InvariantSet& inv, const GeneratorSet& gens,
                                const std::vector<Rational>& ts);

/// Basic invariants of g×g paired per index: {H_{j,I}, H_{j,II}}.
std::vector<std::pair<std::size_t, std::size_t>> copy_pairs(const InvariantSet& inv);

}  // namespace pcsub
