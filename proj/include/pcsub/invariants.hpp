#pragma once

#include "pcsub/poly.hpp"
#include "pcsub/rootdata.hpp"

#include <string>
#include <vector>

namespace pcsub {

struct InvariantInfo {
    std::string label;   ///< "H2", or "H2,I" / "H2,II" on g×g
    std::string origin;  ///< "charpoly-coefficient-4", "pfaffian"
    int copy = 0;        ///< 0 on a simple algebra; 1 or 2 for the factors of g×g
    int base_index = 0;  ///< position j among the basic invariants of one factor
};

/// Basic invariants in nondecreasing degree. On g×g the two copies are interleaved:
/// H_{1,I}, H_{1,II}, H_{2,I}, ...
struct InvariantSet {
    std::vector<Poly> polys;
    std::vector<int> degrees;
    std::vector<InvariantInfo> info;
    std::string realization;

    std::size_t size() const { return polys.size(); }
};

/// Coefficients of det(λ - M) for the generic element M of each realization block, written in S(g)
/// through the dual basis of the stored form; D-type blocks trade the top coefficient for the Pfaffian
/// of J·M. No rescaling is applied.
InvariantSet basic_invariants(const LieAlgebra& g);

/// True iff {H, x} = 0 for every basis element x under the Lie–Poisson bracket.
bool check_adg_invariance(const Poly& h, const LieAlgebra& g);

}  // namespace pcsub
