#pragma once

#include "pcsub/pencil.hpp"
#include "pcsub/poly.hpp"
#include "pcsub/rootdata.hpp"

namespace pcsub {

/// t in P = Q ∪ {∞}; 0 and ∞ select the two contractions, 1 the Lie–Poisson bracket.
using BracketParam = PencilParam;

/// A Poisson bracket on S(V) that is linear on V, given by its table on basis pairs.
class PoissonStructure {
public:
    PoissonStructure() = default;
    explicit PoissonStructure(BracketTable table) : table_(std::move(table)) {}

    /// Lie–Poisson bracket of g.
    static PoissonStructure lie(const LieAlgebra& g);
    /// Member {,}_t of the family {,}_0 + t{,}_∞ of a splitting.
    static PoissonStructure of_splitting(const Splitting& s, const BracketParam& t);

    const BracketTable& table() const { return table_; }
    std::size_t dim() const { return table_.dim(); }

    /// Extension of the table by bilinearity and the Leibniz rule.
    Poly bracket(const Poly& p, const Poly& q) const;
    /// {x_i, x_j} as a linear polynomial.
    Poly basis_bracket(std::size_t i, std::size_t j) const;
    /// Skew matrix with entries {x_i, x_j}(xi).
    QMatrix tensor_at(const QVector& xi) const;

private:
    BracketTable table_;
};

Poly lie_poisson(const Poly& p, const Poly& q, const LieAlgebra& g);
Poly bracket_t(const Poly& p, const Poly& q, const Splitting& s, const BracketParam& t);

/// {,}_0 (zero_end) or {,}_∞ on basis pairs: the bracket of h ⋉ r^ab, resp. r ⋉ h^ab.
BracketTable contracted_table(const Splitting& s, bool zero_end);
/// {,}_0 + t{,}_∞ for finite t.
BracketTable family_table(const Splitting& s, const Rational& t);

QMatrix tensor_at(const Splitting& s, const BracketParam& t, const QVector& xi);
/// (π_0(ξ), π_∞(ξ))
SkewPencil pencil_at(const Splitting& s, const QVector& xi);

}  // namespace pcsub
