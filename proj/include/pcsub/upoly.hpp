#pragma once

#include "pcsub/linalg.hpp"
#include "pcsub/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pcsub {

/// Dense univariate polynomial over Q in the pencil parameter t. Trailing zeros are never stored.
class UPoly {
public:
    UPoly() = default;
    UPoly(int c) : UPoly(Rational(c)) {}
    UPoly(const Rational& c);
    explicit UPoly(std::vector<Rational> coeffs);
    /// a + b t
    static UPoly linear(const Rational& a, const Rational& b);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational evaluate(const Rational& t) const;
    UPoly derivative() const;
    UPoly monic() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    UPoly operator-() const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Throws std::domain_error if b does not divide a.
UPoly exact_quotient(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// s with s*a = gcd(a, m) mod m.
UPoly inverse_mod(const UPoly& a, const UPoly& m);
UPoly squarefree_part(const UPoly& p);
/// All rational roots, ascending, without multiplicity. Integer coefficient sizes above
/// `cap` are not factored; such roots stay undiscovered and the caller must handle the factor.
std::vector<Rational> rational_roots(const UPoly& p, const Integer& cap = Integer(1000000000000LL));

template <>
struct ExactTraits<UPoly> {
    static bool is_zero(const UPoly& x) { return x.is_zero(); }
    static UPoly exact_div(const UPoly& a, const UPoly& b) { return exact_quotient(a, b); }
    static UPoly one() { return UPoly(1); }
    static UPoly zero() { return UPoly(); }
    static long pivot_cost(const UPoly& x) { return x.degree(); }
};

using TMatrix = Matrix<UPoly>;

}  // namespace pcsub

namespace Eigen {
template <>
struct NumTraits<pcsub::UPoly> : GenericNumTraits<pcsub::UPoly> {
    using Real = pcsub::UPoly;
    using NonInteger = pcsub::UPoly;
    using Nested = pcsub::UPoly;
    using Literal = pcsub::UPoly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 10,
        MulCost = 40
    };
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
