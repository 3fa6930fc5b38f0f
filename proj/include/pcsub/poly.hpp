#pragma once

#include "pcsub/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pcsub {

/// Dense exponent vector, one entry per basis coordinate of the ambient algebra.
using Exponent = std::vector<std::uint8_t>;

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept;
};

int total_degree(const Exponent& e);
/// Graded lexicographic order: total degree first, then the earlier coordinate dominates.
bool graded_lex_less(const Exponent& a, const Exponent& b);

/// Degree in the first summand (h) and in the second summand (r) of a splitting.
struct BiDegree {
    int h = 0;
    int r = 0;
    auto operator<=>(const BiDegree&) const = default;
};

/// Which coordinates belong to the second summand of a vector-space splitting.
struct VariablePartition {
    std::vector<bool> second;
    std::size_t size() const { return second.size(); }
};

BiDegree bidegree_of(const Exponent& e, const VariablePartition& part);

/// Sparse polynomial in S(g) with exact rational coefficients. No zero coefficient is ever stored.
class Poly {
public:
    using TermMap = std::unordered_map<Exponent, Rational, ExponentHash>;

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t index, const Rational& c = Rational(1));
    static Poly monomial(Exponent exponent, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Rational coefficient(const Exponent& e) const;
    /// Variables with a nonzero exponent in some term, ascending.
    std::vector<std::size_t> support() const;
    /// Terms sorted by descending graded lexicographic order.
    std::vector<std::pair<Exponent, Rational>> sorted_terms() const;

    void add_term(const Exponent& e, const Rational& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);

    bool operator==(const Poly& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }

    Poly derivative(std::size_t var) const;
    Rational evaluate(const QVector& point) const;

private:
    void require_same_dim(const Poly& other) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

Poly pow(const Poly& p, unsigned k);

/// Components H_{i,d-i} of a homogeneous H, keyed by bidegree, ascending in h-degree; zero components omitted.
std::vector<std::pair<BiDegree, Poly>> bihomogeneous_decompose(const Poly& p, const VariablePartition& part);

/// Single bihomogeneous component of bidegree (h, d-h); zero if absent.
Poly bihomogeneous_component(const Poly& p, const VariablePartition& part, int h_degree);

enum class TopSide {
    SecondSummandMax,  ///< H^bullet: maximal degree in the second summand
    FirstSummandMax,   ///< H_bullet: maximal degree in the first summand
};

std::pair<BiDegree, Poly> top_component(const Poly& p, const VariablePartition& part, TopSide side);

/// Scales every second-summand coordinate by s; first-summand coordinates are fixed.
Poly apply_phi(const Poly& p, const VariablePartition& part, const Rational& s);

/// Gradient of p at the point, as a coordinate vector in the fixed basis.
QVector differential_at(const Poly& p, const QVector& point);

/// Rows are gradients of each polynomial at the point.
QMatrix jacobian_at(const std::vector<Poly>& polys, const QVector& point);

}  // namespace pcsub
