#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace pcsub {

/// Arbitrary-precision rational; always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q"; throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);
Rational make_rational(const std::string& num, const std::string& den);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline QMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
    return QMatrix::Constant(rows, cols, Rational(0));
}
inline QVector zero_vector(Eigen::Index n) { return QVector::Constant(n, Rational(0)); }

}  // namespace pcsub
