#pragma once

#include "pcsub/rational.hpp"
#include "pcsub/upoly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcsub {

/// Element of P = Q ∪ {∞}.
struct PencilParam {
    std::optional<Rational> value;  ///< nullopt means ∞

    static PencilParam finite(const Rational& t) { return {t}; }
    static PencilParam infinity() { return {std::nullopt}; }
    bool is_infinity() const { return !value.has_value(); }
    std::string to_string() const;
    bool operator==(const PencilParam&) const = default;
};

/// Pair of skew forms; the member at t is A + tB, at ∞ it is B.
struct SkewPencil {
    QMatrix a;
    QMatrix b;

    Eigen::Index size() const { return a.rows(); }
    QMatrix member(const PencilParam& t) const;
    TMatrix over_polynomials() const;
};

bool is_skew(const QMatrix& m);

struct RankKernel {
    Eigen::Index rank = 0;
    QMatrix kernel;  ///< columns
};

/// Throws std::invalid_argument if m is not skew.
RankKernel rank_and_kernel(const QMatrix& m);

/// Squarefree factor of the rank polynomial whose (irrational) roots are all singular parameters.
struct AlgebraicLine {
    UPoly factor;
    Eigen::Index rank = 0;  ///< rank of the pencil at any root of the factor
};

struct SingularSet {
    /// A and B are proportional: every member is a multiple of one form, so exactly one line degenerates.
    bool proportional = false;
    std::vector<Rational> finite;  ///< ascending
    bool infinity = false;
    std::vector<AlgebraicLine> algebraic;

    /// Number of singular lines, counting each root of an algebraic factor.
    int line_count() const;
    bool empty() const { return line_count() == 0; }
};

struct SingularAnalysis {
    Eigen::Index generic_rank = 0;
    SingularSet singular;
    /// rank at each rational singular value, then ∞ if singular, then per algebraic factor
    std::vector<Eigen::Index> singular_ranks;
};

/// Generic rank over Q(t) and the exact set of parameters where the rank drops.
/// Throws std::invalid_argument for a zero pencil.
SingularAnalysis singular_parameters(const SkewPencil& p);

class InsufficientSamplesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct KernelSum {
    Eigen::Index dim = 0;
    QMatrix basis;  ///< columns
    std::vector<Rational> params;  ///< regular parameters used
    bool stabilized = false;        ///< one extra regular sample did not enlarge L
};

/// L = sum of kernels of regular members. Needs sample_budget ≥ n + 1.
KernelSum kernel_sum(const SkewPencil& p, int sample_budget, std::uint64_t seed);

struct PencilProfile {
    Eigen::Index size = 0;
    Eigen::Index generic_rank = 0;
    SingularSet singular;
    Eigen::Index kernel_sum_dim = 0;
    int jordan_line_count = 0;
    Eigen::Index kronecker_block_count = 0;
    /// total dimension of the Jordan part: 2 (n - m/2 - dim L)
    Eigen::Index jordan_dimension = 0;
    bool consistent = false;
    std::string consistency_detail;
};

PencilProfile jk_profile(const SkewPencil& p, std::uint64_t seed = 42);

/// Outcome of the single-Jordan-line check on L for a pencil whose only singular line is C.
struct JordanLineCheck {
    bool hypotheses_hold = false;
    std::string failed_hypothesis;
    Eigen::Index rank_c = 0;
    Eigen::Index rank_a_on_ker_c = 0;
    Eigen::Index dim_l = 0;
    Eigen::Index dim_l_cap_ker_c = 0;
    bool dim_l_cap_ker_c_ok = false;  ///< = n - m
    bool dim_l_ok = false;            ///< = n - m/2 - 1
    bool orthogonality_ok = false;    ///< A(ker C, L ∩ ker C) = 0
    bool passed() const { return hypotheses_hold && dim_l_cap_ker_c_ok && dim_l_ok && orthogonality_ok; }
};

JordanLineCheck check_single_jordan_line(const SkewPencil& p, std::uint64_t seed = 42);

/// Basis of the intersection of two column spans.
QMatrix intersect_spans(const QMatrix& u, const QMatrix& v);

}  // namespace pcsub
