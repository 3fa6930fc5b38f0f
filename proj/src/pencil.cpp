#include "pcsub/pencil.hpp"

#include "pcsub/linalg.hpp"
#include "pcsub/random.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pcsub {

std::string PencilParam::to_string() const { return value ? pcsub::to_string(*value) : "inf"; }

QMatrix SkewPencil::member(const PencilParam& t) const {
    if (t.is_infinity()) return b;
    return a + *t.value * b;
}

TMatrix SkewPencil::over_polynomials() const {
    TMatrix m(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) m(i, j) = UPoly::linear(a(i, j), b(i, j));
    return m;
}

bool is_skew(const QMatrix& m) { return m.rows() == m.cols() && m == QMatrix(-m.transpose()); }

RankKernel rank_and_kernel(const QMatrix& m) {
    if (!is_skew(m)) throw std::invalid_argument("matrix is not skew-symmetric");
    RankKernel out;
    out.kernel = kernel_basis(m);
    out.rank = m.cols() - out.kernel.cols();
    return out;
}

int SingularSet::line_count() const {
    int count = static_cast<int>(finite.size()) + (infinity ? 1 : 0);
    for (const auto& a : algebraic) count += a.factor.degree();
    return count;
}

namespace {

bool all_zero(const QMatrix& m) {
    return std::all_of(m.data(), m.data() + m.size(), [](const Rational& x) { return x.is_zero(); });
}

struct Split {
    UPoly first, second;
};

UPoly reduce(const UPoly& x, const UPoly& mod) { return divmod(x, mod).second; }

// Rank of the matrix over Q[t]/(f); throws Split when a zero divisor shows up.
Eigen::Index rank_mod(const TMatrix& input, const UPoly& f) {
    TMatrix m(input.rows(), input.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = reduce(input(i, j), f);
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        const UPoly d = gcd(m(pivot, col), f);
        if (d.degree() > 0) throw Split{d, exact_quotient(f, d)};
        if (pivot != row) m.row(pivot).swap(m.row(row));
        const UPoly inv = inverse_mod(m(row, col), f);
        for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = reduce(m(row, j) * inv, f);
        for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            const UPoly factor = m(i, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) = reduce(m(i, j) - factor * m(row, j), f);
        }
        ++row;
    }
    return row;
}

// Splits a squarefree f into factors on whose roots the rank is constant.
std::vector<std::pair<UPoly, Eigen::Index>> ranks_over_factors(const TMatrix& m, const UPoly& f) {
    std::vector<std::pair<UPoly, Eigen::Index>> out;
    std::vector<UPoly> pending{f.monic()};
    while (!pending.empty()) {
        UPoly g = pending.back();
        pending.pop_back();
        if (g.degree() <= 0) continue;
        try {
            out.emplace_back(g, rank_mod(m, g));
        } catch (const Split& s) {
            pending.push_back(s.first.monic());
            pending.push_back(s.second.monic());
        }
    }
    return out;
}

bool proportional(const QMatrix& a, const QMatrix& b) {
    QMatrix stacked(a.size(), 2);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            stacked(i * a.cols() + j, 0) = a(i, j);
            stacked(i * a.cols() + j, 1) = b(i, j);
        }
    return exact_rank(stacked) <= 1;
}

}  // namespace

SingularAnalysis singular_parameters(const SkewPencil& p) {
    if (!is_skew(p.a) || !is_skew(p.b) || p.a.rows() != p.b.rows())
        throw std::invalid_argument("pencil members must be skew matrices of equal size");
    const bool a_zero = all_zero(p.a);
    const bool b_zero = all_zero(p.b);
    if (a_zero && b_zero) throw std::invalid_argument("zero pencil: every member vanishes");

    SingularAnalysis out;
    if (proportional(p.a, p.b)) {
        out.singular.proportional = true;
        if (b_zero) {
            out.generic_rank = exact_rank(p.a);
            out.singular.infinity = true;
            out.singular_ranks.push_back(0);
        } else {
            out.generic_rank = exact_rank(p.b);
            // A = c B: the member (c + t) B vanishes at t = -c
            Rational c = 0;
            for (Eigen::Index k = 0; k < p.b.size(); ++k)
                if (!p.b.data()[k].is_zero()) {
                    c = p.a.data()[k] / p.b.data()[k];
                    break;
                }
            out.singular.finite.push_back(-c);
            out.singular_ranks.push_back(0);
        }
        return out;
    }

    const TMatrix t = p.over_polynomials();
    const auto bar = bareiss(t);
    out.generic_rank = bar.rank;
    const Eigen::Index m = bar.rank;

    UPoly residual = squarefree_part(bar.last_pivot);
    for (const auto& r : rational_roots(residual)) {
        residual = exact_quotient(residual, UPoly::linear(-r, 1));
        const auto rk = exact_rank(p.member(PencilParam::finite(r)));
        if (rk < m) {
            out.singular.finite.push_back(r);
            out.singular_ranks.push_back(rk);
        }
    }
    std::vector<std::pair<UPoly, Eigen::Index>> algebraic;
    if (residual.degree() > 0) {
        for (auto& [factor, rk] : ranks_over_factors(t, residual)) {
            if (rk >= m) continue;
            if (factor.degree() == 1) {
                out.singular.finite.push_back(-factor.coeff(0) / factor.coeff(1));
                out.singular_ranks.push_back(rk);
            } else {
                algebraic.emplace_back(factor, rk);
            }
        }
    }
    // keep finite values ascending with their ranks
    std::vector<std::size_t> order(out.singular.finite.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return out.singular.finite[x] < out.singular.finite[y]; });
    std::vector<Rational> values;
    std::vector<Eigen::Index> ranks;
    for (auto k : order) {
        values.push_back(out.singular.finite[k]);
        ranks.push_back(out.singular_ranks[k]);
    }
    out.singular.finite = std::move(values);
    out.singular_ranks = std::move(ranks);

    const auto rank_inf = exact_rank(p.b);
    if (rank_inf < m) {
        out.singular.infinity = true;
        out.singular_ranks.push_back(rank_inf);
    }
    std::sort(algebraic.begin(), algebraic.end(),
              [](const auto& x, const auto& y) { return x.first.coeffs() < y.first.coeffs(); });
    for (auto& [factor, rk] : algebraic) {
        out.singular.algebraic.push_back({factor, rk});
        out.singular_ranks.push_back(rk);
    }
    return out;
}

KernelSum kernel_sum(const SkewPencil& p, int sample_budget, std::uint64_t seed) {
    const Eigen::Index n = p.size();
    if (sample_budget < n + 1)
        throw InsufficientSamplesError("kernel sum needs at least n + 1 = " + std::to_string(n + 1) +
                                       " regular parameters, budget is " + std::to_string(sample_budget));
    if (all_zero(p.a) && all_zero(p.b))
        throw std::invalid_argument("zero pencil: no regular members");

    auto rng = stream_for(seed, "kernel-sum");
    const long bound = std::max<long>(4 * (sample_budget + 1), 50);
    std::set<long> used;
    struct Sample {
        long t;
        RankKernel rk;
    };
    std::vector<Sample> samples;
    // At most m < n + 1 parameters are singular, so the maximal rank over
    // budget + 1 distinct parameters is the generic rank.
    while (static_cast<int>(samples.size()) < sample_budget + 1) {
        const long t = draw_integer(rng, bound);
        if (!used.insert(t).second) continue;
        samples.push_back({t, rank_and_kernel(p.member(PencilParam::finite(t)))});
    }
    Eigen::Index m = 0;
    for (const auto& s : samples) m = std::max(m, s.rk.rank);
    std::vector<const Sample*> regular;
    for (const auto& s : samples)
        if (s.rk.rank == m) regular.push_back(&s);
    int attempts = 0;
    std::deque<Sample> extra;
    while (static_cast<int>(regular.size()) < sample_budget + 1) {
        if (++attempts > 4 * (sample_budget + 1))
            throw InsufficientSamplesError("could not find enough regular parameters");
        const long t = draw_integer(rng, bound);
        if (!used.insert(t).second) continue;
        extra.push_back({t, rank_and_kernel(p.member(PencilParam::finite(t)))});
        if (extra.back().rk.rank == m) regular.push_back(&extra.back());
    }

    auto span_of = [&](std::size_t count) {
        Eigen::Index cols = 0;
        for (std::size_t k = 0; k < count; ++k) cols += regular[k]->rk.kernel.cols();
        QMatrix all = zero_matrix(n, cols);
        Eigen::Index at = 0;
        for (std::size_t k = 0; k < count; ++k) {
            const auto& ker = regular[k]->rk.kernel;
            all.middleCols(at, ker.cols()) = ker;
            at += ker.cols();
        }
        return column_span_basis(all);
    };
    KernelSum out;
    out.basis = span_of(sample_budget);
    out.dim = out.basis.cols();
    for (int k = 0; k < sample_budget; ++k) out.params.push_back(Rational(regular[k]->t));
    out.stabilized = span_of(sample_budget + 1).cols() == out.dim;
    return out;
}

PencilProfile jk_profile(const SkewPencil& p, std::uint64_t seed) {
    PencilProfile out;
    out.size = p.size();
    const auto analysis = singular_parameters(p);
    out.generic_rank = analysis.generic_rank;
    out.singular = analysis.singular;
    const auto ks = kernel_sum(p, static_cast<int>(p.size()) + 1, seed);
    out.kernel_sum_dim = ks.dim;
    out.jordan_line_count = out.singular.line_count();
    out.kronecker_block_count = out.size - out.generic_rank;
    const Eigen::Index deficit = out.size - out.generic_rank / 2 - out.kernel_sum_dim;
    out.jordan_dimension = 2 * deficit;

    Eigen::Index drop_pairs = 0;
    {
        std::size_t k = 0;
        for (; k < out.singular.finite.size() + (out.singular.infinity ? 1 : 0); ++k)
            drop_pairs += (out.generic_rank - analysis.singular_ranks[k]) / 2;
        for (const auto& a : out.singular.algebraic)
            drop_pairs += a.factor.degree() * (out.generic_rank - analysis.singular_ranks[k++]) / 2;
    }
    out.consistent = true;
    auto fail = [&](const std::string& why) {
        if (out.consistent) out.consistency_detail = why;
        out.consistent = false;
    };
    if (out.generic_rank % 2 != 0) fail("generic rank is odd");
    if (!ks.stabilized) fail("kernel sum did not stabilize");
    if (deficit < 0) fail("kernel sum larger than n - m/2");
    if ((deficit == 0) != out.singular.empty()) fail("Jordan part and singular lines disagree");
    if (deficit < drop_pairs) fail("rank drops exceed the Jordan part");
    return out;
}

QMatrix intersect_spans(const QMatrix& u, const QMatrix& v) {
    if (u.cols() == 0 || v.cols() == 0) return zero_matrix(u.rows(), 0);
    QMatrix joined(u.rows(), u.cols() + v.cols());
    joined.leftCols(u.cols()) = u;
    joined.rightCols(v.cols()) = -v;
    const QMatrix ker = kernel_basis(joined);
    if (ker.cols() == 0) return zero_matrix(u.rows(), 0);
    return column_span_basis(QMatrix(u * ker.topRows(u.cols())));
}

JordanLineCheck check_single_jordan_line(const SkewPencil& p, std::uint64_t seed) {
    JordanLineCheck out;
    const auto analysis = singular_parameters(p);
    const auto& sing = analysis.singular;
    const Eigen::Index n = p.size();
    const Eigen::Index m = analysis.generic_rank;
    if (sing.line_count() != 1 || !sing.algebraic.empty()) {
        out.failed_hypothesis = "singular set is not a single rational line";
        return out;
    }
    const PencilParam c_param = sing.infinity ? PencilParam::infinity() : PencilParam::finite(sing.finite.front());
    const QMatrix c = p.member(c_param);
    const QMatrix a = c_param.is_infinity() ? p.a : p.b;
    const auto c_rk = rank_and_kernel(c);
    out.rank_c = c_rk.rank;
    out.rank_a_on_ker_c = exact_rank(QMatrix(c_rk.kernel.transpose() * a * c_rk.kernel));
    if (out.rank_c != m - 2) {
        out.failed_hypothesis = "rank of the singular member is not m - 2";
        return out;
    }
    if (out.rank_a_on_ker_c != 2) {
        out.failed_hypothesis = "restriction of A to ker C does not have rank 2";
        return out;
    }
    out.hypotheses_hold = true;
    const auto ks = kernel_sum(p, static_cast<int>(n) + 1, seed);
    out.dim_l = ks.dim;
    const QMatrix cap = intersect_spans(ks.basis, c_rk.kernel);
    out.dim_l_cap_ker_c = cap.cols();
    out.dim_l_cap_ker_c_ok = out.dim_l_cap_ker_c == n - m;
    out.dim_l_ok = out.dim_l == n - m / 2 - 1;
    const QMatrix pairing = c_rk.kernel.transpose() * a * cap;
    out.orthogonality_ok = all_zero(pairing);
    return out;
}

}  // namespace pcsub
