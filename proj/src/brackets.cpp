#include "pcsub/brackets.hpp"

#include <algorithm>

namespace pcsub {

namespace {

LinearForm project(const LinearForm& f, const VariablePartition& part, bool second) {
    LinearForm out;
    for (const auto& entry : f)
        if (part.second[entry.first] == second) out.push_back(entry);
    return out;
}

LinearForm combine(const LinearForm& a, const LinearForm& b, const Rational& t) {
    LinearForm out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            if (!t.is_zero()) out.emplace_back(b[j].first, t * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second + t * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

BracketTable contracted_table(const Splitting& s, bool zero_end) {
    const auto& g = *s.algebra;
    const auto part = s.partition();
    BracketTable out(g.dim());
    // zero end keeps h×h whole and projects mixed pairs to r; ∞ swaps the roles of h and r
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = 0; j < g.dim(); ++j) {
            const bool si = part.second[i], sj = part.second[j];
            if (si == sj) {
                if (si != zero_end) out.at(i, j) = g.constants()(i, j);
            } else {
                out.at(i, j) = project(g.constants()(i, j), part, zero_end);
            }
        }
    }
    return out;
}

BracketTable family_table(const Splitting& s, const Rational& t) {
    const auto zero = contracted_table(s, true);
    const auto inf = contracted_table(s, false);
    BracketTable out(zero.dim());
    for (std::size_t i = 0; i < zero.dim(); ++i)
        for (std::size_t j = 0; j < zero.dim(); ++j) out.at(i, j) = combine(zero(i, j), inf(i, j), t);
    return out;
}

PoissonStructure PoissonStructure::lie(const LieAlgebra& g) { return PoissonStructure(g.constants()); }

PoissonStructure PoissonStructure::of_splitting(const Splitting& s, const BracketParam& t) {
    if (t.is_infinity()) return PoissonStructure(contracted_table(s, false));
    if (t.value->is_zero()) return PoissonStructure(contracted_table(s, true));
    return PoissonStructure(family_table(s, *t.value));
}

Poly PoissonStructure::basis_bracket(std::size_t i, std::size_t j) const {
    Poly out(dim());
    for (const auto& [k, c] : table_(i, j)) {
        Exponent e(dim(), 0);
        e[k] = 1;
        out.add_term(e, c);
    }
    return out;
}

Poly PoissonStructure::bracket(const Poly& p, const Poly& q) const {
    if (p.nvars() != dim() || q.nvars() != dim())
        throw std::invalid_argument("polynomial and bracket dimensions differ");
    Poly out(dim());
    Exponent e(dim(), 0);
    // {a x^m, b x^n} = sum_{i,j} a b m_i n_j x^(m+n-e_i-e_j) {x_i, x_j}
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : q.terms()) {
            const Rational base = cp * cq;
            for (std::size_t i = 0; i < dim(); ++i) {
                if (mp[i] == 0) continue;
                for (std::size_t j = 0; j < dim(); ++j) {
                    if (mq[j] == 0) continue;
                    const auto& form = table_(i, j);
                    if (form.empty()) continue;
                    for (std::size_t v = 0; v < dim(); ++v) e[v] = static_cast<std::uint8_t>(mp[v] + mq[v]);
                    --e[i];
                    --e[j];
                    const Rational w = base * Rational(static_cast<long>(mp[i]) * mq[j]);
                    for (const auto& [k, c] : form) {
                        ++e[k];
                        out.add_term(e, w * c);
                        --e[k];
                    }
                }
            }
        }
    }
    return out;
}

QMatrix PoissonStructure::tensor_at(const QVector& xi) const {
    if (static_cast<std::size_t>(xi.size()) != dim()) throw std::invalid_argument("point has wrong dimension");
    QMatrix out = zero_matrix(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            for (const auto& [k, c] : table_(i, j)) out(i, j) += c * xi(k);
    return out;
}

Poly lie_poisson(const Poly& p, const Poly& q, const LieAlgebra& g) {
    return PoissonStructure::lie(g).bracket(p, q);
}

Poly bracket_t(const Poly& p, const Poly& q, const Splitting& s, const BracketParam& t) {
    return PoissonStructure::of_splitting(s, t).bracket(p, q);
}

QMatrix tensor_at(const Splitting& s, const BracketParam& t, const QVector& xi) {
    return PoissonStructure::of_splitting(s, t).tensor_at(xi);
}

SkewPencil pencil_at(const Splitting& s, const QVector& xi) {
    return {tensor_at(s, BracketParam::finite(0), xi), tensor_at(s, BracketParam::infinity(), xi)};
}

}  // namespace pcsub
