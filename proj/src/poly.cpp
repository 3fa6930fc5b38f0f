#include "pcsub/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcsub {

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
    // FNV-1a
    std::size_t h = 1469598103934665603ULL;
    for (auto v : e) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return h;
}

int total_degree(const Exponent& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

bool graded_lex_less(const Exponent& a, const Exponent& b) {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

BiDegree bidegree_of(const Exponent& e, const VariablePartition& part) {
    BiDegree bd;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (part.second[i])
            bd.r += e[i];
        else
            bd.h += e[i];
    }
    return bd;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index, const Rational& c) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    Exponent e(nvars, 0);
    e[index] = 1;
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

Poly Poly::monomial(Exponent exponent, const Rational& c) {
    Poly p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool Poly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        const int td = total_degree(e);
        if (d >= 0 && td != d) return false;
        d = td;
    }
    return true;
}

Rational Poly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::size_t> Poly::support() const {
    std::vector<bool> used(nvars_, false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] != 0) used[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nvars_; ++i)
        if (used[i]) out.push_back(i);
    return out;
}

std::vector<std::pair<Exponent, Rational>> Poly::sorted_terms() const {
    std::vector<std::pair<Exponent, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return graded_lex_less(b.first, a.first); });
    return out;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match polynomial dimension");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::require_same_dim(const Poly& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("polynomial dimension mismatch");
}

Poly& Poly::operator+=(const Poly& other) {
    require_same_dim(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    require_same_dim(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_dim(b);
    Poly out(a.nvars_);
    out.terms_.reserve(a.size() * b.size());
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= nvars_) throw std::out_of_range("variable index out of range");
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent d = e;
        --d[var];
        out.terms_.emplace(std::move(d), c * e[var]);
    }
    return out;
}

namespace {

// powers[i][k] = point[i]^k
std::vector<std::vector<Rational>> power_table(const QVector& point, int max_degree) {
    std::vector<std::vector<Rational>> powers(point.size());
    for (Eigen::Index i = 0; i < point.size(); ++i) {
        powers[i].resize(max_degree + 1);
        powers[i][0] = 1;
        for (int k = 1; k <= max_degree; ++k) powers[i][k] = powers[i][k - 1] * point(i);
    }
    return powers;
}

}  // namespace

Rational Poly::evaluate(const QVector& point) const {
    if (static_cast<std::size_t>(point.size()) != nvars_) throw std::invalid_argument("point dimension mismatch");
    const auto powers = power_table(point, std::max(degree(), 0));
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] != 0) m *= powers[i][e[i]];
        sum += m;
    }
    return sum;
}

Poly pow(const Poly& p, unsigned k) {
    Poly out = Poly::constant(p.nvars(), Rational(1));
    for (unsigned i = 0; i < k; ++i) out = out * p;
    return out;
}

std::vector<std::pair<BiDegree, Poly>> bihomogeneous_decompose(const Poly& p, const VariablePartition& part) {
    if (part.size() != p.nvars()) throw std::invalid_argument("partition size does not match polynomial dimension");
    if (!p.is_homogeneous()) throw std::invalid_argument("bihomogeneous decomposition requires a homogeneous polynomial");
    const int d = std::max(p.degree(), 0);
    std::vector<Poly> parts(d + 1, Poly(p.nvars()));
    for (const auto& [e, c] : p.terms()) parts[bidegree_of(e, part).h].add_term(e, c);
    std::vector<std::pair<BiDegree, Poly>> out;
    for (int i = 0; i <= d; ++i) {
        if (!parts[i].is_zero()) out.emplace_back(BiDegree{i, d - i}, std::move(parts[i]));
    }
    return out;
}

Poly bihomogeneous_component(const Poly& p, const VariablePartition& part, int h_degree) {
    if (part.size() != p.nvars()) throw std::invalid_argument("partition size does not match polynomial dimension");
    Poly out(p.nvars());
    for (const auto& [e, c] : p.terms())
        if (bidegree_of(e, part).h == h_degree) out.add_term(e, c);
    return out;
}

std::pair<BiDegree, Poly> top_component(const Poly& p, const VariablePartition& part, TopSide side) {
    if (p.is_zero()) throw std::invalid_argument("top component of the zero polynomial is undefined");
    auto comps = bihomogeneous_decompose(p, part);
    // comps is ascending in h-degree
    return side == TopSide::FirstSummandMax ? std::move(comps.back()) : std::move(comps.front());
}

Poly apply_phi(const Poly& p, const VariablePartition& part, const Rational& s) {
    if (s.is_zero()) throw std::invalid_argument("contraction scalar must be nonzero");
    if (part.size() != p.nvars()) throw std::invalid_argument("partition size does not match polynomial dimension");
    Poly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        const int r = bidegree_of(e, part).r;
        Rational scale = 1;
        for (int k = 0; k < r; ++k) scale *= s;
        out.add_term(e, c * scale);
    }
    return out;
}

QVector differential_at(const Poly& p, const QVector& point) {
    const std::size_t n = p.nvars();
    if (static_cast<std::size_t>(point.size()) != n) throw std::invalid_argument("point dimension mismatch");
    const auto powers = power_table(point, std::max(p.degree(), 0));
    QVector grad = zero_vector(n);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            Rational m = c * e[i];
            for (std::size_t j = 0; j < n; ++j) {
                const int k = (j == i) ? e[j] - 1 : e[j];
                if (k > 0) m *= powers[j][k];
            }
            grad(i) += m;
        }
    }
    return grad;
}

QMatrix jacobian_at(const std::vector<Poly>& polys, const QVector& point) {
    QMatrix jac = zero_matrix(polys.size(), point.size());
    for (std::size_t k = 0; k < polys.size(); ++k) jac.row(k) = differential_at(polys[k], point).transpose();
    return jac;
}

}  // namespace pcsub
