#include "pcsub/invariants.hpp"

#include "pcsub/brackets.hpp"
#include "pcsub/linalg.hpp"

#include <algorithm>
#include <map>

namespace pcsub {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, std::size_t nvars) {
    const std::size_t n = a.size();
    PolyMatrix out(n, std::vector<Poly>(n, Poly(nvars)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// tr(A B) without forming the product
Poly trace_of_product(const PolyMatrix& a, const PolyMatrix& b, std::size_t nvars) {
    Poly out(nvars);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!a[i][j].is_zero() && !b[j][i].is_zero()) out += a[i][j] * b[j][i];
    return out;
}

Poly trace(const PolyMatrix& a, std::size_t nvars) {
    Poly out(nvars);
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i][i];
    return out;
}

class Pfaffian {
public:
    Pfaffian(const PolyMatrix& a, std::size_t nvars) : a_(a), nvars_(nvars) {}

    Poly of(std::uint32_t set) {
        if (set == 0) return Poly::constant(nvars_, 1);
        if (auto it = memo_.find(set); it != memo_.end()) return it->second;
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < 32; ++k)
            if (set & (1u << k)) idx.push_back(k);
        Poly out(nvars_);
        const std::size_t first = idx[0];
        for (std::size_t pos = 1; pos < idx.size(); ++pos) {
            const Poly& entry = a_[first][idx[pos]];
            if (entry.is_zero()) continue;
            const std::uint32_t rest = set & ~(1u << first) & ~(1u << idx[pos]);
            Poly term = entry * of(rest);
            if (pos % 2 == 0) term = -term;
            out += term;
        }
        memo_.emplace(set, out);
        return out;
    }

private:
    const PolyMatrix& a_;
    std::size_t nvars_;
    std::map<std::uint32_t, Poly> memo_;
};

struct BlockInvariant {
    Poly poly;
    int degree;
    std::string origin;
};

std::vector<BlockInvariant> block_invariants(const LieAlgebra& g, const RealizationBlock& block, const QMatrix& ginv) {
    const std::size_t n = g.dim();
    const std::size_t size = block.size;
    // y_j = sum_i ginv(j,i) x_i is the coordinate of basis element j in the generic element
    std::vector<Poly> dual(n, Poly(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!ginv(j, i).is_zero()) dual[j] += Poly::variable(n, i, ginv(j, i));
    PolyMatrix m(size, std::vector<Poly>(size, Poly(n)));
    for (std::size_t j = 0; j < n; ++j) {
        const QMatrix& x = g.realization()[j];
        for (std::size_t p = 0; p < size; ++p)
            for (std::size_t q = 0; q < size; ++q) {
                const Rational& c = x(block.offset + p, block.offset + q);
                if (!c.is_zero()) m[p][q] += dual[j] * c;
            }
    }

    int top = 0;
    std::vector<int> wanted;
    switch (block.series) {
        case Series::A:
            for (int k = 2; k <= block.rank + 1; ++k) wanted.push_back(k);
            break;
        case Series::B:
        case Series::C:
            for (int k = 2; k <= 2 * block.rank; k += 2) wanted.push_back(k);
            break;
        case Series::D:
            for (int k = 2; k <= 2 * block.rank - 2; k += 2) wanted.push_back(k);
            break;
    }
    top = wanted.back();

    // powers M^1..M^ceil(top/2); power sums via tr(M^a M^b)
    std::vector<PolyMatrix> powers{m};
    const int half = (top + 1) / 2;
    while (static_cast<int>(powers.size()) < half) powers.push_back(multiply(powers.back(), m, n));
    std::vector<Poly> p(top + 1, Poly(n));
    const bool odd_vanish = block.series != Series::A;
    for (int k = 1; k <= top; ++k) {
        if (odd_vanish && k % 2 == 1) continue;
        const int a = (k + 1) / 2, b = k - a;
        p[k] = b == 0 ? trace(powers[a - 1], n) : trace_of_product(powers[a - 1], powers[b - 1], n);
    }
    // Newton: k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i
    std::vector<Poly> e(top + 1, Poly(n));
    e[0] = Poly::constant(n, 1);
    for (int k = 1; k <= top; ++k) {
        Poly acc(n);
        for (int i = 1; i <= k; ++i) {
            if (p[i].is_zero() || e[k - i].is_zero()) continue;
            Poly term = e[k - i] * p[i];
            acc += (i % 2 == 1) ? term : -term;
        }
        e[k] = acc * Rational(1, k);
    }
    std::vector<BlockInvariant> out;
    for (int k : wanted) {
        // coefficient of λ^(N-k) in det(λ - M) is (-1)^k e_k
        out.push_back({k % 2 == 0 ? e[k] : -e[k], k, "charpoly-coefficient-" + std::to_string(k)});
    }
    if (block.series == Series::D) {
        PolyMatrix jm(size, std::vector<Poly>(size, Poly(n)));
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t k = 0; k < size; ++k) {
                const Rational& c = block.form(r, k);
                if (c.is_zero()) continue;
                for (std::size_t q = 0; q < size; ++q)
                    if (!m[k][q].is_zero()) jm[r][q] += m[k][q] * c;
            }
        Pfaffian pf(jm, n);
        out.push_back({pf.of((1u << size) - 1), block.rank, "pfaffian"});
    }
    // nondecreasing degree; equal degrees keep charpoly before Pfaffian
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.degree < y.degree; });
    return out;
}

}  // namespace

InvariantSet basic_invariants(const LieAlgebra& g) {
    const auto ginv = inverse_exact(g.form());
    if (!ginv) throw std::invalid_argument("invariant form is degenerate");
    InvariantSet out;
    out.realization = g.realization_note();
    std::vector<std::vector<BlockInvariant>> per_block;
    for (const auto& block : g.blocks()) per_block.push_back(block_invariants(g, block, *ginv));
    const std::size_t count = per_block.front().size();
    for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t b = 0; b < per_block.size(); ++b) {
            const auto& inv = per_block[b][j];
            out.polys.push_back(inv.poly);
            out.degrees.push_back(inv.degree);
            InvariantInfo info;
            info.base_index = static_cast<int>(j);
            info.origin = inv.origin;
            if (per_block.size() == 1) {
                info.label = "H" + std::to_string(j + 1);
            } else {
                info.copy = static_cast<int>(b) + 1;
                info.label = "H" + std::to_string(j + 1) + (b == 0 ? ",I" : ",II");
            }
            out.info.push_back(info);
        }
    }
    return out;
}

bool check_adg_invariance(const Poly& h, const LieAlgebra& g) {
    const auto lie = PoissonStructure::lie(g);
    for (std::size_t k = 0; k < g.dim(); ++k)
        if (!lie.bracket(h, Poly::variable(g.dim(), k)).is_zero()) return false;
    return true;
}

}  // namespace pcsub
