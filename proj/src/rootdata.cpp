#include "pcsub/rootdata.hpp"

#include "pcsub/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pcsub {

std::string to_string(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
    }
    return "?";
}

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::Borel: return "borel";
        case Scenario::Involution: return "involution";
        case Scenario::Manin: return "manin";
    }
    return "?";
}

Series parse_series(const std::string& text) {
    if (text == "A") return Series::A;
    if (text == "B") return Series::B;
    if (text == "C") return Series::C;
    if (text == "D") return Series::D;
    throw UnsupportedError("unknown series '" + text + "' (expected A, B, C or D)");
}

Scenario parse_scenario(const std::string& text) {
    if (text == "borel") return Scenario::Borel;
    if (text == "involution") return Scenario::Involution;
    if (text == "manin") return Scenario::Manin;
    throw UnsupportedError("unsupported scenario '" + text + "' (expected borel, involution or manin)");
}

namespace {

void add_to_form(LinearForm& form, std::size_t index, const Rational& value) {
    if (value.is_zero()) return;
    auto it = std::lower_bound(form.begin(), form.end(), index,
                               [](const auto& entry, std::size_t idx) { return entry.first < idx; });
    if (it != form.end() && it->first == index) {
        it->second += value;
        if (it->second.is_zero()) form.erase(it);
    } else {
        form.insert(it, {index, value});
    }
}

LinearForm to_form(const QVector& v) {
    LinearForm out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) out.emplace_back(static_cast<std::size_t>(i), v(i));
    return out;
}

QMatrix unit(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
    QMatrix m = zero_matrix(n, n);
    m(i, j) = 1;
    return m;
}

}  // namespace

LieAlgebra LieAlgebra::from_matrices(Series series, int base_rank, bool doubled, std::vector<BasisElement> basis,
                                     std::vector<QMatrix> matrices, std::vector<RealizationBlock> blocks,
                                     std::string realization) {
    if (basis.size() != matrices.size() || matrices.empty())
        throw std::invalid_argument("basis labels and matrices must be nonempty and of equal length");
    LieAlgebra g;
    g.series_ = series;
    g.base_rank_ = base_rank;
    g.doubled_ = doubled;
    g.basis_ = std::move(basis);
    for (std::size_t i = 0; i < g.basis_.size(); ++i) g.basis_[i].index = i;
    g.matrices_ = std::move(matrices);
    g.blocks_ = std::move(blocks);
    g.realization_ = std::move(realization);

    const std::size_t n = g.matrices_.size();
    const Eigen::Index big = g.matrices_[0].rows();
    QMatrix vec_t = zero_matrix(n, big * big);
    for (std::size_t i = 0; i < n; ++i)
        for (Eigen::Index p = 0; p < big; ++p)
            for (Eigen::Index q = 0; q < big; ++q) vec_t(i, p * big + q) = g.matrices_[i](p, q);
    const auto ech = row_echelon(vec_t);
    if (ech.pivot_cols.size() != n) throw std::invalid_argument("realization matrices are linearly dependent");
    QMatrix probe_block(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto pos = ech.pivot_cols[k];
        g.probes_.emplace_back(pos / big, pos % big);
        for (std::size_t i = 0; i < n; ++i) probe_block(k, i) = g.matrices_[i](pos / big, pos % big);
    }
    g.extract_ = *inverse_exact(probe_block);

    g.constants_ = BracketTable(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const QMatrix c = g.matrices_[i] * g.matrices_[j] - g.matrices_[j] * g.matrices_[i];
            auto coords = g.coordinates_of(c);
            if (!coords) throw std::invalid_argument("span of the realization is not closed under the bracket");
            g.constants_.at(i, j) = to_form(*coords);
            g.constants_.at(j, i) = to_form(-*coords);
        }
    }
    g.form_ = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.form_(i, j) = (g.matrices_[i] * g.matrices_[j]).trace();
    return g;
}

std::vector<std::string> labels_of(const LieAlgebra& g) {
    std::vector<std::string> out;
    for (const auto& b : g.basis()) out.push_back(b.label);
    return out;
}

AlgebraDocument document_of(const LieAlgebra& g) {
    return {g.series(), g.base_rank(), g.doubled(), g.realization_note(), labels_of(g), g.constants(), g.form()};
}

std::vector<std::size_t> LieAlgebra::indices_of(BasisKind kind) const {
    std::vector<std::size_t> out;
    for (const auto& b : basis_)
        if (b.kind == kind) out.push_back(b.index);
    return out;
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
    for (const auto& b : basis_)
        if (b.label == label) return b.index;
    return std::nullopt;
}

std::optional<QVector> LieAlgebra::coordinates_of(const QMatrix& m) const {
    const std::size_t n = basis_.size();
    QVector probe(n);
    for (std::size_t k = 0; k < n; ++k) probe(k) = m(probes_[k].first, probes_[k].second);
    QVector coords = extract_ * probe;
    if (matrix_of(coords) != m) return std::nullopt;
    return coords;
}

QMatrix LieAlgebra::matrix_of(const QVector& coords) const {
    QMatrix out = zero_matrix(matrices_[0].rows(), matrices_[0].cols());
    for (Eigen::Index i = 0; i < coords.size(); ++i)
        if (!coords(i).is_zero()) out += coords(i) * matrices_[i];
    return out;
}

QVector LieAlgebra::bracket(const QVector& x, const QVector& y) const {
    QVector out = zero_vector(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x(i).is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y(j).is_zero()) continue;
            const Rational w = x(i) * y(j);
            for (const auto& [k, c] : constants_(i, j)) out(k) += w * c;
        }
    }
    return out;
}

LieAlgebra LieAlgebra::with_perturbed_constant(std::size_t i, std::size_t j, std::size_t k,
                                               const Rational& delta) const {
    if (i >= dim() || j >= dim() || k >= dim()) throw std::out_of_range("structure constant index out of range");
    LieAlgebra out = *this;
    add_to_form(out.constants_.at(i, j), k, delta);
    if (i != j) add_to_form(out.constants_.at(j, i), k, -delta);
    return out;
}

std::size_t classical_dimension(Series s, int l) {
    switch (s) {
        case Series::A: return static_cast<std::size_t>(l * (l + 2));
        case Series::B:
        case Series::C: return static_cast<std::size_t>(l * (2 * l + 1));
        case Series::D: return static_cast<std::size_t>(l * (2 * l - 1));
    }
    return 0;
}

bool is_supported(Series s, int l) {
    switch (s) {
        case Series::A: return l >= 1 && l <= 4;
        case Series::B:
        case Series::C: return l == 2 || l == 3;
        case Series::D: return l == 4;
    }
    return false;
}

namespace {

struct RootVector {
    QMatrix matrix;
    std::vector<int> root;
    Eigen::Index row = 0, col = 0;
};

std::vector<int> diagonal_weight(Series s, int l, Eigen::Index size, Eigen::Index k) {
    if (s == Series::A) {
        std::vector<int> w(size, 0);
        w[k] = 1;
        return w;
    }
    std::vector<int> w(l, 0);
    if (k < l) w[k] = 1;
    if (k >= size - l) w[size - 1 - k] = -1;
    return w;
}

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

std::string position_label(char prefix, Eigen::Index i, Eigen::Index j) {
    std::ostringstream os;
    os << prefix << (i + 1) << (j + 1);
    return os.str();
}

// Simple roots ordered by first nonzero coordinate, then lexicographically.
std::vector<std::size_t> find_simple_roots(const std::vector<std::vector<int>>& positive) {
    std::vector<std::size_t> simple;
    for (std::size_t a = 0; a < positive.size(); ++a) {
        bool decomposable = false;
        for (std::size_t b = 0; b < positive.size() && !decomposable; ++b) {
            const auto rest = minus(positive[a], positive[b]);
            decomposable = std::find(positive.begin(), positive.end(), rest) != positive.end();
        }
        if (!decomposable) simple.push_back(a);
    }
    auto first_nonzero = [](const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return v.size();
    };
    std::sort(simple.begin(), simple.end(), [&](std::size_t a, std::size_t b) {
        const auto fa = first_nonzero(positive[a]);
        const auto fb = first_nonzero(positive[b]);
        if (fa != fb) return fa < fb;
        return positive[a] < positive[b];
    });
    return simple;
}

}  // namespace

LieAlgebra build_classical(Series series, int l) {
    if (!is_supported(series, l)) {
        throw UnsupportedError("unsupported classical algebra " + to_string(series) + "_" + std::to_string(l) +
                               " (supported: A1-A4, B2-B3, C2-C3, D4)");
    }
    const Eigen::Index size = series == Series::A ? l + 1 : (series == Series::B ? 2 * l + 1 : 2 * l);

    QMatrix form;
    if (series != Series::A) {
        form = zero_matrix(size, size);
        for (Eigen::Index k = 0; k < size; ++k) form(k, size - 1 - k) = (series == Series::C && k >= l) ? -1 : 1;
    }

    // Root vectors from elementary matrices projected onto the algebra.
    std::vector<RootVector> positive, negative;
    for (Eigen::Index i = 0; i < size; ++i) {
        for (Eigen::Index j = 0; j < size; ++j) {
            if (i == j) continue;
            QMatrix x;
            if (series == Series::A) {
                x = unit(size, i, j);
            } else {
                const Eigen::Index ip = size - 1 - i, jp = size - 1 - j;
                if (std::make_pair(jp, ip) < std::make_pair(i, j)) continue;  // same element as (j', i')
                const QMatrix jinv = *inverse_exact(form);
                x = unit(size, i, j) - jinv * unit(size, j, i) * form;
                if (x(i, j).is_zero()) continue;
                x /= Rational(x(i, j));
            }
            RootVector rv{x, minus(diagonal_weight(series, l, size, i), diagonal_weight(series, l, size, j)), i, j};
            (i < j ? positive : negative).push_back(std::move(rv));
        }
    }

    std::vector<std::vector<int>> roots;
    for (const auto& rv : positive) roots.push_back(rv.root);
    const auto simple = find_simple_roots(roots);
    QMatrix simple_matrix = zero_matrix(roots[0].size(), l);
    for (int c = 0; c < l; ++c)
        for (std::size_t r = 0; r < roots[0].size(); ++r) simple_matrix(r, c) = roots[simple[c]][r];
    std::vector<std::vector<int>> coeffs;
    for (const auto& root : roots) {
        QVector rhs(root.size());
        for (std::size_t r = 0; r < root.size(); ++r) rhs(r) = root[r];
        const auto sol = solve_exact(simple_matrix, rhs);
        if (!sol) throw std::logic_error("positive root outside the simple-root lattice");
        std::vector<int> c(l);
        for (int k = 0; k < l; ++k) c[k] = static_cast<int>(numerator_of((*sol)(k)).convert_to<long>());
        coeffs.push_back(std::move(c));
    }
    auto height = [&](std::size_t id) {
        int h = 0;
        for (int v : coeffs[id]) h += v;
        return h;
    };
    std::vector<std::size_t> order(positive.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (height(a) != height(b)) return height(a) < height(b);
        return std::make_pair(positive[a].row, positive[a].col) < std::make_pair(positive[b].row, positive[b].col);
    });

    std::vector<BasisElement> basis;
    std::vector<QMatrix> mats;
    RootSystem rs;
    std::vector<std::size_t> new_id(positive.size());
    for (std::size_t k = 0; k < order.size(); ++k) new_id[order[k]] = k;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& rv = positive[order[k]];
        basis.push_back({basis.size(), position_label('e', rv.row, rv.col), BasisKind::PositiveRoot});
        mats.push_back(rv.matrix);
        rs.positive_roots.push_back(rv.root);
        rs.simple_coefficients.push_back(coeffs[order[k]]);
        rs.e_index.push_back(basis.size() - 1);
    }
    for (int k = 0; k < l; ++k) {
        QMatrix h = series == Series::A ? QMatrix(unit(size, k, k) - unit(size, k + 1, k + 1))
                                        : QMatrix(unit(size, k, k) - unit(size, size - 1 - k, size - 1 - k));
        basis.push_back({basis.size(), "h" + std::to_string(k + 1), BasisKind::Cartan});
        mats.push_back(std::move(h));
        rs.cartan_index.push_back(basis.size() - 1);
    }
    rs.f_index.resize(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& pos = positive[order[k]];
        std::vector<int> neg_root(pos.root.size());
        for (std::size_t r = 0; r < neg_root.size(); ++r) neg_root[r] = -pos.root[r];
        auto it = std::find_if(negative.begin(), negative.end(), [&](const RootVector& rv) { return rv.root == neg_root; });
        if (it == negative.end()) throw std::logic_error("missing negative root vector");
        basis.push_back({basis.size(), position_label('f', pos.row, pos.col), BasisKind::NegativeRoot});
        mats.push_back(it->matrix);
        rs.f_index[k] = basis.size() - 1;
    }
    for (std::size_t k = 0; k < simple.size(); ++k) rs.simple_roots.push_back(new_id[simple[k]]);
    std::size_t top = 0;
    for (std::size_t k = 0; k < rs.simple_coefficients.size(); ++k) {
        int hk = 0, ht = 0;
        for (int v : rs.simple_coefficients[k]) hk += v;
        for (int v : rs.simple_coefficients[top]) ht += v;
        if (hk > ht) top = k;
    }
    rs.highest_root = top;
    rs.highest_root_coefficients = rs.simple_coefficients[top];

    std::string note;
    switch (series) {
        case Series::A:
            note = "sl_" + std::to_string(size) +
                   ": root vectors E_ij, Cartan E_kk - E_(k+1)(k+1), trace form of the defining representation";
            break;
        case Series::B:
        case Series::D:
            note = "so_" + std::to_string(size) +
                   " preserving the antidiagonal symmetric form J: root vectors E_ij - J^-1 E_ji J scaled to leading "
                   "entry 1, Cartan E_kk - E_k'k', trace form of the defining representation";
            break;
        case Series::C:
            note = "sp_" + std::to_string(size) +
                   " preserving the antidiagonal alternating form J: root vectors E_ij - J^-1 E_ji J scaled to "
                   "leading entry 1, Cartan E_kk - E_k'k', trace form of the defining representation";
            break;
    }
    std::vector<RealizationBlock> blocks{{0, static_cast<std::size_t>(size), series, l, form}};
    LieAlgebra g = LieAlgebra::from_matrices(series, l, false, std::move(basis), std::move(mats), std::move(blocks),
                                             std::move(note));
    g.set_roots(std::move(rs));
    return g;
}

namespace {

QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
    QMatrix out = zero_matrix(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

std::vector<RealizationBlock> doubled_blocks(const LieAlgebra& g) {
    RealizationBlock first = g.blocks().at(0);
    RealizationBlock second = first;
    second.offset = first.size;
    return {first, second};
}

}  // namespace

LieAlgebra build_double(const LieAlgebra& g) {
    if (g.doubled()) throw std::invalid_argument("algebra is already a product");
    std::vector<BasisElement> basis;
    std::vector<QMatrix> mats;
    const QMatrix zero = zero_matrix(g.realization()[0].rows(), g.realization()[0].cols());
    for (const auto& b : g.basis()) {
        basis.push_back({0, "(" + b.label + ",0)", b.kind});
        mats.push_back(block_diag(g.realization()[b.index], zero));
    }
    for (const auto& b : g.basis()) {
        basis.push_back({0, "(0," + b.label + ")", b.kind});
        mats.push_back(block_diag(zero, g.realization()[b.index]));
    }
    return LieAlgebra::from_matrices(g.series(), g.base_rank(), true, std::move(basis), std::move(mats),
                                     doubled_blocks(g), g.realization_note() + "; direct product g x g, block diagonal");
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

// [sum a_m x_m, x_k] as a linear form
LinearForm bracket_with_basis(const BracketTable& c, const LinearForm& a, std::size_t k) {
    LinearForm out;
    for (const auto& [m, am] : a)
        for (const auto& [p, v] : c(m, k)) add_to_form(out, p, am * v);
    return out;
}

LinearForm sum_forms(std::initializer_list<const LinearForm*> forms) {
    LinearForm out;
    for (const auto* f : forms)
        for (const auto& [i, v] : *f) add_to_form(out, i, v);
    return out;
}

Rational pair_with_form(const QMatrix& form, const LinearForm& a, std::size_t k) {
    Rational s = 0;
    for (const auto& [i, v] : a) s += v * form(i, k);
    return s;
}

}  // namespace

std::optional<std::array<std::size_t, 3>> jacobi_violation(const BracketTable& c) {
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto t1 = bracket_with_basis(c, c(i, j), k);
                const auto t2 = bracket_with_basis(c, c(j, k), i);
                const auto t3 = bracket_with_basis(c, c(k, i), j);
                if (!sum_forms({&t1, &t2, &t3}).empty()) return std::array<std::size_t, 3>{i, j, k};
            }
    return std::nullopt;
}

ValidationReport validate_structure(const LieAlgebra& g) {
    ValidationReport report;
    const auto& c = g.constants();
    const std::size_t n = g.dim();

    {
        ValidationCheck chk{"antisymmetry", true, ""};
        for (std::size_t i = 0; i < n && chk.passed; ++i) {
            for (std::size_t j = 0; j < n && chk.passed; ++j) {
                LinearForm neg = c(j, i);
                for (auto& [k, v] : neg) v = -v;
                if (c(i, j) != neg) {
                    chk.passed = false;
                    chk.detail = "[" + g.basis()[i].label + "," + g.basis()[j].label + "] != -[" +
                                 g.basis()[j].label + "," + g.basis()[i].label + "]";
                }
            }
        }
        report.checks.push_back(chk);
    }
    {
        ValidationCheck chk{"jacobi", true, ""};
        if (const auto bad = jacobi_violation(c)) {
            chk.passed = false;
            chk.detail = "Jacobi fails on (" + g.basis()[(*bad)[0]].label + "," + g.basis()[(*bad)[1]].label + "," +
                         g.basis()[(*bad)[2]].label + ")";
        }
        report.checks.push_back(chk);
    }
    {
        ValidationCheck chk{"form-symmetric-nondegenerate", true, ""};
        if (g.form() != QMatrix(g.form().transpose())) {
            chk.passed = false;
            chk.detail = "form is not symmetric";
        } else if (exact_rank(g.form()) != static_cast<Eigen::Index>(n)) {
            chk.passed = false;
            chk.detail = "form is degenerate";
        }
        report.checks.push_back(chk);
    }
    {
        ValidationCheck chk{"form-invariance", true, ""};
        for (std::size_t i = 0; i < n && chk.passed; ++i) {
            for (std::size_t j = 0; j < n && chk.passed; ++j) {
                for (std::size_t k = 0; k < n && chk.passed; ++k) {
                    // form([x_i,x_j], x_k) + form(x_j, [x_i,x_k]) = 0
                    const Rational lhs = pair_with_form(g.form(), c(i, j), k) + pair_with_form(g.form(), c(i, k), j);
                    if (!lhs.is_zero()) {
                        chk.passed = false;
                        chk.detail = "invariance fails on (" + g.basis()[i].label + "," + g.basis()[j].label + "," +
                                     g.basis()[k].label + ")";
                    }
                }
            }
        }
        report.checks.push_back(chk);
    }
    {
        ValidationCheck chk{"dimension", true, ""};
        const std::size_t expected = classical_dimension(g.series(), g.base_rank()) * (g.doubled() ? 2 : 1);
        if (n != expected) {
            chk.passed = false;
            chk.detail = "dim " + std::to_string(n) + " != " + std::to_string(expected);
        }
        report.checks.push_back(chk);
    }
    return report;
}

VariablePartition Splitting::partition() const {
    VariablePartition p;
    p.second.assign(algebra->dim(), false);
    for (auto i : r_indices) p.second[i] = true;
    return p;
}

int Splitting::part_of(std::size_t index) const {
    if (std::find(r_indices.begin(), r_indices.end(), index) != r_indices.end()) return 1;
    if (std::find(h_indices.begin(), h_indices.end(), index) != h_indices.end()) return 0;
    throw std::out_of_range("index not covered by the splitting");
}

ValidationReport validate_splitting(const Splitting& s) {
    ValidationReport report;
    const auto& g = *s.algebra;
    const auto part = s.partition();

    auto closure = [&](const std::vector<std::size_t>& idx, bool second, const std::string& name) {
        ValidationCheck chk{name, true, ""};
        for (auto i : idx)
            for (auto j : idx)
                for (const auto& [k, v] : g.constants()(i, j))
                    if (part.second[k] != second && chk.passed) {
                        chk.passed = false;
                        chk.detail = "[" + g.basis()[i].label + "," + g.basis()[j].label + "] leaves the summand";
                    }
        report.checks.push_back(chk);
    };
    closure(s.h_indices, false, "h-closed");
    closure(s.r_indices, true, "r-closed");

    ValidationCheck chk{"complementary", true, ""};
    std::vector<int> seen(g.dim(), 0);
    for (auto i : s.h_indices) ++seen[i];
    for (auto i : s.r_indices) ++seen[i];
    if (std::any_of(seen.begin(), seen.end(), [](int v) { return v != 1; })) {
        chk.passed = false;
        chk.detail = "index sets do not partition the basis";
    } else {
        const auto big = g.realization()[0].rows();
        QMatrix vec = zero_matrix(big * big, g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (Eigen::Index p = 0; p < big; ++p)
                for (Eigen::Index q = 0; q < big; ++q) vec(p * big + q, i) = g.realization()[i](p, q);
        if (exact_rank(vec) != static_cast<Eigen::Index>(g.dim())) {
            chk.passed = false;
            chk.detail = "combined basis is not independent";
        }
    }
    report.checks.push_back(chk);
    return report;
}

Splitting splitting_borel_opposite(std::shared_ptr<const LieAlgebra> g) {
    if (!g->roots()) throw UnsupportedError("borel splitting requires a classical algebra in its standard basis");
    Splitting s;
    for (const auto& b : g->basis()) {
        if (b.kind == BasisKind::NegativeRoot)
            s.r_indices.push_back(b.index);
        else
            s.h_indices.push_back(b.index);
    }
    s.algebra = std::move(g);
    s.scenario = Scenario::Borel;
    return s;
}

Splitting splitting_involution_max_rank(const LieAlgebra& g) {
    if (g.series() != Series::A || g.doubled() || !g.roots())
        throw UnsupportedError("maximal-rank involution splitting is implemented for type A only");
    const auto& rs = *g.roots();
    std::vector<BasisElement> basis;
    std::vector<QMatrix> mats;
    for (std::size_t a = 0; a < rs.e_index.size(); ++a) {
        basis.push_back({0, g.basis()[rs.e_index[a]].label, BasisKind::PositiveRoot});
        mats.push_back(g.realization()[rs.e_index[a]]);
    }
    for (auto h : rs.cartan_index) {
        basis.push_back({0, g.basis()[h].label, BasisKind::Cartan});
        mats.push_back(g.realization()[h]);
    }
    for (std::size_t a = 0; a < rs.e_index.size(); ++a) {
        std::string label = g.basis()[rs.e_index[a]].label;
        label[0] = 'k';
        basis.push_back({0, label, BasisKind::Other});
        mats.push_back(g.realization()[rs.e_index[a]] - g.realization()[rs.f_index[a]]);
    }
    auto adapted = std::make_shared<LieAlgebra>(LieAlgebra::from_matrices(
        g.series(), g.base_rank(), false, std::move(basis), std::move(mats), g.blocks(),
        g.realization_note() + "; basis (e_alpha, h_i | k_alpha = e_alpha - f_alpha) adapted to b + so_n"));
    Splitting s;
    for (const auto& b : adapted->basis()) (b.kind == BasisKind::Other ? s.r_indices : s.h_indices).push_back(b.index);
    s.algebra = std::move(adapted);
    s.scenario = Scenario::Involution;
    return s;
}

Splitting splitting_manin(const LieAlgebra& g) {
    if (g.doubled() || !g.roots()) throw UnsupportedError("Manin splitting requires a classical simple algebra");
    if (g.base_rank() > 3) throw UnsupportedError("Manin splitting is supported for rank <= 3");
    const auto& rs = *g.roots();
    const QMatrix zero = zero_matrix(g.realization()[0].rows(), g.realization()[0].cols());
    std::vector<BasisElement> basis;
    std::vector<QMatrix> mats;
    for (auto e : rs.e_index) {
        basis.push_back({0, "(" + g.basis()[e].label + ",0)", BasisKind::PositiveRoot});
        mats.push_back(block_diag(g.realization()[e], zero));
    }
    for (auto h : rs.cartan_index) {
        const auto& lbl = g.basis()[h].label;
        basis.push_back({0, "(" + lbl + ",-" + lbl + ")", BasisKind::Other});
        mats.push_back(block_diag(g.realization()[h], QMatrix(-g.realization()[h])));
    }
    for (auto f : rs.f_index) {
        basis.push_back({0, "(0," + g.basis()[f].label + ")", BasisKind::NegativeRoot});
        mats.push_back(block_diag(zero, g.realization()[f]));
    }
    const std::size_t h_count = basis.size();
    for (const auto& b : g.basis()) {
        basis.push_back({0, "d(" + b.label + ")", b.kind == BasisKind::Cartan ? BasisKind::Cartan : BasisKind::Other});
        mats.push_back(block_diag(g.realization()[b.index], g.realization()[b.index]));
    }
    auto adapted = std::make_shared<LieAlgebra>(LieAlgebra::from_matrices(
        g.series(), g.base_rank(), true, std::move(basis), std::move(mats), doubled_blocks(g),
        g.realization_note() + "; g x g block diagonal in the basis (Delta_t^- + u x u_- | Delta_g)"));
    Splitting s;
    for (std::size_t i = 0; i < adapted->dim(); ++i) (i < h_count ? s.h_indices : s.r_indices).push_back(i);
    s.algebra = std::move(adapted);
    s.scenario = Scenario::Manin;
    return s;
}

Splitting make_splitting(Scenario scenario, const LieAlgebra& g) {
    switch (scenario) {
        case Scenario::Borel: return splitting_borel_opposite(std::make_shared<LieAlgebra>(g));
        case Scenario::Involution: return splitting_involution_max_rank(g);
        case Scenario::Manin: return splitting_manin(g);
    }
    throw UnsupportedError("unknown scenario");
}

QVector to_dual(const LieAlgebra& g, const QVector& element) { return g.form() * element; }

QVector coroot(const LieAlgebra& g, std::size_t root_id) {
    const auto& rs = g.roots().value();
    QVector e = zero_vector(g.dim()), f = zero_vector(g.dim());
    e(rs.e_index.at(root_id)) = 1;
    f(rs.f_index.at(root_id)) = 1;
    return g.bracket(e, f);
}

PrincipalTriple principal_nilpotent_point(const LieAlgebra& g) {
    if (!g.roots()) throw UnsupportedError("principal triple requires a classical algebra in its standard basis");
    const auto& rs = *g.roots();
    const int l = g.base_rank();
    const auto n = static_cast<Eigen::Index>(g.dim());
    PrincipalTriple tri;
    tri.e = zero_vector(n);
    for (auto s : rs.simple_roots) tri.e(rs.e_index[s]) = 1;

    // h in t with alpha_i(h) = 2 for every simple root
    QMatrix values = zero_matrix(l, l);
    for (int i = 0; i < l; ++i) {
        const auto ei = rs.e_index[rs.simple_roots[i]];
        for (int k = 0; k < l; ++k) {
            for (const auto& [idx, v] : g.constants()(rs.cartan_index[k], ei))
                if (idx == ei) values(i, k) = v;
        }
    }
    const auto hc = solve_exact(values, QVector::Constant(l, Rational(2)));
    if (!hc) throw std::logic_error("no Cartan element with all simple roots equal to 2");
    tri.h = zero_vector(n);
    for (int k = 0; k < l; ++k) tri.h(rs.cartan_index[k]) = (*hc)(k);

    // f = sum c_i f_i with [e, f] = h
    QMatrix cols = zero_matrix(n, l);
    for (int i = 0; i < l; ++i) {
        QVector fi = zero_vector(n);
        fi(rs.f_index[rs.simple_roots[i]]) = 1;
        cols.col(i) = g.bracket(tri.e, fi);
    }
    const auto fc = solve_exact(cols, tri.h);
    if (!fc) throw std::logic_error("principal triple has no f in the span of simple negative root vectors");
    tri.f = zero_vector(n);
    for (int i = 0; i < l; ++i) tri.f(rs.f_index[rs.simple_roots[i]]) = (*fc)(i);
    tri.y = to_dual(g, QVector(tri.e + tri.h - tri.f));
    return tri;
}

}  // namespace pcsub
