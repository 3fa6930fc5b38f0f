#pragma once

#include "pcsub/poly.hpp"
#include "pcsub/rational.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcsub {

/// Thrown when a (series, rank) or (scenario, series) combination is outside the supported table.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Series { A, B, C, D };
enum class Scenario { Borel, Involution, Manin };

std::string to_string(Series s);
std::string to_string(Scenario s);
Series parse_series(const std::string& text);
Scenario parse_scenario(const std::string& text);

enum class BasisKind { PositiveRoot, Cartan, NegativeRoot, Other };

struct BasisElement {
    std::size_t index = 0;
    std::string label;
    BasisKind kind = BasisKind::Other;
};

/// Sparse linear combination of basis elements, ascending by index, no zero entries.
using LinearForm = std::vector<std::pair<std::size_t, Rational>>;

/// n×n table of linear forms; entry (i,j) is the bracket of basis elements i and j.
class BracketTable {
public:
    BracketTable() = default;
    explicit BracketTable(std::size_t n) : n_(n), entries_(n * n) {}
    std::size_t dim() const { return n_; }
    const LinearForm& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    LinearForm& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<LinearForm> entries_;
};

/// Root data of a classical simple algebra in its standard ordered basis (u, t, u_-).
struct RootSystem {
    /// Positive roots in epsilon coordinates, in basis order (height, then matrix position).
    std::vector<std::vector<int>> positive_roots;
    /// Each positive root expanded in the simple roots.
    std::vector<std::vector<int>> simple_coefficients;
    std::vector<std::size_t> simple_roots;  ///< ids into positive_roots, in Bourbaki-like order
    std::size_t highest_root = 0;
    std::vector<int> highest_root_coefficients;  ///< a_i with delta = sum a_i alpha_i
    std::vector<std::size_t> e_index;             ///< basis index of e_alpha per positive root
    std::vector<std::size_t> f_index;             ///< basis index of f_alpha per positive root
    std::vector<std::size_t> cartan_index;
};

/// One diagonal block of the defining realization (two blocks for g×g).
struct RealizationBlock {
    std::size_t offset = 0;
    std::size_t size = 0;
    Series series = Series::A;
    int rank = 0;
    QMatrix form;  ///< invariant bilinear form J of the block (empty for type A)
};

class LieAlgebra {
public:
    /// Structure constants and the trace form are computed from the given matrices.
    /// Throws std::invalid_argument if the matrices are dependent or their span is not bracket-closed.
    static LieAlgebra from_matrices(Series series, int base_rank, bool doubled, std::vector<BasisElement> basis,
                                    std::vector<QMatrix> matrices, std::vector<RealizationBlock> blocks,
                                    std::string realization);

    Series series() const { return series_; }
    bool doubled() const { return doubled_; }
    int base_rank() const { return base_rank_; }
    /// Rank of the whole (reductive) algebra; equals its index.
    int rank() const { return doubled_ ? 2 * base_rank_ : base_rank_; }
    std::size_t dim() const { return basis_.size(); }
    /// (dim + rank) / 2
    int magic_number() const { return static_cast<int>((dim() + rank()) / 2); }

    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::vector<QMatrix>& realization() const { return matrices_; }
    const std::vector<RealizationBlock>& blocks() const { return blocks_; }
    const std::string& realization_note() const { return realization_; }
    const BracketTable& constants() const { return constants_; }
    const QMatrix& form() const { return form_; }
    const std::optional<RootSystem>& roots() const { return roots_; }
    std::vector<std::size_t> indices_of(BasisKind kind) const;
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// Coordinates of a matrix in the realization; nullopt if it is outside the span.
    std::optional<QVector> coordinates_of(const QMatrix& m) const;
    QMatrix matrix_of(const QVector& coords) const;
    /// Bracket of two elements given in coordinates, via the structure constants.
    QVector bracket(const QVector& x, const QVector& y) const;

    /// Replaces c_{ij}^k by c_{ij}^k + delta (and c_{ji}^k accordingly). Test and falsification hook.
    LieAlgebra with_perturbed_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& delta) const;

    void set_roots(RootSystem roots) { roots_ = std::move(roots); }

private:
    Series series_ = Series::A;
    bool doubled_ = false;
    int base_rank_ = 0;
    std::vector<BasisElement> basis_;
    std::vector<QMatrix> matrices_;
    std::vector<RealizationBlock> blocks_;
    std::string realization_;
    BracketTable constants_;
    QMatrix form_;
    std::optional<RootSystem> roots_;
    // coordinate extraction: coords = extract_ * (entries at probe positions)
    std::vector<std::pair<Eigen::Index, Eigen::Index>> probes_;
    QMatrix extract_;
};

/// Plain data of an algebra: what a serialized document records.
struct AlgebraDocument {
    Series series = Series::A;
    int rank = 0;
    bool doubled = false;
    std::string realization;
    std::vector<std::string> labels;
    BracketTable constants;
    QMatrix form;
};

AlgebraDocument document_of(const LieAlgebra& g);
std::vector<std::string> labels_of(const LieAlgebra& g);

/// Classical dimension formula for (series, rank).
std::size_t classical_dimension(Series s, int rank);
bool is_supported(Series s, int rank);

LieAlgebra build_classical(Series series, int rank);
/// Plain direct product g×g: first copy's basis, then the second copy's.
LieAlgebra build_double(const LieAlgebra& g);

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool passed() const;
};

/// First basis triple (i<j<k) on which the Jacobi identity fails for the table, if any.
std::optional<std::array<std::size_t, 3>> jacobi_violation(const BracketTable& table);

/// Antisymmetry, Jacobi on all basis triples, form invariance and nondegeneracy, dimension formulas.
ValidationReport validate_structure(const LieAlgebra& g);

/// A 2-splitting g = h ⊕ r given as a partition of the ambient basis.
struct Splitting {
    std::shared_ptr<const LieAlgebra> algebra;
    std::vector<std::size_t> h_indices;
    std::vector<std::size_t> r_indices;
    Scenario scenario = Scenario::Borel;

    VariablePartition partition() const;
    /// 0 for the first summand h, 1 for the second summand r.
    int part_of(std::size_t index) const;
};

/// Bracket closure of both summands and complementarity of their spans.
ValidationReport validate_splitting(const Splitting& s);

/// (h, r) = (b, u_-) on the standard basis of g.
Splitting splitting_borel_opposite(std::shared_ptr<const LieAlgebra> g);
/// (h, r) = (b, so_n) for type A with sigma(x) = -x^T; rebuilds g in the basis (e_alpha, h_i | e_alpha - f_alpha).
Splitting splitting_involution_max_rank(const LieAlgebra& g);
/// g×g = (Delta_t^- ⊕ (u × u_-)) ⊕ Delta_g; the ambient algebra is g×g in a basis adapted to the splitting.
Splitting splitting_manin(const LieAlgebra& g);

/// Builds the splitting of the scenario from a classical algebra.
Splitting make_splitting(Scenario scenario, const LieAlgebra& g);

/// Identification g -> g*: the point x -> form(y, x).
QVector to_dual(const LieAlgebra& g, const QVector& element);

struct PrincipalTriple {
    QVector e, h, f;  ///< coordinates in g
    QVector y;        ///< e + h - f as a point of g*
};

PrincipalTriple principal_nilpotent_point(const LieAlgebra& g);

/// Coordinates in t of the coroot [e_alpha, f_alpha] for the positive root with the given id.
QVector coroot(const LieAlgebra& g, std::size_t root_id);

}  // namespace pcsub
