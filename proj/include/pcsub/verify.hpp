#pragma once

#include "pcsub/brackets.hpp"
#include "pcsub/generators.hpp"
#include "pcsub/invariants.hpp"
#include "pcsub/rootdata.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pcsub {

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus s);
CheckStatus parse_check_status(const std::string& text);

struct Certificate {
    std::string name;
    CheckStatus status = CheckStatus::Inconclusive;
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();
    std::uint64_t seed = 0;
    double elapsed_ms = 0;

    bool passed() const { return status == CheckStatus::Pass; }
};

struct SampledValue {
    int value = 0;
    QVector point;               ///< point realizing the value
    std::vector<QVector> points;  ///< every sampled point, in order
    std::vector<int> values;      ///< value at each sampled point
};

/// Pass iff every pairwise bracket of the set vanishes exactly under {,}_t.
Certificate check_commute(const GeneratorSet& gs, const Splitting& s, const BracketParam& t);

/// Maximal Jacobian rank over sampled integer points: a lower bound for the transcendence degree.
SampledValue trdeg_estimate(const GeneratorSet& gs, int trials, std::uint64_t seed, long bound = 20);

/// Minimal corank of π_t over sampled points: an upper bound for the index of g_(t).
SampledValue index_estimate(const Splitting& s, const BracketParam& t, int trials, std::uint64_t seed,
                            long bound = 20);

/// Pass iff ξ is regular for the Lie–Poisson bracket and dim d_ξ(gs) = b(g); ξ = 0 passes trivially.
Certificate completeness_check(const GeneratorSet& gs, const QVector& xi, const Splitting& s);

/// Either the hyperplane D(α) = {ξ(h_α) = 0} for a positive root, or D_i = {f_i = 0} for a simple root.
struct Divisor {
    enum class Kind { RootHyperplane, SimpleNegative } kind = Kind::RootHyperplane;
    std::size_t id = 0;  ///< positive root id, or position among the simple roots

    static Divisor root_hyperplane(std::size_t root_id) { return {Kind::RootHyperplane, root_id}; }
    static Divisor simple_negative(std::size_t i) { return {Kind::SimpleNegative, i}; }
    std::string to_string(const LieAlgebra& g) const;
};

/// Minimal corank of π_t over sampled points of the divisor. Throws UnsupportedError for D_i with
/// a_i = 1 and std::invalid_argument for out-of-range ids or a splitting without root data.
SampledValue divisor_corank(const Splitting& s, const Divisor& divisor, const BracketParam& t, int trials,
                            std::uint64_t seed, long bound = 20);

/// Point where at least l of e_δ, f_1..f_l are nonzero; sampled until that holds.
std::optional<QVector> sample_witness_point(const LieAlgebra& g, std::mt19937_64& rng, int trials, long bound);

struct RunOptions {
    std::uint64_t seed = 42;
    int samples = 16;
    long bound = 20;
    bool parallel = true;
};

/// Adds delta to one structure constant of the ambient algebra after the splitting is built.
struct Perturbation {
    std::size_t i = 0, j = 1, k = 0;
    Rational delta = Rational(1);
};

struct Report {
    Series series = Series::A;
    int rank = 0;
    Scenario scenario = Scenario::Borel;
    RunOptions options;
    std::string realization;
    AlgebraDocument algebra;  ///< ambient algebra of the splitting
    GeneratorSet generators;
    std::vector<Certificate> checks;

    bool all_passed() const;
    bool any_failed() const;
};

/// Runs every check of the scenario. Throws UnsupportedError for unsupported combinations and
/// std::invalid_argument for samples < 1 or bound < 1.
Report run_scenario(Scenario scenario, Series series, int rank, const RunOptions& options,
                    const std::optional<Perturbation>& perturbation = std::nullopt);

}  // namespace pcsub
