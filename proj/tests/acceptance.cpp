// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

#include "pcsub/cli.hpp"
#include "pcsub/linalg.hpp"
#include "pcsub/random.hpp"
#include "pcsub/serialize.hpp"
#include "pcsub/verify.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pcsub;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr int kSamples = 16;
constexpr long kBound = 20;

const BracketParam t0 = BracketParam::finite(0);
const BracketParam t1 = BracketParam::finite(1);
const BracketParam tinf = BracketParam::infinity();

struct Case {
    Series series;
    int rank;
    std::string name;
};

const std::vector<Case> kBorelAlgebras{{Series::A, 1, "sl2"}, {Series::A, 2, "sl3"}, {Series::A, 3, "sl4"},
                                       {Series::C, 2, "sp4"}};

struct Built {
    Splitting s;
    InvariantSet inv;
    GeneratorSet pc;
};

Built build(Scenario sc, Series series, int rank) {
    Built b{make_splitting(sc, build_classical(series, rank)), {}, {}};
    b.inv = basic_invariants(*b.s.algebra);
    b.pc = pc_generators(b.s, b.inv);
    return b;
}

/// Collects failures of one criterion; the detail line lists what was checked.
class Criterion {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string& s) { notes_.push_back(s); }
    bool passed() const { return failures_.empty(); }
    std::string detail() const {
        std::string out;
        for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + std::string("FAILED ") + f;
        for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
        return out;
    }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

int full_rank_points(const GeneratorSet& gs, int expected) {
    const auto v = trdeg_estimate(gs, kSamples, kSeed, kBound);
    return static_cast<int>(std::count(v.values.begin(), v.values.end(), expected));
}

bool commutes_everywhere(const Built& b) {
    for (const auto& t : {t0, t1, tinf})
        if (!check_commute(b.pc, b.s, t).passed()) return false;
    return true;
}

void commutativity(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& k : kBorelAlgebras) {
        const auto b = build(Scenario::Borel, k.series, k.rank);
        for (const auto& t : {t0, t1, tinf}) {
            const auto cert = check_commute(b.pc, b.s, t);
            c.require(cert.passed(), k.name + " t=" + t.to_string());
        }
        c.note(k.name + ": " + std::to_string(b.pc.size()) + " generators");
    }
    const auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(s < 120, "runtime " + std::to_string(s) + " s exceeds 120 s");
}

void counts_and_independence(Criterion& c) {
    const std::map<std::string, int> expected{{"sl2", 2}, {"sl3", 5}, {"sl4", 9}, {"sp4", 6}};
    for (const auto& k : kBorelAlgebras) {
        const auto b = build(Scenario::Borel, k.series, k.rank);
        int formula = b.s.algebra->rank();
        for (int d : b.inv.degrees) formula += d - 1;
        const int n = static_cast<int>(b.pc.size());
        c.require(n == expected.at(k.name) && formula == expected.at(k.name) && b.s.algebra->magic_number() == n,
                  k.name + " count " + std::to_string(n));
        const int full = full_rank_points(b.pc, expected.at(k.name));
        c.require(full >= 3, k.name + " full Jacobian rank at " + std::to_string(full) + " points");
        c.note(k.name + ": count " + std::to_string(n) + ", full rank at " + std::to_string(full) + "/" +
               std::to_string(kSamples));
    }
}

void completeness(Criterion& c) {
    for (const auto& k : kBorelAlgebras) {
        const auto b = build(Scenario::Borel, k.series, k.rank);
        const auto y = principal_nilpotent_point(*b.s.algebra).y;
        const auto cert = completeness_check(b.pc, y, b.s);
        c.require(cert.passed() && cert.witness["corank_pi1"] == std::to_string(k.rank) &&
                      cert.witness["dim_differentials"] == std::to_string(b.s.algebra->magic_number()),
                  k.name + " at y");
        c.note(k.name + ": corank " + cert.witness["corank_pi1"].get<std::string>() + ", dim d_y " +
               cert.witness["dim_differentials"].get<std::string>());
    }
}

bool central(const Poly& p, const PoissonStructure& ps) {
    for (std::size_t i = 0; i < ps.dim(); ++i)
        if (!ps.bracket(p, Poly::variable(ps.dim(), i)).is_zero()) return false;
    return true;
}

void centres(Criterion& c) {
    for (const auto& k : kBorelAlgebras) {
        const auto b = build(Scenario::Borel, k.series, k.rank);
        const auto& g = *b.s.algebra;
        const auto part = b.s.partition();
        const auto z0 = center_generators(b.s, CenterEnd::Zero, b.inv);
        const auto ps0 = PoissonStructure::of_splitting(b.s, t0);
        c.require(z0.size() == b.inv.size(), k.name + " centre-0 size");
        for (std::size_t j = 0; j < z0.size() && j < b.inv.size(); ++j) {
            const auto& it = z0.items[j];
            c.require(it.bidegree && it.bidegree->h == 1 && it.bidegree->r == b.inv.degrees[j] - 1,
                      k.name + " bidegree of " + it.origin);
            c.require(central(it.poly, ps0), k.name + " " + it.origin + " central under {,}_0");
        }
        const auto zinf = center_generators(b.s, CenterEnd::Infinity, b.inv);
        const auto psinf = PoissonStructure::of_splitting(b.s, tinf);
        std::vector<Poly> cartan;
        for (auto i : g.indices_of(BasisKind::Cartan)) cartan.push_back(Poly::variable(g.dim(), i));
        c.require(zinf.polys() == cartan, k.name + " centre-inf is the Cartan basis");
        for (const auto& p : cartan) c.require(central(p, psinf), k.name + " Cartan element central under {,}_inf");
        for (std::size_t j = 0; j < b.inv.size(); ++j)
            c.require(bihomogeneous_component(b.inv.polys[j], part, 0).is_zero(),
                      k.name + " (" + b.inv.info[j].label + ")_{0,d} vanishes");
    }
    c.note("sl2, sl3, sl4, sp4");
}

void top_invariant_and_witness(Criterion& c) {
    for (const auto& k : kBorelAlgebras) {
        const auto b = build(Scenario::Borel, k.series, k.rank);
        const auto scalar = top_invariant_scalar(b.s, b.inv);
        const auto& a = b.s.algebra->roots()->highest_root_coefficients;
        c.require(scalar.has_value(), k.name + " top component is a multiple of e_delta prod f_i^a_i");
        if (k.series == Series::A)
            c.require(std::all_of(a.begin(), a.end(), [](int x) { return x == 1; }), k.name + " a_i = 1");
        if (scalar) c.note(k.name + ": scalar " + to_string(*scalar));
    }
    for (const auto& k : std::vector<Case>{{Series::A, 1, "sl2"}, {Series::A, 2, "sl3"}, {Series::A, 3, "sl4"}}) {
        const auto b = build(Scenario::Borel, k.series, k.rank);
        const auto& g = *b.s.algebra;
        const auto w = maximality_witness(b.s, b.inv);
        const int expected = g.magic_number() + g.rank();
        auto rng = stream_for(kSeed, "acceptance-witness-" + k.name);
        const auto p = sample_witness_point(g, rng, kSamples, kBound);
        c.require(p.has_value(), k.name + " witness point found");
        if (!p) continue;
        const auto r = exact_rank(jacobian_at(w.polys(), *p));
        c.require(static_cast<int>(w.size()) == expected && r == expected,
                  k.name + " witness rank " + std::to_string(r) + " vs " + std::to_string(expected));
        c.note(k.name + ": witness rank " + std::to_string(r));
    }
}

void divisors(Criterion& c) {
    for (const auto& k : std::vector<Case>{{Series::A, 1, "sl2"}, {Series::A, 2, "sl3"}, {Series::C, 2, "sp4"}}) {
        const auto b = build(Scenario::Borel, k.series, k.rank);
        const auto& rs = b.s.algebra->roots().value();
        for (std::size_t a = 0; a < rs.positive_roots.size(); ++a) {
            const auto d = Divisor::root_hyperplane(a);
            const auto v = divisor_corank(b.s, d, tinf, kSamples, kSeed, kBound);
            c.require(v.value == k.rank + 2, k.name + " " + d.to_string(*b.s.algebra) + " corank " +
                                                 std::to_string(v.value));
        }
        c.note(k.name + ": " + std::to_string(rs.positive_roots.size()) + " root hyperplanes at corank l+2");
    }
    {
        const auto b = build(Scenario::Borel, Series::B, 2);
        const auto& a = b.s.algebra->roots()->highest_root_coefficients;
        bool found = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != 2) continue;
            found = true;
            const auto v = divisor_corank(b.s, Divisor::simple_negative(i), t0, kSamples, kSeed, kBound);
            c.require(v.value == 4, "so5 D_" + std::to_string(i + 1) + " corank " + std::to_string(v.value));
            c.note("so5: D_" + std::to_string(i + 1) + " corank " + std::to_string(v.value));
        }
        c.require(found, "so5 has a coefficient a_i = 2");
    }
    for (const auto& k : std::vector<Case>{{Series::A, 1, "sl2"}, {Series::A, 2, "sl3"}, {Series::A, 3, "sl4"}}) {
        const auto b = build(Scenario::Borel, k.series, k.rank);
        for (int i = 0; i < k.rank; ++i) {
            bool rejected = false;
            try {
                divisor_corank(b.s, Divisor::simple_negative(static_cast<std::size_t>(i)), t0, 1, kSeed, kBound);
            } catch (const UnsupportedError&) {
                rejected = true;
            }
            c.require(rejected, k.name + " D_" + std::to_string(i + 1) + " must be vacuous");
        }
    }
    c.note("type A at t=0: vacuous");
}

QMatrix direct_sum(const QMatrix& a, const QMatrix& b) {
    QMatrix out = zero_matrix(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

/// Kronecker block of size 2k+1: basis e_0..e_k, f_0..f_{k-1}; A pairs e_i with f_i, B pairs e_{i+1} with f_i.
SkewPencil kronecker(int k) {
    const Eigen::Index n = 2 * k + 1;
    QMatrix a = zero_matrix(n, n), b = zero_matrix(n, n);
    for (int i = 0; i < k; ++i) {
        a(i, k + 1 + i) = 1;
        a(k + 1 + i, i) = -1;
        b(i + 1, k + 1 + i) = 1;
        b(k + 1 + i, i + 1) = -1;
    }
    return {a, b};
}

/// 2x2 Jordan block singular at t = lambda: A = -lambda J, B = J.
SkewPencil jordan2(const Rational& lambda) {
    QMatrix j = zero_matrix(2, 2);
    j(0, 1) = 1;
    j(1, 0) = -1;
    return {QMatrix(-lambda * j), j};
}

SkewPencil congruent(const SkewPencil& p, std::mt19937_64& rng) {
    const auto n = p.size();
    QMatrix q;
    do {
        q = zero_matrix(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) q(i, j) = draw_integer(rng, 3);
    } while (exact_rank(q) < n);
    return {QMatrix(q.transpose() * p.a * q), QMatrix(q.transpose() * p.b * q)};
}

void kernel_sums(Criterion& c) {
    for (const auto& k : kBorelAlgebras) {
        const auto b = build(Scenario::Borel, k.series, k.rank);
        auto rng = stream_for(kSeed, "acceptance-kernel-sum-" + k.name);
        const auto n = static_cast<Eigen::Index>(b.s.algebra->dim());
        const QVector xi = random_integer_point(rng, n, kBound);
        const auto ks = kernel_sum(pencil_at(b.s, xi), static_cast<int>(n) + 2, kSeed);
        c.require(ks.dim == b.s.algebra->magic_number(), k.name + " dim L = " + std::to_string(ks.dim));
        c.note(k.name + ": dim L " + std::to_string(ks.dim));
    }
    auto rng = stream_for(kSeed, "acceptance-jordan");
    const SkewPencil k3j{direct_sum(kronecker(1).a, jordan2(-1).a), direct_sum(kronecker(1).b, jordan2(-1).b)};
    const SkewPencil k5j{direct_sum(kronecker(2).a, jordan2(Rational(2, 3)).a),
                         direct_sum(kronecker(2).b, jordan2(Rational(2, 3)).b)};
    const SkewPencil k3k3j{direct_sum(direct_sum(kronecker(1).a, kronecker(1).a), jordan2(5).a),
                           direct_sum(direct_sum(kronecker(1).b, kronecker(1).b), jordan2(5).b)};
    const std::vector<std::pair<std::string, SkewPencil>> pencils{
        {"K3+J2", k3j}, {"K5+J2", k5j}, {"K3+K3+J2", k3k3j}, {"K3+J2 congruent", congruent(k3j, rng)},
        {"K5+J2 congruent", congruent(k5j, rng)}};
    for (const auto& [name, p] : pencils) {
        const auto chk = check_single_jordan_line(p, kSeed);
        const auto n = p.size();
        const auto m = singular_parameters(p).generic_rank;
        c.require(chk.hypotheses_hold, name + " hypotheses: " + chk.failed_hypothesis);
        c.require(chk.dim_l == n - m / 2 - 1 && chk.dim_l_ok, name + " dim L = " + std::to_string(chk.dim_l));
        c.require(chk.dim_l_cap_ker_c_ok && chk.orthogonality_ok, name + " A(ker C, L cap ker C) = 0");
        c.note(name + ": n " + std::to_string(n) + ", m " + std::to_string(m) + ", dim L " + std::to_string(chk.dim_l));
    }
}

void involution(Criterion& c) {
    const std::vector<std::pair<int, int>> cases{{1, 2}, {2, 5}, {3, 9}};
    for (auto [l, bexp] : cases) {
        const auto b = build(Scenario::Involution, Series::A, l);
        const std::string name = "sl" + std::to_string(l + 1);
        int degree_sum = 0;
        for (int d : b.inv.degrees) degree_sum += d;
        c.require(degree_sum == bexp && static_cast<int>(b.pc.size()) == bexp, name + " count");
        c.require(commutes_everywhere(b), name + " commutativity");
        const int full = full_rank_points(b.pc, bexp);
        c.require(full >= 3, name + " Jacobian rank");
        c.note(name + ": " + std::to_string(b.pc.size()) + " generators, full rank at " + std::to_string(full) + "/" +
               std::to_string(kSamples));
    }
}

void manin(Criterion& c) {
    for (int l : {1, 2}) {
        const auto b = build(Scenario::Manin, Series::A, l);
        const std::string name = "sl" + std::to_string(l + 1);
        const int two_b = 2 * build_classical(Series::A, l).magic_number();
        c.require(static_cast<int>(b.pc.size()) == two_b, name + " count " + std::to_string(b.pc.size()));
        c.require(commutes_everywhere(b), name + " commutativity");
        const int full = full_rank_points(b.pc, two_b);
        c.require(full >= 3, name + " Jacobian rank 2b");
        const int ind = index_estimate(b.s, t0, kSamples, kSeed, kBound).value;
        c.require(ind == 2 * l, name + " index of the contraction " + std::to_string(ind));
        c.note(name + ": " + std::to_string(b.pc.size()) + " generators, index of q " + std::to_string(ind));
    }
}

void index_nondegeneracy(Criterion& c) {
    std::vector<std::tuple<Scenario, Case>> cases;
    for (const auto& k : kBorelAlgebras) cases.emplace_back(Scenario::Borel, k);
    for (int l : {1, 2, 3}) cases.emplace_back(Scenario::Involution, Case{Series::A, l, "sl" + std::to_string(l + 1)});
    for (int l : {1, 2}) cases.emplace_back(Scenario::Manin, Case{Series::A, l, "sl" + std::to_string(l + 1)});
    for (const auto& [sc, k] : cases) {
        const auto s = make_splitting(sc, build_classical(k.series, k.rank));
        const int expected = s.algebra->rank();
        for (const auto& t : {t0, t1, tinf}) {
            const int v = index_estimate(s, t, kSamples, kSeed, kBound).value;
            c.require(v == expected, to_string(sc) + " " + k.name + " t=" + t.to_string() + " index " +
                                         std::to_string(v));
        }
    }
    c.note(std::to_string(cases.size()) + " splittings at t = 0, 1, inf");
}

void determinism(Criterion& c) {
    const auto dir = std::filesystem::temp_directory_path() / "pcsub-acceptance";
    std::filesystem::create_directories(dir);
    std::vector<std::string> texts;
    for (const char* name : {"first.json", "second.json"}) {
        const std::string out = (dir / name).string();
        std::vector<const char*> argv{"pcsub", "verify", "--series", "A", "--rank", "2", "--scenario", "borel",
                                      "--seed", "42", "--samples", "16", "--out", out.c_str()};
        std::ostringstream o, e;
        const int code = parse_and_dispatch(static_cast<int>(argv.size()), argv.data(), o, e);
        c.require(code == 0, "verify exit code " + std::to_string(code));
        std::ifstream f(out, std::ios::binary);
        texts.emplace_back(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    std::filesystem::remove_all(dir);
    c.require(!texts[0].empty() && texts[0] == texts[1], "reports differ");
    c.note(std::to_string(texts[0].size()) + " bytes, identical");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"commutativity of the borel sets under {,}_0, {,}_1, {,}_inf", commutativity},
        {"generator counts and Jacobian rank b(g)", counts_and_independence},
        {"completeness at y = e + h - f", completeness},
        {"centres of the two contractions", centres},
        {"top invariant monomial and witness rank b(g) + l", top_invariant_and_witness},
        {"singular divisors at corank l + 2", divisors},
        {"kernel sums and the single Jordan line", kernel_sums},
        {"involution scenario", involution},
        {"Manin scenario", manin},
        {"index at t = 0, 1, inf", index_nondegeneracy},
        {"deterministic reports", determinism},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto t = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t);
        std::cout << "criterion " << (i + 1) << " " << (c.passed() ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << " [" << ms.count() << " ms] " << c.detail() << std::endl;
        if (!c.passed()) ++failed;
    }
    const auto total = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
              << total.count() << " ms" << std::endl;
    return failed == 0 ? 0 : 1;
}
