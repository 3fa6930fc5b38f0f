#include "pcsub/verify.hpp"

#include "pcsub/linalg.hpp"
#include "pcsub/random.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <memory>

namespace pcsub {

using json = nlohmann::ordered_json;

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "";
}

CheckStatus parse_check_status(const std::string& text) {
    if (text == "pass") return CheckStatus::Pass;
    if (text == "fail") return CheckStatus::Fail;
    if (text == "inconclusive") return CheckStatus::Inconclusive;
    throw std::invalid_argument("unknown status: " + text);
}

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Certificate& c) { return c.passed(); });
}

bool Report::any_failed() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const Certificate& c) { return c.status == CheckStatus::Fail; });
}

namespace {

json point_json(const QVector& p) {
    json out = json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) out.push_back(to_string(p(i)));
    return out;
}

std::string num(long long v) { return std::to_string(v); }

int corank_at(const Splitting& s, const BracketParam& t, const QVector& xi) {
    return static_cast<int>(xi.size() - exact_rank(tensor_at(s, t, xi)));
}

int jacobian_rank(const std::vector<Poly>& polys, const QVector& point) {
    if (polys.empty()) return 0;
    return static_cast<int>(exact_rank(jacobian_at(polys, point)));
}

json sampled_json(const SampledValue& v) {
    json pts = json::array();
    for (std::size_t k = 0; k < v.points.size(); ++k)
        pts.push_back(json{{"point", point_json(v.points[k])}, {"value", num(v.values[k])}});
    return pts;
}

bool is_central(const Poly& p, const PoissonStructure& ps) {
    for (std::size_t i = 0; i < ps.dim(); ++i)
        if (!ps.bracket(p, Poly::variable(ps.dim(), i)).is_zero()) return false;
    return true;
}

bool supported_on(const Poly& p, const std::vector<std::size_t>& vars) {
    for (auto v : p.support())
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
    return true;
}

}  // namespace

std::string Divisor::to_string(const LieAlgebra& g) const {
    const auto& rs = g.roots().value();
    if (kind == Kind::RootHyperplane) return "D(" + g.basis()[rs.e_index.at(id)].label + ")";
    return "D_" + std::to_string(id + 1);
}

Certificate check_commute(const GeneratorSet& gs, const Splitting& s, const BracketParam& t) {
    Certificate c;
    c.name = "commute-t" + t.to_string();
    const auto ps = PoissonStructure::of_splitting(s, t);
    long long pairs = 0;
    c.status = CheckStatus::Pass;
    for (std::size_t i = 0; i < gs.size() && c.passed(); ++i) {
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
            ++pairs;
            const Poly b = ps.bracket(gs.items[i].poly, gs.items[j].poly);
            if (!b.is_zero()) {
                c.status = CheckStatus::Fail;
                c.witness["nonzero_pair"] = {gs.items[i].origin, gs.items[j].origin};
                c.witness["bracket_terms"] = num(static_cast<long long>(b.size()));
                break;
            }
        }
    }
    c.witness["parameter"] = t.to_string();
    c.witness["members"] = num(static_cast<long long>(gs.size()));
    c.witness["pairs_checked"] = num(pairs);
    return c;
}

SampledValue trdeg_estimate(const GeneratorSet& gs, int trials, std::uint64_t seed, long bound) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    auto rng = stream_for(seed, "trdeg");
    const auto polys = gs.polys();
    const auto n = polys.empty() ? Eigen::Index(0) : static_cast<Eigen::Index>(polys.front().nvars());
    SampledValue out;
    out.value = -1;
    for (int k = 0; k < trials; ++k) {
        QVector p = random_integer_point(rng, n, bound);
        const int r = jacobian_rank(polys, p);
        if (r > out.value) {
            out.value = r;
            out.point = p;
        }
        out.points.push_back(std::move(p));
        out.values.push_back(r);
    }
    return out;
}

SampledValue index_estimate(const Splitting& s, const BracketParam& t, int trials, std::uint64_t seed, long bound) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    auto rng = stream_for(seed, "index-t" + t.to_string());
    const auto n = static_cast<Eigen::Index>(s.algebra->dim());
    SampledValue out;
    out.value = static_cast<int>(n) + 1;
    for (int k = 0; k < trials; ++k) {
        QVector p = random_integer_point(rng, n, bound);
        const int c = corank_at(s, t, p);
        if (c < out.value) {
            out.value = c;
            out.point = p;
        }
        out.points.push_back(std::move(p));
        out.values.push_back(c);
    }
    return out;
}

Certificate completeness_check(const GeneratorSet& gs, const QVector& xi, const Splitting& s) {
    const auto& g = *s.algebra;
    Certificate c;
    c.name = "completeness";
    c.witness["point"] = point_json(xi);
    const auto rank_pi = exact_rank(PoissonStructure::lie(g).tensor_at(xi));
    const auto corank = static_cast<long long>(xi.size() - rank_pi);
    c.witness["corank_pi1"] = num(corank);
    if (rank_pi == 0) {
        c.status = CheckStatus::Pass;
        c.witness["orbit_dimension"] = "0";
        c.witness["trivial"] = true;
        return c;
    }
    const int d = jacobian_rank(gs.polys(), xi);
    c.witness["dim_differentials"] = num(d);
    c.witness["required"] = num(g.magic_number());
    if (corank != g.rank())
        c.status = CheckStatus::Inconclusive;  // sufficient condition needs a regular point
    else
        c.status = d == g.magic_number() ? CheckStatus::Pass : CheckStatus::Fail;
    return c;
}

SampledValue divisor_corank(const Splitting& s, const Divisor& divisor, const BracketParam& t, int trials,
                            std::uint64_t seed, long bound) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    const auto& g = *s.algebra;
    if (!g.roots()) throw std::invalid_argument("divisors need root data");
    const auto& rs = *g.roots();
    const auto n = static_cast<Eigen::Index>(g.dim());
    QVector constraint;
    Eigen::Index pivot = -1;
    if (divisor.kind == Divisor::Kind::RootHyperplane) {
        if (divisor.id >= rs.positive_roots.size()) throw std::invalid_argument("root id out of range");
        constraint = coroot(g, divisor.id);
        for (Eigen::Index k = n - 1; k >= 0 && pivot < 0; --k)
            if (!is_zero(constraint(k))) pivot = k;
    } else {
        if (divisor.id >= rs.simple_roots.size()) throw std::invalid_argument("simple root index out of range");
        if (rs.highest_root_coefficients[divisor.id] == 1)
            throw UnsupportedError("D_" + std::to_string(divisor.id + 1) +
                                   " is not a divisor of the singular set: a_i = 1 (always so in type A)");
        pivot = static_cast<Eigen::Index>(rs.f_index[rs.simple_roots[divisor.id]]);
    }
    auto rng = stream_for(seed, "divisor-t" + t.to_string() + "-" + divisor.to_string(g));
    SampledValue out;
    out.value = static_cast<int>(n) + 1;
    for (int k = 0; k < trials; ++k) {
        QVector p = random_integer_point(rng, n, bound);
        if (divisor.kind == Divisor::Kind::RootHyperplane) {
            Rational rest(0);
            for (Eigen::Index j = 0; j < n; ++j)
                if (j != pivot) rest += constraint(j) * p(j);
            p(pivot) = -rest / constraint(pivot);
        } else {
            p(pivot) = 0;
        }
        const int c = corank_at(s, t, p);
        if (c < out.value) {
            out.value = c;
            out.point = p;
        }
        out.points.push_back(std::move(p));
        out.values.push_back(c);
    }
    return out;
}

std::optional<QVector> sample_witness_point(const LieAlgebra& g, std::mt19937_64& rng, int trials, long bound) {
    const auto& rs = g.roots().value();
    std::vector<std::size_t> watched{rs.e_index[rs.highest_root]};
    for (auto sr : rs.simple_roots) watched.push_back(rs.f_index[sr]);
    for (int k = 0; k < trials; ++k) {
        QVector p = random_integer_point(rng, static_cast<Eigen::Index>(g.dim()), bound);
        int nonzero = 0;
        for (auto v : watched) nonzero += is_zero(p(static_cast<Eigen::Index>(v))) ? 0 : 1;
        if (nonzero >= g.rank()) return p;
    }
    return std::nullopt;
}

namespace {

struct Context {
    Splitting s;
    InvariantSet inv;
    GeneratorSet pc;
    RunOptions opt;
    int l = 0;
    int b = 0;
};

using Task = std::pair<std::string, std::function<Certificate(const Context&)>>;

Certificate structure_check(const Context& cx) {
    Certificate c;
    auto add = [&](const ValidationReport& r) {
        for (const auto& v : r.checks) {
            c.witness[v.name] = v.passed ? "ok" : v.detail;
            if (!v.passed) c.status = CheckStatus::Fail;
        }
    };
    c.status = CheckStatus::Pass;
    add(validate_structure(*cx.s.algebra));
    add(validate_splitting(cx.s));
    return c;
}

Certificate invariants_check(const Context& cx) {
    const auto& g = *cx.s.algebra;
    Certificate c;
    c.status = CheckStatus::Pass;
    int degree_sum = 0;
    json per = json::array();
    for (std::size_t j = 0; j < cx.inv.size(); ++j) {
        const auto& h = cx.inv.polys[j];
        const bool invariant = check_adg_invariance(h, g);
        const bool homogeneous = h.is_homogeneous() && h.degree() == cx.inv.degrees[j];
        degree_sum += cx.inv.degrees[j];
        per.push_back(json{{"label", cx.inv.info[j].label},
                           {"degree", num(cx.inv.degrees[j])},
                           {"ad_invariant", invariant},
                           {"homogeneous", homogeneous}});
        if (!invariant || !homogeneous) c.status = CheckStatus::Fail;
    }
    c.witness["invariants"] = per;
    c.witness["degree_sum"] = num(degree_sum);
    c.witness["magic_number"] = num(cx.b);
    if (degree_sum != cx.b || static_cast<int>(cx.inv.size()) != cx.l) c.status = CheckStatus::Fail;
    // independence: d_ξ H_j span an l-dimensional space at a regular point
    auto rng = stream_for(cx.opt.seed, "invariants");
    const auto lie = PoissonStructure::lie(g);
    std::optional<QVector> regular;
    for (int k = 0; k < cx.opt.samples && !regular; ++k) {
        QVector p = random_integer_point(rng, static_cast<Eigen::Index>(g.dim()), cx.opt.bound);
        if (static_cast<int>(p.size() - exact_rank(lie.tensor_at(p))) == cx.l) regular = p;
    }
    if (!regular) {
        if (c.passed()) c.status = CheckStatus::Inconclusive;
        c.witness["regular_point"] = nullptr;
        return c;
    }
    const int r = jacobian_rank(cx.inv.polys, *regular);
    c.witness["regular_point"] = point_json(*regular);
    c.witness["jacobian_rank"] = num(r);
    if (r != cx.l) c.status = CheckStatus::Fail;
    return c;
}

Certificate ggs_check(const Context& cx) {
    Certificate c;
    const auto d = ggs_degree_sum(cx.s, cx.inv);
    c.witness["side"] = d.side;
    c.witness["degree_sum"] = num(d.sum);
    c.witness["dim"] = num(d.dim_v);
    c.status = d.sum == d.dim_v ? CheckStatus::Pass : CheckStatus::Fail;
    return c;
}

Certificate restriction_vanishing_check(const Context& cx) {
    Certificate c;
    c.status = CheckStatus::Pass;
    const auto part = cx.s.partition();
    json per = json::array();
    for (std::size_t j = 0; j < cx.inv.size(); ++j) {
        const bool zero = bihomogeneous_component(cx.inv.polys[j], part, 0).is_zero();
        per.push_back(json{{"label", cx.inv.info[j].label}, {"component_zero", zero}});
        if (!zero) c.status = CheckStatus::Fail;
    }
    c.witness["components_0_d"] = per;
    return c;
}

Certificate cartan_restriction_check(const Context& cx) {
    Certificate c;
    c.status = CheckStatus::Pass;
    const auto part = cx.s.partition();
    const auto cartan = cx.s.algebra->indices_of(BasisKind::Cartan);
    json per = json::array();
    for (std::size_t j = 0; j < cx.inv.size(); ++j) {
        const Poly comp = bihomogeneous_component(cx.inv.polys[j], part, cx.inv.degrees[j]);
        const bool ok = !comp.is_zero() && supported_on(comp, cartan);
        per.push_back(json{{"label", cx.inv.info[j].label}, {"in_cartan_subalgebra", ok}});
        if (!ok) c.status = CheckStatus::Fail;
    }
    c.witness["components_d_0"] = per;
    return c;
}

Certificate manin_top_h_check(const Context& cx) {
    Certificate c;
    c.status = CheckStatus::Pass;
    const auto part = cx.s.partition();
    json per = json::array();
    for (auto [a, b] : copy_pairs(cx.inv)) {
        const int d = cx.inv.degrees[a];
        const Poly minus = d % 2 == 0 ? Poly(cx.inv.polys[a] - cx.inv.polys[b]) : Poly(cx.inv.polys[a] + cx.inv.polys[b]);
        const bool zero = bihomogeneous_component(minus, part, d).is_zero();
        per.push_back(json{{"label", cx.inv.info[a].label + " - (-1)^d " + cx.inv.info[b].label},
                           {"component_d_0_zero", zero}});
        if (!zero) c.status = CheckStatus::Fail;
    }
    c.witness["pairs"] = per;
    return c;
}

Certificate center_check(const Context& cx, CenterEnd end) {
    Certificate c;
    const auto z = center_generators(cx.s, end, cx.inv);
    const auto ps = PoissonStructure::of_splitting(
        cx.s, end == CenterEnd::Zero ? BracketParam::finite(0) : BracketParam::infinity());
    c.status = z.size() == z.expected_count ? CheckStatus::Pass : CheckStatus::Fail;
    json per = json::array();
    for (std::size_t k = 0; k < z.size(); ++k) {
        const auto& it = z.items[k];
        json e{{"origin", it.origin}, {"central", is_central(it.poly, ps)}};
        if (!e["central"].get<bool>()) c.status = CheckStatus::Fail;
        if (it.bidegree) e["bidegree"] = {num(it.bidegree->h), num(it.bidegree->r)};
        if (cx.s.scenario == Scenario::Borel && end == CenterEnd::Zero) {
            const bool ok = it.bidegree && it.bidegree->h == 1 && it.bidegree->r == cx.inv.degrees[k] - 1;
            e["bidegree_1_d_minus_1"] = ok;
            if (!ok) c.status = CheckStatus::Fail;
        }
        if (cx.s.scenario == Scenario::Borel && end == CenterEnd::Infinity && it.tag != "cartan-basis")
            c.status = CheckStatus::Fail;
        per.push_back(e);
    }
    c.witness["generators"] = per;
    c.witness["count"] = num(static_cast<long long>(z.size()));
    c.witness["expected"] = num(static_cast<long long>(z.expected_count));
    return c;
}

Certificate count_check(const Context& cx) {
    Certificate c;
    const bool nonzero = std::none_of(cx.pc.items.begin(), cx.pc.items.end(),
                                      [](const GeneratorItem& it) { return it.poly.is_zero(); });
    c.witness["count"] = num(static_cast<long long>(cx.pc.size()));
    c.witness["expected"] = num(static_cast<long long>(cx.pc.expected_count));
    c.status = nonzero && cx.pc.size() == cx.pc.expected_count ? CheckStatus::Pass : CheckStatus::Fail;
    return c;
}

Certificate trdeg_check(const Context& cx) {
    Certificate c;
    const auto v = trdeg_estimate(cx.pc, cx.opt.samples, cx.opt.seed, cx.opt.bound);
    const int expected = static_cast<int>(cx.pc.expected_count);
    const auto full = std::count(v.values.begin(), v.values.end(), expected);
    const auto needed = std::min(3, cx.opt.samples);
    c.witness["estimate"] = num(v.value);
    c.witness["expected"] = num(expected);
    c.witness["points_at_full_rank"] = num(full);
    c.witness["samples"] = sampled_json(v);
    if (v.value > expected)
        c.status = CheckStatus::Fail;
    else
        c.status = full >= needed ? CheckStatus::Pass : CheckStatus::Inconclusive;
    return c;
}

Certificate vandermonde_check(const Context& cx) {
    Certificate c;
    auto rng = stream_for(cx.opt.seed, "vandermonde-closure");
    std::vector<Rational> ts;
    json tj = json::array();
    while (ts.size() < 3) {
        const long t = draw_integer(rng, cx.opt.bound);
        if (t == 0 || t == 1) continue;
        ts.emplace_back(t);
        tj.push_back(num(t));
    }
    const auto failure = vandermonde_closure(cx.s, cx.inv, cx.pc, ts);
    c.witness["parameters"] = tj;
    if (!failure.empty()) c.witness["failure"] = failure;
    c.status = failure.empty() ? CheckStatus::Pass : CheckStatus::Fail;
    return c;
}

Certificate index_check(const Context& cx, const BracketParam& t) {
    Certificate c;
    const auto v = index_estimate(cx.s, t, cx.opt.samples, cx.opt.seed, cx.opt.bound);
    c.witness["parameter"] = t.to_string();
    c.witness["estimate"] = num(v.value);
    c.witness["expected"] = num(cx.l);
    c.witness["minimizing_point"] = point_json(v.point);
    c.witness["samples"] = sampled_json(v);
    if (v.value < cx.l)
        c.status = CheckStatus::Fail;
    else
        c.status = v.value == cx.l ? CheckStatus::Pass : CheckStatus::Inconclusive;
    return c;
}

Certificate completeness_y_check(const Context& cx) {
    const auto y = principal_nilpotent_point(*cx.s.algebra).y;
    Certificate c = completeness_check(cx.pc, y, cx.s);
    json coranks = json::object();
    for (const auto& t : {BracketParam::finite(0), BracketParam::finite(1), BracketParam::infinity()}) {
        const int k = corank_at(cx.s, t, y);
        coranks["t" + t.to_string()] = num(k);
        if (k != cx.l) c.status = CheckStatus::Fail;
    }
    c.witness["coranks_along_family"] = coranks;
    return c;
}

Certificate completeness_sampled_check(const Context& cx) {
    auto rng = stream_for(cx.opt.seed, "completeness-sampled");
    Certificate c;
    for (int k = 0; k < cx.opt.samples; ++k) {
        c = completeness_check(cx.pc, random_integer_point(rng, static_cast<Eigen::Index>(cx.s.algebra->dim()),
                                                           cx.opt.bound),
                               cx.s);
        if (c.status != CheckStatus::Inconclusive) break;
    }
    return c;
}

Certificate divisor_check(const Context& cx, const Divisor& d, const BracketParam& t) {
    Certificate c;
    const auto v = divisor_corank(cx.s, d, t, cx.opt.samples, cx.opt.seed, cx.opt.bound);
    const int expected = cx.l + 2;
    c.witness["divisor"] = d.to_string(*cx.s.algebra);
    c.witness["parameter"] = t.to_string();
    c.witness["minimal_corank"] = num(v.value);
    c.witness["expected"] = num(expected);
    c.witness["minimizing_point"] = point_json(v.point);
    c.witness["samples"] = sampled_json(v);
    if (v.value < expected)
        c.status = CheckStatus::Fail;
    else
        c.status = v.value == expected ? CheckStatus::Pass : CheckStatus::Inconclusive;
    return c;
}

Certificate vacuous_divisor_check(const Context&) {
    Certificate c;
    c.status = CheckStatus::Pass;
    c.witness["vacuous"] = true;
    c.witness["reason"] = "every highest-root coefficient a_i equals 1, so the t = 0 singular set has no divisor";
    return c;
}

Certificate witness_rank_check(const Context& cx) {
    Certificate c;
    const auto& g = *cx.s.algebra;
    const auto w = maximality_witness(cx.s, cx.inv);
    const int expected = cx.b + cx.l;
    c.witness["size"] = num(static_cast<long long>(w.size()));
    c.witness["expected"] = num(expected);
    auto rng = stream_for(cx.opt.seed, "witness-rank");
    const auto polys = w.polys();
    json tried = json::array();
    c.status = CheckStatus::Inconclusive;
    for (int k = 0; k < cx.opt.samples; ++k) {
        const auto p = sample_witness_point(g, rng, cx.opt.samples, cx.opt.bound);
        if (!p) break;
        const int r = jacobian_rank(polys, *p);
        tried.push_back(json{{"point", point_json(*p)}, {"jacobian_rank", num(r)}});
        if (r > expected) {
            c.status = CheckStatus::Fail;
            break;
        }
        if (r == expected) {
            c.status = CheckStatus::Pass;
            break;
        }
    }
    c.witness["samples"] = tried;
    if (static_cast<int>(w.size()) != expected) c.status = CheckStatus::Fail;
    return c;
}

Certificate top_monomial_check(const Context& cx) {
    Certificate c;
    const auto scalar = top_invariant_scalar(cx.s, cx.inv);
    const auto& rs = cx.s.algebra->roots().value();
    json a = json::array();
    for (int v : rs.highest_root_coefficients) a.push_back(num(v));
    c.witness["highest_root_coefficients"] = a;
    if (scalar) c.witness["scalar"] = to_string(*scalar);
    c.status = scalar ? CheckStatus::Pass : CheckStatus::Fail;
    return c;
}

Certificate kernel_sum_check(const Context& cx) {
    Certificate c;
    auto rng = stream_for(cx.opt.seed, "kernel-sum");
    const auto n = static_cast<Eigen::Index>(cx.s.algebra->dim());
    json tried = json::array();
    c.status = CheckStatus::Inconclusive;
    const int attempts = std::min(cx.opt.samples, 3);
    for (int k = 0; k < attempts; ++k) {
        const QVector xi = random_integer_point(rng, n, cx.opt.bound);
        const auto ks = kernel_sum(pencil_at(cx.s, xi), static_cast<int>(n) + 2, rng());
        tried.push_back(json{{"point", point_json(xi)}, {"dim", num(ks.dim)}, {"stabilized", ks.stabilized}});
        if (ks.dim == cx.b && ks.stabilized) {
            c.status = CheckStatus::Pass;
            break;
        }
    }
    c.witness["expected"] = num(cx.b);
    c.witness["samples"] = tried;
    return c;
}

std::vector<Task> tasks_for(const Context& cx) {
    const auto t0 = BracketParam::finite(0), t1 = BracketParam::finite(1), tinf = BracketParam::infinity();
    std::vector<Task> tasks{
        {"structure", structure_check},
        {"invariants", invariants_check},
        {"ggs-degree-sum", ggs_check},
    };
    const Scenario sc = cx.s.scenario;
    if (sc == Scenario::Borel) {
        tasks.emplace_back("restriction-vanishing", restriction_vanishing_check);
        tasks.emplace_back("cartan-restriction", cartan_restriction_check);
    }
    if (sc == Scenario::Manin) tasks.emplace_back("top-h-vanishing", manin_top_h_check);
    tasks.emplace_back("center-t0", [](const Context& c) { return center_check(c, CenterEnd::Zero); });
    tasks.emplace_back("center-tinf", [](const Context& c) { return center_check(c, CenterEnd::Infinity); });
    tasks.emplace_back("generator-count", count_check);
    for (const auto& t : {t0, t1, tinf})
        tasks.emplace_back("commute-t" + t.to_string(),
                           [t](const Context& c) { return check_commute(c.pc, c.s, t); });
    tasks.emplace_back("trdeg", trdeg_check);
    tasks.emplace_back("vandermonde-closure", vandermonde_check);
    for (const auto& t : {t0, t1, tinf})
        tasks.emplace_back("index-t" + t.to_string(), [t](const Context& c) { return index_check(c, t); });
    tasks.emplace_back("kernel-sum", kernel_sum_check);
    if (sc == Scenario::Borel) {
        const auto& g = *cx.s.algebra;
        const auto& rs = g.roots().value();
        tasks.emplace_back("completeness-y", completeness_y_check);
        tasks.emplace_back("completeness-sampled", completeness_sampled_check);
        for (std::size_t a = 0; a < rs.positive_roots.size(); ++a) {
            const auto d = Divisor::root_hyperplane(a);
            tasks.emplace_back("divisor-tinf-" + d.to_string(g),
                               [d, tinf](const Context& c) { return divisor_check(c, d, tinf); });
        }
        bool any = false;
        for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
            if (rs.highest_root_coefficients[i] == 1) continue;
            any = true;
            const auto d = Divisor::simple_negative(i);
            tasks.emplace_back("divisor-t0-" + d.to_string(g),
                               [d, t0](const Context& c) { return divisor_check(c, d, t0); });
        }
        if (!any) tasks.emplace_back("divisor-t0", vacuous_divisor_check);
        tasks.emplace_back("witness-rank", witness_rank_check);
        tasks.emplace_back("top-invariant-monomial", top_monomial_check);
    }
    return tasks;
}

Certificate run_task(const Task& task, const Context& cx) {
    const auto start = std::chrono::steady_clock::now();
    Certificate c;
    try {
        c = task.second(cx);
    } catch (const std::exception& e) {
        c = Certificate{};
        c.status = CheckStatus::Fail;
        c.witness["error"] = e.what();
    }
    c.name = task.first;
    c.seed = cx.opt.seed;
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c;
}

}  // namespace

Report run_scenario(Scenario scenario, Series series, int rank, const RunOptions& options,
                    const std::optional<Perturbation>& perturbation) {
    if (options.samples < 1) throw std::invalid_argument("samples must be positive");
    if (options.bound < 1) throw std::invalid_argument("coordinate bound must be positive");
    if (!is_supported(series, rank))
        throw UnsupportedError("unsupported algebra " + to_string(series) + std::to_string(rank));
    Context cx;
    cx.opt = options;
    cx.s = make_splitting(scenario, build_classical(series, rank));
    if (perturbation) {
        const auto& p = *perturbation;
        cx.s.algebra = std::make_shared<const LieAlgebra>(cx.s.algebra->with_perturbed_constant(p.i, p.j, p.k, p.delta));
    }
    const auto& g = *cx.s.algebra;
    cx.l = g.rank();
    cx.b = g.magic_number();
    cx.inv = basic_invariants(g);
    cx.pc = pc_generators(cx.s, cx.inv);

    Report rep;
    rep.series = series;
    rep.rank = rank;
    rep.scenario = scenario;
    rep.options = options;
    rep.realization = g.realization_note();
    rep.algebra = document_of(g);
    rep.generators = cx.pc;

    const auto tasks = tasks_for(cx);
    if (options.parallel) {
        std::vector<std::future<Certificate>> futures;
        for (const auto& t : tasks) futures.push_back(std::async(std::launch::async, run_task, std::cref(t), std::cref(cx)));
        for (auto& f : futures) rep.checks.push_back(f.get());
    } else {
        for (const auto& t : tasks) rep.checks.push_back(run_task(t, cx));
    }
    return rep;
}

}  // namespace pcsub
