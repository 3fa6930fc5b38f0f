#include "pcsub/serialize.hpp"

#include <stdexcept>

namespace pcsub {

namespace {

std::string num(long long v) { return std::to_string(v); }

long long int_of(const Document& v) {
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        std::size_t used = 0;
        const long long out = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("malformed integer: " + s);
        return out;
    }
    return v.get<long long>();
}

std::uint64_t uint_of(const Document& v) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed unsigned integer: " + s);
    return std::stoull(s);
}

Document rational_pair(const Rational& q) {
    return {numerator_of(q).str(), denominator_of(q).str()};
}

Document header(const std::string& kind) { return Document{{"version", kDocumentVersion}, {"kind", kind}}; }

std::vector<std::string> strings_of(const Document& arr) {
    std::vector<std::string> out;
    for (const auto& v : arr) out.push_back(v.get<std::string>());
    return out;
}

}  // namespace

void require_document(const Document& doc, const std::string& kind) {
    if (!doc.is_object() || !doc.contains("version") || doc["version"] != kDocumentVersion)
        throw std::invalid_argument("unsupported document version");
    if (!doc.contains("kind") || doc["kind"] != kind) throw std::invalid_argument("expected a " + kind + " document");
}

Document to_json(const AlgebraDocument& a) {
    Document d = header("algebra");
    d["series"] = to_string(a.series);
    d["rank"] = num(a.rank);
    d["doubled"] = a.doubled;
    d["dim"] = num(static_cast<long long>(a.labels.size()));
    d["realization"] = a.realization;
    d["basis"] = a.labels;
    Document cs = Document::array();
    for (std::size_t i = 0; i < a.constants.dim(); ++i)
        for (std::size_t j = i + 1; j < a.constants.dim(); ++j)
            for (const auto& [k, c] : a.constants(i, j)) {
                Document e{num(static_cast<long long>(i)), num(static_cast<long long>(j)), num(static_cast<long long>(k))};
                for (auto& v : rational_pair(c)) e.push_back(v);
                cs.push_back(e);
            }
    d["constants"] = cs;
    Document form = Document::array();
    for (Eigen::Index i = 0; i < a.form.rows(); ++i)
        for (Eigen::Index j = 0; j < a.form.cols(); ++j)
            if (!is_zero(a.form(i, j))) {
                Document e{num(i), num(j)};
                for (auto& v : rational_pair(a.form(i, j))) e.push_back(v);
                form.push_back(e);
            }
    d["form"] = form;
    return d;
}

AlgebraDocument algebra_from_json(const Document& doc) {
    require_document(doc, "algebra");
    AlgebraDocument a;
    a.series = parse_series(doc.at("series").get<std::string>());
    a.rank = static_cast<int>(int_of(doc.at("rank")));
    a.doubled = doc.at("doubled").get<bool>();
    a.realization = doc.at("realization").get<std::string>();
    a.labels = strings_of(doc.at("basis"));
    const auto n = a.labels.size();
    a.constants = BracketTable(n);
    for (const auto& e : doc.at("constants")) {
        const auto i = static_cast<std::size_t>(int_of(e.at(0)));
        const auto j = static_cast<std::size_t>(int_of(e.at(1)));
        const auto k = static_cast<std::size_t>(int_of(e.at(2)));
        if (i >= n || j >= n || k >= n || i >= j) throw std::invalid_argument("constant index out of range");
        const Rational c = make_rational(e.at(3).get<std::string>(), e.at(4).get<std::string>());
        a.constants.at(i, j).emplace_back(k, c);
        a.constants.at(j, i).emplace_back(k, -c);
    }
    a.form = zero_matrix(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto& e : doc.at("form")) {
        const auto i = int_of(e.at(0)), j = int_of(e.at(1));
        if (i < 0 || j < 0 || i >= static_cast<long long>(n) || j >= static_cast<long long>(n))
            throw std::invalid_argument("form index out of range");
        a.form(i, j) = make_rational(e.at(2).get<std::string>(), e.at(3).get<std::string>());
    }
    return a;
}

Document poly_to_json(const Poly& p, const std::vector<std::string>& vars) {
    if (vars.size() != p.nvars()) throw std::invalid_argument("variable labels do not match the polynomial");
    Document terms = Document::array();
    for (const auto& [e, c] : p.sorted_terms()) {
        Document exp = Document::array();
        for (auto x : e) exp.push_back(static_cast<int>(x));
        terms.push_back(Document{{"exp", exp}, {"num", numerator_of(c).str()}, {"den", denominator_of(c).str()}});
    }
    return Document{{"vars", vars}, {"terms", terms}};
}

Poly poly_from_json(const Document& doc) {
    const auto n = doc.at("vars").size();
    Poly p(n);
    for (const auto& t : doc.at("terms")) {
        const auto& exp = t.at("exp");
        if (exp.size() != n) throw std::invalid_argument("exponent length does not match vars");
        Exponent e(n);
        for (std::size_t v = 0; v < n; ++v) {
            const int x = exp[v].get<int>();
            if (x < 0 || x > 255) throw std::invalid_argument("exponent out of range");
            e[v] = static_cast<std::uint8_t>(x);
        }
        p.add_term(e, make_rational(t.at("num").get<std::string>(), t.at("den").get<std::string>()));
    }
    return p;
}

Document to_json(const InvariantSet& inv, const std::vector<std::string>& vars) {
    Document d = header("invariants");
    d["realization"] = inv.realization;
    Document items = Document::array();
    for (std::size_t j = 0; j < inv.size(); ++j)
        items.push_back(Document{{"label", inv.info[j].label},
                                 {"origin", inv.info[j].origin},
                                 {"copy", num(inv.info[j].copy)},
                                 {"base_index", num(inv.info[j].base_index)},
                                 {"degree", num(inv.degrees[j])},
                                 {"poly", poly_to_json(inv.polys[j], vars)}});
    d["items"] = items;
    return d;
}

InvariantSet invariants_from_json(const Document& doc) {
    require_document(doc, "invariants");
    InvariantSet inv;
    inv.realization = doc.at("realization").get<std::string>();
    for (const auto& it : doc.at("items")) {
        inv.polys.push_back(poly_from_json(it.at("poly")));
        inv.degrees.push_back(static_cast<int>(int_of(it.at("degree"))));
        inv.info.push_back({it.at("label").get<std::string>(), it.at("origin").get<std::string>(),
                            static_cast<int>(int_of(it.at("copy"))), static_cast<int>(int_of(it.at("base_index")))});
    }
    return inv;
}

Document to_json(const GeneratorSet& gs, const std::vector<std::string>& vars) {
    Document d = header("generators");
    d["set"] = gs.kind;
    d["scenario"] = to_string(gs.scenario);
    d["expected_count"] = num(static_cast<long long>(gs.expected_count));
    d["count"] = num(static_cast<long long>(gs.size()));
    Document items = Document::array();
    for (const auto& it : gs.items) {
        Document e{{"tag", it.tag}, {"origin", it.origin}};
        e["bidegree"] = it.bidegree ? Document{num(it.bidegree->h), num(it.bidegree->r)} : Document(nullptr);
        e["poly"] = poly_to_json(it.poly, vars);
        items.push_back(e);
    }
    d["items"] = items;
    return d;
}

GeneratorSet generators_from_json(const Document& doc) {
    require_document(doc, "generators");
    GeneratorSet gs;
    gs.kind = doc.at("set").get<std::string>();
    gs.scenario = parse_scenario(doc.at("scenario").get<std::string>());
    gs.expected_count = static_cast<std::size_t>(int_of(doc.at("expected_count")));
    for (const auto& e : doc.at("items")) {
        GeneratorItem it{poly_from_json(e.at("poly")), e.at("tag").get<std::string>(),
                         e.at("origin").get<std::string>(), std::nullopt};
        if (!e.at("bidegree").is_null())
            it.bidegree = BiDegree{static_cast<int>(int_of(e["bidegree"][0])), static_cast<int>(int_of(e["bidegree"][1]))};
        gs.items.push_back(std::move(it));
    }
    return gs;
}

Document to_json(const PencilProfile& p) {
    Document d = header("pencil-profile");
    d["size"] = num(p.size);
    d["generic_rank"] = num(p.generic_rank);
    Document finite = Document::array();
    for (const auto& t : p.singular.finite) finite.push_back(to_string(t));
    Document algebraic = Document::array();
    for (const auto& a : p.singular.algebraic) {
        Document coeffs = Document::array();
        for (const auto& c : a.factor.coeffs()) coeffs.push_back(to_string(c));
        algebraic.push_back(Document{{"factor_coefficients", coeffs}, {"factor", a.factor.to_string()}, {"rank", num(a.rank)}});
    }
    d["singular"] = Document{{"proportional", p.singular.proportional},
                             {"finite", finite},
                             {"infinity", p.singular.infinity},
                             {"algebraic", algebraic},
                             {"line_count", num(p.singular.line_count())}};
    d["kernel_sum_dim"] = num(p.kernel_sum_dim);
    d["jordan_line_count"] = num(p.jordan_line_count);
    d["kronecker_block_count"] = num(p.kronecker_block_count);
    d["jordan_dimension"] = num(p.jordan_dimension);
    d["consistent"] = p.consistent;
    d["consistency_detail"] = p.consistency_detail;
    return d;
}

QVector point_from_json(const Document& arr) {
    if (!arr.is_array()) throw std::invalid_argument("a point is an array of rationals");
    QVector p(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (arr[i].is_string())
            p(static_cast<Eigen::Index>(i)) = parse_rational(arr[i].get<std::string>());
        else if (arr[i].is_number_integer())
            p(static_cast<Eigen::Index>(i)) = Rational(arr[i].get<long long>());
        else
            throw std::invalid_argument("point coordinates must be integers or rational strings");
    }
    return p;
}

Document to_json(const Report& r, bool with_timings) {
    Document d = header("report");
    d["algebra"] = Document{{"series", to_string(r.series)}, {"rank", num(r.rank)}, {"realization", r.realization},
                            {"structure", to_json(r.algebra)}};
    d["scenario"] = to_string(r.scenario);
    d["seed"] = std::to_string(r.options.seed);
    d["samples"] = num(r.options.samples);
    d["bound"] = num(r.options.bound);
    d["all_passed"] = r.all_passed();
    Document checks = Document::array();
    for (const auto& c : r.checks) {
        Document e{{"name", c.name}, {"status", to_string(c.status)}, {"seed", std::to_string(c.seed)}, {"witness", c.witness}};
        if (with_timings) e["elapsed_ms"] = std::to_string(static_cast<long long>(c.elapsed_ms));
        checks.push_back(e);
    }
    d["checks"] = checks;
    d["generators"] = to_json(r.generators, r.algebra.labels);
    return d;
}

Report report_from_json(const Document& doc) {
    require_document(doc, "report");
    Report r;
    const auto& alg = doc.at("algebra");
    r.series = parse_series(alg.at("series").get<std::string>());
    r.rank = static_cast<int>(int_of(alg.at("rank")));
    r.realization = alg.at("realization").get<std::string>();
    r.algebra = algebra_from_json(alg.at("structure"));
    r.scenario = parse_scenario(doc.at("scenario").get<std::string>());
    r.options.seed = uint_of(doc.at("seed"));
    r.options.samples = static_cast<int>(int_of(doc.at("samples")));
    r.options.bound = static_cast<long>(int_of(doc.at("bound")));
    for (const auto& e : doc.at("checks")) {
        Certificate c;
        c.name = e.at("name").get<std::string>();
        c.status = parse_check_status(e.at("status").get<std::string>());
        c.seed = uint_of(e.at("seed"));
        c.witness = e.at("witness");
        if (e.contains("elapsed_ms")) c.elapsed_ms = static_cast<double>(int_of(e["elapsed_ms"]));
        r.checks.push_back(std::move(c));
    }
    r.generators = generators_from_json(doc.at("generators"));
    return r;
}

}  // namespace pcsub
