#include "pcsub/generators.hpp"

#include "pcsub/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcsub {

std::vector<Poly> GeneratorSet::polys() const {
    std::vector<Poly> out;
    for (const auto& it : items) out.push_back(it.poly);
    return out;
}

namespace {

std::string bidegree_suffix(const BiDegree& b) { return "_{" + std::to_string(b.h) + "," + std::to_string(b.r) + "}"; }

void add_coordinates(GeneratorSet& out, const LieAlgebra& g, const std::vector<std::size_t>& indices,
                     const std::string& tag, const VariablePartition& part) {
    for (auto i : indices) {
        const BiDegree b = part.second[i] ? BiDegree{0, 1} : BiDegree{1, 0};
        out.items.push_back({Poly::variable(g.dim(), i), tag, g.basis()[i].label, b});
    }
}

void add_components(GeneratorSet& out, const Poly& p, const std::string& name, const VariablePartition& part,
                    int from, int to) {
    const int d = p.degree();
    for (int i = from; i <= to; ++i) {
        Poly c = bihomogeneous_component(p, part, i);
        if (c.is_zero()) continue;
        const BiDegree b{i, d - i};
        out.items.push_back({std::move(c), "bihomogeneous-component", "(" + name + ")" + bidegree_suffix(b), b});
    }
}

void add_top(GeneratorSet& out, const Poly& p, const std::string& name, const VariablePartition& part, TopSide side) {
    auto [b, c] = top_component(p, part, side);
    const bool r_max = side == TopSide::SecondSummandMax;
    out.items.push_back({std::move(c), r_max ? "top-r-component" : "top-h-component",
                         "(" + name + ")" + (r_max ? "^top-r" : "_top-h") + bidegree_suffix(b), b});
}

int sign_of_degree(int d) { return d % 2 == 0 ? 1 : -1; }

std::string combo_name(const InvariantSet& inv, std::size_t a, std::size_t b, int sign) {
    return inv.info[a].label + (sign > 0 ? " + " : " - ") + inv.info[b].label;
}

void require_scenario_algebra(const Splitting& s, const InvariantSet& inv) {
    if (inv.polys.empty() || inv.polys.front().nvars() != s.algebra->dim())
        throw std::invalid_argument("invariants do not belong to the splitting's algebra");
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> copy_pairs(const InvariantSet& inv) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < inv.size(); ++a) {
        if (inv.info[a].copy != 1) continue;
        for (std::size_t b = 0; b < inv.size(); ++b)
            if (inv.info[b].copy == 2 && inv.info[b].base_index == inv.info[a].base_index) out.emplace_back(a, b);
    }
    return out;
}

GeneratorSet center_generators(const Splitting& s, CenterEnd end, const InvariantSet& inv) {
    require_scenario_algebra(s, inv);
    const auto& g = *s.algebra;
    const auto part = s.partition();
    GeneratorSet out;
    out.scenario = s.scenario;
    out.kind = end == CenterEnd::Zero ? "center-0" : "center-inf";
    switch (s.scenario) {
        case Scenario::Borel:
            if (end == CenterEnd::Zero) {
                for (std::size_t j = 0; j < inv.size(); ++j)
                    add_top(out, inv.polys[j], inv.info[j].label, part, TopSide::SecondSummandMax);
            } else {
                add_coordinates(out, g, g.indices_of(BasisKind::Cartan), "cartan-basis", part);
            }
            out.expected_count = static_cast<std::size_t>(g.rank());
            break;
        case Scenario::Involution:
            for (std::size_t j = 0; j < inv.size(); ++j)
                add_top(out, inv.polys[j], inv.info[j].label, part,
                        end == CenterEnd::Zero ? TopSide::SecondSummandMax : TopSide::FirstSummandMax);
            out.expected_count = static_cast<std::size_t>(g.rank());
            break;
        case Scenario::Manin:
            for (auto [a, b] : copy_pairs(inv)) {
                if (end == CenterEnd::Zero) {
                    add_top(out, inv.polys[a] - inv.polys[b], combo_name(inv, a, b, -1), part,
                            TopSide::SecondSummandMax);
                } else {
                    add_top(out, inv.polys[a] + inv.polys[b], combo_name(inv, a, b, 1), part, TopSide::FirstSummandMax);
                    add_top(out, inv.polys[a] - inv.polys[b], combo_name(inv, a, b, -1), part,
                            TopSide::FirstSummandMax);
                }
            }
            if (end == CenterEnd::Zero)
                add_coordinates(out, g, g.indices_of(BasisKind::Cartan), "diagonal-cartan-basis", part);
            out.expected_count = static_cast<std::size_t>(g.rank());
            break;
    }
    return out;
}

GeneratorSet pc_generators(const Splitting& s, const InvariantSet& inv) {
    require_scenario_algebra(s, inv);
    const auto& g = *s.algebra;
    const auto part = s.partition();
    GeneratorSet out;
    out.scenario = s.scenario;
    out.kind = "pc-subalgebra";
    out.expected_count = static_cast<std::size_t>(g.magic_number());
    switch (s.scenario) {
        case Scenario::Borel:
            add_coordinates(out, g, g.indices_of(BasisKind::Cartan), "cartan-basis", part);
            for (std::size_t j = 0; j < inv.size(); ++j)
                add_components(out, inv.polys[j], inv.info[j].label, part, 1, inv.degrees[j] - 1);
            break;
        case Scenario::Involution:
            for (std::size_t j = 0; j < inv.size(); ++j)
                add_components(out, inv.polys[j], inv.info[j].label, part, 1, inv.degrees[j]);
            break;
        case Scenario::Manin:
            for (auto [a, b] : copy_pairs(inv)) {
                const int d = inv.degrees[a];
                const int eps = sign_of_degree(d);
                // H_I + (-1)^d H_II keeps components 1..d; H_I - (-1)^d H_II has no (d,0) part
                const Poly plus = eps > 0 ? Poly(inv.polys[a] + inv.polys[b]) : Poly(inv.polys[a] - inv.polys[b]);
                const Poly minus = eps > 0 ? Poly(inv.polys[a] - inv.polys[b]) : Poly(inv.polys[a] + inv.polys[b]);
                add_components(out, plus, combo_name(inv, a, b, eps), part, 1, d);
                add_components(out, minus, combo_name(inv, a, b, -eps), part, 1, d - 1);
            }
            add_coordinates(out, g, g.indices_of(BasisKind::Cartan), "diagonal-cartan-basis", part);
            break;
    }
    return out;
}

Poly top_invariant_monomial(const LieAlgebra& g) {
    const auto& rs = g.roots().value();
    Exponent e(g.dim(), 0);
    e[rs.e_index[rs.highest_root]] = 1;
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i)
        e[rs.f_index[rs.simple_roots[i]]] += static_cast<std::uint8_t>(rs.highest_root_coefficients[i]);
    return Poly::monomial(e, Rational(1));
}

GeneratorSet maximality_witness(const Splitting& s, const InvariantSet& inv) {
    if (s.scenario != Scenario::Borel) throw UnsupportedError("the witness set is defined for the borel scenario");
    require_scenario_algebra(s, inv);
    const auto& g = *s.algebra;
    const auto& rs = g.roots().value();
    const auto part = s.partition();
    GeneratorSet out = pc_generators(s, inv);
    out.kind = "witness";
    // H_l^top-r = c e_δ Π f_i^{a_i} is generated by the root vectors added below
    const int dl = inv.degrees.back();
    const std::string top_origin = "(" + inv.info.back().label + ")" + bidegree_suffix({1, dl - 1});
    std::erase_if(out.items, [&](const GeneratorItem& it) { return it.origin == top_origin; });
    out.expected_count = static_cast<std::size_t>(g.magic_number() + g.rank());
    add_coordinates(out, g, {rs.e_index[rs.highest_root]}, "highest-root-vector", part);
    std::vector<std::size_t> fs;
    for (auto sr : rs.simple_roots) fs.push_back(rs.f_index[sr]);
    add_coordinates(out, g, fs, "simple-negative-root-vector", part);
    return out;
}

std::optional<Rational> top_invariant_scalar(const Splitting& s, const InvariantSet& inv) {
    require_scenario_algebra(s, inv);
    const auto top = top_component(inv.polys.back(), s.partition(), TopSide::SecondSummandMax).second;
    const Poly mono = top_invariant_monomial(*s.algebra);
    if (top.size() != 1) return std::nullopt;
    const auto& [exp, c] = *top.terms().begin();
    if (exp != mono.terms().begin()->first) return std::nullopt;
    return c;
}

GgsDegreeSum ggs_degree_sum(const Splitting& s, const InvariantSet& inv) {
    require_scenario_algebra(s, inv);
    const auto part = s.partition();
    GgsDegreeSum out;
    std::vector<Poly> family;
    TopSide side = TopSide::FirstSummandMax;
    switch (s.scenario) {
        case Scenario::Borel:
            family = inv.polys;
            side = TopSide::SecondSummandMax;
            out.dim_v = static_cast<int>(s.r_indices.size());
            out.side = "r";
            break;
        case Scenario::Involution:
            family = inv.polys;
            out.dim_v = static_cast<int>(s.h_indices.size());
            out.side = "h";
            break;
        case Scenario::Manin:
            for (auto [a, b] : copy_pairs(inv)) {
                family.push_back(inv.polys[a] + inv.polys[b]);
                family.push_back(inv.polys[a] - inv.polys[b]);
            }
            out.dim_v = static_cast<int>(s.h_indices.size());
            out.side = "h";
            break;
    }
    for (const auto& p : family) {
        const auto b = top_component(p, part, side).first;
        out.sum += side == TopSide::SecondSummandMax ? b.r : b.h;
    }
    return out;
}

std::string vandermonde_closure(const Splitting& s, const InvariantSet& inv, const GeneratorSet& gens,
                                const std::vector<Rational>& ts) {
    require_scenario_algebra(s, inv);
    const auto part = s.partition();
    // coordinate generators: single variables; everything in S(free) is in the algebra
    std::set<std::size_t> free;
    std::vector<const GeneratorItem*> others;
    for (const auto& it : gens.items) {
        if (it.poly.degree() == 1 && it.poly.size() == 1) {
            const auto& e = it.poly.terms().begin()->first;
            free.insert(static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin()));
        } else {
            others.push_back(&it);
        }
    }
    auto in_free = [&](const Exponent& e) {
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] != 0 && !free.count(v)) return false;
        return true;
    };
    for (const auto& t : ts) {
        for (std::size_t j = 0; j < inv.size(); ++j) {
            const Poly image = apply_phi(inv.polys[j], part, t);
            for (const auto& [bd, comp] : bihomogeneous_decompose(image, part)) {
                std::vector<const Poly*> cands;
                for (const auto* it : others)
                    if (it->bidegree && *it->bidegree == bd) cands.push_back(&it->poly);
                std::map<Exponent, std::size_t> rows;
                auto index_terms = [&](const Poly& p) {
                    for (const auto& [e, c] : p.terms())
                        if (!in_free(e)) rows.emplace(e, rows.size());
                };
                index_terms(comp);
                for (const auto* c : cands) index_terms(*c);
                if (rows.empty()) continue;
                QMatrix a = zero_matrix(rows.size(), cands.size());
                QVector rhs = zero_vector(rows.size());
                for (std::size_t k = 0; k < cands.size(); ++k)
                    for (const auto& [e, c] : cands[k]->terms())
                        if (!in_free(e)) a(rows.at(e), k) = c;
                for (const auto& [e, c] : comp.terms())
                    if (!in_free(e)) rhs(rows.at(e)) = c;
                if (!solve_exact(a, rhs))
                    return "phi_" + to_string(t) + "(" + inv.info[j].label + ") component " + bidegree_suffix(bd) +
                           " is outside the generated algebra";
            }
        }
    }
    return "";
}

}  // namespace pcsub
