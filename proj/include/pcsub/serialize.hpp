#pragma once

#include "pcsub/generators.hpp"
#include "pcsub/invariants.hpp"
#include "pcsub/pencil.hpp"
#include "pcsub/rootdata.hpp"
#include "pcsub/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pcsub {

using Document = nlohmann::ordered_json;

inline constexpr const char* kDocumentVersion = "1";

/// Throws std::invalid_argument unless the document has the current version and the given kind.
void require_document(const Document& doc, const std::string& kind);

/// Constants are written as (i, j, k, num, den) with i < j; the form as its nonzero entries.
Document to_json(const AlgebraDocument& a);
AlgebraDocument algebra_from_json(const Document& doc);

/// {vars, terms: [{exp, num, den}]}, terms in descending graded lexicographic order.
Document poly_to_json(const Poly& p, const std::vector<std::string>& vars);
Poly poly_from_json(const Document& doc);

Document to_json(const InvariantSet& inv, const std::vector<std::string>& vars);
InvariantSet invariants_from_json(const Document& doc);

Document to_json(const GeneratorSet& gs, const std::vector<std::string>& vars);
GeneratorSet generators_from_json(const Document& doc);

Document to_json(const PencilProfile& p);

/// QVector from an array of rational strings.
QVector point_from_json(const Document& arr);

/// Check entries carry elapsed_ms only when with_timings is set, so default reports are reproducible.
Document to_json(const Report& r, bool with_timings = false);
Report report_from_json(const Document& doc);

}  // namespace pcsub
