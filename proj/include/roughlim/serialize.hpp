#pragma once

#include <string>

#include "json.hpp"
#include "roughlim/sequence.hpp"
#include "roughlim/space.hpp"
#include "roughlim/topology.hpp"

namespace roughlim {

using Json = nlohmann::json;

// Rationals travel as exact "p/q" (or plain "p") strings; decimal numbers
// are rejected everywhere so no precision can leak in through I/O.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& value);

/// {"labels": [...], "matrix": [["p/q", ...], ...]}. Parsing validates the
/// schema first (SchemaError) and then the axioms (AxiomError), so the two
/// failure modes stay distinguishable.
Json space_to_json(const Space& space);
Space space_from_json(const Json& doc);

/// {"prefix": [indices], "cycle": [indices]}.
Json sequence_to_json(const Sequence& seq);
Sequence sequence_from_json(const Json& doc);

/// {"candidate": label, "r_two": "p/q", "r_right": "p/q", "r_left": "p/q"}.
Json roughness_report_to_json(const Space& space, const RoughnessReport& report);

Json axiom_violation_to_json(const AxiomViolation& violation, const Space* space = nullptr);

/// Subset as a lexicographically sorted label array.
Json point_set_to_json(const Space& space, const PointSet& set);

/// Canonical dump: list of opens as sorted label arrays, ordered by size
/// then lexicographically. Stable across runs, suitable for golden files.
Json topology_to_json(const Topology& topology);

} // namespace roughlim
