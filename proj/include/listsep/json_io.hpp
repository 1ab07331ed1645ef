#pragma once

#include <string>

#include "json.hpp"
#include "listsep/choosability.hpp"
#include "listsep/colorsym.hpp"
#include "listsep/constructions.hpp"
#include "listsep/counting.hpp"
#include "listsep/kernel.hpp"
#include "listsep/search.hpp"
#include "listsep/setsys.hpp"

namespace listsep::io {

/// Insertion-ordered so that emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Parses text, reporting syntax errors as "<source>:<line>:<column>: ...".
Json parse(const std::string& text, const std::string& source = "<input>");
Json read_file(const std::string& path);

Json to_json(Subset s);
Json to_json(const Rational& q);  // "p/q", or a plain integer when q == 1
Json to_json(const ListAssignment& lists);
Json to_json(const PIVector& v);
Json to_json(const MultiColoring& coloring);
Json to_json(const ChoosabilityVerdict& verdict);
Json to_json(const ColorSymResult& result);
Json to_json(const SepResult& result);
Json to_json(const ConstructionAudit& audit);
Json to_json(const EquivClassCount& count);
Json to_json(const DegreeFit& fit);
Json to_json(const kernel::RationalVector& v);

/// Field errors name the offending path, e.g. "lists[2][0]: expected a nonnegative integer".
ListAssignment list_assignment_from_json(const Json& j);
PIVector pi_vector_from_json(const Json& j);

/// Accepts either record: a PIVector ("counts") or a ListAssignment ("lists").
bool is_pi_vector_record(const Json& j);

}  // namespace listsep::io
