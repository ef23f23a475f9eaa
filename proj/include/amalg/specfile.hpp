#pragma once

#include "amalg/algebra.hpp"
#include "amalg/constructions.hpp"
#include "amalg/representation.hpp"

#include <json.hpp>

#include <string>

namespace amalg {

// File formats. Indices are 1-based on disk (matching the usual subscript
// convention) and 0-based in memory; rationals travel as canonical "p/q"
// strings. Emission is canonical: fixed key order, entries sorted by
// (i,j,k), two-space indent, trailing newline, so emit -> parse -> emit is
// byte-identical.

using Json = nlohmann::ordered_json;

Json emit_spec(const AlgebraSpec& spec);
AlgebraSpec parse_spec(const Json& j);
AlgebraSpec load_spec(const std::string& path);

Json emit_constraints(const ConstraintSystem& cs);
ConstraintSystem parse_constraints(const Json& j);
ConstraintSystem load_constraints(const std::string& path);

std::string dump_json(const Json& j);

// Report fragments used by the CLI; all deterministic for fixed inputs.
Json axiom_report_json(const AxiomReport& rep, const AmNormVerdict& am);
Json representation_json(const RepresentationResult& rep);
Json quotient_json(const QuotientResult& q);
Json ideal_report_json(const IdealAeReport& rep);

Json element_json(const Element& x);
Json tensor_entries_json(const StructureTensor& t);

} // namespace amalg
