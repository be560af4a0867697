#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "nlie/cartan.hpp"
#include "nlie/codim1.hpp"
#include "nlie/oracle.hpp"

namespace nlie {

using Json = nlohmann::ordered_json;

/// Algebra file:
///   {"arity": n, "dimension": d, "field": {"p": p, "k": k} | "Q",
///    "brackets": [{"args": [i_1, ..., i_n], "value": [[index, "scalar"], ...]}, ...]}
/// Indices are 1-based and args strictly increasing. The result is unchecked.
NLieAlgebra parse_algebra(std::string_view text);
NLieAlgebra read_algebra_file(const std::string& path);

/// Canonical form: brackets in lexicographic order of args, zero coordinates
/// and zero brackets omitted.
Json algebra_json(const StructureTensor& t);
std::string serialize_algebra(const StructureTensor& t);

Json field_json(const Field& f);
Field field_from_json(const Json& j);

Json vector_json(const Vector& v);
/// RREF basis rows.
Json subspace_json(const Subspace& s);
Json matrix_json(const Matrix& m);

Json validation_json(const ValidationReport& r);
Json filippov_json(const FilippovCheck& c);
Json cartan_json(const CartanReport& r);
Json trace_json(const CaseTrace& t);
Json codim1_json(const Codim1Result& r);
Json contradiction_json(const ContradictionReport& r);

}  // namespace nlie
