#include "nlie/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nlie {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ParseError, path + ": " + msg);
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t index1(const Json& j, std::size_t d, const std::string& path) {
  const std::int64_t i = integer(j, path);
  if (i < 1 || static_cast<std::uint64_t>(i) > d) {
    throw Error(ErrorCode::IndexOutOfRange, path + ": index " + std::to_string(i) + " outside [1, " +
                                                std::to_string(d) + "]");
  }
  return static_cast<std::size_t>(i - 1);
}

}  // namespace

Json field_json(const Field& f) {
  if (!f.is_finite()) return "Q";
  Json j;
  j["p"] = f.characteristic();
  j["k"] = f.degree();
  return j;
}

Field field_from_json(const Json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  if (!j.is_object()) fail("field", "expected {\"p\": p, \"k\": k} or \"Q\"");
  const std::int64_t p = integer(member(j, "p", "field"), "field.p");
  std::int64_t k = 1;
  if (j.contains("k")) k = integer(j["k"], "field.k");
  if (k < 1 || k > static_cast<std::int64_t>(kMaxFieldDegree)) fail("field.k", "degree out of range");
  return make_field(p, static_cast<int>(k));
}

NLieAlgebra parse_algebra(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
  }
  if (!root.is_object()) fail("$", "expected an object");
  const std::int64_t n = integer(member(root, "arity", "$"), "arity");
  const std::int64_t d = integer(member(root, "dimension", "$"), "dimension");
  if (n < 2) fail("arity", "must be at least 2");
  if (d < n) fail("dimension", "must be at least the arity");
  if (d > 64) fail("dimension", "too large");
  const Field f = field_from_json(member(root, "field", "$"));
  StructureTensor t(f, static_cast<unsigned>(n), static_cast<std::size_t>(d));

  const Json& brackets = member(root, "brackets", "$");
  if (!brackets.is_array()) fail("brackets", "expected an array");
  std::set<IndexTuple> seen;
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string path = "brackets[" + std::to_string(b) + "]";
    const Json& entry = brackets[b];
    if (!entry.is_object()) fail(path, "expected an object");
    const Json& args = member(entry, "args", path);
    if (!args.is_array() || args.size() != static_cast<std::size_t>(n)) {
      fail(path + ".args", "expected " + std::to_string(n) + " indices");
    }
    IndexTuple idx;
    for (std::size_t i = 0; i < args.size(); ++i) {
      idx.push_back(index1(args[i], t.dim(), path + ".args[" + std::to_string(i) + "]"));
      if (i > 0 && idx[i] <= idx[i - 1]) fail(path + ".args", "indices are not strictly increasing");
    }
    if (!seen.insert(idx).second) {
      std::string shown;
      for (std::size_t i : idx) shown += (shown.empty() ? "" : ",") + std::to_string(i + 1);
      throw Error(ErrorCode::DuplicateBracket, path + ": args [" + shown + "] given twice");
    }
    const Json& value = member(entry, "value", path);
    if (!value.is_array()) fail(path + ".value", "expected an array of [index, scalar] pairs");
    Vector v(f, t.dim());
    std::vector<bool> set(t.dim(), false);
    for (std::size_t i = 0; i < value.size(); ++i) {
      const std::string vp = path + ".value[" + std::to_string(i) + "]";
      const Json& pair = value[i];
      if (!pair.is_array() || pair.size() != 2) fail(vp, "expected [index, scalar]");
      const std::size_t k = index1(pair[0], t.dim(), vp + "[0]");
      if (set[k]) fail(vp, "coordinate " + std::to_string(k + 1) + " given twice");
      set[k] = true;
      if (!pair[1].is_string()) throw Error(ErrorCode::ScalarSyntax, vp + "[1]: scalars are written as strings");
      try {
        v[k] = f.parse(pair[1].get<std::string>());
      } catch (const Error& e) {
        throw Error(e.code(), vp + "[1]: " + e.what());
      }
    }
    t.set(idx, std::move(v));
  }
  return NLieAlgebra(std::move(t));
}

NLieAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

Json algebra_json(const StructureTensor& t) {
  Json j;
  j["arity"] = t.arity();
  j["dimension"] = t.dim();
  j["field"] = field_json(t.field());
  Json brackets = Json::array();
  for (const auto& idx : t.support()) {
    Json args = Json::array();
    for (std::size_t i : idx) args.push_back(i + 1);
    Json value = Json::array();
    const Vector& v = t.value(idx);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_zero()) value.push_back(Json::array({k + 1, v[k].to_string()}));
    }
    Json entry;
    entry["args"] = std::move(args);
    entry["value"] = std::move(value);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  return j;
}

std::string serialize_algebra(const StructureTensor& t) { return algebra_json(t).dump(2) + "\n"; }

Json vector_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& c : v.coords()) j.push_back(c.to_string());
  return j;
}

Json subspace_json(const Subspace& s) {
  Json j = Json::array();
  for (const auto& b : s.basis()) j.push_back(vector_json(b));
  return j;
}

Json matrix_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(vector_json(m.row(r)));
  return j;
}

namespace {

Json tuple_json(const IndexTuple& t) {
  Json j = Json::array();
  for (std::size_t i : t) j.push_back(i + 1);
  return j;
}

Json scalars_json(const std::vector<Scalar>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(x.to_string());
  return j;
}

Json vectors_json(const std::vector<Vector>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(vector_json(v));
  return j;
}

}  // namespace

Json validation_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid;
  if (!r.valid) {
    j["x"] = tuple_json(r.x);
    j["y"] = tuple_json(r.y);
    j["lhs"] = vector_json(*r.lhs);
    j["rhs"] = vector_json(*r.rhs);
  }
  return j;
}

Json filippov_json(const FilippovCheck& c) {
  Json j;
  j["holds"] = c.holds;
  if (!c.holds) {
    j["trial"] = c.trial;
    j["x"] = vectors_json(c.x);
    j["y"] = vectors_json(c.y);
    j["lhs"] = vector_json(*c.lhs);
    j["rhs"] = vector_json(*c.rhs);
  }
  return j;
}

Json cartan_json(const CartanReport& r) {
  Json j;
  j["field"] = field_json(r.algebra.field());
  j["extension_degree"] = r.extension_degree;
  j["dimension"] = r.h.dim();
  j["basis"] = subspace_json(r.h);
  j["witness"] = vectors_json(r.witness);
  j["nilpotent"] = r.nilpotent;
  j["self_normalizing"] = r.self_normalizing;
  j["search"] = r.exhaustive ? "exhaustive" : "random";
  j["examined"] = r.examined;
  return j;
}

Json trace_json(const CaseTrace& t) {
  Json j;
  j["branch"] = std::string(to_string(t.branch));
  if (t.h) j["h"] = subspace_json(*t.h);
  if (!t.witness.empty()) j["witness"] = vectors_json(t.witness);
  j["eigenvalues"] = scalars_json(t.eigenvalues);
  j["theta"] = t.theta ? Json(t.theta->to_string()) : Json(nullptr);
  Json vectors = Json::object();
  if (t.u) vectors["u"] = vector_json(*t.u);
  if (t.v) vectors["v"] = vector_json(*t.v);
  j["vectors"] = std::move(vectors);
  return j;
}

Json codim1_json(const Codim1Result& r) {
  Json j;
  j["extension_degree"] = r.extension_degree;
  j["field"] = field_json(r.field);
  j["basis"] = subspace_json(r.s);
  j["case"] = trace_json(r.trace);
  j["verified"] = true;
  return j;
}

Json contradiction_json(const ContradictionReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["conclusion"] = r.conclusion;
  j["n"] = r.n;
  if (r.field) j["field"] = field_json(*r.field);
  if (r.h) j["h"] = subspace_json(*r.h);
  if (r.d) j["d"] = matrix_json(*r.d);
  j["eigenvalues"] = scalars_json(r.eigenvalues);
  j["vectors"] = vectors_json(r.vectors);
  if (r.s) j["s"] = subspace_json(*r.s);
  if (r.kind == "triple-char2") {
    Json p;
    p["reordering_found"] = r.reordering_found;
    p["ordering"] = tuple_json(r.ordering);
    if (r.auvw) p["a_u_v_w"] = vector_json(*r.auvw);
    if (r.p_direct) p["direct"] = vector_json(*r.p_direct);
    if (r.p_expansion) p["expansion"] = vector_json(*r.p_expansion);
    p["listed_terms"] = vectors_json(r.listed_terms);
    if (r.predicted) p["predicted"] = vector_json(*r.predicted);
    j["p"] = std::move(p);
  }
  return j;
}

}  // namespace nlie
