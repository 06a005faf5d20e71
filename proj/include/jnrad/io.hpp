#pragma once

/**
 * @file io.hpp
 * @brief JSON encodings of spaces, tuples, problem files and results.
 *
 * Space:   {"field": "real"|"complex", "dim": n,
 *           "norm": {"kind": "lp", "r": number|"inf"}
 *                 | {"kind": "polyhedral", "primal_extremes": [[...]], "dual_extremes": [[...]]}}
 * Tuple:   {"d": d, "p": p, "matrices": [M_1, ..., M_d]}, M row-major; an entry
 *          is a number, or [re, im] when the field is complex. p defaults to 2.
 * Problem: {"space": Space, "tuple": Tuple, "direction"?: Tuple|path,
 *           "against"?: Tuple|path, "subspace"?: {"basis": [Tuple|path, ...]}|path}
 *          Relative paths resolve against the problem file's directory.
 */

#include <jnrad/errors.hpp>
#include <jnrad/orth.hpp>
#include <jnrad/radius.hpp>
#include <jnrad/space.hpp>
#include <jnrad/subdiff.hpp>
#include <jnrad/tuple.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace jnrad::io {

using json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void schema(const std::string& where, const std::string& what) {
  fail(ErrorCode::Schema, where + ": " + what);
}

inline const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing \"") + key + "\"");
  return *it;
}

inline double number(const json& j, const std::string& where) {
  if (!j.is_number()) schema(where, "expected a number");
  return j.get<double>();
}

inline Scalar scalar(const json& j, Field field, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    if (field == Field::Real) schema(where, "complex entry [re, im] in a real-field problem");
    return {j[0].get<double>(), j[1].get<double>()};
  }
  schema(where, field == Field::Real ? "expected a number" : "expected a number or [re, im]");
}

inline RealVector real_vector(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  RealVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = number(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

inline json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Schema, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Schema, path.string() + ": " + e.what());
  }
}

}  // namespace detail

inline SpaceDescriptor parse_space(const json& j, const std::string& where = "space") {
  const auto& field_j = detail::member(j, "field", where);
  if (!field_j.is_string() || (field_j != "real" && field_j != "complex"))
    detail::schema(where + ".field", "expected \"real\" or \"complex\"");
  const Field field = field_j == "real" ? Field::Real : Field::Complex;
  const auto& dim_j = detail::member(j, "dim", where);
  if (!dim_j.is_number_integer() || dim_j.get<long>() < 1) detail::schema(where + ".dim", "expected a positive integer");
  const int dim = dim_j.get<int>();
  const auto& norm = detail::member(j, "norm", where);
  const auto& kind = detail::member(norm, "kind", where + ".norm");
  if (kind == "lp") {
    const auto& r = detail::member(norm, "r", where + ".norm");
    double rv = 0.0;
    if (r.is_string() && r == "inf") {
      rv = kInf;
    } else {
      rv = detail::number(r, where + ".norm.r");
    }
    if (!(rv >= 1.0)) detail::schema(where + ".norm.r", "expected r >= 1 or \"inf\"");
    return SpaceDescriptor::lp(field, dim, rv);
  }
  if (kind == "polyhedral") {
    if (field != Field::Real) detail::schema(where + ".field", "polyhedral spaces are real-only");
    auto read_list = [&](const char* key) {
      const auto& list = detail::member(norm, key, where + ".norm");
      const std::string w = where + ".norm." + key;
      if (!list.is_array() || list.empty()) detail::schema(w, "expected a nonempty array of vectors");
      std::vector<RealVector> out;
      for (std::size_t i = 0; i < list.size(); ++i) {
        out.push_back(detail::real_vector(list[i], w + "[" + std::to_string(i) + "]"));
        if (out.back().size() != dim) detail::schema(w + "[" + std::to_string(i) + "]", "length differs from dim");
      }
      return out;
    };
    return SpaceDescriptor::polyhedral(read_list("primal_extremes"), read_list("dual_extremes"));
  }
  detail::schema(where + ".norm.kind", "expected \"lp\" or \"polyhedral\"");
}

/// Tuple in the given field. p falls back to default_p when absent.
inline OperatorTuple parse_tuple(const json& j, Field field, double default_p = 2.0,
                                 const std::string& where = "tuple") {
  const auto& mats = detail::member(j, "matrices", where);
  if (!mats.is_array() || mats.empty()) detail::schema(where + ".matrices", "expected a nonempty array of matrices");
  if (j.contains("d")) {
    const auto& d = j["d"];
    if (!d.is_number_integer() || d.get<long>() != static_cast<long>(mats.size()))
      detail::schema(where + ".d", "must equal the number of matrices");
  }
  double p = default_p;
  if (j.contains("p")) p = detail::number(j["p"], where + ".p");
  if (!(p > 1.0) || std::isinf(p)) detail::schema(where + ".p", "aggregation exponent must satisfy 1 < p < inf");
  std::vector<Matrix> ms;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const std::string wk = where + ".matrices[" + std::to_string(k) + "]";
    const auto& rows = mats[k];
    if (!rows.is_array() || rows.empty()) detail::schema(wk, "expected a nonempty array of rows");
    const auto n = static_cast<Eigen::Index>(rows.size());
    Matrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      const std::string wr = wk + "[" + std::to_string(r) + "]";
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) detail::schema(wr, "expected a row of length " + std::to_string(n));
      for (Eigen::Index c = 0; c < n; ++c)
        m(r, c) = detail::scalar(row[static_cast<std::size_t>(c)], field, wr + "[" + std::to_string(c) + "]");
    }
    ms.push_back(std::move(m));
  }
  for (std::size_t k = 1; k < ms.size(); ++k)
    if (ms[k].rows() != ms[0].rows()) detail::schema(where + ".matrices", "matrices differ in size");
  return OperatorTuple(field, std::move(ms), p);
}

struct ProblemFile {
  SpaceDescriptor space;
  std::optional<OperatorTuple> tuple;
  std::optional<OperatorTuple> direction;
  std::optional<OperatorTuple> against;
  std::optional<TupleSubspace> subspace;
};

namespace detail {

inline json resolve(const json& j, const std::filesystem::path& base) {
  if (j.is_string()) return parse_file(base / j.get<std::string>());
  return j;
}

inline void cross_validate(const SpaceDescriptor& space, const OperatorTuple& T, const std::string& where) {
  if (T.n() != space.dim())
    schema(where, "operator size " + std::to_string(T.n()) + " does not match space dim " + std::to_string(space.dim()));
}

}  // namespace detail

/// Auxiliary tuple (direction / against) in the problem's field. p defaults to the main tuple's.
inline OperatorTuple parse_aux_tuple(const json& j, const ProblemFile& prob, const std::filesystem::path& base,
                                     const std::string& where) {
  const double p = prob.tuple ? prob.tuple->p() : 2.0;
  OperatorTuple S = parse_tuple(detail::resolve(j, base), prob.space.field(), p, where);
  detail::cross_validate(prob.space, S, where);
  if (prob.tuple && S.d() != prob.tuple->d()) detail::schema(where, "direction tuple differs from the main tuple in d");
  return S;
}

inline TupleSubspace parse_subspace(const json& j, const ProblemFile& prob, const std::filesystem::path& base,
                                    const std::string& where) {
  const json resolved = detail::resolve(j, base);
  const json* list = &resolved;
  if (resolved.is_object()) list = &detail::member(resolved, "basis", where);
  if (!list->is_array()) detail::schema(where, "expected {\"basis\": [...]} or an array of tuples");
  TupleSubspace V;
  for (std::size_t k = 0; k < list->size(); ++k)
    V.basis.push_back(parse_aux_tuple((*list)[k], prob, base, where + ".basis[" + std::to_string(k) + "]"));
  return V;
}

/**
 * Reads and cross-validates a problem file. p_override, when set, replaces the
 * exponent of every tuple.
 */
inline ProblemFile load_problem(const std::filesystem::path& path, std::optional<double> p_override = std::nullopt,
                                bool require_tuple = true) {
  const json j = detail::parse_file(path);
  const auto base = path.parent_path();
  ProblemFile prob{parse_space(detail::member(j, "space", "problem"), "space"), {}, {}, {}, {}};
  if (j.contains("tuple")) {
    prob.tuple = parse_tuple(detail::resolve(j["tuple"], base), prob.space.field(), 2.0, "tuple");
    if (p_override) prob.tuple = prob.tuple->with_p(*p_override);
    detail::cross_validate(prob.space, *prob.tuple, "tuple");
  } else if (require_tuple) {
    detail::schema("problem", "missing \"tuple\"");
  }
  if (j.contains("direction")) prob.direction = parse_aux_tuple(j["direction"], prob, base, "direction");
  if (j.contains("against")) prob.against = parse_aux_tuple(j["against"], prob, base, "against");
  if (j.contains("subspace")) prob.subspace = parse_subspace(j["subspace"], prob, base, "subspace");
  return prob;
}

// ---------------------------------------------------------------------------
// Output

/// Adding +0.0 maps -0.0 to 0.0 so equal inputs print identically.
inline json to_json(Scalar s, Field field) {
  if (field == Field::Real) return s.real() + 0.0;
  return json::array({s.real() + 0.0, s.imag() + 0.0});
}

inline json to_json(const Vector& v, Field field) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i], field));
  return out;
}

inline json to_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i] + 0.0);
  return out;
}

inline json to_json(const Matrix& m, Field field) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c), field));
    out.push_back(std::move(row));
  }
  return out;
}

inline json to_json(const NormingPair& pair, Field field) {
  return json{{"x", to_json(pair.x, field)}, {"x_star", to_json(pair.x_star, field)}};
}

inline json to_json(const RadiusResult& rr, Field field) {
  json orbits = json::array();
  for (const auto& o : rr.attaining.orbits) {
    json e = to_json(o.representative, field);
    e["value"] = o.value;
    orbits.push_back(std::move(e));
  }
  return json{{"value", rr.value},
              {"method", std::string(to_string(rr.method))},
              {"exhaustive", rr.attaining.exhaustive},
              {"degenerate", rr.degenerate},
              {"orbits", std::move(orbits)}};
}

inline json to_json(const SubdiffGenerator& g, Field field) {
  json e = to_json(g.pair, field);
  e["alpha"] = to_json(g.alpha.alpha, field);
  return e;
}

inline json to_json(const OrthCertificate& cert) {
  json weights = json::array();
  json idx = json::array();
  for (const auto& w : cert.weights) {
    weights.push_back(w.t);
    idx.push_back(w.orbit_index);
  }
  return json{{"weights", std::move(weights)}, {"orbit_indices", std::move(idx)}, {"residual", cert.residual}};
}

/// True if every number in j is finite.
inline bool all_finite(const json& j) {
  if (j.is_number_float()) return std::isfinite(j.get<double>());
  if (j.is_null()) return false;
  if (j.is_structured())
    for (const auto& e : j)
      if (!all_finite(e)) return false;
  return true;
}

}  // namespace jnrad::io
