#ifndef BASISKIT_IO_HPP
#define BASISKIT_IO_HPP

#include <cstddef>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "basiskit/basis.hpp"
#include "basiskit/errors.hpp"
#include "basiskit/finite_group.hpp"
#include "basiskit/fixtures.hpp"
#include "basiskit/geom_object.hpp"
#include "basiskit/matrix.hpp"
#include "basiskit/matrix_group.hpp"
#include "basiskit/representation.hpp"

// JSON descriptors for groups, representations, bases and objects.
namespace basiskit::io {

using json = nlohmann::ordered_json;

struct LoadOptions {
  double tol = kDefaultTolerance;
  std::size_t cap = kDefaultEnumerationCap;
};

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, (where.empty() ? std::string("/") : where) + ": " + what);
}

/// Parses JSON text; syntax errors report line and column.
inline json parse_text(const std::string& text, const std::string& source = "<input>") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (const auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
    throw Error(ErrorKind::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

inline json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field \"" + key + "\"");
  return *it;
}

inline const json* optional_field(const json& j, const std::string& key) {
  if (!j.is_object()) return nullptr;
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

inline std::string string_field(const json& j, const std::string& key, const std::string& where,
                                std::optional<std::string> fallback = std::nullopt) {
  const json* v = optional_field(j, key);
  if (!v) {
    if (fallback) return *fallback;
    fail(where, "missing field \"" + key + "\"");
  }
  if (!v->is_string()) fail(where + "/" + key, "expected a string");
  return v->get<std::string>();
}

inline std::size_t index_value(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::size_t size_field(const json& j, const std::string& key, const std::string& where,
                              std::optional<std::size_t> fallback = std::nullopt) {
  const json* v = optional_field(j, key);
  if (!v) {
    if (fallback) return *fallback;
    fail(where, "missing field \"" + key + "\"");
  }
  return index_value(*v, where + "/" + key);
}

// ---------------------------------------------------------------------------
// Scalars, vectors, matrices
// ---------------------------------------------------------------------------

/// Exact scalars are written "n" or "n/d"; float scalars as JSON numbers.
template <Scalar T>
T scalar_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      const Rational q = Rational::parse(j.get<std::string>());
      if constexpr (scalar_traits<T>::exact) {
        return q;
      } else {
        return q.to_double();
      }
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_integer()) {
    if constexpr (scalar_traits<T>::exact) {
      return Rational(static_cast<long>(j.get<long long>()));
    } else {
      return static_cast<double>(j.get<long long>());
    }
  }
  if (j.is_number_float()) {
    if constexpr (scalar_traits<T>::exact) {
      fail(where, "non-integer number in exact mode; write it as \"n/d\"");
    } else {
      return j.get<double>();
    }
  }
  fail(where, "expected a number or a \"n/d\" string");
}

template <Scalar T>
json scalar_to_json(const T& x) {
  if constexpr (scalar_traits<T>::exact) {
    return x.str();
  } else {
    return x;
  }
}

template <Scalar T>
Vector<T> vector_from_json(const json& j, const std::string& where, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) fail(where, "expected an array");
  if (size && j.size() != *size) {
    fail(where, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  }
  Vector<T> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json<T>(j[i], where + "/" + std::to_string(i)));
  return v;
}

template <Scalar T>
json vector_to_json(const Vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

template <Scalar T>
Matrix<T> matrix_from_json(const json& j, const std::string& where, std::optional<std::size_t> dim = std::nullopt) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of rows");
  std::vector<Vector<T>> rows;
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string at = where + "/" + std::to_string(r);
    if (!j[r].is_array()) fail(at, "row " + std::to_string(r) + " is not an array");
    if (j[r].size() != cols) {
      fail(at, "row " + std::to_string(r) + " has " + std::to_string(j[r].size()) + " entries, expected " +
                   std::to_string(cols));
    }
    rows.push_back(vector_from_json<T>(j[r], at));
  }
  if (dim && (rows.size() != *dim || cols != *dim)) {
    fail(where, "expected a " + std::to_string(*dim) + "x" + std::to_string(*dim) + " matrix");
  }
  return Matrix<T>::from_rows(rows);
}

template <Scalar T>
json matrix_to_json(const Matrix<T>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row_vector(r)));
  return out;
}

/// Table of non-negative integers below `bound`; errors name the row and column.
inline std::vector<std::vector<std::size_t>> index_table_from_json(const json& j, const std::string& where,
                                                                   std::size_t bound,
                                                                   std::optional<std::size_t> rows = std::nullopt,
                                                                   std::optional<std::size_t> cols = std::nullopt) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  if (rows && j.size() != *rows) {
    fail(where, "expected " + std::to_string(*rows) + " rows, found " + std::to_string(j.size()));
  }
  const std::size_t width = cols.value_or(j.size());
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array()) fail(where, "row " + std::to_string(r) + " is not an array");
    if (j[r].size() != width) {
      fail(where, "row " + std::to_string(r) + " has " + std::to_string(j[r].size()) + " entries, expected " +
                      std::to_string(width));
    }
    std::vector<std::size_t> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      const json& x = j[r][c];
      const std::string loc = "row " + std::to_string(r) + ", column " + std::to_string(c);
      if (!x.is_number_integer() || x.get<long long>() < 0) fail(where, loc + ": expected a non-negative integer");
      const auto value = x.get<std::size_t>();
      if (value >= bound) {
        fail(where, loc + ": entry " + std::to_string(value) + " out of range (must be < " + std::to_string(bound) + ")");
      }
      row.push_back(value);
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline std::vector<std::string> names_from_json(const json* j, const std::string& where) {
  std::vector<std::string> names;
  if (!j) return names;
  if (!j->is_array()) fail(where, "expected an array of names");
  for (const auto& n : *j) {
    if (!n.is_string()) fail(where, "names must be strings");
    names.push_back(n.get<std::string>());
  }
  return names;
}

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

template <Scalar T>
using GroupHandle = std::variant<std::shared_ptr<const FiniteGroup>, std::shared_ptr<const MatrixGroup<T>>,
                                 std::shared_ptr<const AffineGroup<T>>>;

inline Family family_from_string(const std::string& s, const std::string& where) {
  if (s == "GL") return Family::GL;
  if (s == "SL") return Family::SL;
  if (s == "SO") return Family::SO;
  fail(where, "unknown family \"" + s + "\" (GL, SL or SO)");
}

inline Signature signature_from_json(const json* j, const std::string& where) {
  if (!j) return {};
  if (!j->is_array() || j->size() != 2) fail(where, "signature is [p, q]");
  return {index_value((*j)[0], where + "/0"), index_value((*j)[1], where + "/1")};
}

template <Scalar T>
MatrixGroup<T> convert_group(const MatrixGroup<Rational>& g, double tol) {
  if constexpr (scalar_traits<T>::exact) {
    return g;
  } else {
    std::vector<Matrix<double>> mats;
    for (const auto& m : g.stored()) {
      Matrix<double> d(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) d(i, k) = m(i, k).to_double();
      mats.push_back(std::move(d));
    }
    return MatrixGroup<double>::from_elements(g.family(), g.dim(), g.signature(), std::move(mats), tol);
  }
}

inline std::vector<std::string> fixture_names() {
  return {"Z2", "Z3", "Z4", "Z6", "S3", "D4", "Q8", "Z<n>", "S3-perm-matrices", "Z2-pm-identity", "signed-perm2",
          "GL2-sample", "SO2-12"};
}

template <Scalar T>
GroupHandle<T> fixture_group(const std::string& name, const std::string& where, const LoadOptions& opt) {
  for (auto& [n, g] : fixtures::all_finite()) {
    if (n == name) return std::make_shared<const FiniteGroup>(std::move(g));
  }
  if (name.size() > 1 && name[0] == 'Z' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    const std::size_t n = std::stoul(name.substr(1));
    if (n == 0 || n > kMaxFiniteOrder) fail(where, "cyclic order out of range");
    return std::make_shared<const FiniteGroup>(fixtures::cyclic(n));
  }
  if (name == "S3-perm-matrices") return std::make_shared<const MatrixGroup<T>>(fixtures::s3_permutation_matrices<T>());
  if (name == "Z2-pm-identity") return std::make_shared<const MatrixGroup<T>>(fixtures::z2_plus_minus_identity<T>());
  if (name == "signed-perm2") return std::make_shared<const MatrixGroup<T>>(fixtures::signed_permutations2<T>());
  if (name == "GL2-sample") return std::make_shared<const MatrixGroup<T>>(convert_group<T>(fixtures::gl2_sample(), opt.tol));
  if (name == "SO2-12") {
    if constexpr (scalar_traits<T>::exact) {
      fail(where, "SO2-12 has irrational entries; use --approx");
    } else {
      return std::make_shared<const MatrixGroup<double>>(fixtures::so2_rotations(12));
    }
  }
  fail(where, "unknown group fixture \"" + name + "\"");
}

/// Affine elements are {"P": [[...]], "R": [...]}.
template <Scalar T>
AffineTransform<T> affine_from_json(const json& j, const std::string& where, std::size_t dim) {
  return {matrix_from_json<T>(field(j, "P", where), where + "/P", dim), vector_from_json<T>(field(j, "R", where), where + "/R", dim)};
}

template <Scalar T>
json affine_to_json(const AffineTransform<T>& t) {
  return json{{"P", matrix_to_json(t.P)}, {"R", vector_to_json(t.R)}};
}

/// A fixture name, or {"kind": "finite" | "permutations" | "matrix" | "affine", ...}.
template <Scalar T>
GroupHandle<T> group_from_json(const json& j, const std::string& where, const LoadOptions& opt = {}) {
  if (j.is_string()) return fixture_group<T>(j.get<std::string>(), where, opt);
  const std::string kind = string_field(j, "kind", where);
  if (kind == "finite") {
    const json& t = field(j, "table", where);
    if (!t.is_array() || t.empty()) fail(where + "/table", "expected a non-empty square table");
    auto table = index_table_from_json(t, where + "/table", t.size());
    auto names = names_from_json(optional_field(j, "names"), where + "/names");
    if (!names.empty() && names.size() != table.size()) fail(where + "/names", "one name per element");
    std::optional<std::size_t> identity;
    if (const json* id = optional_field(j, "identity")) identity = index_value(*id, where + "/identity");
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(table), std::move(names), identity));
  }
  if (kind == "permutations") {
    const json& p = field(j, "perms", where);
    if (!p.is_array() || p.empty() || !p[0].is_array()) fail(where + "/perms", "expected a non-empty list of permutations");
    const std::size_t degree = p[0].size();
    auto perms = index_table_from_json(p, where + "/perms", degree, std::nullopt, degree);
    auto names = names_from_json(optional_field(j, "names"), where + "/names");
    return std::make_shared<const FiniteGroup>(group_from_permutations(perms, std::move(names)));
  }
  if (kind == "matrix") {
    const Family family = family_from_string(string_field(j, "family", where, "GL"), where + "/family");
    const std::size_t dim = size_field(j, "dim", where);
    const Signature sig = signature_from_json(optional_field(j, "signature"), where + "/signature");
    auto read_list = [&](const json& list, const std::string& at) {
      if (!list.is_array()) fail(at, "expected a list of matrices");
      std::vector<Matrix<T>> mats;
      for (std::size_t i = 0; i < list.size(); ++i) mats.push_back(matrix_from_json<T>(list[i], at + "/" + std::to_string(i), dim));
      return mats;
    };
    if (const json* gens = optional_field(j, "generators")) {
      return std::make_shared<const MatrixGroup<T>>(
          MatrixGroup<T>::from_generators(family, dim, sig, read_list(*gens, where + "/generators"), opt.cap, opt.tol));
    }
    return std::make_shared<const MatrixGroup<T>>(
        MatrixGroup<T>::from_elements(family, dim, sig, read_list(field(j, "elements", where), where + "/elements"), opt.tol));
  }
  if (kind == "affine") {
    const std::size_t dim = size_field(j, "dim", where);
    const json& list = field(j, "elements", where);
    if (!list.is_array()) fail(where + "/elements", "expected a list of {\"P\", \"R\"} objects");
    std::vector<AffineTransform<T>> ts;
    for (std::size_t i = 0; i < list.size(); ++i) {
      ts.push_back(affine_from_json<T>(list[i], where + "/elements/" + std::to_string(i), dim));
    }
    return std::make_shared<const AffineGroup<T>>(AffineGroup<T>::from_elements(dim, std::move(ts), opt.tol));
  }
  fail(where + "/kind", "unknown group kind \"" + kind + "\" (finite, permutations, matrix, affine)");
}

inline json group_to_json(const FiniteGroup& g) {
  json t = json::array();
  for (const auto& row : g.table()) t.push_back(row);
  json out{{"kind", "finite"}, {"table", t}, {"identity", g.identity_index()}};
  if (!g.names().empty()) out["names"] = g.names();
  return out;
}

template <Scalar T>
json group_to_json(const MatrixGroup<T>& g) {
  json elems = json::array();
  for (const auto& m : g.stored()) elems.push_back(matrix_to_json(m));
  json out{{"kind", "matrix"}, {"family", std::string(to_string(g.family()))}, {"dim", g.dim()}};
  out["signature"] = json::array({g.signature().p, g.signature().q});
  out["elements"] = elems;
  return out;
}

template <Scalar T>
json group_to_json(const AffineGroup<T>& g) {
  json elems = json::array();
  for (const auto& t : g.stored()) elems.push_back(affine_to_json(t));
  return json{{"kind", "affine"}, {"dim", g.dim()}, {"elements", elems}};
}

/// The finite group of a closed matrix group, labels being the matrices.
template <Scalar T>
std::shared_ptr<const FiniteGroup> as_finite(const MatrixGroup<T>& g) {
  return std::make_shared<const FiniteGroup>(g.cayley());
}

template <Scalar T>
std::shared_ptr<const FiniteGroup> require_finite(const GroupHandle<T>& g, const std::string& where) {
  if (const auto* f = std::get_if<std::shared_ptr<const FiniteGroup>>(&g)) return *f;
  if (const auto* m = std::get_if<std::shared_ptr<const MatrixGroup<T>>>(&g)) return as_finite(**m);
  fail(where, "this assignment needs a finite or closed matrix group");
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

using FiniteRep = Representation<FiniteGroup, FiniteCarrier>;
template <Scalar T>
using LinearRep = Representation<MatrixGroup<T>, CoordinateCarrier<T>>;
template <Scalar T>
using AffineRep = Representation<AffineGroup<T>, CoordinateCarrier<T>>;
template <Scalar T>
using RepHandle = std::variant<FiniteRep, LinearRep<T>, AffineRep<T>>;

inline Side side_from_string(const std::string& s, const std::string& where) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  fail(where, "side must be \"left\" or \"right\"");
}

inline Layout layout_from_string(const std::string& s, const std::string& where) {
  if (s == "row") return Layout::row;
  if (s == "column") return Layout::column;
  fail(where, "layout must be \"row\" or \"column\"");
}

inline LinearMode mode_from_string(const std::string& s, const std::string& where) {
  if (s == "direct") return LinearMode::direct;
  if (s == "inverse") return LinearMode::inverse;
  if (s == "transpose") return LinearMode::transpose;
  if (s == "inverse-transpose") return LinearMode::inverse_transpose;
  fail(where, "mode must be direct, inverse, transpose or inverse-transpose");
}

template <EnumerableGroup G, Carrier C>
Representation<G, C> with_side(const Representation<G, C>& rep, Side side) {
  return Representation<G, C>(rep.group_ptr(), rep.carrier(), side, rep.action(), rep.name());
}

/// Properties a descriptor asserts about its representation.
struct Claims {
  std::optional<bool> representation;
  std::optional<std::string> variance;
  std::optional<bool> effective;
  std::optional<bool> transitive;
  std::optional<bool> single_transitive;
  std::optional<std::string> kernel;  // "trivial" or "all"
};

inline Claims claims_from_json(const json* j, const std::string& where) {
  Claims c;
  if (!j) return c;
  if (!j->is_object()) fail(where, "claims must be an object");
  for (const auto& [key, value] : j->items()) {
    const std::string at = where + "/" + key;
    auto flag = [&]() {
      if (!value.is_boolean()) fail(at, "expected true or false");
      return value.get<bool>();
    };
    if (key == "representation") {
      c.representation = flag();
    } else if (key == "effective") {
      c.effective = flag();
    } else if (key == "transitive") {
      c.transitive = flag();
    } else if (key == "single_transitive") {
      c.single_transitive = flag();
    } else if (key == "variance" || key == "kernel") {
      if (!value.is_string()) fail(at, "expected a string");
      (key == "variance" ? c.variance : c.kernel) = value.get<std::string>();
    } else {
      fail(at, "unknown claim");
    }
  }
  return c;
}

/// {"carrier": {...}, "side": ..., "assign": {"kind": ...}} over `g`. Besides
/// the basic kinds, "contragredient" wraps {"of": <body>} and "product" takes
/// {"parts": [<body>, <body>]}.
template <Scalar T>
RepHandle<T> representation_body(const GroupHandle<T>& g, const json& body, const std::string& where) {
  const json& assign = field(body, "assign", where);
  const std::string at = where + "/assign";
  const std::string kind = string_field(assign, "kind", at);
  const json* carrier = optional_field(body, "carrier");
  const std::string carrier_kind = carrier ? string_field(*carrier, "kind", where + "/carrier") : std::string();
  const json* side_json = optional_field(body, "side");
  auto side_or = [&](Side fallback) {
    if (!side_json) return fallback;
    if (!side_json->is_string()) fail(where + "/side", "expected a string");
    return side_from_string(side_json->get<std::string>(), where + "/side");
  };
  auto finite_carrier = [&](std::optional<std::size_t> size) {
    const std::size_t m = size_field(*carrier, "size", where + "/carrier", size);
    if (m == 0) fail(where + "/carrier/size", "the carrier needs at least one point");
    auto names = names_from_json(optional_field(*carrier, "names"), where + "/carrier/names");
    if (!names.empty() && names.size() != m) fail(where + "/carrier/names", "one name per point");
    return FiniteCarrier{m, names.empty() ? nullptr : std::make_shared<const std::vector<std::string>>(std::move(names))};
  };
  auto coords_carrier = [&](std::size_t dim, double tol) {
    if (carrier_kind != "coords") fail(where + "/carrier", "this assignment acts on {\"kind\": \"coords\"}");
    if (size_field(*carrier, "dim", where + "/carrier", dim) != dim) fail(where + "/carrier/dim", "differs from the group dimension");
    return CoordinateCarrier<T>{dim, layout_from_string(string_field(*carrier, "layout", where + "/carrier", "column"), where + "/carrier/layout"),
                                tol};
  };

  if (kind == "shift-left" || kind == "shift-right") {
    if (carrier && carrier_kind != "self") fail(where + "/carrier", "shifts act on the group itself ({\"kind\": \"self\"})");
    const auto fg = require_finite(g, at);
    const bool left = kind == "shift-left";
    return with_side(tabulate(left ? left_shift(fg) : right_shift(fg)), side_or(left ? Side::left : Side::right));
  }
  if (kind == "permutation-table") {
    if (!carrier || carrier_kind != "finite") fail(where + "/carrier", "permutation tables act on {\"kind\": \"finite\", \"size\": m}");
    const auto fg = require_finite(g, at);
    const FiniteCarrier fc = finite_carrier(std::nullopt);
    auto table = index_table_from_json(field(assign, "table", at), at + "/table", fc.count, fg->order(), fc.count);
    const auto rep = permutation_representation(fg, fc.count, std::move(table), side_or(Side::left));
    return FiniteRep(fg, fc, rep.side(), rep.action(), rep.name());
  }
  if (kind == "trivial") {
    if (!carrier || carrier_kind == "finite") {
      const FiniteCarrier fc = carrier ? finite_carrier(std::nullopt) : FiniteCarrier{1};
      return trivial_representation(require_finite(g, at), fc, side_or(Side::left));
    }
    if (carrier_kind == "self") {
      const auto fg = require_finite(g, at);
      return with_side(tabulate(trivial_representation(fg, GroupCarrier<FiniteGroup>{fg})), side_or(Side::left));
    }
    if (const auto* mg = std::get_if<std::shared_ptr<const MatrixGroup<T>>>(&g)) {
      return trivial_representation(*mg, coords_carrier((*mg)->dim(), (*mg)->tolerance()), side_or(Side::left));
    }
    if (const auto* ag = std::get_if<std::shared_ptr<const AffineGroup<T>>>(&g)) {
      return trivial_representation(*ag, coords_carrier((*ag)->dim(), (*ag)->tolerance()), side_or(Side::left));
    }
    fail(where + "/carrier", "finite groups act trivially on finite carriers only");
  }
  if (kind == "linear") {
    const auto* mg = std::get_if<std::shared_ptr<const MatrixGroup<T>>>(&g);
    if (!mg) fail(at, "linear assignments need a matrix group");
    if (!carrier) fail(where, "linear assignments need {\"kind\": \"coords\", \"dim\": n, \"layout\": ...}");
    const auto cc = coords_carrier((*mg)->dim(), (*mg)->tolerance());
    return linear_representation<T>(*mg, cc.layout, side_or(Side::left),
                                    mode_from_string(string_field(assign, "mode", at, "direct"), at + "/mode"));
  }
  if (kind == "affine") {
    const auto* ag = std::get_if<std::shared_ptr<const AffineGroup<T>>>(&g);
    if (!ag) fail(at, "affine assignments need an affine group");
    if (carrier) coords_carrier((*ag)->dim(), (*ag)->tolerance());
    return with_side(affine_point_representation<T>(*ag), side_or(Side::right));
  }
  if (kind == "contragredient") {
    const RepHandle<T> inner = representation_body<T>(g, field(assign, "of", at), at + "/of");
    return std::visit([](const auto& rep) -> RepHandle<T> { return contragredient(rep); }, inner);
  }
  if (kind == "product") {
    const json& parts = field(assign, "parts", at);
    if (!parts.is_array() || parts.size() != 2) fail(at + "/parts", "a product has exactly two parts");
    const RepHandle<T> first = representation_body<T>(g, parts[0], at + "/parts/0");
    const RepHandle<T> second = representation_body<T>(g, parts[1], at + "/parts/1");
    const auto* f1 = std::get_if<FiniteRep>(&first);
    const auto* f2 = std::get_if<FiniteRep>(&second);
    if (!f1 || !f2) fail(at + "/parts", "products are supported for finite carriers");
    return tabulate(direct_product(*f1, *f2));
  }
  fail(at + "/kind", "unknown assignment \"" + kind +
                         "\" (shift-left, shift-right, permutation-table, trivial, linear, affine, contragredient, product)");
}

template <Scalar T>
struct RepDescriptor {
  RepHandle<T> rep;
  Claims claims;
};

/// {"group": <group ref>, "carrier": ..., "side": ..., "assign": ..., "claims": {...}?}
template <Scalar T>
RepDescriptor<T> representation_from_json(const json& j, const LoadOptions& opt = {}) {
  const GroupHandle<T> g = group_from_json<T>(field(j, "group", ""), "/group", opt);
  Claims claims = claims_from_json(optional_field(j, "claims"), "/claims");
  return {representation_body<T>(g, j, ""), std::move(claims)};
}

// ---------------------------------------------------------------------------
// Bases and objects
// ---------------------------------------------------------------------------

inline SpaceKind space_kind_from_string(const std::string& s, const std::string& where) {
  if (s == "central_affine") return SpaceKind::central_affine;
  if (s == "affine") return SpaceKind::affine;
  if (s == "euclid") return SpaceKind::euclid;
  if (s == "pseudo_euclid") return SpaceKind::pseudo_euclid;
  fail(where, "space kind must be central_affine, affine, euclid or pseudo_euclid");
}

inline VectorSpace space_from_json(const json* j, std::size_t dim, const std::string& where) {
  if (!j) return VectorSpace::make(SpaceKind::central_affine, dim);
  if (j->is_string()) return VectorSpace::make(space_kind_from_string(j->get<std::string>(), where), dim);
  const SpaceKind kind = space_kind_from_string(string_field(*j, "kind", where), where + "/kind");
  const std::size_t n = size_field(*j, "dim", where, dim);
  if (n != dim) fail(where + "/dim", "space dimension differs from the number of vectors");
  try {
    return VectorSpace::make(kind, n, signature_from_json(optional_field(*j, "signature"), where + "/signature"));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

inline json space_to_json(const VectorSpace& s) {
  json out{{"kind", std::string(to_string(s.kind))}, {"dim", s.dim}};
  if (s.metric()) out["signature"] = json::array({s.signature.p, s.signature.q});
  return out;
}

/// {"space": ..., "vectors": [[...]], "origin": [...]}; a bare array is a
/// list of vectors in a central affine space.
template <Scalar T>
Basis<T> basis_from_json(const json& j, const std::string& where, const LoadOptions& opt = {}) {
  const json& vectors = j.is_array() ? j : field(j, "vectors", where);
  const std::string at = j.is_array() ? where : where + "/vectors";
  const Matrix<T> e = matrix_from_json<T>(vectors, at);
  if (!e.square()) fail(at, "a basis needs n vectors of length n");
  const VectorSpace space = space_from_json(j.is_array() ? nullptr : optional_field(j, "space"), e.rows(), where + "/space");
  std::optional<Vector<T>> origin;
  if (const json* o = j.is_array() ? nullptr : optional_field(j, "origin")) {
    origin = vector_from_json<T>(*o, where + "/origin", e.rows());
  }
  return Basis<T>::make(space, e, std::move(origin), opt.tol);
}

template <Scalar T>
json basis_to_json(const Basis<T>& b) {
  json out{{"space", space_to_json(b.space())}, {"vectors", matrix_to_json(b.vectors())}};
  if (b.origin()) out["origin"] = vector_to_json(*b.origin());
  return out;
}

template <Scalar T>
TypeAFunctor<T> functor_from_json(const json& j, std::size_t n, const std::string& where, const LoadOptions& opt = {}) {
  const std::string tag = string_field(j, "tag", where);
  if (tag == "identity") return TypeAFunctor<T>::identity(n);
  if (tag == "fundamental") return TypeAFunctor<T>::fundamental(n);
  if (tag == "dual") return TypeAFunctor<T>::dual(n);
  if (tag == "tensor_power") {
    const std::size_t k = size_field(j, "k", where);
    if (k == 0 || k > 4) fail(where + "/k", "tensor power must be between 1 and 4");
    return TypeAFunctor<T>::tensor_power(n, k);
  }
  if (tag == "direct_sum") {
    const json& parts = field(j, "parts", where);
    if (!parts.is_array() || parts.empty()) fail(where + "/parts", "expected a non-empty list of functors");
    std::vector<TypeAFunctor<T>> fs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      fs.push_back(functor_from_json<T>(parts[i], n, where + "/parts/" + std::to_string(i), opt));
    }
    return TypeAFunctor<T>::direct_sum(std::move(fs));
  }
  if (tag == "table") {
    const json& el = field(j, "elements", where);
    const json& im = field(j, "images", where);
    if (!el.is_array() || !im.is_array() || el.size() != im.size() || el.empty()) {
      fail(where, "table functors need equally long, non-empty \"elements\" and \"images\"");
    }
    std::vector<Matrix<T>> keys;
    std::vector<Matrix<T>> images;
    for (std::size_t i = 0; i < el.size(); ++i) {
      keys.push_back(matrix_from_json<T>(el[i], where + "/elements/" + std::to_string(i), n));
      images.push_back(matrix_from_json<T>(im[i], where + "/images/" + std::to_string(i)));
    }
    if (!keys.front().equals(Matrix<T>::identity(n), opt.tol)) fail(where + "/elements/0", "the first element must be the identity");
    const auto group = MatrixGroup<T>::from_elements(Family::GL, n, {}, std::move(keys), opt.tol);
    return TypeAFunctor<T>::from_table(group, std::move(images));
  }
  fail(where + "/tag", "unknown functor tag \"" + tag + "\"");
}

template <Scalar T>
json functor_to_json(const TypeAFunctor<T>& f) {
  json out{{"tag", std::string(to_string(f.tag()))}};
  if (f.tag() == FunctorTag::tensor_power) out["k"] = f.power();
  if (f.tag() == FunctorTag::direct_sum) {
    json parts = json::array();
    for (const auto& p : f.parts()) parts.push_back(functor_to_json(p));
    out["parts"] = parts;
  }
  if (f.tag() == FunctorTag::table) {
    json el = json::array();
    json im = json::array();
    for (const auto& [key, image] : f.table()) {
      el.push_back(matrix_to_json(key));
      im.push_back(matrix_to_json(image));
    }
    out["elements"] = el;
    out["images"] = im;
  }
  return out;
}

/// {"functor": ..., "coords": [...], "anchor": <basis>, "w_basis": [[...]]?}
template <Scalar T>
GeometricalObject<T> object_from_json(const json& j, const std::string& where, const LoadOptions& opt = {}) {
  const Basis<T> anchor = basis_from_json<T>(field(j, "anchor", where), where + "/anchor", opt);
  TypeAFunctor<T> f = functor_from_json<T>(field(j, "functor", where), anchor.dim(), where + "/functor", opt);
  const std::size_t m = f.dim();
  Vector<T> coords = vector_from_json<T>(field(j, "coords", where), where + "/coords", m);
  std::optional<Matrix<T>> w;
  if (const json* wb = optional_field(j, "w_basis")) w = matrix_from_json<T>(*wb, where + "/w_basis", m);
  return GeometricalObject<T>::make(std::move(f), std::move(coords), anchor, std::move(w), opt.tol);
}

template <Scalar T>
json object_to_json(const GeometricalObject<T>& obj) {
  return json{{"functor", functor_to_json(obj.functor())},
              {"coords", vector_to_json(obj.coords())},
              {"anchor", basis_to_json(obj.anchor())},
              {"w_basis", matrix_to_json(obj.w_basis())}};
}

inline json verdict_to_json(const Verdict& v) {
  json out{{"check", v.check}, {"passed", v.passed}, {"mode", v.mode}, {"checked", v.checked}};
  out["counterexample"] = v.counterexample;
  out["max_residual"] = v.max_residual;
  out["mean_residual"] = v.mean_residual;
  return out;
}

}  // namespace basiskit::io

#endif  // BASISKIT_IO_HPP
