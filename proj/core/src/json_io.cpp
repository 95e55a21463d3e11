#include "polarfix/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "polarfix/errors.hpp"

namespace polarfix {

using nlohmann::json;

namespace {

json vector_to_json(const Vector& v) { return json(v); }

Vector vector_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw BadParams(std::string(what) + " must be a nonempty array");
  Vector out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw BadParams(std::string(what) + " must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

json rows_to_json(const std::vector<Vector>& rows) {
  json out = json::array();
  for (const Vector& r : rows) out.push_back(vector_to_json(r));
  return out;
}

std::vector<Vector> rows_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw BadParams(std::string(what) + " must be a nonempty array of arrays");
  std::vector<Vector> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(vector_from_json(e, what));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const json& j) {
  const std::vector<Vector> rows = rows_from_json(j, "matrix");
  const int n = static_cast<int>(rows.size());
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw BadParams("matrix must be square");
    for (int k = 0; k < n; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

void expect_keys(const json& doc, std::initializer_list<const char*> keys) {
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* k : keys)
      if (item.key() == k) known = true;
    if (!known) throw BadParams("unknown field '" + item.key() + "'");
  }
}

const json& need(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw BadParams(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

json endpoint_to_json(double v) {
  if (std::isnan(v)) throw BadParams("endpoint must not be NaN");
  if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
  return json(v);
}

double endpoint_from_json(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw BadParams("endpoint must be a number or \"inf\"/\"-inf\"");
}

json set_to_json(const ConvexSet& c) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>)
          return {{"type", "ball"}, {"radius", s.radius}};
        else if constexpr (std::is_same_v<T, Ellipsoid>)
          return {{"type", "ellipsoid"}, {"matrix", matrix_to_json(s.shape)}};
        else if constexpr (std::is_same_v<T, PolytopeV>)
          return {{"type", "polytope_v"}, {"vertices", rows_to_json(s.vertices)}};
        else if constexpr (std::is_same_v<T, PolytopeH>)
          return {{"type", "polytope_h"}, {"rows", rows_to_json(s.data.rows)}};
        else if constexpr (std::is_same_v<T, ConeV>)
          return {{"type", "cone_v"}, {"generators", rows_to_json(s.generators)}};
        else if constexpr (std::is_same_v<T, ConeH>)
          return {{"type", "cone_h"}, {"rows", rows_to_json(s.data.rows)}};
        else if constexpr (std::is_same_v<T, LorentzCone>)
          return {{"type", "lorentz"}, {"axis", vector_to_json(s.axis)}};
        else if constexpr (std::is_same_v<T, Orthant>)
          return {{"type", "orthant"}, {"signs", json(s.signs)}};
        else
          return {{"type", "interval"},
                  {"lo", endpoint_to_json(s.lo)},
                  {"hi", endpoint_to_json(s.hi)}};
      },
      c);
}

ConvexSet set_from_json(const json& doc) {
  if (!doc.is_object()) throw BadParams("set document must be an object");
  const json& t = need(doc, "type");
  if (!t.is_string()) throw BadParams("'type' must be a string");
  const std::string type = t.get<std::string>();

  ConvexSet out = Ball{1.0};
  if (type == "ball") {
    expect_keys(doc, {"type", "radius"});
    out = Ball{need(doc, "radius").get<double>()};
  } else if (type == "ellipsoid") {
    expect_keys(doc, {"type", "matrix"});
    out = Ellipsoid{matrix_from_json(need(doc, "matrix"))};
  } else if (type == "polytope_v") {
    expect_keys(doc, {"type", "vertices"});
    out = PolytopeV{rows_from_json(need(doc, "vertices"), "vertices")};
  } else if (type == "polytope_h") {
    expect_keys(doc, {"type", "rows"});
    out = PolytopeH{HPolyData{rows_from_json(need(doc, "rows"), "rows")}};
  } else if (type == "cone_v") {
    expect_keys(doc, {"type", "generators"});
    out = ConeV{rows_from_json(need(doc, "generators"), "generators")};
  } else if (type == "cone_h") {
    expect_keys(doc, {"type", "rows"});
    out = ConeH{HPolyData{rows_from_json(need(doc, "rows"), "rows")}};
  } else if (type == "lorentz") {
    expect_keys(doc, {"type", "axis"});
    out = LorentzCone{vector_from_json(need(doc, "axis"), "axis")};
  } else if (type == "orthant") {
    expect_keys(doc, {"type", "signs"});
    const json& sj = need(doc, "signs");
    if (!sj.is_array() || sj.empty()) throw BadParams("'signs' must be a nonempty array");
    std::vector<int> signs;
    for (const auto& e : sj) {
      if (!e.is_number_integer()) throw BadParams("'signs' must hold integers");
      signs.push_back(e.get<int>());
    }
    out = Orthant{std::move(signs)};
  } else if (type == "interval") {
    expect_keys(doc, {"type", "lo", "hi"});
    out = Interval{endpoint_from_json(need(doc, "lo")),
                   endpoint_from_json(need(doc, "hi"))};
  } else {
    throw BadParams("unknown set type '" + type + "'");
  }
  validate(out);
  return out;
}

json operator_to_json(const Operator& g) {
  return {{"matrix", matrix_to_json(g.matrix())}};
}

Operator operator_from_json(const json& doc) {
  if (!doc.is_object()) throw BadParams("operator document must be an object");
  if (doc.contains("scalar")) {
    expect_keys(doc, {"scalar", "dim"});
    const json& d = need(doc, "dim");
    if (!d.is_number_integer() || d.get<int>() < 1)
      throw BadParams("'dim' must be a positive integer");
    return Operator::scalar(need(doc, "scalar").get<double>(), d.get<int>());
  }
  expect_keys(doc, {"matrix"});
  return Operator(matrix_from_json(need(doc, "matrix")));
}

json report_to_json(const ResidualReport& rep) {
  json out{{"kind", residual_kind_name(rep.kind)},
           {"dirs", rep.dirs},
           {"max_residual", rep.max_residual},
           {"argmax", vector_to_json(rep.argmax)},
           {"verdict", rep.pass ? "pass" : "fail"},
           {"tolerance", rep.tolerance},
           {"sanity", {{"zero_in_set", rep.zero_in_set}}}};
  if (rep.kind == ResidualKind::cone_membership) {
    out["disagreements"] = rep.disagreements;
    out["excluded"] = rep.excluded;
  }
  return out;
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw BadParams("input is not valid JSON");
  return doc;
}

namespace {

void dump_rec(const json& j, std::string& out, int depth) {
  const std::string pad(2 * depth, ' ');
  const std::string pad_in(2 * (depth + 1), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      size_t i = 0;
      for (const auto& item : j.items()) {  // object keys iterate sorted
        out += pad_in + json(item.key()).dump() + ": ";
        dump_rec(item.value(), out, depth + 1);
        out += ++i < j.size() ? ",\n" : "\n";
      }
      out += pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        out += pad_in;
        dump_rec(j[i], out, depth + 1);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += pad + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v))
        throw BadParams("non-finite number outside an endpoint field");
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);  // flush -0
      out += buf;
      return;
    }
    default:
      out += j.dump();  // strings, ints, bools, null
      return;
  }
}

}  // namespace

std::string canonical_dump(const json& doc) {
  std::string out;
  dump_rec(doc, out, 0);
  out += '\n';
  return out;
}

}  // namespace polarfix
