#include "abel/io.hpp"

#include <fstream>

#include "abel/error.hpp"

namespace abel::io {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

}  // namespace

int read_context(const Json& doc) {
  if (!doc.is_object() || !doc.contains("D")) return 0;
  const Json& d = doc["D"];
  if (!d.is_number_integer()) bad("D", "expected an integer radicand");
  long long D = d.get<long long>();
  if (D == 0 || D == 1) return 0;
  if (!is_squarefree(D) || D > 1'000'000'000) bad("D", "radicand must be a squarefree integer > 1");
  return static_cast<int>(D);
}

Scalar scalar_from_json(const Json& j, int context, const std::string& field) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) bad(field, "expected a scalar string");
  try {
    return Scalar::parse(j.get<std::string>(), context);
  } catch (const Error& e) {
    bad(field, e.what());
  }
}

Poly poly_from_json(const Json& j, int context, const std::string& field) {
  const Json* coeffs = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) bad(field, "missing 'coeffs'");
    coeffs = &j["coeffs"];
  }
  if (!coeffs->is_array()) bad(field + ".coeffs", "expected an array");
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < coeffs->size(); ++i)
    c.push_back(scalar_from_json((*coeffs)[i], context, field + ".coeffs[" + std::to_string(i) + "]"));
  return Poly(std::move(c));
}

Interval interval_from_json(const Json& j, int context, const std::string& field) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) bad(field, "expected {\"a\": ..., \"b\": ...}");
  Scalar a = scalar_from_json(j["a"], context, field + ".a");
  Scalar b = scalar_from_json(j["b"], context, field + ".b");
  if (a == b) bad(field, "degenerate interval: a == b");
  return Interval(a, b);
}

TrigPoly trig_from_json(const Json& j, int context, const std::string& field) {
  if (!j.is_object()) bad(field, "expected a trigonometric polynomial object");
  TrigPoly f;
  if (j.contains("a0")) f += TrigPoly::constant(scalar_from_json(j["a0"], context, field + ".a0"));
  for (const char* kind : {"cos", "sin"}) {
    if (!j.contains(kind)) continue;
    const Json& m = j[kind];
    std::string sub = field + "." + kind;
    if (!m.is_object()) bad(sub, "expected an object keyed by frequency");
    for (const auto& [key, value] : m.items()) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        bad(sub, "frequency '" + key + "' is not an integer");
      }
      if (k < 1) bad(sub, "frequency " + key + " must be >= 1");
      Scalar c = scalar_from_json(value, context, sub + "." + key);
      if (kind[0] == 'c') f.add_cos(k, c);
      else f.add_sin(k, c);
    }
  }
  return f;
}

Json to_json(const Scalar& x) { return x.str(); }

Json to_json(const Poly& f) {
  Json c = Json::array();
  for (const auto& s : f.coeffs()) c.push_back(s.str());
  return Json{{"coeffs", c}};
}

Json to_json(const Interval& iv) { return Json{{"a", iv.a.str()}, {"b", iv.b.str()}}; }

Json to_json(const TrigPoly& f) {
  Json out = Json::object();
  out["a0"] = f.a0().str();
  Json c = Json::object();
  for (const auto& [k, v] : f.cos_coeffs()) c[std::to_string(k)] = v.str();
  Json s = Json::object();
  for (const auto& [k, v] : f.sin_coeffs()) s[std::to_string(k)] = v.str();
  out["cos"] = c;
  out["sin"] = s;
  return out;
}

Json to_json(const CenterTable& t) {
  Json out = Json::object();
  for (const auto& [kj, v] : t.entries) out[std::to_string(kj.first) + "," + std::to_string(kj.second)] = v.str();
  return out;
}

EquationInput equation_from_json(const Json& doc) {
  if (!doc.is_object()) bad("<root>", "expected a JSON object");
  int ctx = read_context(doc);
  if (!doc.contains("interval")) bad("interval", "missing");
  Interval iv = interval_from_json(doc["interval"], ctx, "interval");
  bool prim = doc.contains("P") || doc.contains("Q");
  bool deriv = doc.contains("p") || doc.contains("q");
  if (prim && deriv) bad("P", "give either primitives P, Q or derivatives p, q, not both");
  EquationInput in{Poly(), Poly(), Poly(), Poly(), iv, prim};
  if (prim) {
    if (!doc.contains("P")) bad("P", "missing");
    if (!doc.contains("Q")) bad("Q", "missing");
    in.P = poly_from_json(doc["P"], ctx, "P");
    in.Q = poly_from_json(doc["Q"], ctx, "Q");
    in.p = derivative(in.P);
    in.q = derivative(in.Q);
  } else {
    if (!doc.contains("p")) bad("p", "missing");
    if (!doc.contains("q")) bad("q", "missing");
    in.p = poly_from_json(doc["p"], ctx, "p");
    in.q = poly_from_json(doc["q"], ctx, "q");
    in.P = primitive(in.p, iv.a);
    in.Q = primitive(in.q, iv.a);
  }
  return in;
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("field 'input': cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("field 'input': malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace abel::io
