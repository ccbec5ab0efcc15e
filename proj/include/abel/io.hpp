#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "abel/center.hpp"
#include "abel/poly.hpp"
#include "abel/trig.hpp"

namespace abel::io {

using Json = nlohmann::ordered_json;

/// Radicand declared by an optional top-level "D" field; 0 when absent.
int read_context(const Json& doc);

Scalar scalar_from_json(const Json& j, int context, const std::string& field);
Poly poly_from_json(const Json& j, int context, const std::string& field);
Interval interval_from_json(const Json& j, int context, const std::string& field);
TrigPoly trig_from_json(const Json& j, int context, const std::string& field);

Json to_json(const Scalar& x);
Json to_json(const Poly& f);
Json to_json(const Interval& iv);
Json to_json(const TrigPoly& f);
Json to_json(const CenterTable& t);

/// Coefficients p, q of the equation on an interval, read from either
/// primitives ("P", "Q") or derivatives ("p", "q").
struct EquationInput {
  Poly p;
  Poly q;
  Poly P;
  Poly Q;
  Interval iv;
  bool from_primitives = false;
};

EquationInput equation_from_json(const Json& doc);

Json parse_file(const std::string& path);

}  // namespace abel::io
