#pragma once

// JSON encodings used by reports and the command-line tool. Rationals are
// always lowest-terms "num/den" strings.

#include <json.hpp>

#include "cellini/affine_points.hpp"
#include "cellini/finite_field.hpp"
#include "cellini/measure.hpp"
#include "cellini/weyl.hpp"

namespace cellini {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }
inline Json to_json(const PermA& w) { return w.images(); }
inline Json to_json(const PermC& w) { return w.images(); }
Json to_json(const ClassLabel& c);
Json to_json(const ClassMeasure& m);
Json to_json(const AlcovePoint& p);
/// Coefficient array, constant term first.
Json to_json(const ff::FqPoly& f);

/// {"group":{"type":..,"n":..},"k":..,"entries":[{"element":[..],"value":".."}]}
template <class Perm>
Json to_json(const Measure<Perm>& m) {
  Json j;
  j["group"] = {{"type", to_string(weyl_type_of<Perm>())}, {"n", m.n()}};
  if (m.k) j["k"] = *m.k;
  Json entries = Json::array();
  for (const auto& [w, v] : m.entries()) entries.push_back({{"element", to_json(w)}, {"value", to_json(v)}});
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace cellini
