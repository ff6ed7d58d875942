#include "cellini/json_io.hpp"

namespace cellini {

Json to_json(const ClassLabel& c) {
  if (c.type == WeylType::A) return c.positive.parts;
  return {{"positive", c.positive.parts}, {"negative", c.negative.parts}};
}

Json to_json(const ClassMeasure& m) {
  Json out = Json::array();
  for (const auto& [c, v] : m.entries()) out.push_back({{"label", to_json(c)}, {"value", to_json(v)}});
  return out;
}

Json to_json(const AlcovePoint& p) {
  Json out = Json::array();
  for (const auto& x : p.v) out.push_back(to_string(x));
  return out;
}

Json to_json(const ff::FqPoly& f) { return f.c; }

}  // namespace cellini
