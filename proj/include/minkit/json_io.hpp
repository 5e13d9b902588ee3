#pragma once

#include "json.hpp"

#include "minkit/ellipsoid.hpp"
#include "minkit/normspace.hpp"
#include "minkit/operators.hpp"
#include "minkit/reflect.hpp"
#include "minkit/spectral.hpp"
#include "minkit/symmetry.hpp"

namespace mink {

using nlohmann::json;

json to_json(const Vec& v);
json to_json(const Mat& m);
Vec vec_from_json(const json& j);
Mat mat_from_json(const json& j);

// {"kind":"lp"|"quadratic"|"polytopal", "p":..., "G":[[...]], "V":[[...]], "dim":n}
json to_json(const NormModel& model);
NormModel model_from_json(const json& j);

json to_json(const PredicateReport& rep);
json to_json(const NormalForm& nf);
json to_json(const Ellipsoid& e);
json to_json(const PointGroup& g);
json to_json(const GroupReport& rep);
json to_json(const AffineMap& map);
json to_json(const BatteryReport& rep);
json to_json(const ProbeReport& rep);
json to_json(const LpScanTable& t);

}  // namespace mink
