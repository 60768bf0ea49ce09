#pragma once

// JSON encoding of troplab values. Rationals are "p/q" strings (integers
// without "/1"); on input plain JSON integers and decimal strings are accepted.

#include "troplab/bbs.hpp"
#include "troplab/eigenmap.hpp"
#include "troplab/jacobian.hpp"

#include <json.hpp>

namespace troplab {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Vec& v);
Json to_json(const Matrix& m);
Json to_json(const TodaState& s);
Json to_json(const ConservedVector& c);
Json to_json(const BBSState& b);
Json to_json(const CurveModel& curve);
Json to_json(const PeriodData& p);
Json to_json(const GraphPoint& p);
Json to_json(const Divisor& d);
Json to_json(const JacPoint& p);
Json to_json(const BranchTrace& t);

/// Throws std::invalid_argument naming the offending field.
Rational rational_from_json(const Json& j);
Vec vec_from_json(const Json& j);
/// {"g":..., "Q":[...], "W":[...]}; "g" is optional.
TodaState toda_from_json(const Json& j);
/// {"C":[...]} or a bare array.
ConservedVector conserved_from_json(const Json& j);
/// [{"X":..,"Y":..}, ...] placed on the curve.
Divisor divisor_from_json(const CurveModel& curve, const Json& j);

}  // namespace troplab
