#include "troplab/json_io.hpp"

#include <stdexcept>

namespace troplab {

namespace {

const char* kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Vertical:
      return "vertical";
    case EdgeKind::Lower:
      return "lower";
    case EdgeKind::Upper:
      return "upper";
  }
  return "?";
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

Json to_json(const TodaState& s) { return Json{{"g", s.genus()}, {"Q", to_json(s.q())}, {"W", to_json(s.w())}}; }

Json to_json(const ConservedVector& c) { return Json{{"C", to_json(c.values())}}; }

Json to_json(const BBSState& b) { return Json{{"L", b.length()}, {"cells", b.str()}}; }

Json to_json(const CurveModel& curve) {
  Json j;
  j["g"] = curve.genus();
  j["C"] = to_json(curve.C().values());
  j["lambda"] = to_json(curve.lambda());
  j["p"] = to_json(curve.p());
  Json vs = Json::array();
  for (const auto& v : curve.vertices()) vs.push_back({{"X", to_json(v.x)}, {"Y", to_json(v.y)}});
  j["vertices"] = vs;
  Json es = Json::array();
  for (std::size_t id = 0; id < curve.edges().size(); ++id) {
    const auto& e = curve.edges()[id];
    es.push_back({{"id", id},
                  {"kind", kind_name(e.kind)},
                  {"k", e.k},
                  {"tail", e.tail},
                  {"head", e.head},
                  {"xi", {e.xi[0], e.xi[1]}},
                  {"weight", to_json(e.weight)}});
  }
  j["edges"] = es;
  Json cs = Json::array();
  for (int i = 1; i <= curve.genus(); ++i) {
    Json loop = Json::array();
    for (const auto& [edge, sign] : curve.cycle(i)) loop.push_back({{"edge", edge}, {"sign", sign}});
    cs.push_back(loop);
  }
  j["cycles"] = cs;
  return j;
}

Json to_json(const PeriodData& p) {
  return Json{{"K", to_json(p.K)},       {"Lambda", to_json(p.Lambda)},       {"A", to_json(p.A)},
              {"detK", to_json(p.detK)}, {"detLambda", to_json(p.detLambda)}, {"detA", to_json(p.detA)}};
}

Json to_json(const GraphPoint& p) {
  return Json{{"X", to_json(p.x)}, {"Y", to_json(p.y)}, {"edge", p.edge}, {"offset", to_json(p.offset)}};
}

Json to_json(const Divisor& d) {
  Json a = Json::array();
  for (const auto& p : d) a.push_back(to_json(p));
  return a;
}

Json to_json(const JacPoint& p) { return Json{{"basis", to_string(p.basis)}, {"z", to_json(p.z)}}; }

Json to_json(const BranchTrace& t) {
  Json j{{"g", t.genus}};
  if (t.genus == 2) {
    j["first_branch"] = t.first_branch;
    j["x_tie"] = t.x_tie;
  } else if (t.genus == 3) {
    j["s"] = {t.s[0], t.s[1], t.s[2]};
    j["level"] = t.level;
  }
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a rational string, got " + j.dump());
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array, got " + j.dump());
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

TodaState toda_from_json(const Json& j) {
  TodaState s(vec_from_json(field(j, "Q")), vec_from_json(field(j, "W")));
  if (j.contains("g") && j.at("g").get<int>() != s.genus()) {
    throw std::invalid_argument("\"g\" does not match the length of Q and W");
  }
  return s;
}

ConservedVector conserved_from_json(const Json& j) {
  return ConservedVector(vec_from_json(j.is_array() ? j : field(j, "C")));
}

Divisor divisor_from_json(const CurveModel& curve, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("a divisor is an array of points");
  Divisor d;
  for (const auto& p : j) d.push_back(curve.locate(rational_from_json(field(p, "X")), rational_from_json(field(p, "Y"))));
  return d;
}

}  // namespace troplab
