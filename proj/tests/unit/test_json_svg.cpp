#include "troplab/eigenmap.hpp"
#include "troplab/json_io.hpp"
#include "troplab/svg.hpp"

#include <doctest.h>

using troplab::ConservedVector;
using troplab::CurveModel;
using troplab::Json;
using troplab::Rational;

TEST_CASE("rationals serialize as strings") {
  CHECK(troplab::to_json(Rational(3) / Rational(4)).get<std::string>() == "3/4");
  CHECK(troplab::to_json(Rational(-2)).get<std::string>() == "-2");
  CHECK(troplab::rational_from_json(Json("5/10")) == Rational(1) / Rational(2));
  CHECK(troplab::rational_from_json(Json(7)) == Rational(7));
}

TEST_CASE("toda states round trip") {
  const auto j = Json::parse(R"({"Q":[0,"1/2",2],"W":[1,2,"3/2"]})");
  const auto s = troplab::toda_from_json(j);
  CHECK(s.genus() == 2);
  CHECK(troplab::toda_from_json(troplab::to_json(s)) == s);
  CHECK_THROWS(troplab::toda_from_json(Json::parse(R"({"Q":[0,1],"W":[1]})")));
}

TEST_CASE("divisors round trip through planar points") {
  const auto C = ConservedVector({Rational(7), Rational(3), Rational(1), Rational(0)});
  const auto curve = CurveModel::build(C);
  const auto s = troplab::enumerate_isolevel(C)[10];
  const auto d = troplab::psi(curve, s).divisor;
  CHECK(troplab::divisor_from_json(curve, troplab::to_json(d)) == d);
}

TEST_CASE("svg output") {
  const auto curve = CurveModel::build(ConservedVector({Rational(8), Rational(3), Rational(0)}));
  const auto svg = troplab::render_svg(curve, {{{Rational(3), Rational(7)}}});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
}
