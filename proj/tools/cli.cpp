#include "cli.hpp"

#include "troplab/errors.hpp"
#include "troplab/svg.hpp"
#include "troplab/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace troplab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> curve;
  std::optional<int> steps;
  std::uint64_t seed = 1;
  std::string format;
  std::string basepoint;
  std::string out;
  std::string bbs;
  std::string toda;
  std::string divisor;
  std::string jac;
  std::string svg;
  std::string arrow;
  std::vector<std::string> checks;
  std::string what;
  std::vector<std::int64_t> lambda;
  std::size_t length = 0;
  std::string basis = "K";
  int trials = 1000;
  int max_genus = 6;
  bool timing = false;
};

Json parse_json(const std::string& text, const char* flag) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON for ") + flag + " at byte " + std::to_string(e.byte) + ": " + text);
  }
}

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + ": " + e.what());
  }
}

std::optional<ConservedVector> curve_of(const RunConfig& c) {
  if (c.curve.empty()) return std::nullopt;
  std::vector<Rational> v;
  for (std::size_t i = 0; i < c.curve.size(); ++i)
    v.push_back(parse_rational(c.curve[i], "curve entry " + std::to_string(i + 1)));
  if (v.size() < 3) throw UsageError("-C needs C_{-1}, C_0, ..., C_g with g >= 1");
  return ConservedVector(std::move(v));
}

BBSState bbs_of(const RunConfig& c) {
  try {
    return BBSState::parse(c.bbs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--bbs: ") + e.what());
  }
}

TodaState toda_of(const RunConfig& c) {
  try {
    return toda_from_json(parse_json(c.toda, "--toda"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--toda: ") + e.what());
  }
}

// The state given by --toda, or beta of --bbs.
TodaState state_of(const RunConfig& c) {
  if (!c.toda.empty()) return toda_of(c);
  if (!c.bbs.empty()) return beta(bbs_of(c));
  throw UsageError("this command needs --toda or --bbs");
}

CurveModel curve_model(const RunConfig& c, const std::optional<TodaState>& s = std::nullopt) {
  if (auto C = curve_of(c)) return CurveModel::build(*C);
  if (s) return CurveModel::build(conserved(*s));
  throw UsageError("this command needs -C/--curve");
}

GraphPoint basepoint_of(const RunConfig& c, const CurveModel& curve) {
  if (c.basepoint.empty()) return curve.vertex_point(curve.lower_vertex(0));
  const auto comma = c.basepoint.find(',');
  if (comma == std::string::npos) throw UsageError("--basepoint expects X,Y");
  return curve.locate(parse_rational(c.basepoint.substr(0, comma), "--basepoint X"),
                      parse_rational(c.basepoint.substr(comma + 1), "--basepoint Y"));
}

Divisor divisor_of(const RunConfig& c, const CurveModel& curve) {
  if (c.divisor.empty()) throw UsageError("this command needs --divisor");
  try {
    return divisor_from_json(curve, parse_json(c.divisor, "--divisor"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--divisor: ") + e.what());
  }
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const bool quote = r[i].find(',') != std::string::npos;
      os << (i ? "," : "") << (quote ? "\"" + r[i] + "\"" : r[i]);
    }
    os << '\n';
  }
  return os.str();
}

std::string jac_text(const JacPoint& p) {
  std::string s = to_string(p.basis) + ":(";
  for (std::size_t i = 0; i < p.z.size(); ++i) s += (i ? "," : "") + p.z[i].str();
  return s + ")";
}

std::string divisor_text(const Divisor& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "+" : "") + ("(" + d[i].x.str() + "," + d[i].y.str() + ")");
  return s;
}

// ---------------------------------------------------------------------------

std::string cmd_evolve(const RunConfig& c) {
  const int steps = c.steps.value_or(5);
  if (steps < 0) throw UsageError("-t must be non-negative");
  const std::string fmt = c.format.empty() ? "text" : c.format;
  std::vector<std::vector<std::string>> rows;
  Json doc = Json::array();
  if (!c.bbs.empty()) {
    BBSState b = bbs_of(c);
    TodaState s = beta(b);
    rows.push_back({"t", "b(t)", "beta(b(t))", "T^t(beta(b(0)))"});
    for (int t = 0; t <= steps; ++t) {
      const TodaState bt = beta(b);
      rows.push_back({std::to_string(t), b.str(), bt.tuple_str(), s.tuple_str()});
      doc.push_back({{"t", t}, {"bbs", b.str()}, {"beta", to_json(bt)}, {"toda", to_json(s)}});
      b = bbs_evolve(b);
      s = evolve(s);
    }
  } else {
    TodaState s = state_of(c);
    rows.push_back({"t", "T^t(s)"});
    for (int t = 0; t <= steps; ++t) {
      rows.push_back({std::to_string(t), s.tuple_str()});
      doc.push_back({{"t", t}, {"toda", to_json(s)}});
      s = evolve(s);
    }
  }
  if (fmt == "json") return doc.dump(2) + "\n";
  if (fmt == "csv") return csv(rows);
  if (fmt == "text") return table(rows);
  throw UsageError("evolve supports --format text, json or csv");
}

std::string cmd_curve(const RunConfig& c) {
  const CurveModel curve = curve_model(c);
  const Jacobian jac(curve);
  if (!c.svg.empty()) {
    std::vector<std::vector<PlanarPoint>> overlays;
    if (!c.divisor.empty()) {
      std::vector<PlanarPoint> pts;
      for (const auto& p : divisor_of(c, curve)) pts.push_back({p.x, p.y});
      overlays.push_back(pts);
    }
    if (!c.toda.empty() || !c.bbs.empty()) {
      TodaState s = state_of(c);
      for (int t = 0; t <= c.steps.value_or(0); ++t) {
        overlays.push_back(psi(curve, s).points);
        s = evolve(s);
      }
    }
    std::ofstream f(c.svg);
    if (!f) throw UsageError("cannot write " + c.svg);
    f << render_svg(curve, overlays);
  }
  Json j = to_json(curve);
  j["periods"] = to_json(jac.periods());
  return j.dump(2) + "\n";
}

std::string cmd_map(const RunConfig& c) {
  const std::string fmt = c.format.empty() ? "text" : c.format;
  if (fmt != "text" && fmt != "json") throw UsageError("map supports --format text or json");
  const bool json = fmt == "json";
  const std::string& a = c.arrow;

  if (a == "beta") {
    const auto s = beta(bbs_of(c));
    return json ? to_json(s).dump(2) + "\n" : s.tuple_str() + "\n";
  }
  if (a == "rho") {
    const auto b = rho(toda_of(c));
    return json ? to_json(b).dump(2) + "\n" : b.str() + "\n";
  }
  if (a == "shift") {
    const auto s = shift(state_of(c));
    return json ? to_json(s).dump(2) + "\n" : s.tuple_str() + "\n";
  }
  if (a == "psi") {
    const auto s = state_of(c);
    const auto curve = curve_model(c, s);
    const auto r = psi(curve, s);
    if (!json) return divisor_text(r.divisor) + "\n";
    return Json{{"divisor", to_json(r.divisor)}, {"trace", to_json(r.trace)}}.dump(2) + "\n";
  }
  if (a == "psi-inverse") {
    const Jacobian jac(curve_model(c));
    const auto s = psi_inverse(jac, divisor_of(c, jac.curve()));
    return json ? to_json(s).dump(2) + "\n" : s.tuple_str() + "\n";
  }
  if (a == "eta") {
    const Jacobian jac(curve_model(c));
    const auto z = jac.eta(divisor_of(c, jac.curve()), basepoint_of(c, jac.curve()));
    return json ? to_json(z).dump(2) + "\n" : jac_text(z) + "\n";
  }
  if (a == "pi") {
    const auto s = state_of(c);
    const Jacobian jac(curve_model(c, s));
    const auto z = pi(jac, s, basepoint_of(c, jac.curve()));
    return json ? to_json(z).dump(2) + "\n" : jac_text(z) + "\n";
  }
  if (a == "nu" || a == "v") {
    std::optional<TodaState> s;
    if (!c.toda.empty() || !c.bbs.empty()) s = state_of(c);
    const Jacobian jac(curve_model(c, s));
    JacPoint z;
    if (!c.jac.empty()) {
      try {
        const Json j = parse_json(c.jac, "--jac");
        z = jac.reduce(vec_from_json(j.at("z")), basis_from_string(j.value("basis", std::string("K"))));
      } catch (const Json::exception& e) {
        throw UsageError(std::string("--jac: ") + e.what());
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--jac: ") + e.what());
      }
    } else if (s) {
      z = pi(jac, *s, basepoint_of(c, jac.curve()));
    } else if (!c.divisor.empty()) {
      z = jac.eta(divisor_of(c, jac.curve()), basepoint_of(c, jac.curve()));
    } else {
      z = jac.reduce(Vec(static_cast<std::size_t>(jac.genus())), Basis::K);
    }
    const auto r = jac.translate(z, a == "nu" ? Translation::Nu : Translation::V);
    return json ? to_json(r).dump(2) + "\n" : jac_text(r) + "\n";
  }
  throw UsageError("unknown arrow '" + a + "' (beta, rho, psi, psi-inverse, eta, pi, shift, nu, v)");
}

int cmd_verify(const RunConfig& c, std::string& text) {
  const std::string fmt = c.format.empty() ? "json" : c.format;
  if (fmt != "text" && fmt != "json") throw UsageError("verify supports --format text or json");
  CheckParams p;
  if (auto C = curve_of(c)) p.curves.push_back(*C);
  p.seed = c.seed;
  p.trials = c.trials;
  p.steps = c.steps.value_or(20);
  p.max_genus = c.max_genus;
  p.timing = c.timing;
  std::vector<std::string> names = c.checks;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = check_names();
  int code = 0;
  std::ostringstream os;
  for (const auto& n : names) {
    const auto r = run_check(n, p);
    if (r.verdict == Verdict::Fail) code = 1;
    if (fmt == "json") {
      os << to_json(r).dump() << '\n';
    } else {
      os << r.name << ": " << to_string(r.verdict) << " (" << to_string(r.grade) << ") " << r.summary << '\n';
    }
  }
  text = os.str();
  return code;
}

std::string cmd_enumerate(const RunConfig& c) {
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  if (fmt != "csv" && fmt != "json") throw UsageError("enumerate supports --format csv or json");
  std::vector<std::vector<std::string>> rows;
  Json doc = Json::array();
  if (c.what == "toda") {
    const auto C = curve_of(c);
    if (!C) throw UsageError("enumerate toda needs -C");
    const auto g = C->genus();
    std::vector<std::string> head;
    for (int i = 1; i <= g + 1; ++i) head.push_back("Q" + std::to_string(i));
    for (int i = 1; i <= g + 1; ++i) head.push_back("W" + std::to_string(i));
    rows.push_back(head);
    for (const auto& s : enumerate_isolevel(*C)) {
      std::vector<std::string> r;
      for (const auto& v : s.q()) r.push_back(v.str());
      for (const auto& v : s.w()) r.push_back(v.str());
      rows.push_back(r);
      doc.push_back(to_json(s));
    }
  } else if (c.what == "bbs") {
    if (c.length == 0 || c.lambda.empty()) throw UsageError("enumerate bbs needs -L and --lambda");
    rows.push_back({"cells"});
    for (const auto& b : enumerate_bbs(c.length, c.lambda)) {
      rows.push_back({b.str()});
      doc.push_back(to_json(b));
    }
  } else if (c.what == "lattice") {
    const Jacobian jac(curve_model(c));
    const Basis b = basis_from_string(c.basis);
    std::vector<std::string> head;
    for (int i = 1; i <= jac.genus(); ++i) head.push_back("x" + std::to_string(i));
    rows.push_back(head);
    for (const auto& v : jac.representatives(b)) {
      std::vector<std::string> r;
      for (const auto& x : v) r.push_back(x.str());
      rows.push_back(r);
      doc.push_back(to_json(v));
    }
  } else {
    throw UsageError("enumerate what? (toda, bbs, lattice)");
  }
  return fmt == "json" ? doc.dump(2) + "\n" : csv(rows);
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact laboratory for the ultra-discrete periodic Toda lattice and box-ball system", "troplab"};
  app.require_subcommand(1);
  RunConfig c;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("-C,--curve", c.curve, "conserved vector C_{-1} C_0 ... C_g");
    sub->add_option("--format", c.format, "output format");
    sub->add_option("--out", c.out, "write output to a file");
  };

  auto* evolve_cmd = app.add_subcommand("evolve", "print an orbit of the BBS or the Toda lattice");
  common(evolve_cmd);
  evolve_cmd->add_option("--bbs", c.bbs, "box-ball state, e.g. 0100110");
  evolve_cmd->add_option("--toda", c.toda, "Toda state as JSON {\"Q\":[..],\"W\":[..]}");
  evolve_cmd->add_option("-t,--steps", c.steps, "number of time steps (default 5)");

  auto* curve_cmd = app.add_subcommand("curve", "build Gamma_C and its period matrices");
  common(curve_cmd);
  curve_cmd->add_option("values", c.curve, "C_{-1} C_0 ... C_g (alternative to -C)");
  curve_cmd->add_option("--svg", c.svg, "write an SVG drawing");
  curve_cmd->add_option("--divisor", c.divisor, "divisor overlay as JSON [{\"X\":..,\"Y\":..}]");
  curve_cmd->add_option("--toda", c.toda, "overlay psi of this state and its orbit");
  curve_cmd->add_option("--bbs", c.bbs, "overlay psi(beta(b)) and its orbit");
  curve_cmd->add_option("-t,--steps", c.steps, "orbit length for the overlay (default 0)");

  auto* map_cmd = app.add_subcommand("map", "apply one arrow of the BBS-Toda-Jacobian diagram");
  common(map_cmd);
  map_cmd->add_option("arrow", c.arrow, "beta, rho, psi, psi-inverse, eta, pi, shift, nu, v")->required();
  map_cmd->add_option("--bbs", c.bbs, "box-ball state");
  map_cmd->add_option("--toda", c.toda, "Toda state as JSON");
  map_cmd->add_option("--divisor", c.divisor, "divisor as JSON [{\"X\":..,\"Y\":..}]");
  map_cmd->add_option("--jac", c.jac, "Jacobian point as JSON {\"basis\":\"K\",\"z\":[..]}");
  map_cmd->add_option("--basepoint", c.basepoint, "basepoint X,Y for eta and pi");

  auto* verify_cmd = app.add_subcommand("verify", "run registered checks");
  common(verify_cmd);
  verify_cmd->add_option("checks", c.checks, "check names, or all");
  verify_cmd->add_option("--seed", c.seed, "random seed");
  verify_cmd->add_option("--trials", c.trials, "random trials per genus");
  verify_cmd->add_option("-t,--steps", c.steps, "orbit length for bbs-toda-diagram (default 20)");
  verify_cmd->add_option("--max-genus", c.max_genus, "largest genus for random curves");
  verify_cmd->add_flag("--timing", c.timing, "attach runtimes to reports");

  auto* enum_cmd = app.add_subcommand("enumerate", "list isolevel states, BBS states or lattice classes");
  common(enum_cmd);
  enum_cmd->add_option("what", c.what, "toda, bbs or lattice")->required();
  enum_cmd->add_option("-L,--length", c.length, "number of boxes");
  enum_cmd->add_option("--lambda", c.lambda, "soliton lengths");
  enum_cmd->add_option("--basis", c.basis, "K, Lambda or A");

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    int code = 0;
    std::string text;
    if (evolve_cmd->parsed()) {
      text = cmd_evolve(c);
    } else if (curve_cmd->parsed()) {
      text = cmd_curve(c);
    } else if (map_cmd->parsed()) {
      text = cmd_map(c);
    } else if (verify_cmd->parsed()) {
      code = cmd_verify(c, text);
    } else {
      text = cmd_enumerate(c);
    }
    emit(c, text, out);
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace troplab::cli
