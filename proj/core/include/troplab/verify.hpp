#pragma once

// Registered verification checks. Each run is a pure function of its
// parameters and seed.

#include "troplab/json_io.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace troplab {

enum class Verdict { Pass, Fail, Counterexample };
/// Proposition-grade failures are bugs; conjecture-grade failures are findings.
enum class Grade { Proposition, Conjecture };

std::string to_string(Verdict v);
std::string to_string(Grade g);

struct CheckParams {
  /// Curves to run on; empty means the three benchmark curves.
  std::vector<ConservedVector> curves;
  std::uint64_t seed = 1;
  /// Random trials per genus (or per curve) where a check samples.
  int trials = 1000;
  /// Orbit length for bbs-toda-diagram.
  int steps = 20;
  /// Largest genus for checks over random C.
  int max_genus = 6;
  /// Attach wall-clock runtime to the report (makes output non-reproducible).
  bool timing = false;
};

struct CheckReport {
  std::string name;
  Grade grade = Grade::Proposition;
  Json params;
  Verdict verdict = Verdict::Pass;
  std::string summary;
  Json details;
  Json witness;
  std::optional<double> runtime_seconds;

  bool passed() const { return verdict == Verdict::Pass; }
};

Json to_json(const CheckReport& r);

/// (8,3,0), (7,3,1,0), (13,6,3,1,0).
std::vector<ConservedVector> benchmark_curves();

/// Registered check names in a fixed order.
const std::vector<std::string>& check_names();

/// Throws DomainError for an unknown name.
CheckReport run_check(const std::string& name, const CheckParams& params = {});

/// A random rational state with minimum entry 0 and sum Q < sum W.
/// Numerators are drawn from [0, 4 * scale], denominators from [1, 6].
TodaState random_state(int g, std::mt19937_64& rng, int scale = 5);
/// A random generic integer C with C_g = 0.
ConservedVector random_generic_C(int g, std::mt19937_64& rng);

/// Every point of the curve whose offset is a multiple of 1/den on its
/// edge, canonical and sorted. Needs integer edge weights.
std::vector<GraphPoint> grid_points(const CurveModel& curve, int den);

}  // namespace troplab
