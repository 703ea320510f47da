#pragma once

#include <castelnuovo/point.hpp>
#include <castelnuovo/polytope.hpp>
#include <castelnuovo/report.hpp>

#include <optional>
#include <string>
#include <vector>

namespace castelnuovo {

// Built-in polytopes with known invariants. Keys:
//   standard-simplex-n   conv{0, e1, ..., en}             (parameter n)
//   example-3-5          a flat but non-spanning 4-polytope
//   family-a             a spanning, non-IDP (2a+1)-polytope (parameter a)
//   reflexive-simplex-3  conv{e1, e2, e3, -e1-e2-e3}
//   square-2x2           [0,2]^2

const std::vector<std::string>& example_keys();

/// Throws UnknownExample for an unknown key and std::invalid_argument for a bad parameter.
std::vector<LatticePoint> example_vertices(const std::string& key, unsigned param = 1);

/// Vertices of the a-th member of the non-IDP family, in dimension 2a + 1.
std::vector<LatticePoint> family_vertices(unsigned a);

struct ExampleResult {
  std::string key;
  unsigned param = 0;  // 0 for unparametrized examples
  AnalysisReport report;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  std::string label() const;
};

/// Compares an analysis against the known values for `key`.
std::vector<std::string> check_example(const std::string& key, unsigned param, const AnalysisReport& report);

/// Runs every registered example (or one, if `key` is given). The simplex runs n = 1..5
/// and the family a = 1, 2 unless `param` pins a single value.
std::vector<ExampleResult> run_examples(const std::optional<std::string>& key = {},
                                        const std::optional<unsigned>& param = {},
                                        const CountOptions& options = {});

}  // namespace castelnuovo
