#pragma once

#include <castelnuovo/classification.hpp>
#include <castelnuovo/polytope.hpp>

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace castelnuovo {

struct TriangulationSummary {
  std::size_t simplices = 0;
  bool unimodular = false;
  std::vector<Integer> h;
  bool h_matches_hstar = false;
  bool betke_mcmullen_consistent = false;

  friend bool operator==(const TriangulationSummary&, const TriangulationSummary&) = default;
};

/// Full analysis of one polytope.
struct AnalysisReport {
  std::string name;
  std::size_t dim = 0;
  std::size_t vertex_count = 0;
  std::size_t discarded_points = 0;
  Integer lattice_points;
  Integer interior_points;
  std::vector<Integer> hstar;
  std::size_t degree = 0;
  Integer volume;
  bool spanning = false;
  std::vector<Integer> invariant_factors;
  bool smooth = false;
  IdpVerdict idp;
  GenusData genus;
  CastelnuovoVerdict by_hstar;
  CastelnuovoVerdict by_bound;
  BoundAudit bounds;
  AuditOutcome castelnuovo_idp = AuditOutcome::kInapplicable;
  AuditOutcome degree_two_idp = AuditOutcome::kInapplicable;
  AuditOutcome interior_characterization = AuditOutcome::kInapplicable;
  AuditOutcome smooth_idp = AuditOutcome::kInapplicable;
  TriangulationSummary triangulation;

  bool route_mismatch() const { return by_hstar.verdict != by_bound.verdict; }

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const Polytope& p, std::string name, std::optional<unsigned> kmax = {},
                       const CountOptions& options = {});

nlohmann::json to_json(const AnalysisReport& report);
/// Inverse of to_json. Throws ParseError on missing or mistyped fields.
AnalysisReport report_from_json(const nlohmann::json& doc);

/// Human-readable multi-line rendering; a ROUTE-MISMATCH banner leads when the
/// two Castelnuovo routes disagree.
std::string render_text(const AnalysisReport& report);

}  // namespace castelnuovo
