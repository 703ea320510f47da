#pragma once

#include <castelnuovo/classification.hpp>
#include <castelnuovo/point.hpp>
#include <castelnuovo/polytope.hpp>

#include <json.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace castelnuovo {

struct CorpusOptions {
  std::size_t dim = 2;
  long coord_bound = 3;  // coordinates are drawn from [0, coord_bound]
  std::size_t count = 200;
  std::uint64_t seed = 1;
  std::size_t max_dim = 4;
  unsigned workers = 0;  // 0: std::thread::hardware_concurrency()
  std::uint64_t budget = kDefaultCellBudget;  // bounding-box cells per dilate
  std::optional<std::filesystem::path> dump_dir;
};

/// The statements audited on every corpus polytope.
enum class CorpusAudit {
  kRouteAgreement,        // both Castelnuovo routes agree
  kHibi,                  // interior point => h*_1 <= h*_j
  kHkn,                   // spanning => h*_1 <= h*_j below the degree
  kVolumeBound,           // spanning => Vol >= 1 + (s-1)h*_1 + h*_s, equality iff flat
  kCastelnuovoIdp,        // Castelnuovo => IDP
  kDegreeTwoIdp,          // deg 2, h*_1 >= h*_2 => IDP
  kInteriorCharacterization,
  kEhrhartRoundTrip,      // ehrhart_eval(h*, k) = |kP ∩ Z^n| for k <= 2n
  kBetkeMcMullen,         // unimodular <=> h(triangulation) = h*
  kIdpWitness,            // a reported witness is re-verified from scratch
  kSmoothIdp,
  kUnimodularCover,       // interior point and flat h* => spanning and IDP
};

inline constexpr std::size_t kCorpusAuditCount = 12;

const std::array<CorpusAudit, kCorpusAuditCount>& corpus_audits();
std::string to_string(CorpusAudit audit);

enum class ItemStatus { kAnalyzed, kSkipped, kError };

struct CorpusItem {
  std::size_t index = 0;
  std::vector<LatticePoint> points;  // the sampled points, hull not yet taken
  ItemStatus status = ItemStatus::kAnalyzed;
  std::string message;               // skip or error reason
  std::array<AuditOutcome, kCorpusAuditCount> outcomes{};
  std::vector<std::string> failure_details;

  std::size_t vertex_count = 0;
  std::size_t degree = 0;
  bool castelnuovo = false;
  bool spanning = false;
  bool interior = false;
  bool smooth = false;
  bool round_trip_truncated = false;  // some k <= 2n exceeded the budget
  // Flat h* with an interior point, yet the deterministic pulling order did not
  // produce a unimodular triangulation. Logged, not counted as a failure.
  bool pulling_anomaly = false;

  bool failed() const;
};

struct AuditTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inapplicable = 0;

  friend bool operator==(const AuditTally&, const AuditTally&) = default;
};

struct CorpusSummary {
  CorpusOptions options;
  std::size_t generated = 0;
  std::size_t rejected_samples = 0;
  std::size_t analyzed = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  std::array<AuditTally, kCorpusAuditCount> tallies{};
  std::size_t castelnuovo = 0;
  std::size_t spanning = 0;
  std::size_t with_interior = 0;
  std::size_t smooth = 0;
  std::size_t round_trip_truncated = 0;
  std::size_t pulling_anomalies = 0;
  std::vector<std::size_t> degree_histogram;
  std::vector<std::size_t> failing_items;
  std::vector<std::string> failure_notes;  // "item i: audit: detail"
  std::vector<std::string> dumped_files;

  const AuditTally& tally(CorpusAudit a) const { return tallies[static_cast<std::size_t>(a)]; }
  std::size_t failures() const;
  bool ok() const { return failures() == 0 && errors == 0; }
};

/// Deterministic point samples for `options`: dim+1 .. dim+4 points in the box,
/// resampled until the points are full-dimensional. Throws std::invalid_argument
/// when dim exceeds max_dim or is zero, or when count is zero.
std::vector<std::vector<LatticePoint>> generate_corpus(const CorpusOptions& options,
                                                       std::size_t* rejected = nullptr);

CorpusItem audit_corpus_item(std::size_t index, std::vector<LatticePoint> points, const CountOptions& options);

/// Generates, audits with a bounded worker pool, aggregates in index order, and
/// writes failing polytopes to options.dump_dir when set.
CorpusSummary run_corpus(const CorpusOptions& options);
CorpusSummary run_corpus(const CorpusOptions& options, std::vector<CorpusItem>* items);

/// Tallies audited items in index order and dumps the failing ones. `generated` and
/// `rejected_samples` are left for the caller.
CorpusSummary summarize_corpus(const CorpusOptions& options, const std::vector<CorpusItem>& items);

std::string render_text(const CorpusSummary& summary);
nlohmann::json to_json(const CorpusSummary& summary);

}  // namespace castelnuovo
