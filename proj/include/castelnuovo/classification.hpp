#pragma once

#include <castelnuovo/ehrhart.hpp>
#include <castelnuovo/integer.hpp>
#include <castelnuovo/linalg.hpp>
#include <castelnuovo/polytope.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace castelnuovo {

// ---------------------------------------------------------------------------
// Spanning

/// Invariant factors of the matrix of differences v - base over all lattice
/// points v of P. `base` defaults to the lexicographically smallest lattice point.
std::vector<Integer> spanning_invariant_factors(const Polytope& p,
                                                const std::optional<LatticePoint>& base = {},
                                                const CountOptions& options = {});

/// Every point of Z^n is an affine integer combination of P ∩ Z^n.
bool is_spanning(const Polytope& p, const CountOptions& options = {});

// ---------------------------------------------------------------------------
// Integer decomposition property

enum class IdpStatus { kCertified, kCounterexample };

struct IdpWitness {
  unsigned k = 0;
  LatticePoint point;

  friend bool operator==(const IdpWitness&, const IdpWitness&) = default;
};

struct IdpVerdict {
  IdpStatus status = IdpStatus::kCertified;
  unsigned kmax_checked = 0;
  /// True when kmax_checked >= n - 1: by the Ewald-Wessels bound (k+1)P = kP + P holds
  /// for all k >= n - 1, so a passing check certifies IDP outright.
  bool cutoff_certificate = false;
  std::optional<IdpWitness> witness;

  bool certified() const { return status == IdpStatus::kCertified && cutoff_certificate; }
  std::string label() const;

  friend bool operator==(const IdpVerdict&, const IdpVerdict&) = default;
};

/// max(2, n - 1).
unsigned default_idp_kmax(std::size_t dim);

/// Compares kP ∩ Z^n with (k-1)P ∩ Z^n + P ∩ Z^n for k = 2..kmax. The witness of a
/// failure is the lexicographically smallest missing point of the first failing k.
IdpVerdict idp_check(const Polytope& p, std::optional<unsigned> kmax = {},
                     const CountOptions& options = {});

// ---------------------------------------------------------------------------
// Sectional genus and the Castelnuovo bound

struct GenusData {
  std::size_t s = 0;  // degree
  Integer genus;      // sum_{j>=1} (j-1) h*_j
  Integer delta;      // h*_2 + ... + h*_s
  std::optional<Integer> m;
  std::optional<Integer> bound;  // m*delta - m(m-1)/2 * h*_1
  Integer h0;                    // h*_1 + n + 1
  Integer volume;                // sum of h*

  friend bool operator==(const GenusData&, const GenusData&) = default;
};

GenusData genus_data(const HStarVector& h);

/// h*_1 == h*_j for every 2 <= j <= upto - 1 (vacuous for upto <= 2).
bool hstar_flat_below(const HStarVector& h, std::size_t upto);

enum class CastelnuovoRoute { kHStarCharacterization, kDirectBound, kVolumeOneConvention };

std::string to_string(CastelnuovoRoute route);

struct CastelnuovoReasons {
  std::optional<bool> spanning;
  std::optional<bool> flat;             // h*_1 = h*_j for 2 <= j <= s-1
  std::optional<bool> tail;             // h*_1 >= h*_s
  std::optional<bool> enough_sections;  // h^0(L) >= n + 2, i.e. h*_1 >= 1
  std::optional<bool> bound_attained;   // g == bound

  friend bool operator==(const CastelnuovoReasons&, const CastelnuovoReasons&) = default;
};

struct CastelnuovoVerdict {
  bool verdict = false;
  CastelnuovoRoute route = CastelnuovoRoute::kHStarCharacterization;
  CastelnuovoReasons reasons;

  friend bool operator==(const CastelnuovoVerdict&, const CastelnuovoVerdict&) = default;
};

/// Spanning, h*_1 >= h*_s and flat h* below the degree; Vol = 1 is Castelnuovo by convention.
CastelnuovoVerdict castelnuovo_by_hstar(const HStarVector& h, bool spanning);
/// Spanning, h^0 >= n + 2 and g equal to the genus bound, evaluated through GenusData only.
CastelnuovoVerdict castelnuovo_by_bound(const HStarVector& h, bool spanning);

CastelnuovoVerdict is_castelnuovo(const Polytope& p, const CountOptions& options = {});
CastelnuovoVerdict is_castelnuovo_direct(const Polytope& p, const CountOptions& options = {});

// ---------------------------------------------------------------------------
// Audits of known structural results

struct BoundCheck {
  bool applicable = false;
  bool holds = true;
  std::string detail;

  friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

struct BoundAudit {
  BoundCheck hibi;    // interior point => h*_1 <= h*_j, 2 <= j <= n-1
  BoundCheck hkn;     // spanning => h*_1 <= h*_j, 2 <= j <= s-1
  BoundCheck volume;  // spanning => Vol >= 1 + (s-1)h*_1 + h*_s, equality iff flat
  bool volume_equality = false;
  bool flat = false;

  bool all_hold() const { return hibi.holds && hkn.holds && volume.holds; }

  friend bool operator==(const BoundAudit&, const BoundAudit&) = default;
};

BoundAudit audit_bounds(const HStarVector& h, bool spanning, bool has_interior_point);
BoundAudit audit_bounds(const Polytope& p, const CountOptions& options = {});

enum class AuditOutcome { kPass, kFail, kInapplicable };

std::string to_string(AuditOutcome outcome);

/// Castelnuovo polytopes must be IDP.
AuditOutcome audit_castelnuovo_implies_idp(const Polytope& p, const CountOptions& options = {});
/// deg = 2 and h*_1 >= h*_2 must give IDP, with no spanning hypothesis.
AuditOutcome audit_degree_two_idp(const Polytope& p, const CountOptions& options = {});
/// With an interior lattice point: Castelnuovo iff h*_1 = h*_j (2 <= j <= n-1), and h*_1 >= h*_n.
AuditOutcome audit_interior_characterization(const Polytope& p, const CountOptions& options = {});
/// Smooth polytopes satisfying the flatness and tail conditions must be IDP.
AuditOutcome audit_smooth_castelnuovo_idp(const Polytope& p, const CountOptions& options = {});

// ---------------------------------------------------------------------------

/// Everything above, computed once.
struct ClassificationReport {
  HStarVector hstar;
  std::size_t degree = 0;
  Integer volume;
  Integer lattice_points;
  Integer interior_points;
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

  bool routes_agree() const { return by_hstar.verdict == by_bound.verdict; }
};

ClassificationReport classify(const Polytope& p, std::optional<unsigned> kmax = {},
                              const CountOptions& options = {});

}  // namespace castelnuovo
