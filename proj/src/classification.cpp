#include <castelnuovo/classification.hpp>
#include <castelnuovo/errors.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace castelnuovo {

std::vector<Integer> spanning_invariant_factors(const Polytope& p,
                                                const std::optional<LatticePoint>& base,
                                                const CountOptions& options) {
  const auto pts = lattice_points(p, 1, options);
  const LatticePoint& origin = base ? *base : pts.front();
  if (base && !std::binary_search(pts.begin(), pts.end(), *base))
    throw std::invalid_argument("spanning_invariant_factors: base point is not in P");

  std::vector<std::vector<Integer>> rows;
  for (const auto& v : pts)
    if (v != origin) rows.push_back((v - origin).coords());
  return snf(IntMatrix(rows, p.dim())).d;
}

bool is_spanning(const Polytope& p, const CountOptions& options) {
  const auto d = spanning_invariant_factors(p, {}, options);
  return d.size() == p.dim() && std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

// ---------------------------------------------------------------------------

std::string IdpVerdict::label() const {
  std::ostringstream os;
  if (status == IdpStatus::kCounterexample) {
    os << "counterexample at k=" << witness->k << ": " << witness->point;
  } else if (cutoff_certificate) {
    os << "certified-IDP (cutoff bound, checked k<=" << kmax_checked << ")";
  } else {
    os << "checked up to kmax=" << kmax_checked << " (no cutoff certificate)";
  }
  return os.str();
}

unsigned default_idp_kmax(std::size_t dim) {
  return static_cast<unsigned>(std::max<std::size_t>(2, dim > 0 ? dim - 1 : 0));
}

IdpVerdict idp_check(const Polytope& p, std::optional<unsigned> kmax, const CountOptions& options) {
  const std::size_t n = p.dim();
  IdpVerdict verdict;
  verdict.kmax_checked = kmax.value_or(default_idp_kmax(n));
  if (verdict.kmax_checked == 0) throw std::invalid_argument("idp_check: kmax must be >= 1");
  verdict.cutoff_certificate = verdict.kmax_checked + 1 >= n;

  const auto base = lattice_points(p, 1, options);
  std::vector<LatticePoint> previous = base;
  for (unsigned k = 2; k <= verdict.kmax_checked; ++k) {
    auto current = lattice_points(p, k, options);
    std::unordered_set<LatticePoint, LatticePointHash> sums;
    sums.reserve(previous.size() * base.size());
    for (const auto& a : previous)
      for (const auto& b : base) sums.insert(a + b);
    for (const auto& x : current)
      if (!sums.contains(x)) {
        verdict.status = IdpStatus::kCounterexample;
        verdict.witness = IdpWitness{k, x};
        verdict.kmax_checked = k;
        return verdict;
      }
    previous = std::move(current);
  }
  return verdict;
}

// ---------------------------------------------------------------------------

GenusData genus_data(const HStarVector& h) {
  GenusData g;
  const std::size_t n = h.dim;
  g.s = h.degree();
  g.genus = 0;
  g.delta = 0;
  for (std::size_t j = 1; j <= g.s; ++j) g.genus += Integer(static_cast<long>(j) - 1) * h[j];
  for (std::size_t j = 2; j <= g.s; ++j) g.delta += h[j];
  g.h0 = h[1] + Integer(static_cast<long>(n + 1));
  g.volume = h.volume();
  if (g.delta != g.volume + Integer(static_cast<long>(n)) - g.h0)
    throw InvariantViolation("delta-genus identity failed");
  if (h[1] >= 1) {
    Integer above(0);
    for (std::size_t j = 1; j <= g.s; ++j) above += h[j];
    const Integer m = floor_div(above, h[1]);
    g.m = m;
    g.bound = m * g.delta - m * (m - 1) / 2 * h[1];
  }
  return g;
}

bool hstar_flat_below(const HStarVector& h, std::size_t upto) {
  for (std::size_t j = 2; j + 1 <= upto; ++j)
    if (h[j] != h[1]) return false;
  return true;
}

std::string to_string(CastelnuovoRoute route) {
  switch (route) {
    case CastelnuovoRoute::kHStarCharacterization:
      return "hstar-characterization";
    case CastelnuovoRoute::kDirectBound:
      return "direct-bound";
    case CastelnuovoRoute::kVolumeOneConvention:
      return "volume-one-convention";
  }
  return "unknown";
}

CastelnuovoVerdict castelnuovo_by_hstar(const HStarVector& h, bool spanning) {
  CastelnuovoVerdict v;
  v.reasons.spanning = spanning;
  if (h.volume() == 1) {
    v.verdict = true;
    v.route = CastelnuovoRoute::kVolumeOneConvention;
    return v;
  }
  const std::size_t s = h.degree();
  v.route = CastelnuovoRoute::kHStarCharacterization;
  v.reasons.tail = h[1] >= h[s];
  v.reasons.flat = hstar_flat_below(h, s);
  v.verdict = spanning && *v.reasons.tail && *v.reasons.flat;
  return v;
}

CastelnuovoVerdict castelnuovo_by_bound(const HStarVector& h, bool spanning) {
  CastelnuovoVerdict v;
  v.reasons.spanning = spanning;
  const GenusData g = genus_data(h);
  if (g.volume == 1) {
    v.verdict = true;
    v.route = CastelnuovoRoute::kVolumeOneConvention;
    return v;
  }
  v.route = CastelnuovoRoute::kDirectBound;
  v.reasons.enough_sections = g.h0 >= Integer(static_cast<long>(h.dim + 2));
  v.reasons.bound_attained = g.bound.has_value() && g.genus == *g.bound;
  v.verdict = spanning && *v.reasons.enough_sections && *v.reasons.bound_attained;
  return v;
}

CastelnuovoVerdict is_castelnuovo(const Polytope& p, const CountOptions& options) {
  HStarVector h = hstar(p, options);
  degree(p, options);  // two-route degree cross-check
  return castelnuovo_by_hstar(h, is_spanning(p, options));
}

CastelnuovoVerdict is_castelnuovo_direct(const Polytope& p, const CountOptions& options) {
  return castelnuovo_by_bound(hstar(p, options), is_spanning(p, options));
}

// ---------------------------------------------------------------------------

namespace {

std::string range_detail(const HStarVector& h, std::size_t from, std::size_t to) {
  if (from > to) return "vacuous (empty range)";
  std::ostringstream os;
  os << "h*_1=" << h[1] << " vs h*_" << from << "..h*_" << to;
  return os.str();
}

bool lower_bound_holds(const HStarVector& h, std::size_t from, std::size_t to) {
  for (std::size_t j = from; j <= to; ++j)
    if (h[1] > h[j]) return false;
  return true;
}

}  // namespace

BoundAudit audit_bounds(const HStarVector& h, bool spanning, bool has_interior_point) {
  BoundAudit a;
  const std::size_t n = h.dim;
  const std::size_t s = h.degree();
  a.flat = hstar_flat_below(h, s);

  a.hibi.applicable = has_interior_point;
  if (has_interior_point) {
    a.hibi.holds = n >= 3 ? lower_bound_holds(h, 2, n - 1) : true;
    a.hibi.detail = n >= 3 ? range_detail(h, 2, n - 1) : "vacuous (empty range)";
  } else {
    a.hibi.detail = "vacuous (no interior lattice point)";
  }

  a.hkn.applicable = spanning;
  if (spanning) {
    a.hkn.holds = s >= 3 ? lower_bound_holds(h, 2, s - 1) : true;
    a.hkn.detail = s >= 3 ? range_detail(h, 2, s - 1) : "vacuous (empty range)";
  } else {
    a.hkn.detail = "vacuous (not spanning)";
  }

  // The volume bound reads 1 >= 2 for the unimodular simplex (s = 0); it is only
  // meaningful for s >= 1.
  a.volume.applicable = spanning && s >= 1;
  if (a.volume.applicable) {
    const Integer rhs = 1 + Integer(static_cast<long>(s) - 1) * h[1] + h[s];
    const Integer vol = h.volume();
    a.volume_equality = vol == rhs;
    a.volume.holds = vol >= rhs && a.volume_equality == a.flat;
    std::ostringstream os;
    os << "Vol=" << vol << (vol >= rhs ? " >= " : " < ") << rhs
       << (a.volume_equality ? " (equality" : " (strict") << ", flat=" << (a.flat ? "yes" : "no")
       << ")";
    a.volume.detail = os.str();
  } else {
    a.volume.detail = spanning ? "vacuous (unimodular simplex)" : "vacuous (not spanning)";
  }
  return a;
}

BoundAudit audit_bounds(const Polytope& p, const CountOptions& options) {
  const HStarVector h = hstar(p, options);
  return audit_bounds(h, is_spanning(p, options), h[p.dim()] > 0);
}

std::string to_string(AuditOutcome outcome) {
  switch (outcome) {
    case AuditOutcome::kPass:
      return "pass";
    case AuditOutcome::kFail:
      return "fail";
    case AuditOutcome::kInapplicable:
      return "inapplicable";
  }
  return "unknown";
}

namespace {

AuditOutcome require_idp(bool applicable, const IdpVerdict& idp) {
  if (!applicable) return AuditOutcome::kInapplicable;
  return idp.certified() ? AuditOutcome::kPass : AuditOutcome::kFail;
}

IdpVerdict full_idp(const Polytope& p, const CountOptions& options) {
  return idp_check(p, default_idp_kmax(p.dim()), options);
}

AuditOutcome interior_outcome(const HStarVector& h, bool castelnuovo) {
  const std::size_t n = h.dim;
  if (h[n] == 0) return AuditOutcome::kInapplicable;
  const bool flat = hstar_flat_below(h, n);
  return (castelnuovo == flat && h[1] >= h[n]) ? AuditOutcome::kPass : AuditOutcome::kFail;
}

bool oda_hypothesis(const HStarVector& h) {
  const std::size_t s = h.degree();
  return hstar_flat_below(h, s) && h[1] >= h[s];
}

}  // namespace

AuditOutcome audit_castelnuovo_implies_idp(const Polytope& p, const CountOptions& options) {
  if (!is_castelnuovo(p, options).verdict) return AuditOutcome::kInapplicable;
  return require_idp(true, full_idp(p, options));
}

AuditOutcome audit_degree_two_idp(const Polytope& p, const CountOptions& options) {
  const HStarVector h = hstar(p, options);
  if (!(h.degree() == 2 && h[1] >= h[2])) return AuditOutcome::kInapplicable;
  return require_idp(true, full_idp(p, options));
}

AuditOutcome audit_interior_characterization(const Polytope& p, const CountOptions& options) {
  return interior_outcome(hstar(p, options), is_castelnuovo(p, options).verdict);
}

AuditOutcome audit_smooth_castelnuovo_idp(const Polytope& p, const CountOptions& options) {
  if (!is_smooth(p) || !oda_hypothesis(hstar(p, options))) return AuditOutcome::kInapplicable;
  return require_idp(true, full_idp(p, options));
}

ClassificationReport classify(const Polytope& p, std::optional<unsigned> kmax,
                              const CountOptions& options) {
  ClassificationReport r;
  r.hstar = hstar(p, options);
  r.degree = degree(p, options);
  r.volume = r.hstar.volume();
  r.lattice_points = count_lattice_points(p, 1, Membership::kClosed, options);
  r.interior_points = count_lattice_points(p, 1, Membership::kInterior, options);
  r.invariant_factors = spanning_invariant_factors(p, {}, options);
  r.spanning = r.invariant_factors.size() == p.dim() &&
               std::all_of(r.invariant_factors.begin(), r.invariant_factors.end(),
                           [](const Integer& x) { return x == 1; });
  r.smooth = is_smooth(p);
  r.genus = genus_data(r.hstar);
  r.by_hstar = castelnuovo_by_hstar(r.hstar, r.spanning);
  r.by_bound = castelnuovo_by_bound(r.hstar, r.spanning);
  r.bounds = audit_bounds(r.hstar, r.spanning, r.interior_points > 0);

  const unsigned full = default_idp_kmax(p.dim());
  r.idp = idp_check(p, kmax.value_or(full), options);
  // Audits always use the full cutoff, whatever kmax the caller asked to display.
  const IdpVerdict certified = (r.idp.kmax_checked >= full || r.idp.witness) ? r.idp
                                                                             : idp_check(p, full, options);
  r.castelnuovo_idp = require_idp(r.by_hstar.verdict, certified);
  r.degree_two_idp = require_idp(r.degree == 2 && r.hstar[1] >= r.hstar[2], certified);
  r.interior_characterization = interior_outcome(r.hstar, r.by_hstar.verdict);
  r.smooth_idp = require_idp(r.smooth && oda_hypothesis(r.hstar), certified);
  return r;
}

}  // namespace castelnuovo
