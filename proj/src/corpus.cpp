#include <castelnuovo/corpus.hpp>
#include <castelnuovo/ehrhart.hpp>
#include <castelnuovo/errors.hpp>
#include <castelnuovo/json_util.hpp>
#include <castelnuovo/polytope_file.hpp>
#include <castelnuovo/triangulation.hpp>

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace castelnuovo {

const std::array<CorpusAudit, kCorpusAuditCount>& corpus_audits() {
  static const std::array<CorpusAudit, kCorpusAuditCount> all{
      CorpusAudit::kRouteAgreement,  CorpusAudit::kHibi,
      CorpusAudit::kHkn,             CorpusAudit::kVolumeBound,
      CorpusAudit::kCastelnuovoIdp,  CorpusAudit::kDegreeTwoIdp,
      CorpusAudit::kInteriorCharacterization, CorpusAudit::kEhrhartRoundTrip,
      CorpusAudit::kBetkeMcMullen,   CorpusAudit::kIdpWitness,
      CorpusAudit::kSmoothIdp,       CorpusAudit::kUnimodularCover};
  return all;
}

std::string to_string(CorpusAudit audit) {
  switch (audit) {
    case CorpusAudit::kRouteAgreement: return "route-agreement";
    case CorpusAudit::kHibi: return "hibi-lower-bound";
    case CorpusAudit::kHkn: return "hkn-spanning-bound";
    case CorpusAudit::kVolumeBound: return "volume-bound";
    case CorpusAudit::kCastelnuovoIdp: return "castelnuovo-implies-idp";
    case CorpusAudit::kDegreeTwoIdp: return "degree-two-idp";
    case CorpusAudit::kInteriorCharacterization: return "interior-characterization";
    case CorpusAudit::kEhrhartRoundTrip: return "ehrhart-round-trip";
    case CorpusAudit::kBetkeMcMullen: return "betke-mcmullen";
    case CorpusAudit::kIdpWitness: return "idp-witness";
    case CorpusAudit::kSmoothIdp: return "smooth-idp";
    case CorpusAudit::kUnimodularCover: return "unimodular-cover";
  }
  return "unknown";
}

bool CorpusItem::failed() const {
  return status == ItemStatus::kError ||
         std::any_of(outcomes.begin(), outcomes.end(), [](AuditOutcome o) { return o == AuditOutcome::kFail; });
}

std::size_t CorpusSummary::failures() const {
  std::size_t total = 0;
  for (const auto& t : tallies) total += t.fail;
  return total;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<LatticePoint>> generate_corpus(const CorpusOptions& options, std::size_t* rejected) {
  if (options.dim == 0) throw std::invalid_argument("corpus: dim must be >= 1");
  if (options.dim > options.max_dim)
    throw std::invalid_argument("corpus: dim " + std::to_string(options.dim) + " exceeds the maximum " +
                                std::to_string(options.max_dim));
  if (options.count == 0) throw std::invalid_argument("corpus: count must be >= 1");
  if (options.coord_bound < 1) throw std::invalid_argument("corpus: coord-bound must be >= 1");

  // The bit generator is fully specified by the standard, so the sequence below is
  // identical on every platform. Distributions are not, hence the plain modulo.
  std::mt19937_64 rng(options.seed);
  const auto range = static_cast<std::uint64_t>(options.coord_bound) + 1;
  const auto n = static_cast<long>(options.dim);

  std::vector<std::vector<LatticePoint>> out;
  out.reserve(options.count);
  std::size_t rejects = 0;
  while (out.size() < options.count) {
    const std::size_t m = options.dim + 1 + static_cast<std::size_t>(rng() % 4);
    std::vector<LatticePoint> pts;
    pts.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Integer> c;
      for (std::size_t j = 0; j < options.dim; ++j) c.emplace_back(static_cast<unsigned long>(rng() % range));
      pts.emplace_back(std::move(c));
    }
    if (affine_dimension(pts) != n) {
      ++rejects;
      continue;
    }
    out.push_back(std::move(pts));
  }
  if (rejected) *rejected = rejects;
  return out;
}

namespace {

AuditOutcome from_check(const BoundCheck& c) {
  if (!c.applicable) return AuditOutcome::kInapplicable;
  return c.holds ? AuditOutcome::kPass : AuditOutcome::kFail;
}

// Re-derives a non-IDP witness without the sumset: w lies in kP and w - x lies
// outside (k-1)P for every lattice point x of P.
bool witness_is_genuine(const Polytope& p, const IdpWitness& w, const CountOptions& options) {
  auto scaled = [](const LatticePoint& x, unsigned k) {
    RationalVector v;
    for (const auto& c : x) v.emplace_back(c, Integer(k));
    for (auto& q : v) q.canonicalize();
    return v;
  };
  if (!contains(p, scaled(w.point, w.k))) return false;
  for (const auto& x : lattice_points(p, 1, options))
    if (contains(p, scaled(w.point - x, w.k - 1))) return false;
  return true;
}

}  // namespace

CorpusItem audit_corpus_item(std::size_t index, std::vector<LatticePoint> points, const CountOptions& options) {
  CorpusItem item;
  item.index = index;
  item.points = std::move(points);
  item.outcomes.fill(AuditOutcome::kInapplicable);
  auto set = [&](CorpusAudit a, AuditOutcome o, const std::string& detail = {}) {
    item.outcomes[static_cast<std::size_t>(a)] = o;
    if (o == AuditOutcome::kFail)
      item.failure_details.push_back(to_string(a) + (detail.empty() ? "" : ": " + detail));
  };

  try {
    const Polytope p = build_polytope(item.points);
    const std::size_t n = p.dim();
    item.vertex_count = p.vertices().size();

    const ClassificationReport c = classify(p, std::nullopt, options);
    item.degree = c.degree;
    item.castelnuovo = c.by_hstar.verdict;
    item.spanning = c.spanning;
    item.interior = c.interior_points > 0;
    item.smooth = c.smooth;

    set(CorpusAudit::kRouteAgreement, c.routes_agree() ? AuditOutcome::kPass : AuditOutcome::kFail);
    set(CorpusAudit::kHibi, from_check(c.bounds.hibi), c.bounds.hibi.detail);
    set(CorpusAudit::kHkn, from_check(c.bounds.hkn), c.bounds.hkn.detail);
    set(CorpusAudit::kVolumeBound, from_check(c.bounds.volume), c.bounds.volume.detail);
    set(CorpusAudit::kCastelnuovoIdp, c.castelnuovo_idp);
    set(CorpusAudit::kDegreeTwoIdp, c.degree_two_idp);
    set(CorpusAudit::kInteriorCharacterization, c.interior_characterization);
    set(CorpusAudit::kSmoothIdp, c.smooth_idp);

    // Dilates beyond n were never used to build h*, so they test it independently.
    bool round_trip = true;
    std::string round_trip_detail;
    for (unsigned k = 1; k <= 2 * n; ++k) {
      Integer counted;
      try {
        counted = count_lattice_points(p, k, Membership::kClosed, options);
      } catch (const BudgetExceeded&) {
        item.round_trip_truncated = true;
        break;
      }
      const Integer predicted = ehrhart_eval(c.hstar, k);
      if (predicted != counted) {
        round_trip = false;
        round_trip_detail = "k=" + std::to_string(k) + " predicted " + predicted.get_str() + ", counted " +
                            counted.get_str();
        break;
      }
    }
    set(CorpusAudit::kEhrhartRoundTrip, round_trip ? AuditOutcome::kPass : AuditOutcome::kFail, round_trip_detail);

    const BetkeMcMullenReport bm = betke_mcmullen_check(p, options);
    set(CorpusAudit::kBetkeMcMullen, bm.consistent() ? AuditOutcome::kPass : AuditOutcome::kFail,
        bm.unimodular ? "unimodular but h != h*" : "h = h* but not unimodular");

    if (c.idp.witness)
      set(CorpusAudit::kIdpWitness,
          witness_is_genuine(p, *c.idp.witness, options) ? AuditOutcome::kPass : AuditOutcome::kFail,
          c.idp.label());

    if (item.interior && hstar_flat_below(c.hstar, n)) {
      const bool ok = c.spanning && (c.idp.certified() || idp_check(p, std::nullopt, options).certified());
      set(CorpusAudit::kUnimodularCover, ok ? AuditOutcome::kPass : AuditOutcome::kFail);
      item.pulling_anomaly = !bm.unimodular;
    }
  } catch (const BudgetExceeded& e) {
    item.status = ItemStatus::kSkipped;
    item.message = e.what();
    item.outcomes.fill(AuditOutcome::kInapplicable);
    item.failure_details.clear();
  } catch (const std::exception& e) {
    // InvariantViolation and CrossCheckMismatch land here; both are bugs.
    item.status = ItemStatus::kError;
    item.message = e.what();
  }
  return item;
}

CorpusSummary summarize_corpus(const CorpusOptions& options, const std::vector<CorpusItem>& items) {
  CorpusSummary summary;
  summary.options = options;
  for (const auto& item : items) {
    switch (item.status) {
      case ItemStatus::kSkipped:
        ++summary.skipped;
        continue;
      case ItemStatus::kError:
        ++summary.errors;
        break;
      case ItemStatus::kAnalyzed:
        ++summary.analyzed;
        break;
    }
    for (std::size_t a = 0; a < kCorpusAuditCount; ++a) {
      auto& t = summary.tallies[a];
      switch (item.outcomes[a]) {
        case AuditOutcome::kPass: ++t.pass; break;
        case AuditOutcome::kFail: ++t.fail; break;
        case AuditOutcome::kInapplicable: ++t.inapplicable; break;
      }
    }
    if (item.status == ItemStatus::kAnalyzed) {
      summary.castelnuovo += item.castelnuovo;
      summary.spanning += item.spanning;
      summary.with_interior += item.interior;
      summary.smooth += item.smooth;
      summary.round_trip_truncated += item.round_trip_truncated;
      summary.pulling_anomalies += item.pulling_anomaly;
      if (summary.degree_histogram.size() <= item.degree) summary.degree_histogram.resize(item.degree + 1, 0);
      ++summary.degree_histogram[item.degree];
    }
    if (item.failed()) {
      summary.failing_items.push_back(item.index);
      const std::string prefix = "item " + std::to_string(item.index) + ": ";
      if (item.status == ItemStatus::kError) summary.failure_notes.push_back(prefix + "error: " + item.message);
      for (const auto& d : item.failure_details) summary.failure_notes.push_back(prefix + d);
      if (options.dump_dir) {
        std::filesystem::create_directories(*options.dump_dir);
        const std::string name = "corpus-d" + std::to_string(options.dim) + "-b" +
                                 std::to_string(options.coord_bound) + "-s" + std::to_string(options.seed) +
                                 "-" + std::to_string(item.index);
        write_polytope_file(*options.dump_dir / (name + ".json"), PolytopeFile{name, item.points});
        summary.dumped_files.push_back(name + ".json");
      }
    }
  }
  return summary;
}

CorpusSummary run_corpus(const CorpusOptions& options) { return run_corpus(options, nullptr); }

CorpusSummary run_corpus(const CorpusOptions& options, std::vector<CorpusItem>* items_out) {
  std::size_t rejected = 0;
  auto samples = generate_corpus(options, &rejected);

  const CountOptions count_options{options.budget};
  std::vector<CorpusItem> items(samples.size());
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, samples.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < samples.size(); i = next++)
      items[i] = audit_corpus_item(i, std::move(samples[i]), count_options);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  // Serial aggregation in index order keeps the summary independent of scheduling.
  CorpusSummary summary = summarize_corpus(options, items);
  summary.rejected_samples = rejected;
  summary.generated = items.size();
  if (items_out) *items_out = std::move(items);
  return summary;
}

// ---------------------------------------------------------------------------

std::string render_text(const CorpusSummary& s) {
  std::ostringstream os;
  const auto& o = s.options;
  os << "corpus dim=" << o.dim << " coord-bound=" << o.coord_bound << " count=" << o.count << " seed=" << o.seed
     << '\n'
     << "generated " << s.generated << " (rejected " << s.rejected_samples << " degenerate samples), analyzed "
     << s.analyzed << ", skipped " << s.skipped << " (budget), errors " << s.errors << '\n'
     << "castelnuovo " << s.castelnuovo << ", spanning " << s.spanning << ", interior point " << s.with_interior
     << ", smooth " << s.smooth << '\n'
     << "degree histogram";
  for (std::size_t d = 0; d < s.degree_histogram.size(); ++d) os << ' ' << d << ':' << s.degree_histogram[d];
  os << '\n';
  for (auto a : corpus_audits()) {
    const auto& t = s.tally(a);
    std::string name = to_string(a);
    name.resize(std::max<std::size_t>(name.size(), 26), ' ');
    os << "  " << name << " pass " << t.pass << "  fail " << t.fail << "  n/a " << t.inapplicable << '\n';
  }
  if (s.round_trip_truncated) os << "round trip truncated by budget on " << s.round_trip_truncated << " items\n";
  os << "pulling-order anomalies (logged, not failures): " << s.pulling_anomalies << '\n';
  if (!s.failing_items.empty()) {
    os << "failing items:";
    for (auto i : s.failing_items) os << ' ' << i;
    os << '\n';
    for (const auto& f : s.failure_notes) os << "  " << f << '\n';
    for (const auto& f : s.dumped_files) os << "  dumped " << f << '\n';
  }
  os << (s.ok() ? "RESULT: all audits passed" : "RESULT: FAILURES") << '\n';
  return os.str();
}

nlohmann::json to_json(const CorpusSummary& s) {
  nlohmann::json audits = nlohmann::json::object();
  for (auto a : corpus_audits()) {
    const auto& t = s.tally(a);
    audits[to_string(a)] = {{"pass", t.pass}, {"fail", t.fail}, {"inapplicable", t.inapplicable}};
  }
  return {{"options",
           {{"dim", s.options.dim},
            {"coord_bound", s.options.coord_bound},
            {"count", s.options.count},
            {"seed", s.options.seed},
            {"budget", s.options.budget}}},
          {"generated", s.generated},
          {"rejected_samples", s.rejected_samples},
          {"analyzed", s.analyzed},
          {"skipped", s.skipped},
          {"errors", s.errors},
          {"castelnuovo", s.castelnuovo},
          {"spanning", s.spanning},
          {"with_interior", s.with_interior},
          {"smooth", s.smooth},
          {"degree_histogram", s.degree_histogram},
          {"audits", audits},
          {"round_trip_truncated", s.round_trip_truncated},
          {"pulling_anomalies", s.pulling_anomalies},
          {"failing_items", s.failing_items},
          {"failure_notes", s.failure_notes},
          {"dumped_files", s.dumped_files},
          {"ok", s.ok()}};
}

}  // namespace castelnuovo
