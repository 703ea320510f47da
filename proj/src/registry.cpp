#include <castelnuovo/errors.hpp>
#include <castelnuovo/registry.hpp>

#include <sstream>

namespace castelnuovo {

namespace {

std::vector<LatticePoint> standard_simplex(unsigned n) {
  std::vector<LatticePoint> v{LatticePoint(std::size_t{n})};
  for (unsigned i = 0; i < n; ++i) v.push_back(LatticePoint::unit(n, i));
  return v;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::string show(const std::vector<Integer>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

// Collects "field: expected X, got Y" lines.
class Expectations {
 public:
  template <class T>
  void eq(const char* field, const T& got, const T& want) {
    if (got == want) return;
    std::ostringstream os;
    os << field << ": expected " << want << ", got " << got;
    failures_.push_back(os.str());
  }
  void eq(const char* field, const std::vector<Integer>& got, const std::vector<Integer>& want) {
    if (got != want) failures_.push_back(std::string(field) + ": expected " + show(want) + ", got " + show(got));
  }
  void fail(std::string what) { failures_.push_back(std::move(what)); }

  std::vector<std::string> take() { return std::move(failures_); }

 private:
  std::vector<std::string> failures_;
};

// Checks every report must pass regardless of the example.
void common_checks(Expectations& e, const AnalysisReport& r) {
  if (r.route_mismatch()) e.fail("ROUTE-MISMATCH between the two Castelnuovo routes");
  if (!r.bounds.all_hold()) e.fail("a bound audit is violated");
  if (!r.triangulation.betke_mcmullen_consistent) e.fail("Betke-McMullen check inconsistent");
  for (auto [name, outcome] : {std::pair{"castelnuovo=>IDP", r.castelnuovo_idp},
                               std::pair{"degree-two IDP", r.degree_two_idp},
                               std::pair{"interior characterization", r.interior_characterization},
                               std::pair{"smooth IDP", r.smooth_idp}})
    if (outcome == AuditOutcome::kFail) e.fail(std::string(name) + " audit failed");
}

}  // namespace

const std::vector<std::string>& example_keys() {
  static const std::vector<std::string> keys{"standard-simplex-n", "example-3-5", "family-a",
                                             "reflexive-simplex-3", "square-2x2"};
  return keys;
}

std::vector<LatticePoint> family_vertices(unsigned a) {
  if (a == 0) throw std::invalid_argument("family-a requires a >= 1");
  const unsigned n = 2 * a + 1;
  std::vector<LatticePoint> v{LatticePoint(std::size_t{n})};
  for (unsigned i = 0; i < 2 * a; ++i) v.push_back(LatticePoint::unit(n, i));
  std::vector<Integer> apex(n), tail(n, Integer(0));
  for (unsigned i = 0; i < a; ++i) apex[i] = 1;
  for (unsigned i = a; i < 2 * a; ++i) apex[i] = 2;
  apex[2 * a] = 3;
  for (unsigned i = a + 1; i < n; ++i) tail[i] = -1;
  v.emplace_back(apex);
  v.emplace_back(tail);
  return v;
}

std::vector<LatticePoint> example_vertices(const std::string& key, unsigned param) {
  if (key == "standard-simplex-n") {
    if (param == 0) throw std::invalid_argument("standard-simplex-n requires n >= 1");
    return standard_simplex(param);
  }
  if (key == "example-3-5")
    return {LatticePoint{0, 0, 0, 0}, LatticePoint{1, 0, 0, 0}, LatticePoint{0, 1, 0, 0},
            LatticePoint{0, 0, 1, 0}, LatticePoint{1, 1, 0, 2}, LatticePoint{1, 0, -1, 0}};
  if (key == "family-a") return family_vertices(param);
  if (key == "reflexive-simplex-3")
    return {LatticePoint{1, 0, 0}, LatticePoint{0, 1, 0}, LatticePoint{0, 0, 1}, LatticePoint{-1, -1, -1}};
  if (key == "square-2x2") return {LatticePoint{0, 0}, LatticePoint{2, 0}, LatticePoint{0, 2}, LatticePoint{2, 2}};
  throw UnknownExample("unknown example '" + key + "'");
}

std::string ExampleResult::label() const {
  if (key == "standard-simplex-n") return "standard-simplex-" + std::to_string(param);
  if (key == "family-a") return "family-" + std::to_string(param);
  return key;
}

std::vector<std::string> check_example(const std::string& key, unsigned param, const AnalysisReport& r) {
  Expectations e;
  common_checks(e, r);
  const std::size_t n = r.dim;

  if (key == "standard-simplex-n") {
    std::vector<Integer> h(n + 1, Integer(0));
    h[0] = 1;
    e.eq("h*", r.hstar, h);
    e.eq<std::size_t>("degree", r.degree, 0);
    e.eq<Integer>("volume", r.volume, 1);
    e.eq<Integer>("lattice points", r.lattice_points, Integer(static_cast<unsigned long>(n + 1)));
    e.eq("Castelnuovo (h* route)", r.by_hstar.verdict, true);
    e.eq("Castelnuovo (direct route)", r.by_bound.verdict, true);
    e.eq("route", to_string(r.by_hstar.route), to_string(CastelnuovoRoute::kVolumeOneConvention));
    e.eq("IDP certified", r.idp.certified(), true);
    e.eq("unimodular triangulation", r.triangulation.unimodular, true);
  } else if (key == "example-3-5") {
    e.eq("h*", r.hstar, ints({1, 1, 1, 1, 0}));
    e.eq<std::size_t>("degree", r.degree, 3);
    e.eq<Integer>("volume", r.volume, 4);
    e.eq<Integer>("lattice points", r.lattice_points, 6);
    e.eq("spanning", r.spanning, false);
    e.eq("invariant factors", r.invariant_factors, ints({1, 1, 1, 2}));
    e.eq("Castelnuovo (h* route)", r.by_hstar.verdict, false);
    e.eq("Castelnuovo (direct route)", r.by_bound.verdict, false);
  } else if (key == "family-a") {
    const unsigned a = param;
    std::vector<Integer> h(2 * a + 2, Integer(0));
    for (unsigned i = 0; i <= a; ++i) h[i] = 1;
    h[a + 1] = 2;
    e.eq("h*", r.hstar, h);
    e.eq<std::size_t>("degree", r.degree, a + 1);
    e.eq<Integer>("lattice points", r.lattice_points, 2 * a + 3);
    e.eq("spanning", r.spanning, true);
    if (!r.idp.witness) {
      e.fail("IDP: expected a counterexample, got " + r.idp.label());
    } else {
      e.eq("IDP witness k", r.idp.witness->k, a + 1);
      e.eq("IDP witness point", r.idp.witness->point.to_string(),
           LatticePoint(std::vector<Integer>(2 * a + 1, Integer(1))).to_string());
    }
    e.eq("Castelnuovo (h* route)", r.by_hstar.verdict, false);
    e.eq("Castelnuovo (direct route)", r.by_bound.verdict, false);
  } else if (key == "reflexive-simplex-3") {
    e.eq("h*", r.hstar, ints({1, 1, 1, 1}));
    e.eq<Integer>("interior points", r.interior_points, 1);
    e.eq<Integer>("genus", r.genus.genus, 3);
    e.eq<Integer>("genus bound", r.genus.bound.value_or(Integer(-1)), 3);
    e.eq("Castelnuovo (h* route)", r.by_hstar.verdict, true);
    e.eq("Castelnuovo (direct route)", r.by_bound.verdict, true);
    e.eq("IDP certified", r.idp.certified(), true);
  } else if (key == "square-2x2") {
    e.eq("h*", r.hstar, ints({1, 6, 1}));
    e.eq<Integer>("volume", r.volume, 8);
    e.eq<Integer>("genus", r.genus.genus, 1);
    e.eq<Integer>("genus bound", r.genus.bound.value_or(Integer(-1)), 1);
    e.eq("smooth", r.smooth, true);
    e.eq("Castelnuovo (h* route)", r.by_hstar.verdict, true);
    e.eq("Castelnuovo (direct route)", r.by_bound.verdict, true);
    e.eq("IDP certified", r.idp.certified(), true);
  } else {
    throw UnknownExample("unknown example '" + key + "'");
  }
  return e.take();
}

std::vector<ExampleResult> run_examples(const std::optional<std::string>& key,
                                        const std::optional<unsigned>& param, const CountOptions& options) {
  std::vector<std::string> keys;
  if (key) {
    example_vertices(*key, 1);  // validates the key
    keys.push_back(*key);
  } else {
    keys = example_keys();
  }

  std::vector<ExampleResult> results;
  for (const auto& k : keys) {
    std::vector<unsigned> params{0};
    if (k == "standard-simplex-n") params = param ? std::vector<unsigned>{*param} : std::vector<unsigned>{1, 2, 3, 4, 5};
    if (k == "family-a") params = param ? std::vector<unsigned>{*param} : std::vector<unsigned>{1, 2};
    for (unsigned prm : params) {
      ExampleResult res;
      res.key = k;
      res.param = prm;
      const Polytope p = build_polytope(example_vertices(k, prm));
      res.report = analyze(p, res.label(), std::nullopt, options);
      res.failures = check_example(k, prm, res.report);
      results.push_back(std::move(res));
    }
  }
  return results;
}

}  // namespace castelnuovo
