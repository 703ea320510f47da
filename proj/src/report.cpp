#include <castelnuovo/errors.hpp>
#include <castelnuovo/json_util.hpp>
#include <castelnuovo/report.hpp>
#include <castelnuovo/triangulation.hpp>

#include <sstream>

namespace castelnuovo {

using nlohmann::json;

AnalysisReport analyze(const Polytope& p, std::string name, std::optional<unsigned> kmax,
                       const CountOptions& options) {
  const ClassificationReport c = classify(p, kmax, options);
  AnalysisReport r;
  r.name = std::move(name);
  r.dim = p.dim();
  r.vertex_count = p.vertices().size();
  r.discarded_points = p.discarded_points();
  r.lattice_points = c.lattice_points;
  r.interior_points = c.interior_points;
  r.hstar = c.hstar.coeffs;
  r.degree = c.degree;
  r.volume = c.volume;
  r.spanning = c.spanning;
  r.invariant_factors = c.invariant_factors;
  r.smooth = c.smooth;
  r.idp = c.idp;
  r.genus = c.genus;
  r.by_hstar = c.by_hstar;
  r.by_bound = c.by_bound;
  r.bounds = c.bounds;
  r.castelnuovo_idp = c.castelnuovo_idp;
  r.degree_two_idp = c.degree_two_idp;
  r.interior_characterization = c.interior_characterization;
  r.smooth_idp = c.smooth_idp;

  const BetkeMcMullenReport bm = betke_mcmullen_check(p, options);
  r.triangulation.simplices = bm.simplex_count;
  r.triangulation.unimodular = bm.unimodular;
  r.triangulation.h = bm.h;
  r.triangulation.h.push_back(bm.h_top);
  r.triangulation.h_matches_hstar = bm.h_matches_hstar;
  r.triangulation.betke_mcmullen_consistent = bm.consistent();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::optional<bool> optional_bool_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

json optional_integer(const std::optional<Integer>& v) {
  return v ? integer_to_json(*v) : json(nullptr);
}

std::optional<Integer> optional_integer_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return integer_from_json(j);
}

CastelnuovoRoute route_from(const std::string& s) {
  for (auto r : {CastelnuovoRoute::kHStarCharacterization, CastelnuovoRoute::kDirectBound,
                 CastelnuovoRoute::kVolumeOneConvention})
    if (to_string(r) == s) return r;
  throw ParseError("unknown Castelnuovo route '" + s + "'");
}

AuditOutcome outcome_from(const std::string& s) {
  for (auto o : {AuditOutcome::kPass, AuditOutcome::kFail, AuditOutcome::kInapplicable})
    if (to_string(o) == s) return o;
  throw ParseError("unknown audit outcome '" + s + "'");
}

json verdict_json(const CastelnuovoVerdict& v) {
  return {{"verdict", v.verdict},
          {"route", to_string(v.route)},
          {"reasons",
           {{"spanning", optional_bool(v.reasons.spanning)},
            {"flat", optional_bool(v.reasons.flat)},
            {"tail", optional_bool(v.reasons.tail)},
            {"enough_sections", optional_bool(v.reasons.enough_sections)},
            {"bound_attained", optional_bool(v.reasons.bound_attained)}}}};
}

CastelnuovoVerdict verdict_from(const json& j) {
  CastelnuovoVerdict v;
  v.verdict = j.at("verdict").get<bool>();
  v.route = route_from(j.at("route").get<std::string>());
  const auto& r = j.at("reasons");
  v.reasons.spanning = optional_bool_from(r.at("spanning"));
  v.reasons.flat = optional_bool_from(r.at("flat"));
  v.reasons.tail = optional_bool_from(r.at("tail"));
  v.reasons.enough_sections = optional_bool_from(r.at("enough_sections"));
  v.reasons.bound_attained = optional_bool_from(r.at("bound_attained"));
  return v;
}

json check_json(const BoundCheck& c) {
  return {{"applicable", c.applicable}, {"holds", c.holds}, {"detail", c.detail}};
}

BoundCheck check_from(const json& j) {
  return BoundCheck{j.at("applicable").get<bool>(), j.at("holds").get<bool>(),
                    j.at("detail").get<std::string>()};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<Integer>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

std::string reasons_text(const CastelnuovoReasons& r) {
  std::ostringstream os;
  auto item = [&](const char* name, const std::optional<bool>& b) {
    if (b) os << ' ' << name << '=' << yes_no(*b);
  };
  item("spanning", r.spanning);
  item("flat", r.flat);
  item("tail", r.tail);
  item("h0>=n+2", r.enough_sections);
  item("g=bound", r.bound_attained);
  return os.str();
}

}  // namespace

json to_json(const AnalysisReport& r) {
  json idp = {{"status", r.idp.status == IdpStatus::kCertified ? "certified" : "counterexample"},
              {"kmax_checked", r.idp.kmax_checked},
              {"cutoff_certificate", r.idp.cutoff_certificate},
              {"label", r.idp.label()},
              {"witness", nullptr}};
  if (r.idp.witness)
    idp["witness"] = {{"k", r.idp.witness->k}, {"point", point_to_json(r.idp.witness->point)}};

  return {
      {"name", r.name},
      {"dim", r.dim},
      {"vertex_count", r.vertex_count},
      {"discarded_points", r.discarded_points},
      {"lattice_points", integer_to_json(r.lattice_points)},
      {"interior_points", integer_to_json(r.interior_points)},
      {"hstar", integers_to_json(r.hstar)},
      {"degree", r.degree},
      {"volume", integer_to_json(r.volume)},
      {"spanning", r.spanning},
      {"invariant_factors", integers_to_json(r.invariant_factors)},
      {"smooth", r.smooth},
      {"idp", idp},
      {"genus",
       {{"s", r.genus.s},
        {"g", integer_to_json(r.genus.genus)},
        {"delta", integer_to_json(r.genus.delta)},
        {"m", optional_integer(r.genus.m)},
        {"bound", optional_integer(r.genus.bound)},
        {"h0", integer_to_json(r.genus.h0)},
        {"volume", integer_to_json(r.genus.volume)}}},
      {"castelnuovo", {{"hstar_route", verdict_json(r.by_hstar)}, {"direct_route", verdict_json(r.by_bound)}}},
      {"route_mismatch", r.route_mismatch()},
      {"bounds",
       {{"hibi", check_json(r.bounds.hibi)},
        {"hkn", check_json(r.bounds.hkn)},
        {"volume", check_json(r.bounds.volume)},
        {"volume_equality", r.bounds.volume_equality},
        {"flat", r.bounds.flat}}},
      {"audits",
       {{"castelnuovo_implies_idp", to_string(r.castelnuovo_idp)},
        {"degree_two_idp", to_string(r.degree_two_idp)},
        {"interior_characterization", to_string(r.interior_characterization)},
        {"smooth_castelnuovo_idp", to_string(r.smooth_idp)}}},
      {"triangulation",
       {{"simplices", r.triangulation.simplices},
        {"unimodular", r.triangulation.unimodular},
        {"h", integers_to_json(r.triangulation.h)},
        {"h_matches_hstar", r.triangulation.h_matches_hstar},
        {"betke_mcmullen_consistent", r.triangulation.betke_mcmullen_consistent}}},
  };
}

AnalysisReport report_from_json(const json& doc) {
  try {
    AnalysisReport r;
    r.name = doc.at("name").get<std::string>();
    r.dim = doc.at("dim").get<std::size_t>();
    r.vertex_count = doc.at("vertex_count").get<std::size_t>();
    r.discarded_points = doc.at("discarded_points").get<std::size_t>();
    r.lattice_points = integer_from_json(doc.at("lattice_points"));
    r.interior_points = integer_from_json(doc.at("interior_points"));
    r.hstar = integers_from_json(doc.at("hstar"));
    r.degree = doc.at("degree").get<std::size_t>();
    r.volume = integer_from_json(doc.at("volume"));
    r.spanning = doc.at("spanning").get<bool>();
    r.invariant_factors = integers_from_json(doc.at("invariant_factors"));
    r.smooth = doc.at("smooth").get<bool>();

    const auto& idp = doc.at("idp");
    r.idp.status = idp.at("status").get<std::string>() == "certified" ? IdpStatus::kCertified
                                                                      : IdpStatus::kCounterexample;
    r.idp.kmax_checked = idp.at("kmax_checked").get<unsigned>();
    r.idp.cutoff_certificate = idp.at("cutoff_certificate").get<bool>();
    if (!idp.at("witness").is_null())
      r.idp.witness = IdpWitness{idp["witness"].at("k").get<unsigned>(),
                                 point_from_json(idp["witness"].at("point"))};

    const auto& g = doc.at("genus");
    r.genus.s = g.at("s").get<std::size_t>();
    r.genus.genus = integer_from_json(g.at("g"));
    r.genus.delta = integer_from_json(g.at("delta"));
    r.genus.m = optional_integer_from(g.at("m"));
    r.genus.bound = optional_integer_from(g.at("bound"));
    r.genus.h0 = integer_from_json(g.at("h0"));
    r.genus.volume = integer_from_json(g.at("volume"));

    r.by_hstar = verdict_from(doc.at("castelnuovo").at("hstar_route"));
    r.by_bound = verdict_from(doc.at("castelnuovo").at("direct_route"));

    const auto& b = doc.at("bounds");
    r.bounds.hibi = check_from(b.at("hibi"));
    r.bounds.hkn = check_from(b.at("hkn"));
    r.bounds.volume = check_from(b.at("volume"));
    r.bounds.volume_equality = b.at("volume_equality").get<bool>();
    r.bounds.flat = b.at("flat").get<bool>();

    const auto& a = doc.at("audits");
    r.castelnuovo_idp = outcome_from(a.at("castelnuovo_implies_idp").get<std::string>());
    r.degree_two_idp = outcome_from(a.at("degree_two_idp").get<std::string>());
    r.interior_characterization = outcome_from(a.at("interior_characterization").get<std::string>());
    r.smooth_idp = outcome_from(a.at("smooth_castelnuovo_idp").get<std::string>());

    const auto& t = doc.at("triangulation");
    r.triangulation.simplices = t.at("simplices").get<std::size_t>();
    r.triangulation.unimodular = t.at("unimodular").get<bool>();
    r.triangulation.h = integers_from_json(t.at("h"));
    r.triangulation.h_matches_hstar = t.at("h_matches_hstar").get<bool>();
    r.triangulation.betke_mcmullen_consistent = t.at("betke_mcmullen_consistent").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("analysis report: ") + e.what());
  }
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  if (r.route_mismatch())
    os << "!!! ROUTE-MISMATCH: the h*-characterization and the direct genus bound disagree. "
          "This is a bug; please report the input polytope. !!!\n";
  os << "polytope          " << r.name << '\n'
     << "dimension         " << r.dim << '\n'
     << "vertices          " << r.vertex_count;
  if (r.discarded_points) os << " (" << r.discarded_points << " non-vertex input points discarded)";
  os << '\n'
     << "lattice points    " << r.lattice_points << " (interior " << r.interior_points << ")\n"
     << "h*-vector         " << join(r.hstar) << '\n'
     << "degree            " << r.degree << '\n'
     << "normalized volume " << r.volume << '\n'
     << "spanning          " << yes_no(r.spanning) << "  invariant factors " << join(r.invariant_factors) << '\n'
     << "smooth            " << yes_no(r.smooth) << '\n'
     << "IDP               " << r.idp.label() << '\n'
     << "sectional genus   g=" << r.genus.genus << "  delta=" << r.genus.delta << "  m="
     << (r.genus.m ? r.genus.m->get_str() : "-") << "  bound=" << (r.genus.bound ? r.genus.bound->get_str() : "-")
     << "  h0=" << r.genus.h0 << '\n'
     << "Castelnuovo       " << yes_no(r.by_hstar.verdict) << " [" << to_string(r.by_hstar.route) << ":"
     << reasons_text(r.by_hstar.reasons) << "]\n"
     << "                  " << yes_no(r.by_bound.verdict) << " [" << to_string(r.by_bound.route) << ":"
     << reasons_text(r.by_bound.reasons) << "]\n";
  auto check = [&](const char* label, const BoundCheck& c) {
    os << label << (c.applicable ? (c.holds ? "holds" : "VIOLATED") : "n/a") << "  " << c.detail << '\n';
  };
  check("Hibi lower bound  ", r.bounds.hibi);
  check("HKN bound         ", r.bounds.hkn);
  check("volume bound      ", r.bounds.volume);
  os << "audits            castelnuovo=>IDP " << to_string(r.castelnuovo_idp) << ", deg-2 IDP "
     << to_string(r.degree_two_idp) << ", interior characterization " << to_string(r.interior_characterization)
     << ", smooth IDP " << to_string(r.smooth_idp) << '\n'
     << "triangulation     " << r.triangulation.simplices << " simplices, unimodular "
     << yes_no(r.triangulation.unimodular) << ", h " << join(r.triangulation.h) << ", h=h* "
     << yes_no(r.triangulation.h_matches_hstar) << ", Betke-McMullen "
     << (r.triangulation.betke_mcmullen_consistent ? "consistent" : "INCONSISTENT") << '\n';
  return os.str();
}

}  // namespace castelnuovo
