// Command-line front end: analyze, examples, corpus, idp.
#include <castelnuovo/classification.hpp>
#include <castelnuovo/corpus.hpp>
#include <castelnuovo/errors.hpp>
#include <castelnuovo/polytope_file.hpp>
#include <castelnuovo/registry.hpp>
#include <castelnuovo/report.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace cn = castelnuovo;

namespace {

// Exit codes. kCounterexample is a mathematical answer, not a failure.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kCounterexample = 2;
constexpr int kInconclusive = 3;

struct AnalyzeArgs {
  std::string file;
  bool json = false;
  std::optional<unsigned> kmax;
  std::uint64_t budget = cn::kDefaultCellBudget;
};

struct ExamplesArgs {
  std::optional<std::string> name;
  std::optional<unsigned> a;
};

struct IdpArgs {
  std::string file;
  std::optional<unsigned> kmax;
  std::uint64_t budget = cn::kDefaultCellBudget;
};

int cmd_analyze(const AnalyzeArgs& args) {
  const cn::PolytopeFile file = cn::read_polytope_file(args.file);
  const cn::Polytope p = cn::build_polytope(file.vertices);
  const cn::AnalysisReport report = cn::analyze(p, file.name, args.kmax, cn::CountOptions{args.budget});
  if (args.json)
    std::cout << cn::to_json(report).dump(2) << '\n';
  else
    std::cout << cn::render_text(report);
  if (report.route_mismatch()) {
    std::cerr << "error: ROUTE-MISMATCH (internal inconsistency)\n";
    return kFailure;
  }
  return kOk;
}

int cmd_examples(const ExamplesArgs& args) {
  const auto results = cn::run_examples(args.name, args.a);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.label() << "  h*=(";
    for (std::size_t i = 0; i < r.report.hstar.size(); ++i) std::cout << (i ? "," : "") << r.report.hstar[i];
    std::cout << ") deg=" << r.report.degree << " vol=" << r.report.volume
              << " spanning=" << (r.report.spanning ? "yes" : "no")
              << " castelnuovo=" << (r.report.by_hstar.verdict ? "yes" : "no") << " idp=" << r.report.idp.label()
              << '\n';
    for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    all = all && r.passed();
  }
  std::cout << (all ? "all examples passed" : "some examples FAILED") << '\n';
  return all ? kOk : kFailure;
}

int cmd_corpus(const cn::CorpusOptions& options, bool json) {
  const cn::CorpusSummary summary = cn::run_corpus(options);
  if (json)
    std::cout << cn::to_json(summary).dump(2) << '\n';
  else
    std::cout << cn::render_text(summary);
  return summary.ok() ? kOk : kFailure;
}

int cmd_idp(const IdpArgs& args) {
  const cn::PolytopeFile file = cn::read_polytope_file(args.file);
  const cn::Polytope p = cn::build_polytope(file.vertices);
  const cn::IdpVerdict v = cn::idp_check(p, args.kmax, cn::CountOptions{args.budget});
  std::cout << file.name << ": " << v.label() << '\n';
  if (v.witness) return kCounterexample;
  return v.certified() ? kOk : kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-polytope invariants and Castelnuovo classification"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* sub_analyze = app.add_subcommand("analyze", "Full invariant report for one polytope file");
  sub_analyze->add_option("file", analyze.file, "Polytope file (JSON or one vertex per line)")->required();
  sub_analyze->add_flag("--json", analyze.json, "Emit a JSON document instead of text");
  sub_analyze->add_option("--kmax", analyze.kmax, "Largest dilate for the IDP check (default max(2, n-1))");
  sub_analyze->add_option("--budget", analyze.budget, "Bounding-box cell cap per dilate");

  ExamplesArgs examples;
  auto* sub_examples = app.add_subcommand("examples", "Run the built-in examples and check known values");
  sub_examples->add_option("name", examples.name, "One of: " + [] {
    std::string s;
    for (const auto& k : cn::example_keys()) s += (s.empty() ? "" : ", ") + k;
    return s;
  }());
  sub_examples->add_option("--a", examples.a, "Parameter: a for family-a, n for standard-simplex-n");

  cn::CorpusOptions corpus;
  bool corpus_json = false;
  std::string dump_dir;
  auto* sub_corpus = app.add_subcommand("corpus", "Audit a seeded random corpus");
  sub_corpus->add_option("--dim", corpus.dim, "Ambient dimension")->required();
  sub_corpus->add_option("--coord-bound", corpus.coord_bound, "Coordinates are drawn from [0, B]")
      ->capture_default_str();
  sub_corpus->add_option("--count", corpus.count, "Number of polytopes")->capture_default_str();
  sub_corpus->add_option("--seed", corpus.seed, "RNG seed")->capture_default_str();
  sub_corpus->add_option("--max-dim", corpus.max_dim, "Dimension cap")->capture_default_str();
  sub_corpus->add_option("--workers", corpus.workers, "Worker threads (0: all cores)")->capture_default_str();
  sub_corpus->add_option("--budget", corpus.budget, "Bounding-box cell cap per dilate")->capture_default_str();
  sub_corpus->add_option("--dump-dir", dump_dir, "Write failing polytopes here");
  sub_corpus->add_flag("--json", corpus_json, "Emit a JSON summary");

  IdpArgs idp;
  auto* sub_idp = app.add_subcommand("idp", "Integer decomposition check (exit 0 IDP, 2 counterexample)");
  sub_idp->add_option("file", idp.file, "Polytope file")->required();
  sub_idp->add_option("--kmax", idp.kmax, "Largest dilate to check (default max(2, n-1))");
  sub_idp->add_option("--budget", idp.budget, "Bounding-box cell cap per dilate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (*sub_analyze) return cmd_analyze(analyze);
    if (*sub_examples) return cmd_examples(examples);
    if (*sub_corpus) {
      if (!dump_dir.empty()) corpus.dump_dir = dump_dir;
      return cmd_corpus(corpus, corpus_json);
    }
    if (*sub_idp) return cmd_idp(idp);
  } catch (const cn::NotFullDimensional& e) {
    std::cerr << "error: polytope is not full-dimensional: " << e.what() << '\n';
    return kFailure;
  } catch (const cn::BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return kFailure;
  } catch (const cn::ParseError& e) {
    std::cerr << "error: parse error: " << e.what() << '\n';
    return kFailure;
  } catch (const cn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
