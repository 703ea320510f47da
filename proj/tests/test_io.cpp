#include <castelnuovo/errors.hpp>
#include <castelnuovo/json_util.hpp>
#include <castelnuovo/polytope_file.hpp>
#include <castelnuovo/report.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "test_support.hpp"

using namespace castelnuovo;
using namespace castelnuovo::testing;

namespace {

std::string parse_error_message(std::string_view text) {
  try {
    parse_polytope_file(text, "input");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(JsonUtil, IntegersRoundTrip) {
  const Integer big("-123456789012345678901234567890");
  EXPECT_TRUE(integer_to_json(Integer(42)).is_number_integer());
  EXPECT_TRUE(integer_to_json(big).is_string());
  for (const Integer& v : {Integer(0), Integer(-7), big}) EXPECT_EQ(integer_from_json(integer_to_json(v)), v);
  EXPECT_EQ(integer_from_json(nlohmann::json("17")), 17);
  EXPECT_THROW(integer_from_json(nlohmann::json(1.5)), ParseError);
  EXPECT_THROW(integer_from_json(nlohmann::json("x1")), ParseError);
  EXPECT_THROW(integer_from_json(nlohmann::json(true)), ParseError);
  const LatticePoint p{1, -2, 3};
  EXPECT_EQ(point_from_json(point_to_json(p)), p);
  EXPECT_THROW(integers_from_json(nlohmann::json::object()), ParseError);
}

TEST(PolytopeFile, ParsesJson) {
  const auto f = parse_polytope_file(R"({"name": "tri", "vertices": [[0,0],[1,0],[0,1]]})");
  EXPECT_EQ(f.name, "tri");
  EXPECT_EQ(f.vertices, (std::vector<LatticePoint>{{0, 0}, {1, 0}, {0, 1}}));
  const auto unnamed = parse_polytope_file(R"({"vertices": [["-5"], [3]]})");
  EXPECT_EQ(unnamed.name, "");
  EXPECT_EQ(unnamed.vertices, (std::vector<LatticePoint>{{-5}, {3}}));
}

TEST(PolytopeFile, ParsesPlainText) {
  const auto f = parse_polytope_file("# a square\n0 0\n2 0   # corner\n\n0 2\n+2 2\n");
  EXPECT_EQ(f.vertices, square_2x2());
}

TEST(PolytopeFile, DiagnosticsNameLineAndField) {
  EXPECT_EQ(parse_error_message("0 0\n1 x\n"), "input: line 2, field 2: 'x' is not an integer");
  EXPECT_EQ(parse_error_message("0 0\n1 0 0\n"), "input: line 2: 3 coordinates, expected 2");
  EXPECT_EQ(parse_error_message("1.5 0\n"), "input: line 1, field 1: '1.5' is not an integer");
  EXPECT_EQ(parse_error_message("# nothing\n"), "input: no vertices");
  EXPECT_EQ(parse_error_message(R"({"vertices": [[0, 0], [1, "a"]]})"),
            "input: vertices[1][1]: 'a' is not an integer");
  EXPECT_EQ(parse_error_message(R"({"vertices": [[0, 0], [1]]})"), "input: vertices[1] has 1 coordinates, expected 2");
  EXPECT_EQ(parse_error_message(R"({"name": 3, "vertices": [[0]]})"), "input: field \"name\" must be a string");
  EXPECT_EQ(parse_error_message(R"({"name": "x"})"), "input: missing field \"vertices\"");
  EXPECT_EQ(parse_error_message(R"({"vertices": [[]]})"), "input: vertices[0] is empty");
  EXPECT_NE(parse_error_message("{\"vertices\": [[0, 0],\n [1, 0]").find("line 2: malformed JSON"),
            std::string::npos);
}

TEST(PolytopeFile, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "castelnuovo_io_test";
  std::filesystem::create_directories(dir);
  const PolytopeFile f{"nonspanning", example_3_5()};
  write_polytope_file(dir / "p.json", f);
  EXPECT_EQ(read_polytope_file(dir / "p.json"), f);

  std::ofstream(dir / "plain_square.txt") << "0 0\n2 0\n0 2\n2 2\n";
  const auto plain = read_polytope_file(dir / "plain_square.txt");
  EXPECT_EQ(plain.name, "plain_square");  // defaults to the file stem
  EXPECT_THROW(read_polytope_file(dir / "missing.txt"), ParseError);
  std::filesystem::remove_all(dir);
}

// ---------------------------------------------------------------------------

TEST(Report, SquareAnalysis) {
  const AnalysisReport r = analyze(build_polytope(square_2x2()), "square");
  EXPECT_EQ(r.hstar, ints({1, 6, 1}));
  EXPECT_EQ(r.lattice_points, 9);
  EXPECT_EQ(r.interior_points, 1);
  EXPECT_TRUE(r.by_hstar.verdict);
  EXPECT_TRUE(r.by_bound.verdict);
  EXPECT_TRUE(r.idp.certified());
  EXPECT_FALSE(r.route_mismatch());
  EXPECT_EQ(r.triangulation.h, ints({1, 6, 1, 0}));
  const std::string text = render_text(r);
  EXPECT_EQ(text.find("ROUTE-MISMATCH"), std::string::npos);
  EXPECT_NE(text.find("h*-vector         (1, 6, 1)"), std::string::npos);
}

TEST(Report, MismatchBanner) {
  AnalysisReport r = analyze(build_polytope(unit_square()), "square");
  r.by_bound.verdict = !r.by_hstar.verdict;
  EXPECT_TRUE(r.route_mismatch());
  EXPECT_EQ(render_text(r).rfind("!!! ROUTE-MISMATCH", 0), 0u);
  EXPECT_TRUE(to_json(r)["route_mismatch"].get<bool>());
}

TEST(ReportProperty, JsonRoundTrip) {
  std::vector<AnalysisReport> reports{
      analyze(build_polytope(example_3_5()), "nonspanning"), analyze(build_polytope(family_2()), "family-2"),
      analyze(build_polytope(standard_simplex(3)), "simplex"), analyze(build_polytope(reeve_2()), "reeve")};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i)
    reports.push_back(analyze(build_polytope(random_points(rng, 2 + i % 3, 2)), "random-" + std::to_string(i)));
  for (const auto& r : reports) {
    const auto text = to_json(r).dump();
    EXPECT_EQ(report_from_json(nlohmann::json::parse(text)), r) << r.name;
  }
}

TEST(Report, MalformedDocument) {
  auto doc = to_json(analyze(build_polytope(unit_square()), "sq"));
  doc.erase("genus");
  EXPECT_THROW(report_from_json(doc), ParseError);
  auto bad = to_json(analyze(build_polytope(unit_square()), "sq"));
  bad["castelnuovo"]["hstar_route"]["route"] = "guesswork";
  EXPECT_THROW(report_from_json(bad), ParseError);
}
