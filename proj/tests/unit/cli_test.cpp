#include <gtest/gtest.h>

#include <sstream>

#include "cyclic/app/cli.hpp"
#include "cyclic/app/plot.hpp"
#include "cyclic/polygon.hpp"

using namespace cyclic;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclic");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = app::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::pair<double, double>> parse_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, *header);
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return rows;
}

}  // namespace

TEST(Cli, EvalExamples) {
  EXPECT_EQ(run({"eval", "--polygon", "4", "--R", "1", "--L", "2", "--m", "3"}).out, "980\n");
  EXPECT_EQ(run({"eval", "--polygon", "4", "--R", "1", "--L", "2", "--m", "3", "--backend", "exact"}).out, "980\n");
  EXPECT_EQ(run({"eval", "--polygon", "5", "--R", "1/3", "--L", "1/2", "--m", "2", "--backend", "exact"}).out,
            "1205/1296\n");
  EXPECT_EQ(run({"eval", "--solid", "tetrahedron", "--c", "1", "--x", "1", "--y", "0", "--z", "0", "--m", "2"}).out,
            "80\n");
  EXPECT_EQ(run({"eval", "--polygon", "4", "--R", "1", "--L", "2", "--m", "1", "--output", "csv"}).out,
            "m,value\n1,20\n");
}

TEST(Cli, ExactSolidsPrintTheGoldenField) {
  const auto r = run({"eval", "--solid", "icosahedron", "--c", "1", "--L", "1", "--m", "1", "--backend", "exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "42+6√5\n");  // 12 (2 + phi^2)
}

TEST(Cli, LocusExamples) {
  EXPECT_EQ(run({"locus", "--solid", "octahedron", "--R", "1", "--m", "3", "--C", "6"}).out, "centroid\n");
  EXPECT_EQ(run({"locus", "--polygon", "4", "--R", "1", "--m", "3", "--C", "980"}).out, "circle L=2\n");
  EXPECT_EQ(run({"locus", "--polygon", "3", "--R", "1", "--m", "1", "--C", "2"}).out, "empty\n");
  EXPECT_EQ(run({"locus", "--solid", "tetrahedron", "--c", "1", "--m", "2", "--C", "80"}).out, "sphere L=1\n");
}

TEST(Cli, SolveAndRecover) {
  EXPECT_EQ(run({"solve", "--polygon", "4", "--R", "1", "--L", "2", "--d1-sq", "1", "--backend", "exact"}).out,
            "plus:  d^2 = (1, 5, 9, 5)\nminus: d^2 = (1, 5, 9, 5)\n");
  EXPECT_EQ(run({"recover", "--S2", "5", "--S4", "33", "--backend", "exact"}).out, "{R^2, L^2} = {4, 1}\n");
  EXPECT_EQ(run({"recover", "--solid", "tetrahedron", "--S2", "4", "--S4", "20", "--backend", "exact"}).out,
            "{R^2, L^2} = {3, 1}\n");
  EXPECT_EQ(run({"recover", "--polygon", "3", "--d-sq", "1,7,7", "--backend", "exact"}).out,
            "plus:  R^2 = 4, L^2 = 1\nminus: R^2 = 1, L^2 = 4\n");
}

TEST(Cli, Oracle) {
  const auto r = run({"oracle", "--polygon", "7", "--R", "1.5", "--L", "0.4", "--alpha", "30", "--degrees", "--m", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("relative error"), std::string::npos);
  const auto e = run({"oracle", "--polygon", "8", "--R", "1", "--L", "3/2", "--alpha-turns", "1/16", "--m", "7",
                      "--backend", "exact"});
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("equal:  yes"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, app::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, app::kExitUsage);
  const auto missing = run({"eval", "--polygon", "4", "--R", "1", "--m", "3"});
  EXPECT_EQ(missing.code, app::kExitUsage);
  EXPECT_NE(missing.err.find("--L"), std::string::npos);
  EXPECT_EQ(run({"eval", "--polygon", "4", "--R", "x", "--L", "1", "--m", "1"}).code, app::kExitUsage);
  EXPECT_EQ(run({"eval", "--polygon", "65", "--R", "1", "--L", "1", "--m", "1"}).code, app::kExitUsage);
  EXPECT_EQ(run({"eval", "--polygon", "4", "--R", "1", "--L", "1", "--m", "1", "--backend", "fuzzy"}).code,
            app::kExitUsage);
  EXPECT_EQ(run({"solve", "--polygon", "4", "--R", "1", "--L", "1", "--d1-sq", "1", "--C", "3"}).code,
            app::kExitUsage);
  const auto range = run({"eval", "--polygon", "4", "--R", "1", "--L", "2", "--m", "4"});
  EXPECT_EQ(range.code, app::kExitDomain);
  EXPECT_NE(range.err.find("OutOfRange"), std::string::npos);
  EXPECT_EQ(run({"recover", "--S2", "1", "--S4", "2"}).code, app::kExitDomain);
  // An empty locus is an answer, not an error.
  EXPECT_EQ(run({"locus", "--polygon", "3", "--R", "1", "--m", "1", "--C", "2"}).code, app::kExitOk);
}

TEST(Cli, BackendFromEnvironment) {
  setenv("CYCLIC_BACKEND", "exact", 1);
  const auto r = run({"eval", "--polygon", "5", "--R", "1/3", "--L", "1/2", "--m", "2"});
  unsetenv("CYCLIC_BACKEND");
  EXPECT_EQ(r.out, "1205/1296\n");
}

TEST(Cli, Rational24Report) {
  const auto r = run({"rational24"});
  EXPECT_EQ(r.code, 0);
  const std::string tail = "no rational-distance point exists\n";
  ASSERT_GE(r.out.size(), tail.size());
  EXPECT_EQ(r.out.substr(r.out.size() - tail.size()), tail);
  const auto areas = run({"rational24", "--areas", "6", "--d", "1,1,1,1,1,1"});
  EXPECT_NE(areas.out.find("necessary conditions: hold"), std::string::npos);
  const auto bad = run({"rational24", "--areas", "4", "--d", "1,1,1,2"});
  EXPECT_NE(bad.out.find("necessary conditions: fail"), std::string::npos);
}

TEST(Cli, Errata) {
  const auto r = run({"errata"});
  EXPECT_EQ(r.code, 0);
  std::size_t count = 0;
  for (std::size_t at = r.out.find("corrected form verified"); at != std::string::npos;
       at = r.out.find("corrected form verified", at + 1)) {
    ++count;
  }
  EXPECT_EQ(count, 4u);
  EXPECT_NE(r.out.find("70R^8L^8"), std::string::npos);
}

TEST(Cli, PlotAlphaCurves) {
  std::string header;
  const auto varying = parse_csv(run({"plot", "powersum-vs-alpha", "--polygon", "3", "--R", "1", "--L", "1", "--m", "3"}).out, &header);
  EXPECT_EQ(header, "alpha,value");
  ASSERT_EQ(varying.size(), 512u);
  double lo = 1e300, hi = -1e300;
  for (const auto& [a, v] : varying) lo = std::min(lo, v), hi = std::max(hi, v);
  EXPECT_GT(hi - lo, 1e-3);

  const auto flat = parse_csv(run({"plot", "powersum-vs-alpha", "--polygon", "3", "--R", "1", "--L", "1", "--m", "2"}).out, &header);
  lo = 1e300, hi = -1e300;
  for (const auto& [a, v] : flat) lo = std::min(lo, v), hi = std::max(hi, v);
  EXPECT_LT(hi - lo, 1e-9);
}

TEST(Cli, PlotCsvRoundTrips) {
  std::string header;
  const auto rows = parse_csv(run({"plot", "powersum-vs-L", "--polygon", "6", "--R", "1.25", "--m", "4", "--L-max", "3"}).out, &header);
  EXPECT_EQ(header, "L,value");
  ASSERT_EQ(rows.size(), 512u);
  const PolygonSpec<double> spec(6, 1.25);
  for (const auto& [L, v] : rows) EXPECT_LE(std::abs(v - power_sum_closed(spec, 4, L)), 1e-12 * std::max(1.0, v));
  const auto alpha = parse_csv(run({"plot", "powersum-vs-alpha", "--polygon", "5", "--R", "1", "--L", "0.5", "--m", "7"}).out, &header);
  for (const auto& [a, v] : alpha) {
    EXPECT_LE(std::abs(v - power_sum_brute(PolygonSpec<double>(5, 1.0), 7, PlanePlacement<double>(0.5, a))),
              1e-12 * std::max(1.0, v));
  }
  const auto solid = run({"plot", "powersum-vs-L", "--solid", "cube", "--R", "1", "--m", "3"});
  EXPECT_EQ(solid.code, 0);
}

TEST(Cli, PlotLocusSvg) {
  const auto r = run({"plot", "locus-circle", "--polygon", "4", "--R", "1", "--m", "3", "--C", "980"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  EXPECT_NE(r.out.find("viewBox=\"0 0 1000 1000\""), std::string::npos);
  EXPECT_NE(r.out.find("class=\"locus\" data-radius=\"2\""), std::string::npos);
  std::size_t vertices = 0;
  for (std::size_t at = r.out.find("class=\"vertex\""); at != std::string::npos; at = r.out.find("class=\"vertex\"", at + 1)) {
    ++vertices;
  }
  EXPECT_EQ(vertices, 4u);
  EXPECT_EQ(run({"plot", "locus-circle", "--polygon", "4", "--R", "1", "--m", "3", "--C", "980", "--output", "csv"}).code,
            app::kExitUsage);
}

TEST(Cli, VerifyRationalNamesThePrime) {
  const auto r = run({"verify", "--scope", "rational", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("certifying prime 5"), std::string::npos);
  EXPECT_EQ(run({"verify", "--scope", "galaxy"}).code, app::kExitUsage);
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = run({"verify", "--scope", "solid", "--seed", "3"});
  const auto b = run({"verify", "--scope", "solid", "--seed", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("dodecahedron: sum of d^10"), std::string::npos);
}
