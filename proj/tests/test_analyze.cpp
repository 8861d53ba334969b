#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "izeta/analyze.hpp"
#include "izeta/errors.hpp"

#include "fixtures.hpp"

using namespace izeta;

namespace {

AnalysisOptions quick_options(int n_max = 60) {
  AnalysisOptions opt;
  opt.n_max = n_max;
  opt.k = 2;
  opt.oracle_max = 6;
  return opt;
}

std::string fixture_path(const std::string& name) {
  return std::string(IZETA_FIXTURE_DIR) + "/" + name + ".edges";
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("izeta_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int rc = cli_main(args, out, err);
  if (out_text) *out_text = out.str();
  return rc;
}

}  // namespace

TEST_SUITE("analyze") {

TEST_CASE("full pipeline on the tetrahedron: report structure") {
  const auto a = analyze(fixtures::load("k4"), quick_options());
  const auto& r = a.report;

  CHECK(r["tool"]["name"] == "izeta");
  CHECK(r["graph"]["vertices"] == 4);
  CHECK(r["graph"]["edges"] == 6);
  CHECK(r["graph"]["bipartite"] == false);
  CHECK(r["graph"]["min_degree"] == 3);
  CHECK(r["period"]["delta"] == 1);
  CHECK(r["period"]["provisional"] == false);
  CHECK(r["period"]["girth"] == 3);
  CHECK(r["period"]["bipartite_rule"]["applicable"] == true);
  CHECK(r["period"]["bipartite_rule"]["agrees"] == true);
  CHECK(r["census"]["n_max"] == 60);
  CHECK(r["census"]["table"].size() == 60);
  // counts serialize as decimal strings: they outgrow every integer type
  const auto& row39 = r["census"]["table"][39];
  CHECK(row39["n"] == 40);
  CHECK(row39["closed_paths"].is_string());
  CHECK(row39["prime_classes"].is_string());
  CHECK(r["census"]["oracle_checked_max"] == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(r["census"]["table"][i]["oracle_agrees"] == true);

  CHECK(r["spectral"]["dimension"] == 12);
  CHECK(r["spectral"]["R"] == 0.5);
  CHECK(r["spectral"]["circle_count"] == 1);
  CHECK(r["spectral"]["eigenvalues"].size() == 5);  // distinct clusters

  CHECK(r["constants"]["gamma"] == euler_gamma);
  CHECK(r["constants"]["deviation_bound_onset"] == 1);
  CHECK(r["zeta_checks"].size() == 3);
  for (const auto& zc : r["zeta_checks"]) {
    CHECK(zc["log_diff"].get<double>() <=
          zc["log_tail_bound"].get<double>() + 1e-8);
  }

  REQUIRE(r["mertens"].size() == 5);  // law 1, law 2 k=0..2, law 3
  CHECK(r["mertens"][0]["theorem"] == 1);
  CHECK(r["mertens"][1]["k"] == 0);
  CHECK(r["mertens"][3]["k"] == 2);
  CHECK(r["mertens"][4]["theorem"] == 3);
  CHECK(r["mertens"][0]["envelope_onset"] == 1);
  for (const auto& law : r["mertens"])
    CHECK(law["points"].size() == 60);
}

TEST_CASE("reports are byte-identical across runs") {
  const auto text = fixtures::load("petersen");
  const auto opt = quick_options(40);
  const auto a = analyze(text, opt);
  const auto b = analyze(text, opt);
  CHECK(render_report(a, "json") == render_report(b, "json"));
  CHECK(render_report(a, "csv") == render_report(b, "csv"));
  CHECK(a.report.dump() == b.report.dump());
}

TEST_CASE("csv rendering carries every section") {
  const auto a = analyze(fixtures::load("k4"), quick_options(30));
  const auto csv = render_report(a, "csv");
  CHECK(csv.rfind("# izeta report", 0) == 0);
  for (const char* section :
       {"# section graph", "# section census", "# section spectrum",
        "# section theorem1", "# section theorem2_k0", "# section theorem2_k2",
        "# section theorem3"}) {
    CHECK_MESSAGE(csv.find(section) != std::string::npos, section);
  }
  // one line per census row inside the census section
  std::istringstream in(csv);
  std::string line;
  int census_rows = 0;
  bool in_census = false;
  while (std::getline(in, line)) {
    if (line.rfind("# section", 0) == 0) in_census = line == "# section census";
    else if (in_census && !line.empty() && line[0] != 'n') ++census_rows;
  }
  CHECK(census_rows == 30);
}

TEST_CASE("oracle disagreement cannot happen on honest input") {
  // (sanity of the wiring: oracle_checked_max reflects the option)
  auto opt = quick_options(20);
  opt.oracle_max = 0;
  const auto a = analyze(fixtures::load("theta"), opt);
  CHECK(a.oracle_checked_max == 0);
  CHECK(a.oracle_classes.empty());

  opt.oracle_max = 8;
  const auto b = analyze(fixtures::load("theta"), opt);
  CHECK(b.oracle_checked_max == 8);
  CHECK(!b.oracle_classes.empty());
}

TEST_CASE("option validation") {
  const auto text = fixtures::load("k4");
  auto bad = quick_options();
  bad.k = 13;
  CHECK_THROWS_WITH_AS(analyze(text, bad), doctest::Contains("DomainError"), Error);
  bad = quick_options();
  bad.alpha = 0.75;
  CHECK_THROWS_WITH_AS(analyze(text, bad), doctest::Contains("DomainError"), Error);
  bad = quick_options();
  bad.format = "xml";
  CHECK_THROWS_WITH_AS(analyze(text, bad), doctest::Contains("DomainError"), Error);
  bad = quick_options();
  bad.n_max = 0;
  CHECK_THROWS_WITH_AS(analyze(text, bad), doctest::Contains("DomainError"), Error);
}

TEST_CASE("auxiliary dumps land in the output directory") {
  TempDir tmp;
  auto opt = quick_options(30);
  opt.dump_w = true;
  opt.dump_classes = true;
  opt.plot_data = true;
  opt.out_dir = tmp.path.string();
  const auto a = analyze(fixtures::load("k4"), opt);
  const auto written = write_aux_files(a, opt);
  CHECK(written.size() == 7);  // W, classes, and one plot per law

  std::ifstream w(tmp.path / "w_matrix.txt");
  REQUIRE(bool(w));
  std::string line;
  int rows = 0;
  while (std::getline(w, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 12);

  std::ifstream plot(tmp.path / "plot_theorem1.csv");
  REQUIRE(bool(plot));
  std::getline(plot, line);
  CHECK(line == "N,residual,envelope");

  CHECK(std::filesystem::exists(tmp.path / "prime_classes.txt"));
  CHECK(std::filesystem::exists(tmp.path / "plot_theorem2_k2.csv"));
  CHECK(std::filesystem::exists(tmp.path / "plot_theorem3.csv"));
}

TEST_CASE("cli: happy path prints a json report") {
  std::string out;
  const int rc = run_cli({"analyze", fixture_path("k4"), "--n-max", "40"}, &out);
  CHECK(rc == 0);
  const auto r = nlohmann::json::parse(out);
  CHECK(r["tool"]["name"] == "izeta");
  CHECK(r["options"]["n_max"] == 40);
}

TEST_CASE("cli: csv format flag") {
  std::string out;
  const int rc = run_cli(
      {"analyze", fixture_path("k4"), "--n-max", "30", "--format", "csv"}, &out);
  CHECK(rc == 0);
  CHECK(out.rfind("# izeta report", 0) == 0);
}

TEST_CASE("cli: exit codes by failure kind") {
  TempDir tmp;

  // validation: a plain cycle has zeta with no interior structure
  const auto cycle = tmp.path / "cycle.edges";
  std::ofstream(cycle) << "a b\nb c\nc a\n";
  CHECK(run_cli({"analyze", cycle.string()}) == 2);

  // validation: pendant vertex
  const auto pendant = tmp.path / "pendant.edges";
  std::ofstream(pendant) << "a b\nb c\nc a\nc d\n";
  CHECK(run_cli({"analyze", pendant.string()}) == 2);

  // validation: file does not exist
  CHECK(run_cli({"analyze", (tmp.path / "missing.edges").string()}) == 2);

  // budget
  CHECK(run_cli({"analyze", fixture_path("petersen"), "--n-max", "200",
                 "--work-budget", "10"}) == 4);

  // usage
  CHECK(run_cli({"analyze"}) == 1);
  CHECK(run_cli({"frobnicate"}) == 1);
}

TEST_CASE("cli: census horizon below the girth") {
  CHECK(run_cli({"analyze", fixture_path("petersen"), "--n-max", "4"}) == 2);
}

TEST_CASE("cli: version and help") {
  std::string out;
  CHECK(run_cli({"--version"}, &out) == 0);
  CHECK(out.rfind("izeta", 0) == 0);
  out.clear();
  CHECK(run_cli({"--help"}, &out) == 0);
  CHECK(out.find("analyze") != std::string::npos);
}

TEST_CASE("cli: series target enforcement") {
  // dumbbell's slow interior spectrum cannot meet 1e-10 at n_max 60
  CHECK(run_cli({"analyze", fixture_path("dumbbell"), "--n-max", "60",
                 "--series-target", "1e-10"}) == 2);
  // but the report-only default succeeds
  CHECK(run_cli({"analyze", fixture_path("dumbbell"), "--n-max", "60"}) == 0);
}

}  // TEST_SUITE
