#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "vortexlab/grid_io.hpp"

namespace fs = std::filesystem;
using vortexlab::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path workdir(const std::string& name) {
  const char* env = std::getenv("VORTEXLAB_TEST_TMP");
  const fs::path root = env ? fs::path(env) : fs::temp_directory_path() / "vortexlab_cli_test";
  const fs::path dir = root / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

nlohmann::json load(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("presets lists the six figure sets") {
  const Result r = call({"presets"});
  CHECK(r.code == 0);
  for (const char* name : {"fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  const Result unknown = call({"visibility", "--preset", "fig9"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("fig1a") != std::string::npos);
  CHECK(call({"visibility", "--preset", "fig1a", "--w0-um", "10"}).code == 2);
  CHECK(call({"visibility", "--species", "photon", "--l", "3"}).code == 2);
  CHECK(call({"validate", "--threshold", "nonsense=1"}).code == 2);
}

TEST_CASE("field writes CSV, PNG and report") {
  const fs::path dir = workdir("field");
  const Result r = call({"field", "--preset", "fig2b", "--resolution", "64", "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "fig2b.csv"));
  CHECK(fs::exists(dir / "fig2b.png"));
  const vortexlab::VisibilityReport rep = vortexlab::read_report(dir / "fig2b.json");
  CHECK(rep.vis == doctest::Approx(0.5).epsilon(0.06));
  const vortexlab::FieldGrid g = vortexlab::read_csv(dir / "fig2b.csv");
  CHECK(g.spec.first_count == 64);
}

TEST_CASE("single-l photon beam has a flat ring") {
  const fs::path dir = workdir("single");
  const Result r = call({"field", "--species", "photon", "--l", "1", "--w0-um", "100", "--lambda-nm", "800",
                         "--resolution", "32", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const vortexlab::VisibilityReport rep = vortexlab::read_report(dir / "custom.json");
  CHECK(rep.vis == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("visibility --all writes one report per preset") {
  const fs::path dir = workdir("all");
  const Result r = call({"visibility", "--all", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto index = load(dir / "index.json");
  REQUIRE(index.at("reports").size() == 6);
  for (const auto& e : index.at("reports")) {
    CHECK(fs::exists(dir / e.at("report").get<std::string>()));
    const double vis = e.at("vis").get<double>();
    const std::string name = e.at("preset").get<std::string>();
    CAPTURE(name);
    CHECK(vis == doctest::Approx(name.back() == 'a' ? 0.99 : 0.5).epsilon(0.06));
    CHECK(e.at("fringe_count").get<int>() == 30);
  }
}

TEST_CASE("electron b sweep") {
  const fs::path dir = workdir("sweep");
  const Result r = call({"sweep", "--preset", "fig2b", "--param", "b", "--values", "1500,142.1", "--out",
                         dir.string()});
  REQUIRE(r.code == 0);
  const auto rows = load(dir / "sweep_b.json").at("rows");
  REQUIRE(rows.size() == 2);
  // gamma stays at the fig2b value 1.9 along the sweep
  CHECK(rows[0].at("vis").get<double>() > 0.9);
  CHECK(rows[0].at("vis").get<double>() > rows[1].at("vis").get<double>());
  CHECK(rows[1].at("vis").get<double>() == doctest::Approx(0.5).epsilon(0.06));
  CHECK(fs::exists(dir / "sweep_b.csv"));
  CHECK(call({"sweep", "--preset", "fig2b", "--param", "b", "--values", "1500"}).code == 2);
}

TEST_CASE("scaling subcommand") {
  const Result r = call({"scaling"});
  CHECK(r.code == 0);
  CHECK(r.out.find("exponent") != std::string::npos);
}

TEST_CASE("config file and flag precedence") {
  const fs::path dir = workdir("config");
  {
    std::ofstream cfg(dir / "run.json");
    cfg << R"({"preset": "fig1a", "out": ")" << (dir / "from_config").string() << R"("})";
  }
  const Result a = call({"visibility", "--config", (dir / "run.json").string()});
  REQUIRE(a.code == 0);
  CHECK(fs::exists(dir / "from_config" / "fig1a.json"));

  const Result b = call({"visibility", "--config", (dir / "run.json").string(), "--preset", "fig2a"});
  REQUIRE(b.code == 0);
  CHECK(fs::exists(dir / "from_config" / "fig2a.json"));

  {
    std::ofstream cfg(dir / "bad.json");
    cfg << R"({"preset": "fig1a", "colour": "red"})";
  }
  CHECK(call({"visibility", "--config", (dir / "bad.json").string()}).code == 2);
}

TEST_CASE("validate exit codes") {
  const fs::path dir = workdir("validate");
  const Result ok = call({"validate", "--negative-controls", "--json", (dir / "v.json").string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("expected") != std::string::npos);
  CHECK(fs::exists(dir / "v.json"));
  const Result strict = call({"validate", "--threshold", "dalembert=1e-20"});
  CHECK(strict.code == 1);
}
