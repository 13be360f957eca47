#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "rrk/cli/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  json summary;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rrk");
  std::ostringstream out, err;
  const int code = rrk::cli::run(args, out, err);
  json j;
  const std::string text = out.str();
  if (!text.empty() && text.front() == '{') j = json::parse(text);
  return {code, j, err.str()};
}

std::string data(const std::string& name) { return std::string(RRK_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("rrk_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("bounds") {
  auto r = invoke({"bounds", "--channel", "a=0.1,b=4,P1=1,P2=1", "--region", "OUT_BASIC", "--alpha", "0"});
  REQUIRE(r.code == 0);
  CHECK(r.summary["status"] == "ok");
  CHECK(r.summary["command"] == "bounds");
  const auto& e = r.summary["result"]["regions"][0]["entries"];
  REQUIRE(e.size() == 2);
  CHECK(e[1]["value"].get<double>() == doctest::Approx(4.700439718));
}

TEST_CASE("validation errors exit with 2") {
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({"bounds"}).code == 2);
  CHECK(invoke({"bounds", "--channel", "a=1,b=-1,P1=1,P2=1"}).code == 2);
  CHECK(invoke({"bounds", "--channel", "a=1+,b=1,P1=1,P2=1"}).code == 2);
  CHECK(invoke({"bounds", "--channel", "a=1,b=1,P1=1,P2=1", "--region", "NOPE"}).code == 2);
  CHECK(invoke({"bounds", "--channel", "a=1,b=1,P1=1,P2=1", "--alpha", "2"}).code == 2);
  CHECK(invoke({"frontier", "--channel", "a=1,b=1,P1=1,P2=1", "--r1-samples", "1"}).code == 2);
  CHECK(invoke({"regimes", "--res", "0"}).code == 2);
  CHECK(invoke({"fme", "--input", data("missing.ineq")}).code == 2);
  auto r = invoke({"bounds", "--channel", "a=1,b=1,P1=0,P2=1"});
  CHECK(r.code == 2);
  CHECK(r.summary["status"] == "error");
  CHECK(r.summary["error"].get<std::string>().size() > 0);
}

TEST_CASE("help exits with 0") {
  std::ostringstream out, err;
  CHECK(rrk::cli::run({"rrk", "--help"}, out, err) == 0);
  CHECK(out.str().find("frontier") != std::string::npos);
}

TEST_CASE("frontier files are written and reproducible") {
  TempDir tmp;
  const auto a = (tmp.path / "a.csv").string(), b = (tmp.path / "b.csv").string();
  const auto svg = (tmp.path / "a.svg").string();
  std::vector<std::string> base = {"frontier", "--channel", "a=0.1,b=4,P1=1,P2=1", "--region",
                                   "OUT_BASIC,IN_SUPERPOS,IN_BINNING", "--alpha-points", "101"};
  auto args = base;
  args.insert(args.end(), {"--out", a, "--svg", svg});
  auto r = invoke(args);
  REQUIRE(r.code == 0);
  CHECK(r.summary["outputs"].size() == 2);
  args = base;
  args.insert(args.end(), {"--out", b});
  REQUIRE(invoke(args).code == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.find("# region=OUT_BASIC\nR1_bits,R2_bits\n") == 0);
  CHECK(text.find("# region=IN_SUPERPOS") != std::string::npos);
  CHECK(text.find("# region=IN_BINNING") != std::string::npos);
  CHECK(slurp(svg).find("<svg") != std::string::npos);
  // No temporary files are left behind.
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(tmp.path)) ++files;
  CHECK(files == 3);
}

TEST_CASE("unwritable output path") {
  auto r = invoke({"regimes", "--res", "3", "--out", "/nonexistent-dir/x/map.csv"});
  CHECK(r.code == 2);
}

TEST_CASE("regime map") {
  TempDir tmp;
  const auto out = (tmp.path / "map.csv").string();
  auto r = invoke({"regimes", "--P1", "10", "--P2", "10", "--res", "11", "--out", out});
  REQUIRE(r.code == 0);
  std::istringstream is(slurp(out));
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 12);
  CHECK(r.summary["result"]["counts"].is_object());
}

TEST_CASE("gap") {
  auto r = invoke({"gap", "--channel", "a=2,b=4,P1=100,P2=100", "--alpha-points", "201"});
  REQUIRE(r.code == 0);
  const double add = r.summary["result"]["additive"].get<double>();
  CHECK(add >= 0);
  CHECK(add <= 1.0 + 1e-6);
}

TEST_CASE("fme") {
  auto ok = invoke({"fme", "--input", data("binning_scheme.ineq"), "--eliminate", "Rp1c", "--subst", "R2=R2c+R2p+R2pb",
                 "--relations", data("chain.rel"), "--expect", data("innerbound.ineq")});
  REQUIRE(ok.code == 0);
  CHECK(ok.summary["result"]["match"] == true);

  auto bad = invoke({"fme", "--input", data("binning_scheme.ineq"), "--eliminate", "Rp1c", "--subst", "R2=R2c+R2p+R2pb",
                  "--relations", data("chain.rel"), "--expect", data("ratesharing_step4.ineq")});
  CHECK(bad.code == 2);
  CHECK(bad.summary["status"] == "mismatch");
  CHECK(bad.summary["result"]["match"] == false);

  auto orc = invoke({"fme", "--input", data("binning_scheme.ineq"), "--eliminate", "Rp1c", "--subst", "R2=R2c+R2p+R2pb",
                  "--relations", data("chain.rel"), "--oracle", "200", "--seed", "3"});
  REQUIRE(orc.code == 0);
  CHECK(orc.summary["result"]["oracle"]["disagreements"] == 0);
}

TEST_CASE("dm-eval") {
  auto r = invoke({"dm-eval", "--channel", data("xor_channel.json"), "--dist", data("uniform_x1x2.json"), "--region",
                "OUTER_THM1,SEMIDET_CAP", "--condition", "SEMIDET"});
  REQUIRE(r.code == 0);
  const auto& b = r.summary["result"]["bounds"];
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(b[0]["entries"][i]["value"].get<double>() ==
          doctest::Approx(b[1]["entries"][i]["value"].get<double>()).epsilon(1e-12));
  CHECK(r.summary["result"]["conditions"][0]["holds"] == true);

  auto missing = invoke({"dm-eval", "--channel", data("xor_channel.json"), "--dist", data("uniform_x1x2.json"),
                      "--region", "OUTER_1RV"});
  CHECK(missing.code == 2);
  auto budget = invoke({"dm-eval", "--channel", data("xor_channel.json"), "--region", "OUTER_3RV", "--frontier",
                     "--step", "0.1", "--budget", "10"});
  CHECK(budget.code == 2);
}
