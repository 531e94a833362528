#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("geocrystal_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + GEOCRYSTAL_CLI + "\" " + args + " >\"" +
                          out.string() + "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string data(const std::string& name) { return std::string("\"") + GEOCRYSTAL_DATA + "/" + name + "\""; }

nlohmann::json fact(const nlohmann::json& report, const std::string& name) {
  for (const auto& f : report["facts"])
    if (f["name"] == name) return f;
  return nullptr;
}

}  // namespace

TEST_CASE("theta on the worked point") {
  const Run r = run("theta --input " + data("p0.json"));
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["passed"] == true);
  CHECK(j["flag"]["composition"].dump() == "[1,1,1]");
  CHECK(j["flag"]["spaces"][1].dump() == R"([["1/1","-1/1","0/1"]])");
  CHECK(j["flag"]["spaces"][2].dump() == R"([["1/1","0/1","0/1"],["0/1","1/1","0/1"]])");
  CHECK(j["checks"].size() == 7);
  for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
}

TEST_CASE("theta exit codes") {
  const Run framed = run("theta --input " + data("j_nonzero.json"));
  CHECK(framed.code == 1);
  CHECK(framed.err.find("in_Lambda: j nonzero") != std::string::npos);
  CHECK(framed.out.empty());

  const Run unstable = run("theta --input " + data("unstable.json"));
  CHECK(unstable.code == 1);
  CHECK(unstable.err.find("is_stable") != std::string::npos);

  CHECK(run("theta --input " + data("malformed.json")).code == 2);
  CHECK(run("theta --input " + data("does_not_exist.json")).code == 2);
  CHECK(run("theta").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("verify --suite bogus").code == 2);
  CHECK(run("verify --suite maffei --samples 3").code == 2);
  CHECK(run("verify --suite maffei --seed 1 --w 1,1").code == 2);
  CHECK(run("verify --suite quotients --n 3").code == 2);
  CHECK(run("verify --suite quotients --n 3 --d 3 --budget 0").code == 2);
  CHECK(run("crystal --n 3 --w 1,x").code == 2);
  CHECK(run("crystal --n 3 --w 1").code == 2);
  CHECK(run("crystal --n 3 --w 1,1 --format svg").code == 2);
  CHECK(run("verify --suite quotients --n 3 --d 3", "GEOCRYSTAL_BUDGET=lots").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("crystal output") {
  const Run dot = run("crystal --n 3 --w 1,1 --format dot");
  REQUIRE(dot.code == 0);
  std::size_t nodes = 0;
  std::istringstream lines(dot.out);
  for (std::string line; std::getline(lines, line);)
    if (line.find("label=\"(") != std::string::npos && line.find("->") == std::string::npos) ++nodes;
  CHECK(nodes == 8);
  CHECK(dot.out.rfind("digraph", 0) != std::string::npos);

  const Run json = run("crystal --n 2 --w 2 --format json");
  REQUIRE(json.code == 0);
  CHECK(nlohmann::json::parse(json.out)["size"] == 3);

  const Run trivial = run("crystal --n 3 --w 0,0 --format json");
  REQUIRE(trivial.code == 0);
  CHECK(nlohmann::json::parse(trivial.out)["size"] == 1);

  const Run text = run("crystal --n 2 --w 1");
  REQUIRE(text.code == 0);
  CHECK(text.out.find("size=2") != std::string::npos);
}

TEST_CASE("verify suites") {
  const Run q = run("verify --suite quotients --n 3 --d 3");
  REQUIRE(q.code == 0);
  const auto report = nlohmann::json::parse(q.out);
  CHECK(report["passed"] == true);
  CHECK(fact(report, "dim_Id")["values"]["tensor"] == 165);
  CHECK(fact(report, "sl3_dim_Jw")["values"]["crystal"] == 65);

  const Run alias = run("quotients --n 3 --d 3");
  CHECK(alias.code == 0);
  CHECK(alias.out == q.out);

  CHECK(run("verify --suite quotients --n 3 --d 3", "GEOCRYSTAL_BUDGET=10").code == 1);
  CHECK(run("verify --suite quotients --n 3 --d 3 --budget 100", "GEOCRYSTAL_BUDGET=10").code == 0);

  const Run m = run("verify --suite maffei --n 3 --w 1,1 --samples 100 --seed 7");
  REQUIRE(m.code == 0);
  const auto mj = nlohmann::json::parse(m.out);
  CHECK(mj["points"] == 100);
  CHECK(mj["failures"].empty());

  const Run s = run("verify --suite signs --n-max 4");
  CHECK(s.code == 0);
  const Run c = run("verify --suite crystal --n-max 3 --degree-max 4");
  CHECK(c.code == 0);
}

TEST_CASE("output file and determinism") {
  const fs::path a = scratch_dir() / "a.json";
  const fs::path b = scratch_dir() / "b.json";
  const std::string cmd = "verify --suite maffei --samples 40 --seed 3 --output ";
  REQUIRE(run(cmd + "\"" + a.string() + "\"").code == 0);
  REQUIRE(run(cmd + "\"" + b.string() + "\"").code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());

  const Run other = run("verify --suite maffei --samples 40 --seed 4");
  CHECK(other.out != slurp(a));

  CHECK(run("crystal --n 4 --w 1,0,1 --format dot").out == run("crystal --n 4 --w 1,0,1 --format dot").out);
  CHECK(run("theta --input " + data("p0.json")).out == run("theta --input " + data("p0.json")).out);
}
