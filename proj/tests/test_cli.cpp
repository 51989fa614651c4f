#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ccm/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ccm::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "ccm_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    std::ofstream(d / "k3.edges") << "p 3 3\n0 1\n0 2\n1 2\n";
    std::ofstream(d / "p4.edges") << "0 1\n1 2\n2 3\n";
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

}  // namespace

TEST_CASE("gen-reduction then solve") {
  const Run gen = run({"gen-reduction", "--rule", "cc", "--graph",
                       path("k3.edges"), "--h", "3", "--out", path("p.prof"),
                       "--meta", path("m.json")});
  CHECK(gen.code == 0);
  CHECK(gen.out == "m=141 n=21 k=3 beta=21\n");
  CHECK(fs::exists(path("p.prof")));
  const auto meta = ccm::Json::parse(slurp(path("m.json")));
  CHECK(meta["k"] == 3);

  const Run solve = run({"solve", "--rule", "cc", "--profile", path("p.prof"),
                         "--k", "3", "--budget", "21"});
  CHECK(solve.code == 0);
  const auto j = ccm::Json::parse(solve.out);
  CHECK(j["status"] == "feasible");
  CHECK(j["cost"] == 21);

  const Run tight = run({"solve", "--rule", "cc", "--profile", path("p.prof"),
                         "--k", "3", "--budget", "20"});
  CHECK(ccm::Json::parse(tight.out)["status"] == "infeasible");
}

TEST_CASE("witness then eval") {
  const Run w = run({"witness", "--rule", "monroe", "--graph",
                     path("k3.edges"), "--h", "3", "--out", path("w.json")});
  CHECK(w.code == 0);
  CHECK(w.out.find("cost=42 beta=42") != std::string::npos);
  run({"gen-reduction", "--rule", "monroe", "--graph", path("k3.edges"),
       "--h", "3", "--out", path("mon.prof")});
  const Run e = run({"eval", "--rule", "monroe", "--profile", path("mon.prof"),
                     "--assignment", path("w.json")});
  CHECK(e.code == 0);
  const auto j = ccm::Json::parse(e.out);
  CHECK(j["cost"] == 42);
  CHECK(j["valid"] == true);

  const Run bad = run({"witness", "--rule", "cc", "--graph", path("k3.edges"),
                       "--h", "3", "--clique", "0,1"});
  CHECK(bad.code == ccm::cli::kExitData);
}

TEST_CASE("verify and clique") {
  const Run v = run({"verify", "--rule", "monroe", "--graph",
                     path("p4.edges"), "--h", "3"});
  CHECK(v.code == 0);
  const auto j = ccm::Json::parse(v.out);
  CHECK(j["agree"] == true);
  CHECK(j["clique_found"] == false);

  const Run c = run({"clique", "--graph", path("p4.edges"), "--h", "2"});
  CHECK(ccm::Json::parse(c.out)["clique"] == ccm::Json::array({0, 1}));
  const Run none = run({"clique", "--graph", path("p4.edges"), "--h", "3"});
  CHECK(ccm::Json::parse(none.out)["clique"].is_null());
}

TEST_CASE("batch-verify exit codes") {
  const Run b = run({"batch-verify", "--rule", "cc", "--graph",
                     "exhaustive:n=4,min-edges=3", "--h", "3", "--out",
                     path("batch.json")});
  CHECK(b.code == 0);
  CHECK(ccm::Json::parse(slurp(path("batch.json")))["summary"]["agree"] == 42);
  const Run capped = run({"batch-verify", "--rule", "monroe", "--graph",
                          "random:n=6,p=0.6,count=2", "--seed", "4", "--h",
                          "3", "--time-cap", "0.000001"});
  CHECK(capped.code == 3);
}

TEST_CASE("usage and I/O errors") {
  CHECK(run({}).code == ccm::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == ccm::cli::kExitUsage);
  CHECK(run({"solve", "--rule", "cc", "--profile", path("p.prof")}).code ==
        ccm::cli::kExitUsage);
  CHECK(run({"solve", "--profile", path("p.prof"), "-k", "3"}).code ==
        ccm::cli::kExitUsage);
  CHECK(run({"verify", "--graph", path("k3.edges")}).code ==
        ccm::cli::kExitUsage);
  CHECK(run({"verify", "--graph", path("k3.edges"), "--h", "3", "--bogus"})
            .code == ccm::cli::kExitUsage);
  CHECK(run({"verify", "--rule", "stv", "--graph", path("k3.edges"), "--h",
             "3"})
            .code == ccm::cli::kExitUsage);
  CHECK(run({"verify", "--graph", path("k3.edges"), "--h", "3",
             "--blocker-size", "big"})
            .code == ccm::cli::kExitUsage);
  CHECK(run({"solve", "--profile", path("missing.prof"), "--k", "1"}).code ==
        ccm::cli::kExitIo);
  CHECK(run({"gen-reduction", "--graph", path("k3.edges"), "--h", "3",
             "--out", path("no/such/dir/p.prof")})
            .code == ccm::cli::kExitIo);
  const Run help = run({"verify", "--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("--graph") != std::string::npos);
}

TEST_CASE("repeated runs are byte identical") {
  for (int t = 0; t < 2; ++t) {
    run({"gen-reduction", "--rule", "monroe", "--graph", path("k3.edges"),
         "--h", "3", "--out", path("r" + std::to_string(t) + ".prof"),
         "--meta", path("r" + std::to_string(t) + ".json")});
  }
  CHECK(slurp(path("r0.prof")) == slurp(path("r1.prof")));
  CHECK(slurp(path("r0.json")) == slurp(path("r1.json")));
  const auto a = run({"verify", "--rule", "cc", "--graph", path("k3.edges"),
                      "--h", "3"});
  const auto b = run({"verify", "--rule", "cc", "--graph", path("k3.edges"),
                      "--h", "3"});
  CHECK(a.out == b.out);
}
