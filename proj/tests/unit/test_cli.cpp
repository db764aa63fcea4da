#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "sumfree/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sumfree::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("sumfree-test-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("enumerate json") {
    const auto r = call({"--no-cache", "enumerate", "--n", "12"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["f"] == 369);
    CHECK(j["f_max"] == 37);
    CHECK(j["ratio_fmax_over_2_pow_n_quarter"] == "37/8");
    CHECK(j["residue_mod_4"] == 0);
  }

  TEST_CASE("oracle and branch agree") {
    const auto a = call({"--no-cache", "--output", "csv", "enumerate", "--n", "1", "--to", "16"});
    const auto b = call({"--no-cache", "--output", "csv", "enumerate", "--n", "1", "--to", "16", "--oracle"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    std::istringstream sa(a.out), sb(b.out);
    std::string la, lb;
    std::getline(sa, la);
    std::getline(sb, lb);
    CHECK(la == lb);
    int rows = 0;
    while (std::getline(sa, la) && std::getline(sb, lb)) {
      CHECK(la.substr(0, la.rfind(',', la.rfind(',') - 1)) == lb.substr(0, lb.rfind(',', lb.rfind(',') - 1)));
      ++rows;
    }
    CHECK(rows == 16);
  }

  TEST_CASE("output independent of worker count") {
    for (const std::vector<std::string> tail :
         {std::vector<std::string>{"enumerate", "--n", "20", "--to", "22"},
          std::vector<std::string>{"verify", "--check", "nondec", "--check", "furedi"},
          std::vector<std::string>{"constants", "--sandwich", "--n-max", "16"}}) {
      std::vector<std::string> one{"--no-cache", "--workers", "1"}, four{"--no-cache", "--workers", "4"};
      one.insert(one.end(), tail.begin(), tail.end());
      four.insert(four.end(), tail.begin(), tail.end());
      const auto a = call(one);
      const auto b = call(four);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("usage and precondition errors exit 2") {
    CHECK(call({"enumerate"}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({"--output", "xml", "enumerate", "--n", "3"}).code == 2);
    CHECK(call({"--no-cache", "link", "--n", "16", "--m", "9"}).code == 2);
    CHECK(call({"--no-cache", "construct", "--family", "interval", "--n", "10"}).code == 2);
    CHECK(call({"--no-cache", "--max-n", "20", "enumerate", "--n", "24"}).code == 2);
    const auto r = call({"--no-cache", "verify", "--check", "nope"});
    CHECK(r.code == 2);
    CHECK(r.err.find("nope") != std::string::npos);
  }

  TEST_CASE("verify output") {
    const auto r = call({"--no-cache", "verify", "--check", "furedi"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["name"] == "furedi");
    CHECK(j["passed"] == true);
    const auto list = call({"verify", "--list"});
    CHECK(list.code == 0);
    CHECK(list.out.find("lem_iso") != std::string::npos);
  }

  TEST_CASE("dprime constants csv") {
    const auto r = call({"--no-cache", "constants", "--dprime", "--n-max", "28"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("n,residue_mod_4,full,restricted", 0) == 0);
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 21);
    CHECK(r.out.find("\n8,0,11,6,6,9,") != std::string::npos);
  }

  TEST_CASE("mis and link subcommands") {
    auto r = call({"--no-cache", "mis", "--family", "prism"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == 6);
    r = call({"--no-cache", "mis", "--family", "cycle", "--size", "10", "--bounds"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == 17);
    r = call({"--no-cache", "construct", "--family", "exponent7", "--group", "Z7xZ7", "--summary"});
    CHECK(r.code == 0);
    r = call({"--no-cache", "group", "--desc", "Z2xZ2xZ2", "--op", "mu"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("4") != std::string::npos);
  }

  TEST_CASE("cache round trip and corruption") {
    const fs::path dir = fresh_dir("cache");
    const std::vector<std::string> args{"--cache-dir", dir.string(), "enumerate", "--n", "14"};
    const auto first = call(args);
    REQUIRE(first.code == 0);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
    REQUIRE(files.size() == 1);
    const auto stored = nlohmann::json::parse(std::ifstream(files[0]));
    CHECK(stored.contains("key"));
    CHECK(stored.contains("version"));
    CHECK(stored["value"]["f_max"] == 66);

    const auto second = call(args);
    CHECK(second.out == first.out);

    std::ofstream(files[0], std::ios::trunc) << "{ not json";
    const auto third = call(args);
    CHECK(third.code == 0);
    CHECK(third.out == first.out);
    CHECK(third.err.find("warning") != std::string::npos);
    CHECK_NOTHROW(nlohmann::json::parse(std::ifstream(files[0])));
    fs::remove_all(dir);
  }
}
