#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamw/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hamw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents = {}) {
  const auto path = std::filesystem::temp_directory_path() / ("hamw_cli_" + name);
  if (!contents.empty()) std::ofstream(path) << contents;
  return path;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--n", "6", "--fuzz", "3"}).code == 2);
  CHECK(run({"verify", "--n", "5"}).code == 2);
  CHECK(run({"sequence", "--mode", "float"}).code == 2);
  CHECK(run({"iterate", "--steps", "0"}).code == 2);
  CHECK(run({"iterate", "--cycle", "0,1,1,2,3"}).code == 2);
  CHECK(run({"verify", "--in", "/nonexistent/hamw.txt"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("sequence prints exact terms") {
  const auto r = run({"sequence", "--terms", "5"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "n,a_n,a_ratio,B_exact,B_decimal");
  CHECK(rows[1].rfind("0,0,", 0) == 0);
  CHECK(rows[3].rfind("2,3/4,", 0) == 0);
  CHECK(rows[3].find("8/3") != std::string::npos);
  CHECK(rows[4].find("21/8") != std::string::npos);

  const auto check = run({"sequence", "--terms", "50", "--check"});
  CHECK(check.code == 0);
  const auto json = run({"sequence", "--terms", "4", "--json"});
  CHECK(json.code == 0);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--n", "5", "--fuzz", "10000", "--seed", "42"}).code == 0);
  CHECK(run({"verify", "--n", "4", "--dim", "3", "--fuzz", "500", "--seed", "7", "--mode", "rational"}).code == 0);

  const auto square = temp_file("square.txt", "points 4 dim 2 mode float\n0 0\n1 0\n1 1\n0 1\n");
  const auto sq = run({"verify", "--in", square.string()});
  CHECK(sq.code == 0);
  CHECK(sq.out.find("holds-with-equality") != std::string::npos);

  const auto same = temp_file("same.txt", "points 5 dim 2 mode rational\n1/2 1\n1/2 1\n1/2 1\n1/2 1\n1/2 1\n");
  CHECK(run({"verify", "--in", same.string()}).code == 3);
  CHECK(run({"identity", "--in", temp_file("same4.txt", "points 4 dim 2 mode float\n1 1\n1 1\n1 1\n1 1\n").string()}).code == 0);
  CHECK(run({"iterate", "--in", same.string()}).code == 3);

  const auto bowtie = temp_file("bowtie.txt", "points 4 dim 2 mode rational\n0 0\n3 1\n0 0\n3 1\n");
  CHECK(run({"verify", "--in", bowtie.string()}).code == 3);

  const auto bad = temp_file("bad.txt", "points 3 dim 2 mode float\n0 0\n1 x\n2 2\n");
  CHECK(run({"verify", "--in", bad.string()}).code == 2);
}

TEST_CASE("verify json lines") {
  const auto square = temp_file("square_json.txt", "points 4 dim 2 mode rational\n0 0\n1 0\n1 1\n0 1\n");
  const auto r = run({"verify", "--in", square.string(), "--json"});
  REQUIRE(r.code == 0);
  std::size_t rows = 0;
  for (const auto& line : lines(r.out)) {
    const auto j = nlohmann::json::parse(line);
    if (j.contains("cycle")) {
      ++rows;
      CHECK(j.contains("wE"));
      CHECK(j.contains("wD"));
      CHECK(j.contains("wK"));
      CHECK(j.contains("ratio"));
      CHECK(j.contains("verdict"));
    }
  }
  CHECK(rows == 3);
}

TEST_CASE("pentagon witnesses") {
  const auto r = run({"pentagon", "--n", "5", "--check"});
  CHECK(r.code == 0);
  CHECK(run({"pentagon", "--n", "4", "--check"}).code == 0);
}

TEST_CASE("identity and iterate") {
  CHECK(run({"identity", "--fuzz", "200", "--seed", "3"}).code == 0);
  CHECK(run({"identity", "--fuzz", "200", "--seed", "3", "--mode", "rational", "--dim", "3"}).code == 0);
  const auto it = run({"iterate", "--seed", "2", "--steps", "5"});
  REQUIRE(it.code == 0);
  CHECK(lines(it.out)[0] == "level,d,e,resA,resB,resC");
  CHECK(run({"iterate", "--seed", "2", "--steps", "5", "--mode", "rational", "--decompose"}).code == 0);
}

TEST_CASE("optimize") {
  const auto r = run({"optimize", "--n", "5", "--seed", "1", "--restarts", "3", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(lines(r.out).at(0));
  CHECK(j["value"].get<double>() >= 0.723606);
  CHECK(j["witness_points"].size() == 5);
  CHECK(run({"optimize", "--table", "--n-min", "4", "--n-max", "6", "--restarts", "2"}).code == 0);
  CHECK(run({"optimize", "--objective", "sideways"}).code == 2);
}

TEST_CASE("output is independent of thread count and --out matches stdout") {
  const std::vector<std::string> base{"verify", "--n", "5", "--fuzz", "400", "--seed", "11", "--json", "--all-rows"};
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "4"});
  const auto a = run(base);
  const auto b = run(threaded);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const auto path = temp_file("report.txt");
  auto to_file = base;
  to_file.insert(to_file.end(), {"--out", path.string()});
  const auto c = run(to_file);
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  CHECK(slurp(path) == a.out);

  const std::vector<std::string> opt{"optimize", "--n", "6", "--seed", "4", "--restarts", "4", "--json"};
  auto opt_threaded = opt;
  opt_threaded.insert(opt_threaded.end(), {"--threads", "3"});
  CHECK(run(opt).out == run(opt_threaded).out);
}

TEST_CASE("gen round-trips bit-exactly") {
  const auto first = run({"gen", "--n", "5", "--dim", "3", "--seed", "99"});
  REQUIRE(first.code == 0);
  CHECK(first.out == run({"gen", "--n", "5", "--dim", "3", "--seed", "99"}).out);
  const auto path = temp_file("gen.txt", first.out);
  const auto verified = run({"verify", "--in", path.string(), "--json", "--all-rows"});
  CHECK(verified.code == 0);
  const auto path2 = temp_file("gen2.txt");
  CHECK(run({"gen", "--n", "5", "--dim", "3", "--seed", "99", "--out", path2.string()}).code == 0);
  CHECK(slurp(path2) == first.out);
  const auto rational = run({"gen", "--n", "4", "--seed", "5", "--mode", "rational"});
  CHECK(rational.code == 0);
  CHECK(rational.out.find("mode rational") != std::string::npos);
}
