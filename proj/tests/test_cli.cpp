#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NOMCODE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) {
    out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) {
  return std::string(NOMCODE_DATA_DIR) + "/" + name;
}

std::string write_file(const std::string& name, const std::string& text) {
  std::ofstream(name, std::ios::binary) << text;
  return name;
}

std::string read_file(const std::string& name) {
  std::ifstream in(name, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kCars = "--input " + data("cars.csv") + " --schema " +
                          data("cars.schema.json");

}  // namespace

TEST_CASE("rank prints tied ranks") {
  const auto csv = write_file("tied.csv",
                              "v\n21\n28\n44\n44\n44\n54\n55\n55\n55\n55\n");
  const auto r = run("rank --input " + csv + " --column v --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  std::vector<double> ranks;
  for (const auto& e : j) ranks.push_back(e["rank"].get<double>());
  CHECK(ranks == std::vector<double>{1, 2, 4, 4, 4, 6, 8.5, 8.5, 8.5, 8.5});

  const auto text = run("rank --input " + csv + " --column v");
  CHECK(text.out.find("55\t8.5") != std::string::npos);

  const auto single = write_file("single.csv", "v\n3.25\n");
  CHECK(run("rank --input " + single + " --column v").out == "3.25\t1\n");
}

TEST_CASE("rank rejects nominal and unknown columns") {
  CHECK(run("rank " + kCars + " --column Color").code == 2);
  CHECK(run("rank --input " + data("cars.csv") + " --column Color").code == 2);
  CHECK(run("rank " + kCars + " --column Price").code == 2);
  CHECK(run("rank " + kCars + " --column Power").code == 0);
}

TEST_CASE("encode emits the coded table and codebooks") {
  const auto r = run("encode " + kCars + " --mode combined");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& data = j["matrix"]["data"];
  REQUIRE(data.size() == 10);
  const std::vector<double> color{2, -2, -2, 2.5, 2.5, 2.5, 2.5, -2, 2, 2};
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(data[i][2]["re"].get<double>() == color[i]);
    CHECK(data[i][2]["im"].get<double>() == 0.0);
  }
  CHECK(j["codebooks"].size() == 4);
  CHECK(j["codebooks"][0]["entries"]["Black"]["k"] == 2);

  const auto table = run("encode " + kCars + " --mode combined --table");
  CHECK(table.code == 0);
  CHECK(table.out.find("-2") != std::string::npos);

  CHECK(run("encode " + kCars + " --mode combined").out == r.out);
}

TEST_CASE("encode: numeric pass-through and mode errors") {
  const auto csv = write_file("nums.csv", "x\n1\n2\n3\n");
  const auto schema = write_file("nums.schema.json",
                                 R"({"columns":[{"name":"x","role":"numeric"}]})");
  const auto r = run("encode --input " + csv + " --schema " + schema + " --mode numeric");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["matrix"]["data"][2][0]["re"] == 3.0);
  // Schema found next to the input when --schema is omitted.
  CHECK(run("encode --input " + csv + " --mode numeric").out == r.out);

  CHECK(run("encode --input " + csv + " --schema " + schema + " --mode nominal").code == 2);
  CHECK(run("encode --input " + csv + " --schema " + schema + " --mode bogus").code == 1);
}

TEST_CASE("ingestion errors exit with 2") {
  const auto csv = write_file("broken.csv", "x\n1\nabc\n");
  const auto schema = write_file("broken.schema.json",
                                 R"({"columns":[{"name":"x","role":"numeric"}]})");
  CHECK(run("encode --input " + csv + " --schema " + schema + " --mode numeric").code == 2);
  CHECK(run("encode --input missing.csv --schema " + schema).code == 2);
}

TEST_CASE("cluster runs and validates k") {
  const auto r = run("cluster " + kCars + " --mode combined --k 3 --seed 7 --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["assignments"].size() == 10);
  CHECK(j.contains("accuracy"));
  CHECK(run("cluster " + kCars + " --mode combined --k 3 --seed 7 --json").out == r.out);

  const auto all = nlohmann::json::parse(run("cluster " + kCars + " --k 10 --json").out);
  CHECK(all["inertia"] == 0.0);

  CHECK(run("cluster " + kCars + " --k 0").code == 1);
  CHECK(run("cluster " + kCars + " --k 11").code == 2);
  const auto text = run("cluster " + kCars + " --k 3 --seed 1");
  CHECK(text.out.find("accuracy:") != std::string::npos);
}

TEST_CASE("experiment writes reproducible reports") {
  const auto a = run("experiment " + kCars + " --seed 9 --output a.json");
  const auto b = run("experiment " + kCars + " --seed 9 --output b.json");
  REQUIRE(a.code == 0);
  CHECK(a.out.find("Only Coded Symbolic Data") != std::string::npos);
  CHECK(read_file("a.json") == read_file("b.json"));
  const auto j = nlohmann::json::parse(read_file("a.json"));
  CHECK(j["conditions"].size() == 4);
  CHECK(j["conditions"][0]["runs"].size() == 20);
  CHECK(j["conditions"][0]["buckets"].contains("below"));

  const auto one = run("experiment " + kCars + " --repeats 1 --conditions combined --json");
  REQUIRE(one.code == 0);
  const auto single = nlohmann::json::parse(one.out);
  CHECK(single["conditions"].size() == 1);
  CHECK(single["conditions"][0]["runs"].size() == 1);

  // Bundled data is the default input.
  CHECK(run("experiment --repeats 2 --json").code == 0);

  CHECK(run("experiment " + kCars + " --repeats 0").code == 1);
  const auto nodecision = write_file("nodec.schema.json", R"({"columns":[
    {"name":"Door","role":"numeric"},{"name":"Power","role":"numeric"},
    {"name":"Color","role":"nominal"},{"name":"Fuel","role":"nominal"},
    {"name":"Interior","role":"nominal"},{"name":"Wheel","role":"nominal"},
    {"name":"Brand","role":"nominal"}]})");
  CHECK(run("experiment --input " + data("cars.csv") + " --schema " + nodecision).code == 2);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("rank").code == 1);
  CHECK(run("--help").code == 0);
}
