#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "braidforge/cli.hpp"
#include "braidforge/serialize.hpp"

using namespace braidforge;
using io::Json;

namespace {

const std::string kData = BRAIDFORGE_TEST_DATA;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "braidforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "braidforge_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_json(const std::string& name, const Json& j) {
  auto p = scratch(name);
  std::ofstream(p) << j.dump();
  return p.string();
}

}  // namespace

TEST_CASE("Gauss sum of the A_i form") {
  Result r = run({"qform", "gauss", kData + "/a_i.json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["values"]["tau_plus"] == Json{{"conductor", 4}, {"coeffs", {"1/1", "1/1"}}});
}

TEST_CASE("schema and validation errors exit with 2") {
  Result r = run({"qform", "analyze", kData + "/not_even.json"});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["error"]["kind"] == "NotEven");
  CHECK(run({"qform", "analyze", kData + "/truncated.json"}).code == 2);
  CHECK(run({"qform", "analyze", kData + "/missing.json"}).code == 2);
  CHECK(run({"qform", "explode", kData + "/a_i.json"}).code == 2);
  CHECK(run({"--tolerance", "0.5", "qform", "gauss", kData + "/a_i.json"}).code == 2);
  CHECK(run({"--enum-guard", "0", "qform", "gauss", kData + "/a_i.json"}).code == 2);
  CHECK(run({"catalog", "ising", "--zeta", "1/8"}).code == 2);
  std::string bad = write_json("bad_ring.json", Json{{"labels", {"1"}}, {"unit", 0}, {"N", {{{1}}}}});
  CHECK(run({"fusion", "check", bad}).code == 2);
}

TEST_CASE("guards exit with 3, also when set from the environment") {
  CHECK(run({"qform", "analyze", kData + "/hyperbolic3.json"}).code == 0);
  CHECK(run({"--enum-guard", "4", "qform", "analyze", kData + "/hyperbolic3.json"}).code == 3);
  CHECK(run({"qform", "analyze", kData + "/hyperbolic3.json", "--enum-guard", "4"}).code == 3);
  setenv("BRAIDFORGE_ENUM_GUARD", "4", 1);
  CHECK(run({"qform", "analyze", kData + "/hyperbolic3.json"}).code == 3);
  unsetenv("BRAIDFORGE_ENUM_GUARD");
}

TEST_CASE("Ising catalog datum passes the full report") {
  const std::string path = scratch("ising.json").string();
  REQUIRE(run({"catalog", "ising", "--zeta", "1/16", "--eps", "+1", "--out", path}).code == 0);
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  Result r = run({"premodular", "report", path});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  // tau+ = 2 zeta^-1 = -2 zeta^7 in the power basis of conductor 16
  CHECK(j["values"]["tau_plus"] == io::cyclo_to_json(CycloNum(2) * CycloNum::root(RootExp(-1, 16))));
  CHECK(j["values"]["x_class"] == 2);
  for (const auto& c : j["checks"]) CHECK(c["status"] != "fail");

  Result c = run({"premodular", "centralizer", path, "--subring", "0,1"});
  REQUIRE(c.code == 0);
  CHECK(Json::parse(c.out)["values"]["centralizer"] == Json{"1", "delta"});
  CHECK(run({"premodular", "centralizer", path, "--subring", "2"}).code == 2);
  CHECK(run({"premodular", "gfp", path}).code == 0);
}

TEST_CASE("reports are deterministic") {
  const std::string path = scratch("ising_det.json").string();
  REQUIRE(run({"catalog", "ising", "--zeta", "5/16", "--eps", "-1", "--out", path}).code == 0);
  Result a = run({"premodular", "report", path}), b = run({"premodular", "report", path});
  CHECK(a.out == b.out);
  Result t = run({"--output", "text", "premodular", "report", path});
  CHECK(t.out.find("PASS") != std::string::npos);
}

TEST_CASE("catalog pointed and product") {
  const std::string form = kData + "/a_i.json";
  const std::string chi = write_json("chi.json", io::character_to_json({1, -1}));
  const std::string p1 = scratch("pointed.json").string(), p2 = scratch("pointed_chi.json").string();
  REQUIRE(run({"catalog", "pointed", "--form", form, "--out", p1}).code == 0);
  REQUIRE(run({"catalog", "pointed", "--form", form, "--chi", chi, "--out", p2}).code == 0);
  const std::string prod = scratch("product.json").string();
  REQUIRE(run({"catalog", "product", p1, p2, "--out", prod}).code == 0);
  PreModularDatum d = io::datum_from_json(io::parse_file(prod));
  CHECK(d.rank() == 4);
  CHECK(run({"premodular", "report", prod}).code == 0);
  const std::string bad_chi = write_json("bad_chi.json", io::character_to_json({1, 1, -1}));
  CHECK(run({"catalog", "pointed", "--form", kData + "/hyperbolic3.json", "--chi", bad_chi}).code == 2);
}

TEST_CASE("fusion and qform commands on sample files") {
  for (const char* sub : {"check", "dims", "grading", "subrings"})
    CHECK(run({"fusion", sub, kData + "/ising_ring.json"}).code == 0);
  for (const char* sub : {"analyze", "classify", "gauss", "witt", "core", "wap"}) {
    INFO(sub);
    CHECK(run({"qform", sub, kData + "/hyperbolic3.json"}).code == 0);
    CHECK(run({"qform", sub, kData + "/a_i.json"}).code == 0);
  }
  Json g = Json::parse(run({"fusion", "grading", kData + "/ising_ring.json"}).out);
  CHECK(g["values"]["group"] == Json{{"orders", {2}}});
}

TEST_CASE("serialization round trips") {
  std::mt19937_64 rng(41);
  for (int64_t n = 1; n <= 16; ++n)
    for (const auto& g : groups_of_order(n)) {
      PreMetricGroup m = random_form(g, rng);
      CHECK(io::qform_from_json(Json::parse(io::qform_to_json(m).dump())) == m);
    }
  for (int k : {1, 3, 5}) {
    PreModularDatum d = deligne_product(ising_datum(RootExp(k, 16), 1), ising_datum(RootExp(1, 16), -1));
    PreModularDatum back = io::datum_from_json(Json::parse(io::datum_to_json(d).dump()));
    CHECK(back.ring() == d.ring());
    CHECK(back.twists() == d.twists());
    CHECK(back.dims() == d.dims());
  }
  CycloNum c = CycloNum::root(RootExp(2, 9)) * CycloNum(mpq_class(3, 7)) + CycloNum(1);
  CHECK(io::cyclo_from_json(io::cyclo_to_json(c)) == c);
  CHECK(io::rootexp_from_json(Json("6/8")) == RootExp(3, 4));
  CHECK(io::character_from_json(io::character_to_json({1, -1, 1})) == std::vector<int>{1, -1, 1});
}
