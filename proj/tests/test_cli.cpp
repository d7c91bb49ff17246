#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "mobius/document.hpp"
#include "mobius/workbench.hpp"
#include "nlohmann/json.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "mobius");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = mobius::run_workbench(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("mobius_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const auto p = (path / name).string();
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }
};

const char* kLine3 =
    "name: line3\nkind: metric\npoints: a b c\nbasepoint: a\nmatrix:\n0 1 2\n1 0 1\n2 1 0\n";
const char* kLine4 =
    "name: line4\nkind: metric\npoints: a b c d\nbasepoint: a\nmatrix:\n0 1 2 3\n1 0 1 2\n2 1 0 1\n3 2 1 0\n";
const char* kBroken =
    "kind: metric\npoints: a b c\nmatrix:\n0 1 5\n1 0 1\n5 1 0\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate") {
  TempDir t;
  const auto ok = run({"validate", "--input", t.file("a.txt", kLine3)});
  CHECK(ok.code == 0);
  CHECK(ok.report()["command"] == "validate");
  CHECK(ok.report()["results"]["ok"] == true);
  CHECK(ok.report().contains("digest"));
  const auto bad = run({"validate", "--input", t.file("b.txt", kBroken)});
  CHECK(bad.code == 1);
  CHECK(bad.report()["results"]["violation_count"].get<int>() > 0);
  CHECK(run({"validate", "--input", t.file("c.txt", "kind: metric\n")}).code == 2);
  CHECK(run({"validate", "--input", (t.path / "missing.txt").string()}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"doubling", "--input", "x", "--mode", "fast"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("invert") {
  TempDir t;
  const auto in = t.file("a.txt", kLine4);
  const auto r = run({"invert", "--input", in, "--point", "a"});
  REQUIRE(r.code == 0);
  const auto j = r.report()["results"];
  CHECK(j["transform"] == "inversion");
  CHECK(j["points"] == json{"b", "c", "d"});
  CHECK(j["kernel"][0][1].get<double>() == doctest::Approx(0.5));
  CHECK(j["sandwich"]["lower_holds"] == true);

  const auto out = t.file("inv.txt");
  CHECK(run({"invert", "--input", in, "--output", out}).code == 0);
  CHECK(mobius::read_document(out).points.size() == 3);

  const auto s = run({"invert", "--input", in, "--point", "b", "--sphericalize"});
  REQUIRE(s.code == 0);
  CHECK(s.report()["results"]["transform"] == "sphericalization");
  CHECK(s.report()["results"]["diameter"].get<double>() <= 2.0);

  CHECK(run({"invert", "--input", in, "--point", "a", "--complete"}).code == 0);
  CHECK(run({"invert", "--input", in, "--point", "zz"}).code == 2);
}

TEST_CASE("doubling") {
  TempDir t;
  const auto in = t.file("a.txt", kLine3);
  const auto r = run({"doubling", "--input", in});
  REQUIRE(r.code == 0);
  CHECK(r.report()["results"]["D"] == 3);
  CHECK(r.report()["results"]["method"] == "exact");
  CHECK(r.report()["results"].contains("table"));
  CHECK(run({"doubling", "--input", in, "--mode", "greedy"}).report()["results"]["D"].get<int>() >= 3);

  const auto big = t.file("big.txt");
  REQUIRE(run({"generate", "--model", "random", "--kind", "euclidean", "--n", "100", "--output", big}).code == 0);
  const auto refused = run({"doubling", "--input", big, "--mode", "exact"});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("exact") != std::string::npos);
}

TEST_CASE("chains") {
  TempDir t;
  const auto in = t.file("a.txt", kLine3);
  const auto star = run({"chains", "--input", in});
  REQUIRE(star.code == 0);
  CHECK(star.report()["results"]["theta_star"].get<double>() == doctest::Approx(0.5));
  const auto found = run({"chains", "--input", in, "--theta", "0.5", "--pair", "a", "c"});
  REQUIRE(found.code == 0);
  CHECK(found.report()["results"]["found"] == true);
  CHECK(found.report()["results"]["chain"]["points"] == json{"a", "b", "c"});
  CHECK(run({"chains", "--input", in, "--theta", "0.4"}).report()["results"]["found"] == false);
  CHECK(run({"chains", "--input", in, "--theta", "1.5"}).code == 2);
  CHECK(run({"chains", "--input", in, "--pair", "a", "c"}).code == 2);

  const auto cantor = t.file("c.txt");
  REQUIRE(run({"generate", "--model", "cantor", "--k", "2", "--depth", "4", "--a", "0.5", "--output", cantor}).code == 0);
  const auto disc = run({"chains", "--input", cantor});
  REQUIRE(disc.code == 0);
  CHECK(disc.report()["results"]["uniformly_disconnected"] == true);
  CHECK(disc.report()["results"]["message"] == "uniformly disconnected for all θ<1");
}

TEST_CASE("generate") {
  TempDir t;
  const auto printed = run({"generate", "--model", "euclidean", "--coords", "0,0;3,4;0,1"});
  REQUIRE(printed.code == 0);
  const auto doc = mobius::parse_document(printed.out);
  CHECK(doc.matrix(0, 1) == 5.0);
  const auto ray = run({"generate", "--model", "ray", "--n", "5", "--ulo", "0.5", "--uhi", "1"});
  REQUIRE(ray.code == 0);
  CHECK(mobius::parse_document(ray.out).basepoint == std::string("p"));
  const auto a = run({"generate", "--model", "random", "--kind", "graph", "--n", "9", "--seed", "4"});
  const auto b = run({"generate", "--model", "random", "--kind", "graph", "--n", "9", "--seed", "4"});
  CHECK(a.out == b.out);
  CHECK(run({"generate", "--model", "random", "--kind", "quasi", "--n", "7", "--K", "2"}).code == 0);
  CHECK(run({"generate", "--model", "cantor", "--k", "2"}).code == 2);
  CHECK(run({"generate", "--model", "cantor", "--k", "2", "--depth", "11", "--a", "0.5"}).code == 2);
  CHECK(run({"generate", "--model", "euclidean", "--coords", "0,0;0,0;1,1"}).code == 2);
  CHECK(run({"generate"}).code == 2);
  const auto out = t.file("g.txt");
  const auto rep = run({"generate", "--model", "cantor", "--k", "3", "--depth", "2", "--a", "0.3", "--output", out});
  REQUIRE(rep.code == 0);
  CHECK(rep.report()["results"]["points"] == 9);
}

TEST_CASE("distortion") {
  TempDir t;
  const auto src = t.file("s.txt", "kind: metric\npoints: a b c d\nmatrix:\n0 1 2 3\n1 0 1 2\n2 1 0 1\n3 2 1 0\n");
  const auto tgt = t.file("t.txt", "kind: metric\npoints: a b c d\nmatrix:\n0 2 4 6\n2 0 2 4\n4 2 0 2\n6 4 2 0\n");
  const auto r = run({"distortion", "--source", src, "--target", tgt});
  REQUIRE(r.code == 0);
  const auto j = r.report()["results"];
  CHECK(j["points"] == 4);
  CHECK(j["cross_ratio"]["count"] == 24);
  CHECK(j["cross_ratio"]["min_ratio"].get<double>() == doctest::Approx(1.0));
  CHECK(j["cross_ratio"]["max_ratio"].get<double>() == doctest::Approx(1.0));
  CHECK(j.contains("cross_ratio_inverse"));
  CHECK(j.contains("three_point"));

  const auto map = t.file("m.txt", "a d\nb c\nc b\nd a\n");
  CHECK(run({"distortion", "--source", src, "--target", tgt, "--map", map}).code == 0);
  const auto bad_map = t.file("bad.txt", "a a\nb a\nc c\nd d\n");
  CHECK(run({"distortion", "--source", src, "--target", tgt, "--map", bad_map}).code == 2);
}

TEST_CASE("reports go to files on request") {
  TempDir t;
  const auto in = t.file("a.txt", kLine3);
  const auto path = t.file("r.json");
  const auto r = run({"validate", "--input", in, "--report", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  CHECK(json::parse(f)["command"] == "validate");
}

TEST_CASE("verify-theorems is deterministic and catches an injected fault") {
  const auto a = run({"verify-theorems", "--seed", "3"});
  const auto b = run({"verify-theorems", "--seed", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.report()["digest"] == b.report()["digest"]);
  CHECK(a.report()["seed"] == 3);
  const auto fault = run({"verify-theorems", "--seed", "3", "--inject-fault"});
  CHECK(fault.code == 1);
  CHECK(fault.err.find("criterion 2 failed") != std::string::npos);
  CHECK_FALSE(fault.report()["witnesses"].empty());
}

}

TEST_SUITE("cli") {

TEST_CASE("command examples") {
  TempDir t;
  std::string uniform = "kind: metric\npoints: a b c d e\nmatrix:\n";
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) uniform += (i == j ? "0" : "1") + std::string(j < 4 ? " " : "\n");
  }
  CHECK(run({"doubling", "--input", t.file("u.txt", uniform)}).report()["results"]["D"] == 5);

  const auto cantor = t.file("c.txt");
  REQUIRE(run({"generate", "--model", "cantor", "--k", "2", "--depth", "4", "--a", "0.5", "--output", cantor}).code == 0);
  CHECK(run({"doubling", "--input", cantor}).report()["results"]["D"] == 2);

  const auto numeric = t.file("n.txt", "kind: metric\npoints: 0 1 2\nmatrix:\n0 1 2\n1 0 1\n2 1 0\n");
  const auto none = run({"chains", "--input", numeric, "--theta", "0.49", "--pair", "0", "2"});
  REQUIRE(none.code == 0);
  CHECK(none.report()["results"]["found"] == false);
  const auto star = run({"chains", "--input", numeric}).report()["results"];
  CHECK(star["witness_pair"] == json{"0", "2"});

  const auto eight = run({"generate", "--model", "cantor", "--k", "2", "--depth", "3", "--a", "0.5"});
  CHECK(mobius::parse_document(eight.out).points.size() == 8);
  const auto ray = run({"generate", "--model", "ray", "--n", "33", "--ulo", "0.5", "--uhi", "1.0"});
  const auto rdoc = mobius::parse_document(ray.out);
  CHECK(rdoc.points.size() == 34);
  CHECK(rdoc.basepoint == std::string("p"));
}

TEST_CASE("generated documents validate") {
  TempDir t;
  const std::vector<std::vector<std::string>> models{
      {"--model", "cantor", "--k", "3", "--depth", "3", "--a", "0.4"},
      {"--model", "euclidean", "--coords", "0,0;1,0;0,2;5,5"},
      {"--model", "ray", "--n", "10", "--ulo", "0.2", "--uhi", "0.9"},
      {"--model", "random", "--kind", "ultrametric", "--n", "12"},
      {"--model", "random", "--kind", "perturbed-grid", "--n", "12"},
      {"--model", "random", "--kind", "euclidean", "--n", "12"},
      {"--model", "random", "--kind", "graph", "--n", "12"},
      {"--model", "random", "--kind", "quasi", "--n", "12", "--K", "3"}};
  for (const auto& m : models) {
    const auto path = t.file("gen.txt");
    std::vector<std::string> args{"generate"};
    args.insert(args.end(), m.begin(), m.end());
    args.insert(args.end(), {"--output", path});
    REQUIRE(run(args).code == 0);
    CHECK(run({"validate", "--input", path}).code == 0);
  }
}

TEST_CASE("completion then inversion makes the remote point finite") {
  TempDir t;
  const auto in = t.file("a.txt", kLine3);
  const auto out = t.file("o.txt");
  REQUIRE(run({"invert", "--input", in, "--point", "a", "--complete", "--output", out}).code == 0);
  const auto doc = mobius::read_document(out);
  CHECK(doc.points.size() == 3);
  CHECK_FALSE(doc.remote);
  const auto space = mobius::to_metric_space(doc);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::isfinite(space.matrix()(i, j)));
  }
}

TEST_CASE("distortion against the inverted space") {
  TempDir t;
  const auto src = t.file("s.txt");
  REQUIRE(run({"generate", "--model", "random", "--kind", "graph", "--n", "9", "--output", src}).code == 0);
  const auto same = run({"distortion", "--source", src, "--target", src});
  REQUIRE(same.code == 0);
  for (const auto& bp : same.report()["results"]["cross_ratio"]["envelope"]) CHECK(bp[0] == bp[1]);

  const auto inv = t.file("i.txt");
  REQUIRE(run({"invert", "--input", src, "--point", "v0", "--output", inv}).code == 0);
  const auto r = run({"distortion", "--source", src, "--target", inv});
  REQUIRE(r.code == 0);
  const auto j = r.report()["results"];
  CHECK(j["dropped_source_points"] == 1);
  CHECK(j["cross_ratio"]["min_ratio"].get<double>() >= 1.0 / 256.0);
  CHECK(j["cross_ratio"]["max_ratio"].get<double>() <= 256.0);
}

}
