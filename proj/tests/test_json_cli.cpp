#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "m0n/json_io.hpp"

using namespace m0n;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// stdout only; stderr goes to /dev/null.
Run run_cli(const std::string &args) {
  const std::string cmd = std::string(M0N_CLI) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

json parse(const Run &r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("fan round trip") {
  for (int n = 4; n <= 7; ++n) {
    const LabeledFan f = build_losev_manin(n);
    const json j = to_json(f);
    const LabeledFan back = labeled_fan_from_json(json::parse(j.dump()), n);
    CHECK(back.fan.rays == f.fan.rays);
    CHECK(back.fan.max_cones == f.fan.max_cones);
    CHECK(back.labels == f.labels);
    CHECK(labeled_fans_equal(back, f));
    CHECK(fans_equal(fan_from_json(j), f.fan));
  }
}

TEST_CASE("malformed fans are rejected") {
  json j = to_json(build_losev_manin(5).fan);
  j["max_cones"][0][0] = 99;
  CHECK_THROWS_AS(fan_from_json(j), std::invalid_argument);
  json k = to_json(build_losev_manin(5));
  k["labels"].erase(0);
  CHECK_THROWS_AS(labeled_fan_from_json(k, 5), std::invalid_argument);
  json r = to_json(build_losev_manin(5).fan);
  r["rays"][0] = json::array({1});
  CHECK_THROWS_AS(fan_from_json(r), std::invalid_argument);
}

TEST_CASE("boundary sum round trip") {
  for (int n = 5; n <= 7; ++n)
    for (LabelSet j : f_indices(n))
      for (const BoundarySum &d : effective_boundary_reps(f_class(n, j, n)))
        CHECK(boundary_sum_from_json(json::parse(to_json(d).dump())) == d);
  const json j = to_json(hyperplane_representative(5, 1, 2));
  CHECK(j["coeffs"].size() == 3);
  CHECK(j["coeffs"][0]["side"] == json::array({1, 2}));
  CHECK(j["coeffs"][2]["side"] == json::array({1, 2, 4}));
}

TEST_CASE("class JSON lists nonzero terms in basis order") {
  const json j = to_json(f_class(6, {1, 2}, 6));
  CHECK(j["h"] == 1);
  CHECK(j["e"].size() == 3);
  CHECK(j["e"][2]["J"] == json::array({1, 2}));
  CHECK(j["e"][2]["c"] == -1);
}

TEST_CASE("cli fan") {
  for (int n = 4; n <= 7; ++n) {
    const Run r = run_cli("fan --n " + std::to_string(n) + " --oracle --format json");
    CHECK(r.status == 0);
    const json j = parse(r);
    CHECK(j["n"] == n);
    CHECK(j["fans_equal"] == true);
    CHECK(j["verified"] == true);
    CHECK(j["validation"]["smooth"] == true);
    CHECK(j["validation"]["complete"] == true);
  }
  const Run plain = run_cli("fan 5");
  CHECK(plain.status == 0);
  CHECK_FALSE(parse(plain).contains("fans_equal"));
  CHECK(run_cli("fan 3").status == 2);
  CHECK(run_cli("fan 10").status == 2);
  CHECK(run_cli("fan").status == 2);
  CHECK(run_cli("fan 5 --n 6").status == 2);
  CHECK(run_cli("fan 5 --format xml").status == 2);
}

TEST_CASE("cli h0") {
  const Run r = run_cli("h0 --n 6 --j 1,2");
  CHECK(r.status == 0);
  const json j = parse(r);
  CHECK(j["h0_lattice"] == 2);
  CHECK(j["h0_formula"] == 2);
  CHECK(j["agree"] == true);
  CHECK(parse(run_cli("h0 7"))["h0_lattice"] == 5);
  CHECK(run_cli("h0 8").status == 2);
  CHECK(run_cli("h0 6 --j 1,2,3").status == 2);
  CHECK(run_cli("h0 6 --j 5").status == 2);
  CHECK(run_cli("h0 6 --j x").status == 2);
}

TEST_CASE("cli reps") {
  const Run r = run_cli("reps --n 6 --j 1,2");
  CHECK(r.status == 0);
  const json j = parse(r);
  CHECK(j["count"] == 3);
  CHECK(j["expected"] == 3);
  CHECK(j["agree"] == true);
  CHECK(j["representations"].size() == 3);
  CHECK(parse(run_cli("reps 5"))["count"] == 6);
  CHECK(run_cli("reps 8").status == 2);
  CHECK(run_cli("reps 6 --j 6").status == 2);
}

TEST_CASE("cli plucker") {
  const Run r = run_cli("plucker --n 6");
  CHECK(r.status == 0);
  const json j = parse(r);
  CHECK(j["all_verified"] == true);
  REQUIRE(j["reports"].size() == 3);
  CHECK(j["reports"][0]["plucker_rank"] == 6);
  CHECK(j["reports"][1]["plucker_rank"] == 3);
  CHECK(j["reports"][2]["plucker_rank"] == 1);
  CHECK(run_cli("plucker 5").status == 2);
  CHECK(run_cli("plucker 7").status == 2);
}

TEST_CASE("cli classes") {
  const json j = parse(run_cli("classes 6"));
  CHECK(j["classes"].size() == 25);
  CHECK(j["classes"][0]["side"] == json::array({1, 2}));
  CHECK(run_cli("classes 8").status == 2);
  CHECK(run_cli("bogus").status == 2);
}

TEST_CASE("cli output is deterministic") {
  for (const char *args : {"fan 7 --oracle", "reps 7 --j 1", "classes 7", "plucker 6"}) {
    const Run a = run_cli(args), b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}
