// Command-line reports: JSON on stdout, diagnostics on stderr.
// Exit status 0 iff every "agree"/"verified" field is true, 1 if some check
// disagrees, 2 on invalid input.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "m0n/json_io.hpp"
#include "m0n/permutohedral.hpp"
#include "m0n/picard.hpp"
#include "m0n/plucker.hpp"
#include "m0n/polytope.hpp"

using namespace m0n;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::optional<int> n_pos;
  std::optional<int> n_opt;
  std::string j;
  bool oracle = false;
  std::string format = "json";

  int n() const {
    if (n_pos && n_opt && *n_pos != *n_opt) throw UsageError("conflicting values for n");
    if (n_pos) return *n_pos;
    if (n_opt) return *n_opt;
    throw UsageError("n is required");
  }
};

LabelSet parse_labels(const std::string &text) {
  LabelSet s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int label = 0;
    try {
      label = std::stoi(item, &used);
    } catch (const std::exception &) {
      throw UsageError("bad label '" + item + "' in --j");
    }
    if (used != item.size() || label < 1 || label > 31) throw UsageError("bad label '" + item + "' in --j");
    if (s.contains(label)) throw UsageError("repeated label " + item + " in --j");
    s = s.with(label);
  }
  return s;
}

void require_range(int n, int lo, int hi, const std::string &what) {
  if (n < lo || n > hi)
    throw UsageError(what + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi) + ", got " +
                     std::to_string(n));
}

int emit(const json &report, bool ok) {
  std::cout << report.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_fan(const Args &a) {
  const int n = a.n();
  require_range(n, 4, 9, "fan");
  const LabeledFan fan = build_losev_manin(n);
  const FanReport v = validate(fan.fan);
  bool ok = v.smooth && v.complete && v.simplicial;
  json out;
  out["n"] = n;
  out["rays"] = fan.fan.rays.size();
  out["max_cones"] = fan.fan.max_cones.size();
  out["validation"] = to_json(v);
  if (a.oracle) {
    const bool equal = labeled_fans_equal(fan, flag_fan(n));
    out["fans_equal"] = equal;
    ok = ok && equal;
  }
  out["verified"] = ok;
  out["fan"] = to_json(fan);
  return emit(out, ok);
}

int cmd_h0(const Args &a) {
  const int n = a.n();
  require_range(n, 4, 7, "h0");
  const LabelSet j = parse_labels(a.j);
  if (!j.subset_of(LabelSet::range(n - 2)) || j.size() > n - 4)
    throw UsageError("h0 needs J ⊆ {1..n-2} with |J| <= n-4, got " + j.str());
  const std::int64_t lattice = h0_toric(build_losev_manin(n), forgetful_hyperplane_class_L(n, j));
  const std::int64_t formula = n - j.size() - 2;
  json out;
  out["n"] = n;
  out["J"] = members_json(j);
  out["h0_lattice"] = lattice;
  out["h0_formula"] = formula;
  out["agree"] = lattice == formula;
  return emit(out, lattice == formula);
}

int cmd_reps(const Args &a) {
  const int n = a.n();
  require_range(n, 5, 7, "reps");
  const LabelSet j = parse_labels(a.j);
  if (!j.subset_of(LabelSet::range(n - 1)) || j.size() > n - 4)
    throw UsageError("reps needs J ⊆ {1..n-1} with |J| <= n-4, got " + j.str());
  const KapranovClassM c = f_class(n, j, n);
  const auto reps = effective_boundary_reps(c);
  json list = json::array();
  for (const auto &d : reps) list.push_back(to_json(d)["coeffs"]);
  const std::int64_t expected = binomial(n - j.size() - 1, 2);
  const auto count = static_cast<std::int64_t>(reps.size());
  json out;
  out["n"] = n;
  out["J"] = members_json(j);
  out["class"] = to_json(c);
  out["representations"] = list;
  out["count"] = count;
  out["expected"] = expected;
  out["agree"] = count == expected;
  return emit(out, count == expected);
}

int cmd_plucker(const Args &a) {
  const int n = a.n();
  if (n != 6) throw UsageError("plucker: Plücker generation is checked only for n = 6, got " + std::to_string(n));
  json reports = json::array();
  bool all = true;
  for (LabelSet j : {LabelSet{}, LabelSet{1}, LabelSet{1, 2}}) {
    const DegreeReport r = plucker_span_rank(j, n);
    reports.push_back(to_json(r));
    all = all && r.verified;
  }
  json out;
  out["n"] = n;
  out["reports"] = reports;
  out["all_verified"] = all;
  return emit(out, all);
}

int cmd_classes(const Args &a) {
  const int n = a.n();
  require_range(n, 5, 7, "classes");
  json table = json::array();
  for (const BoundaryIndex &t : boundary_indices(n))
    table.push_back(json{{"side", members_json(t.side())}, {"class", to_json(class_of_boundary(t))}});
  json out;
  out["n"] = n;
  out["classes"] = table;
  return emit(out, true);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Losev-Manin fans, boundary divisors of M_0,n and Plücker relations"};
  app.require_subcommand(1);
  Args args;

  auto add = [&app, &args](const std::string &name, const std::string &help, bool with_j, bool with_oracle) {
    CLI::App *sub = app.add_subcommand(name, help);
    sub->add_option("n_pos", args.n_pos, "marking count");
    sub->add_option("--n", args.n_opt, "marking count");
    if (with_j) sub->add_option("--j", args.j, "comma-separated labels of J");
    if (with_oracle) sub->add_flag("--oracle", args.oracle, "compare against the flag fan");
    sub->add_option("--format", args.format, "output format")->check(CLI::IsMember({"json"}));
    return sub;
  };
  CLI::App *fan = add("fan", "labeled fan of L_{n-2} with validation", false, true);
  CLI::App *h0 = add("h0", "lattice-point h0 of H' - Σ E'_T on L_{n-2}", true, false);
  CLI::App *reps = add("reps", "effective boundary representations of F_{J,n}", true, false);
  CLI::App *plucker = add("plucker", "Plücker span ranks in the F-degrees, n = 6", false, false);
  CLI::App *classes = add("classes", "Kapranov classes of all boundary divisors", false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*fan) return cmd_fan(args);
    if (*h0) return cmd_h0(args);
    if (*reps) return cmd_reps(args);
    if (*plucker) return cmd_plucker(args);
    if (*classes) return cmd_classes(args);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
