#include "m0n/json_io.hpp"

#include <stdexcept>

namespace m0n {

json members_json(LabelSet s) { return json(s.members()); }

json to_json(const Fan &fan) {
  json cones = json::array();
  for (const Cone &c : fan.max_cones) cones.push_back(c.ray_ids);
  return json{{"dim", fan.dim}, {"rays", fan.rays}, {"max_cones", cones}};
}

Fan fan_from_json(const json &j) {
  Fan fan;
  fan.dim = j.at("dim").get<int>();
  fan.rays = j.at("rays").get<std::vector<RayVector>>();
  for (const auto &c : j.at("max_cones")) {
    auto ids = c.get<std::vector<std::size_t>>();
    for (auto id : ids)
      if (id >= fan.rays.size()) throw std::invalid_argument("cone references a missing ray");
    fan.max_cones.emplace_back(std::move(ids));
  }
  for (const auto &r : fan.rays)
    if (r.size() != static_cast<std::size_t>(fan.dim)) throw std::invalid_argument("ray has the wrong dimension");
  return fan;
}

json to_json(const LabeledFan &fan) {
  json j = to_json(fan.fan);
  json labels = json::array();
  for (LabelSet l : fan.labels) labels.push_back(members_json(l));
  j["labels"] = labels;
  return j;
}

LabeledFan labeled_fan_from_json(const json &j, int n) {
  LabeledFan out;
  out.n = n;
  out.fan = fan_from_json(j);
  for (const auto &l : j.at("labels")) out.labels.push_back(LabelSet::from_members(l.get<std::vector<int>>()));
  if (out.labels.size() != out.fan.rays.size()) throw std::invalid_argument("labels are not parallel to rays");
  return out;
}

json to_json(const BoundarySum &d) {
  json coeffs = json::array();
  const auto &idx = boundary_indices(d.n());
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (d.coeffs()[i] != 0) coeffs.push_back(json{{"side", members_json(idx[i].side())}, {"c", d.coeffs()[i]}});
  return json{{"n", d.n()}, {"coeffs", coeffs}};
}

BoundarySum boundary_sum_from_json(const json &j) {
  const int n = j.at("n").get<int>();
  BoundarySum d(n);
  for (const auto &entry : j.at("coeffs")) {
    const auto side = LabelSet::from_members(entry.at("side").get<std::vector<int>>());
    d.add(BoundaryIndex(n, side), entry.at("c").get<std::int64_t>());
  }
  return d;
}

json to_json(const KapranovClassM &c) {
  json e = json::array();
  const auto &basis = c.basis();
  for (std::size_t i = 1; i < basis.size(); ++i)
    if (c.coords()[i] != 0) e.push_back(json{{"J", members_json(basis.label_at(i))}, {"c", c.coords()[i]}});
  return json{{"h", c.h()}, {"e", e}};
}

json to_json(const DegreeReport &r) {
  return json{{"n", r.n},
              {"J", members_json(r.j)},
              {"monomials", r.monomial_count},
              {"h0", r.h0},
              {"relation_dim", r.relation_dim},
              {"plucker_rank", r.plucker_rank},
              {"verified", r.verified}};
}

json to_json(const FanReport &r) {
  return json{{"smooth", r.smooth}, {"complete", r.complete}, {"simplicial", r.simplicial}};
}

}  // namespace m0n
