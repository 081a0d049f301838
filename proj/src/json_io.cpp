#include "nanotube/json_io.hpp"

using nlohmann::json;

namespace nanotube {

json to_json(const IntervalSet& set) {
  json arr = json::array();
  for (const auto& iv : set.pieces()) arr.push_back({iv.lo, iv.hi});
  return arr;
}

IntervalSet interval_set_from_json(const json& j) {
  std::vector<Interval> pieces;
  for (const auto& iv : j) pieces.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
  return IntervalSet(std::move(pieces));
}

json to_json(const SegmentFamily& fam) {
  json segs = json::array();
  for (const auto& s : fam.segments) {
    segs.push_back({{"k", s.k},
                    {"a", {s.a.t1, s.a.t2}},
                    {"b", {s.b.t1, s.b.t2}},
                    {"direction", {s.direction[0], s.direction[1]}},
                    {"degenerate", s.degenerate}});
  }
  return json{{"q", {fam.q.q1, fam.q.q2}}, {"segments", segs}};
}

json to_json(const RangeReport& rep) {
  json j{{"q", {rep.q.q1, rep.q.q2}},
         {"r1", to_json(rep.r1)},
         {"r2", to_json(rep.r2)},
         {"r3", to_json(rep.r3)},
         {"union", to_json(rep.range_union)},
         {"case", rep.case_label}};
  if (rep.extremum_witness) {
    const auto& w = *rep.extremum_witness;
    j["extremum_witness"] = {
        {"which", w.which == ExtremumKind::F1Min ? "F1-min" : "F2-max"},
        {"value", w.value},
        {"theta", {w.theta.t1, w.theta.t2}},
        {"segment_k", w.segment_k}};
  }
  return j;
}

json to_json(const SpectrumReport& rep) {
  json gaps = json::array();
  for (const auto& g : rep.gaps_per_hill_band)
    gaps.push_back({{"hill_band_index", g.hill_band_index},
                    {"gaps", to_json(g.gaps)},
                    {"case", g.case_label}});
  json sigma0 = json::array();
  for (const auto& e : rep.sigma_0)
    sigma0.push_back(
        {{"lambda", e.lambda}, {"eta_value", e.eta_value}, {"family", e.family}});
  return json{{"p", {rep.p.p1, rep.p.p2}},
              {"potential", rep.potential},
              {"lambda_min", rep.lambda_min},
              {"lambda_max", rep.lambda_max},
              {"ac_bands", to_json(rep.ac_bands)},
              {"hill_bands", to_json(rep.hill_band_set)},
              {"gaps_per_hill_band", gaps},
              {"sigma_D", rep.sigma_D},
              {"sigma_0", sigma0},
              {"notes", rep.notes}};
}

SpectrumReport spectrum_report_from_json(const json& j) {
  SpectrumReport rep;
  rep.p = {j.at("p").at(0).get<int>(), j.at("p").at(1).get<int>()};
  rep.potential = j.at("potential").get<std::string>();
  rep.lambda_min = j.at("lambda_min").get<double>();
  rep.lambda_max = j.at("lambda_max").get<double>();
  rep.ac_bands = interval_set_from_json(j.at("ac_bands"));
  rep.hill_band_set = interval_set_from_json(j.at("hill_bands"));
  for (const auto& g : j.at("gaps_per_hill_band"))
    rep.gaps_per_hill_band.push_back({g.at("hill_band_index").get<int>(),
                                      interval_set_from_json(g.at("gaps")),
                                      g.at("case").get<std::string>()});
  rep.sigma_D = j.at("sigma_D").get<std::vector<double>>();
  for (const auto& e : j.at("sigma_0"))
    rep.sigma_0.push_back({e.at("lambda").get<double>(), e.at("eta_value").get<double>(),
                           e.at("family").get<std::string>()});
  rep.notes = j.at("notes").get<std::vector<std::string>>();
  return rep;
}

json to_json(const PeriodicGraphConfig& config) {
  json edges = json::array();
  for (const auto& e : config.edges)
    edges.push_back({{"u", config.vertex_names[e.u]},
                     {"v", config.vertex_names[e.v]},
                     {"shift", {e.s1, e.s2}}});
  return json{{"vertices", config.vertex_names}, {"edges", edges}};
}

json to_json(const DispersionCheckReport& rep) {
  json fails = json::array();
  for (const auto& f : rep.failures)
    fails.push_back({{"theta", {f.theta.t1, f.theta.t2}},
                     {"lambda", f.lambda},
                     {"residual", f.residual}});
  return json{{"pass", rep.pass},
              {"eigenvalues_checked", rep.eigenvalues_checked},
              {"worst_residual", rep.worst_residual},
              {"failures", fails}};
}

json to_json(const CompactEigenfunctionResult& res) {
  json basis = json::array();
  for (const auto& fn : res.basis) {
    json pieces = json::array();
    for (const auto& p : fn.pieces)
      pieces.push_back({{"edge", p.edge},
                        {"cell", {p.cell1, p.cell2}},
                        {"alpha", p.alpha},
                        {"beta", p.beta}});
    basis.push_back(pieces);
  }
  return json{{"dimension", res.dimension},
              {"constraint_residual", res.constraint_residual},
              {"basis", basis}};
}

}  // namespace nanotube
