#include "evencycle/report.hpp"

#include <fstream>

namespace evencycle {

Json to_json(const Cycle& c) { return Json(c.verts); }
Json to_json(const Path& p) { return Json(p.verts); }

Json to_json(const Certificate& cert) {
  Json j;
  j["kind"] = std::string(kind_name(kind_of(cert)));
  j["witness"] = witness_vertices(cert);
  if (auto* l = std::get_if<LowDegreeVertex>(&cert))
    j["degree"] = l->degree;
  return j;
}

Json to_json(const HuntResult& r) {
  Json j;
  j["filter"] = r.filter;
  j["kmax"] = r.kmax;
  j["examined"] = r.examined;
  j["filtered_out"] = r.filtered_out;
  j["errors"] = r.errors;
  j["counterexamples"] = Json::array();
  for (const auto& c : r.counterexamples)
    j["counterexamples"].push_back({{"index", c.index}, {"graph6", c.graph6}, {"reason", c.reason}});
  if (!r.record_errors.empty()) {
    j["record_errors"] = Json::array();
    for (const auto& c : r.record_errors)
      j["record_errors"].push_back(
          {{"index", c.index}, {"graph6", c.graph6}, {"reason", c.reason}});
  }
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

Json to_json(const HoleContext& ctx) {
  Json j;
  j["hole"] = ctx.hole.verts;
  Json attach = Json::array();
  for (const auto& a : ctx.attach)
    attach.push_back(a.to_vector());
  j["attach"] = attach;
  j["ic"] = ctx.ic.to_vector();
  j["ic_plus"] = ctx.ic_plus.to_vector();
  return j;
}

std::string_view precondition_name(PreconditionFailed::Kind k) {
  using K = PreconditionFailed::Kind;
  switch (k) {
  case K::HasC4:
    return "has-c4";
  case K::HasC8:
    return "has-c8";
  case K::LowDegree:
    return "low-degree";
  case K::HasInducedP10:
    return "has-induced-p10";
  case K::NotGoodHole:
    return "not-good-hole";
  case K::BadIndex:
    return "bad-index";
  case K::Other:
    return "other";
  }
  return "other";
}

Json to_json(const PreconditionFailed& e) {
  Json j;
  j["precondition"] = std::string(precondition_name(e.kind));
  j["message"] = e.what();
  if (e.cycle)
    j["cycle"] = e.cycle->verts;
  if (e.path)
    j["path"] = e.path->verts;
  if (e.vertex)
    j["vertex"] = *e.vertex;
  return j;
}

Json to_json(const CounterexampleBundle& b) {
  Json j;
  j["graph6"] = b.graph6;
  j["operation"] = b.operation;
  j["preconditions_verified"] = b.preconditions_verified;
  j["witness"] = b.witness;
  return j;
}

void write_bundle(const std::string& path, const CounterexampleBundle& b) {
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write counterexample bundle to " + path);
  out << to_json(b).dump(2) << '\n';
}

} // namespace evencycle
