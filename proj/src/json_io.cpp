#include "cancelkit/json_io.hpp"

#include <algorithm>

namespace cancelkit {

using nlohmann::json;

namespace {

int capped(const std::optional<int>& v) {
  return v ? std::min(*v, kUnboundedDisplayCap) : kUnboundedDisplayCap;
}

}  // namespace

json to_json(const ConditionReport& r) {
  json j;
  j["c_max"] = capped(r.c_max);
  j["t_max"] = capped(r.t_max);
  j["p_holds"] = r.p_holds;
  j["cpp"] = r.cpp ? json(*r.cpp) : json(nullptr);
  j["classification"] = to_string(r.classification);
  json w = json::object();
  if (!r.witnesses.piece_decomposition.empty()) {
    w["decomposed_relator"] = r.witnesses.decomposed_relator;
    w["piece_decomposition"] = r.witnesses.piece_decomposition;
  }
  if (!r.witnesses.bad_sequence.empty()) w["bad_sequence"] = r.witnesses.bad_sequence;
  if (!r.witnesses.long_piece.empty()) w["long_piece"] = r.witnesses.long_piece;
  if (!r.witnesses.proper_power_relator.empty())
    w["proper_power"] = r.witnesses.proper_power_relator;
  j["witnesses"] = w.empty() ? json(nullptr) : w;
  return j;
}

json to_json(const StripCertificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["start"] = c.start;
  j["outer"] = c.outer;
  j["cells"] = c.cells;
  j["junctions"] = c.junctions;
  j["replacement"] = c.replacement;
  return j;
}

json to_json(const ReductionResult& r) {
  json j;
  j["geodesic"] = r.geodesic;
  j["length"] = r.geodesic.size();
  json trail = json::array();
  for (const auto& cert : r.trail) trail.push_back(to_json(cert));
  j["trail"] = trail;
  return j;
}

json to_json(const HalfInteger& h) {
  json j;
  j["twice"] = h.twice;
  return j;
}

json to_json(const ClassRep& r) {
  json j;
  j["rep"] = r.rep;
  j["length"] = r.length;
  j["conjugator"] = r.conjugator;
  j["certified"] = r.certified;
  j["trail"] = r.trail;
  return j;
}

json to_json(const RootAnswer& r) {
  json j;
  switch (r.v) {
    case RootAnswer::V::Yes:
      j["verdict"] = "yes";
      j["witness"] = r.witness;
      j["conjugator"] = r.conjugator;
      break;
    case RootAnswer::V::No:
      j["verdict"] = "no";
      j["reason"] = r.reason == RootAnswer::Reason::LengthBound ? "length_bound" : "exhausted";
      break;
    case RootAnswer::V::Inconclusive:
      j["verdict"] = "inconclusive";
      j["bound"] = r.bound;
      break;
  }
  return j;
}

json to_json(const MaxRootAnswer& r) {
  json j;
  j["verdict"] = r.v == MaxRootAnswer::V::Yes ? "yes" : "inconclusive";
  j["n"] = r.n;
  j["witness"] = r.witness;
  return j;
}

json to_json(const PowerConjAnswer& r) {
  json j;
  switch (r.v) {
    case PowerConjAnswer::V::Yes:
      j["verdict"] = "yes";
      j["n"] = r.n;
      j["conjugator"] = r.conjugator;
      break;
    case PowerConjAnswer::V::No:
      j["verdict"] = "no";
      break;
    case PowerConjAnswer::V::Inconclusive:
      j["verdict"] = "inconclusive";
      break;
  }
  return j;
}

json to_json(const ClassCount& r) {
  json j;
  j["count"] = r.count;
  j["reps"] = r.reps;
  j["conclusive"] = r.conclusive;
  return j;
}

json to_json(const GrowthCount& g) {
  json j = json::array();
  for (const auto& c : g.counts) j.push_back(c.str());
  return j;
}

json to_json(const CayleyBall& b) {
  json j;
  j["radius"] = b.radius;
  j["spheres"] = b.spheres;
  j["size"] = b.table.size();
  return j;
}

}  // namespace cancelkit
