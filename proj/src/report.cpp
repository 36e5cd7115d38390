#include <cmath>

#include <json.hpp>

#include "stringcone/degeneration.hpp"

namespace sc {

using json = nlohmann::ordered_json;

namespace {

json vectors(const std::vector<IntVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

json header(const DegenerationReport& r) {
  json j;
  j["type"] = r.type;
  j["rank"] = r.rank;
  j["word"] = r.word.letters;
  j["demazure_word"] = r.demazure_word ? json(r.demazure_word->letters) : json(nullptr);
  return j;
}

json level(const std::optional<int>& l) { return l ? json(*l) : json(nullptr); }

}  // namespace

std::string reportToJson(const DegenerationReport& r, bool with_timings) {
  json j = header(r);
  j["rays"] = vectors(r.cone.rays);
  j["facets"] = vectors(r.cone.facets);
  j["certified_level"] = level(r.certified_level);

  json hb = json::array();
  for (const auto& p : r.hilbert_basis) hb.push_back({{"lambda", p.lambda.coords}, {"psi", p.psi.entries}});
  j["hilbert_basis"] = std::move(hb);
  j["relations"] = vectors(r.relations);
  j["weight_form"] = r.weight_form;

  json sections = json::array();
  for (const auto& s : r.sections) {
    json e;
    e["lambda"] = s.lambda.coords;
    e["points"] = s.points;
    e["weyl_dim"] = s.weyl_dim;
    e["match"] = s.match;
    if (s.demazure_points) {
      e["demazure_points"] = *s.demazure_points;
      e["demazure_dim"] = *s.demazure_dim;
      e["demazure_match"] = *s.demazure_match;
    }
    sections.push_back(std::move(e));
  }
  j["sections"] = std::move(sections);
  if (r.demazure_face) {
    json d;
    d["adapted"] = r.demazure_adapted;
    d["face"] = *r.demazure_face;
    d["normal"] = r.demazure_normal ? json(*r.demazure_normal) : json(nullptr);
    j["demazure"] = std::move(d);
  }

  json checks = json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  j["checks"] = std::move(checks);
  json timings = json::object();
  if (with_timings)
    for (const auto& [name, ms] : r.timings_ms) timings[name] = static_cast<Int>(std::llround(ms));
  j["timings_ms"] = std::move(timings);
  return j.dump(2) + "\n";
}

std::string coneToJson(const DegenerationReport& r) {
  json j = header(r);
  j["ambient_dim"] = r.cone.ambient_dim;
  j["pointed"] = r.cone.pointed;
  j["hull_level"] = r.hull_level;
  j["certified_level"] = level(r.certified_level);
  j["rays"] = vectors(r.cone.rays);
  j["facets"] = vectors(r.cone.facets);
  return j.dump(2) + "\n";
}

}  // namespace sc
