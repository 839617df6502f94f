#include "vlink/json_io.hpp"

namespace vlink {

namespace {

Json site_json(const Site& s) { return Json::array({s.component, s.offset}); }

Site site_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw JsonFormatError("site must be [component, offset]");
  return Site{j.at(0).get<int>(), j.at(1).get<int>()};
}

}  // namespace

Json to_json(const MoveSpec& m) {
  Json params = Json::object();
  switch (m.kind) {
    case MoveKind::R1Add:
      params["sign"] = m.sign;
      params["over_first"] = m.over_first;
      break;
    case MoveKind::R2Add:
      params["sign"] = m.sign;
      params["reversed"] = m.reversed;
      params["under_first"] = m.under_first;
      break;
    default: break;
  }
  if (m.sites.size() > 1) {
    params["sites"] = Json::array();
    for (std::size_t i = 1; i < m.sites.size(); ++i) params["sites"].push_back(site_json(m.sites[i]));
  }
  Json j;
  j["kind"] = to_string(m.kind);
  j["site"] = m.sites.empty() ? Json(nullptr) : site_json(m.sites[0]);
  j["params"] = std::move(params);
  return j;
}

MoveSpec move_from_json(const Json& j) {
  try {
    MoveSpec m;
    m.kind = move_kind_from_string(j.at("kind").get<std::string>());
    if (!j.at("site").is_null()) m.sites.push_back(site_from(j.at("site")));
    const Json& p = j.value("params", Json::object());
    if (p.contains("sites"))
      for (const auto& s : p.at("sites")) m.sites.push_back(site_from(s));
    m.sign = p.value("sign", 1);
    m.over_first = p.value("over_first", true);
    m.reversed = p.value("reversed", false);
    m.under_first = p.value("under_first", false);
    return m;
  } catch (const Json::exception& e) {
    throw JsonFormatError(std::string("bad move: ") + e.what());
  } catch (const InapplicableMove& e) {
    throw JsonFormatError(e.what());
  }
}

Json to_json(const MoveTrace& t) {
  Json steps = Json::array();
  for (const auto& m : t.steps) steps.push_back(to_json(m));
  Json j;
  j["start"] = serialize_gauss(t.start);
  j["steps"] = std::move(steps);
  return j;
}

MoveTrace trace_from_json(const Json& j) {
  try {
    MoveTrace t{parse_gauss(j.at("start").get<std::string>()), {}};
    for (const auto& s : j.at("steps")) t.steps.push_back(move_from_json(s));
    return t;
  } catch (const Json::exception& e) {
    throw JsonFormatError(std::string("bad trace: ") + e.what());
  }
}

Json to_json(const Fingerprint& f) {
  Json poly = Json::object();
  for (auto [e, c] : f.f_poly.terms()) poly[std::to_string(e)] = c;
  Json linking = Json::array();
  for (const auto& row : f.linking) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(Json::array({e.over_sum, e.under_sum}));
    linking.push_back(std::move(r));
  }
  Json colorings = Json::object();
  for (auto [p, n] : f.colorings) colorings[std::to_string(p)] = n;
  Json j;
  j["components"] = f.component_count;
  j["f_poly"] = std::move(poly);
  j["odd_writhe"] = f.odd_writhe ? Json(*f.odd_writhe) : Json(nullptr);
  j["linking"] = std::move(linking);
  j["colorings"] = std::move(colorings);
  return j;
}

Json to_json(const Budget& b) {
  // threads never changes results, so it is not part of the report
  return Json{{"max_crossings", b.max_crossings}, {"max_expansions", b.max_expansions}};
}

Json to_json(const SearchStats& s) {
  return Json{{"visited", s.visited()},
              {"visited_a", s.visited_a},
              {"visited_b", s.visited_b},
              {"expanded_a", s.expanded_a},
              {"expanded_b", s.expanded_b},
              {"min_genus_a", s.min_genus_a},
              {"min_genus_b", s.min_genus_b},
              {"exhausted_a", s.exhausted_a},
              {"exhausted_b", s.exhausted_b}};
}

Json to_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  if (v.equivalence) {
    j["certificate"] = Json{{"from_a", to_json(v.equivalence->from_a)},
                            {"from_b", to_json(v.equivalence->from_b)},
                            {"meeting", serialize_gauss(v.equivalence->meeting)}};
  } else if (v.witness) {
    j["certificate"] = Json{{"invariant", v.witness->invariant},
                            {"components", v.witness->components},
                            {"value_a", v.witness->value_a},
                            {"value_b", v.witness->value_b}};
  } else {
    j["certificate"] = nullptr;
  }
  j["budget"] = to_json(v.budget);
  j["explored"] = to_json(v.explored);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace vlink
