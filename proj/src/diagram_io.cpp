#include "knotred/diagram_io.hpp"

#include <sstream>

namespace knotred {

namespace {

constexpr const char* kFormatTag = "knotred-diagram";

constexpr const char* kSignConvention =
    "right-handed: slots counterclockwise; with the under strand pointing up, "
    "positive iff the over strand points right";

Json slot_ref_json(const SlotRef& r) { return Json{{"crossing", r.crossing}, {"slot", r.slot}}; }

SlotRef slot_ref_from(const Json& j) { return SlotRef{j.at("crossing").get<int>(), j.at("slot").get<int>()}; }

}  // namespace

Json diagram_to_json(const Diagram& d) {
  Json j;
  j["format"] = kFormatTag;
  j["version"] = 1;
  j["sign_convention"] = kSignConvention;
  Json comps = Json::array();
  for (size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    comps.push_back(Json{{"id", i}, {"role", c.role}, {"label", c.label}, {"orientation", 1}, {"arcs", c.arcs}});
  }
  j["components"] = std::move(comps);
  Json xs = Json::array();
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& c = d.crossings[i];
    Json slots = Json::array();
    for (const auto& e : c.slots) slots.push_back(Json{{"arc", e.arc}, {"end", e.head ? "head" : "tail"}});
    xs.push_back(Json{{"id", i}, {"sign", c.sign}, {"slots", std::move(slots)}, {"over_slots", c.over_slots}});
  }
  j["crossings"] = std::move(xs);
  Json arcs = Json::array();
  for (size_t i = 0; i < d.arcs.size(); ++i) {
    const auto& a = d.arcs[i];
    arcs.push_back(Json{{"id", i}, {"component", a.component}, {"tail", slot_ref_json(a.tail)},
                        {"head", slot_ref_json(a.head)}});
  }
  j["arcs"] = std::move(arcs);
  if (!d.geometry.empty()) {
    Json geo = Json::array();
    for (const auto& g : d.geometry) {
      Json pts = Json::array();
      for (const auto& p : g.points) pts.push_back(Json::array({p.x, p.y}));
      geo.push_back(Json{{"points", std::move(pts)}, {"levels", g.levels}});
    }
    j["geometry"] = std::move(geo);
  }
  return j;
}

Diagram diagram_from_json(const Json& j) {
  Diagram d;
  try {
    if (j.at("format").get<std::string>() != kFormatTag) throw DiagramError("unknown diagram format");
    for (const auto& c : j.at("components")) {
      Component comp;
      comp.role = c.value("role", "");
      comp.label = c.value("label", "");
      comp.arcs = c.at("arcs").get<std::vector<int>>();
      d.components.push_back(std::move(comp));
    }
    for (const auto& x : j.at("crossings")) {
      Crossing c;
      c.sign = x.at("sign").get<int>();
      const auto& slots = x.at("slots");
      if (slots.size() != 4) throw DiagramError("crossing must have 4 slots");
      for (int s = 0; s < 4; ++s) {
        const std::string end = slots[s].at("end").get<std::string>();
        if (end != "head" && end != "tail") throw DiagramError("slot end must be head or tail");
        c.slots[s] = ArcEnd{slots[s].at("arc").get<int>(), end == "head"};
      }
      const auto over = x.at("over_slots").get<std::vector<int>>();
      if (over.size() != 2) throw DiagramError("over_slots must have 2 entries");
      c.over_slots = {over[0], over[1]};
      d.crossings.push_back(c);
    }
    for (const auto& a : j.at("arcs"))
      d.arcs.push_back(Arc{a.at("component").get<int>(), slot_ref_from(a.at("tail")), slot_ref_from(a.at("head"))});
    if (j.contains("geometry")) {
      for (const auto& g : j.at("geometry")) {
        PathGeometry pg;
        for (const auto& p : g.at("points")) pg.points.push_back(Point{p.at(0).get<long long>(), p.at(1).get<long long>()});
        pg.levels = g.at("levels").get<std::vector<int>>();
        d.geometry.push_back(std::move(pg));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DiagramError(std::string("malformed diagram JSON: ") + e.what());
  }
  if (!d.geometry.empty() && d.geometry.size() != d.components.size())
    throw DiagramError("geometry must have one entry per component");
  const ValidationReport r = validate_diagram(d);
  if (!r.ok) throw DiagramError("invalid diagram: " + r.failure);
  return d;
}

std::string export_json(const Diagram& d) { return diagram_to_json(d).dump(1) + "\n"; }

Diagram import_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DiagramError(std::string("malformed diagram JSON: ") + e.what());
  }
  return diagram_from_json(j);
}

std::string export_pd(const Diagram& d) {
  std::ostringstream os;
  for (const auto& c : d.crossings) {
    int start = 0;
    for (int s = 0; s < 4; ++s)
      if (!c.is_over_slot(s) && c.slots[s].head) start = s;
    os << "X(";
    for (int k = 0; k < 4; ++k) {
      if (k) os << ',';
      os << c.slots[(start + k) % 4].arc + 1;
    }
    os << ")\n";
  }
  for (size_t i = 0; i < d.components.size(); ++i)
    if (d.components[i].arcs.empty()) os << "Loop(" << i + 1 << ")\n";
  return os.str();
}

std::string export_gauss(const Diagram& d) {
  std::ostringstream os;
  const GaussCode code = d.to_gauss();
  for (const auto& comp : code.components) {
    bool first = true;
    for (const auto& v : comp.visits) {
      if (!first) os << ' ';
      first = false;
      os << (v.over ? 'O' : 'U') << v.crossing + 1 << (code.signs[v.crossing] > 0 ? '+' : '-');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace knotred
