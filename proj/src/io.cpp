#include "tiltforge/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tiltforge/errors.hpp"

namespace tiltforge {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices();
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows())
    j["arrows"].push_back({{"id", a.id}, {"from", q.label(a.source)}, {"to", q.label(a.target)}});
  return j;
}

Quiver quiver_from_json(const Json& j) {
  std::vector<std::string> vertices;
  const auto& vs = field(j, "vertices");
  if (!vs.is_array()) throw InputError("'vertices' must be an array");
  for (const auto& v : vs) vertices.push_back(as_string(v, "vertex label"));
  std::vector<Arrow> arrows;
  std::set<std::string> used;
  const auto& as = field(j, "arrows");
  if (!as.is_array()) throw InputError("'arrows' must be an array");
  for (const auto& a : as)
    if (a.contains("id")) used.insert(as_string(a.at("id"), "arrow id"));
  std::size_t next = 0;
  Quiver probe(vertices, {});
  for (const auto& a : as) {
    std::string id;
    if (a.contains("id")) {
      id = a.at("id").get<std::string>();
    } else {
      do id = "a" + std::to_string(next++);
      while (used.count(id));
      used.insert(id);
    }
    arrows.push_back({id, probe.vertex_index(as_string(field(a, "from"), "arrow source")),
                      probe.vertex_index(as_string(field(a, "to"), "arrow target"))});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

Json vertex_to_json(const ClusterModel& m, const CVertex& v) {
  return {{"orbit", m.seed().label(v.rep.orbit)}, {"offset", v.rep.offset}};
}

CVertex vertex_from_json(const ClusterModel& m, const Json& j) {
  const auto orbit = m.seed().vertex_index(as_string(field(j, "orbit"), "orbit"));
  const auto& off = field(j, "offset");
  if (!off.is_number_integer()) throw InputError("offset must be an integer");
  const int offset = off.get<int>();
  if (std::abs(offset) > 10000) throw InputError("offset out of range");
  return m.canonicalize({orbit, offset});
}

Json distribution_to_json(const ClusterModel& m, const CTObject& t) {
  Json j;
  j["type"] = m.derived().type().name();
  j["seed_vertices"] = m.seed().vertices();
  j["seed_orientation"] = Json::array();
  for (const auto& a : m.seed().arrows()) j["seed_orientation"].push_back({m.seed().label(a.source), m.seed().label(a.target)});
  j["summands"] = Json::object();
  for (std::size_t i = 0; i < t.size(); ++i) j["summands"][t.labels[i]] = vertex_to_json(m, t.summands[i]);
  return j;
}

Distribution distribution_from_json(const Json& j) {
  const auto& orient = field(j, "seed_orientation");
  if (!orient.is_array()) throw InputError("'seed_orientation' must be an array");
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> arrows;
  auto add_vertex = [&](const std::string& v) {
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
  };
  if (j.contains("seed_vertices"))
    for (const auto& v : j.at("seed_vertices")) add_vertex(as_string(v, "seed vertex"));
  for (const auto& a : orient) {
    if (!a.is_array() || a.size() != 2) throw InputError("seed arrows must be [from, to] pairs");
    arrows.push_back({as_string(a[0], "seed vertex"), as_string(a[1], "seed vertex")});
    add_vertex(arrows.back().first);
    add_vertex(arrows.back().second);
  }
  Quiver seed = Quiver::from_pairs(vertices, arrows);
  ClusterModel m = ClusterModel::build(seed);
  if (j.contains("type") && as_string(j.at("type"), "type") != m.derived().type().name())
    throw InputError("declared type does not match the seed orientation");
  CTObject t;
  const auto& summands = field(j, "summands");
  if (!summands.is_object()) throw InputError("'summands' must be an object");
  for (const auto& [label, v] : summands.items()) {
    t.labels.push_back(label);
    t.summands.push_back(vertex_from_json(m, v));
  }
  if (!is_cluster_tilting(m, t.summands)) throw InputError("summands do not form a cluster-tilting object");
  return {std::move(m), std::move(t)};
}

Json slice_to_json(const ClusterModel& m, const LocalSlice& s) {
  Json j = Json::array();
  for (const auto& v : s.members) j.push_back(vertex_to_json(m, v));
  return j;
}

LocalSlice slice_from_json(const ClusterModel& m, const Json& j) {
  if (!j.is_array()) throw InputError("slice must be an array of vertices");
  std::vector<CVertex> members;
  for (const auto& v : j) members.push_back(vertex_from_json(m, v));
  return make_slice(std::move(members));
}

Json arrow_set_to_json(const Quiver& q, const AdmissibleSet& s) {
  Json j = Json::array();
  for (auto a : s.arrows) j.push_back(q.arrows().at(a).id);
  return j;
}

AdmissibleSet arrow_set_from_json(const Quiver& q, const Json& j) {
  if (!j.is_array()) throw InputError("relations must be an array of arrow ids");
  AdmissibleSet s;
  for (const auto& id : j) {
    auto a = q.find_arrow(as_string(id, "arrow id"));
    if (!a) throw InputError("unknown arrow id '" + id.get<std::string>() + "'");
    s.arrows.push_back(*a);
  }
  std::sort(s.arrows.begin(), s.arrows.end());
  return s;
}

Json result_to_json(const AlgorithmResult& r) {
  Json j;
  j["quiver"] = quiver_to_json(r.quiver);
  j["maximal_tilted"] = Json::array();
  for (const auto& p : r.presentations)
    j["maximal_tilted"].push_back({{"relations", arrow_set_to_json(r.quiver, p.relations)}, {"jump_path", p.jump_path}});
  j["jump_graph"] = Json::array();
  for (const auto& e : r.edges) j["jump_graph"].push_back({{"from", e.from}, {"to", e.to}, {"cell", e.cell}});
  return j;
}

AlgorithmResult result_from_json(const Json& j) {
  AlgorithmResult r;
  r.quiver = quiver_from_json(field(j, "quiver"));
  for (const auto& p : field(j, "maximal_tilted")) {
    TiltedPresentation tp;
    tp.relations = arrow_set_from_json(r.quiver, field(p, "relations"));
    tp.jump_path = field(p, "jump_path").get<std::vector<std::vector<std::string>>>();
    r.presentations.push_back(std::move(tp));
  }
  if (j.contains("jump_graph"))
    for (const auto& e : j.at("jump_graph"))
      r.edges.push_back({field(e, "from").get<std::size_t>(), field(e, "to").get<std::size_t>(),
                         field(e, "cell").get<std::vector<std::string>>()});
  return r;
}

Json report_to_json(const OracleReport& r) {
  Json j;
  j["type"] = r.type;
  j["quiver"] = quiver_to_json(r.quiver);
  j["slice_count"] = r.slice_count;
  j["class_count"] = r.class_count;
  j["maximal_tilted"] = Json::array();
  for (const auto& s : r.maximal_tilted) j["maximal_tilted"].push_back(arrow_set_to_json(r.quiver, s));
  j["enumeration_matches"] = r.enumeration_matches;
  j["classes_match_annihilators"] = r.classes_match_annihilators;
  j["arrow_on_cycle_matches"] = r.arrow_on_cycle_matches;
  j["rightward_matches"] = r.rightward_matches;
  j["leftward_matches"] = r.leftward_matches;
  j["rightmost_unique"] = r.rightmost_unique;
  j["ok"] = r.ok();
  return j;
}

OracleReport report_from_json(const Json& j) {
  OracleReport r;
  r.type = field(j, "type").get<std::string>();
  r.quiver = quiver_from_json(field(j, "quiver"));
  r.slice_count = field(j, "slice_count").get<std::size_t>();
  r.class_count = field(j, "class_count").get<std::size_t>();
  for (const auto& s : field(j, "maximal_tilted")) r.maximal_tilted.push_back(arrow_set_from_json(r.quiver, s));
  r.enumeration_matches = field(j, "enumeration_matches").get<bool>();
  r.classes_match_annihilators = field(j, "classes_match_annihilators").get<bool>();
  r.arrow_on_cycle_matches = field(j, "arrow_on_cycle_matches").get<bool>();
  r.rightward_matches = field(j, "rightward_matches").get<bool>();
  r.leftward_matches = field(j, "leftward_matches").get<bool>();
  r.rightmost_unique = field(j, "rightmost_unique").get<bool>();
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string presentation_dot(const Quiver& q, const AdmissibleSet& s, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  out << "  node [shape=circle];\n";
  for (const auto& v : q.vertices()) out << "  " << dot_quote(v) << ";\n";
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    out << "  " << dot_quote(q.label(arr.source)) << " -> " << dot_quote(q.label(arr.target)) << " [label="
        << dot_quote(arr.id);
    if (std::binary_search(s.arrows.begin(), s.arrows.end(), a)) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string ar_quiver_dot(const ClusterModel& m, const CTObject* t, const std::vector<CVertex>& highlight,
                          const std::string& name) {
  const auto& z = m.derived();
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  out << "  rankdir=LR;\n  node [shape=ellipse, fontsize=10];\n";
  for (const auto& v : m.vertices()) {
    std::string label = m.describe(v);
    std::vector<std::string> attrs{"label=" + dot_quote(label), "pos=" + dot_quote(std::to_string(z.position(v.rep)) + "," +
                                                                                     std::to_string(v.rep.orbit) + "!")};
    if (t) {
      for (std::size_t i = 0; i < t->size(); ++i) {
        if (t->summands[i] == v) {
          attrs[0] = "label=" + dot_quote("T" + t->labels[i] + " " + label);
          attrs.push_back("shape=box");
        }
        if (m.tau(t->summands[i]) == v) attrs.push_back("color=gray");
      }
    }
    if (std::find(highlight.begin(), highlight.end(), v) != highlight.end())
      attrs.push_back("style=filled, fillcolor=lightgray");
    out << "  " << dot_quote(m.describe(v)) << " [";
    for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
    out << "];\n";
  }
  for (const auto& v : m.vertices())
    for (const auto& w : m.successors(v)) out << "  " << dot_quote(m.describe(v)) << " -> " << dot_quote(m.describe(w)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tiltforge
