#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coarsekit/centred.hpp"
#include "coarsekit/coarse.hpp"
#include "coarsekit/graph.hpp"
#include "coarsekit/treedecomp.hpp"

namespace coarsekit::doc {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// Document is structurally not a decomposition document.
class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

struct Provenance {
  std::string command_line;
  std::uint64_t seed = 0;
  bool guard_tripped = false;
};

struct DecompositionDocument {
  std::string schema_version = kSchemaVersion;
  std::string mode;  // "coarse" or "classic"
  std::size_t n = 0;
  std::vector<Edge> graph_edges;
  VertexSet x;
  TreeDecomposition decomposition;
  std::optional<NodeId> hub_node;
  std::vector<std::pair<NodeId, CentreCertificate>> certificates;
  json params = json::object();
  Provenance provenance;
  json extra = json::object();  // width, realized_k, steps: informational only
};

inline json set_json(const VertexSet& s) { return json(s.ids()); }

inline json to_json(const DecompositionDocument& d) {
  json j;
  j["schema_version"] = d.schema_version;
  j["mode"] = d.mode;
  json edges = json::array();
  for (auto [u, v] : d.graph_edges) edges.push_back({u, v});
  j["graph"] = {{"n", d.n}, {"edges", edges}};
  j["x"] = set_json(d.x);
  json tree = json::array();
  for (auto [a, b] : d.decomposition.edges) tree.push_back({a, b});
  j["tree_edges"] = tree;
  json bags = json::array();
  for (const auto& b : d.decomposition.bags) bags.push_back(set_json(b));
  j["bags"] = bags;
  j["hub_node"] = d.hub_node ? json(*d.hub_node) : json(nullptr);
  json certs = json::array();
  for (const auto& [node, c] : d.certificates) {
    certs.push_back({{"node", node},
                     {"centres", set_json(c.centres)},
                     {"radius", c.radius},
                     {"mode", c.mode.name()},
                     {"size", c.size()}});
  }
  j["certificates"] = certs;
  j["params"] = d.params;
  j["provenance"] = {{"command_line", d.provenance.command_line},
                     {"seed", d.provenance.seed},
                     {"guard_tripped", d.provenance.guard_tripped}};
  for (auto& [key, value] : d.extra.items()) j[key] = value;
  return j;
}

inline json params_json(const ConstructionParams& p) {
  return {{"k", p.k},
          {"t", p.t},
          {"z_fraction_denominator", p.z_fraction_denominator},
          {"base_alpha_threshold", p.base_alpha_threshold},
          {"x_alpha_cap", p.x_alpha_cap},
          {"paper_thresholds", p.paper_thresholds},
          {"paper_d", p.paper_d},
          {"overridden", p.overridden}};
}

inline DecompositionDocument from_coarse(const Graph& g, const CentredDecomposition& cd, const ConstructionParams& p,
                                         Provenance prov) {
  DecompositionDocument d;
  d.mode = "coarse";
  d.n = g.n();
  d.graph_edges = g.edges();
  d.x = cd.x;
  d.decomposition = cd.decomposition;
  d.hub_node = cd.hub_node;
  for (NodeId i = 0; i < cd.certificates.size(); ++i) d.certificates.emplace_back(i, cd.certificates[i]);
  d.params = params_json(p);
  prov.guard_tripped = cd.guard_tripped;
  d.provenance = std::move(prov);
  d.extra["width"] = width(cd.decomposition);
  d.extra["realized_k"] = cd.realized_k;
  d.extra["radius"] = 2;
  d.extra["separator_weighting"] = "indicator";
  return d;
}

inline DecompositionDocument from_classic(const Graph& g, const ClassicBuildResult& r, Provenance prov) {
  DecompositionDocument d;
  d.mode = "classic";
  d.n = g.n();
  d.graph_edges = g.edges();
  d.decomposition = *r.decomposition;
  d.params = {{"max_sep_size", r.max_sep_size}, {"tracked_cap", r.tracked_cap}, {"width_bound", r.width_bound}};
  d.provenance = std::move(prov);
  d.extra["width"] = width(*r.decomposition);
  d.extra["separator_weighting"] = "indicator";
  return d;
}

namespace detail {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("field \"") + key + "\": " + e.what());
  }
}

inline VertexSet set_field(const json& j, const char* key) { return VertexSet(field<std::vector<Vertex>>(j, key)); }

}  // namespace detail

inline DecompositionDocument parse_document(const json& j) {
  using detail::field;
  DecompositionDocument d;
  d.schema_version = field<std::string>(j, "schema_version");
  if (d.schema_version != kSchemaVersion) throw SchemaError("unsupported schema_version " + d.schema_version);
  d.mode = field<std::string>(j, "mode");
  const json graph = field<json>(j, "graph");
  d.n = field<std::size_t>(graph, "n");
  for (const auto& e : field<std::vector<std::array<Vertex, 2>>>(graph, "edges")) d.graph_edges.emplace_back(e[0], e[1]);
  d.x = j.contains("x") ? detail::set_field(j, "x") : VertexSet{};
  for (const auto& e : field<std::vector<std::array<NodeId, 2>>>(j, "tree_edges")) d.decomposition.connect(e[0], e[1]);
  for (const auto& b : field<std::vector<std::vector<Vertex>>>(j, "bags")) d.decomposition.add_bag(VertexSet(b));
  if (j.contains("hub_node") && !j.at("hub_node").is_null()) d.hub_node = field<NodeId>(j, "hub_node");
  for (const auto& c : field<std::vector<json>>(j, "certificates")) {
    const NodeId node = field<NodeId>(c, "node");
    if (node >= d.decomposition.size()) throw SchemaError("certificate for nonexistent node " + std::to_string(node));
    CentreCertificate cert;
    cert.centres = detail::set_field(c, "centres");
    cert.radius = field<std::size_t>(c, "radius");
    const auto mode = field<std::string>(c, "mode");
    if (mode == "induced") {
      cert.mode = CentreMode::induced_on(d.decomposition.bags[node]);
    } else if (mode != "ambient") {
      throw SchemaError("unknown certificate mode " + mode);
    }
    cert.covered = d.decomposition.bags[node];
    d.certificates.emplace_back(node, std::move(cert));
  }
  if (d.hub_node && *d.hub_node >= d.decomposition.size()) throw SchemaError("hub_node out of range");
  d.params = j.contains("params") ? j.at("params") : json::object();
  if (j.contains("provenance")) {
    const json& p = j.at("provenance");
    d.provenance.command_line = p.value("command_line", "");
    d.provenance.seed = p.value("seed", std::uint64_t{0});
    d.provenance.guard_tripped = p.value("guard_tripped", false);
  }
  for (const char* key : {"width", "realized_k", "radius", "separator_weighting"})
    if (j.contains(key)) d.extra[key] = j.at(key);
  return d;
}

enum Check : unsigned { kValid = 1, kCentred = 2, kHub = 4 };

/// One human-readable line per violated requirement; empty means every requested check passed.
inline std::vector<std::string> verify(const Graph& g, const DecompositionDocument& d, unsigned checks) {
  std::vector<std::string> out;
  if (d.n != g.n() || Graph(d.n, d.graph_edges) != g) {
    out.push_back("graph: document graph differs from the supplied graph");
    return out;
  }
  if (checks & kValid) {
    for (const auto& v : validate(g, d.decomposition)) out.push_back("valid: " + to_string(v.kind) + ": " + v.message);
  }
  if (checks & kCentred) {
    std::vector<char> has(d.decomposition.size(), 0);
    for (const auto& [node, cert] : d.certificates) {
      has[node] = 1;
      if (!validate_certificate(g, cert)) {
        out.push_back("centred: node " + std::to_string(node) + ": bag not within radius " +
                      std::to_string(cert.radius) + " of its " + std::to_string(cert.size()) + " centres");
      }
    }
    for (NodeId i = 0; i < has.size(); ++i)
      if (!has[i]) out.push_back("centred: node " + std::to_string(i) + " has no certificate");
  }
  if (checks & kHub) {
    if (!d.hub_node) {
      out.push_back("hub: document has no hub node");
    } else if (!(d.x.empty() || d.x.ids().back() < g.n())) {
      out.push_back("hub: x contains nonexistent vertices");
    } else {
      const VertexSet missing = ball(g, d.x, 1) - d.decomposition.bags[*d.hub_node];
      if (!missing.empty()) {
        std::ostringstream msg;
        msg << "hub: hub bag misses N[X] vertices " << missing;
        out.push_back(msg.str());
      }
    }
  }
  return out;
}

}  // namespace coarsekit::doc
