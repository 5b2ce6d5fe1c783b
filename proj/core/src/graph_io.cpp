#include "hive/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace hive {

BuiltGraph build_graph(const GraphInput& input) {
  BuiltGraph out;
  std::unordered_map<std::string, VertexId> index;

  auto add_vertex = [&](const std::string& name) {
    auto [it, inserted] = index.try_emplace(name, static_cast<VertexId>(out.names.size()));
    if (inserted) out.names.push_back(name);
    return it->second;
  };

  if (input.vertices) {
    for (const auto& name : *input.vertices) add_vertex(name);
  }

  std::set<Edge> edges;
  for (const auto& [a, b] : input.edges) {
    if (input.vertices && (!index.contains(a) || !index.contains(b))) {
      throw HiveError("edge (" + a + ", " + b + ") references an undeclared vertex");
    }
    const VertexId u = add_vertex(a);
    const VertexId v = add_vertex(b);
    if (u == v) {
      ++out.stats.self_loops_dropped;
      continue;
    }
    if (!edges.insert(Edge{std::min(u, v), std::max(u, v)}).second) {
      ++out.stats.duplicate_edges_dropped;
    }
  }

  std::vector<std::string> labels;
  labels.reserve(out.names.size());
  for (const auto& name : out.names) {
    auto it = input.labels.find(name);
    labels.push_back(it != input.labels.end() ? it->second : name);
  }
  out.graph = Graph(std::move(labels), {edges.begin(), edges.end()});

  if (input.groups) {
    std::set<long long> values;
    for (const auto& name : out.names) {
      auto it = input.groups->find(name);
      if (it == input.groups->end()) {
        throw HiveError("partition hint is missing vertex '" + name + "'");
      }
      values.insert(it->second);
    }
    std::map<long long, AxisId> dense;
    for (long long value : values) dense.emplace(value, static_cast<AxisId>(dense.size()));
    std::vector<AxisId> membership;
    membership.reserve(out.names.size());
    for (const auto& name : out.names) membership.push_back(dense.at(input.groups->at(name)));
    out.partition = Partition(std::move(membership));
  }
  return out;
}

GraphInput parse_edge_list(std::istream& in) {
  GraphInput input;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw HiveError("edge list line " + std::to_string(line_no) +
                      ": expected exactly two vertex labels");
    }
    input.edges.emplace_back(std::move(a), std::move(b));
  }
  return input;
}

namespace {

std::string json_name(const nlohmann::json& value, const char* what) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw HiveError(std::string("graph JSON: ") + what + " must be a string or integer");
}

}  // namespace

GraphInput parse_graph_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw HiveError(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw HiveError("graph JSON: missing \"edges\" array");
  }

  GraphInput input;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw HiveError("graph JSON: \"vertices\" must be an array");
    std::vector<std::string> vertices;
    std::map<std::string, long long> groups;
    bool any_group = false;
    for (const auto& v : doc["vertices"]) {
      if (!v.is_object() || !v.contains("id")) {
        throw HiveError("graph JSON: every vertex needs an \"id\"");
      }
      auto id = json_name(v["id"], "vertex id");
      if (v.contains("label")) {
        if (!v["label"].is_string()) throw HiveError("graph JSON: label must be a string");
        input.labels[id] = v["label"].get<std::string>();
      }
      if (v.contains("group") && !v["group"].is_null()) {
        if (!v["group"].is_number_integer()) {
          throw HiveError("graph JSON: group of '" + id + "' must be an integer");
        }
        groups[id] = v["group"].get<long long>();
        any_group = true;
      }
      vertices.push_back(std::move(id));
    }
    input.vertices = std::move(vertices);
    if (any_group) input.groups = std::move(groups);
  }

  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw HiveError("graph JSON: every edge must be a [u, v] pair");
    }
    input.edges.emplace_back(json_name(e[0], "edge endpoint"), json_name(e[1], "edge endpoint"));
  }
  return input;
}

BuiltGraph load_graph(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw HiveError("cannot open '" + path + "'");
  return build_graph(format == GraphFormat::kJson ? parse_graph_json(in) : parse_edge_list(in));
}

GraphFormat guess_format(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    auto ext = path.substr(dot);
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".json") return GraphFormat::kJson;
  }
  return GraphFormat::kEdgeList;
}

}  // namespace hive
