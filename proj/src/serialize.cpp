#include "qcrystal/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace qcrystal {

using nlohmann::json;
using nlohmann::ordered_json;

GraphFormat parse_format(const std::string& name) {
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw std::invalid_argument("unknown format '" + name + "' (expected dot or json)");
}

namespace {

std::string to_json(const CrystalGraph& g) {
  std::ostringstream out;
  out << "{\n  \"n\": " << g.alphabet().rank() << ",\n  \"nodes\": [";
  for (std::size_t k = 0; k < g.size(); ++k) {
    ordered_json node;
    node["id"] = k;
    node["word"] = std::vector<int>(g.node(k).letters().begin(), g.node(k).letters().end());
    node["weight"] = g.weight_of(k).coords();
    out << (k ? ",\n    " : "\n    ") << node.dump();
  }
  out << (g.size() ? "\n  ],\n" : "],\n") << "  \"edges\": [";
  const auto& edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    ordered_json edge;
    edge["src"] = edges[k].src;
    edge["dst"] = edges[k].dst;
    edge["label"] = edges[k].label.token();
    out << (k ? ",\n    " : "\n    ") << edge.dump();
  }
  out << (edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string to_dot(const CrystalGraph& g, const std::vector<std::string>& captions) {
  if (!captions.empty() && captions.size() != g.size()) {
    throw std::invalid_argument("caption count does not match node count");
  }
  std::ostringstream out;
  out << "digraph crystal {\n  node [shape=box];\n";
  for (std::size_t k = 0; k < g.size(); ++k) {
    const std::string caption = captions.empty() ? g.node(k).to_string() : captions[k];
    out << "  n" << k << " [label=\"" << dot_escape(caption) << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  n" << e.src << " -> n" << e.dst;
    if (e.label.is_odd()) {
      out << " [style=dashed, label=\"1̄\"];\n";
    } else {
      out << " [label=\"" << e.label.index() << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string where(const char* array, std::size_t k, const char* field) {
  return std::string(array) + "[" + std::to_string(k) + "]." + field;
}

template <class T>
T field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(path + key + ": missing");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(path + key + ": wrong type");
  }
}

}  // namespace

std::string serialize_graph(const CrystalGraph& g, GraphFormat format,
                            const std::vector<std::string>& captions) {
  return format == GraphFormat::json ? to_json(g) : to_dot(g, captions);
}

CrystalGraph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");

  const int n = field<int>(doc, "", "n");
  if (n < 2 || n > 255) throw ParseError("n: must be in 2..255");
  const Alphabet a(n);

  if (!doc.contains("nodes") || !doc["nodes"].is_array()) throw ParseError("nodes: expected array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("edges: expected array");

  std::vector<Word> nodes;
  const json& jnodes = doc["nodes"];
  for (std::size_t k = 0; k < jnodes.size(); ++k) {
    const std::string path = "nodes[" + std::to_string(k) + "].";
    const auto id = field<long long>(jnodes[k], path, "id");
    if (id != static_cast<long long>(k)) throw ParseError(where("nodes", k, "id") + ": expected " + std::to_string(k));
    const auto letters = field<std::vector<int>>(jnodes[k], path, "word");
    std::vector<Letter> word;
    for (int x : letters) {
      if (!a.valid_letter(x)) throw ParseError(where("nodes", k, "word") + ": letter " + std::to_string(x) + " outside 1.." + std::to_string(n));
      word.push_back(static_cast<Letter>(x));
    }
    nodes.emplace_back(std::move(word));
    const auto coords = field<std::vector<int>>(jnodes[k], path, "weight");
    if (Weight(coords) != weight(nodes.back(), a)) {
      throw ParseError(where("nodes", k, "weight") + ": does not match the word");
    }
  }

  std::vector<Edge> edges;
  const json& jedges = doc["edges"];
  for (std::size_t k = 0; k < jedges.size(); ++k) {
    const std::string path = "edges[" + std::to_string(k) + "].";
    const auto src = field<long long>(jedges[k], path, "src");
    const auto dst = field<long long>(jedges[k], path, "dst");
    const auto token = field<std::string>(jedges[k], path, "label");
    if (src < 0 || dst < 0 || static_cast<std::size_t>(src) >= nodes.size() ||
        static_cast<std::size_t>(dst) >= nodes.size()) {
      throw ParseError(path + "src/dst: node id out of range");
    }
    OperatorLabel label = OperatorLabel::odd_one();
    try {
      label = OperatorLabel::parse_token(token);
      label.validate(a);
    } catch (const std::exception& e) {
      throw ParseError(where("edges", k, "label") + ": " + e.what());
    }
    edges.push_back(Edge{static_cast<std::size_t>(src), label, static_cast<std::size_t>(dst)});
  }

  try {
    return CrystalGraph(a, std::move(nodes), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

}  // namespace qcrystal
