#pragma once

// Graph serialization.  JSON round-trips exactly; DOT is write-only.
//
// JSON schema:
//   { "n": int,
//     "nodes": [ {"id": int, "word": [int...], "weight": [int...]} ... ],
//     "edges": [ {"src": id, "dst": id, "label": "1".."n-1" | "1bar"} ... ] }

#include <stdexcept>
#include <string>
#include <vector>

#include "qcrystal/crystal_graph.hpp"

namespace qcrystal {

enum class GraphFormat { dot, json };

GraphFormat parse_format(const std::string& name);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `captions`, if non-empty, replaces the "1⊗2" node captions in DOT output.
std::string serialize_graph(const CrystalGraph& g, GraphFormat format,
                            const std::vector<std::string>& captions = {});

/// Throws ParseError with the offending line or field.
CrystalGraph parse_graph(const std::string& text);

}  // namespace qcrystal
