#pragma once

#include <string>
#include <vector>

#include "hyperspec/equitable.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// {"m": int, "n": int, "edges": [[int, ...], ...]}, 0-based ids.
struct HypergraphData {
  int m = 0;
  int n = 0;
  std::vector<Edge> edges;
};

// Throws parse_error on malformed JSON or missing fields.
HypergraphData parse_hypergraph_data(const std::string& text);

// Strict: full validation on load.  Lenient: only sizes and ranges are
// checked, so non-linear or non-simple input can be inspected.
enum class LoadMode { strict, lenient };
Hypergraph hypergraph_from_json(const std::string& text, LoadMode mode = LoadMode::strict);
std::string hypergraph_to_json(const Hypergraph& h, int indent = -1);

// A list of vertex-id lists.
Partition partition_from_json(const std::string& text);
std::string partition_to_json(const Partition& p, int indent = -1);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hyperspec
