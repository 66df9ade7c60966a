#include "hyperspec/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hyperspec/error.hpp"

namespace hyperspec {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error(ErrorCode::parse_error, std::string("missing or non-integer field \"") + key + "\"");
  return j[key].get<int>();
}

std::vector<int> int_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, what + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::parse_error, what + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

HypergraphData parse_hypergraph_data(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "hypergraph JSON must be an object");
  HypergraphData d;
  d.m = get_int(j, "m");
  d.n = get_int(j, "n");
  if (!j.contains("edges") || !j["edges"].is_array()) throw Error(ErrorCode::parse_error, "missing array field \"edges\"");
  for (const auto& e : j["edges"]) d.edges.push_back(int_list(e, "each edge"));
  return d;
}

Hypergraph hypergraph_from_json(const std::string& text, LoadMode mode) {
  auto d = parse_hypergraph_data(text);
  if (mode == LoadMode::strict) return Hypergraph::make(d.m, d.n, std::move(d.edges));
  return Hypergraph::make_unchecked(d.m, d.n, std::move(d.edges));
}

std::string hypergraph_to_json(const Hypergraph& h, int indent) {
  json j;
  j["m"] = h.m();
  j["n"] = h.num_vertices();
  j["edges"] = h.edges();
  return j.dump(indent);
}

Partition partition_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "partition JSON must be a list of vertex-id lists");
  Partition p;
  for (const auto& part : j) p.push_back(int_list(part, "each part"));
  return p;
}

std::string partition_to_json(const Partition& p, int indent) { return json(p).dump(indent); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

}  // namespace hyperspec
