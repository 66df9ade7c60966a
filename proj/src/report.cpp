#include <cstdio>
#include <sstream>

#include "hyperspec/error.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/verify.hpp"
#include "json.hpp"

namespace hyperspec {

namespace {

using nlohmann::ordered_json;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_json(const VerificationReport& r) {
  ordered_json j;
  j["theorem_id"] = r.theorem_id;
  j["statement"] = r.statement;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["status"] = to_string(r.status);
  j["hypotheses_met"] = r.hypotheses_met;
  j["wall_seconds"] = r.wall_seconds;
  j["notes"] = r.notes;
  ordered_json asserts = ordered_json::array();
  for (const Assertion& a : r.assertions)
    asserts.push_back({{"claim", a.claim},
                       {"lhs", a.lhs},
                       {"rhs", a.rhs},
                       {"margin", a.margin},
                       {"holds", a.holds},
                       {"observation", a.observation}});
  j["assertions"] = asserts;
  ordered_json inst = ordered_json::array();
  for (const InstanceResult& i : r.instances)
    inst.push_back({{"name", i.name},
                    {"m", i.m},
                    {"n", i.n},
                    {"k", i.k},
                    {"lambda1", i.lambda1},
                    {"residual", i.residual}});
  j["instances"] = inst;
  if (r.counter_instance) {
    j["counter_instance"] = {{"name", r.counter_name.value_or("")},
                             {"hypergraph", ordered_json::parse(hypergraph_to_json(*r.counter_instance, -1))}};
  } else {
    j["counter_instance"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "theorem_id,name,m,n,k,lambda1,residual\n";
  for (const InstanceResult& i : r.instances)
    out << r.theorem_id << "," << csv_field(i.name) << "," << i.m << "," << i.n << "," << i.k << "," << num(i.lambda1)
        << "," << num(i.residual) << "\n";
  return out.str();
}

std::string to_md(const VerificationReport& r) {
  std::ostringstream out;
  out << "# " << r.theorem_id << "\n\n" << r.statement << "\n\n";
  out << "- status: " << to_string(r.status) << "\n";
  for (const auto& [k, v] : r.parameters) out << "- " << k << ": " << v << "\n";
  out << "- instances: " << r.instances.size() << "\n";
  out << "- wall time: " << num(r.wall_seconds) << " s\n";
  for (const std::string& n : r.notes) out << "- note: " << n << "\n";
  out << "\n| claim | lhs | rhs | margin | holds |\n|---|---|---|---|---|\n";
  for (const Assertion& a : r.assertions)
    out << "| " << a.claim << " | " << num(a.lhs) << " | " << num(a.rhs) << " | " << num(a.margin) << " | "
        << (a.holds ? "yes" : "no") << (a.observation ? " (observed)" : "") << " |\n";
  if (r.counter_instance)
    out << "\nCounter-instance " << r.counter_name.value_or("") << ":\n\n```\n"
        << hypergraph_to_json(*r.counter_instance, -1) << "\n```\n";
  return out.str();
}

}  // namespace

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "md") return ReportFormat::md;
  throw Error(ErrorCode::invalid_argument, "unknown report format '" + s + "'");
}

std::string emit_report(const VerificationReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return to_json(r);
    case ReportFormat::csv: return to_csv(r);
    case ReportFormat::md: return to_md(r);
  }
  return {};
}

}  // namespace hyperspec
