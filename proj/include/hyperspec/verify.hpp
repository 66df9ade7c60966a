#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct VerifyParams {
  std::optional<int> m;
  std::optional<int> k;
  std::optional<int> k_to;  // sweep k..k_to where the entry supports it
  std::optional<int> d;
  std::optional<int> l;
  double tol = 1e-9;                  // strictness margin
  int exhaustive_trees = 12;          // exhaustive hypertree / unicyclic generation up to this k
  int exhaustive_cyclic = 10;         // exhaustive bicyclic / tricyclic generation up to this k
  long long budget = 3'000'000;       // shapes per enumeration level
};

enum class Status { pass, fail, vacuous };
const char* to_string(Status s);

struct InstanceResult {
  std::string name;
  int m = 0;
  int n = 0;
  int k = 0;
  double lambda1 = 0;
  double residual = 0;
};

struct Assertion {
  std::string claim;
  double lhs = 0;
  double rhs = 0;
  double margin = 0;          // lhs - rhs for a claimed lhs > rhs
  bool holds = false;
  bool observation = false;   // recorded outside the stated hypotheses
};

struct VerificationReport {
  std::string theorem_id;
  std::string statement;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<InstanceResult> instances;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;
  bool hypotheses_met = true;
  Status status = Status::pass;
  std::optional<std::string> counter_name;
  std::optional<Hypergraph> counter_instance;
  double wall_seconds = 0;
};

struct TheoremInfo {
  std::string id;
  std::string statement;
  std::string defaults;
};

const std::vector<TheoremInfo>& theorem_registry();

// Throws invalid_argument for an unknown id and budget_exceeded when an
// enumeration outgrows the budget.
VerificationReport verify(const std::string& theorem_id, const VerifyParams& params = {});

// 0 pass, 1 fail, 2 hypotheses unmet.
int exit_code(const VerificationReport& r);

enum class ReportFormat { json, csv, md };
ReportFormat report_format_from_string(const std::string& s);
std::string emit_report(const VerificationReport& r, ReportFormat format);

}  // namespace hyperspec
