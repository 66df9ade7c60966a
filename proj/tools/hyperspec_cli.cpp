#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperspec/closed_forms.hpp"
#include "hyperspec/enumerate.hpp"
#include "hyperspec/equitable.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/transforms.hpp"
#include "hyperspec/verify.hpp"

using namespace hyperspec;
using nlohmann::ordered_json;

namespace {

// "2:3,4:1" -> {2:3, 4:1}
AttachmentSpec parse_spec(const std::string& text) {
  AttachmentSpec spec;
  if (text.empty()) return spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::invalid_argument, "expected pos:count in '" + item + "'");
    try {
      spec[std::stoi(item.substr(0, colon))] += std::stoi(item.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::invalid_argument, "expected pos:count in '" + item + "'");
    }
  }
  return spec;
}

template <std::size_t N>
std::array<int, N> spec_array(const AttachmentSpec& spec, const char* family) {
  std::array<int, N> out{};
  for (auto [pos, c] : spec) {
    if (pos < 1 || pos > int(N))
      throw Error(ErrorCode::invalid_argument,
                  std::string(family) + " positions run 1.." + std::to_string(N) + ", got " + std::to_string(pos));
    out[pos - 1] = c;
  }
  return out;
}

// "6..12" or "6"
std::pair<int, std::optional<int>> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoi(text), std::nullopt};
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::invalid_argument, "expected an integer or a range a..b, got '" + text + "'");
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
  else
    write_text_file(out, text);
}

Hypergraph load(const std::string& path, bool lenient = false) {
  std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_text_file(path);
  return hypergraph_from_json(text, lenient ? LoadMode::lenient : LoadMode::strict);
}

ordered_json poly_json(const IntPoly& p) {
  ordered_json j;
  j["ascending"] = p.coefficient_strings();
  j["text"] = p.to_string();
  return j;
}

ordered_json bounds_json(const BoundsReport& b) {
  ordered_json j;
  j["formula_id"] = b.formula_id;
  ordered_json in = ordered_json::object();
  for (const auto& [k, v] : b.inputs) in[k] = v;
  j["inputs"] = in;
  j["applicable"] = b.applicable;
  if (!b.note.empty()) j["note"] = b.note;
  j["scaled"] = b.scaled;
  j["lower"] = b.lower ? ordered_json(*b.lower) : ordered_json(nullptr);
  j["upper"] = b.upper ? ordered_json(*b.upper) : ordered_json(nullptr);
  return j;
}

ordered_json poly_root_json(const PolyRoot& r) {
  ordered_json j;
  j["poly"] = poly_json(r.poly);
  j["root"] = r.root;
  j["radius"] = r.radius;
  j["bounds"] = bounds_json(r.bounds);
  return j;
}

ordered_json matrix_json(const std::vector<std::vector<long long>>& rows) {
  ordered_json j = ordered_json::array();
  for (const auto& r : rows) j.push_back(r);
  return j;
}

struct GenOptions {
  std::string family;
  int m = 3;
  int l = 0;
  int d = 0;
  int k = 0;
  std::string spec;
  std::string out;
};

Hypergraph generate(const GenOptions& o) {
  AttachmentSpec spec = parse_spec(o.spec);
  const std::string& f = o.family;
  if (f == "path") return loose_path(o.m, o.l);
  if (f == "cycle") return loose_cycle(o.m, o.l);
  if (f == "star") return hyperstar(o.m, o.k);
  if (f == "td") return hypertree_Td(o.m, o.d, spec);
  if (f == "uc") return unicyclic_UC(o.m, o.l, spec);
  if (f == "ulc") return unicyclic_UlC(o.m, o.l, spec.count(1) ? spec.at(1) : 0);
  if (f == "bc") return bicyclic_BC(o.m, spec.count(1) ? spec.at(1) : 0);
  if (f == "b2c") return bicyclic_B2C(o.m, spec.count(1) ? spec.at(1) : 0, spec.count(2) ? spec.at(2) : 0);
  if (f == "t1c") return tricyclic_T1C(o.m, spec_array<4>(spec, "t1c"));
  if (f == "t2c") return tricyclic_T2C(o.m, spec_array<7>(spec, "t2c"));
  throw Error(ErrorCode::invalid_argument, "unknown family '" + f + "'");
}

ordered_json validation_json(const ValidationReport& r) {
  ordered_json j;
  j["valid"] = r.valid();
  j["uniform"] = r.uniform;
  j["linear"] = r.linear;
  j["simple"] = r.simple;
  j["no_isolated"] = r.no_isolated;
  j["connected"] = r.connected;
  ordered_json v = ordered_json::array();
  for (const auto& x : r.violations) {
    ordered_json e;
    e["kind"] = to_string(x.kind);
    e["edges"] = x.edges;
    if (x.vertex >= 0) e["vertex"] = x.vertex;
    e["message"] = x.message;
    v.push_back(e);
  }
  j["violations"] = v;
  return j;
}

ordered_json cyclicity_json(const CyclicityReport& c, const std::vector<LooseCycle>& cycles) {
  ordered_json j;
  j["classification"] = to_string(c.classification);
  j["loose_cycle_count"] = c.loose_cycle_count;
  j["cyclomatic_number"] = c.cyclomatic_number;
  j["n"] = c.n;
  j["expected_n"] = c.expected_n;
  j["identity_consistent"] = c.identity_consistent;
  if (!c.note.empty()) j["note"] = c.note;
  ordered_json cs = ordered_json::array();
  for (const auto& cy : cycles) cs.push_back({{"core_vertices", cy.core_vertices}, {"edges", cy.edges}});
  j["cycles"] = cs;
  return j;
}

SpreadPlan parse_plan(const std::string& text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array()) throw Error(ErrorCode::parse_error, "spread plan must be a JSON array");
  SpreadPlan plan;
  try {
    for (const auto& g : j)
      plan.push_back({g.at("source").get<Vertex>(), g.at("edges").get<std::vector<int>>(),
                      g.at("targets").get<std::vector<Vertex>>()});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("bad spread plan: ") + e.what());
  }
  return plan;
}

// "3:7" -> edge 3 leaves vertex 7
EdgeMove parse_move(const std::string& text) {
  auto spec = parse_spec(text);
  if (spec.size() != 1) throw Error(ErrorCode::invalid_argument, "expected edge:from, got '" + text + "'");
  return {spec.begin()->first, spec.begin()->second};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral extremal analysis of linear uniform hypergraphs"};
  app.require_subcommand(1);
  int indent = -1;
  app.add_option("--indent", indent, "JSON indentation (-1 for compact)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named family instance as JSON");
  gen_cmd->add_option("family", gen.family, "path|cycle|star|td|uc|ulc|bc|b2c|t1c|t2c")->required();
  gen_cmd->add_option("--m", gen.m, "edge size");
  gen_cmd->add_option("--l", gen.l, "path or cycle length");
  gen_cmd->add_option("--d", gen.d, "diameter of T_d");
  gen_cmd->add_option("--k", gen.k, "edge count of the hyperstar");
  gen_cmd->add_option("--spec", gen.spec, "pendant edges as pos:count,...");
  gen_cmd->add_option("--out", gen.out, "output file");

  std::string input, out;
  double tol = default_tolerance;
  bool with_vector = false;
  auto* radius_cmd = app.add_subcommand("radius", "Spectral radius and Perron vector");
  radius_cmd->add_option("input", input, "hypergraph JSON ('-' for stdin)")->required();
  radius_cmd->add_option("--tol", tol, "residual tolerance");
  radius_cmd->add_flag("--vector", with_vector, "include the Perron vector");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Full adjacency spectrum");
  spectrum_cmd->add_option("input", input)->required();

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Exact det(xI - (m-1)A)");
  charpoly_cmd->add_option("input", input)->required();

  auto* validate_cmd = app.add_subcommand("validate", "Validate and classify a hypergraph");
  validate_cmd->add_option("input", input)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Loose cycles and cyclicity class");
  classify_cmd->add_option("input", input)->required();

  std::string op, plan_file;
  int edge = -1;
  std::optional<int> at, to;
  std::vector<std::string> moves;
  auto* transform_cmd = app.add_subcommand("transform", "Edge release, move or spread");
  transform_cmd->add_option("op", op, "release|move|spread")->required();
  transform_cmd->add_option("input", input)->required();
  transform_cmd->add_option("--edge", edge, "edge index to release");
  transform_cmd->add_option("--at", at, "release vertex (default: largest Perron entry)");
  transform_cmd->add_option("--move", moves, "edge:from pairs");
  transform_cmd->add_option("--to", to, "target vertex of a move");
  transform_cmd->add_option("--plan", plan_file, "spread plan JSON");
  transform_cmd->add_option("--out", out, "write the transformed hypergraph here");

  std::string partition_file;
  bool refine = false;
  auto* quotient_cmd = app.add_subcommand("quotient", "Equitable partition and quotient matrix");
  quotient_cmd->add_option("input", input)->required();
  quotient_cmd->add_option("--partition", partition_file, "partition JSON (default: coarsest equitable)");
  quotient_cmd->add_flag("--refine", refine, "refine the given partition to an equitable one");

  std::string formula;
  int fm = 3, fk = 0, fd = 0, fl = 0;
  auto* formula_cmd = app.add_subcommand("formula", "Closed forms, bounds and polynomials");
  formula_cmd->add_option("name", formula,
                          "hyperstar|cycle|cycle-spectrum|path-bound|ratio-threshold|diameter-bound|even-bound|"
                          "unicyclic-bounds|t1c-bound|uc3-poly|bc-poly|t2c-poly")
      ->required();
  formula_cmd->add_option("--m", fm);
  formula_cmd->add_option("--k", fk);
  formula_cmd->add_option("--d", fd);
  formula_cmd->add_option("--l", fl);

  std::string cls;
  int em = 3, ek = 0;
  std::optional<int> ed, el;
  bool power_only = false;
  long long ebudget = 3'000'000;
  auto* enum_cmd = app.add_subcommand("enumerate", "All shapes of a class up to isomorphism (JSON lines)");
  enum_cmd->add_option("class", cls, "supertree|hypertree|unicyclic|bicyclic|tricyclic")->required();
  enum_cmd->add_option("--m", em);
  enum_cmd->add_option("--k", ek)->required();
  enum_cmd->add_option("--d", ed, "diameter filter");
  enum_cmd->add_option("--l", el, "cycle length filter");
  enum_cmd->add_flag("--power", power_only, "power hypergraphs only");
  enum_cmd->add_option("--budget", ebudget);

  std::string theorem, krange, format = "json";
  VerifyParams vp;
  bool list = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check a registered result; exit 0 pass, 1 fail, 2 vacuous");
  verify_cmd->add_option("theorem", theorem, "registry id");
  verify_cmd->add_flag("--list", list, "print the registry");
  verify_cmd->add_option("--m", vp.m);
  verify_cmd->add_option("--k", krange, "k or a range a..b");
  verify_cmd->add_option("--d", vp.d);
  verify_cmd->add_option("--l", vp.l);
  verify_cmd->add_option("--tol", vp.tol, "strictness margin");
  verify_cmd->add_option("--budget", vp.budget, "shapes per enumeration level");
  verify_cmd->add_option("--out", out, "report file (default stdout)");
  verify_cmd->add_option("--format", format, "json|csv|md")->check(CLI::IsMember({"json", "csv", "md"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      emit(hypergraph_to_json(generate(gen), indent), gen.out);
      return 0;
    }
    if (*radius_cmd) {
      Hypergraph h = load(input);
      SpectralResult r = spectral_radius(h, tol);
      ordered_json j;
      j["m"] = h.m();
      j["n"] = h.num_vertices();
      j["k"] = h.num_edges();
      j["lambda1"] = r.lambda1;
      j["scaled_lambda1"] = r.lambda1 * (h.m() - 1);
      j["residual"] = r.residual;
      j["iterations"] = r.iterations;
      if (with_vector) j["perron_vector"] = r.perron_vector;
      emit(j.dump(indent), "");
      return 0;
    }
    if (*spectrum_cmd) {
      Hypergraph h = load(input);
      ordered_json j;
      j["n"] = h.num_vertices();
      j["eigenvalues"] = full_spectrum(h);
      emit(j.dump(indent), "");
      return 0;
    }
    if (*charpoly_cmd) {
      Hypergraph h = load(input);
      ordered_json j;
      j["variable"] = "x = (m-1) lambda";
      j["poly"] = poly_json(char_poly_oracle(h));
      j["lambda1"] = char_poly_radius(h);
      emit(j.dump(indent), "");
      return 0;
    }
    if (*validate_cmd) {
      Hypergraph h = load(input, true);
      ValidationReport r = validate(h);
      ordered_json j = validation_json(r);
      if (r.valid() && r.connected) {
        j["diameter"] = diameter(h);
        j["cyclicity"] = cyclicity_json(classify_cyclicity(h), enumerate_loose_cycles(h));
      }
      emit(j.dump(indent), "");
      return r.valid() ? 0 : 1;
    }
    if (*classify_cmd) {
      Hypergraph h = load(input);
      emit(cyclicity_json(classify_cyclicity(h), enumerate_loose_cycles(h)).dump(indent), "");
      return 0;
    }
    if (*transform_cmd) {
      Hypergraph h = load(input);
      ordered_json j;
      Hypergraph result;
      if (op == "release") {
        if (edge < 0) throw Error(ErrorCode::invalid_argument, "release needs --edge");
        if (at) {
          result = release_edge(h, edge, *at);
          j["at"] = *at;
        } else {
          ReleaseResult r = release_edge_at_max(h, edge);
          result = r.result;
          j["at"] = r.at;
        }
      } else if (op == "move") {
        if (!to || moves.empty()) throw Error(ErrorCode::invalid_argument, "move needs --move edge:from and --to");
        std::vector<EdgeMove> mv;
        for (const auto& s : moves) mv.push_back(parse_move(s));
        result = move_edges(h, mv, *to);
        j["condition_holds"] = move_condition(spectral_radius(h).perron_vector, mv, *to);
      } else if (op == "spread") {
        if (plan_file.empty()) throw Error(ErrorCode::invalid_argument, "spread needs --plan");
        SpreadResult r = spread_edges(h, parse_plan(read_text_file(plan_file)));
        result = r.result;
        j["guaranteed"] = r.guaranteed;
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.checks)
          checks.push_back({{"source", c.source},
                            {"all_pendant", c.all_pendant},
                            {"hypothesis", std::string(1, c.hypothesis)},
                            {"holds", c.holds},
                            {"lhs", c.lhs},
                            {"rhs", c.rhs}});
        j["checks"] = checks;
      } else {
        throw Error(ErrorCode::invalid_argument, "unknown transform '" + op + "'");
      }
      double before = spectral_radius(h).lambda1;
      double after = spectral_radius(result).lambda1;
      j["lambda1_before"] = before;
      j["lambda1_after"] = after;
      j["increase"] = after - before;
      j["result"] = ordered_json::parse(hypergraph_to_json(result));
      if (!out.empty()) write_text_file(out, hypergraph_to_json(result, indent));
      emit(j.dump(indent), "");
      return 0;
    }
    if (*quotient_cmd) {
      Hypergraph h = load(input);
      Partition seed;
      if (partition_file.empty()) {
        seed.push_back({});
        for (int v = 0; v < h.num_vertices(); ++v) seed[0].push_back(v);
        refine = true;
      } else {
        seed = partition_from_json(read_text_file(partition_file));
      }
      Partition p = refine ? coarsest_equitable_refinement(h, seed) : seed;
      EquitableCheck check = is_equitable(h, p);
      ordered_json j;
      j["partition"] = p;
      j["equitable"] = check.equitable;
      if (!check.equitable) {
        const auto& w = *check.witness;
        j["witness"] = {{"first", w.first},         {"second", w.second},          {"part", w.part},
                        {"first_sum", w.first_sum}, {"second_sum", w.second_sum}};
        emit(j.dump(indent), "");
        return 1;
      }
      QuotientMatrix b = quotient_matrix(h, p);
      j["denominator"] = b.denominator();
      j["scaled_quotient"] = matrix_json(b.scaled_rows());
      if (b.size() <= quotient_cap) {
        j["eigenvalues"] = quotient_eigenvalues(b);
        j["lambda1"] = quotient_spectral_radius(b);
        j["scaled_charpoly"] = poly_json(characteristic_polynomial(b.scaled_rows()));
      }
      emit(j.dump(indent), "");
      return 0;
    }
    if (*formula_cmd) {
      ordered_json j;
      const std::string& f = formula;
      if (f == "hyperstar") j["lambda1"] = hyperstar_radius(fm, fk);
      else if (f == "cycle") j["lambda1"] = loose_cycle_radius(fm);
      else if (f == "cycle-spectrum") j["eigenvalues"] = loose_cycle_spectrum_formula(fm, fl);
      else if (f == "path-bound") j["bound"] = loose_path_bound(fm);
      else if (f == "ratio-threshold") j["threshold"] = ratio_lemma_threshold(fm);
      else if (f == "diameter-bound") j = bounds_json(hypertree_diameter_bound(fm, fk, fd));
      else if (f == "even-bound") j = bounds_json(even_diameter_bound(fm, fk, fd));
      else if (f == "unicyclic-bounds") j = bounds_json(unicyclic_bounds(fm, fk, fl));
      else if (f == "t1c-bound") j = bounds_json(t1c_bound(fm, fk));
      else if (f == "uc3-poly") j = poly_root_json(uc3_char_poly(fm, fk));
      else if (f == "bc-poly") j = poly_root_json(bc_char_poly(fm, fk));
      else if (f == "t2c-poly") j = poly_root_json(t2c_char_poly(fm, fk));
      else throw Error(ErrorCode::invalid_argument, "unknown formula '" + f + "'");
      emit(j.dump(indent), "");
      return 0;
    }
    if (*enum_cmd) {
      EnumerationOptions o;
      o.diameter = ed;
      o.cycle_length = el;
      o.power_only = power_only;
      o.budget = ebudget;
      for (const auto& h : enumerate_class(family_class_from_string(cls), em, ek, o))
        std::cout << hypergraph_to_json(h) << "\n";
      return 0;
    }
    if (*verify_cmd) {
      if (list) {
        for (const auto& t : theorem_registry())
          std::cout << t.id << "\t" << t.statement << "\t[defaults: " << t.defaults << "]\n";
        return 0;
      }
      if (theorem.empty()) throw Error(ErrorCode::invalid_argument, "verify needs a theorem id or --list");
      if (!krange.empty()) {
        auto [lo, hi] = parse_range(krange);
        vp.k = lo;
        vp.k_to = hi;
      }
      VerificationReport r = verify(theorem, vp);
      emit(emit_report(r, report_format_from_string(format)), out);
      if (r.status == Status::fail && r.counter_instance) {
        std::string path = (out.empty() || out == "-" ? theorem : out) + ".counter.json";
        write_text_file(path, hypergraph_to_json(*r.counter_instance, 2));
        std::cerr << theorem << ": fails; counter-instance " << r.counter_name.value_or("") << " written to " << path
                  << "\n";
      }
      std::cerr << theorem << ": " << to_string(r.status) << " (" << r.instances.size() << " instances, "
                << r.wall_seconds << " s)\n";
      return exit_code(r);
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
