#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperspec/closed_forms.hpp"
#include "hyperspec/enumerate.hpp"
#include "hyperspec/equitable.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/transforms.hpp"
#include "hyperspec/verify.hpp"

namespace py = pybind11;
using namespace hyperspec;

namespace {

py::object json_loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

py::int_ big(const BigInt& v) { return py::int_(py::str(v.str())); }

py::list poly_list(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(big(c));
  return out;
}

py::dict bounds_dict(const BoundsReport& b) {
  py::dict d;
  d["formula_id"] = b.formula_id;
  py::dict in;
  for (const auto& [k, v] : b.inputs) in[py::str(k)] = v;
  d["inputs"] = in;
  d["applicable"] = b.applicable;
  d["note"] = b.note;
  d["scaled"] = b.scaled;
  d["lower"] = b.lower ? py::object(py::float_(*b.lower)) : py::object(py::none());
  d["upper"] = b.upper ? py::object(py::float_(*b.upper)) : py::object(py::none());
  return d;
}

py::dict poly_root_dict(const PolyRoot& r) {
  py::dict d;
  d["poly"] = poly_list(r.poly);
  d["root"] = r.root;
  d["radius"] = r.radius;
  d["bounds"] = bounds_dict(r.bounds);
  return d;
}

py::dict validation_dict(const ValidationReport& r) {
  py::dict d;
  d["valid"] = r.valid();
  d["uniform"] = r.uniform;
  d["linear"] = r.linear;
  d["simple"] = r.simple;
  d["no_isolated"] = r.no_isolated;
  d["connected"] = r.connected;
  py::list v;
  for (const auto& x : r.violations) {
    py::dict e;
    e["kind"] = to_string(x.kind);
    e["edges"] = x.edges;
    e["vertex"] = x.vertex;
    e["message"] = x.message;
    v.append(e);
  }
  d["violations"] = v;
  return d;
}

std::array<int, 4> array4(const std::vector<int>& v) {
  if (v.size() != 4) throw Error(ErrorCode::invalid_argument, "T1C takes four pendant counts");
  return {v[0], v[1], v[2], v[3]};
}

std::array<int, 7> array7(const std::vector<int>& v) {
  if (v.size() != 7) throw Error(ErrorCode::invalid_argument, "T2C takes seven pendant counts");
  std::array<int, 7> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Adjacency spectra of linear uniform hypergraphs";

  static py::exception<Error> error_type(m, "HyperspecError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::reinterpret_borrow<py::object>(error_type.ptr());
      py::object exc = type(std::string("[") + to_string(e.code()) + "] " + e.what());
      exc.attr("code") = to_string(e.code());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init(&Hypergraph::make), py::arg("m"), py::arg("n"), py::arg("edges"))
      .def_static(
          "from_json",
          [](const std::string& text, bool lenient) {
            return hypergraph_from_json(text, lenient ? LoadMode::lenient : LoadMode::strict);
          },
          py::arg("text"), py::arg("lenient") = false)
      .def("to_json", &hypergraph_to_json, py::arg("indent") = -1)
      .def_property_readonly("m", &Hypergraph::m)
      .def_property_readonly("n", &Hypergraph::num_vertices)
      .def_property_readonly("k", &Hypergraph::num_edges)
      .def_property_readonly("edges", &Hypergraph::edges)
      .def("same_edge_set", &Hypergraph::same_edge_set)
      .def(py::self == py::self)
      .def("__repr__", [](const Hypergraph& h) {
        return "Hypergraph(m=" + std::to_string(h.m()) + ", n=" + std::to_string(h.num_vertices()) +
               ", k=" + std::to_string(h.num_edges()) + ")";
      });

  // structure
  m.def("validate", [](const Hypergraph& h) { return validation_dict(validate(h)); });
  m.def("validate_edges", [](int mm, int n, const std::vector<Edge>& e) { return validation_dict(validate(mm, n, e)); },
        py::arg("m"), py::arg("n"), py::arg("edges"));
  m.def("degree", [](const Hypergraph& h, Vertex v) {
    Rational d = degree(h, v);
    return py::make_tuple(d.numerator(), d.denominator());
  });
  m.def("is_connected", &is_connected);
  m.def("diameter", [](const Hypergraph& h) { return diameter(h); });
  m.def("loose_cycles", [](const Hypergraph& h) {
    py::list out;
    for (const auto& c : enumerate_loose_cycles(h)) {
      py::dict d;
      d["core_vertices"] = c.core_vertices;
      d["edges"] = c.edges;
      out.append(d);
    }
    return out;
  });
  m.def("classify_cyclicity", [](const Hypergraph& h) {
    CyclicityReport r = classify_cyclicity(h);
    py::dict d;
    d["classification"] = to_string(r.classification);
    d["loose_cycle_count"] = r.loose_cycle_count;
    d["cyclomatic_number"] = r.cyclomatic_number;
    d["n"] = r.n;
    d["expected_n"] = r.expected_n;
    d["identity_consistent"] = r.identity_consistent;
    d["note"] = r.note;
    return d;
  });
  m.def("canonical_form", &canonical_form);
  m.def("is_hypertree", &is_hypertree);

  // families
  m.def("loose_path", &loose_path, py::arg("m"), py::arg("l"));
  m.def("loose_cycle", &loose_cycle, py::arg("m"), py::arg("l"));
  m.def("hyperstar", &hyperstar, py::arg("m"), py::arg("k"));
  m.def("hypertree_Td", &hypertree_Td, py::arg("m"), py::arg("d"), py::arg("spec") = AttachmentSpec{});
  m.def("unicyclic_UC", &unicyclic_UC, py::arg("m"), py::arg("l"), py::arg("spec") = AttachmentSpec{});
  m.def("unicyclic_UlC", &unicyclic_UlC, py::arg("m"), py::arg("l"), py::arg("c1"));
  m.def("bicyclic_BC", &bicyclic_BC, py::arg("m"), py::arg("l1"));
  m.def("bicyclic_B2C", &bicyclic_B2C, py::arg("m"), py::arg("l1"), py::arg("l2"));
  m.def("tricyclic_T1C", [](int mm, const std::vector<int>& l) { return tricyclic_T1C(mm, array4(l)); },
        py::arg("m"), py::arg("l"));
  m.def("tricyclic_T2C", [](int mm, const std::vector<int>& c) { return tricyclic_T2C(mm, array7(c)); },
        py::arg("m"), py::arg("c"));
  m.def(
      "power_hypergraph",
      [](int n, const std::vector<std::pair<int, int>>& edges, int mm) { return power_hypergraph({n, edges}, mm); },
      py::arg("n"), py::arg("edges"), py::arg("m"));
  m.def("core_vertex", &core_vertex);

  // spectra
  py::class_<SpectralResult>(m, "SpectralResult")
      .def_readonly("lambda1", &SpectralResult::lambda1)
      .def_readonly("perron_vector", &SpectralResult::perron_vector)
      .def_readonly("residual", &SpectralResult::residual)
      .def_readonly("iterations", &SpectralResult::iterations);
  m.def("spectral_radius", &spectral_radius, py::arg("h"), py::arg("tol") = default_tolerance,
        py::arg("max_iterations") = 2000000);
  m.def("full_spectrum", &full_spectrum);
  m.def("adjacency_scaled", [](const Hypergraph& h) { return adjacency_matrix(h).scaled_rows(); });
  m.def("char_poly", [](const Hypergraph& h) { return poly_list(char_poly_oracle(h)); });
  m.def("char_poly_radius", &char_poly_radius);

  // transforms
  m.def("release_edge", &release_edge, py::arg("h"), py::arg("edge"), py::arg("at"));
  m.def("release_edge_at_max", [](const Hypergraph& h, int e) {
    ReleaseResult r = release_edge_at_max(h, e);
    return py::make_tuple(r.result, r.at);
  });
  m.def(
      "move_edges",
      [](const Hypergraph& h, const std::vector<std::pair<int, Vertex>>& moves, Vertex to) {
        std::vector<EdgeMove> mv;
        for (auto [e, from] : moves) mv.push_back({e, from});
        return py::make_tuple(move_edges(h, mv, to), move_condition(spectral_radius(h).perron_vector, mv, to));
      },
      py::arg("h"), py::arg("moves"), py::arg("to"));
  m.def(
      "spread_edges",
      [](const Hypergraph& h, const std::vector<std::tuple<Vertex, std::vector<int>, std::vector<Vertex>>>& plan) {
        SpreadPlan p;
        for (const auto& [s, e, t] : plan) p.push_back({s, e, t});
        SpreadResult r = spread_edges(h, p);
        return py::make_tuple(r.result, r.guaranteed);
      },
      py::arg("h"), py::arg("plan"));

  // partitions
  m.def("is_equitable", [](const Hypergraph& h, const Partition& p) { return is_equitable(h, p).equitable; });
  m.def("coarsest_equitable_refinement", &coarsest_equitable_refinement);
  m.def(
      "canonical_power_partition",
      [](int n, const std::vector<std::pair<int, int>>& edges, int mm) { return canonical_power_partition({n, edges}, mm); },
      py::arg("n"), py::arg("edges"), py::arg("m"));
  m.def("quotient_matrix", [](const Hypergraph& h, const Partition& p) {
    QuotientMatrix b = quotient_matrix(h, p);
    return py::make_tuple(b.scaled_rows(), b.denominator());
  });
  m.def("quotient_eigenvalues", [](const Hypergraph& h, const Partition& p) {
    return quotient_eigenvalues(quotient_matrix(h, p));
  });

  // closed forms
  m.def("hyperstar_radius", &hyperstar_radius);
  m.def("loose_cycle_radius", &loose_cycle_radius);
  m.def("loose_cycle_spectrum_formula", &loose_cycle_spectrum_formula);
  m.def("loose_path_bound", &loose_path_bound);
  m.def("ratio_lemma_threshold", &ratio_lemma_threshold);
  m.def("hypertree_diameter_bound", [](int mm, int k, int d) { return bounds_dict(hypertree_diameter_bound(mm, k, d)); });
  m.def("even_diameter_bound", [](int mm, int k, int d) { return bounds_dict(even_diameter_bound(mm, k, d)); });
  m.def("unicyclic_bounds", [](int mm, int k, int l) { return bounds_dict(unicyclic_bounds(mm, k, l)); });
  m.def("t1c_bound", [](int mm, int k) { return bounds_dict(t1c_bound(mm, k)); });
  m.def("uc3_char_poly", [](int mm, int k) { return poly_root_dict(uc3_char_poly(mm, k)); });
  m.def("bc_char_poly", [](int mm, int k) { return poly_root_dict(bc_char_poly(mm, k)); });
  m.def("t2c_char_poly", [](int mm, int k) { return poly_root_dict(t2c_char_poly(mm, k)); });

  // enumeration and verification
  m.def(
      "enumerate_class",
      [](const std::string& cls, int mm, int k, std::optional<int> diameter, std::optional<int> cycle_length,
         bool power_only, long long budget) {
        EnumerationOptions o;
        o.diameter = diameter;
        o.cycle_length = cycle_length;
        o.power_only = power_only;
        o.budget = budget;
        return enumerate_class(family_class_from_string(cls), mm, k, o);
      },
      py::arg("cls"), py::arg("m"), py::arg("k"), py::arg("diameter") = py::none(),
      py::arg("cycle_length") = py::none(), py::arg("power_only") = false, py::arg("budget") = 3'000'000);
  m.def("registry", [] {
    py::list out;
    for (const auto& t : theorem_registry()) {
      py::dict d;
      d["id"] = t.id;
      d["statement"] = t.statement;
      d["defaults"] = t.defaults;
      out.append(d);
    }
    return out;
  });
  m.def(
      "verify",
      [](const std::string& id, std::optional<int> mm, std::optional<int> k, std::optional<int> k_to,
         std::optional<int> d, std::optional<int> l, double tol, long long budget) {
        VerifyParams p;
        p.m = mm;
        p.k = k;
        p.k_to = k_to;
        p.d = d;
        p.l = l;
        p.tol = tol;
        p.budget = budget;
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = verify(id, p);
        }
        py::dict out = json_loads(emit_report(r, ReportFormat::json));
        out["exit_code"] = exit_code(r);
        return out;
      },
      py::arg("theorem_id"), py::arg("m") = py::none(), py::arg("k") = py::none(), py::arg("k_to") = py::none(),
      py::arg("d") = py::none(), py::arg("l") = py::none(), py::arg("tol") = 1e-9, py::arg("budget") = 3'000'000);
}
