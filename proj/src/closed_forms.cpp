#include "hyperspec/closed_forms.hpp"

#include <algorithm>
#include <cmath>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

constexpr double pi = 3.14159265358979323846;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

// (a + sqrt(a^2 + 4 c (m-1))) / 2
double half_root(double a, double c, int m) { return (a + std::sqrt(a * a + 4 * c * (m - 1))) / 2; }

BoundsReport report(std::string id, std::vector<std::pair<std::string, long long>> inputs) {
  BoundsReport r;
  r.formula_id = std::move(id);
  r.inputs = std::move(inputs);
  return r;
}

PolyRoot finish(IntPoly poly, int m, BoundsReport bounds) {
  PolyRoot out;
  auto z = poly.largest_modulus_root();
  if (std::fabs(z.imag()) > 1e-10)
    throw Error(ErrorCode::not_converged, "largest-modulus root is not real: imaginary part " + std::to_string(z.imag()));
  out.poly = std::move(poly);
  out.root = z.real();
  out.radius = std::fabs(out.root) / (m - 1);
  out.bounds = std::move(bounds);
  return out;
}

IntPoly c(long long v) { return IntPoly{v}; }

}  // namespace

bool BoundsReport::brackets(double value, double margin) const {
  if (lower && !(value - *lower > margin)) return false;
  if (upper && !(*upper - value > margin)) return false;
  return true;
}

double hyperstar_radius(int m, int k) {
  require(m >= 2 && k >= 1, "hyperstar_radius: needs m >= 2 and k >= 1");
  return half_root(m - 2, k, m) / (m - 1);
}

double loose_cycle_radius(int m) {
  require(m >= 3, "loose_cycle_radius: needs m >= 3");
  return (m - 1 + std::sqrt(double(m) * m + 6.0 * m - 7)) / (2.0 * (m - 1));
}

std::vector<double> loose_cycle_spectrum_formula(int m, int l) {
  require(m >= 3 && l >= 2, "loose_cycle_spectrum_formula: needs m >= 3 and l >= 2");
  std::vector<double> out;
  for (int i = 1; i <= l; ++i) {
    double cs = std::cos(2 * pi * i / l);
    double a = m - 3 + 2 * cs;
    double disc = std::sqrt(a * a + 8 * (m - 2 + cs));
    out.push_back((a + disc) / 2 / (m - 1));
    out.push_back((a - disc) / 2 / (m - 1));
  }
  for (int i = 0; i < l * (m - 3); ++i) out.push_back(-1.0 / (m - 1));
  std::sort(out.begin(), out.end());
  return out;
}

double loose_path_bound(int m) { return loose_cycle_radius(m); }

double ratio_lemma_threshold(int m) {
  require(m >= 2, "ratio_lemma_threshold: needs m >= 2");
  return (m - 1 + std::sqrt(double(m - 1) * (m + 7))) / (2.0 * (m - 1));
}

BoundsReport hypertree_diameter_bound(int m, int k, int d) {
  auto r = report("hypertree_diameter", {{"m", m}, {"k", k}, {"d", d}});
  require(m >= 2 && d >= 1 && k >= d, "hypertree_diameter_bound: needs m >= 2 and k >= d >= 1");
  if (static_cast<long long>(k - d - 1) * (m - 1) < 6) {
    r.applicable = false;
    r.note = "(k-d-1)(m-1) < 6";
    return r;
  }
  r.upper = half_root(m, k - d + 4, m) / (m - 1);
  return r;
}

BoundsReport even_diameter_bound(int m, int k, int d) {
  auto r = report("even_diameter", {{"m", m}, {"k", k}, {"d", d}});
  require(m >= 2 && d >= 1 && k >= d, "even_diameter_bound: needs m >= 2 and k >= d >= 1");
  if (d % 2 != 0) {
    r.applicable = false;
    r.note = "d is odd";
    return r;
  }
  if (4LL * k < (4LL * d * d - 1) * (m - 1) + 2) {
    r.applicable = false;
    r.note = "k < ((4d^2-1)(m-1)+2)/4";
    return r;
  }
  r.upper = half_root(m - 1, k - d, m) / (m - 1);
  return r;
}

BoundsReport unicyclic_bounds(int m, int k, int l) {
  auto r = report("unicyclic", {{"m", m}, {"k", k}, {"l", l}});
  require(m >= 3 && l >= 3, "unicyclic_bounds: needs m >= 3 and l >= 3");
  if (k < l) {
    r.applicable = false;
    r.note = "k < l";
    return r;
  }
  r.lower = half_root(m - 2, k - l + 2, m) / (m - 1);
  r.upper = half_root(m, k - l + 2, m) / (m - 1);
  return r;
}

BoundsReport t1c_bound(int m, int k) {
  auto r = report("t1c", {{"m", m}, {"k", k}});
  require(m >= 3, "t1c_bound: needs m >= 3");
  if (k < 5) {
    r.applicable = false;
    r.note = "k < 5";
    return r;
  }
  r.upper = half_root(m + 1, k - 3, m) / (m - 1);
  return r;
}

std::vector<std::vector<long long>> uc3_quotient(int m, int k) {
  require(m >= 3 && k >= 3, "uc3_quotient: needs m >= 3 and k >= 3");
  const long long mm = m, kk = k;
  return {{0, 2, (kk - 3) * (mm - 1), 2 * (mm - 2), 0},
          {1, 1, 0, mm - 2, mm - 2},
          {1, 0, mm - 2, 0, 0},
          {1, 1, 0, mm - 3, 0},
          {0, 2, 0, 0, mm - 3}};
}

PolyRoot uc3_char_poly(int m, int k) {
  require(m >= 3 && k >= 3, "uc3_char_poly: needs m >= 3 and k >= 3");
  const long long mm = m, kk = k;
  const IntPoly x = IntPoly::x();
  IntPoly cycle = x * x - x * (mm - 2) - c(2 * mm - 3);
  IntPoly inner = (x - c(mm - 3)) * (x * (x - c(mm - 2)) - c((kk - 1) * (mm - 1) - 2)) + c(2 * (mm - 2));
  IntPoly poly = cycle * inner - (x + c(1)) * (x + c(1)) * (x - c(mm - 2)) * 2;
  auto b = report("uc3", {{"m", m}, {"k", k}});
  b.scaled = true;
  b.lower = half_root(m - 2, k - 1, m);
  b.upper = half_root(m, k - 1, m);
  return finish(std::move(poly), m, std::move(b));
}

IntPoly uc3_statement_poly(int m, int k) {
  const long long mm = m, kk = k;
  const IntPoly x = IntPoly::x();
  IntPoly cycle = x * x - x * (mm - 2) - c(2 * mm - 3);
  IntPoly cubic = x * x * x - x * x * (mm - 3) + x * ((kk - 5) * (mm - 1) + 2) - c((kk - 3) * (mm - 1) * (mm - 3));
  return cycle * cubic - x * (x + c(1)) * (x + c(1)) * 2;
}

IntPoly uc3_proof_poly(int m, int k) {
  const long long mm = m, kk = k;
  const IntPoly x = IntPoly::x();
  IntPoly cycle = (x - c(1)) * (x - c(mm - 3)) - c(3 * (mm - 2));
  IntPoly inner = (x - c(mm - 3)) * (x * (x - c(mm - 2)) - c((kk - 1) * (mm - 1) - 2)) + c(2 * (mm - 2));
  return cycle * inner - x * (x + c(1)) * (x + c(1)) * (x - c(mm - 2)) * 2;
}

PolyRoot bc_char_poly(int m, int k) {
  require(m >= 3 && k >= 6, "bc_char_poly: needs m >= 3 and k >= 6");
  const long long mm = m, kk = k;
  const IntPoly x = IntPoly::x();
  IntPoly cubic = x * (x - c(mm - 2)) * (x - c(mm - 3)) - (x - c(mm - 3)) * ((kk - 6) * (mm - 1)) -
                  (x - c(mm - 2)) * (4 * (mm - 2));
  IntPoly cycle = x * x - x * (mm - 2) - c(2 * mm - 3);
  IntPoly poly = cubic * cycle - (x + c(1)) * (x + c(1)) * (x - c(mm - 2)) * 4;
  auto b = report("bc", {{"m", m}, {"k", k}});
  b.scaled = true;
  b.lower = half_root(m - 2, k - 2, m);
  b.upper = half_root(m + 2, k - 2, m);
  return finish(std::move(poly), m, std::move(b));
}

PolyRoot t2c_char_poly(int m, int k) {
  require(m >= 3 && k >= 9, "t2c_char_poly: needs m >= 3 and k >= 9");
  const long long mm = m, kk = k;
  const IntPoly x = IntPoly::x();
  IntPoly cycle = x * x - x * (mm - 2) - c(2 * mm - 3);
  IntPoly inner = (x - c(mm - 3)) * (x * (x - c(mm - 2)) - c((kk - 3) * (mm - 1) - 6)) + c(6 * (mm - 2));
  IntPoly poly = cycle * inner - (x + c(1)) * (x + c(1)) * (x - c(mm - 2)) * 6;
  auto b = report("t2c", {{"m", m}, {"k", k}});
  b.scaled = true;
  b.upper = half_root(m + 4, k - 3, m);
  return finish(std::move(poly), m, std::move(b));
}

}  // namespace hyperspec
