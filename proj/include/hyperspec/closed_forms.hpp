#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperspec/polynomial.hpp"

namespace hyperspec {

// Bounds on lambda1, or on (m-1)lambda1 when `scaled` is set.
struct BoundsReport {
  std::string formula_id;
  std::vector<std::pair<std::string, long long>> inputs;
  bool applicable = true;
  std::string note;  // why the hypotheses fail, when they do
  bool scaled = false;
  std::optional<double> lower;
  std::optional<double> upper;

  // Strictly inside, with the given margin on each present side.
  bool brackets(double value, double margin = 0) const;
};

// lambda1 of the hyperstar with k edges.
double hyperstar_radius(int m, int k);
// lambda1 of every loose cycle C_L(l), m >= 3.
double loose_cycle_radius(int m);
// Ascending multiset of eigenvalues of C_L(l): gamma_i^{+-}/(m-1) for
// i = 1..l, and -1/(m-1) with multiplicity l(m-3).
std::vector<double> loose_cycle_spectrum_formula(int m, int l);
// Upper bound for every loose path; equals loose_cycle_radius(m).
double loose_path_bound(int m);
// Threshold on lambda1 above which the Perron ratios along a hanging loose
// path are monotone.
double ratio_lemma_threshold(int m);

// Hypertrees with k edges and diameter d, (k-d-1)(m-1) >= 6.
BoundsReport hypertree_diameter_bound(int m, int k, int d);
// Hypertrees with even diameter d and k >= ((4d^2-1)(m-1)+2)/4.
BoundsReport even_diameter_bound(int m, int k, int d);
// Both sides for UC_l(c_1 = k-l).
BoundsReport unicyclic_bounds(int m, int k, int l);
// Upper bound for T_1C(k-5,0,0,0).
BoundsReport t1c_bound(int m, int k);

struct PolyRoot {
  IntPoly poly;          // in x = (m-1)lambda
  double root = 0;       // largest-modulus root, real
  double radius = 0;     // root / (m-1)
  BoundsReport bounds;   // on |root|, scaled
};

// Characteristic polynomial of the five-part quotient of UC_3(c_1=k-3).
PolyRoot uc3_char_poly(int m, int k);
// The same family, as det(xI - B') for the scaled 5x5 quotient.
std::vector<std::vector<long long>> uc3_quotient(int m, int k);
// Two alternative expansions that differ from the quotient determinant; kept for comparison only.
IntPoly uc3_statement_poly(int m, int k);
IntPoly uc3_proof_poly(int m, int k);

PolyRoot bc_char_poly(int m, int k);   // BC(k-6)
PolyRoot t2c_char_poly(int m, int k);  // T_2C(c_1=k-9)

}  // namespace hyperspec
