#include "hyperspec/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_100;

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> ascending) {
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

void IntPoly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

BigInt IntPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[power];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(int(i)) + o.coefficient(int(i));
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(int(i)) - o.coefficient(int(i));
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(long long c) const {
  auto out = coeffs_;
  for (auto& x : out) x *= c;
  return IntPoly(std::move(out));
}

IntPoly operator*(long long c, const IntPoly& p) { return p * c; }

double IntPoly::evaluate(double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + it->convert_to<long double>();
  return static_cast<double>(acc);
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::complex<double>> IntPoly::roots() const {
  const int n = degree();
  if (n < 1) return {};
  const double lead = coeffs_.back().convert_to<double>();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs_[i].convert_to<double>() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

std::complex<double> IntPoly::largest_modulus_root() const {
  auto rs = roots();
  if (rs.empty()) throw Error(ErrorCode::invalid_argument, "constant polynomial has no roots");
  double best = 0;
  for (auto z : rs) best = std::max(best, std::abs(z));
  std::complex<double> pick = rs.front();
  bool have = false;
  for (auto z : rs) {
    if (std::abs(z) >= best * (1 - 1e-9) && (!have || z.real() > pick.real())) {
      pick = z;
      have = true;
    }
  }
  if (std::abs(pick.imag()) <= 1e-8 * std::max(1.0, std::abs(pick))) {
    // Newton polish in long double on the real axis.
    long double x = pick.real();
    for (int it = 0; it < 8; ++it) {
      long double p = 0, dp = 0;
      for (auto c = coeffs_.rbegin(); c != coeffs_.rend(); ++c) {
        dp = dp * x + p;
        p = p * x + c->convert_to<long double>();
      }
      if (dp == 0) break;
      long double step = p / dp;
      x -= step;
      if (std::fabs(step) <= 1e-18L * std::fabs(x)) break;
    }
    pick = {static_cast<double>(x), pick.imag()};
  }
  return pick;
}

double IntPoly::largest_real_root() const {
  // Fujiwara's bound on the moduli of the roots.
  const int n = degree();
  if (n < 1) throw Error(ErrorCode::invalid_argument, "constant polynomial has no roots");
  Real lead = Real(coeffs_.back());
  Real bound = 0;
  for (int i = 1; i <= n; ++i) {
    Real a = mp::abs(Real(coeffs_[n - i]) / lead);
    if (a == 0) continue;
    Real r = mp::pow(a, Real(1) / i);
    if (i == n) r = mp::pow(a / 2, Real(1) / i);
    if (r > bound) bound = r;
  }
  return largest_real_root(2 * bound.convert_to<double>() + 1);
}

double IntPoly::largest_real_root(double upper_bound) const {
  const int n = degree();
  if (n < 1) throw Error(ErrorCode::invalid_argument, "constant polynomial has no roots");
  std::vector<Real> c(coeffs_.begin(), coeffs_.end());
  if (c.back() < 0)
    for (auto& x : c) x = -x;
  Real x = upper_bound;
  const Real eps = Real("1e-60");
  for (int it = 0; it < 20000; ++it) {
    Real p = 0, dp = 0;
    for (int i = n; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + c[i];
    }
    if (p <= 0 || dp <= 0) break;  // at (or numerically past) the root
    Real step = p / dp;
    x -= step;
    if (step <= eps * (mp::abs(x) > 1 ? Real(mp::abs(x)) : Real(1))) break;
  }
  return x.convert_to<double>();
}

std::vector<std::string> IntPoly::coefficient_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

std::string IntPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0 && !(i == 0 && first)) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) out << (c < 0 ? "-" : "");
    else out << (c < 0 ? " - " : " + ");
    if (mag != 1 || i == 0) out << mag;
    if (i > 0) out << (mag != 1 ? "*" : "") << "x";
    if (i > 1) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPoly characteristic_polynomial(const std::vector<std::vector<long long>>& a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::invalid_argument, "matrix is not square");
  // q holds det(xI - A_r) for the leading r x r block, highest power first.
  std::vector<BigInt> q{1};
  for (int r = 1; r <= n; ++r) {
    const int s = r - 1;  // index of the new row/column
    // Column of the Toeplitz matrix: 1, -a_ss, -R C, -R A C, ..., -R A^{s-1} C.
    std::vector<BigInt> t(r + 1);
    t[0] = 1;
    t[1] = -BigInt(a[s][s]);
    std::vector<BigInt> v(s);
    for (int i = 0; i < s; ++i) v[i] = a[i][s];
    for (int j = 2; j <= r; ++j) {
      BigInt dot = 0;
      for (int i = 0; i < s; ++i)
        if (a[s][i] != 0) dot += a[s][i] * v[i];
      t[j] = -dot;
      if (j == r) break;
      std::vector<BigInt> w(s);
      for (int i = 0; i < s; ++i)
        for (int l = 0; l < s; ++l)
          if (a[i][l] != 0) w[i] += a[i][l] * v[l];
      v.swap(w);
    }
    std::vector<BigInt> next(r + 1);
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j < r && j <= i; ++j) next[i] += t[i - j] * q[j];
    q.swap(next);
  }
  std::reverse(q.begin(), q.end());
  return IntPoly(std::move(q));
}

}  // namespace hyperspec
