#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperspec {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial, coefficients in ascending powers.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);
  IntPoly(std::initializer_list<long long> ascending);

  static IntPoly x() { return IntPoly{0, 1}; }
  static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int power) const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(long long c) const;
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  double evaluate(double x) const;
  BigInt evaluate(const BigInt& x) const;

  // All complex roots from the companion matrix.
  std::vector<std::complex<double>> roots() const;
  // Root of largest modulus; among near-ties the one with largest real part.
  // Real roots are polished with Newton steps.
  std::complex<double> largest_modulus_root() const;
  // Largest real root of a real-rooted polynomial, by Newton iteration from
  // an upper bound carried out in 100-digit arithmetic.
  double largest_real_root() const;
  double largest_real_root(double upper_bound) const;

  std::vector<std::string> coefficient_strings() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly operator*(long long c, const IntPoly& p);

// det(xI - M) by Berkowitz' division-free algorithm.
IntPoly characteristic_polynomial(const std::vector<std::vector<long long>>& m);

}  // namespace hyperspec
