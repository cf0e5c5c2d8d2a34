#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace suturant {

// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<int64_t>& cyclotomic_polynomial(int order);

// Exact element of Z[x]/(Phi_N(x)); x plays the role of a primitive N-th root of unity.
class Cyclotomic {
 public:
  explicit Cyclotomic(int order = 1);

  static Cyclotomic integer(int order, int64_t value);
  // x^e, e taken mod N.
  static Cyclotomic root_power(int order, int64_t e);

  int order() const { return order_; }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(int64_t c) const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Throws NonIntegral unless every coefficient is divisible by d.
  Cyclotomic div_exact(int64_t d) const;

  // "1 - x + x^2 (mod Φ_6)"
  std::string str() const;
  // Polynomial part only, no modulus suffix.
  std::string poly_str() const;
  std::complex<double> approx() const;

 private:
  void reduce(std::vector<int64_t> raw);
  void check_same(const Cyclotomic& o) const;

  int order_;
  std::vector<int64_t> coeffs_;
};

}  // namespace suturant
