#include "suturant/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "suturant/errors.hpp"

namespace suturant {

namespace {

using Poly = std::vector<int64_t>;

// Exact division by a monic polynomial; the quotient is returned, remainder must vanish.
Poly divide_monic(Poly num, const Poly& den) {
  const size_t dd = den.size() - 1;
  if (num.size() <= dd) return {0};
  Poly q(num.size() - dd, 0);
  for (size_t i = num.size(); i-- > dd;) {
    int64_t c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

Poly compute_phi(int n) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

}  // namespace

const std::vector<int64_t>& cyclotomic_polynomial(int order) {
  if (order < 1) throw Error("InvalidOrder", "cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Poly>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;
  }
  Poly p = compute_phi(order);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<Poly>(std::move(p));
  return *slot;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  coeffs_.assign(cyclotomic_polynomial(order).size() - 1, 0);
}

Cyclotomic Cyclotomic::integer(int order, int64_t value) {
  Cyclotomic c(order);
  c.coeffs_[0] = value;
  return c;
}

Cyclotomic Cyclotomic::root_power(int order, int64_t e) {
  int64_t r = ((e % order) + order) % order;
  Poly raw(r + 1, 0);
  raw[r] = 1;
  Cyclotomic c(order);
  c.reduce(std::move(raw));
  return c;
}

void Cyclotomic::reduce(std::vector<int64_t> raw) {
  const Poly& phi = cyclotomic_polynomial(order_);
  const size_t deg = phi.size() - 1;
  for (size_t i = raw.size(); i-- > deg;) {
    int64_t c = raw[i];
    if (c == 0) continue;
    for (size_t j = 0; j <= deg; ++j) raw[i - deg + j] -= c * phi[j];
  }
  raw.resize(deg, 0);
  coeffs_ = std::move(raw);
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
  if (order_ != o.order_)
    throw Error("OrderMismatch", "cyclotomic orders " + std::to_string(order_) + " and " +
                                     std::to_string(o.order_));
}

bool Cyclotomic::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r += o;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_same(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same(o);
  Poly raw(coeffs_.size() + o.coeffs_.size(), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) raw[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  Cyclotomic r(order_);
  r.reduce(std::move(raw));
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic Cyclotomic::operator*(int64_t c) const {
  Cyclotomic r = *this;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

Cyclotomic Cyclotomic::div_exact(int64_t d) const {
  if (d == 0) throw Error("NonIntegral", "division by zero");
  Cyclotomic r = *this;
  for (auto& v : r.coeffs_) {
    if (v % d != 0)
      throw Error("NonIntegral", "coefficient " + std::to_string(v) + " not divisible by " +
                                     std::to_string(d));
    v /= d;
  }
  return r;
}

std::string Cyclotomic::poly_str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int64_t c = coeffs_[i];
    if (c == 0) continue;
    int64_t a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string Cyclotomic::str() const {
  return poly_str() + " (mod Φ_" + std::to_string(order_) + ")";
}

std::complex<double> Cyclotomic::approx() const {
  const double theta = 2.0 * std::numbers::pi / order_;
  std::complex<double> z(std::cos(theta), std::sin(theta)), acc(0.0, 0.0), p(1.0, 0.0);
  for (auto c : coeffs_) {
    acc += static_cast<double>(c) * p;
    p *= z;
  }
  return acc;
}

}  // namespace suturant
