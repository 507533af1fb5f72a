#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hopfpartial/error.hpp"

namespace hp {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
// Always "p/q", including q = 1.
std::string rational_to_string(const Rational& q);

int euler_phi(int n);
// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

// Element of Q(zeta_N) stored as a polynomial in zeta_N of degree < phi(N).
// Values with only a constant term are normalized to order 1, so rationals
// never carry a cyclotomic order.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : coeffs_{Rational(v)} { trim(); }  // NOLINT
  Scalar(Rational q) : coeffs_{std::move(q)} { trim(); }  // NOLINT

  static Scalar root_of_unity(int n, long k);
  // Coefficients over 1, zeta_n, zeta_n^2, ...; any length, reduced mod Phi_n.
  static Scalar from_coeffs(int n, const std::vector<Rational>& c);

  int order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_rational() const { return order_ == 1; }
  // Dense coefficient list of length phi(order).
  std::vector<Rational> coefficients() const;
  // Coefficients after promotion to order n (n a multiple of order()).
  std::vector<Rational> coefficients_at(int n) const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  // this += a * b without a temporary when both are rational.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  using Coeffs = boost::container::small_vector<Rational, 2>;
  void trim();
  void canonicalize();
  static Coeffs promote(const Scalar& s, int n);

  int order_ = 1;
  Coeffs coeffs_;  // trailing zeros removed; empty means zero
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hp
