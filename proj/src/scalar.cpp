#include "hopfpartial/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>

namespace hp {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<std::int64_t>;

Poly compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Poly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    const Poly& den = cyclotomic_polynomial(d);
    int dd = static_cast<int>(den.size()) - 1;
    int dn = static_cast<int>(num.size()) - 1;
    Poly q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      std::int64_t c = num[i];  // den is monic
      q[i - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return num;
}

struct PolyCache {
  std::mutex mu;
  std::map<int, std::unique_ptr<Poly>> polys;
};

PolyCache& poly_cache() {
  static PolyCache c;
  return c;
}

// Reduces a dense polynomial in zeta_n modulo Phi_n, in place.
template <class Vec>
void reduce_mod_phi(Vec& c, int n) {
  const Poly& phi = cyclotomic_polynomial(n);
  int deg = static_cast<int>(phi.size()) - 1;
  // zeta^n = 1 first, which keeps the division short.
  if (static_cast<int>(c.size()) > n) {
    for (std::size_t i = n; i < c.size(); ++i) {
      if (sgn(c[i]) != 0) c[i % n] += c[i];
    }
    c.resize(n);
  }
  for (int i = static_cast<int>(c.size()) - 1; i >= deg; --i) {
    if (sgn(c[i]) == 0) continue;
    Rational lead = c[i];
    for (int j = 0; j < deg; ++j) {
      if (phi[j] != 0) c[i - deg + j] -= lead * phi[j];
    }
    c[i] = 0;
  }
  if (static_cast<int>(c.size()) > deg) c.resize(deg);
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::PreconditionViolation, "cyclotomic order must be positive");
  PolyCache& cache = poly_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.polys.find(n);
    if (it != cache.polys.end()) return *it->second;
  }
  Poly p = compute_cyclotomic(n);  // recursion takes the lock for divisors
  std::lock_guard<std::mutex> lock(cache.mu);
  auto [it, inserted] = cache.polys.emplace(n, std::make_unique<Poly>(std::move(p)));
  return *it->second;
}

void Scalar::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  if (coeffs_.size() <= 1) order_ = 1;
}

void Scalar::canonicalize() {
  if (order_ > 1) reduce_mod_phi(coeffs_, order_);
  trim();
}

Scalar Scalar::from_coeffs(int n, const std::vector<Rational>& c) {
  if (n < 1) throw Error(ErrorKind::PreconditionViolation, "cyclotomic order must be positive");
  Scalar s;
  s.order_ = n;
  s.coeffs_.assign(c.begin(), c.end());
  if (n == 1) {
    Rational sum = 0;
    for (const auto& x : c) sum += x;
    s.coeffs_.assign(1, sum);
  }
  s.canonicalize();
  return s;
}

Scalar Scalar::root_of_unity(int n, long k) {
  if (n < 1) throw Error(ErrorKind::PreconditionViolation, "cyclotomic order must be positive");
  long e = ((k % n) + n) % n;
  std::vector<Rational> c(e + 1, 0);
  c[e] = 1;
  return from_coeffs(n, c);
}

bool Scalar::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

std::vector<Rational> Scalar::coefficients() const {
  std::vector<Rational> out(coeffs_.begin(), coeffs_.end());
  out.resize(euler_phi(order_), 0);
  return out;
}

Scalar::Coeffs Scalar::promote(const Scalar& s, int n) {
  if (s.order_ == n || s.order_ == 1) return s.coeffs_;
  int step = n / s.order_;
  Coeffs c((s.coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) c[i * step] = s.coeffs_[i];
  reduce_mod_phi(c, n);
  return c;
}

std::vector<Rational> Scalar::coefficients_at(int n) const {
  if (n % order_ != 0) throw Error(ErrorKind::PreconditionViolation, "order does not divide target");
  Coeffs c = promote(*this, n);
  std::vector<Rational> out(c.begin(), c.end());
  out.resize(euler_phi(n), 0);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (o.order_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    if (order_ == 1) trim();
    return *this;
  }
  int n = order_ == o.order_ ? order_ : std::lcm(order_, o.order_);
  Coeffs a = promote(*this, n);
  Coeffs b = promote(o, n);
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  coeffs_ = std::move(a);
  order_ = n;
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (order_ == 1) {
    Rational q = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= q;
    return *this;
  }
  int n = order_ == o.order_ ? order_ : std::lcm(order_, o.order_);
  Coeffs a = promote(*this, n);
  Coeffs b = promote(o, n);
  Coeffs c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  coeffs_ = std::move(c);
  order_ = n;
  canonicalize();
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.order_ == 1 && b.order_ == 1 && order_ == 1) {
    if (coeffs_.empty()) {
      coeffs_.emplace_back(a.coeffs_[0] * b.coeffs_[0]);
    } else {
      coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
      trim();
    }
    return;
  }
  *this += a * b;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (order_ == 1) return Scalar(Rational(1) / coeffs_[0]);
  // Solve (multiplication by this) y = 1 in the power basis.
  int d = euler_phi(order_);
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, 0));
  for (int j = 0; j < d; ++j) {
    Scalar col = *this * Scalar::root_of_unity(order_, j);
    Coeffs cc = promote(col, order_);
    for (std::size_t i = 0; i < cc.size(); ++i) m[i][j] = cc[i];
  }
  m[0][d] = 1;
  for (int c = 0, r = 0; c < d; ++c, ++r) {
    int p = r;
    while (p < d && sgn(m[p][c]) == 0) ++p;
    if (p == d) throw Error(ErrorKind::DivisionByZero, "singular multiplication matrix");
    std::swap(m[p], m[r]);
    Rational piv = m[r][c];
    for (auto& x : m[r]) x /= piv;
    for (int i = 0; i < d; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j <= d; ++j) m[i][j] -= f * m[r][j];
    }
  }
  std::vector<Rational> y(d);
  for (int i = 0; i < d; ++i) y[i] = m[i][d];
  return from_coeffs(order_, y);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.order_ == 1 || b.order_ == 1) return false;
  int n = std::lcm(a.order_, b.order_);
  return Scalar::promote(a, n) == Scalar::promote(b, n);
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[i].get_str();
    if (i > 0) out += "*z" + std::to_string(order_) + "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hp
