// Exact arbitrary-precision rational arithmetic: scalars, vectors, matrices,
// exact linear solves and determinants. Everything downstream (depth counts,
// hull tests, domain enumeration) is built on these; no floating point leaks
// into geometric predicates.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace dplf {

using Int = mpz_class;

// Canonical rational: reduced form, positive denominator. gcd(num, den) == 1
// is maintained by construction (GMP canonicalization).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors int literals
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  Int num() const { return Int(v_.get_num()); }
  Int den() const { return Int(v_.get_den()); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;
  Int floor() const;
  Int ceil() const;
  double to_double() const { return v_.get_d(); }

  // "num/den", with "/den" omitted for integers.
  std::string str() const;
  // Accepts "num", "num/den", optional leading '-'. Throws std::invalid_argument.
  static Rational parse(const std::string& s);

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  mpq_class v_;
};

using RatVector = std::vector<Rational>;

Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const std::vector<Int>& a, const RatVector& b);

// Dense rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// Exact solve of a square system A x = b. Returns nullopt when A is singular;
// singularity is an expected data-dependent outcome, not an error.
std::optional<RatVector> solve_linear_system(const RatMatrix& A, const RatVector& b);

// Shared-elimination solve for several right-hand sides (used for solutions
// that are affine in a formal parameter: solve once for the finite part and
// once for the parameter part).
std::optional<std::vector<RatVector>> solve_linear_system_multi(
    const RatMatrix& A, const std::vector<RatVector>& rhss);

// Exact determinant via fraction-free elimination (Bareiss) on the
// denominator-cleared integer matrix.
Rational determinant(const RatMatrix& A);

Int factorial(unsigned n);
Int ipow(const Int& base, unsigned e);

}  // namespace dplf
