#include "dplf/rational.hpp"

#include <stdexcept>

namespace dplf {

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  return sgn(v_) < 0 ? Rational(mpq_class(-v_)) : *this;
}

Int Rational::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Int Rational::ceil() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: bad input '" + s + "'");
  }
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational dot(const std::vector<Int>& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += Rational(a[i]) * b[i];
  return acc;
}

namespace {

// Forward elimination with partial (first-nonzero) pivoting over an augmented
// matrix; returns false when the coefficient block is singular.
bool eliminate(RatMatrix& M, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M.at(piv, col).is_zero()) ++piv;
    if (piv == n) return false;
    if (piv != col) {
      for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(col, j));
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (M.at(r, col).is_zero()) continue;
      Rational f = M.at(r, col) / M.at(col, col);
      for (std::size_t j = col; j < M.cols(); ++j) {
        M.at(r, j) -= f * M.at(col, j);
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<RatVector>> solve_linear_system_multi(
    const RatMatrix& A, const std::vector<RatVector>& rhss) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("solve_linear_system: matrix not square");
  const std::size_t k = rhss.size();
  RatMatrix M(n, n + k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
    for (std::size_t c = 0; c < k; ++c) {
      if (rhss[c].size() != n) throw std::invalid_argument("solve_linear_system: rhs size mismatch");
      M.at(i, n + c) = rhss[c][i];
    }
  }
  if (!eliminate(M, n)) return std::nullopt;
  std::vector<RatVector> out(k, RatVector(n));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc = M.at(ii, n + c);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= M.at(ii, j) * out[c][j];
      out[c][ii] = acc / M.at(ii, ii);
    }
  }
  return out;
}

std::optional<RatVector> solve_linear_system(const RatMatrix& A, const RatVector& b) {
  auto r = solve_linear_system_multi(A, {b});
  if (!r) return std::nullopt;
  return (*r)[0];
}

Rational determinant(const RatMatrix& A) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return Rational(1);

  // Clear denominators row by row; track the accumulated scale.
  std::vector<std::vector<Int>> M(n, std::vector<Int>(n));
  Int scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Int l(1);
    for (std::size_t j = 0; j < n; ++j) {
      Int d = A.at(i, j).den();
      Int g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = A.at(i, j);
      M[i][j] = q.num() * (l / q.den());
    }
  }

  // Bareiss fraction-free elimination; every division below is exact.
  int sign = 1;
  Int prev(1);
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(M[piv][col]) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(M[piv], M[col]);
      sign = -sign;
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      for (std::size_t j = col + 1; j < n; ++j) {
        Int t = M[r][j] * M[col][col] - M[r][col] * M[col][j];
        mpz_divexact(M[r][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[r][col] = 0;
    }
    prev = M[col][col];
  }
  Int det = M[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

Int factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Int ipow(const Int& base, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace dplf
