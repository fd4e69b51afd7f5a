#include "seifcalc/arith.hpp"

#include <algorithm>
#include <utility>

#include "seifcalc/errors.hpp"

namespace seifcalc {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Integer Rational::floor() const { return floor_div(v_.get_num(), v_.get_den()); }

Integer Rational::ceil() const { return -floor_div(-v_.get_num(), v_.get_den()); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (sign() == 0) throw InvalidInput("inverse of zero");
  return Rational(v_.get_den(), v_.get_num());
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw InvalidInput("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return from_mpq(mpq_class(-v_)); }

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw InvalidInput("division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& n) {
  if (n == 0) throw InvalidInput("modulus zero");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  if (r < 0) r += abs(n);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

std::string to_string(const Integer& a) { return a.get_str(); }

Integer parse_integer(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n");
  auto last = text.find_last_not_of(" \t\n");
  std::string t = first == std::string::npos ? "" : text.substr(first, last - first + 1);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  bool ok = !t.empty();
  for (std::size_t i = 0; i < t.size() && ok; ++i) {
    char ch = t[i];
    ok = (ch >= '0' && ch <= '9') || (i == 0 && ch == '-' && t.size() > 1);
  }
  if (!ok) throw InvalidInput("not an integer: '" + text + "'");
  return Integer(t);
}

Egcd egcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw InvalidInput("egcd(0,0) is undefined");
  Integer r0 = abs(a), r1 = abs(b);
  Integer x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) x0 = -x0;
  if (b < 0) y0 = -y0;
  return {r0, x0, y0};
}

std::optional<Integer> mod_inverse(const Integer& a, const Integer& n) {
  if (n < 2) throw InvalidInput("mod_inverse requires modulus >= 2");
  Integer r = mod_floor(a, n);
  if (r == 0) return std::nullopt;
  Egcd e = egcd(r, n);
  if (e.g != 1) return std::nullopt;
  return mod_floor(e.x, n);
}

std::vector<Integer> neg_cf(const Integer& num, const Integer& den) {
  if (!(den >= 1 && num > den)) throw InvalidInput("neg_cf requires num > den >= 1");
  if (gcd(num, den) != 1) throw InvalidInput("neg_cf requires coprime arguments");
  std::vector<Integer> out;
  Integer a = num, b = den;
  while (b != 0) {
    // ceiling quotient keeps every entry >= 2
    Integer c = -floor_div(-a, b);
    out.push_back(c);
    Integer r = c * b - a;
    a = b;
    b = r;
  }
  return out;
}

CfValue eval_neg_cf(const std::vector<Integer>& entries) {
  // Continuants from the tail: K(a_i..a_k) = a_i K(a_{i+1}..) - K(a_{i+2}..).
  Integer next = 1, after = 0;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    Integer cur = (*it) * next - after;
    after = next;
    next = cur;
  }
  return {next, after};
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

namespace {

// Position of the nonzero entry of least absolute value in the trailing block.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      Integer v = abs(a.at(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
}

}  // namespace

std::vector<Integer> smith_elementary_divisors(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t r = a.rows(), c = a.cols();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    auto piv = min_pivot(a, t);
    if (!piv) break;
    swap_rows(a, t, piv->first);
    swap_cols(a, t, piv->second);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a.at(i, t) == 0) continue;
        Integer q = floor_div(a.at(i, t), a.at(t, t));
        for (std::size_t j = t; j < c; ++j) a.at(i, j) -= q * a.at(t, j);
        if (a.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a.at(t, j) == 0) continue;
        Integer q = floor_div(a.at(t, j), a.at(t, t));
        for (std::size_t i = t; i < r; ++i) a.at(i, j) -= q * a.at(i, t);
        if (a.at(t, j) != 0) dirty = true;
      }
      if (!dirty) {
        // Enforce d_t | every remaining entry.
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < r && !bad_row; ++i)
          for (std::size_t j = t + 1; j < c; ++j)
            if (a.at(i, j) % a.at(t, t) != 0) {
              bad_row = i;
              break;
            }
        if (!bad_row) break;
        for (std::size_t j = t; j < c; ++j) a.at(t, j) += a.at(*bad_row, j);
      }
      // next pivot: smallest nonzero entry of row t or column t
      std::optional<std::pair<std::size_t, std::size_t>> best;
      Integer best_abs;
      for (std::size_t i = t; i < r; ++i)
        if (a.at(i, t) != 0 && (!best || abs(a.at(i, t)) < best_abs)) {
          best = {i, t};
          best_abs = abs(a.at(i, t));
        }
      for (std::size_t j = t; j < c; ++j)
        if (a.at(t, j) != 0 && (!best || abs(a.at(t, j)) < best_abs)) {
          best = {t, j};
          best_abs = abs(a.at(t, j));
        }
      swap_rows(a, t, best->first);
      swap_cols(a, t, best->second);
    }
    diag.push_back(abs(a.at(t, t)));
  }
  diag.resize(c, Integer(0));
  return diag;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a.at(s, k) == 0) ++s;
      if (s == n) return 0;
      swap_rows(a, k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = v;
      }
    }
    prev = a.at(k, k);
  }
  Integer d = a.at(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

std::vector<Integer> leading_minors(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidInput("leading minors of a non-square matrix");
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
    out.push_back(determinant(sub));
  }
  return out;
}

std::vector<Rational> solve_rational(const IntMatrix& q, const std::vector<Rational>& a) {
  if (!q.is_square() || q.rows() != a.size()) throw InvalidInput("dimension mismatch in linear solve");
  const std::size_t n = q.rows();
  std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = q.at(i, j);
    aug[i][n] = a[i].raw();
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && aug[p][k] == 0) ++p;
    if (p == n) throw InvalidInput("singular matrix");
    std::swap(aug[k], aug[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || aug[i][k] == 0) continue;
      mpq_class f = aug[i][k] / aug[k][k];
      for (std::size_t j = k; j <= n; ++j) aug[i][j] -= f * aug[k][j];
    }
  }
  std::vector<Rational> z;
  z.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class v = aug[i][n] / aug[i][i];
    z.emplace_back(v.get_num(), v.get_den());
  }
  return z;
}

}  // namespace seifcalc
