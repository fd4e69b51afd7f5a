#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace seifcalc {

using Integer = mpz_class;

// Exact rational, kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}
  Rational(const Integer& v) : v_(v) {}
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  Integer floor() const;
  Integer ceil() const;
  Rational abs() const;
  Rational inverse() const;

  // "num/den", or "num" when the denominator is 1.
  std::string str() const;
  static Rational parse(const std::string& text);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  static Rational from_mpq(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    r.v_.canonicalize();
    return r;
  }
  mpq_class v_;
};

// Integer helpers. floor_div and mod_floor round toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& n);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
std::string to_string(const Integer& a);
Integer parse_integer(const std::string& text);

struct Egcd {
  Integer g, x, y;
};

// g = gcd(|a|,|b|) > 0 and a*x + b*y = g.
Egcd egcd(const Integer& a, const Integer& b);

// x in (0,n) with a*x = 1 mod n, absent when gcd(a,n) != 1. Requires n >= 2.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& n);

// Hirzebruch-Jung expansion num/den = a1 - 1/(a2 - 1/(... - 1/ak)), every ai >= 2.
std::vector<Integer> neg_cf(const Integer& num, const Integer& den);

// Evaluates a1 - 1/(a2 - ...) as num/den via continuants; any integer entries.
struct CfValue {
  Integer num, den;
};
CfValue eval_neg_cf(const std::vector<Integer>& entries);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

// Diagonal of the Smith normal form, one entry per column, zeros last, so the
// cokernel of the row space is the direct sum of Z/d_i (d_i = 0 is a free Z).
std::vector<Integer> smith_elementary_divisors(const IntMatrix& m);

// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

// Leading principal minors D_1..D_n.
std::vector<Integer> leading_minors(const IntMatrix& m);

// Unique solution of Q z = a over the rationals; throws InvalidInput if singular.
std::vector<Rational> solve_rational(const IntMatrix& q, const std::vector<Rational>& a);

}  // namespace seifcalc
