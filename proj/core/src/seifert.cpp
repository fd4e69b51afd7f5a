#include "seifcalc/seifert.hpp"

#include <algorithm>

#include "seifcalc/errors.hpp"

namespace seifcalc {

void SeifertData::validate() const {
  if (genus < 0) throw InvalidInput("negative genus");
  int fixed = 0;
  for (const auto& f : fibers) {
    if (f.alpha == 0) {
      if (f.beta != 1) throw InvalidInput("a pair with alpha = 0 must have beta = 1");
      ++fixed;
    } else if (gcd(f.alpha, f.beta) != 1) {
      throw InvalidInput("Seifert pair (" + to_string(f.alpha) + "," + to_string(f.beta) +
                         ") is not coprime");
    }
  }
  if (fixed > 1) throw InvalidInput("at most one pair may have alpha = 0");
}

bool SeifertData::has_fixed_component() const {
  return std::any_of(fibers.begin(), fibers.end(), [](const Fiber& f) { return f.alpha == 0; });
}

SeifertData make_seifert(std::initializer_list<std::pair<long, long>> pairs, long genus) {
  SeifertData s;
  s.genus = genus;
  for (auto [a, b] : pairs) s.fibers.push_back({a, b});
  s.validate();
  return s;
}

std::optional<Integer> AbelianGroup::order() const {
  if (rank != 0) return std::nullopt;
  Integer o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianGroup::str() const {
  std::string out;
  for (const auto& d : torsion) out += (out.empty() ? "" : " + ") + ("Z/" + d.get_str());
  for (Integer i = 0; i < rank; ++i) out += (out.empty() ? "" : " + ") + std::string("Z");
  return out.empty() ? "0" : out;
}

std::string to_string(Tightness t) {
  switch (t) {
    case Tightness::UniversallyTight: return "UniversallyTight";
    case Tightness::TightFillable: return "TightFillable";
    case Tightness::Overtwisted: return "Overtwisted";
    case Tightness::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(TightnessRule r) {
  switch (r) {
    case TightnessRule::None: return "none";
    case TightnessRule::ZeroTwistingOrFixedPoints: return "zero-twisting-or-fixed-points";
    case TightnessRule::PositiveEulerSeparating: return "positive-euler-separating";
    case TightnessRule::NegativePairRearrangement: return "negative-pair-rearrangement";
  }
  return "none";
}

namespace {

void require_nonzero_alpha(const SeifertData& s, const char* what) {
  s.validate();
  if (s.has_fixed_component())
    throw InvalidInput(std::string(what) + " is undefined when a fixed component (alpha = 0) is present");
}

Fiber oriented(const Fiber& f) {
  if (f.alpha < 0) return {-f.alpha, -f.beta};
  return f;
}

}  // namespace

Rational euler_number(const SeifertData& s) {
  require_nonzero_alpha(s, "Euler number");
  Rational sum = 0;
  for (const auto& f : s.fibers) sum += Rational(f.beta, f.alpha);
  return -sum;
}

Integer e0(const SeifertData& s) {
  s.validate();
  Integer sum = 0;
  for (const auto& f : s.fibers) {
    if (f.alpha <= 0) throw InvalidInput("e0 requires every alpha >= 1");
    sum += floor_div(-f.beta, f.alpha);
  }
  return sum;
}

NormalForm normalize(const SeifertData& s) {
  require_nonzero_alpha(s, "normal form");
  NormalForm n;
  n.genus = s.genus;
  for (const auto& raw : s.fibers) {
    Fiber f = oriented(raw);
    if (f.alpha == 1) {
      n.b += f.beta;
      continue;
    }
    Integer r = mod_floor(f.beta, f.alpha);
    n.b += (f.beta - r) / f.alpha;
    n.fibers.push_back({f.alpha, r});
  }
  std::sort(n.fibers.begin(), n.fibers.end(), [](const Fiber& x, const Fiber& y) {
    return x.alpha != y.alpha ? x.alpha < y.alpha : x.beta < y.beta;
  });
  return n;
}

SeifertData to_seifert(const NormalForm& n) {
  SeifertData s;
  s.genus = n.genus;
  s.fibers.push_back({1, n.b});
  for (const auto& f : n.fibers) s.fibers.push_back(f);
  return s;
}

bool same_seifert(const SeifertData& a, const SeifertData& b) { return normalize(a) == normalize(b); }

SeifertData reverse_orientation(const SeifertData& s) {
  s.validate();
  SeifertData r = s;
  for (auto& f : r.fibers)
    if (f.alpha != 0) f.beta = -f.beta;
  return r;
}

std::size_t exceptional_count(const SeifertData& s) {
  return static_cast<std::size_t>(std::count_if(s.fibers.begin(), s.fibers.end(),
                                                [](const Fiber& f) { return abs(f.alpha) >= 2; }));
}

IntMatrix h1_presentation(const SeifertData& s) {
  require_nonzero_alpha(s, "H1");
  const std::size_t k = s.fibers.size();
  IntMatrix m(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    m.at(i, i) = s.fibers[i].alpha;
    m.at(i, k) = s.fibers[i].beta;
    m.at(k, i) = 1;
  }
  return m;
}

AbelianGroup h1(const SeifertData& s) {
  AbelianGroup g;
  g.rank = 2 * s.genus;
  for (const auto& d : smith_elementary_divisors(h1_presentation(s))) {
    if (d == 0)
      g.rank += 1;
    else if (d > 1)
      g.torsion.push_back(d);
  }
  return g;
}

namespace {

Integer cokernel_order(const IntMatrix& m) {
  Integer o = 1;
  for (const auto& d : smith_elementary_divisors(m)) {
    if (d == 0) throw InternalAssertion("cokernel unexpectedly infinite");
    o *= d;
  }
  return o;
}

}  // namespace

Integer fiber_class_order(const SeifertData& s, std::optional<std::size_t> which) {
  if (s.genus != 0 && h1(s).rank != 0) throw InvalidInput("fiber order requires a finite H1");
  IntMatrix pres = h1_presentation(s);
  AbelianGroup g = h1(s);
  if (!g.finite()) throw InvalidInput("fiber order requires a finite H1");
  const std::size_t k = s.fibers.size();
  IntMatrix ext(pres.rows() + 1, pres.cols());
  for (std::size_t i = 0; i < pres.rows(); ++i)
    for (std::size_t j = 0; j < pres.cols(); ++j) ext.at(i, j) = pres.at(i, j);
  if (which) {
    if (*which >= k) throw InvalidInput("fiber index out of range");
    // core of the fiber solid torus: u q + v h with -beta u + alpha v = 1
    const Fiber& f = s.fibers[*which];
    Egcd e = egcd(-f.beta, f.alpha);
    ext.at(pres.rows(), *which) = e.x;
    ext.at(pres.rows(), k) = e.y;
  } else {
    ext.at(pres.rows(), k) = 1;
  }
  // |<x>| = |coker R| / |coker (R with x added as a relation)|
  return cokernel_order(pres) / cokernel_order(ext);
}

LensPair lens_from_two_fibers(const SeifertData& s) {
  s.validate();
  if (s.genus != 0) throw InvalidInput("lens recognition requires genus 0");
  if (s.has_fixed_component()) throw InvalidInput("lens recognition requires alpha != 0");
  if (exceptional_count(s) > 2) throw InvalidInput("more than two exceptional fibers");

  Fiber f1{1, 0}, f2{1, 0};
  if (s.fibers.size() == 2) {
    f1 = s.fibers[0];
    f2 = s.fibers[1];
  } else {
    // fold the alpha = 1 terms into the first exceptional fiber
    std::vector<Fiber> ex;
    Integer shift = 0;
    for (const auto& raw : s.fibers) {
      Fiber f = oriented(raw);
      if (f.alpha == 1)
        shift += f.beta;
      else
        ex.push_back(f);
    }
    if (ex.size() == 2) {
      f1 = ex[0];
      f2 = ex[1];
    } else if (ex.size() == 1) {
      f1 = ex[0];
    }
    f1.beta += shift * f1.alpha;
  }
  Integer a = f1.alpha * f2.beta + f1.beta * f2.alpha;
  Egcd e = egcd(f2.alpha, f2.beta);  // a2 x + b2 y = 1
  Integer beta2p = e.x, alpha2p = -e.y;
  Integer b = f1.alpha * beta2p + f1.beta * alpha2p;
  if (a < 0) {
    a = -a;
    b = -b;
  }
  if (a > 0) b = mod_floor(b, a);
  return {a, b};
}

bool lens_equal(const LensPair& x, const LensPair& y) {
  LensPair p = x, q = y;
  if (p.a < 0) p = {-p.a, -p.b};
  if (q.a < 0) q = {-q.a, -q.b};
  if (p.a == 0 || q.a == 0) throw InvalidInput("lens_equal is undefined for a = 0");
  if (p.a != q.a) return false;
  return mod_floor(p.b - q.b, p.a) == 0 || mod_floor(p.b * q.b - 1, p.a) == 0;
}

LensPair lens_reverse(const LensPair& x) {
  if (x.a == 0) return x;
  return {x.a, mod_floor(-x.b, abs(x.a))};
}

Rational slope_change_of_basis(const Integer& alpha, const Integer& beta, const Integer& alpha_p,
                               const Integer& beta_p, const Rational& s) {
  if (alpha * beta_p + beta * alpha_p != 1)
    throw InvalidInput("change of basis requires alpha*beta' + beta*alpha' = 1");
  Rational den = Rational(beta) * s + Rational(alpha);
  if (den.sign() == 0) throw InvalidInput("slope change of basis divides by zero");
  return (Rational(beta_p) * s - Rational(alpha_p)) / den;
}

Admissibility surgery_admissibility(const Integer& a1, const Integer& b1, const Integer& a1p,
                                    const Integer& b1p, const Integer& a2, const Integer& b2) {
  if (a1 * b1p + b1 * a1p != 1)
    throw InvalidInput("admissibility requires alpha1*beta1' + beta1*alpha1' = 1");
  Integer den = a2 * b1 - a1 * b2;
  if (den == 0 || a1 == 0) throw InvalidInput("surgery coefficient divides by zero");
  Admissibility out;
  out.coefficient = Rational(Integer(a2 * b1p + b2 * a1p), den);
  out.slope = Rational(Integer(-a1p), a1);
  out.admissible = out.difference().sign() > 0;
  return out;
}

TightnessVerdict tightness_verdict(const SeifertData& s, std::size_t dividing,
                                   bool has_fixed_points) {
  s.validate();
  if (dividing >= s.fibers.size()) throw InvalidInput("dividing index out of range");

  if (has_fixed_points || s.has_fixed_component())
    return {Tightness::Overtwisted, TightnessRule::ZeroTwistingOrFixedPoints};

  const std::size_t k = exceptional_count(s);
  const bool small = s.genus == 0 && k <= 3;
  if (small) {
    Integer invariant_e0 = e0(to_seifert(normalize(s)));
    if (invariant_e0 <= -2) return {Tightness::Overtwisted, TightnessRule::ZeroTwistingOrFixedPoints};
  }
  if (s.genus != 0) return {};

  const Rational e = euler_number(s);
  const bool iso_exceptional = abs(s.fibers[dividing].alpha) >= 2;
  if (k <= 2 && e.sign() > 0 && (k < 2 || iso_exceptional))
    return {Tightness::UniversallyTight, TightnessRule::PositiveEulerSeparating};

  // Slots: the isolated fiber, the other exceptional fibers, padded with (1,0).
  std::vector<Fiber> others;
  for (std::size_t i = 0; i < s.fibers.size(); ++i) {
    if (i == dividing) continue;
    Fiber f = oriented(s.fibers[i]);
    if (f.alpha >= 2) others.push_back(f);
  }
  if (others.size() > 2) return {};
  while (others.size() < 2) others.push_back({1, 0});

  // Integer shifts preserve the sum, so only residues matter: the third fiber
  // can take beta' = the largest negative integer congruent to beta, and the
  // remaining pair absorbs the rest. The pair sum is then -e - beta'/alpha.
  for (const auto& third : others) {
    Integer beta_neg = mod_floor(third.beta, third.alpha) - third.alpha;  // in [-alpha, -1]
    Rational pair_sum = -e - Rational(beta_neg, third.alpha);
    if (pair_sum.sign() <= 0) return {Tightness::TightFillable, TightnessRule::NegativePairRearrangement};
  }
  return {};
}

}  // namespace seifcalc
