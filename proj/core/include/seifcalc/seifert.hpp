#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "seifcalc/arith.hpp"

namespace seifcalc {

// A Seifert pair (alpha, beta). A pair contributes beta/alpha to the sum whose
// negative is the Euler number; (1,b) is the integer background term and
// (0,1) marks a fixed circle of the circle action.
struct Fiber {
  Integer alpha, beta;
  friend bool operator==(const Fiber&, const Fiber&) = default;
};

struct SeifertData {
  Integer genus = 0;
  std::vector<Fiber> fibers;

  // Throws InvalidInput unless every pair is coprime, alpha = 0 forces beta = 1,
  // there is at most one such pair and the genus is nonnegative.
  void validate() const;
  bool has_fixed_component() const;
  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

SeifertData make_seifert(std::initializer_list<std::pair<long, long>> pairs, long genus = 0);

struct NormalForm {
  Integer genus = 0;
  Integer b = 0;
  std::vector<Fiber> fibers;  // alpha >= 2, 0 < beta < alpha, sorted
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

struct AbelianGroup {
  std::vector<Integer> torsion;  // each >= 2, d_i | d_{i+1}
  Integer rank = 0;
  bool finite() const { return rank == 0; }
  // Group order; absent when infinite.
  std::optional<Integer> order() const;
  std::string str() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

enum class Tightness { UniversallyTight, TightFillable, Overtwisted, Unknown };

// Which criterion produced a verdict.
enum class TightnessRule {
  None,
  ZeroTwistingOrFixedPoints,   // small Seifert with e0 <= -2, or a fixed point
  PositiveEulerSeparating,     // at most two exceptional fibers, e > 0
  NegativePairRearrangement,   // three-fiber sign pattern after shifting betas
};

struct TightnessVerdict {
  Tightness verdict = Tightness::Unknown;
  TightnessRule rule = TightnessRule::None;
  friend bool operator==(const TightnessVerdict&, const TightnessVerdict&) = default;
};

std::string to_string(Tightness t);
std::string to_string(TightnessRule r);

Rational euler_number(const SeifertData& s);
Integer e0(const SeifertData& s);
NormalForm normalize(const SeifertData& s);
// Normal form as data: the (1,b) term first, then the exceptional fibers.
SeifertData to_seifert(const NormalForm& n);
bool same_seifert(const SeifertData& a, const SeifertData& b);
SeifertData reverse_orientation(const SeifertData& s);

// Number of fibers with |alpha| >= 2.
std::size_t exceptional_count(const SeifertData& s);

// Generators q_1..q_k, h (plus 2g free generators); relations alpha_i q_i + beta_i h
// and q_1 + ... + q_k.
IntMatrix h1_presentation(const SeifertData& s);
AbelianGroup h1(const SeifertData& s);

// Order of the regular fiber h (which = nullopt) or of the core of fiber `which` in a finite H1.
Integer fiber_class_order(const SeifertData& s, std::optional<std::size_t> which);

struct LensPair {
  Integer a, b;
  bool is_s2xs1() const { return a == 0; }
  friend bool operator==(const LensPair&, const LensPair&) = default;
};

// L(a,b) from a = a1 b2 + b1 a2 and b = a1 b2' + b1 a2' with a2 b2' - b2 a2' = 1,
// reported with a >= 0 and b reduced mod a. a = 0 is the S^2 x S^1 sentinel.
LensPair lens_from_two_fibers(const SeifertData& s);
bool lens_equal(const LensPair& x, const LensPair& y);
// L(a,-b).
LensPair lens_reverse(const LensPair& x);

Rational slope_change_of_basis(const Integer& alpha, const Integer& beta, const Integer& alpha_p,
                               const Integer& beta_p, const Rational& s);

struct Admissibility {
  Rational coefficient, slope;
  bool admissible = false;
  Rational difference() const { return slope - coefficient; }
};

Admissibility surgery_admissibility(const Integer& a1, const Integer& b1, const Integer& a1p,
                                    const Integer& b1p, const Integer& a2, const Integer& b2);

// dividing: index into s.fibers of the fiber isolated by the dividing circle.
TightnessVerdict tightness_verdict(const SeifertData& s, std::size_t dividing,
                                   bool has_fixed_points);

}  // namespace seifcalc
