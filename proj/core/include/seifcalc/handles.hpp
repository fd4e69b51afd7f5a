#pragma once

#include <optional>
#include <vector>

#include "seifcalc/arith.hpp"
#include "seifcalc/openbook.hpp"
#include "seifcalc/seifert.hpp"

namespace seifcalc {

struct FramingResult {
  Rational F;
  Integer beta_bar;
};

// F = (n/p - target)/alpha and beta_bar = (1 - target*beta)/alpha.
// Throws Infeasible when F <= 0 and InvalidInput when beta_bar is not integral.
FramingResult framing_for_target(const Integer& alpha, const Integer& beta, const Integer& n,
                                 const Integer& p, const Integer& target);

struct AttachmentPlan {
  RationalOpenBook openbook;
  std::vector<Integer> targets;
  std::vector<Rational> F;
  std::vector<Integer> beta_bar;
};

AttachmentPlan make_plan(const RationalOpenBook& ob, const std::vector<Integer>& targets);

// Bindings become (target, beta_bar); interior fibers have beta negated.
SeifertData transform_boundary(const AttachmentPlan& plan);

Rational framing_wrt_slope(const Rational& s, const Integer& alpha, const Integer& target);

// n/alpha, valid when e = -1/(n alpha).
Rational zero_framing_slope(const Integer& n, const Integer& alpha, const Rational& e);

struct PageBinding {
  Integer p;
  Rational F;
};
Rational k_core_pairing(const Integer& chi, const std::vector<PageBinding>& bindings);

struct TargetBinding {
  Integer alpha, target, p;
};
// n(s + r - 2 + 2g - sum 1/alpha_i - sum 1/alpha_j) - sum p_i (1 - target_i/alpha_i).
Rational k_pairing_seifert(const Integer& n, const std::vector<TargetBinding>& bindings,
                           const std::vector<Integer>& interior_alphas, const Integer& genus = 0);

Rational page_class_self_intersection(const Integer& n, const std::vector<TargetBinding>& bindings);

struct CuspKind {
  Integer p, q;
};
// (p-1)(q-1) - 2 - self_int for a unicuspidal sphere, -2 - self_int for a smooth one.
Integer adjunction_defect(const std::optional<CuspKind>& cusp, const Integer& self_int);

struct RatioInterval {
  Rational lower;
  std::optional<Rational> upper;  // absent: unbounded above
  bool contains(const Rational& r) const { return lower < r && (!upper || r < *upper); }
};

// Range of (1/a1 - t1 x)/(1/a2 - t2 y) over x, y > 0 with x + y = T and both terms positive.
RatioInterval area_ratio_interval(const Integer& a1, const Integer& t1, const Integer& a2,
                                  const Integer& t2, const Rational& T);

struct CobordismReport {
  SeifertData m_in, m_out;
  std::vector<Rational> F;
  // Framing relative to the binding's zero-framing, present when that framing is defined.
  std::vector<std::optional<Rational>> f;
  Integer chi = 0;
  std::vector<Integer> omega_class_weights;
  Rational canonical_pairing;
  int sign = 0;
};

CobordismReport attach(const RationalOpenBook& ob, const std::vector<Integer>& targets);

}  // namespace seifcalc
