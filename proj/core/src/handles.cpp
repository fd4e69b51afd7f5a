#include "seifcalc/handles.hpp"

#include "seifcalc/errors.hpp"

namespace seifcalc {

FramingResult framing_for_target(const Integer& alpha, const Integer& beta, const Integer& n,
                                 const Integer& p, const Integer& target) {
  if (alpha == 0) throw InvalidInput("framing needs alpha != 0");
  if (p <= 0 || n <= 0) throw InvalidInput("framing needs n, p > 0");
  Rational F = (Rational(n, p) - Rational(target)) / Rational(alpha);
  if (F.sign() <= 0) throw Infeasible("target " + to_string(target) + " gives F = " + F.str() + " <= 0");
  Integer rest = 1 - target * beta;
  if (mod_floor(rest, alpha) != 0)
    throw InvalidInput("target fails target*beta = 1 mod alpha");
  return {F, rest / alpha};
}

AttachmentPlan make_plan(const RationalOpenBook& ob, const std::vector<Integer>& targets) {
  if (targets.size() != ob.bindings.size()) throw InvalidInput("one target per binding required");
  AttachmentPlan plan{ob, targets, {}, {}};
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const BindingData& b = ob.bindings[i];
    FramingResult r = framing_for_target(b.oriented.alpha, b.oriented.beta, ob.spec.n, b.p, targets[i]);
    if (targets[i] * b.oriented.beta + b.oriented.alpha * r.beta_bar != 1)
      throw InternalAssertion("target pair is not unimodular");
    plan.F.push_back(r.F);
    plan.beta_bar.push_back(r.beta_bar);
  }
  return plan;
}

SeifertData transform_boundary(const AttachmentPlan& plan) {
  const RationalOpenBook& ob = plan.openbook;
  SeifertData out;
  out.genus = ob.spec.genus;
  for (std::size_t i = 0; i < plan.targets.size(); ++i) {
    const BindingData& b = ob.bindings[i];
    Rational bb = plan.F[i] * Rational(b.oriented.beta) + Rational(Integer(1), b.oriented.alpha) -
                  Rational(ob.spec.n * b.oriented.beta, b.p * b.oriented.alpha);
    if (!bb.is_integer()) throw InvalidInput("transformed beta is not an integer");
    if (bb.num() != plan.beta_bar[i]) throw InternalAssertion("beta_bar formulas disagree");
    if (plan.targets[i] == 0)
      out.fibers.push_back({0, 1});
    else
      out.fibers.push_back({plan.targets[i], bb.num()});
  }
  for (const auto& f : ob.spec.interior) out.fibers.push_back({f.alpha, -f.beta});
  out.validate();
  return out;
}

Rational framing_wrt_slope(const Rational& s, const Integer& alpha, const Integer& target) {
  if (alpha == 0) throw InvalidInput("framing needs alpha != 0");
  return s - Rational(target, alpha);
}

Rational zero_framing_slope(const Integer& n, const Integer& alpha, const Rational& e) {
  if (n == 0 || alpha == 0) throw InvalidInput("zero-framing slope needs n, alpha != 0");
  if (e != -Rational(Integer(1), n * alpha))
    throw InvalidInput("binding is not null-homologous: e != -1/(n alpha)");
  return Rational(n, alpha);
}

Rational k_core_pairing(const Integer& chi, const std::vector<PageBinding>& bindings) {
  Rational out = -Rational(chi);
  for (const auto& b : bindings) {
    if (b.p <= 0 || b.F.sign() <= 0) throw InvalidInput("pairing needs p, F > 0");
    out -= Rational(b.p) * (Rational(1) + b.F);
  }
  return out;
}

Rational k_pairing_seifert(const Integer& n, const std::vector<TargetBinding>& bindings,
                           const std::vector<Integer>& interior_alphas, const Integer& genus) {
  Integer count = Integer(static_cast<unsigned long>(bindings.size() + interior_alphas.size()));
  Rational inner = Rational(count - 2 + 2 * genus);
  Rational tail = 0;
  for (const auto& b : bindings) {
    if (b.alpha == 0) throw InvalidInput("pairing needs alpha != 0");
    inner -= Rational(Integer(1), b.alpha);
    tail += Rational(b.p) * (Rational(1) - Rational(b.target, b.alpha));
  }
  for (const auto& a : interior_alphas) {
    if (a == 0) throw InvalidInput("pairing needs alpha != 0");
    inner -= Rational(Integer(1), a);
  }
  return Rational(n) * inner - tail;
}

Rational page_class_self_intersection(const Integer& n, const std::vector<TargetBinding>& bindings) {
  Rational out = 0;
  for (const auto& b : bindings) {
    if (b.alpha == 0) throw InvalidInput("self-intersection needs alpha != 0");
    out += Rational(b.p) * Rational(n - b.target * b.p, b.alpha);
  }
  return out;
}

Integer adjunction_defect(const std::optional<CuspKind>& cusp, const Integer& self_int) {
  if (!cusp) return -2 - self_int;
  if (cusp->p <= 1 || cusp->p >= cusp->q || gcd(cusp->p, cusp->q) != 1)
    throw InvalidInput("cusp needs coprime 1 < p < q");
  return (cusp->p - 1) * (cusp->q - 1) - 2 - self_int;
}

namespace {

// Open interval (lo, hi) of x with c0 + c1 x > 0, intersected into [lo, hi].
void restrict_positive(const Rational& c0, const Rational& c1, Rational& lo, Rational& hi) {
  if (c1.sign() == 0) {
    if (c0.sign() <= 0) hi = lo;
    return;
  }
  Rational root = -c0 / c1;
  if (c1.sign() > 0) {
    if (root > lo) lo = root;
  } else if (root < hi) {
    hi = root;
  }
}

}  // namespace

RatioInterval area_ratio_interval(const Integer& a1, const Integer& t1, const Integer& a2,
                                  const Integer& t2, const Rational& T) {
  if (a1 == 0 || a2 == 0) throw InvalidInput("area ratio needs alpha != 0");
  if (T.sign() <= 0) throw InvalidInput("area ratio needs T > 0");
  // numerator(x) = 1/a1 - t1 x, denominator(x) = 1/a2 - t2 (T - x)
  Rational n0(Integer(1), a1), n1 = -Rational(t1);
  Rational d0 = Rational(Integer(1), a2) - Rational(t2) * T, d1 = Rational(t2);
  Rational lo = 0, hi = T;
  restrict_positive(n0, n1, lo, hi);
  restrict_positive(d0, d1, lo, hi);
  if (!(lo < hi)) throw Infeasible("no feasible split x + y = T");

  auto value = [&](const Rational& x) -> std::optional<Rational> {
    Rational den = d0 + d1 * x;
    if (den.sign() == 0) return std::nullopt;
    return (n0 + n1 * x) / den;
  };
  std::optional<Rational> at_lo = value(lo), at_hi = value(hi);
  RatioInterval out;
  if (!at_lo || !at_hi) {
    out.lower = at_lo ? *at_lo : *at_hi;
    return out;
  }
  out.lower = std::min(*at_lo, *at_hi);
  out.upper = std::max(*at_lo, *at_hi);
  // the ratio is a Moebius function of x with no pole inside (lo, hi); spot-check monotonicity
  Rational mid = (lo + hi) / Rational(2);
  auto vm = value(mid);
  if (!vm || !out.contains(*vm)) throw InternalAssertion("area ratio is not monotone on the feasible segment");
  return out;
}

CobordismReport attach(const RationalOpenBook& ob, const std::vector<Integer>& targets) {
  AttachmentPlan plan = make_plan(ob, targets);
  CobordismReport r;
  r.m_in = ob.spec.manifold();
  r.m_out = transform_boundary(plan);
  r.F = plan.F;
  r.chi = ob.chi;

  std::optional<Rational> e = euler_number(r.m_in);
  std::vector<PageBinding> page;
  std::vector<TargetBinding> seif;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const BindingData& b = ob.bindings[i];
    r.omega_class_weights.push_back(b.p);
    page.push_back({b.p, plan.F[i]});
    seif.push_back({b.oriented.alpha, targets[i], b.p});

    // zero-framing exists when the binding is null-homologous in M_in
    std::optional<Rational> f;
    if (e && e->sign() != 0 && b.oriented.alpha != 0) {
      Rational np = -(Rational(Integer(1)) / (*e * Rational(b.oriented.alpha)));
      Integer others = 1;
      for (std::size_t j = 0; j < r.m_in.fibers.size(); ++j)
        if (j != i && abs(r.m_in.fibers[j].alpha) >= 2) others = lcm(others, abs(r.m_in.fibers[j].alpha));
      if (np.is_integer() && np.sign() > 0 && np.num() == others) {
        Rational slope = zero_framing_slope(np.num(), b.oriented.alpha, *e);
        f = framing_wrt_slope(slope, b.oriented.alpha, targets[i]);
      }
    }
    r.f.push_back(f);
  }
  std::vector<Integer> interior_alphas;
  for (const auto& fi : ob.spec.interior) interior_alphas.push_back(fi.alpha);

  r.canonical_pairing = k_core_pairing(ob.chi, page);
  Rational other = k_pairing_seifert(ob.spec.n, seif, interior_alphas, ob.spec.genus);
  if (other != r.canonical_pairing)
    throw InternalAssertion("canonical pairings disagree: " + r.canonical_pairing.str() + " vs " + other.str());
  r.sign = r.canonical_pairing.sign();
  return r;
}

}  // namespace seifcalc
