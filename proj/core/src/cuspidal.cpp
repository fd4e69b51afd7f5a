#include "seifcalc/cuspidal.hpp"

#include <algorithm>

#include "seifcalc/errors.hpp"

namespace seifcalc {

void require_puiseux(const Integer& p, const Integer& q) {
  if (p <= 1 || p >= q) throw InvalidInput("Puiseux pair needs 1 < p < q");
  if (gcd(p, q) != 1) throw InvalidInput("Puiseux pair needs gcd(p, q) = 1");
}

DualPair dual_pair(const Integer& p, const Integer& q) {
  require_puiseux(p, q);
  Integer qp = *mod_inverse(p, q);
  Integer rest = p * q + 1 - p * qp;
  if (mod_floor(rest, q) != 0) throw InternalAssertion("dual pair is not integral");
  DualPair d{rest / q, qp};
  if (d.p_prime <= 0 || d.p_prime >= p) throw InternalAssertion("dual pair out of range");
  return d;
}

Rational bound_excess(const Integer& p, const Integer& q) {
  DualPair d = dual_pair(p, q);
  return std::max(Rational(p, p - d.p_prime), Rational(q, q - d.q_prime));
}

Integer m_bound(const Integer& p, const Integer& q) {
  return (Rational(p * q) + bound_excess(p, q)).floor();
}

CuspInvariants cusp_invariants(const Integer& p, const Integer& q) {
  require_puiseux(p, q);
  CuspInvariants out;
  Integer a = p, b = q;
  while (a > 1) {
    out.multiplicities.push_back(a);
    out.M += a * a;
    out.ell = a;
    Integer r = b - a;
    if (r < a) {
      b = a;
      a = r;
    } else {
      b = r;
    }
  }
  return out;
}

Integer gs_bound(const Integer& p, const Integer& q) {
  CuspInvariants c = cusp_invariants(p, q);
  return c.M + 2 * c.ell + 1;
}

std::string to_string(BoundComparison c) { return c == BoundComparison::LT ? "LT" : "EQ"; }

BoundComparison compare_bounds(const Integer& p, const Integer& q) {
  Integer m = m_bound(p, q), g = gs_bound(p, q);
  if (m > g) throw InternalAssertion("m_bound exceeds the multiplicity bound");
  return m == g ? BoundComparison::EQ : BoundComparison::LT;
}

std::optional<BlowupPair> blowup_pair(const Integer& p, const Integer& q) {
  require_puiseux(p, q);
  if (q - p == 1) return std::nullopt;
  Integer a = std::min(p, Integer(q - p)), b = std::max(p, Integer(q - p));
  DualPair d = dual_pair(a, b);
  return BlowupPair{a, b, d.p_prime, d.q_prime};
}

std::string to_string(MpqmCase c) {
  switch (c) {
    case MpqmCase::Below: return "Below";
    case MpqmCase::AtProduct: return "AtProduct";
    case MpqmCase::Above: return "Above";
  }
  return "Below";
}

MpqmClass classify_Mpqm(const Integer& p, const Integer& q, const Integer& m) {
  require_puiseux(p, q);
  if (m < 1) throw InvalidInput("m must be positive");
  DualPair d = dual_pair(p, q);
  Integer pq = p * q;
  MpqmClass out;
  if (m == pq) {
    out.kind = MpqmCase::AtProduct;
    out.summands = {{p, d.p_prime}, {q, d.q_prime}};
    out.contact.kind = ContactKind::FixedComponent;
    return out;
  }
  SeifertData s;
  if (m < pq) {
    out.kind = MpqmCase::Below;
    s.fibers.push_back({pq - m, pq - m + 1});
    out.contact.kind = ContactKind::Transverse;
  } else {
    out.kind = MpqmCase::Above;
    s.fibers.push_back({m - pq, m - pq - 1});
    out.contact.kind = ContactKind::NonTransverse;
    out.contact.dividing = {0};
  }
  s.fibers.push_back({p, -d.p_prime});
  s.fibers.push_back({q, -d.q_prime});
  s.validate();
  out.manifold = s;
  return out;
}

std::string to_string(Fillability f) {
  switch (f) {
    case Fillability::TransverseCase: return "TransverseCase";
    case Fillability::Fillable: return "Fillable";
    case Fillability::BeyondBound: return "BeyondBound";
  }
  return "TransverseCase";
}

Fillability fillability_verdict(const Integer& p, const Integer& q, const Integer& m) {
  require_puiseux(p, q);
  if (m < 1) throw InvalidInput("m must be positive");
  if (m <= p * q) return Fillability::TransverseCase;
  bool within = Rational(m - p * q) <= bound_excess(p, q);
  if (within != (m <= m_bound(p, q))) throw InternalAssertion("fillability test disagrees with m_bound");
  return within ? Fillability::Fillable : Fillability::BeyondBound;
}

Integer fibonacci(int j) {
  if (j < 0) throw InvalidInput("negative Fibonacci index");
  Integer a = 0, b = 1;
  for (int i = 0; i < j; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return a;
}

std::vector<CatalogEntry> family_catalog(int max_d, int max_j) {
  std::vector<CatalogEntry> out;
  for (long d = 3; d <= max_d; ++d) {
    CatalogEntry e{1, "d=" + std::to_string(d), d - 1, d, d, ExpectedShape::Seifert, {}, {}};
    e.seifert = make_seifert({{d, d - 1}, {d - 1, -1}, {d, 1 - d}});
    out.push_back(e);
  }
  for (long delta = 2; 2 * delta <= max_d; ++delta) {
    CatalogEntry e{2, "delta=" + std::to_string(delta), delta, 4 * delta - 1, 2 * delta,
                   ExpectedShape::Seifert, {}, {}};
    e.seifert = make_seifert({{delta, delta - 1}, {delta, 1 - delta}, {4 * delta - 1, -4}});
    out.push_back(e);
  }
  for (int j = 5; j <= max_j; j += 2) {
    Integer a = fibonacci(j - 2), b = fibonacci(j);
    out.push_back({3, "j=" + std::to_string(j), a * a, b * b, a * b, ExpectedShape::ConnectedSum, {}, {}});
  }
  for (int j = 5; j <= max_j; j += 2) {
    CatalogEntry e{4, "j=" + std::to_string(j), fibonacci(j - 2), fibonacci(j + 2), fibonacci(j),
                   ExpectedShape::Lens, {}, {}};
    e.lens = LensPair{e.d * e.d, 0};
    out.push_back(e);
  }
  {
    CatalogEntry e{5, "d=8", 3, 22, 8, ExpectedShape::Seifert, {}, {}};
    e.seifert = make_seifert({{2, -1}, {3, 2}, {22, 7}});
    out.push_back(e);
  }
  {
    CatalogEntry e{6, "d=16", 6, 43, 16, ExpectedShape::Seifert, {}, {}};
    e.seifert = make_seifert({{2, -1}, {6, 5}, {43, 7}});
    out.push_back(e);
  }
  return out;
}

CatalogCheck check_catalog_entry(const CatalogEntry& e) {
  Integer m = e.d * e.d;
  CatalogCheck out;
  out.m_bound = m_bound(e.p, e.q);
  out.within_bound = m <= out.m_bound;
  MpqmClass c = classify_Mpqm(e.p, e.q, m);
  switch (e.shape) {
    case ExpectedShape::Seifert:
      out.manifold_matches = c.manifold && same_seifert(*c.manifold, *e.seifert);
      break;
    case ExpectedShape::Lens: {
      // the first fiber must be (1, 2) and the lens order must be d^2
      if (!c.manifold || c.manifold->fibers[0] != Fiber{1, 2}) break;
      LensPair l = lens_from_two_fibers(*c.manifold);
      out.manifold_matches = l.a == e.lens->a && Integer(h1(*c.manifold).order().value_or(0)) == l.a;
      break;
    }
    case ExpectedShape::ConnectedSum: {
      DualPair d = dual_pair(e.p, e.q);
      out.manifold_matches = c.kind == MpqmCase::AtProduct && c.summands.size() == 2 &&
                             lens_equal(c.summands[0], {e.p, d.p_prime}) &&
                             lens_equal(c.summands[1], {e.q, d.q_prime});
      break;
    }
  }
  return out;
}

}  // namespace seifcalc
