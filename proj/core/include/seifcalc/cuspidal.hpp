#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seifcalc/arith.hpp"
#include "seifcalc/openbook.hpp"
#include "seifcalc/seifert.hpp"

namespace seifcalc {

// Throws InvalidInput unless 1 < p < q and gcd(p, q) = 1.
void require_puiseux(const Integer& p, const Integer& q);

struct DualPair {
  Integer p_prime, q_prime;
  friend bool operator==(const DualPair&, const DualPair&) = default;
};

// The positive solution of p q' + q p' = p q + 1.
DualPair dual_pair(const Integer& p, const Integer& q);

// max(p/(p - p'), q/(q - q')).
Rational bound_excess(const Integer& p, const Integer& q);

// floor(p q + bound_excess(p, q)).
Integer m_bound(const Integer& p, const Integer& q);

struct CuspInvariants {
  std::vector<Integer> multiplicities;  // entries > 1, nonincreasing
  Integer M = 0;                        // sum of squares
  Integer ell = 0;                      // last entry
};

CuspInvariants cusp_invariants(const Integer& p, const Integer& q);

// M + 2 ell + 1.
Integer gs_bound(const Integer& p, const Integer& q);

enum class BoundComparison { LT, EQ };
std::string to_string(BoundComparison c);
BoundComparison compare_bounds(const Integer& p, const Integer& q);

struct BlowupPair {
  Integer p, q, p_prime, q_prime;
};

// One blow-up at the cusp: (p, q - p) sorted; absent when the transform is smooth.
std::optional<BlowupPair> blowup_pair(const Integer& p, const Integer& q);

enum class MpqmCase { Below, AtProduct, Above };
std::string to_string(MpqmCase c);

struct MpqmClass {
  MpqmCase kind = MpqmCase::Below;
  std::optional<SeifertData> manifold;  // absent exactly for AtProduct
  std::vector<LensPair> summands;       // the two lens summands for AtProduct
  ContactType contact;
};

MpqmClass classify_Mpqm(const Integer& p, const Integer& q, const Integer& m);

enum class Fillability { TransverseCase, Fillable, BeyondBound };
std::string to_string(Fillability f);

Fillability fillability_verdict(const Integer& p, const Integer& q, const Integer& m);

enum class ExpectedShape { Seifert, Lens, ConnectedSum };

struct CatalogEntry {
  int family = 0;
  std::string parameter;  // e.g. "d=5", "delta=2", "j=7"
  Integer p, q, d;
  ExpectedShape shape = ExpectedShape::Seifert;
  std::optional<SeifertData> seifert;  // for Seifert
  std::optional<LensPair> lens;        // for Lens (b may be unknown: matched by order only)
};

// Families of curves with m = d^2; d ranges over 3..max_d (and the derived
// parameters that stay within it), Fibonacci indices over odd 5..max_j.
std::vector<CatalogEntry> family_catalog(int max_d = 16, int max_j = 11);

struct CatalogCheck {
  bool manifold_matches = false;
  bool within_bound = false;
  Integer m_bound;
};

CatalogCheck check_catalog_entry(const CatalogEntry& e);

// Fibonacci numbers phi_0 = 0, phi_1 = 1 by exact recursion.
Integer fibonacci(int j);

}  // namespace seifcalc
