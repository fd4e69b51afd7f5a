#include "seifcalc/openbook.hpp"

#include <mutex>

#include "seifcalc/errors.hpp"

namespace seifcalc {

namespace {

void require_orders(const std::vector<Integer>& orders) {
  if (orders.empty()) throw InvalidInput("dagger_solve needs at least one order");
  for (const auto& n : orders)
    if (n < 2) throw InvalidInput("every order must be at least 2");
}

// Walks all admissible tuples in lexicographic order; stops when visit returns false.
template <class Visit>
void enumerate_dagger(const std::vector<Integer>& orders, Visit visit) {
  require_orders(orders);
  const std::size_t m = orders.size();
  std::vector<Integer> c(m, 0);
  std::vector<Rational> partial(m + 1, 0);
  std::size_t i = 0;
  while (true) {
    // advance c[i] to its next unit residue
    do {
      c[i] += 1;
    } while (c[i] < orders[i] && gcd(c[i], orders[i]) != 1);
    if (c[i] >= orders[i]) {
      c[i] = 0;
      if (i == 0) return;
      --i;
      continue;
    }
    partial[i + 1] = partial[i] + Rational(c[i], orders[i]);
    if (i + 1 == m) {
      if (partial[m].is_integer() && !visit(c)) return;
    } else {
      ++i;
    }
  }
}

}  // namespace

std::optional<std::vector<Integer>> dagger_solve(const std::vector<Integer>& orders) {
  std::optional<std::vector<Integer>> out;
  enumerate_dagger(orders, [&](const std::vector<Integer>& c) {
    out = c;
    return false;
  });
  return out;
}

std::vector<std::vector<Integer>> dagger_solve_all(const std::vector<Integer>& orders) {
  std::vector<std::vector<Integer>> out;
  enumerate_dagger(orders, [&](const std::vector<Integer>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

KL binding_kl(const Integer& n, const Integer& c) {
  if (n < 1) throw InvalidInput("monodromy order must be positive");
  if (n == 1) return {0, 1};
  auto inv = mod_inverse(mod_floor(-c, n), n);
  if (!inv) throw InvalidInput("binding parameter c must be a unit mod n");
  Integer k = *inv;
  Integer num = 1 + k * c;
  if (mod_floor(num, n) != 0) throw InternalAssertion("k c = -1 mod n failed");
  return {k, num / n};
}

SeifertData monodromy_to_seifert(const Integer& genus, const std::vector<Fiber>& interior,
                                 const std::vector<MonodromyBinding>& bindings) {
  Rational b = 0;
  for (const auto& f : interior) {
    if (f.alpha == 0) throw InvalidInput("interior fiber with alpha = 0");
    b += Rational(f.beta, f.alpha);
  }
  for (const auto& mb : bindings) b += Rational(mb.c, mb.n);
  if (!b.is_integer()) throw InvalidInput("monodromy data violates the integrality condition");

  SeifertData s;
  s.genus = genus;
  s.fibers.push_back({1, -b.num()});
  for (const auto& f : interior) s.fibers.push_back(f);
  for (const auto& mb : bindings) {
    KL kl = binding_kl(mb.n, mb.c);
    s.fibers.push_back({kl.k * mb.p + mb.n * mb.p_prime, kl.l * mb.p + mb.c * mb.p_prime});
  }
  s.validate();
  return s;
}

void OpenBookSpec::validate() const {
  if (genus < 0) throw InvalidInput("negative genus");
  if (n < 1) throw InvalidInput("monodromy order must be positive");
  Rational sum = 0;
  for (const auto& f : interior) {
    if (f.alpha < 2 || f.beta <= 0 || f.beta >= f.alpha || gcd(f.alpha, f.beta) != 1)
      throw InvalidInput("interior fibers need 0 < beta < alpha, coprime");
    if (mod_floor(n, f.alpha) != 0) throw InvalidInput("n must be a multiple of every interior alpha");
    sum += Rational(f.beta, f.alpha);
  }
  Integer bsum = 0;
  int fixed = 0;
  for (const auto& bs : bindings) {
    if (bs.pair.alpha == 0) {
      if (bs.pair.beta != 1) throw InvalidInput("a binding with alpha = 0 must have beta = 1");
      ++fixed;
    } else if (gcd(bs.pair.alpha, bs.pair.beta) != 1) {
      throw InvalidInput("binding pair is not coprime");
    }
    if (n == 1) {
      if (bs.c != 0) throw InvalidInput("with n = 1 every c must be 0");
    } else if (bs.c <= 0 || bs.c >= n || gcd(n, bs.c) != 1) {
      throw InvalidInput("binding parameter c must satisfy 0 < c < n and gcd(n, c) = 1");
    }
    sum += Rational(bs.c, n);
    bsum += bs.b;
  }
  if (fixed > 1) throw InvalidInput("at most one binding may have alpha = 0");
  if (!sum.is_integer()) throw InvalidInput("sum of beta_j/alpha_j and c_i/n is not an integer");
  if (bsum != sum.num()) throw InvalidInput("sum of b_i must equal " + sum.str());
}

SeifertData OpenBookSpec::manifold() const {
  SeifertData s;
  s.genus = genus;
  for (const auto& bs : bindings) s.fibers.push_back(bs.pair);
  for (const auto& f : interior) s.fibers.push_back(f);
  s.validate();
  return s;
}

std::string to_string(BindingOrientation o) {
  switch (o) {
    case BindingOrientation::Fiber: return "+";
    case BindingOrientation::AntiFiber: return "-";
    case BindingOrientation::Fixed: return "fixed";
  }
  return "+";
}

std::string to_string(ContactKind k) {
  switch (k) {
    case ContactKind::Transverse: return "Transverse";
    case ContactKind::NonTransverse: return "NonTransverse";
    case ContactKind::FixedComponent: return "FixedComponent";
  }
  return "Transverse";
}

std::vector<MonodromyBinding> RationalOpenBook::monodromy() const {
  std::vector<MonodromyBinding> out;
  for (std::size_t i = 0; i < bindings.size(); ++i)
    out.push_back({spec.n, spec.bindings[i].c, bindings[i].p, bindings[i].p_prime});
  return out;
}

namespace {

Integer closed_form_chi(const Integer& n, const Integer& genus, std::size_t s,
                        const std::vector<Integer>& interior_alphas) {
  Rational chi = Rational(2 - 2 * genus - Integer(static_cast<unsigned long>(s)) -
                          Integer(static_cast<unsigned long>(interior_alphas.size())));
  for (const auto& a : interior_alphas) chi += Rational(Integer(1), a);
  chi *= Rational(n);
  if (!chi.is_integer()) throw InternalAssertion("page Euler characteristic is not an integer");
  return chi.num();
}

// The closed form is checked against two independently known pages before first use.
void check_closed_form_once() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    if (closed_form_chi(52, 0, 2, {13}) != -48 || closed_form_chi(6, 0, 1, {2, 3}) != -1 ||
        closed_form_chi(1, 0, 1, {}) != 1)
      throw InternalAssertion("page Euler characteristic closed form failed its reference checks");
  });
}

}  // namespace

Integer page_euler_char(const OpenBookSpec& spec) {
  check_closed_form_once();
  std::vector<Integer> alphas;
  for (const auto& f : spec.interior) alphas.push_back(f.alpha);
  return closed_form_chi(spec.n, spec.genus, spec.bindings.size(), alphas);
}

Integer page_euler_char(const RationalOpenBook& ob) { return page_euler_char(ob.spec); }

RationalOpenBook open_book_multi(const OpenBookSpec& spec) {
  spec.validate();
  RationalOpenBook ob;
  ob.spec = spec;
  const Integer& n = spec.n;
  for (const auto& bs : spec.bindings) {
    BindingData d;
    KL kl = binding_kl(n, bs.c);
    d.k = kl.k;
    d.l = kl.l;
    const Integer& a = bs.pair.alpha;
    const Integer& be = bs.pair.beta;
    Integer signed_p = n * be + n * a * bs.b - a * bs.c;
    if (a == 0) {
      d.oriented = bs.pair;
      d.orientation = BindingOrientation::Fixed;
    } else {
      if (signed_p == 0) throw InvalidInput("binding orientation quantity vanishes");
      d.oriented = signed_p > 0 ? bs.pair : Fiber{-a, -be};
      d.orientation = d.oriented.alpha > 0 ? BindingOrientation::Fiber : BindingOrientation::AntiFiber;
    }
    d.p = abs(signed_p);
    // the binding's pair in monodromy coordinates absorbs its b term
    Integer mono_alpha = d.oriented.alpha;
    Integer mono_beta = d.oriented.beta + bs.b * d.oriented.alpha;
    Integer rest = mono_alpha - d.k * d.p;
    if (mod_floor(rest, n) != 0) throw InternalAssertion("p' is not integral");
    d.p_prime = rest / n;
    if (d.l * d.p + bs.c * d.p_prime != mono_beta)
      throw InternalAssertion("binding does not match its monodromy data");
    ob.bindings.push_back(d);
  }
  ob.chi = page_euler_char(spec);
  return ob;
}

std::optional<RationalOpenBook> open_book_single(const SeifertData& s, std::size_t binding_index) {
  s.validate();
  if (binding_index >= s.fibers.size()) throw InvalidInput("binding index out of range");
  OpenBookSpec spec;
  spec.genus = s.genus;
  Integer n = 1;
  Rational sum = 0;
  for (std::size_t i = 0; i < s.fibers.size(); ++i) {
    if (i == binding_index) continue;
    const Fiber& f = s.fibers[i];
    if (f.alpha < 2 || f.beta <= 0 || f.beta >= f.alpha)
      throw InvalidInput("non-binding fibers need 0 < beta < alpha");
    spec.interior.push_back(f);
    n = lcm(n, f.alpha);
    sum += Rational(f.beta, f.alpha);
  }
  Integer m = (sum * Rational(n)).num();
  if (gcd(n, m) != 1) return std::nullopt;
  Integer c = mod_floor(-m, n);
  spec.n = n;
  spec.bindings.push_back({s.fibers[binding_index], c, (m + c) / n});
  RationalOpenBook ob = open_book_multi(spec);
  const Fiber& bind = s.fibers[binding_index];
  if (bind.alpha == 0) {
    if (ob.bindings[0].p != n) throw InternalAssertion("fixed binding must have p = n");
  } else {
    Rational expect = (Rational(n) * Rational(bind.alpha) * euler_number(s)).abs();
    if (expect != Rational(ob.bindings[0].p)) throw InternalAssertion("p differs from |n alpha e|");
  }
  return ob;
}

ContactType contact_type(const RationalOpenBook& ob) {
  ContactType t;
  for (std::size_t i = 0; i < ob.bindings.size(); ++i) {
    switch (ob.bindings[i].orientation) {
      case BindingOrientation::Fixed:
        throw InvalidInput("dividing set is only described for fixed-point-free actions");
      case BindingOrientation::AntiFiber:
        t.dividing.push_back(i);
        break;
      case BindingOrientation::Fiber:
        break;
    }
  }
  t.kind = t.dividing.empty() ? ContactKind::Transverse : ContactKind::NonTransverse;
  return t;
}

}  // namespace seifcalc
