#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "seifcalc/arith.hpp"
#include "seifcalc/seifert.hpp"

namespace seifcalc {

// First solution in lexicographic order of 0 < c_i < n_i, gcd(n_i, c_i) = 1
// with sum c_i/n_i integral.
std::optional<std::vector<Integer>> dagger_solve(const std::vector<Integer>& orders);
std::vector<std::vector<Integer>> dagger_solve_all(const std::vector<Integer>& orders);

// Monodromy data of one binding component.
struct MonodromyBinding {
  Integer n, c, p, p_prime;
};

// k in [0,n) with k c = -1 mod n (k = 0 only for n = 1), and l = (1 + k c)/n.
struct KL {
  Integer k, l;
};
KL binding_kl(const Integer& n, const Integer& c);

// M(g; (1,-b), interior, bindings) with b = sum c_j/n_j + sum c_i/n and
// binding pairs (k p + n p', l p + c p').
SeifertData monodromy_to_seifert(const Integer& genus, const std::vector<Fiber>& interior,
                                 const std::vector<MonodromyBinding>& bindings);

struct BindingSpec {
  Fiber pair;
  Integer c, b;
};

struct OpenBookSpec {
  Integer genus = 0;
  std::vector<Fiber> interior;  // 0 < beta < alpha
  std::vector<BindingSpec> bindings;
  Integer n = 1;

  void validate() const;
  // M(g; interior, binding pairs).
  SeifertData manifold() const;
};

enum class BindingOrientation { Fiber, AntiFiber, Fixed };
std::string to_string(BindingOrientation o);

struct BindingData {
  Fiber oriented;  // the binding pair with the sign fixed so that p > 0
  Integer p, p_prime, k, l;
  BindingOrientation orientation = BindingOrientation::Fiber;
};

struct RationalOpenBook {
  OpenBookSpec spec;
  std::vector<BindingData> bindings;
  Integer chi = 0;

  std::vector<MonodromyBinding> monodromy() const;
};

RationalOpenBook open_book_multi(const OpenBookSpec& spec);

// The fiber at binding_index becomes the binding; all other fibers must satisfy
// 0 < beta < alpha. Absent when the monodromy order and the fiber sum are not coprime.
std::optional<RationalOpenBook> open_book_single(const SeifertData& s, std::size_t binding_index = 0);

// n (2 - 2g - s - r + sum 1/alpha_j), s bindings and r interior fibers.
Integer page_euler_char(const OpenBookSpec& spec);
Integer page_euler_char(const RationalOpenBook& ob);

enum class ContactKind { Transverse, NonTransverse, FixedComponent };
std::string to_string(ContactKind k);

struct ContactType {
  ContactKind kind = ContactKind::Transverse;
  // One dividing circle around each listed binding.
  std::vector<std::size_t> dividing;
  friend bool operator==(const ContactType&, const ContactType&) = default;
};

ContactType contact_type(const RationalOpenBook& ob);

}  // namespace seifcalc
