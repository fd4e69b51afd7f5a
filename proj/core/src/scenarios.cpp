#include "seifcalc/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

#include "seifcalc/errors.hpp"

namespace seifcalc {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("case input needs \"") + key + "\"");
  return j.at(key);
}

SeifertData manifold_input(const Json& j) {
  const Json& m = need(j, "manifold");
  if (m.is_string()) return parse_seifert_shorthand(m.get<std::string>());
  return decode_seifert(m);
}

PlumbingGraph graph_input(const Json& j) {
  const Json& g = need(j, "graph");
  if (g.is_string()) {
    if (g.get<std::string>() == "figure1") return figure1();
    if (g.get<std::string>() == "figure1-single-cusp") return figure1_single_cusp();
    throw InvalidInput("unknown built-in graph " + g.dump());
  }
  return decode_graph(g);
}

Json strings(const std::vector<std::string>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x);
  return a;
}

template <class T>
Json list(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(encode(x));
  return a;
}

Json cobordism_outputs(const Json& in) {
  OpenBookSpec spec = decode_openbook_spec(need(in, "spec"));
  std::vector<Integer> targets = decode_integers(need(in, "targets"));
  RationalOpenBook ob = open_book_multi(spec);
  CobordismReport r = attach(ob, targets);
  AttachmentPlan plan = make_plan(ob, targets);

  Json out;
  std::vector<Integer> ps;
  std::vector<std::string> orient;
  std::vector<TargetBinding> tb;
  bool unimodular = true;
  for (std::size_t i = 0; i < ob.bindings.size(); ++i) {
    const auto& b = ob.bindings[i];
    ps.push_back(b.p);
    orient.push_back(to_string(b.orientation));
    tb.push_back({b.oriented.alpha, targets[i], b.p});
    unimodular = unimodular && targets[i] * b.oriented.beta + b.oriented.alpha * plan.beta_bar[i] == 1;
  }
  std::vector<Integer> interior_alphas;
  for (const auto& f : spec.interior) interior_alphas.push_back(f.alpha);

  out["p"] = list(ps);
  out["orientation"] = strings(orient);
  out["chi"] = encode(r.chi);
  out["F"] = list(r.F);
  out["beta_bar"] = list(plan.beta_bar);
  Json f = Json::array();
  for (const auto& x : r.f) f.push_back(x ? encode(*x) : Json(nullptr));
  out["f"] = f;
  out["m_in"] = encode(r.m_in);
  out["m_out"] = encode(r.m_out);
  out["euler_in"] = encode(euler_number(r.m_in));
  out["canonical_pairing"] = encode(r.canonical_pairing);
  out["pairing_seifert"] = encode(k_pairing_seifert(spec.n, tb, interior_alphas, spec.genus));
  out["sign"] = r.sign;
  out["unimodular"] = unimodular;
  out["self_intersection"] = encode(page_class_self_intersection(spec.n, tb));
  ContactType ct = contact_type(ob);
  out["contact"] = to_string(ct.kind);
  Json div = Json::array();
  for (auto i : ct.dividing) div.push_back(i);
  out["dividing"] = div;
  SeifertData back = monodromy_to_seifert(spec.genus, spec.interior, ob.monodromy());
  out["round_trip"] = same_seifert(back, r.m_in);
  if (r.m_in.genus == 0 && exceptional_count(r.m_in) <= 2) out["lens_in"] = encode(lens_from_two_fibers(r.m_in));

  if (in.contains("curves")) {
    Json adj = Json::array();
    const Json& curves = in.at("curves");
    if (!curves.is_array() || curves.size() != r.f.size()) throw InvalidInput("one curve per binding");
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (!r.f[i] || !r.f[i]->is_integer()) throw InvalidInput("curve self-intersection is not an integer framing");
      std::optional<CuspKind> kind;
      if (curves[i].contains("cusp")) {
        auto pq = decode_integers(curves[i].at("cusp"));
        if (pq.size() != 2) throw InvalidInput("cusp needs [p,q]");
        kind = CuspKind{pq[0], pq[1]};
      }
      adj.push_back(encode(adjunction_defect(kind, r.f[i]->num())));
    }
    out["adjunction"] = adj;
  }
  return out;
}

Json single_open_book_outputs(const Json& in) {
  SeifertData s = manifold_input(in);
  std::size_t idx = in.contains("binding") ? in.at("binding").get<std::size_t>() : 0;
  auto ob = open_book_single(s, idx);
  Json out;
  out["feasible"] = ob.has_value();
  if (!ob) return out;
  out["n"] = encode(ob->spec.n);
  out["c"] = encode(ob->spec.bindings[0].c);
  out["b"] = encode(ob->spec.bindings[0].b);
  out["p"] = encode(ob->bindings[0].p);
  out["orientation"] = to_string(ob->bindings[0].orientation);
  out["chi"] = encode(ob->chi);
  if (ob->bindings[0].orientation != BindingOrientation::Fixed) out["contact"] = to_string(contact_type(*ob).kind);
  return out;
}

Json monodromy_outputs(const Json& in) {
  Integer genus = in.contains("genus") ? decode_integer(in.at("genus")) : Integer(0);
  std::vector<Fiber> interior;
  for (const auto& f : need(in, "interior")) interior.push_back(decode_fiber(f));
  std::vector<MonodromyBinding> bs;
  for (const auto& b : need(in, "bindings")) {
    auto v = decode_integers(b);
    if (v.size() != 4) throw InvalidInput("monodromy binding is [n,c,p,p']");
    bs.push_back({v[0], v[1], v[2], v[3]});
  }
  SeifertData s = monodromy_to_seifert(genus, interior, bs);
  Json out;
  out["manifold"] = encode(s);
  Json kl = Json::array();
  for (const auto& b : bs) {
    KL x = binding_kl(b.n, b.c);
    kl.push_back(Json::array({encode(x.k), encode(x.l)}));
  }
  out["kl"] = kl;
  if (!s.has_fixed_component()) {
    out["euler"] = encode(euler_number(s));
    Rational predicted = 0;
    bool all_nonzero = true;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      const Fiber& f = s.fibers[1 + interior.size() + i];
      if (f.alpha == 0) all_nonzero = false;
      else predicted += Rational(bs[i].p, f.alpha);
    }
    if (all_nonzero && !bs.empty()) out["euler_from_multiplicities"] = encode(-predicted / Rational(bs[0].n));
  }
  return out;
}

Json lens_outputs(const Json& in) {
  SeifertData s = manifold_input(in);
  Json out;
  LensPair l = lens_from_two_fibers(s);
  out["lens"] = encode(l);
  auto order = h1(s).order();
  out["h1_order"] = order ? encode(*order) : Json(nullptr);
  return out;
}

Json fiber_order_outputs(const Json& in) {
  SeifertData s = manifold_input(in);
  std::optional<std::size_t> which;
  const Json& f = need(in, "fiber");
  if (!(f.is_string() && f.get<std::string>() == "regular")) which = f.get<std::size_t>();
  return {{"order", encode(fiber_class_order(s, which))}};
}

Json homology_outputs(const Json& in) {
  SeifertData s = manifold_input(in);
  Json out;
  AbelianGroup g = h1(s);
  out["h1"] = encode(g);
  if (g.finite()) {
    out["order"] = encode(*g.order());
    out["regular_fiber_order"] = encode(fiber_class_order(s, std::nullopt));
  }
  out["euler"] = encode(euler_number(s));
  bool positive_alphas = std::all_of(s.fibers.begin(), s.fibers.end(), [](const Fiber& x) { return x.alpha >= 1; });
  if (positive_alphas) out["e0"] = encode(e0(s));
  out["normal_form"] = encode(normalize(s));
  return out;
}

Json page_class_outputs(const Json& in) {
  OpenBookSpec spec = decode_openbook_spec(need(in, "spec"));
  std::vector<Integer> targets = decode_integers(need(in, "targets"));
  RationalOpenBook ob = open_book_multi(spec);
  if (targets.size() != ob.bindings.size()) throw InvalidInput("one target per binding required");
  std::vector<TargetBinding> tb;
  Json bindings = Json::array();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    tb.push_back({ob.bindings[i].oriented.alpha, targets[i], ob.bindings[i].p});
    bindings.push_back(Json::array({encode(tb.back().alpha), encode(tb.back().target), encode(tb.back().p)}));
  }
  Rational v = page_class_self_intersection(spec.n, tb);
  Json out;
  out["bindings"] = bindings;
  out["value"] = encode(v);
  out["integral"] = v.is_integer();
  if (v.is_integer()) out["mod4"] = encode(mod_floor(v.num(), 4));
  return out;
}

Json cusp_outputs(const Json& in) {
  Integer p = decode_integer(need(in, "p")), q = decode_integer(need(in, "q"));
  Json out;
  DualPair d = dual_pair(p, q);
  out["dual"] = Json::array({encode(d.p_prime), encode(d.q_prime)});
  out["m_bound"] = encode(m_bound(p, q));
  out["gs_bound"] = encode(gs_bound(p, q));
  out["compare"] = to_string(compare_bounds(p, q));
  out["invariants"] = encode(cusp_invariants(p, q));
  if (auto b = blowup_pair(p, q))
    out["blowup"] = Json::array({encode(b->p), encode(b->q), encode(b->p_prime), encode(b->q_prime)});
  else
    out["blowup"] = nullptr;
  if (in.contains("m")) {
    Integer m = decode_integer(in.at("m"));
    MpqmClass c = classify_Mpqm(p, q, m);
    out["case"] = to_string(c.kind);
    out["contact"] = to_string(c.contact.kind);
    if (c.manifold) out["manifold"] = encode(*c.manifold);
    if (!c.summands.empty()) out["summands"] = list(c.summands);
    out["fillability"] = to_string(fillability_verdict(p, q, m));
    if (c.kind == MpqmCase::Above) {
      TightnessVerdict v = tightness_verdict(*c.manifold, 0, false);
      out["tightness"] = to_string(v.verdict);
    }
    if (c.manifold && exceptional_count(*c.manifold) <= 2) out["lens"] = encode(lens_from_two_fibers(*c.manifold));
  }
  return out;
}

Json catalog_outputs(const Json& in) {
  int max_d = in.contains("max_d") ? in.at("max_d").get<int>() : 16;
  int max_j = in.contains("max_j") ? in.at("max_j").get<int>() : 11;
  auto entries = family_catalog(max_d, max_j);
  bool match = true, within = true;
  Json failures = Json::array();
  std::vector<int> families;
  for (const auto& e : entries) {
    CatalogCheck c = check_catalog_entry(e);
    match = match && c.manifold_matches;
    within = within && c.within_bound;
    if (!c.manifold_matches || !c.within_bound) failures.push_back(encode(e));
    if (std::find(families.begin(), families.end(), e.family) == families.end()) families.push_back(e.family);
  }
  std::sort(families.begin(), families.end());
  return {{"count", entries.size()}, {"all_match", match}, {"all_within_bound", within},
          {"families", families}, {"failures", failures}};
}

Json m_bound_table_outputs(const Json& in) {
  Json values = Json::array();
  for (const auto& row : need(in, "pairs")) {
    auto pq = decode_integers(row);
    if (pq.size() != 2) throw InvalidInput("pair needs [p,q]");
    values.push_back(encode(m_bound(pq[0], pq[1])));
  }
  return {{"values", values}};
}

Json limak_outputs(const Json& in) {
  PlumbingGraph g = graph_input(in);
  LimakResult r = limak_solve(intersection_matrix(g), decode_rationals(need(in, "a")));
  return {{"solution", list(r.solution)}, {"positive", r.positive()},
          {"violating_index", r.violating ? Json(*r.violating) : Json(nullptr)}};
}

// Sweeps a = (l1, l2, 0, ...) over 1 <= l1, l2 <= N and compares positivity with the
// interval test lower < l1/l2 < upper.
Json limak_grid_outputs(const Json& in) {
  PlumbingGraph g = graph_input(in);
  IntMatrix q = intersection_matrix(g);
  long n = need(in, "max_lambda").get<long>();
  Rational lower = decode_rational(need(in, "lower")), upper = decode_rational(need(in, "upper"));
  std::size_t feasible = 0, mismatches = 0;
  for (long l1 = 1; l1 <= n; ++l1)
    for (long l2 = 1; l2 <= n; ++l2) {
      std::vector<Rational> a(q.rows(), Rational(0));
      a[0] = l1;
      a[1] = l2;
      bool pos = limak_solve(q, a).positive();
      Rational ratio{Integer(l1), Integer(l2)};
      bool inside = lower < ratio && ratio < upper;
      feasible += pos;
      mismatches += pos != inside;
    }
  return {{"feasible_count", feasible}, {"mismatches", mismatches}, {"agrees", mismatches == 0}};
}

Json area_ratio_outputs(const Json& in) {
  RatioInterval r = area_ratio_interval(decode_integer(need(in, "alpha1")), decode_integer(need(in, "target1")),
                                        decode_integer(need(in, "alpha2")), decode_integer(need(in, "target2")),
                                        decode_rational(need(in, "T")));
  Json out = encode(r);
  if (in.contains("actual")) out["contains_actual"] = r.contains(decode_rational(in.at("actual")));
  return out;
}

Json admissibility_outputs(const Json& in) {
  auto v = decode_integers(need(in, "data"));
  if (v.size() != 6) throw InvalidInput("admissibility needs six integers");
  Json out = encode(surgery_admissibility(v[0], v[1], v[2], v[3], v[4], v[5]));
  out["slope_at_zero"] = encode(slope_change_of_basis(v[0], v[1], v[2], v[3], Rational(0)));
  return out;
}

Json tightness_outputs(const Json& in) {
  SeifertData s = manifold_input(in);
  std::size_t idx = need(in, "dividing").get<std::size_t>();
  bool fixed = in.contains("fixed_points") && in.at("fixed_points").get<bool>();
  TightnessVerdict v = tightness_verdict(s, idx, fixed);
  return {{"verdict", to_string(v.verdict)},
          {"rule", v.rule == TightnessRule::None ? Json(nullptr) : Json(to_string(v.rule))}};
}

Json plumbing_star_outputs(const Json& in) {
  PlumbingGraph g = graph_input(in);
  std::size_t center = in.contains("center") ? in.at("center").get<std::size_t>() : default_center(g);
  IntMatrix q = intersection_matrix(g);
  FormClass fc = form_class(q);
  Json out;
  out["determinant"] = encode(fc.determinant);
  out["abs_determinant"] = encode(abs(fc.determinant));
  out["definiteness"] = to_string(fc.definiteness);
  out["singular"] = fc.singular;
  SeifertData s = star_to_seifert(g, center);
  out["seifert"] = encode(s);
  auto order = h1(s).order();
  out["h1_order"] = order ? encode(*order) : Json(nullptr);
  if (exceptional_count(s) <= 2) out["lens"] = encode(lens_from_two_fibers(s));
  NormalForm nf = normalize(s);
  out["round_trip"] = normalize(star_to_seifert(seifert_to_star(nf), 0)) == nf;
  return out;
}

Json cusp_resolution_outputs(const Json& in) {
  Integer p = decode_integer(need(in, "p")), q = decode_integer(need(in, "q")), m = decode_integer(need(in, "m"));
  PlumbingGraph g = cusp_resolution_graph(p, q, m);
  Json out;
  out["graph"] = encode(g);
  out["abs_determinant"] = encode(abs(determinant(intersection_matrix(g))));
  PlumbingGraph single = figure1_single_cusp();
  out["matches_figure1_single_cusp"] = same_star(g, 0, single, default_center(single));
  return out;
}

Json dagger_outputs(const Json& in) {
  auto orders = decode_integers(need(in, "orders"));
  auto first = dagger_solve(orders);
  Json out;
  out["solution"] = first ? list(*first) : Json(nullptr);
  out["count"] = dagger_solve_all(orders).size();
  return out;
}

using Handler = std::function<Json(const Json&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"cobordism", cobordism_outputs},
      {"single-open-book", single_open_book_outputs},
      {"monodromy", monodromy_outputs},
      {"lens", lens_outputs},
      {"fiber-order", fiber_order_outputs},
      {"homology", homology_outputs},
      {"page-class", page_class_outputs},
      {"cusp", cusp_outputs},
      {"catalog", catalog_outputs},
      {"m-bound-table", m_bound_table_outputs},
      {"limak", limak_outputs},
      {"limak-grid", limak_grid_outputs},
      {"area-ratio", area_ratio_outputs},
      {"admissibility", admissibility_outputs},
      {"tightness", tightness_outputs},
      {"plumbing-star", plumbing_star_outputs},
      {"cusp-resolution", cusp_resolution_outputs},
      {"dagger", dagger_outputs},
  };
  return table;
}

bool scalar(const Json& j) { return j.is_number_integer() || j.is_string(); }

bool semantic_equal(const Json& a, const Json& b) {
  if (scalar(a) && scalar(b)) {
    try {
      return decode_rational(a) == decode_rational(b);
    } catch (const InvalidInput&) {
      return a == b;
    }
  }
  if (a.is_array() && b.is_array()) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!semantic_equal(a[i], b[i])) return false;
    return true;
  }
  if (a.is_object() && b.is_object()) {
    if (a.size() != b.size()) return false;
    for (auto it = a.begin(); it != a.end(); ++it)
      if (!b.contains(it.key()) || !semantic_equal(it.value(), b.at(it.key()))) return false;
    return true;
  }
  return a == b;
}

}  // namespace

Json compute_case_outputs(const std::string& kind, const Json& inputs) {
  auto it = handlers().find(kind);
  if (it == handlers().end()) throw InvalidInput("unknown case kind \"" + kind + "\"");
  return it->second(inputs);
}

AssertionRecord check_expectation(const Expectation& e, const Json& outputs) {
  AssertionRecord r{e.key, e.check, e.value, nullptr, false, {}};
  if (!outputs.contains(e.key)) {
    r.message = "no output named \"" + e.key + "\"";
    return r;
  }
  r.computed = outputs.at(e.key);
  try {
    if (e.check == "equals") {
      r.passed = semantic_equal(r.computed, e.value);
    } else if (e.check == "same_seifert") {
      r.passed = same_seifert(decode_seifert(r.computed), decode_seifert(e.value));
    } else if (e.check == "lens_equal") {
      r.passed = lens_equal(decode_lens(r.computed), decode_lens(e.value));
    } else if (e.check == "lens_equal_up_to_orientation") {
      LensPair got = decode_lens(r.computed), want = decode_lens(e.value);
      r.passed = lens_equal(got, want) || lens_equal(got, lens_reverse(want));
    } else if (e.check == "less_than") {
      r.passed = decode_rational(r.computed) < decode_rational(e.value);
    } else if (e.check == "greater_than") {
      r.passed = decode_rational(r.computed) > decode_rational(e.value);
    } else if (e.check == "residue_in") {
      Integer modulus = decode_integer(need(e.value, "modulus"));
      Rational v = decode_rational(r.computed);
      if (!v.is_integer()) {
        r.message = "value is not an integer";
      } else {
        Integer res = mod_floor(v.num(), modulus);
        for (const auto& x : need(e.value, "values")) r.passed = r.passed || decode_integer(x) == res;
      }
    } else {
      r.message = "unknown check \"" + e.check + "\"";
    }
  } catch (const std::exception& ex) {
    r.passed = false;
    r.message = ex.what();
  }
  if (!r.passed && r.message.empty()) r.message = "expected " + e.value.dump() + ", computed " + r.computed.dump();
  return r;
}

CaseReport run_scenario(const ScenarioCase& c) {
  CaseReport rep;
  rep.name = c.name;
  Json outputs;
  try {
    outputs = compute_case_outputs(c.kind, c.inputs);
  } catch (const std::exception& ex) {
    rep.error = ex.what();
    rep.passed = false;
    return rep;
  }
  rep.passed = !c.expect.empty();
  for (const auto& e : c.expect) {
    rep.assertions.push_back(check_expectation(e, outputs));
    rep.passed = rep.passed && rep.assertions.back().passed;
  }
  return rep;
}

bool operator==(const Summary& a, const Summary& b) {
  return a.total == b.total && a.passed == b.passed && a.failed == b.failed && a.failed_names == b.failed_names &&
         encode(a) == encode(b);
}

ScenarioSuite ScenarioSuite::parse(const Json& data) {
  if (!data.is_object() || !data.contains("version") || !data.contains("cases"))
    throw InvalidInput("case data needs \"version\" and \"cases\"");
  if (data.at("version").get<int>() != 1) throw InvalidInput("unsupported case data version");
  ScenarioSuite suite;
  for (const auto& jc : data.at("cases")) {
    ScenarioCase c;
    c.name = need(jc, "name").get<std::string>();
    c.citation = jc.value("citation", "");
    c.kind = need(jc, "kind").get<std::string>();
    c.inputs = jc.value("inputs", Json::object());
    for (const auto& je : need(jc, "expect")) {
      Expectation e;
      e.key = need(je, "key").get<std::string>();
      e.check = je.value("check", "equals");
      e.value = need(je, "value");
      e.tag = need(je, "tag").get<std::string>();
      e.quote = je.value("quote", "");
      if (e.tag != "PAPER" && e.tag != "DERIVED" && e.tag != "TRIVIAL")
        throw InvalidInput("case " + c.name + ": unknown tag " + e.tag);
      if (e.tag == "PAPER" && e.quote.empty())
        throw InvalidInput("case " + c.name + ": expectation " + e.key + " is tagged PAPER without a quote");
      c.expect.push_back(e);
    }
    if (c.expect.empty()) throw InvalidInput("case " + c.name + " has no expectations");
    for (const auto& other : suite.cases_)
      if (other.name == c.name) throw InvalidInput("duplicate case name " + c.name);
    suite.cases_.push_back(std::move(c));
  }
  return suite;
}

ScenarioSuite ScenarioSuite::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open case data " + path);
  Json data;
  try {
    f >> data;
  } catch (const Json::exception& ex) {
    throw InvalidInput("malformed case data " + path + ": " + ex.what());
  }
  return parse(data);
}

std::string ScenarioSuite::default_path() {
  if (const char* env = std::getenv("SEIFCALC_CASE_DATA"); env && *env) return env;
  if (std::filesystem::exists(SEIFCALC_DEFAULT_CASE_DATA)) return SEIFCALC_DEFAULT_CASE_DATA;
  return SEIFCALC_INSTALLED_CASE_DATA;
}

ScenarioSuite ScenarioSuite::load_default() { return load(default_path()); }

std::vector<std::string> ScenarioSuite::list_cases() const {
  std::vector<std::string> out;
  for (const auto& c : cases_) out.push_back(c.name);
  return out;
}

const ScenarioCase& ScenarioSuite::find(const std::string& name) const {
  for (const auto& c : cases_)
    if (c.name == name) return c;
  throw InvalidInput("unknown case \"" + name + "\"");
}

CaseReport ScenarioSuite::run_case(const std::string& name) const { return run_scenario(find(name)); }

Summary ScenarioSuite::run_all(bool parallel) const {
  std::vector<CaseReport> reports(cases_.size());
  if (parallel && cases_.size() > 1) {
    std::atomic<std::size_t> next{0};
    unsigned workers = std::max(2u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(cases_.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cases_.size(); i = next++) reports[i] = run_scenario(cases_[i]);
      });
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < cases_.size(); ++i) reports[i] = run_scenario(cases_[i]);
  }
  Summary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    if (r.passed) {
      ++s.passed;
    } else {
      ++s.failed;
      s.failed_names.push_back(r.name);
    }
  }
  s.reports = std::move(reports);
  return s;
}

Json encode(const CaseReport& r) {
  Json as = Json::array();
  for (const auto& a : r.assertions)
    as.push_back({{"key", a.key}, {"check", a.check}, {"expected", a.expected}, {"computed", a.computed},
                  {"passed", a.passed}, {"message", a.message}});
  Json j = {{"name", r.name}, {"passed", r.passed}, {"assertions", as}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

Json encode(const Summary& s) {
  Json reps = Json::array();
  for (const auto& r : s.reports) reps.push_back(encode(r));
  Json failed = Json::array();
  for (const auto& n : s.failed_names) failed.push_back(n);
  return {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"failed_cases", failed},
          {"reports", reps}};
}

}  // namespace seifcalc
