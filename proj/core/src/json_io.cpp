#include "seifcalc/json_io.hpp"

#include <sstream>

#include "seifcalc/errors.hpp"

namespace seifcalc {

Json encode(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json encode(const Rational& v) { return Json(v.str()); }

Json encode(const Fiber& f) { return Json::array({encode(f.alpha), encode(f.beta)}); }

namespace {

Json encode_fibers(const std::vector<Fiber>& fs) {
  Json arr = Json::array();
  for (const auto& f : fs) arr.push_back(encode(f));
  return arr;
}

template <class T>
Json encode_list(const std::vector<T>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(encode(x));
  return arr;
}

}  // namespace

Json encode(const SeifertData& s) { return {{"genus", encode(s.genus)}, {"fibers", encode_fibers(s.fibers)}}; }

Json encode(const NormalForm& n) {
  return {{"genus", encode(n.genus)}, {"b", encode(n.b)}, {"fibers", encode_fibers(n.fibers)}};
}

Json encode(const AbelianGroup& g) { return {{"torsion", encode_list(g.torsion)}, {"rank", encode(g.rank)}}; }

Json encode(const LensPair& l) { return {{"a", encode(l.a)}, {"b", encode(l.b)}}; }

Json encode(const TightnessVerdict& v) {
  Json j = {{"verdict", to_string(v.verdict)}};
  j["rule"] = v.rule == TightnessRule::None ? Json(nullptr) : Json(to_string(v.rule));
  return j;
}

Json encode(const Admissibility& a) {
  return {{"coefficient", encode(a.coefficient)},
          {"slope", encode(a.slope)},
          {"difference", encode(a.difference())},
          {"admissible", a.admissible}};
}

Json encode(const OpenBookSpec& s) {
  Json bindings = Json::array();
  for (const auto& b : s.bindings)
    bindings.push_back({{"pair", encode(b.pair)}, {"c", encode(b.c)}, {"b", encode(b.b)}});
  return {{"genus", encode(s.genus)}, {"interior", encode_fibers(s.interior)}, {"bindings", bindings},
          {"n", encode(s.n)}};
}

Json encode(const ContactType& c) {
  Json j = {{"kind", to_string(c.kind)}};
  Json d = Json::array();
  for (auto i : c.dividing) d.push_back(i);
  j["dividing_bindings"] = d;
  return j;
}

Json encode(const RationalOpenBook& ob) {
  Json bindings = Json::array();
  for (const auto& b : ob.bindings)
    bindings.push_back({{"pair", encode(b.oriented)},
                        {"p", encode(b.p)},
                        {"p_prime", encode(b.p_prime)},
                        {"k", encode(b.k)},
                        {"l", encode(b.l)},
                        {"orientation", to_string(b.orientation)}});
  Json j = {{"spec", encode(ob.spec)}, {"bindings", bindings}, {"chi", encode(ob.chi)}};
  bool fixed = false;
  for (const auto& b : ob.bindings) fixed = fixed || b.orientation == BindingOrientation::Fixed;
  if (fixed) {
    j["contact"] = {{"kind", to_string(ContactKind::FixedComponent)}};
  } else {
    j["contact"] = encode(contact_type(ob));
  }
  return j;
}

Json encode(const AttachmentPlan& p) {
  return {{"openbook", encode(p.openbook.spec)},
          {"targets", encode_list(p.targets)},
          {"F", encode_list(p.F)},
          {"beta_bar", encode_list(p.beta_bar)}};
}

Json encode(const CobordismReport& r) {
  Json f = Json::array();
  for (const auto& x : r.f) f.push_back(x ? encode(*x) : Json(nullptr));
  return {{"m_in", encode(r.m_in)},
          {"m_out", encode(r.m_out)},
          {"F", encode_list(r.F)},
          {"f", f},
          {"chi", encode(r.chi)},
          {"omega_class_weights", encode_list(r.omega_class_weights)},
          {"canonical_pairing", encode(r.canonical_pairing)},
          {"sign", r.sign}};
}

Json encode(const RatioInterval& r) {
  return {{"lower", encode(r.lower)}, {"upper", r.upper ? encode(*r.upper) : Json(nullptr)}};
}

Json encode(const CuspInvariants& c) {
  return {{"multiplicities", encode_list(c.multiplicities)}, {"M", encode(c.M)}, {"ell", encode(c.ell)}};
}

Json encode(const MpqmClass& c) {
  Json j = {{"case", to_string(c.kind)}, {"contact", encode(c.contact)}};
  if (c.manifold) j["manifold"] = encode(*c.manifold);
  if (!c.summands.empty()) j["summands"] = encode_list(c.summands);
  return j;
}

Json encode(const CatalogEntry& e) {
  return {{"family", e.family}, {"parameter", e.parameter}, {"p", encode(e.p)}, {"q", encode(e.q)},
          {"d", encode(e.d)}};
}

Json encode(const PlumbingGraph& g) {
  Json vs = Json::array();
  for (const auto& v : g.vertices) {
    Json x = {{"w", encode(v.weight)}};
    if (v.label) x["label"] = *v.label;
    vs.push_back(x);
  }
  Json es = Json::array();
  for (auto [a, b] : g.edges) es.push_back(Json::array({a, b}));
  return {{"vertices", vs}, {"edges", es}};
}

Json encode(const FormClass& f) {
  return {{"determinant", encode(f.determinant)},
          {"definiteness", to_string(f.definiteness)},
          {"singular", f.singular}};
}

Json encode(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json encode(const LimakResult& r) {
  Json j = {{"solution", encode_list(r.solution)}, {"positive", r.positive()}};
  j["violating_index"] = r.violating ? Json(*r.violating) : Json(nullptr);
  return j;
}

Integer decode_integer(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InvalidInput("expected an integer, got " + j.dump());
}

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(decode_integer(j));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InvalidInput("expected a rational, got " + j.dump());
}

std::vector<Integer> decode_integers(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of integers");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(decode_integer(x));
  return out;
}

std::vector<Rational> decode_rationals(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(decode_rational(x));
  return out;
}

Fiber decode_fiber(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput("a fiber is a two-element array");
  return {decode_integer(j[0]), decode_integer(j[1])};
}

SeifertData decode_seifert(const Json& j) {
  if (!j.is_object() || !j.contains("fibers")) throw InvalidInput("Seifert data needs \"fibers\"");
  SeifertData s;
  if (j.contains("genus")) s.genus = decode_integer(j["genus"]);
  if (!j["fibers"].is_array()) throw InvalidInput("\"fibers\" must be an array");
  for (const auto& f : j["fibers"]) s.fibers.push_back(decode_fiber(f));
  s.validate();
  return s;
}

OpenBookSpec decode_openbook_spec(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("bindings"))
    throw InvalidInput("open book spec needs \"n\" and \"bindings\"");
  OpenBookSpec s;
  if (j.contains("genus")) s.genus = decode_integer(j["genus"]);
  s.n = decode_integer(j["n"]);
  if (j.contains("interior"))
    for (const auto& f : j["interior"]) s.interior.push_back(decode_fiber(f));
  for (const auto& b : j["bindings"]) {
    if (!b.is_object() || !b.contains("pair") || !b.contains("c") || !b.contains("b"))
      throw InvalidInput("binding needs \"pair\", \"c\" and \"b\"");
    s.bindings.push_back({decode_fiber(b["pair"]), decode_integer(b["c"]), decode_integer(b["b"])});
  }
  s.validate();
  return s;
}

PlumbingGraph decode_graph(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw InvalidInput("graph needs \"vertices\"");
  PlumbingGraph g;
  for (const auto& v : j["vertices"]) {
    Vertex x;
    if (v.is_object()) {
      if (!v.contains("w")) throw InvalidInput("vertex needs \"w\"");
      x.weight = decode_integer(v["w"]);
      if (v.contains("label")) x.label = v["label"].get<std::string>();
    } else {
      x.weight = decode_integer(v);
    }
    g.vertices.push_back(x);
  }
  if (j.contains("edges"))
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("an edge is a two-element array");
      g.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
    }
  g.validate();
  return g;
}

LensPair decode_lens(const Json& j) {
  if (j.is_array() && j.size() == 2) return {decode_integer(j[0]), decode_integer(j[1])};
  if (j.is_object() && j.contains("a") && j.contains("b")) return {decode_integer(j["a"]), decode_integer(j["b"])};
  throw InvalidInput("lens pair is [a,b] or {\"a\":..,\"b\":..}");
}

SeifertData parse_seifert_shorthand(const std::string& text) {
  SeifertData s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto comma = item.find(',');
    if (comma == std::string::npos) throw InvalidInput("fiber \"" + item + "\" must be alpha,beta");
    s.fibers.push_back({parse_integer(item.substr(0, comma)), parse_integer(item.substr(comma + 1))});
  }
  if (s.fibers.empty()) throw InvalidInput("no fibers given");
  s.validate();
  return s;
}

}  // namespace seifcalc
