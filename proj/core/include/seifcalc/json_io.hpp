#pragma once

#include <nlohmann/json.hpp>

#include "seifcalc/arith.hpp"
#include "seifcalc/cuspidal.hpp"
#include "seifcalc/handles.hpp"
#include "seifcalc/openbook.hpp"
#include "seifcalc/plumbing.hpp"
#include "seifcalc/seifert.hpp"

namespace seifcalc {

using Json = nlohmann::json;

// Integers encode as JSON numbers when they fit in 64 bits, otherwise as decimal strings.
// Rationals encode as "num/den" strings (denominator omitted when 1).
Json encode(const Integer& v);
Json encode(const Rational& v);
Json encode(const Fiber& f);
Json encode(const SeifertData& s);
Json encode(const NormalForm& n);
Json encode(const AbelianGroup& g);
Json encode(const LensPair& l);
Json encode(const TightnessVerdict& v);
Json encode(const Admissibility& a);
Json encode(const OpenBookSpec& s);
Json encode(const RationalOpenBook& ob);
Json encode(const ContactType& c);
Json encode(const AttachmentPlan& p);
Json encode(const CobordismReport& r);
Json encode(const RatioInterval& r);
Json encode(const CuspInvariants& c);
Json encode(const MpqmClass& c);
Json encode(const CatalogEntry& e);
Json encode(const PlumbingGraph& g);
Json encode(const FormClass& f);
Json encode(const IntMatrix& m);
Json encode(const LimakResult& r);

// Decoders throw InvalidInput on malformed payloads.
Integer decode_integer(const Json& j);
Rational decode_rational(const Json& j);
std::vector<Integer> decode_integers(const Json& j);
std::vector<Rational> decode_rationals(const Json& j);
Fiber decode_fiber(const Json& j);
SeifertData decode_seifert(const Json& j);
OpenBookSpec decode_openbook_spec(const Json& j);
PlumbingGraph decode_graph(const Json& j);
LensPair decode_lens(const Json& j);

// "a,b;c,d;..." shorthand; genus 0.
SeifertData parse_seifert_shorthand(const std::string& text);

}  // namespace seifcalc
