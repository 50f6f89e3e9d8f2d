#include "domaingauge/json_io.hpp"

#include <cmath>

#include "domaingauge/errors.hpp"

namespace dg {

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& ex) {
    throw ParseError(std::string("malformed JSON: ") + ex.what());
  }
}

Json to_json(const Rational& q) {
  return Json{{"num", num(q).str()}, {"den", den(q).str()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(BigInt(j.get<long long>()));
  if (j.is_number_float()) {
    // doubles are dyadic rationals; decompose exactly
    double d = j.get<double>();
    if (!std::isfinite(d)) throw ParseError("non-finite number in rational position");
    int exp = 0;
    double m = std::frexp(d, &exp);
    long long mant = static_cast<long long>(std::ldexp(m, 53));
    Rational q{BigInt(mant)};
    int shift = exp - 53;
    if (shift >= 0) q *= rat_pow(Rational(2), shift);
    else q /= rat_pow(Rational(2), -shift);
    return q;
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    auto part = [](const Json& x) -> BigInt {
      if (x.is_number_integer()) return BigInt(x.get<long long>());
      if (x.is_string()) return BigInt(x.get<std::string>());
      throw ParseError("num/den must be integers or decimal strings");
    };
    BigInt n = part(j.at("num")), d = part(j.at("den"));
    if (d == 0) throw ParseError("zero denominator");
    return Rational(n, d);
  }
  throw ParseError("expected a rational value");
}

Json to_json(const ExtNat& v) {
  if (v.is_inf()) return Json("inf");
  const BigInt& f = v.finite();
  if (f <= BigInt((1ll << 53))) return Json(f.convert_to<long long>());
  return Json(f.str());
}

ExtNat extnat_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf") return ExtNat::infinity();
    return ExtNat(BigInt(s));
  }
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v < 0) throw ParseError("extended naturals are nonnegative");
    return ExtNat(v);
  }
  throw ParseError("expected a natural number or \"inf\"");
}

namespace {

Json tail_to_json(const RealTail& tail) {
  return std::visit(
      [](const auto& t) -> Json {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ConstTail>) {
          return Json{{"kind", "const"}, {"value", to_json(t.value)}};
        } else if constexpr (std::is_same_v<T, PeriodicTail>) {
          Json vals = Json::array();
          for (const auto& v : t.cycle) vals.push_back(to_json(v));
          return Json{{"kind", "periodic"}, {"values", vals}};
        } else if constexpr (std::is_same_v<T, AffineTail>) {
          return Json{{"kind", "affine"}, {"slope", to_json(t.slope)}, {"intercept", to_json(t.intercept)}};
        } else if constexpr (std::is_same_v<T, GeometricTail>) {
          return Json{{"kind", "geometric"}, {"coeff", to_json(t.coeff)}, {"ratio", to_json(t.ratio)}};
        } else {
          Json inner = std::visit(
              [](const auto& i) -> Json {
                using I = std::decay_t<decltype(i)>;
                if constexpr (std::is_same_v<I, AffineTail>)
                  return Json{{"kind", "affine"}, {"slope", to_json(i.slope)}, {"intercept", to_json(i.intercept)}};
                else
                  return Json{{"kind", "geometric"}, {"coeff", to_json(i.coeff)}, {"ratio", to_json(i.ratio)}};
              },
              t.inner);
          return Json{{"kind", "strided"}, {"stride", t.stride}, {"phase", t.phase}, {"inner", inner}};
        }
      },
      tail);
}

RealTail tail_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("tail needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "const") return ConstTail{rational_from_json(j.at("value"))};
  if (kind == "periodic") {
    std::vector<Rational> vals;
    for (const auto& v : j.at("values")) vals.push_back(rational_from_json(v));
    return PeriodicTail{std::move(vals)};
  }
  if (kind == "affine") return AffineTail{rational_from_json(j.at("slope")), rational_from_json(j.at("intercept"))};
  if (kind == "geometric")
    return GeometricTail{rational_from_json(j.at("coeff")), rational_from_json(j.at("ratio"))};
  if (kind == "strided") {
    RealTail inner = tail_from_json(j.at("inner"));
    StridedTail st;
    st.stride = j.at("stride").get<std::uint32_t>();
    st.phase = j.at("phase").get<std::uint32_t>();
    if (auto* a = std::get_if<AffineTail>(&inner)) st.inner = *a;
    else if (auto* g = std::get_if<GeometricTail>(&inner)) st.inner = *g;
    else throw ParseError("strided inner tail must be affine or geometric");
    return st;
  }
  throw ParseError("unknown tail kind '" + kind + "' (arbitrary computable tails are rejected)");
}

}  // namespace

Json to_json(const RealSeqRep& s) {
  Json prefix = Json::array();
  for (const auto& v : s.prefix()) prefix.push_back(to_json(v));
  return Json{{"prefix", prefix}, {"tail", tail_to_json(s.tail())}};
}

RealSeqRep realseq_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("prefix") || !j.contains("tail"))
    throw ParseError("sequence needs \"prefix\" and \"tail\"");
  std::vector<Rational> prefix;
  for (const auto& v : j.at("prefix")) prefix.push_back(rational_from_json(v));
  return RealSeqRep(std::move(prefix), tail_from_json(j.at("tail")));
}

Json to_json(const DimSeqRep& s) {
  Json prefix = Json::array();
  for (const auto& v : s.prefix()) prefix.push_back(to_json(v));
  Json tail;
  if (const auto* c = std::get_if<DimConstTail>(&s.tail())) {
    tail = Json{{"kind", "const"}, {"value", to_json(c->value)}};
  } else {
    Json vals = Json::array();
    for (const auto& v : std::get<DimPeriodicTail>(s.tail()).cycle) vals.push_back(to_json(v));
    tail = Json{{"kind", "periodic"}, {"values", vals}};
  }
  return Json{{"prefix", prefix}, {"tail", tail}};
}

DimSeqRep dimseq_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("prefix") || !j.contains("tail"))
    throw ParseError("sequence needs \"prefix\" and \"tail\"");
  std::vector<ExtNat> prefix;
  for (const auto& v : j.at("prefix")) prefix.push_back(extnat_from_json(v));
  const Json& t = j.at("tail");
  const std::string kind = t.at("kind").get<std::string>();
  if (kind == "const") return DimSeqRep(std::move(prefix), DimConstTail{extnat_from_json(t.at("value"))});
  if (kind == "periodic") {
    std::vector<ExtNat> vals;
    for (const auto& v : t.at("values")) vals.push_back(extnat_from_json(v));
    return DimSeqRep(std::move(prefix), DimPeriodicTail{std::move(vals)});
  }
  throw ParseError("dimension sequences admit const and periodic tails only");
}

Json to_json(const DiagOpSeq& op) {
  const char* form = nullptr;
  switch (op.form()) {
    case EigenForm::Plain: form = "plain"; break;
    case EigenForm::WeightSeq: form = "weight"; break;
    case EigenForm::ExpHalf: form = "exp_half"; break;
  }
  return Json{{"kind", "diag_seq"}, {"form", form}, {"seq", to_json(op.seq())}, {"index_scheme", op.index_scheme()}};
}

Json to_json(const SpectrumRep& sp) {
  Json blocks = Json::array();
  for (const auto& b : sp.blocks()) blocks.push_back(Json{{"value", to_json(b.value)}, {"mult", to_json(b.mult)}});
  Json rule;
  if (const auto* c = std::get_if<DimConstTail>(&sp.rule_mult())) {
    rule = Json{{"start", sp.rule_start()}, {"mult_tail", Json{{"kind", "const"}, {"value", to_json(c->value)}}}};
  } else {
    Json vals = Json::array();
    for (const auto& v : std::get<DimPeriodicTail>(sp.rule_mult()).cycle) vals.push_back(to_json(v));
    rule = Json{{"start", sp.rule_start()}, {"mult_tail", Json{{"kind", "periodic"}, {"values", vals}}}};
  }
  return Json{{"kind", "spectrum"}, {"blocks", blocks}, {"rule", rule}};
}

DimSeqRep OperatorInput::dims() const { return is_spectrum ? assoc_dims(spectrum) : assoc_dims(diag); }

OperatorInput operator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("operator needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  OperatorInput in;
  if (kind == "diag_seq") {
    const std::string form = j.value("form", "plain");
    EigenForm f;
    if (form == "plain") f = EigenForm::Plain;
    else if (form == "weight") f = EigenForm::WeightSeq;
    else if (form == "exp_half") f = EigenForm::ExpHalf;
    else throw ParseError("unknown eigenvalue form '" + form + "'");
    in.diag = DiagOpSeq(f, realseq_from_json(j.at("seq")), j.value("index_scheme", "std"));
    return in;
  }
  if (kind == "spectrum") {
    std::vector<SpectrumBlock> blocks;
    for (const auto& b : j.at("blocks"))
      blocks.push_back({rational_from_json(b.at("value")), extnat_from_json(b.at("mult"))});
    long long start = 0;
    DimTail rule_mult = DimConstTail{ExtNat(0)};
    if (j.contains("rule")) {
      const Json& r = j.at("rule");
      start = r.at("start").get<long long>();
      const Json& t = r.at("mult_tail");
      const std::string tk = t.at("kind").get<std::string>();
      if (tk == "const") rule_mult = DimConstTail{extnat_from_json(t.at("value"))};
      else if (tk == "periodic") {
        std::vector<ExtNat> vals;
        for (const auto& v : t.at("values")) vals.push_back(extnat_from_json(v));
        rule_mult = DimPeriodicTail{std::move(vals)};
      } else {
        throw ParseError("rule multiplicity tails admit const and periodic only");
      }
    }
    in.is_spectrum = true;
    in.spectrum = SpectrumRep(std::move(blocks), start, std::move(rule_mult));
    return in;
  }
  throw ParseError("unknown operator kind '" + kind + "'");
}

}  // namespace dg
