#ifndef DOMAINGAUGE_JSON_IO_HPP
#define DOMAINGAUGE_JSON_IO_HPP

#include <json.hpp>

#include "domaingauge/dimseq.hpp"
#include "domaingauge/operators.hpp"
#include "domaingauge/realseq.hpp"

namespace dg {

// Canonical JSON with deterministic field order. Rationals are emitted as
// {"num": "...", "den": "..."} with decimal strings; inputs also accept
// integers, exact decimal strings ("2.5", "-3/4"), and JSON floats (dyadic,
// hence exact). The infinite extended natural is the string "inf".
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const ExtNat& v);
ExtNat extnat_from_json(const Json& j);

Json to_json(const RealSeqRep& s);
RealSeqRep realseq_from_json(const Json& j);

Json to_json(const DimSeqRep& s);
DimSeqRep dimseq_from_json(const Json& j);

Json to_json(const DiagOpSeq& op);
Json to_json(const SpectrumRep& sp);

/// Either a diagonal operator or a spectrum (both feed assoc_dims).
struct OperatorInput {
  bool is_spectrum = false;
  DiagOpSeq diag;
  SpectrumRep spectrum;
  DimSeqRep dims() const;
};
OperatorInput operator_from_json(const Json& j);

/// Parse with a uniform error wrapper (everything becomes ParseError).
Json parse_json_text(const std::string& text);

}  // namespace dg

#endif
