#ifndef DOMAINGAUGE_CERTIFICATE_HPP
#define DOMAINGAUGE_CERTIFICATE_HPP

#include <string>

#include "domaingauge/douglas.hpp"
#include "domaingauge/equiv.hpp"
#include "domaingauge/json_io.hpp"
#include "domaingauge/reductions.hpp"

namespace dg {

inline constexpr const char* kToolName = "domaingauge";
inline constexpr const char* kToolVersion = "0.1.0";

// Every decision is emitted as a self-contained certificate: the relation,
// the echoed inputs (with a hash), the verdict, and a machine-checkable
// witness. verify_certificate re-evaluates the witness from the embedded
// inputs alone.

Json make_linf_certificate(const RealSeqRep& a, const RealSeqRep& b, const LinfVerdict& v);
Json make_linf_phi_certificate(const DiagOpSeq& A, const DiagOpSeq& B, const LinfVerdict& v);
Json make_e1_certificate(const RealSeqRep& a, const RealSeqRep& b, const E1Verdict& v);
Json make_esigma_certificate(const DimSeqRep& a, const DimSeqRep& b, const SigmaVerdict& v);
Json make_dom_certificate(const DiagOpSeq& A, const DiagOpSeq& B, const DomVerdict& v);
Json make_domu_certificate(const OperatorInput& A, const OperatorInput& B, const SigmaVerdict& v);
Json make_douglas_certificate(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol,
                              const DouglasResult& r);

/// True when the embedded witness re-verifies; on failure `why` explains.
bool verify_certificate(const Json& doc, std::string* why = nullptr);

}  // namespace dg

#endif
