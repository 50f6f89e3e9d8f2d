#include "domaingauge/certificate.hpp"

#include <cmath>
#include <cstdio>

#include "domaingauge/approx.hpp"
#include "domaingauge/errors.hpp"
#include "domaingauge/sha256.hpp"

namespace dg {

namespace {

Json skeleton(const char* relation, Json inputs) {
  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["relation"] = relation;
  doc["inputs"] = std::move(inputs);
  doc["inputs_sha256"] = sha256_hex(doc["inputs"].dump());
  return doc;
}

std::string fixed_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(fixed_double(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const Json& j) {
  const long rows = static_cast<long>(j.size());
  if (rows == 0) return Eigen::MatrixXd(0, 0);
  const long cols = static_cast<long>(j.at(0).size());
  Eigen::MatrixXd m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long c = 0; c < cols; ++c) {
      const Json& cell = j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(c));
      m(i, c) = cell.is_string() ? std::stod(cell.get<std::string>()) : cell.get<double>();
    }
  return m;
}

Json sigma_witnesses_json(const SigmaVerdict& v) {
  Json ws = Json::array();
  for (const auto& w : v.witnesses)
    ws.push_back(Json{{"k", w.k.str()}, {"side", w.side}, {"n", w.n.str()}, {"l", w.l.str()}});
  return ws;
}

Json sigma_verdict_json(const SigmaVerdict& v) {
  if (v.equivalent)
    return Json{{"k", v.k.str()}, {"box_n", v.box_n.str()}, {"box_l", v.box_l.str()}};
  return Json{{"reason", to_string(*v.reason)}, {"k_cap", v.k_cap.str()}, {"witnesses", sigma_witnesses_json(v)}};
}

}  // namespace

Json make_linf_certificate(const RealSeqRep& a, const RealSeqRep& b, const LinfVerdict& v) {
  Json doc = skeleton("linf", Json{{"a", to_json(a)}, {"b", to_json(b)}});
  doc["verdict"] = v.equivalent ? "equivalent" : "not_equivalent";
  doc["witness"] = v.equivalent
                       ? Json{{"bound", to_json(v.bound)}, {"box", v.box}}
                       : Json{{"index", v.witness}, {"threshold", "1000000"}, {"schedule", v.schedule}};
  return doc;
}

Json make_linf_phi_certificate(const DiagOpSeq& A, const DiagOpSeq& B, const LinfVerdict& v) {
  Json doc = skeleton("linf_phi", Json{{"a", to_json(A)}, {"b", to_json(B)}});
  doc["verdict"] = v.equivalent ? "equivalent" : "not_equivalent";
  doc["witness"] = v.equivalent
                       ? Json{{"bound", to_json(v.bound)}, {"box", v.box}}
                       : Json{{"index", v.witness}, {"log_threshold", 28}, {"schedule", v.schedule}};
  return doc;
}

Json make_e1_certificate(const RealSeqRep& a, const RealSeqRep& b, const E1Verdict& v) {
  Json doc = skeleton("e1", Json{{"a", to_json(a)}, {"b", to_json(b)}});
  doc["verdict"] = v.equivalent ? "equivalent" : "not_equivalent";
  doc["witness"] = v.equivalent
                       ? Json{{"stabilization", v.stabilization}}
                       : Json{{"probe_start", v.probe_start}, {"probe_period", v.probe_period}, {"schedule", v.schedule}};
  return doc;
}

Json make_esigma_certificate(const DimSeqRep& a, const DimSeqRep& b, const SigmaVerdict& v) {
  Json doc = skeleton("esigma", Json{{"a", to_json(a)}, {"b", to_json(b)}});
  doc["verdict"] = v.equivalent ? "equivalent" : "not_equivalent";
  doc["witness"] = sigma_verdict_json(v);
  return doc;
}

Json make_dom_certificate(const DiagOpSeq& A, const DiagOpSeq& B, const DomVerdict& v) {
  Json doc = skeleton("dom", Json{{"a", to_json(A)}, {"b", to_json(B)}});
  doc["verdict"] = v.equal ? "equivalent" : "not_equivalent";
  doc["witness"] = v.equal ? Json{{"c1", to_json(v.c1)},
                                  {"c2", to_json(v.c2)},
                                  {"box", v.box},
                                  {"bounds_exact", v.bounds_exact}}
                           : Json{{"index", v.witness}, {"note", v.note}};
  return doc;
}

Json make_domu_certificate(const OperatorInput& A, const OperatorInput& B, const SigmaVerdict& v) {
  Json ja = A.is_spectrum ? to_json(A.spectrum) : to_json(A.diag);
  Json jb = B.is_spectrum ? to_json(B.spectrum) : to_json(B.diag);
  Json doc = skeleton("domu", Json{{"a", std::move(ja)}, {"b", std::move(jb)}});
  doc["verdict"] = v.equivalent ? "equivalent" : "not_equivalent";
  doc["witness"] = sigma_verdict_json(v);
  return doc;
}

Json make_douglas_certificate(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol,
                              const DouglasResult& r) {
  Json doc = skeleton("douglas", Json{{"a", matrix_to_json(A)}, {"b", matrix_to_json(B)}, {"tol", fixed_double(tol)}});
  doc["verdict"] = r.included ? "equivalent" : "not_equivalent";
  Json w;
  if (r.lambda) w["lambda"] = fixed_double(*r.lambda);
  w["psd_slack"] = fixed_double(r.psd_slack);
  doc["witness"] = std::move(w);
  return doc;
}

// ---------------------------------------------------------------------------

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool verify_linf(const Json& doc, std::string* why) {
  RealSeqRep a = realseq_from_json(doc.at("inputs").at("a"));
  RealSeqRep b = realseq_from_json(doc.at("inputs").at("b"));
  const Json& w = doc.at("witness");
  if (doc.at("verdict") == "equivalent") {
    Rational c = rational_from_json(w.at("bound"));
    long long box = w.at("box").get<long long>();
    for (long long n = 0; n <= box; ++n)
      if (rat_abs(a.eval(n) - b.eval(n)) > c) return fail(why, "bound violated at index " + std::to_string(n));
    return true;
  }
  long long idx = w.at("index").get<long long>();
  if (!(rat_abs(a.eval(idx) - b.eval(idx)) > Rational(kLinfWitnessThreshold)))
    return fail(why, "difference below threshold at the witness index");
  return true;
}

bool verify_linf_phi(const Json& doc, std::string* why) {
  OperatorInput a = operator_from_json(doc.at("inputs").at("a"));
  OperatorInput b = operator_from_json(doc.at("inputs").at("b"));
  if (a.is_spectrum || b.is_spectrum) return fail(why, "weight-log comparison needs diagonal operators");
  PhiImage pa = phi(a.diag), pb = phi(b.diag);
  const Json& w = doc.at("witness");
  if (doc.at("verdict") == "equivalent") {
    double c = to_double(rational_from_json(w.at("bound")));
    long long box = w.at("box").get<long long>();
    for (long long n = 0; n <= box; ++n)
      if (std::fabs(pa.eval_double(n) - pb.eval_double(n)) > c + 1e-9)
        return fail(why, "bound violated at index " + std::to_string(n));
    return true;
  }
  long long idx = w.at("index").get<long long>();
  if (!(std::fabs(pa.eval_double(idx) - pb.eval_double(idx)) > 28.0 - 1e-6))
    return fail(why, "weight-log gap below threshold at the witness index");
  return true;
}

bool verify_e1(const Json& doc, std::string* why) {
  RealSeqRep a = realseq_from_json(doc.at("inputs").at("a"));
  RealSeqRep b = realseq_from_json(doc.at("inputs").at("b"));
  const Json& w = doc.at("witness");
  if (doc.at("verdict") == "equivalent") {
    long long n0 = w.at("stabilization").get<long long>();
    long long box = n0 + equality_box(a, b);
    for (long long n = n0; n <= box; ++n)
      if (a.eval(n) != b.eval(n)) return fail(why, "disagreement beyond the stabilization index");
    if (n0 > 0 && a.eval(n0 - 1) == b.eval(n0 - 1)) return fail(why, "stabilization index is not minimal");
    return true;
  }
  long long start = w.at("probe_start").get<long long>();
  long long period = w.at("probe_period").get<long long>();
  if (period < 1) return fail(why, "empty probe schedule");
  for (int i = 0; i < 12; ++i)
    if (a.eval(start + i * period) == b.eval(start + i * period))
      return fail(why, "schedule probe found an agreement");
  return true;
}

bool verify_sigma_witness(const DimSeqRep& a, const DimSeqRep& b, const Json& doc, std::string* why) {
  const Json& w = doc.at("witness");
  if (doc.at("verdict") == "equivalent") {
    BigInt k(w.at("k").get<std::string>());
    BigInt bn(w.at("box_n").get<std::string>());
    BigInt bl(w.at("box_l").get<std::string>());
    if (!esigma_box(a, b, k, bn, bl).holds) return fail(why, "stabilization box check failed");
    return true;
  }
  for (const auto& jw : w.at("witnesses")) {
    BigInt k(jw.at("k").get<std::string>());
    BigInt n(jw.at("n").get<std::string>());
    BigInt l(jw.at("l").get<std::string>());
    int side = jw.at("side").get<int>();
    const DimSeqRep& lhs = side == 1 ? a : b;
    const DimSeqRep& rhs = side == 1 ? b : a;
    if (window_sum(lhs, n, l) <= window_sum(rhs, n - k, l + 2 * k))
      return fail(why, "a refutation window does not violate its inequality");
  }
  return true;
}

bool verify_esigma(const Json& doc, std::string* why) {
  DimSeqRep a = dimseq_from_json(doc.at("inputs").at("a"));
  DimSeqRep b = dimseq_from_json(doc.at("inputs").at("b"));
  return verify_sigma_witness(a, b, doc, why);
}

bool verify_domu(const Json& doc, std::string* why) {
  OperatorInput a = operator_from_json(doc.at("inputs").at("a"));
  OperatorInput b = operator_from_json(doc.at("inputs").at("b"));
  return verify_sigma_witness(a.dims(), b.dims(), doc, why);
}

bool verify_dom(const Json& doc, std::string* why) {
  OperatorInput ain = operator_from_json(doc.at("inputs").at("a"));
  OperatorInput bin = operator_from_json(doc.at("inputs").at("b"));
  if (ain.is_spectrum || bin.is_spectrum) return fail(why, "domain comparison needs diagonal operators");
  const DiagOpSeq& A = ain.diag;
  const DiagOpSeq& B = bin.diag;
  const Json& w = doc.at("witness");
  auto log_weight_precise = [](const DiagOpSeq& X, long long n) -> BigFloat {
    if (X.form() == EigenForm::ExpHalf) return to_bigfloat(X.seq().eval(n)) / 2;
    return log(to_bigfloat(X.weight_rational(n)));
  };
  if (doc.at("verdict") == "equivalent") {
    Rational c1 = rational_from_json(w.at("c1"));
    Rational c2 = rational_from_json(w.at("c2"));
    if (!(c1 > 0 && c2 > 0)) return fail(why, "bounds must be positive");
    long long box = w.at("box").get<long long>();
    const BigFloat slack("1e-40");
    BigFloat lc1 = log(to_bigfloat(c1)), lc2 = log(to_bigfloat(c2));
    for (long long n = 0; n <= box; ++n) {
      // C1 T_B <= T_A <= C2 T_B, i.e. ln C1 <= 2(ln w_B - ln w_A) <= ln C2
      BigFloat gap = 2 * (log_weight_precise(B, n) - log_weight_precise(A, n));
      if (gap < lc1 - slack || gap > lc2 + slack)
        return fail(why, "T-ratio leaves [c1, c2] at index " + std::to_string(n));
    }
    return true;
  }
  long long idx = w.at("index").get<long long>();
  double gap = 2.0 * std::fabs(B.log_weight(idx) - A.log_weight(idx));
  if (!(gap > std::log(1e6)))
    return fail(why, "T-ratio stays inside [1e-6, 1e6] at the witness index");
  return true;
}

bool verify_douglas(const Json& doc, std::string* why) {
  Eigen::MatrixXd a = matrix_from_json(doc.at("inputs").at("a"));
  Eigen::MatrixXd b = matrix_from_json(doc.at("inputs").at("b"));
  double tol = std::stod(doc.at("inputs").at("tol").get<std::string>());
  DouglasResult r = douglas_findim(a, b, tol);
  const bool claimed = doc.at("verdict") == "equivalent";
  if (r.included != claimed) return fail(why, "rank criterion disagrees with the recorded verdict");
  if (douglas_psd_criterion(a, b, tol) != claimed)
    return fail(why, "PSD criterion disagrees with the recorded verdict");
  return true;
}

}  // namespace

bool verify_certificate(const Json& doc, std::string* why) {
  try {
    if (doc.at("tool") != kToolName) return fail(why, "unknown tool field");
    const Json& inputs = doc.at("inputs");
    if (doc.at("inputs_sha256") != sha256_hex(inputs.dump())) return fail(why, "input hash mismatch");
    const std::string rel = doc.at("relation").get<std::string>();
    if (rel == "linf") return verify_linf(doc, why);
    if (rel == "linf_phi") return verify_linf_phi(doc, why);
    if (rel == "e1") return verify_e1(doc, why);
    if (rel == "esigma") return verify_esigma(doc, why);
    if (rel == "dom") return verify_dom(doc, why);
    if (rel == "domu") return verify_domu(doc, why);
    if (rel == "douglas") return verify_douglas(doc, why);
    return fail(why, "unknown relation '" + rel + "'");
  } catch (const std::exception& ex) {
    return fail(why, std::string("verification error: ") + ex.what());
  }
}

}  // namespace dg
