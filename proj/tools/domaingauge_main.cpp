#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "domaingauge/certificate.hpp"
#include "domaingauge/douglas.hpp"
#include "domaingauge/errors.hpp"
#include "domaingauge/json_io.hpp"
#include "domaingauge/reductions.hpp"
#include "domaingauge/spectra.hpp"

namespace {

using dg::Json;

// exit codes: 0 equivalent/success, 1 not equivalent, 2 input error,
// 3 internal invariant failure
constexpr int kOk = 0, kNotEquivalent = 1, kInputError = 2, kInternalError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dg::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& path) { return dg::parse_json_text(read_file(path)); }

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_eqcheck(const std::string& relation, const std::string& pa, const std::string& pb) {
  Json ja = load_json(pa), jb = load_json(pb);
  if (relation == "linf") {
    if (ja.value("kind", "") == "phi_image" || jb.value("kind", "") == "phi_image") {
      auto a = dg::operator_from_json(ja.at("op"));
      auto b = dg::operator_from_json(jb.at("op"));
      auto v = dg::decide_linf_phi(dg::phi(a.diag), dg::phi(b.diag));
      emit(dg::make_linf_phi_certificate(a.diag, b.diag, v));
      return v.equivalent ? kOk : kNotEquivalent;
    }
    auto a = dg::realseq_from_json(ja);
    auto b = dg::realseq_from_json(jb);
    auto v = dg::decide_linf(a, b);
    emit(dg::make_linf_certificate(a, b, v));
    return v.equivalent ? kOk : kNotEquivalent;
  }
  if (relation == "e1") {
    auto a = dg::realseq_from_json(ja);
    auto b = dg::realseq_from_json(jb);
    auto v = dg::decide_e1(a, b);
    emit(dg::make_e1_certificate(a, b, v));
    return v.equivalent ? kOk : kNotEquivalent;
  }
  if (relation == "esigma") {
    auto a = dg::dimseq_from_json(ja);
    auto b = dg::dimseq_from_json(jb);
    auto v = dg::decide_esigma(a, b);
    emit(dg::make_esigma_certificate(a, b, v));
    return v.equivalent ? kOk : kNotEquivalent;
  }
  if (relation == "dom") {
    auto a = dg::operator_from_json(ja);
    auto b = dg::operator_from_json(jb);
    if (a.is_spectrum || b.is_spectrum) throw dg::ParseError("domain comparison needs diagonal operators");
    auto v = dg::decide_edom(a.diag, b.diag);
    emit(dg::make_dom_certificate(a.diag, b.diag, v));
    return v.equal ? kOk : kNotEquivalent;
  }
  if (relation == "domu") {
    auto a = dg::operator_from_json(ja);
    auto b = dg::operator_from_json(jb);
    auto v = dg::decide_esigma(a.dims(), b.dims());
    emit(dg::make_domu_certificate(a, b, v));
    return v.equivalent ? kOk : kNotEquivalent;
  }
  throw dg::ParseError("unknown relation '" + relation + "'");
}

int run_reduce(const std::string& map, const std::string& path) {
  Json j = load_json(path);
  if (map == "tilde") {
    emit(dg::to_json(dg::tilde(dg::realseq_from_json(j)).seq));
    return kOk;
  }
  if (map == "psi") {
    emit(dg::to_json(dg::psi(dg::realseq_from_json(j))));
    return kOk;
  }
  if (map == "phi") {
    auto op = dg::operator_from_json(j);
    if (op.is_spectrum) throw dg::ParseError("the weight-log map takes diagonal operators");
    auto img = dg::phi(op.diag);
    Json out{{"kind", "phi_image"}, {"op", dg::to_json(op.diag)}};
    out["exact"] = img.exact ? dg::to_json(*img.exact) : Json(nullptr);
    emit(out);
    return kOk;
  }
  if (map == "psik") {
    emit(dg::to_json(dg::psi_k(dg::dimseq_from_json(j))));
    return kOk;
  }
  throw dg::ParseError("unknown reduction '" + map + "'");
}

std::string csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

int run_lemma44(int n_max, int depth) {
  auto id = dg::identity_op(1ll << depth);
  std::cout << "n,bound,srt_dist\n";
  for (int n = 1; n <= n_max; ++n) {
    auto a = dg::mult_op(depth, dg::Rational(1, n), dg::Rational(1));
    std::cout << n << "," << csv_double(1.0 / n) << "," << csv_double(dg::srt_dist(a, id)) << "\n";
  }
  return kOk;
}

int run_wiener(const std::string& t_list, int K, long long samples) {
  std::cout << "measure,T,average\n";
  std::stringstream ss(t_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double T = std::stod(item);
    double cantor = dg::wiener_average([&](double t) { return dg::cantor_cf(t, K); }, T, samples);
    double point = dg::wiener_average([](double) { return std::complex<double>(1.0, 0.0); }, T,
                                      std::min<long long>(samples, 40001));
    std::cout << "cantor," << csv_double(T) << "," << csv_double(cantor) << "\n";
    std::cout << "point_mass," << csv_double(T) << "," << csv_double(point) << "\n";
  }
  return kOk;
}

int run_interleave(const std::string& spec_path, const std::string& k_list, int reps) {
  Json j = load_json(spec_path);
  std::vector<double> a;
  for (const auto& v : j) a.push_back(v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>());
  const int n = static_cast<int>(a.size());
  if (n == 0) throw dg::ParseError("empty value list");
  const long long dim = static_cast<long long>(n) + static_cast<long long>(n) * reps;
  Eigen::MatrixXd family = Eigen::MatrixXd::Zero(dim, n);
  for (int i = 0; i < n; ++i) family(i, i) = 1.0;
  auto target = dg::diag_op(a, dim, "target");
  target.test_vectors = family;
  std::cout << "k,srt_dist\n";
  std::stringstream ss(k_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int k = std::stoi(item);
    std::vector<double> head(a.begin(), a.begin() + std::min(k, n));
    auto approx = dg::interleave_approx(head, k, reps);
    std::vector<double> embedded(static_cast<std::size_t>(dim), 0.0);
    for (long long i = 0; i < approx.mat.rows() && i < dim; ++i)
      embedded[static_cast<std::size_t>(i)] = approx.mat(i, i);
    auto padded = dg::diag_op(embedded, dim, "approx");
    padded.test_vectors = family;
    std::cout << k << "," << csv_double(dg::srt_dist(padded, target)) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified decision procedures for domain-equivalence relations of diagonal operators"};
  app.require_subcommand(1);

  std::string rel, file_a, file_b, map_name, in_file, cert_file, op_file;
  std::string t_list = "1e2,1e3,1e4", k_list = "1,2,4,8", spec_file;
  std::uint64_t seed = 1;
  long long trials = 1000, samples = 1000001;
  int n_max = 100, depth = 8, reps = 4, cf_K = 40;
  double tol = 1e-8;

  auto* eq = app.add_subcommand("eqcheck", "decide an equivalence relation and emit a certificate");
  eq->add_option("relation", rel, "linf | e1 | esigma | dom | domu")->required();
  eq->add_option("a", file_a, "left input JSON")->required();
  eq->add_option("b", file_b, "right input JSON")->required();

  auto* red = app.add_subcommand("reduce", "apply a reduction map");
  red->add_option("map", map_name, "tilde | phi | psi | psik")->required();
  red->add_option("input", in_file, "input JSON")->required();

  auto* dims_cmd = app.add_subcommand("dims", "associated dimension sequence of an operator");
  dims_cmd->add_option("operator", op_file, "operator JSON")->required();

  auto* vb = app.add_subcommand("verify-bireduction", "sample both reduction chains");
  vb->add_option("--trials", trials, "number of sampled pairs");
  vb->add_option("--seed", seed, "generator seed");

  auto* wl = app.add_subcommand("wonderland", "spectral numerics");
  wl->require_subcommand(1);
  auto* l44 = wl->add_subcommand("lemma44", "resolvent distance of (x/n + 1) multiplications to the identity");
  l44->add_option("--n-max", n_max, "largest n");
  l44->add_option("--depth", depth, "cylinder depth (matrix size 2^depth)");
  auto* wie = wl->add_subcommand("wiener", "Wiener averages of |cf|^2");
  wie->add_option("--T", t_list, "comma-separated horizons");
  wie->add_option("--K", cf_K, "product truncation");
  wie->add_option("--samples", samples, "quadrature nodes");
  auto* inter = wl->add_subcommand("interleave", "distance of interleaved truncations to the plain diagonal");
  inter->add_option("--spec", spec_file, "JSON array of diagonal values")->required();
  inter->add_option("--k", k_list, "comma-separated class counts");
  inter->add_option("--reps", reps, "copies per class");

  auto* ver = app.add_subcommand("verify", "re-check an emitted certificate");
  ver->add_option("certificate", cert_file, "certificate JSON")->required();

  auto* dgl = app.add_subcommand("douglas", "finite-dimensional range-inclusion oracle");
  dgl->add_option("a", file_a, "matrix A JSON (array of rows)")->required();
  dgl->add_option("b", file_b, "matrix B JSON (array of rows)")->required();
  dgl->add_option("--tol", tol, "relative singular-value tolerance");

  try {
    app.parse(argc, argv);

    if (eq->parsed()) return run_eqcheck(rel, file_a, file_b);
    if (red->parsed()) return run_reduce(map_name, in_file);
    if (dims_cmd->parsed()) {
      emit(dg::to_json(dg::operator_from_json(load_json(op_file)).dims()));
      return kOk;
    }
    if (vb->parsed()) {
      auto rep = dg::verify_bireduction(seed, trials);
      Json out{{"seed", rep.seed},
               {"trials", rep.trials},
               {"psi_agreements", rep.psi_agreements},
               {"phi_agreements", rep.phi_agreements}};
      Json ds = Json::array();
      for (const auto& d : rep.discrepancies)
        ds.push_back(Json{{"direction", d.direction}, {"trial", d.trial}, {"detail", d.detail}});
      out["discrepancies"] = ds;
      emit(out);
      return rep.ok() ? kOk : kNotEquivalent;
    }
    if (l44->parsed()) return run_lemma44(n_max, depth);
    if (wie->parsed()) return run_wiener(t_list, cf_K, samples);
    if (inter->parsed()) return run_interleave(spec_file, k_list, reps);
    if (ver->parsed()) {
      std::string why;
      if (dg::verify_certificate(load_json(cert_file), &why)) {
        emit(Json{{"verified", true}});
        return kOk;
      }
      emit(Json{{"verified", false}, {"error", why}});
      return kInternalError;
    }
    if (dgl->parsed()) {
      auto parse_matrix = [](const Json& j) {
        Eigen::MatrixXd m(static_cast<long>(j.size()), j.empty() ? 0 : static_cast<long>(j.at(0).size()));
        for (long i = 0; i < m.rows(); ++i)
          for (long c = 0; c < m.cols(); ++c)
            m(i, c) = j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(c)).get<double>();
        return m;
      };
      Eigen::MatrixXd A = parse_matrix(load_json(file_a));
      Eigen::MatrixXd B = parse_matrix(load_json(file_b));
      auto r = dg::douglas_findim(A, B, tol);
      emit(dg::make_douglas_certificate(A, B, tol, r));
      return r.included ? kOk : kNotEquivalent;
    }
    return kInputError;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const dg::InternalInvariantFailure& e) {
    emit(Json{{"error", Json{{"type", "internal_invariant_failure"}, {"message", e.what()}}}});
    return kInternalError;
  } catch (const std::exception& e) {
    emit(Json{{"error", Json{{"type", "input_error"}, {"message", e.what()}}}});
    return kInputError;
  }
}
