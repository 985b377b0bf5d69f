#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cutcone/certificate.hpp"
#include "cutcone/cut_algebra.hpp"
#include "cutcone/embeddings.hpp"
#include "cutcone/fullcut.hpp"
#include "cutcone/graph.hpp"
#include "cutcone/io.hpp"
#include "cutcone/matrix.hpp"
#include "cutcone/metric.hpp"
#include "cutcone/oracle.hpp"
#include "cutcone/paircut.hpp"
#include "cutcone/sig.hpp"

namespace cutcone {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int negative = 1;
inline constexpr int inconclusive = 2;
inline constexpr int usage = 3;
}  // namespace exit_code

namespace cli_detail {

struct Options {
  std::string format = "text";
  std::optional<std::size_t> max_n;
  std::uint64_t seed = 0;
  std::string output;
  std::string metric;
  std::string graph;
  std::string cert;
  std::string emit_certificate;
  std::string emit_farkas;
  std::optional<std::size_t> n;
  std::vector<std::string> a;
  bool strict = false;
  double density = 0.3;
  std::string family_name;
  std::vector<std::size_t> family_params;
  std::string kind;
};

class Runner {
 public:
  Runner(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  bool json_mode() const { return opt_.format == "json"; }

  Metric load_metric() const {
    if (opt_.metric.empty() || opt_.metric == "-") return metric_from_json(parse_json(in_));
    return metric_from_json(read_json_file(opt_.metric));
  }

  SimpleGraph load_graph() const {
    if (opt_.graph.empty()) throw ParseError("--graph <file> is required");
    return graph_from_json(read_json_file(opt_.graph));
  }

  CutCertificate load_certificate() const {
    if (opt_.cert.empty()) throw ParseError("--cert <file> is required");
    return certificate_from_json(read_json_file(opt_.cert));
  }

  std::size_t require_n() const {
    if (!opt_.n) throw ParseError("--n <count> is required");
    return *opt_.n;
  }

  void emit(const json& doc) const { out_ << doc.dump(2) << '\n'; }

  static std::string pair_label(std::size_t i, std::size_t j) {
    return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
  }

  static std::string cut_label(const Cut& c) {
    std::string s = "{";
    auto m = c.members();
    for (std::size_t k = 0; k < m.size(); ++k) s += (k ? "," : "") + std::to_string(m[k]);
    return s + "}";
  }

  static json pair_weights_json(std::size_t n, const RationalVector& w) {
    json out = json::array();
    for (std::size_t k = 0; k < w.size(); ++k) {
      auto [i, j] = pair_at(k, n);
      out.push_back({{"pair", {i, j}}, {"weight", rational_to_json(w[k])}});
    }
    return out;
  }

  void write_pair_weights_text(std::size_t n, const RationalVector& w) const {
    for (std::size_t k = 0; k < w.size(); ++k) {
      auto [i, j] = pair_at(k, n);
      out_ << "  " << pair_label(i, j) << " " << to_string(w[k]) << '\n';
    }
  }

  void write_certificate_text(const CutCertificate& cert) const {
    for (std::size_t k = 0; k < cert.cuts.size(); ++k)
      out_ << "  " << cut_label(cert.cuts[k]) << " " << to_string(cert.weights[k]) << '\n';
  }

  static json farkas_json(std::size_t n, const RationalVector& y) { return {{"n", n}, {"y", vector_to_json(y)}}; }

  void write_side_files(std::size_t n, const std::optional<CutCertificate>& cert,
                        const std::optional<RationalVector>& farkas) const {
    if (!opt_.emit_certificate.empty() && cert) write_json_file(opt_.emit_certificate, certificate_to_json(*cert));
    if (!opt_.emit_farkas.empty() && farkas) write_json_file(opt_.emit_farkas, farkas_json(n, *farkas));
  }

  int validate() const {
    Metric d = load_metric();
    ValidationReport r = validate_metric(d, opt_.strict);
    if (json_mode()) {
      json neg = json::array(), zero = json::array(), tri = json::array();
      for (const auto& e : r.negative_entries) neg.push_back({{"pair", {e.i, e.j}}, {"value", rational_to_json(e.value)}});
      for (const auto& e : r.zero_entries) zero.push_back({{"pair", {e.i, e.j}}, {"value", rational_to_json(e.value)}});
      for (const auto& t : r.triangle_violations)
        tri.push_back({{"pair", {t.i, t.j}}, {"via", t.via}, {"slack", rational_to_json(t.slack)}});
      emit({{"valid", r.valid()}, {"negative_entries", neg}, {"zero_entries", zero}, {"triangle_violations", tri}});
    } else {
      out_ << (r.valid() ? "valid" : "invalid") << '\n';
      for (const auto& e : r.negative_entries) out_ << "  negative " << pair_label(e.i, e.j) << " " << to_string(e.value) << '\n';
      for (const auto& e : r.zero_entries) out_ << "  zero " << pair_label(e.i, e.j) << '\n';
      for (const auto& t : r.triangle_violations)
        out_ << "  triangle " << pair_label(t.i, t.j) << " via " << t.via << " slack " << to_string(t.slack) << '\n';
    }
    return r.valid() ? exit_code::success : exit_code::negative;
  }

  int stats() const {
    Metric d = load_metric();
    MetricSummary s = summarize(d);
    if (json_mode()) {
      emit({{"n", d.n()}, {"trace", rational_to_json(s.trace)}, {"star_traces", vector_to_json(s.star_traces)}});
    } else {
      out_ << "n = " << d.n() << "\ntrace = " << to_string(s.trace) << "\nstar traces:";
      for (const auto& v : s.star_traces) out_ << ' ' << to_string(v);
      out_ << '\n';
    }
    return exit_code::success;
  }

  int paircut_lp(const Metric& d) const {
    FeasibilityResult r = paircut_membership_exact(d, opt_.max_n.value_or(kDefaultMaxOraclePaircutN));
    std::optional<CutCertificate> cert;
    if (r.feasible()) cert = certificate_from_pair_weights(d.n(), *r.witness);
    write_side_files(d.n(), cert, r.farkas);
    if (json_mode()) {
      json doc = {{"n", d.n()}, {"method", "lp"}, {"member", r.feasible()}, {"pivots", r.pivots}};
      if (r.witness) doc["weights"] = pair_weights_json(d.n(), *r.witness);
      if (r.farkas) doc["farkas"] = vector_to_json(*r.farkas);
      emit(doc);
    } else {
      out_ << "n = " << d.n() << " (exact LP)\nverdict: " << (r.feasible() ? "member" : "non-member") << '\n';
      if (r.witness) {
        out_ << "weights:\n";
        write_pair_weights_text(d.n(), *r.witness);
      }
      if (r.farkas) {
        out_ << "farkas:";
        for (const auto& y : *r.farkas) out_ << ' ' << to_string(y);
        out_ << '\n';
      }
    }
    return r.feasible() ? exit_code::success : exit_code::negative;
  }

  int paircut() const {
    Metric d = load_metric();
    if (d.n() < 5) return paircut_lp(d);
    PaircutVerdict v = paircut_membership(d);
    std::optional<CutCertificate> cert;
    if (v.member) cert = certificate_from_pair_weights(d.n(), v.weights);
    write_side_files(d.n(), cert, std::nullopt);
    if (json_mode()) {
      json viol = json::array();
      for (const auto& p : v.violations) viol.push_back({{"pair", {p.i, p.j}}, {"slack", rational_to_json(p.slack)}});
      json doc = {{"n", d.n()}, {"method", "closed-form"}, {"member", v.member}, {"violations", viol}};
      if (v.member) doc["weights"] = pair_weights_json(d.n(), v.weights);
      emit(doc);
    } else {
      out_ << "n = " << d.n() << "\nverdict: " << (v.member ? "member" : "non-member") << '\n';
      if (!v.violations.empty()) {
        out_ << "violated pairs:\n";
        for (const auto& p : v.violations) out_ << "  " << pair_label(p.i, p.j) << " slack " << to_string(p.slack) << '\n';
      }
      if (v.member) {
        out_ << "weights:\n";
        write_pair_weights_text(d.n(), v.weights);
      }
    }
    return v.member ? exit_code::success : exit_code::negative;
  }

  int cutcone_sufficient() const {
    Metric d = load_metric();
    SufficientConditionResult r = sufficient_condition(d, opt_.max_n.value_or(kDefaultMaxCutN));
    write_side_files(d.n(), r.certificate, std::nullopt);
    const bool member = r.verdict == SufficientVerdict::member;
    if (json_mode()) {
      json failing = json::array();
      for (const auto& f : r.failing) failing.push_back({{"cut", f.cut.members()}, {"slack", rational_to_json(f.slack)}});
      json doc = {{"n", d.n()}, {"verdict", member ? "member" : "inconclusive"}, {"failing", failing}};
      if (r.certificate) doc["certificate"] = certificate_to_json(*r.certificate);
      emit(doc);
    } else {
      out_ << "n = " << d.n() << "\nverdict: " << (member ? "member" : "inconclusive") << '\n';
      if (!r.failing.empty()) {
        out_ << "failing cuts:\n";
        for (const auto& f : r.failing) out_ << "  " << cut_label(f.cut) << " slack " << to_string(f.slack) << '\n';
      }
      if (r.certificate) {
        out_ << "certificate:\n";
        write_certificate_text(*r.certificate);
      }
    }
    return member ? exit_code::success : exit_code::inconclusive;
  }

  int cutcone_exact() const {
    Metric d = load_metric();
    const std::size_t max_n = opt_.max_n.value_or(kDefaultMaxOracleCutN);
    FeasibilityResult r = cutcone_membership(d, max_n);
    std::optional<CutCertificate> cert;
    if (r.feasible()) cert = certificate_from_witness(d.n(), *r.witness, max_n);
    write_side_files(d.n(), cert, r.farkas);
    if (json_mode()) {
      json doc = {{"n", d.n()}, {"member", r.feasible()}, {"pivots", r.pivots}};
      if (cert) doc["certificate"] = certificate_to_json(*cert);
      if (r.farkas) doc["farkas"] = farkas_json(d.n(), *r.farkas);
      emit(doc);
    } else {
      out_ << "n = " << d.n() << "\nverdict: " << (r.feasible() ? "member" : "non-member") << '\n';
      if (cert) {
        out_ << "certificate:\n";
        write_certificate_text(*cert);
      }
      if (r.farkas) {
        out_ << "farkas:";
        for (const auto& y : *r.farkas) out_ << ' ' << to_string(y);
        out_ << '\n';
      }
    }
    return r.feasible() ? exit_code::success : exit_code::negative;
  }

  int kernel() const {
    KernelBasis basis = kernel_basis(require_n(), opt_.max_n.value_or(kDefaultMaxCutN));
    if (json_mode()) {
      emit(kernel_basis_to_json(basis));
    } else {
      out_ << "n = " << basis.n << ", dimension " << basis.vectors.size() << '\n';
      for (const auto& v : basis.vectors) {
        out_ << v.label() << ':';
        for (const auto& x : v.vector.dense()) out_ << ' ' << to_string(x);
        out_ << '\n';
      }
    }
    return exit_code::success;
  }

  int verify_cert() const {
    CutCertificate cert = load_certificate();
    Metric d = load_metric();
    CertificateReport r = verify_cut_certificate(cert, d);
    if (json_mode()) {
      json doc = {{"valid", r.valid}, {"negative_weights", r.negative_weights}, {"malformed_cuts", r.malformed_cuts}};
      if (r.first_mismatch)
        doc["first_mismatch"] = {{"pair", {r.first_mismatch->i, r.first_mismatch->j}},
                                 {"expected", rational_to_json(r.first_mismatch->expected)},
                                 {"actual", rational_to_json(r.first_mismatch->actual)}};
      emit(doc);
    } else {
      out_ << (r.valid ? "valid" : "invalid") << '\n';
      for (auto k : r.negative_weights) out_ << "  negative weight at entry " << k + 1 << '\n';
      for (auto k : r.malformed_cuts) out_ << "  malformed cut at entry " << k + 1 << '\n';
      if (r.first_mismatch)
        out_ << "  mismatch at " << pair_label(r.first_mismatch->i, r.first_mismatch->j) << ": expected "
             << to_string(r.first_mismatch->expected) << ", got " << to_string(r.first_mismatch->actual) << '\n';
    }
    return r.valid ? exit_code::success : exit_code::negative;
  }

  void write_points(const PointSet& pts) const {
    if (json_mode()) emit(point_set_to_json(pts));
    else write_point_set_text(out_, pts);
  }

  int embed_l1() const {
    CutCertificate cert = load_certificate();
    if (!verify_cut_certificate(cert, cert.reconstruct()).valid) {
      out_ << "invalid certificate\n";
      return exit_code::negative;
    }
    write_points(l1_embedding(cert));
    return exit_code::success;
  }

  int embed_linf() const {
    write_points(linf_sig_embedding(load_graph()));
    return exit_code::success;
  }

  void write_graph(const SimpleGraph& g) const {
    if (json_mode()) {
      emit(graph_to_json(g));
      return;
    }
    out_ << "n = " << g.n() << ", " << g.edge_count() << " edges\n";
    for (auto [i, j] : g.edges()) out_ << i << ' ' << j << '\n';
  }

  int sig_build() const {
    write_graph(sig_graph(load_metric()));
    return exit_code::success;
  }

  json sig_report_json(const SigReport& r) const {
    json checks = json::array();
    for (const auto& c : r.checks) {
      const char* outcome = c.outcome == SigCheck::strict_pass ? "strict-pass"
                            : c.outcome == SigCheck::nonstrict_pass ? "nonstrict-pass" : "fail";
      checks.push_back({{"pair", {c.i, c.j}}, {"edge", c.edge}, {"outcome", outcome}, {"slack", rational_to_json(c.slack)}});
    }
    return {{"pass", r.pass()}, {"radii", vector_to_json(r.radii)}, {"checks", checks}};
  }

  void write_sig_report_text(const SigReport& r) const {
    out_ << "SIG check: " << (r.pass() ? "pass" : "fail") << "\nradii:";
    for (const auto& x : r.radii) out_ << ' ' << to_string(x);
    out_ << '\n';
    for (const auto& c : r.checks)
      if (c.outcome == SigCheck::fail)
        out_ << "  " << pair_label(c.i, c.j) << (c.edge ? " edge" : " non-edge") << " slack " << to_string(c.slack) << '\n';
  }

  int sig_verify() const {
    SimpleGraph g = load_graph();
    SigReport r = verify_sig_metric(load_metric(), g);
    if (json_mode()) emit(sig_report_json(r));
    else write_sig_report_text(r);
    return r.pass() ? exit_code::success : exit_code::negative;
  }

  int star_obstruction() const {
    const std::size_t n = require_n();
    RationalVector a;
    for (const auto& s : opt_.a) a.push_back(parse_rational(s));
    StarObstruction r = star_graph_obstruction(n, a);
    if (json_mode()) {
      json viol = json::array();
      for (const auto& p : r.paircut.violations) viol.push_back({{"pair", {p.i, p.j}}, {"slack", rational_to_json(p.slack)}});
      emit({{"n", n},
            {"metric", metric_to_json(r.metric)},
            {"sig", sig_report_json(r.sig)},
            {"member", r.paircut.member},
            {"violations", viol}});
    } else {
      write_sig_report_text(r.sig);
      out_ << "PCUT_" << n + 1 << " verdict: " << (r.paircut.member ? "member" : "non-member") << '\n';
      for (const auto& p : r.paircut.violations) out_ << "  " << pair_label(p.i, p.j) << " slack " << to_string(p.slack) << '\n';
    }
    if (!r.sig.pass()) return exit_code::negative;
    return r.paircut.member ? exit_code::success : exit_code::negative;
  }

  int family_gen() const {
    SimpleGraph g(1);
    if (opt_.family_name == "random") {
      if (opt_.family_params.size() != 1) throw std::invalid_argument("family random takes 1 parameter");
      std::mt19937_64 rng(opt_.seed);
      g = families::random_connected(opt_.family_params[0], opt_.density, rng);
    } else {
      g = family(opt_.family_name, opt_.family_params);
    }
    if (opt_.metric.empty()) out_ << graph_to_json(g).dump(2) << '\n';
    else if (opt_.metric == "d0") out_ << metric_to_json(truncated_metric(g)).dump(2) << '\n';
    else if (opt_.metric == "d1") out_ << metric_to_json(graph_metric(g)).dump(2) << '\n';
    else throw ParseError("family gen: --metric must be d0 or d1");
    return exit_code::success;
  }

  int matrix_dump() const {
    const std::size_t n = require_n();
    const std::size_t max_n = opt_.max_n.value_or(kDefaultMaxCutN);
    RationalMatrix m;
    const std::string& k = opt_.kind;
    if (k == "square") m = square_cut_matrix(n);
    else if (k == "incidence") m = incidence_matrix(n);
    else if (k == "full") m = full_cut_matrix(n, max_n);
    else if (k == "right-inverse") m = right_inverse_full_cut_matrix(n, max_n);
    else if (k == "inverse") m = inverse_square_cut_matrix(n);
    else if (k == "column-space") m = projectors(n).column_space;
    else if (k == "projector-top") m = projectors(n).top;
    else if (k == "projector-middle") m = projectors(n).middle;
    else if (k == "projector-minus-two") m = projectors(n).minus_two;
    else throw ParseError("matrix dump: unknown --kind '" + k + "'");
    if (json_mode()) emit(matrix_to_json(m));
    else write_matrix_text(out_, m);
    return exit_code::success;
  }

 private:
  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace cli_detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  cli_detail::Options opt;
  CLI::App app{"Exact cut-cone and pair-cut-cone membership toolkit", "cutcone"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-n", opt.max_n, "Largest n accepted by exponential-size operations");
  app.add_option("--seed", opt.seed, "Seed for randomized generators");
  app.add_option("-o,--output", opt.output, "Write the main output to this file");
  app.add_option("--metric", opt.metric, "Metric file (stdin when absent); d0 or d1 for family gen");
  app.add_option("--graph", opt.graph, "Graph file");
  app.add_option("--cert", opt.cert, "Cut certificate file");
  app.add_option("--emit-certificate", opt.emit_certificate, "Write the membership certificate here");
  app.add_option("--emit-farkas", opt.emit_farkas, "Write the Farkas vector here");
  app.add_option("--n", opt.n, "Vertex count");
  app.add_option("--a", opt.a, "Star radii (comma or space separated rationals)")->delimiter(',');
  app.add_option("--density", opt.density, "Extra edge probability for family gen random");

  using Action = std::function<int(const cli_detail::Runner&)>;
  std::vector<std::pair<CLI::App*, Action>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Action fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    leaves.emplace_back(sub, std::move(fn));
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  CLI::App* validate = leaf(&app, "validate", "Check metric axioms", [](const auto& r) { return r.validate(); });
  validate->add_flag("--strict", opt.strict, "Also reject zero distances");
  leaf(&app, "stats", "Trace and star traces", [](const auto& r) { return r.stats(); });

  CLI::App* paircut = group("paircut", "Pair-cut cone membership (closed form)");
  leaf(paircut, "exact", "Pair-cut cone membership by exact LP",
       [](const auto& r) { return r.paircut_lp(r.load_metric()); });

  CLI::App* cutcone = group("cutcone", "Cut cone membership");
  cutcone->require_subcommand(1);
  leaf(cutcone, "sufficient", "Sufficient condition with candidate certificate",
       [](const auto& r) { return r.cutcone_sufficient(); });
  leaf(cutcone, "exact", "Exact LP over all cuts", [](const auto& r) { return r.cutcone_exact(); });

  CLI::App* kernel = group("kernel", "Kernel of the full cut-matrix");
  kernel->require_subcommand(1);
  leaf(kernel, "basis", "Labeled basis vectors", [](const auto& r) { return r.kernel(); });

  leaf(&app, "verify-cert", "Verify a cut decomposition against a metric", [](const auto& r) { return r.verify_cert(); });

  CLI::App* embed = group("embed", "Point embeddings");
  embed->require_subcommand(1);
  leaf(embed, "l1", "l1 embedding from a cut certificate", [](const auto& r) { return r.embed_l1(); });
  leaf(embed, "linf-sig", "l-infinity points whose SIG is the graph", [](const auto& r) { return r.embed_linf(); });

  CLI::App* sig = group("sig", "Sphere-of-influence graphs");
  sig->require_subcommand(1);
  leaf(sig, "build", "SIG of a metric", [](const auto& r) { return r.sig_build(); });
  leaf(sig, "verify", "Check a metric against a target graph", [](const auto& r) { return r.sig_verify(); });
  leaf(sig, "star-obstruction", "Forced star SIG-metric against PCUT", [](const auto& r) { return r.star_obstruction(); });

  CLI::App* fam = group("family", "Graph families");
  fam->require_subcommand(1);
  CLI::App* gen = leaf(fam, "gen", "Generate a family member (K C Q B L CP S R random)",
                       [](const auto& r) { return r.family_gen(); });
  gen->add_option("name", opt.family_name, "Family id")->required();
  gen->add_option("params", opt.family_params, "Integer parameters");

  CLI::App* matrix = group("matrix", "Matrix dumps");
  matrix->require_subcommand(1);
  CLI::App* dump = leaf(matrix, "dump", "Print a matrix as exact rationals", [](const auto& r) { return r.matrix_dump(); });
  dump->add_option("--kind", opt.kind,
                   "square | incidence | full | right-inverse | inverse | column-space | projector-top | "
                   "projector-middle | projector-minus-two")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  // The deepest parsed subcommand decides; bare `paircut` uses the closed form.
  Action action = [](const cli_detail::Runner& r) { return r.paircut(); };
  for (const auto& [sub, fn] : leaves)
    if (sub->parsed()) action = fn;

  std::ostringstream body;
  int code;
  try {
    cli_detail::Runner runner(opt, in, body);
    code = action(runner);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  if (opt.output.empty()) {
    out << body.str();
  } else {
    std::ofstream file(opt.output);
    if (!file) {
      err << "error: cannot write '" << opt.output << "'\n";
      return exit_code::usage;
    }
    file << body.str();
  }
  return code;
}

}  // namespace cutcone
