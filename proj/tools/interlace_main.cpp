// Command-line front end. One verb per library capability:
//   spectrum, quotient, interlace, bounds, audit, refine, search, join-mu1.
// Exit codes: 0 success; 1 a mathematically guaranteed conclusion failed
// (bound violated, interlacing failed, audit conclusion false under satisfied
// hypotheses); 2 input or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "interlace/interlace.hpp"
#include "interlace/report_json.hpp"

namespace {

using namespace interlace;

constexpr int kExitOk = 0;
constexpr int kExitConclusionFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string graph_path;
  std::string matrix_path;
  std::string partition_path;
  std::string col_partition_path;
  bool use_laplacian = false;
  double tol = 1e-8;
  std::string format = "text";
  bool cap_override = false;
  std::string out_path;
  std::string theorem;
  std::string bound;
  std::size_t k = 0;
  // join-mu1 parameters
  std::size_t r1 = 0, n1 = 0, r2 = 0, n2 = 0;
};

std::string bool_word(bool b) { return b ? "true" : "false"; }

// Matrix to operate on: either a file, or a graph's adjacency/Laplacian.
DenseMatrix resolve_matrix(const RunConfig& cfg, std::optional<Graph>* graph_out = nullptr) {
  if (!cfg.matrix_path.empty() && !cfg.graph_path.empty())
    throw ParseError(0, "give either --graph or --matrix, not both");
  if (!cfg.matrix_path.empty()) {
    if (cfg.use_laplacian) throw ParseError(0, "--laplacian requires --graph");
    return load_matrix(cfg.matrix_path);
  }
  if (cfg.graph_path.empty()) throw ParseError(0, "need --graph or --matrix");
  Graph g = load_graph(cfg.graph_path);
  DenseMatrix m = cfg.use_laplacian ? laplacian_matrix(g) : adjacency_matrix(g);
  if (graph_out) *graph_out = std::move(g);
  return m;
}

Graph require_graph(const RunConfig& cfg) {
  if (cfg.graph_path.empty()) throw ParseError(0, "this subcommand needs --graph");
  return load_graph(cfg.graph_path);
}

Partition require_partition(const RunConfig& cfg, std::size_t ground) {
  if (cfg.partition_path.empty()) throw ParseError(0, "this subcommand needs --partition");
  return load_partition(cfg.partition_path, ground);
}

TolerancePolicy make_policy(const RunConfig& cfg) {
  TolerancePolicy policy;
  policy.eq_tol = cfg.tol;
  policy.validate();
  return policy;
}

void emit(const RunConfig& cfg, const std::string& report) {
  if (cfg.out_path.empty()) {
    std::cout << report;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw ParseError(0, "cannot open output file: " + cfg.out_path);
  out << report;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

// --- text renderers --------------------------------------------------------

std::string render_bound_text(const BoundReport& r) {
  std::string line = std::string(to_string(r.id)) + " lhs=" + format_double(r.lhs) +
                     " rhs=" + format_double(r.rhs) + " gap=" + format_double(r.gap) +
                     " equality=" + bool_word(r.equality) +
                     " tolerance=" + format_double(r.tolerance);
  return line + "\n";
}

std::string render_interlacing_text(const InterlacingReport& r) {
  std::string out;
  out += "n: " + std::to_string(r.n) + "\n";
  out += "k: " + std::to_string(r.k) + "\n";
  out += "holds: " + bool_word(r.holds) + "\n";
  out += "tight_r_values:";
  for (std::size_t v : r.tight_r_values) out += " " + std::to_string(v);
  out += "\n";
  out += "p_max: " + std::to_string(r.p_max) + "\n";
  out += "q_max: " + std::to_string(r.q_max) + "\n";
  out += "exact: " + bool_word(r.exact) + "\n";
  out += "degenerate: " + bool_word(r.degenerate) + "\n";
  out += "tolerance: " + format_double(r.tolerance) + "\n";
  return out;
}

std::string render_verdict_text(const AuditVerdict& v) {
  std::string out;
  out += "theorem: " + v.theorem + "\n";
  out += "hypotheses_hold: " + bool_word(v.hypotheses_hold) + "\n";
  for (const auto& h : v.hypotheses) {
    out += "  " + h.name + ": " + bool_word(h.holds);
    if (!h.detail.empty()) out += " (" + h.detail + ")";
    out += "\n";
  }
  out += "conclusion_evaluated: " + bool_word(v.conclusion_evaluated) + "\n";
  out += "conclusion_holds: " + bool_word(v.conclusion_holds) + "\n";
  if (v.mu1_full) {
    out += "mu1_full: " + format_double(*v.mu1_full) + "\n";
    out += "mu1_quotient: " + format_double(*v.mu1_quotient) + "\n";
  }
  if (v.sigma1_full) {
    out += "sigma1_full: " + format_double(*v.sigma1_full) + "\n";
    out += "sigma1_quotient: " + format_double(*v.sigma1_quotient) + "\n";
  }
  if (v.equality_attained) out += "equality: " + bool_word(*v.equality_attained) + "\n";
  if (v.classification) out += std::string("classification: ") + to_string(*v.classification) + "\n";
  if (v.diagonal_blocks_regular)
    out += "diagonal_blocks_regular: " + bool_word(*v.diagonal_blocks_regular) + "\n";
  if (v.first_irregular_diagonal_block)
    out += "first_irregular_diagonal_block: " +
           std::to_string(*v.first_irregular_diagonal_block + 1) + "\n";
  if (v.lift_is_positive) out += "lift_is_positive: " + bool_word(*v.lift_is_positive) + "\n";
  if (v.lift_residual) out += "lift_residual: " + format_double(*v.lift_residual) + "\n";
  for (const auto& item : v.equality_conclusions) {
    out += "  " + render_bound_text(item.bound);
    out += std::string("    requirement: ") + item.requirement +
           "; required: " + bool_word(item.conclusion_required) +
           "; holds: " + bool_word(item.conclusion_holds) + "\n";
  }
  for (const auto& claim : v.equality_claims) {
    out += std::string("  claim ") + to_string(claim.id) + ": ";
    if (claim.evaluated)
      out += std::string(claim.holds ? "equality" : "strict") + " gap=" + format_double(claim.gap);
    else
      out += claim.note;
    out += "\n";
  }
  if (v.spectrum_match) {
    out += "spectrum_match: " + bool_word(v.spectrum_match->match) +
           " max_abs_diff=" + format_double(v.spectrum_match->max_abs_diff) + "\n";
  }
  if (v.trace_square) {
    out += "trace_square: " + bool_word(v.trace_square->holds) + " full=" +
           format_double(v.trace_square->full) +
           " quotient=" + format_double(v.trace_square->quotient) +
           " exact=" + bool_word(v.trace_square->exact) + "\n";
  }
  for (const auto& note : v.notes) out += "note: " + note + "\n";
  out += "tolerance: " + format_double(v.tolerance) + "\n";
  return out;
}

// --- subcommands ------------------------------------------------------------

int run_spectrum(const RunConfig& cfg) {
  const TolerancePolicy policy = make_policy(cfg);
  const DenseMatrix m = resolve_matrix(cfg);
  const Spectrum s = symmetric_eigen(m, policy);
  if (cfg.format == "json") {
    ordered_json j = to_json(s);
    j["tolerance"] = policy.eq_tol;
    emit(cfg, dump_json(j));
  } else {
    std::string out = "values:";
    for (double v : s.values) out += " " + format_double(v);
    out += "\ntolerance: " + format_double(policy.eq_tol) + "\n";
    emit(cfg, out);
  }
  return kExitOk;
}

int run_quotient(const RunConfig& cfg) {
  make_policy(cfg);
  const DenseMatrix m = resolve_matrix(cfg);
  const Partition rows = require_partition(cfg, m.rows());
  const Partition cols = cfg.col_partition_path.empty()
                             ? rows
                             : load_partition(cfg.col_partition_path, m.cols());
  if (cfg.col_partition_path.empty() && m.rows() != m.cols())
    throw ParseError(0, "rectangular matrix needs --col-partition");
  const QuotientMatrix q = quotient_matrix(m, ProductPartition{rows, cols});
  if (cfg.format == "json")
    emit(cfg, dump_json(to_json(q)));
  else
    emit(cfg, format_matrix(q.matrix));  // valid matrix-file format
  return kExitOk;
}

int run_interlace(const RunConfig& cfg) {
  const TolerancePolicy policy = make_policy(cfg);
  const DenseMatrix m = resolve_matrix(cfg);
  if (!m.square()) throw ParseError(0, "interlace needs a square matrix");
  const Partition p = require_partition(cfg, m.rows());
  const Spectrum alpha = symmetric_eigen(m, policy);
  const Spectrum beta = symmetric_eigen(quotient_matrix(m, p).matrix, policy);
  const InterlacingReport rep = analyze_interlacing(alpha.values, beta.values, policy);
  if (cfg.format == "json")
    emit(cfg, dump_json(to_json(rep)));
  else
    emit(cfg, render_interlacing_text(rep));
  return rep.holds ? kExitOk : kExitConclusionFailed;
}

int run_bounds(const RunConfig& cfg) {
  const TolerancePolicy policy = make_policy(cfg);
  const Graph g = require_graph(cfg);
  const Partition p = require_partition(cfg, g.order());
  const std::size_t n = g.order();
  const std::size_t k = p.block_count();

  std::vector<BoundId> ids;
  if (!cfg.bound.empty()) {
    const auto id = bound_id_from_string(cfg.bound);
    if (!id) throw ParseError(0, "unknown bound id: " + cfg.bound);
    ids.push_back(*id);
  } else {
    for (BoundId id : kAllBounds) ids.push_back(id);
  }

  const Spectrum sa = symmetric_eigen(adjacency_matrix(g), policy);
  const Spectrum sl = symmetric_eigen(laplacian_matrix(g), policy);

  bool violated = false;
  ordered_json jout = ordered_json::array();
  std::string tout;
  for (BoundId id : ids) {
    const bool valid = id == BoundId::ineq4 ? (1 < k && k <= n) : (1 < k && k < n);
    if (!valid) {
      if (!cfg.bound.empty())
        throw ParseError(0, std::string("k out of range for ") + to_string(id));
      if (cfg.format == "json") {
        ordered_json j;
        j["inequality"] = to_string(id);
        j["skipped"] = "k out of range";
        jout.push_back(std::move(j));
      } else {
        tout += std::string(to_string(id)) + " skipped (k out of range)\n";
      }
      continue;
    }
    const BoundReport r = evaluate_bound(g, p, id, sa.values, sl.values, policy);
    violated = violated || r.gap < -r.tolerance;
    if (cfg.format == "json")
      jout.push_back(to_json(r));
    else
      tout += render_bound_text(r);
  }
  emit(cfg, cfg.format == "json" ? dump_json(jout) : tout);
  return violated ? kExitConclusionFailed : kExitOk;
}

int run_audit(const RunConfig& cfg) {
  const TolerancePolicy policy = make_policy(cfg);
  AuditVerdict v;
  if (cfg.theorem == "1" || cfg.theorem == "2" || cfg.theorem == "c1") {
    const Graph g = require_graph(cfg);
    const Partition p = require_partition(cfg, g.order());
    v = cfg.theorem == "1"   ? audit_theorem1(g, p, policy)
        : cfg.theorem == "2" ? audit_theorem2(g, p, policy)
                             : audit_corollary1(g, p, policy);
  } else if (cfg.theorem == "3" || cfg.theorem == "5") {
    const DenseMatrix m = resolve_matrix(cfg);
    const Partition p = require_partition(cfg, m.rows());
    v = cfg.theorem == "3" ? audit_theorem3(m, p, policy) : audit_theorem5(m, p, policy);
  } else if (cfg.theorem == "4") {
    const DenseMatrix m = resolve_matrix(cfg);
    const Partition rows = require_partition(cfg, m.rows());
    const Partition cols = cfg.col_partition_path.empty()
                               ? rows
                               : load_partition(cfg.col_partition_path, m.cols());
    if (cfg.col_partition_path.empty() && m.rows() != m.cols())
      throw ParseError(0, "rectangular matrix needs --col-partition");
    v = audit_theorem4(m, rows, cols, policy);
  } else {
    throw ParseError(0, "unknown theorem id: " + cfg.theorem + " (expected 1,2,3,4,5,c1)");
  }
  // Audits default to the structured report; --format text opts out.
  if (cfg.format == "text")
    emit(cfg, render_verdict_text(v));
  else
    emit(cfg, dump_json(to_json(v)));
  const bool failed = v.hypotheses_hold && v.conclusion_evaluated && !v.conclusion_holds;
  return failed ? kExitConclusionFailed : kExitOk;
}

int run_refine(const RunConfig& cfg) {
  make_policy(cfg);
  const Graph g = require_graph(cfg);
  const Partition seed = cfg.partition_path.empty()
                             ? Partition::single_block(g.order())
                             : load_partition(cfg.partition_path, g.order());
  const Partition refined = equitable_refinement(g, seed);
  if (cfg.format == "json") {
    ordered_json j;
    j["partition"] = to_json(refined);
    j["block_count"] = refined.block_count();
    emit(cfg, dump_json(j));
  } else {
    emit(cfg, format_partition(refined));  // valid partition-file format
  }
  return kExitOk;
}

int run_search(const RunConfig& cfg) {
  const TolerancePolicy policy = make_policy(cfg);
  const Graph g = require_graph(cfg);
  if (cfg.bound.empty()) throw ParseError(0, "search needs --bound");
  const auto id = bound_id_from_string(cfg.bound);
  if (!id) throw ParseError(0, "unknown bound id: " + cfg.bound);
  if (cfg.k == 0) throw ParseError(0, "search needs --k");
  const SearchResult r = maximize_bound(g, cfg.k, *id, cfg.cap_override, policy);
  if (cfg.format == "json") {
    emit(cfg, dump_json(to_json(r, *id)));
  } else {
    std::string out;
    out += std::string("inequality: ") + to_string(*id) + "\n";
    out += "objective: " + format_double(r.objective) + "\n";
    out += "candidates_examined: " + std::to_string(r.candidates_examined) + "\n";
    out += "exhaustive: " + bool_word(r.exhaustive) + "\n";
    out += "partition:\n" + format_partition(r.best_partition);
    emit(cfg, out);
  }
  return kExitOk;
}

int run_join_mu1(const RunConfig& cfg) {
  make_policy(cfg);
  const double mu1 = finck_grohmann_mu1(cfg.r1, cfg.n1, cfg.r2, cfg.n2);
  if (cfg.format == "json") {
    ordered_json j;
    j["mu1"] = mu1;
    emit(cfg, dump_json(j));
  } else {
    emit(cfg, format_double(mu1) + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition quotients, eigenvalue interlacing, and spectral-bound audits"};
  app.require_subcommand(1);

  RunConfig cfg;
  const auto add_common = [&](CLI::App* sub, bool wants_partition) {
    sub->add_option("--tol", cfg.tol, "equality tolerance (eq_tol)");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out_path, "write the report to this file");
    if (wants_partition) sub->add_option("--partition", cfg.partition_path, "partition file");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of a matrix or graph");
  spectrum->add_option("--graph", cfg.graph_path, "edge-list file");
  spectrum->add_option("--matrix", cfg.matrix_path, "matrix file");
  spectrum->add_flag("--laplacian", cfg.use_laplacian, "use the Laplacian of --graph");
  add_common(spectrum, false);

  CLI::App* quotient = app.add_subcommand("quotient", "quotient matrix under a partition");
  quotient->add_option("--graph", cfg.graph_path, "edge-list file");
  quotient->add_option("--matrix", cfg.matrix_path, "matrix file");
  quotient->add_flag("--laplacian", cfg.use_laplacian, "use the Laplacian of --graph");
  quotient->add_option("--col-partition", cfg.col_partition_path,
                       "column partition (rectangular matrices)");
  add_common(quotient, true);

  CLI::App* inter = app.add_subcommand("interlace", "interlacing report: matrix vs quotient");
  inter->add_option("--graph", cfg.graph_path, "edge-list file");
  inter->add_option("--matrix", cfg.matrix_path, "matrix file");
  inter->add_flag("--laplacian", cfg.use_laplacian, "use the Laplacian of --graph");
  add_common(inter, true);

  CLI::App* bounds = app.add_subcommand("bounds", "evaluate the four partition bounds");
  bounds->add_option("--graph", cfg.graph_path, "edge-list file");
  bounds->add_option("--bound", cfg.bound, "one of ineq4, ineq3, lapl1, lapl2 (default: all)");
  add_common(bounds, true);

  CLI::App* audit = app.add_subcommand("audit", "audit a theorem on an instance");
  audit->add_option("--theorem", cfg.theorem, "one of 1, 2, 3, 4, 5, c1")->required();
  audit->add_option("--graph", cfg.graph_path, "edge-list file");
  audit->add_option("--matrix", cfg.matrix_path, "matrix file");
  audit->add_option("--col-partition", cfg.col_partition_path, "column partition (theorem 4)");
  add_common(audit, true);

  CLI::App* refine = app.add_subcommand("refine", "coarsest equitable refinement of a seed");
  refine->add_option("--graph", cfg.graph_path, "edge-list file");
  add_common(refine, true);

  CLI::App* search = app.add_subcommand("search", "best bound RHS over k-block partitions");
  search->add_option("--graph", cfg.graph_path, "edge-list file");
  search->add_option("--k", cfg.k, "number of blocks");
  search->add_option("--bound", cfg.bound, "one of ineq4, ineq3, lapl1, lapl2")->required();
  search->add_flag("--cap-override", cfg.cap_override, "allow enumeration beyond n = 10");
  add_common(search, false);

  CLI::App* joinmu = app.add_subcommand("join-mu1", "largest eigenvalue of a join of regular graphs");
  joinmu->add_option("--r1", cfg.r1, "degree of G1")->required();
  joinmu->add_option("--n1", cfg.n1, "order of G1")->required();
  joinmu->add_option("--r2", cfg.r2, "degree of G2")->required();
  joinmu->add_option("--n2", cfg.n2, "order of G2")->required();
  add_common(joinmu, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  // Pick the default format per subcommand: audits are structured verdicts,
  // so they default to JSON unless --format was given explicitly.
  if (audit->parsed() && audit->count("--format") == 0) cfg.format = "json";

  try {
    if (spectrum->parsed()) return run_spectrum(cfg);
    if (quotient->parsed()) return run_quotient(cfg);
    if (inter->parsed()) return run_interlace(cfg);
    if (bounds->parsed()) return run_bounds(cfg);
    if (audit->parsed()) return run_audit(cfg);
    if (refine->parsed()) return run_refine(cfg);
    if (search->parsed()) return run_search(cfg);
    if (joinmu->parsed()) return run_join_mu1(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
