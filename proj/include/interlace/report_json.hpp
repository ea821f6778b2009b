#pragma once

// The only header that touches the JSON library; everything else stays
// serialization-free. Key order is fixed here (ordered_json preserves
// insertion order) so identical inputs always produce identical bytes.

#include <json.hpp>

#include "interlace/audit.hpp"
#include "interlace/eigen.hpp"
#include "interlace/graph.hpp"
#include "interlace/interlacing.hpp"
#include "interlace/partition.hpp"
#include "interlace/quotient.hpp"
#include "interlace/search.hpp"

namespace interlace {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Partition& p) {
  ordered_json blocks = ordered_json::array();
  for (const auto& block : p.blocks()) {
    ordered_json b = ordered_json::array();
    for (std::size_t v : block) b.push_back(v + 1);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

inline ordered_json to_json(const DenseMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ordered_json to_json(const Spectrum& s) {
  ordered_json j;
  j["values"] = s.values;
  return j;
}

inline ordered_json to_json(const QuotientMatrix& q) {
  ordered_json j;
  j["matrix"] = to_json(q.matrix);
  j["row_partition"] = to_json(q.product.rows);
  j["col_partition"] = to_json(q.product.cols);
  j["source_rows"] = q.source_rows;
  j["source_cols"] = q.source_cols;
  return j;
}

inline ordered_json to_json(const BoundReport& r) {
  ordered_json j;
  j["inequality"] = to_string(r.id);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["gap"] = r.gap;
  j["equality"] = r.equality;
  j["tolerance"] = r.tolerance;
  j["lhs_terms"] = r.lhs_terms;
  j["rhs_terms"] = r.rhs_terms;
  j["partition"] = to_json(r.partition);
  return j;
}

inline ordered_json to_json(const InterlacingReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["holds"] = r.holds;
  j["tight_r_values"] = r.tight_r_values;
  j["p_max"] = r.p_max;
  j["q_max"] = r.q_max;
  j["exact"] = r.exact;
  j["degenerate"] = r.degenerate;
  j["tolerance"] = r.tolerance;
  return j;
}

inline ordered_json to_json(const SearchResult& r, BoundId id) {
  ordered_json j;
  j["inequality"] = to_string(id);
  j["objective"] = r.objective;
  j["partition"] = to_json(r.best_partition);
  j["candidates_examined"] = r.candidates_examined;
  j["exhaustive"] = r.exhaustive;
  return j;
}

namespace detail {

inline ordered_json witness_json(const AuditVerdict& v) {
  ordered_json w = ordered_json::object();
  if (v.classification) w["classification"] = to_string(*v.classification);
  if (!v.equality_conclusions.empty()) {
    ordered_json items = ordered_json::array();
    for (const auto& item : v.equality_conclusions) {
      ordered_json e = to_json(item.bound);
      e["requirement"] = item.requirement;
      e["conclusion_required"] = item.conclusion_required;
      e["conclusion_holds"] = item.conclusion_holds;
      items.push_back(std::move(e));
    }
    w["bounds"] = std::move(items);
  }
  if (!v.equality_claims.empty()) {
    ordered_json items = ordered_json::array();
    for (const auto& claim : v.equality_claims) {
      ordered_json c;
      c["inequality"] = to_string(claim.id);
      c["evaluated"] = claim.evaluated;
      if (claim.evaluated) {
        c["holds"] = claim.holds;
        c["gap"] = claim.gap;
      }
      if (!claim.note.empty()) c["note"] = claim.note;
      items.push_back(std::move(c));
    }
    w["equality_claims"] = std::move(items);
  }
  if (v.spectrum_match) {
    ordered_json s;
    s["full"] = v.spectrum_match->full;
    s["quotient_padded"] = v.spectrum_match->quotient_padded;
    s["max_abs_diff"] = v.spectrum_match->max_abs_diff;
    s["match"] = v.spectrum_match->match;
    w["spectrum_match"] = std::move(s);
  }
  if (v.trace_square) {
    ordered_json t;
    t["full"] = v.trace_square->full;
    t["quotient"] = v.trace_square->quotient;
    t["exact"] = v.trace_square->exact;
    t["holds"] = v.trace_square->holds;
    w["trace_square"] = std::move(t);
  }
  if (v.lift_is_positive) w["lift_is_positive"] = *v.lift_is_positive;
  if (v.lift_residual) w["lift_residual"] = *v.lift_residual;
  if (v.diagonal_blocks_regular) w["diagonal_blocks_regular"] = *v.diagonal_blocks_regular;
  if (v.first_irregular_diagonal_block)
    w["first_irregular_diagonal_block"] = *v.first_irregular_diagonal_block + 1;
  if (!v.notes.empty()) w["notes"] = v.notes;
  return w;
}

}  // namespace detail

// Verdict shape: "theorem", "hypotheses", "conclusion", "lhs", "rhs", "gap",
// "equality", "witness", then "tolerance". lhs/rhs carry the audited mu_1 or
// sigma_1 pair when the theorem compares one; null otherwise.
inline ordered_json to_json(const AuditVerdict& v) {
  ordered_json j;
  j["theorem"] = v.theorem;

  ordered_json hyp;
  hyp["hold"] = v.hypotheses_hold;
  ordered_json checks = ordered_json::array();
  for (const auto& h : v.hypotheses) {
    ordered_json c;
    c["name"] = h.name;
    c["holds"] = h.holds;
    if (!h.detail.empty()) c["detail"] = h.detail;
    checks.push_back(std::move(c));
  }
  hyp["checks"] = std::move(checks);
  j["hypotheses"] = std::move(hyp);

  ordered_json con;
  con["evaluated"] = v.conclusion_evaluated;
  con["holds"] = v.conclusion_holds;
  j["conclusion"] = std::move(con);

  const bool mu = v.mu1_full.has_value();
  const bool sigma = v.sigma1_full.has_value();
  if (mu || sigma) {
    const double lhs = mu ? *v.mu1_full : *v.sigma1_full;
    const double rhs = mu ? *v.mu1_quotient : *v.sigma1_quotient;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["gap"] = lhs - rhs;
  } else {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["gap"] = nullptr;
  }
  if (v.equality_attained)
    j["equality"] = *v.equality_attained;
  else
    j["equality"] = nullptr;

  j["witness"] = detail::witness_json(v);
  j["tolerance"] = v.tolerance;
  return j;
}

}  // namespace interlace
