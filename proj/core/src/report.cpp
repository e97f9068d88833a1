#include "abelatt/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "abelatt/errors.hpp"

namespace abelatt {

AnalysisReport analyze(const AbelianGroup& A) {
  if (A.is_trivial()) {
    throw std::domain_error("analyze: the trivial group has an empty lattice");
  }
  AnalysisReport r;
  r.group_spec = A.spec_string();
  r.order = A.order();
  r.kissing = A.order() >= 4
                  ? kissing_count(A)
                  : static_cast<std::int64_t>(min_vectors_any(A, 2).size());
  r.min_norm_sq = min_distance(A, 2);
  r.strongly_eutactic = classify_strong(A);
  const ExtremalityReport ext = extremality(A);
  r.eutactic = ext.eutactic;
  r.perfection_rank = ext.perfection.rank;
  r.perfection_target = ext.perfection.target;
  r.perfect = ext.perfection.is_perfect;
  r.extreme = ext.extreme;
  try {
    general_min_basis(A);
    r.has_min_basis = true;
  } catch (const NoMinimalBasisError&) {
    r.has_min_basis = false;
  }
  return r;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

// The per-row formula-vs-oracle cross checks the sweep contract requires.
void cross_check_row(const AbelianGroup& A, const AnalysisReport& r) {
  if (A.order() >= 4) {
    const auto enumerated = minimal_vectors(A).size();
    const auto quadruples = norm2_vectors_by_quadruples(A).size();
    if (static_cast<std::int64_t>(enumerated) != r.kissing ||
        static_cast<std::int64_t>(quadruples) != r.kissing) {
      throw ConsistencyError("sweep: kissing closed form disagrees with enumeration for " +
                             A.spec_string());
    }
  }
  const LatticeDescription L = canonical_basis(A, 2);
  Int bound = L.gram(0, 0);
  for (std::size_t i = 1; i < L.rank(); ++i) bound = std::min(bound, L.gram(i, i));
  Rat best(bound);
  for (const auto& v : short_vector_oracle(L, bound)) best = std::min(best, norm_sq(v));
  if (best != Rat(r.min_norm_sq)) {
    throw ConsistencyError("sweep: short-vector oracle disagrees with the minimum for " +
                           A.spec_string());
  }
}

}  // namespace

std::string csv_header() {
  return "group,order,kissing,min_norm_sq,strongly_eutactic,eutactic,"
         "perfection_rank,perfection_target,perfect,extreme,has_min_basis";
}

std::string csv_row(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.group_spec << ',' << r.order << ',' << r.kissing << ','
      << r.min_norm_sq.get_str() << ',' << bool_str(r.strongly_eutactic) << ','
      << bool_str(r.eutactic) << ',' << r.perfection_rank << ','
      << r.perfection_target << ',' << bool_str(r.perfect) << ','
      << bool_str(r.extreme) << ',' << bool_str(r.has_min_basis);
  return out.str();
}

std::string sweep_csv(const SweepOptions& options) {
  if (options.max_order < 2 || options.max_order > 32) {
    throw std::invalid_argument("sweep: max_order must be between 2 and 32");
  }
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const auto& factors : abelian_group_types_up_to(options.max_order)) {
    const AbelianGroup canonical(factors);
    const AnalysisReport report = analyze(canonical);
    cross_check_row(canonical, report);
    out << csv_row(report) << '\n';
    if (options.all_presentations) {
      std::vector<int> perm = factors;
      std::sort(perm.begin(), perm.end());
      do {
        if (perm == factors) continue;
        const AbelianGroup presentation(perm);
        const AnalysisReport other = analyze(presentation);
        cross_check_row(presentation, other);
        // Verdicts are isomorphism invariants; intermediate bases are not.
        AnalysisReport relabeled = other;
        relabeled.group_spec = report.group_spec;
        if (relabeled != report) {
          throw ConsistencyError("sweep: verdicts differ across factor orderings of " +
                                 canonical.spec_string());
        }
        out << csv_row(other) << '\n';
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out.str();
}

}  // namespace abelatt
