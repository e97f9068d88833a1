#pragma once

#include <cstdint>
#include <string>

#include "abelatt/eutaxy.hpp"
#include "abelatt/group.hpp"
#include "abelatt/min_basis.hpp"

namespace abelatt {

/// The full verdict sheet for one group. Every field is reproducible from
/// the module operations; nothing here depends on timing or environment.
struct AnalysisReport {
  std::string group_spec;
  std::size_t order = 0;
  std::int64_t kissing = 0;       // minimal-vector count
  Int min_norm_sq;                // squared minimum distance of L(A)
  bool strongly_eutactic = false;
  bool eutactic = false;
  std::size_t perfection_rank = 0;
  std::size_t perfection_target = 0;
  bool perfect = false;
  bool extreme = false;
  bool has_min_basis = false;

  bool operator==(const AnalysisReport&) const = default;
};

/// Runs construction, enumeration, certification and perfection for A.
/// Throws std::domain_error for the trivial group.
AnalysisReport analyze(const AbelianGroup& A);

struct SweepOptions {
  std::size_t max_order = 16;  // hard cap 32
  /// Also run every ordering of each invariant-factor list and require the
  /// verdicts to agree across orderings.
  bool all_presentations = false;
};

/// One CSV row per abelian isomorphism type (canonical invariant-factor
/// presentation, largest factor first) of order 2..max_order, with the
/// formula-vs-oracle cross-checks re-run on every row. Deterministic output.
std::string sweep_csv(const SweepOptions& options);

std::string csv_header();
std::string csv_row(const AnalysisReport& report);

}  // namespace abelatt
