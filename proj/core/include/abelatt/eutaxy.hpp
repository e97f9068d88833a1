#pragma once

#include <string>
#include <vector>

#include "abelatt/lattice.hpp"

namespace abelatt {

/// Sum of m(a,b) m(a,b)* over Omega(A), m(a,b) = (a-1)(b-1). Computed both
/// by direct summation and by the closed form
///   4|A|(|A|-4)(1-e_A) + 4|A|(1-e_S) + 8|T|(1-e_T),
/// asserted equal (ConsistencyError if not, which would be a library bug).
GroupRingElement sum_mm_star(const AbelianGroup& A);

/// Sum of m(a,b) m(a,b)* over B x (A\B) u (A\B) x B for a proper nontrivial
/// subgroup B; equals 8|B|^2(|A:B|-1)(1-e_B), verified exactly.
GroupRingElement cross_sum(const Subgroup& B);

/// True iff |A| is odd or A is elementary abelian. For |A| >= 4 the closed
/// form is cross-checked against the definitional test (sum_mm_star is a
/// positive scalar multiple of 1 - e_A).
bool classify_strong(const AbelianGroup& A);

enum class CertificateBranch { odd_strong, elementary2_strong, mixed, small_group };

std::string to_string(CertificateBranch b);

/// An exact eutaxy certificate: positive gamma coefficients expanding
/// 1 - e_A over the m(a,b) m(a,b)*, and the induced positive lambda per
/// minimal vector. For |A| in {2, 3} there is no Omega parametrization and
/// the certificate carries lambda only (branch small_group).
struct EutaxyCertificate {
  AbelianGroup group;
  CertificateBranch branch;
  /// Parallel arrays: gamma[i] belongs to pairs[i]; pairs are a subset of
  /// omega_pairs(group) in that order (all of them for the branches built
  /// here).
  std::vector<OmegaPair> pairs;
  std::vector<Rat> gamma;
  /// lambda[i] belongs to the i-th entry of certificate_vectors(group).
  std::vector<Rat> lambda;
  bool verified = false;
};

/// The minimal vectors a certificate indexes: the norm-2 set for |A| >= 4,
/// the vectors of the true minimum for C2 and C3. Sorted canonically.
std::vector<GroupRingElement> certificate_vectors(const AbelianGroup& A);

/// Builds the certificate: gamma constant on the strong branches, the
/// cross-sum-corrected values on the mixed branch, fixed small-group lambdas
/// for C2 and C3. Throws NotEutacticError for C4. The result is verified
/// before being returned.
EutaxyCertificate build_certificate(const AbelianGroup& A);

struct CertificateCheck {
  bool ok = false;
  /// Empty when ok; otherwise one of "gamma-identity", "lambda-positivity",
  /// "projection-identity" (first failure in that order), or
  /// "malformed-certificate" for structural problems.
  std::string failed_check;
  std::string detail;
};

/// The three exact checks:
///   (1) sum gamma m(a,b) m(a,b)* = 1 - e_A   (branches with gamma)
///   (2) every lambda > 0
///   (3) sum lambda_s s s^T = I - J/|A|
CertificateCheck verify_certificate_detail(const EutaxyCertificate& cert);
bool verify_certificate(const EutaxyCertificate& cert);

struct PerfectionReport {
  AbelianGroup group;
  std::size_t rank = 0;    // rank of span{s s^T : s minimal} over Q
  std::size_t target = 0;  // (|A|-1)|A|/2
  bool is_perfect = false;
};

/// Exact rank of the vectorized outer products of the minimal vectors
/// (upper-triangle flattening, dimension |A|(|A|+1)/2), compared with the
/// dimension of the symmetric operators on the span hyperplane.
PerfectionReport perfection_rank(const AbelianGroup& A);

struct ExtremalityReport {
  bool eutactic = false;
  std::string eutaxy_failure;  // set when not eutactic
  PerfectionReport perfection;
  bool extreme = false;
};

/// Voronoi: extreme iff eutactic and perfect, both certified exactly.
ExtremalityReport extremality(const AbelianGroup& A);

/// The matrix of multiplication by 1 - e_A: identity minus J/n.
RatMatrix augmentation_projector(std::size_t n);

}  // namespace abelatt
