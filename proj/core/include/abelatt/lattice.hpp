#pragma once

#include <cstdint>
#include <vector>

#include "abelatt/exact_linalg.hpp"
#include "abelatt/group.hpp"
#include "abelatt/group_ring.hpp"
#include "abelatt/numeric.hpp"

namespace abelatt {

/// A power of the augmentation ideal of ZA as a lattice: an ordered integral
/// basis plus its exact Gram matrix. power = 1 is Delta A, power = 2 is the
/// lattice L(A) = Ker(psi) ∩ Delta A; both have rank |A| - 1.
struct LatticeDescription {
  AbelianGroup group;
  int power = 2;
  std::vector<GroupRingElement> basis;
  IntMatrix gram;

  std::size_t rank() const { return basis.size(); }
};

/// Canonical basis of (Delta A)^r.
///   r = 1: {a - 1 : a != 1}.
///   r = 2: cyclic blocks {(a_i-1)(a_i^k-1)} assembled factor by factor,
///          with cross terms (x-1)(c-1) appended in lexicographic order.
///   r >= 3: cyclic groups only, via (Delta C_n)^r = (a-1)^{r-1} Delta C_n.
/// Throws std::domain_error for the trivial group (empty lattice) and for
/// r >= 3 with a non-cyclic group.
LatticeDescription canonical_basis(const AbelianGroup& A, int r = 2);

/// Membership in L(A) = (Delta A)^2: augmentation zero and psi-image 1.
bool membership(const GroupRingElement& x);

/// The pairs (a, b) with a != 1 != b != a^{+-1}, in lexicographic order of
/// canonical indices. |Omega(A)| = (|A|-1)(|A|-3) + |T| - 1.
struct OmegaPair {
  std::size_t a, b;  // canonical element indices
  bool operator==(const OmegaPair& o) const { return a == o.a && b == o.b; }
};

std::vector<OmegaPair> omega_pairs(const AbelianGroup& A);

/// One parametrizing triple of a minimal vector: v = (a-1)(b-1) g.
struct VectorTriple {
  std::size_t a, b, g;
  bool operator==(const VectorTriple& o) const {
    return a == o.a && b == o.b && g == o.g;
  }
};

/// A norm^2 = 4 vector of L(A) together with its exactly four parametrizing
/// triples (lexicographically smallest first).
struct MinimalVector {
  GroupRingElement vector;
  std::vector<VectorTriple> triples;
};

/// All norm^2 = 4 vectors of L(A), sorted by canonical coefficient-vector
/// order. Empty for |A| < 4. Each vector carries exactly 4 triples.
std::vector<MinimalVector> minimal_vectors(const AbelianGroup& A);

/// Closed form (1/4)|A|[(|A|-1)(|A|-3) + t - 1]; equals
/// minimal_vectors(A).size() for |A| >= 4.
std::int64_t kissing_count(const AbelianGroup& A);

/// Squared minimum distance of (Delta A)^r. For r = 2 this is 8, 6, 4 for
/// |A| = 2, 3, >= 4; other powers are computed by exact enumeration.
Int min_distance(const AbelianGroup& A, int r = 2);

/// All nonzero lattice vectors with squared norm <= bound, by exhaustive
/// branch-and-bound over basis coefficients with exact rational Cholesky
/// bounds. Output sorted by canonical coefficient-vector order. This is the
/// independent oracle used to validate the Omega-parametrization; it shares
/// no code path with minimal_vectors().
std::vector<GroupRingElement> short_vector_oracle(const LatticeDescription& L,
                                                  const Int& bound);

/// Vectors achieving the squared minimum of (Delta A)^r (both signs).
std::vector<GroupRingElement> min_vectors_any(const AbelianGroup& A, int r = 2);

/// Second independent oracle for the norm-2 set of L(A): all x + y - r - s
/// with x, y, r, s distinct and xy = rs, deduplicated and sorted canonically.
std::vector<GroupRingElement> norm2_vectors_by_quadruples(const AbelianGroup& A);

/// Smith normal form diagonal of the coordinate matrix of the canonical
/// (Delta A)^2 basis in the {a - 1} basis of Delta A. The product of the
/// entries is the index [Delta A : (Delta A)^2] = |A|, and the nontrivial
/// entries are the invariant factors of A (Delta A / (Delta A)^2 ~ A).
std::vector<Int> delta_square_smith_diagonal(const AbelianGroup& A);
Int delta_square_index(const AbelianGroup& A);

/// Lexicographic order on coefficient vectors (canonical element order).
bool coeff_lex_less(const GroupRingElement& x, const GroupRingElement& y);

}  // namespace abelatt
