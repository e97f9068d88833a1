#pragma once

#include <string>
#include <vector>

#include "abelatt/lattice.hpp"

namespace abelatt {

enum class BasisConstruction { general, sha, single_orbit, small_group };

/// How the first long vector (a-1)^2 of each cyclic block is replaced:
/// by (a-1)(a-b) (cross_difference) or by (a^{-1}-1)(a^2-1) (inverse_square,
/// falling back to cross_difference for blocks of order < 4).
enum class ReplacementStrategy { cross_difference, inverse_square };

std::string to_string(BasisConstruction c);

/// A lattice basis of L(A) made of minimal vectors. Every construction
/// verifies its own output (norms, membership, unimodularity against the
/// canonical basis) before returning.
struct MinimalBasis {
  LatticeDescription lattice;  // the canonical reference description
  std::vector<GroupRingElement> vectors;
  BasisConstruction construction;
  std::vector<Int> norms_sq;
  /// True only for single_orbit with a forced b in {a, a^{-1}} (orders 4, 6):
  /// the output is a valid basis but not one of minimal vectors.
  bool not_minimal = false;
};

/// Basis of minimal vectors via replacement of the two long vectors of each
/// cyclic block. Requires |A| > 4 or A = C2xC2; routes |A| in {2, 3} to the
/// small-group construction; throws NoMinimalBasisError for C4.
MinimalBasis general_min_basis(
    const AbelianGroup& A,
    ReplacementStrategy strategy = ReplacementStrategy::cross_difference);

/// {(a-1)(a^2-1), ..., (a-1)(a^{n-2}-1)} u {(a^{-1}-1)(a^2-1),
/// (a^{-1}-1)(a^3-1)} for cyclic A of order n >= 5.
MinimalBasis sha_basis(const AbelianGroup& A);

/// {(a-1)(b-1) a^k : k = 0..n-2} for generators a, b of a cyclic A. All
/// norms are 4 when b is not a^{+-1} (possible iff phi(n) > 2).
MinimalBasis single_orbit_basis(const AbelianGroup& A, const GroupElement& a,
                                const GroupElement& b);

/// Expresses each candidate in the reference basis (exact solve; integer
/// coordinates must exist) and returns true iff the coordinate matrix has
/// determinant +-1. Throws if a candidate fails membership or lies outside
/// the lattice.
bool verify_unimodular(const std::vector<GroupRingElement>& candidate,
                       const LatticeDescription& reference);

}  // namespace abelatt
