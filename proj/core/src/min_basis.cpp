#include "abelatt/min_basis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "abelatt/errors.hpp"

namespace abelatt {

std::string to_string(BasisConstruction c) {
  switch (c) {
    case BasisConstruction::general: return "general";
    case BasisConstruction::sha: return "sha";
    case BasisConstruction::single_orbit: return "single_orbit";
    case BasisConstruction::small_group: return "small_group";
  }
  return "?";
}

bool verify_unimodular(const std::vector<GroupRingElement>& candidate,
                       const LatticeDescription& reference) {
  const std::size_t m = reference.rank();
  if (candidate.size() != m) {
    throw std::invalid_argument("verify_unimodular: candidate count must equal the rank");
  }
  const RatMatrix gram = to_rational(reference.gram);
  IntMatrix coords(m, m);
  for (std::size_t row = 0; row < m; ++row) {
    const GroupRingElement& v = candidate[row];
    if (reference.power == 2 && !membership(v)) {
      throw std::domain_error("verify_unimodular: candidate vector is not a lattice member");
    }
    std::vector<Rat> rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs[i] = inner(reference.basis[i], v);
    const auto x = solve_linear(gram, std::move(rhs));
    if (!x) throw ConsistencyError("verify_unimodular: singular Gram matrix");
    GroupRingElement recombined = GroupRingElement::zero(reference.group);
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_integral((*x)[i])) {
        throw std::domain_error(
            "verify_unimodular: candidate has non-integer coordinates in the reference basis");
      }
      coords(row, i) = (*x)[i].get_num();
      if ((*x)[i] != 0) recombined = recombined + reference.basis[i] * (*x)[i];
    }
    if (recombined != v) {
      throw std::domain_error("verify_unimodular: candidate lies outside the lattice span");
    }
  }
  const Int det = determinant(coords);
  return det == 1 || det == -1;
}

namespace {

std::vector<long> coeff_key(const GroupRingElement& x) {
  std::vector<long> key;
  key.reserve(x.group().order());
  for (const Rat& c : x.coeffs()) key.push_back(static_cast<long>(c.get_num().get_si()));
  return key;
}

MinimalBasis finalize(const AbelianGroup& A, LatticeDescription canonical,
                      std::vector<GroupRingElement> vectors,
                      BasisConstruction construction, bool allow_not_minimal) {
  const Int min_sq = min_distance(A, 2);
  MinimalBasis out;
  out.construction = construction;
  out.norms_sq.reserve(vectors.size());
  bool not_minimal = false;
  for (const auto& v : vectors) {
    const Rat nsq = norm_sq(v);
    out.norms_sq.push_back(nsq.get_num());
    if (nsq != Rat(min_sq)) not_minimal = true;
  }
  if (not_minimal && !allow_not_minimal) {
    throw ConsistencyError("min_basis: construction produced a non-minimal vector");
  }
  if (!verify_unimodular(vectors, canonical)) {
    throw ConsistencyError("min_basis: construction is not unimodular against the canonical basis");
  }
  out.not_minimal = not_minimal;
  out.lattice = std::move(canonical);
  out.vectors = std::move(vectors);
  return out;
}

}  // namespace

MinimalBasis general_min_basis(const AbelianGroup& A, ReplacementStrategy strategy) {
  if (A.is_trivial()) {
    throw std::domain_error("general_min_basis: the trivial group has an empty lattice");
  }
  LatticeDescription canonical = canonical_basis(A, 2);
  const std::size_t n = A.order();
  if (n <= 3) {
    // The canonical basis already consists of vectors of the true minimum
    // (norm^2 8 for C2, 6 for C3).
    std::vector<GroupRingElement> vectors = canonical.basis;
    return finalize(A, std::move(canonical), std::move(vectors),
                    BasisConstruction::small_group, false);
  }
  if (A.is_cyclic() && n == 4) {
    throw NoMinimalBasisError(
        "general_min_basis: L(C4) has only four vectors of norm^2 4 and no basis of minimal vectors");
  }

  std::vector<GroupRingElement> vectors = canonical.basis;
  // Positions of the in-factor elements (g_f-1)(g_f^k-1) in the canonical
  // order, and a lookup from coefficient key to position for the helper
  // elements (a-1)(b-1) used by the replacements.
  std::vector<std::vector<std::size_t>> pos(A.num_factors());
  std::map<std::vector<long>, std::size_t> available;
  {
    std::size_t cursor = 0;
    std::size_t accumulated = 1;  // |B| so far
    for (std::size_t f = 0; f < A.num_factors(); ++f) {
      const auto nf = static_cast<std::size_t>(A.invariant_factors()[f]);
      pos[f].assign(nf, 0);
      for (std::size_t k = 1; k < nf; ++k) pos[f][k] = cursor++;
      cursor += (accumulated - 1) * (nf - 1);  // cross terms M(B, C_f)
      accumulated *= nf;
    }
    if (cursor != vectors.size()) {
      throw ConsistencyError("general_min_basis: canonical layout mismatch");
    }
    for (std::size_t i = 0; i < vectors.size(); ++i) available[coeff_key(vectors[i])] = i;
  }

  // Candidates for the auxiliary element b, in preference order: a^3, the
  // remaining in-factor powers, then the other factors cyclically.
  auto candidates_for = [&](std::size_t f) {
    const auto nf = static_cast<std::size_t>(A.invariant_factors()[f]);
    const std::size_t a = A.factor_generator(f).index();
    std::vector<std::size_t> c;
    if (nf >= 4) c.push_back(A.pow_index(a, 3));
    for (std::size_t k = 2; k + 1 < nf; ++k) {
      if (k != 3) c.push_back(A.pow_index(a, static_cast<long>(k)));
    }
    for (std::size_t step = 1; step < A.num_factors(); ++step) {
      const std::size_t f2 = (f + step) % A.num_factors();
      const auto nf2 = static_cast<std::size_t>(A.invariant_factors()[f2]);
      const std::size_t a2 = A.factor_generator(f2).index();
      for (std::size_t k = 1; k < nf2; ++k) {
        c.push_back(A.pow_index(a2, static_cast<long>(k)));
      }
    }
    return c;
  };

  // Replaces vectors[slot] by vectors[slot] - (a-1)(b-1) for the first
  // admissible b, and returns that b.
  auto replace = [&](std::size_t f, std::size_t slot_k,
                     const std::vector<std::size_t>& forbidden_b) -> std::size_t {
    const std::size_t a = A.factor_generator(f).index();
    const std::size_t slot = pos[f][slot_k];
    for (std::size_t b : candidates_for(f)) {
      if (std::find(forbidden_b.begin(), forbidden_b.end(), b) != forbidden_b.end()) {
        continue;
      }
      const GroupRingElement helper = m_ab(A, a, b);
      const auto it = available.find(coeff_key(helper));
      if (it == available.end() || it->second == slot) continue;
      GroupRingElement replacement = vectors[slot] - helper;
      if (norm_sq(replacement) != 4) {
        throw ConsistencyError("general_min_basis: replacement is not a minimal vector");
      }
      available.erase(coeff_key(vectors[slot]));
      vectors[slot] = std::move(replacement);
      return b;
    }
    throw ConsistencyError("general_min_basis: no valid replacement element found");
  };

  for (std::size_t f = 0; f < A.num_factors(); ++f) {
    const auto nf = static_cast<std::size_t>(A.invariant_factors()[f]);
    const std::size_t a = A.factor_generator(f).index();
    const std::size_t a_inv = A.inverse_index(a);
    const std::size_t a_sq = A.mul_index(a, a);
    const std::size_t a_inv_sq = A.mul_index(a_inv, a_inv);
    const std::size_t one = A.identity_index();

    if (strategy == ReplacementStrategy::inverse_square && nf >= 4) {
      // (a-1)^2 = (a-1)(a^{-1}-1) - (a^{-1}-1)(a^2-1): swap the first long
      // vector for (a^{-1}-1)(a^2-1) using the other long vector.
      const std::size_t slot = pos[f][1];
      const std::size_t other = pos[f][nf - 1];
      GroupRingElement replacement = vectors[other] - vectors[slot];
      if (replacement != m_ab(A, a_inv, a_sq)) {
        throw ConsistencyError("general_min_basis: inverse-square identity failed");
      }
      if (norm_sq(replacement) != 4) {
        throw ConsistencyError("general_min_basis: replacement is not a minimal vector");
      }
      available.erase(coeff_key(vectors[slot]));
      vectors[slot] = std::move(replacement);
    } else {
      // (a-1)^2 -> (a-1)(a-b) = (a-1)^2 - (a-1)(b-1), b outside {1,a^{+-1},a^2}.
      const std::size_t b = replace(f, 1, {one, a, a_inv, a_sq});
      const GroupRingElement expected =
          GroupRingElement::aug_gen(A.element(a)) *
          (GroupRingElement::basis(A.element(a)) - GroupRingElement::basis(A.element(b)));
      if (vectors[pos[f][1]] != expected) {
        throw ConsistencyError("general_min_basis: factored form of the first replacement failed");
      }
    }

    if (nf >= 3) {
      // (a-1)(a^{-1}-1) -> (a^{-1}-1)(ab-1), b outside {1, a^{+-1}, a^{-2}}.
      const std::size_t b = replace(f, nf - 1, {one, a, a_inv, a_inv_sq});
      if (vectors[pos[f][nf - 1]] != m_ab(A, a_inv, A.mul_index(a, b))) {
        throw ConsistencyError("general_min_basis: factored form of the second replacement failed");
      }
    }
  }
  return finalize(A, std::move(canonical), std::move(vectors),
                  BasisConstruction::general, false);
}

MinimalBasis sha_basis(const AbelianGroup& A) {
  if (!A.is_cyclic() || A.order() < 5) {
    throw std::invalid_argument("sha_basis: requires a cyclic group of order >= 5");
  }
  const auto n = static_cast<long>(A.order());
  const GroupElement a = A.factor_generator(0);
  const GroupElement a_inv = a.inverse();
  std::vector<GroupRingElement> vectors;
  vectors.reserve(A.order() - 1);
  for (long k = 2; k <= n - 2; ++k) {
    vectors.push_back(GroupRingElement::aug_gen(a) *
                      GroupRingElement::aug_gen(a.pow(k)));
  }
  vectors.push_back(GroupRingElement::aug_gen(a_inv) *
                    GroupRingElement::aug_gen(a.pow(2)));
  vectors.push_back(GroupRingElement::aug_gen(a_inv) *
                    GroupRingElement::aug_gen(a.pow(3)));
  return finalize(A, canonical_basis(A, 2), std::move(vectors),
                  BasisConstruction::sha, false);
}

MinimalBasis single_orbit_basis(const AbelianGroup& A, const GroupElement& a,
                                const GroupElement& b) {
  if (!A.is_cyclic()) {
    throw std::invalid_argument("single_orbit_basis: requires a cyclic group");
  }
  if (a.group() != A || b.group() != A) {
    throw GroupMismatchError("single_orbit_basis: generators from a different group");
  }
  const std::size_t n = A.order();
  if (A.element_order(a.index()) != n || A.element_order(b.index()) != n) {
    throw std::invalid_argument("single_orbit_basis: both inputs must generate the group");
  }
  const GroupRingElement seed =
      GroupRingElement::aug_gen(a) * GroupRingElement::aug_gen(b);
  std::vector<GroupRingElement> vectors;
  vectors.reserve(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    vectors.push_back(seed.translate(A.pow_index(a.index(), static_cast<long>(k))));
  }
  return finalize(A, canonical_basis(A, 2), std::move(vectors),
                  BasisConstruction::single_orbit, true);
}

}  // namespace abelatt
