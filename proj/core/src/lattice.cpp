#include "abelatt/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "abelatt/errors.hpp"

namespace abelatt {

namespace {

IntMatrix gram_of(const std::vector<GroupRingElement>& basis) {
  const std::size_t m = basis.size();
  IntMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Rat v = inner(basis[i], basis[j]);
      if (!is_integral(v)) {
        throw ConsistencyError("gram_of: non-integral inner product");
      }
      g(i, j) = v.get_num();
      g(j, i) = g(i, j);
    }
  }
  return g;
}

GroupRingElement pow_ring(const GroupRingElement& x, int e) {
  GroupRingElement acc = GroupRingElement::one(x.group());
  for (int i = 0; i < e; ++i) acc = acc * x;
  return acc;
}

}  // namespace

LatticeDescription canonical_basis(const AbelianGroup& A, int r) {
  if (r < 1) throw std::invalid_argument("canonical_basis: power must be >= 1");
  if (A.is_trivial()) {
    throw std::domain_error("canonical_basis: the trivial group has an empty lattice");
  }
  std::vector<GroupRingElement> basis;
  const std::size_t n = A.order();
  if (r == 1) {
    basis.reserve(n - 1);
    for (std::size_t g = 1; g < n; ++g) {
      basis.push_back(GroupRingElement::aug_gen(A.element(g)));
    }
  } else if (r == 2) {
    basis.reserve(n - 1);
    // Factor by factor: in-factor products first, then the cross terms with
    // everything accumulated so far, in lexicographic order.
    std::vector<std::size_t> accumulated;  // non-identity indices of B so far
    for (std::size_t f = 0; f < A.num_factors(); ++f) {
      const GroupElement gen = A.factor_generator(f);
      const int nf = A.invariant_factors()[f];
      const GroupRingElement gen_m1 = GroupRingElement::aug_gen(gen);
      std::vector<std::size_t> factor_indices;
      for (int k = 1; k < nf; ++k) {
        const GroupElement gk = gen.pow(k);
        basis.push_back(gen_m1 * GroupRingElement::aug_gen(gk));
        factor_indices.push_back(gk.index());
      }
      for (std::size_t x : accumulated) {
        const GroupRingElement x_m1 = GroupRingElement::aug_gen(A.element(x));
        for (std::size_t c : factor_indices) {
          basis.push_back(x_m1 * GroupRingElement::aug_gen(A.element(c)));
        }
      }
      // Extend B to B x C_f: all products of old elements with factor powers.
      std::vector<std::size_t> extended = accumulated;
      extended.insert(extended.end(), factor_indices.begin(), factor_indices.end());
      for (std::size_t x : accumulated) {
        for (std::size_t c : factor_indices) {
          extended.push_back(A.mul_index(x, c));
        }
      }
      std::sort(extended.begin(), extended.end());
      accumulated = std::move(extended);
    }
    if (basis.size() != n - 1) {
      throw ConsistencyError("canonical_basis: direct-product assembly size mismatch");
    }
  } else {
    if (!A.is_cyclic()) {
      throw std::domain_error(
          "canonical_basis: powers >= 3 are implemented for cyclic groups only");
    }
    const GroupElement a = A.factor_generator(0);
    const GroupRingElement head = pow_ring(GroupRingElement::aug_gen(a), r - 1);
    basis.reserve(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
      basis.push_back(head * GroupRingElement::aug_gen(a.pow(static_cast<long>(k))));
    }
  }
  LatticeDescription L;
  L.group = A;
  L.power = r;
  L.gram = gram_of(basis);
  L.basis = std::move(basis);
  return L;
}

bool membership(const GroupRingElement& x) {
  if (!x.is_integral()) {
    throw std::domain_error("membership: element must have integer coefficients");
  }
  if (x.augmentation() != 0) return false;
  return psi(x).is_identity();
}

std::vector<OmegaPair> omega_pairs(const AbelianGroup& A) {
  std::vector<OmegaPair> out;
  const std::size_t n = A.order();
  for (std::size_t a = 1; a < n; ++a) {
    const std::size_t a_inv = A.inverse_index(a);
    for (std::size_t b = 1; b < n; ++b) {
      if (b == a || b == a_inv) continue;
      out.push_back(OmegaPair{a, b});
    }
  }
  return out;
}

std::vector<MinimalVector> minimal_vectors(const AbelianGroup& A) {
  std::vector<MinimalVector> out;
  if (A.order() < 4) return out;
  const std::size_t n = A.order();
  // Keyed by the full coefficient vector; std::map keeps canonical order.
  std::map<std::vector<long>, std::vector<VectorTriple>> found;
  for (const OmegaPair& p : omega_pairs(A)) {
    const std::size_t ab = A.mul_index(p.a, p.b);
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<long> key(n, 0);
      key[A.mul_index(ab, g)] += 1;
      key[A.mul_index(p.a, g)] -= 1;
      key[A.mul_index(p.b, g)] -= 1;
      key[g] += 1;
      found[std::move(key)].push_back(VectorTriple{p.a, p.b, g});
    }
  }
  out.reserve(found.size());
  for (auto& [key, triples] : found) {
    if (triples.size() != 4) {
      throw ConsistencyError("minimal_vectors: a vector without exactly 4 triples");
    }
    std::vector<Rat> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) coeffs[i] = key[i];
    out.push_back(MinimalVector{GroupRingElement(A, std::move(coeffs)),
                                std::move(triples)});
  }
  return out;
}

std::int64_t kissing_count(const AbelianGroup& A) {
  const auto n = static_cast<std::int64_t>(A.order());
  const auto t = static_cast<std::int64_t>(torsion2_subgroup(A).size());
  return n * ((n - 1) * (n - 3) + t - 1) / 4;
}

Int min_distance(const AbelianGroup& A, int r) {
  if (A.is_trivial()) {
    throw std::domain_error("min_distance: the trivial group has an empty lattice");
  }
  if (r == 2) {
    if (A.order() == 2) return Int(8);
    if (A.order() == 3) return Int(6);
    return Int(4);
  }
  const LatticeDescription L = canonical_basis(A, r);
  Int bound = L.gram(0, 0);
  for (std::size_t i = 1; i < L.rank(); ++i) bound = std::min(bound, L.gram(i, i));
  const auto vectors = short_vector_oracle(L, bound);
  Int best = bound;
  for (const auto& v : vectors) best = std::min(best, Int(norm_sq(v).get_num()));
  return best;
}

namespace {

// Exact rational Cholesky-style decomposition of the quadratic form:
// Q(x) = sum_i q(i,i) (x_i + sum_{j>i} q(i,j) x_j)^2.
RatMatrix quadratic_form(const IntMatrix& gram) {
  const std::size_t m = gram.rows();
  RatMatrix q = to_rational(gram);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      const Rat qki = q(k, i);
      if (qki == 0) continue;
      for (std::size_t j = i; j < m; ++j) {
        q(i, j) -= q(k, k) * qki * q(k, j);
      }
    }
    if (q(i, i) <= 0) {
      throw std::invalid_argument("short_vector_oracle: Gram matrix not positive definite");
    }
    const Rat inv = Rat(1) / q(i, i);
    for (std::size_t j = i + 1; j < m; ++j) q(i, j) *= inv;
  }
  return q;
}

struct Enumerator {
  const RatMatrix& q;
  Rat bound;
  std::size_t m;
  std::vector<long> x;
  std::vector<std::vector<long>> found;

  void run() {
    x.assign(m, 0);
    descend(m, Rat(0));
  }

  // level counts how many coordinates (from the back) are fixed.
  void descend(std::size_t level, const Rat& used) {
    if (level == 0) {
      if (std::any_of(x.begin(), x.end(), [](long v) { return v != 0; })) {
        found.push_back(x);
      }
      return;
    }
    const std::size_t i = level - 1;
    Rat center(0);
    for (std::size_t j = i + 1; j < m; ++j) {
      if (x[j] != 0) center += q(i, j) * x[j];
    }
    const Rat budget = bound - used;
    // Integer range of x_i with q(i,i) (x_i + center)^2 <= budget, scanned
    // exactly; the ranges are tiny at desk scale.
    const Rat neg_center = -center;
    long start = static_cast<long>(
        mpz_class(neg_center.get_num() / neg_center.get_den()).get_si());
    auto fits = [&](long v) {
      const Rat d = Rat(v) + center;
      return q(i, i) * d * d <= budget;
    };
    long low = start;
    if (!fits(low)) {
      // The truncated center may land just outside; probe both neighbors.
      if (fits(start + 1)) {
        low = start + 1;
      } else if (fits(start - 1)) {
        low = start - 1;
      } else {
        return;
      }
    }
    while (fits(low - 1)) --low;
    for (long v = low; fits(v); ++v) {
      x[i] = v;
      const Rat d = Rat(v) + center;
      descend(i, used + q(i, i) * d * d);
    }
    x[i] = 0;
  }
};

}  // namespace

std::vector<GroupRingElement> short_vector_oracle(const LatticeDescription& L,
                                                  const Int& bound) {
  if (bound <= 0) {
    throw std::invalid_argument("short_vector_oracle: bound must be positive");
  }
  const RatMatrix q = quadratic_form(L.gram);
  Enumerator e{q, Rat(bound), L.rank(), {}, {}};
  e.run();
  std::vector<GroupRingElement> out;
  out.reserve(e.found.size());
  for (const auto& coeffs : e.found) {
    GroupRingElement v = GroupRingElement::zero(L.group);
    for (std::size_t i = 0; i < L.rank(); ++i) {
      if (coeffs[i] != 0) v = v + L.basis[i] * Rat(coeffs[i]);
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), coeff_lex_less);
  return out;
}

std::vector<GroupRingElement> min_vectors_any(const AbelianGroup& A, int r) {
  if (r == 2 && A.order() >= 4) {
    std::vector<GroupRingElement> out;
    for (auto& mv : minimal_vectors(A)) out.push_back(std::move(mv.vector));
    return out;
  }
  const LatticeDescription L = canonical_basis(A, r);
  Int bound = L.gram(0, 0);
  for (std::size_t i = 1; i < L.rank(); ++i) bound = std::min(bound, L.gram(i, i));
  auto all = short_vector_oracle(L, bound);
  Rat best = Rat(bound);
  for (const auto& v : all) best = std::min(best, norm_sq(v));
  std::vector<GroupRingElement> out;
  for (auto& v : all) {
    if (norm_sq(v) == best) out.push_back(std::move(v));
  }
  return out;
}

std::vector<GroupRingElement> norm2_vectors_by_quadruples(const AbelianGroup& A) {
  const std::size_t n = A.order();
  // Bucket unordered pairs {x, y} by their product, then combine distinct
  // pairs with equal products.
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> buckets;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      buckets[A.mul_index(x, y)].push_back({x, y});
    }
  }
  std::map<std::vector<long>, bool> dedup;
  for (const auto& [prod, pairs] : buckets) {
    for (const auto& p : pairs) {
      for (const auto& q : pairs) {
        if (p == q) continue;
        if (p.first == q.first || p.first == q.second || p.second == q.first ||
            p.second == q.second) {
          continue;
        }
        std::vector<long> key(n, 0);
        key[p.first] += 1;
        key[p.second] += 1;
        key[q.first] -= 1;
        key[q.second] -= 1;
        dedup[std::move(key)] = true;
      }
    }
  }
  std::vector<GroupRingElement> out;
  out.reserve(dedup.size());
  for (const auto& [key, unused] : dedup) {
    std::vector<Rat> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) coeffs[i] = key[i];
    out.push_back(GroupRingElement(A, std::move(coeffs)));
  }
  return out;
}

std::vector<Int> delta_square_smith_diagonal(const AbelianGroup& A) {
  const LatticeDescription L = canonical_basis(A, 2);
  const std::size_t n = A.order();
  IntMatrix coords(L.rank(), n - 1);
  for (std::size_t i = 0; i < L.rank(); ++i) {
    // An augmentation-zero integral element is sum_{g != 1} c_g (g - 1).
    for (std::size_t g = 1; g < n; ++g) {
      coords(i, g - 1) = L.basis[i].coeff(g).get_num();
    }
  }
  return smith_diagonal(std::move(coords));
}

Int delta_square_index(const AbelianGroup& A) {
  Int prod(1);
  for (const Int& d : delta_square_smith_diagonal(A)) prod *= d;
  return prod;
}

bool coeff_lex_less(const GroupRingElement& x, const GroupRingElement& y) {
  return std::lexicographical_compare(x.coeffs().begin(), x.coeffs().end(),
                                      y.coeffs().begin(), y.coeffs().end());
}

}  // namespace abelatt
