#include "abelatt/eutaxy.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "abelatt/errors.hpp"

namespace abelatt {

namespace {

struct SparseTerm {
  std::size_t index;
  long sign;
};

// m(a,b) m(a,b)* accumulated into a dense integer vector: the product of two
// four-term elements, 16 index operations.
void accumulate_mm_star(const AbelianGroup& A, std::size_t a, std::size_t b,
                        std::vector<long>& acc, long weight = 1) {
  const std::array<SparseTerm, 4> m = {{{A.mul_index(a, b), +1},
                                        {a, -1},
                                        {b, -1},
                                        {A.identity_index(), +1}}};
  for (const auto& [i, si] : m) {
    for (const auto& [j, sj] : m) {
      acc[A.mul_index(i, A.inverse_index(j))] += weight * si * sj;
    }
  }
}

GroupRingElement from_longs(const AbelianGroup& A, const std::vector<long>& acc) {
  std::vector<Rat> coeffs(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) coeffs[i] = acc[i];
  return GroupRingElement(A, std::move(coeffs));
}

GroupRingElement one_minus_idempotent(const AbelianGroup& A, const Subgroup& B) {
  return GroupRingElement::one(A) - idempotent(B).value;
}

}  // namespace

GroupRingElement sum_mm_star(const AbelianGroup& A) {
  const std::size_t n = A.order();
  std::vector<long> acc(n, 0);
  for (const OmegaPair& p : omega_pairs(A)) {
    accumulate_mm_star(A, p.a, p.b, acc);
  }
  const GroupRingElement direct = from_longs(A, acc);

  const Subgroup S = squares_subgroup(A);
  const Subgroup T = torsion2_subgroup(A);
  const Rat nn(static_cast<long>(n));
  const GroupRingElement closed =
      (GroupRingElement::one(A) - e_full(A)) * (4 * nn * (nn - 4)) +
      one_minus_idempotent(A, S) * (4 * nn) +
      one_minus_idempotent(A, T) * Rat(8 * static_cast<long>(T.size()));
  if (direct != closed) {
    throw ConsistencyError("sum_mm_star: direct sum disagrees with the closed form");
  }
  return direct;
}

GroupRingElement cross_sum(const Subgroup& B) {
  const AbelianGroup& A = B.parent();
  if (B.is_trivial() || B.is_whole_group()) {
    throw std::invalid_argument("cross_sum: B must be a proper nontrivial subgroup");
  }
  const std::size_t n = A.order();
  std::vector<long> acc(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (B.contains(a) == B.contains(b)) continue;
      accumulate_mm_star(A, a, b, acc);
    }
  }
  const GroupRingElement direct = from_longs(A, acc);
  const long size_b = static_cast<long>(B.size());
  const long index_b = static_cast<long>(n) / size_b;
  const GroupRingElement closed =
      one_minus_idempotent(A, B) * Rat(8 * size_b * size_b * (index_b - 1));
  if (direct != closed) {
    throw ConsistencyError("cross_sum: direct sum disagrees with the closed form");
  }
  return direct;
}

bool classify_strong(const AbelianGroup& A) {
  const bool closed_form = A.has_odd_order() || A.is_elementary_2();
  if (A.order() >= 4) {
    // Definitional test: the Omega sum must be a positive scalar multiple of
    // 1 - e_A exactly when the closed form says so.
    const GroupRingElement sum = sum_mm_star(A);
    const GroupRingElement proj = GroupRingElement::one(A) - e_full(A);
    // The scalar is fixed by the coefficient at the identity.
    const Rat c = sum.coeff(0) / proj.coeff(0);
    const bool definitional = c > 0 && sum == proj * c;
    if (definitional != closed_form) {
      throw ConsistencyError("classify_strong: definitional test disagrees with the closed form");
    }
  }
  return closed_form;
}

std::string to_string(CertificateBranch b) {
  switch (b) {
    case CertificateBranch::odd_strong: return "odd_strong";
    case CertificateBranch::elementary2_strong: return "elementary2_strong";
    case CertificateBranch::mixed: return "mixed";
    case CertificateBranch::small_group: return "small_group";
  }
  return "?";
}

std::vector<GroupRingElement> certificate_vectors(const AbelianGroup& A) {
  return min_vectors_any(A, 2);
}

RatMatrix augmentation_projector(std::size_t n) {
  RatMatrix m(n, n);
  const Rat w = Rat(1) / Rat(static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? Rat(Rat(1) - w) : Rat(-w));
  }
  return m;
}

EutaxyCertificate build_certificate(const AbelianGroup& A) {
  if (A.is_trivial()) {
    throw std::domain_error("build_certificate: the trivial group has an empty lattice");
  }
  const std::size_t n = A.order();
  if (A.is_cyclic() && n == 4) {
    throw NotEutacticError(
        "build_certificate: the minimal vectors of L(C4) span only a proper subspace; not eutactic");
  }

  EutaxyCertificate cert;
  cert.group = A;

  if (n <= 3) {
    cert.branch = CertificateBranch::small_group;
    const std::size_t count = certificate_vectors(A).size();
    // One signed A-orbit: the orbit-sum identity fixes the uniform weight
    // (1/16 for C2, 1/18 for C3); the projection check below confirms it.
    const Rat w = (n == 2) ? Rat(1, 16) : Rat(1, 18);
    cert.lambda.assign(count, w);
  } else {
    const auto pairs = omega_pairs(A);
    cert.pairs = pairs;
    const Rat nn(static_cast<long>(n));
    if (A.has_odd_order()) {
      cert.branch = CertificateBranch::odd_strong;
      cert.gamma.assign(pairs.size(), Rat(1) / (4 * nn * (nn - 3)));
    } else if (A.is_elementary_2()) {
      cert.branch = CertificateBranch::elementary2_strong;
      cert.gamma.assign(pairs.size(), Rat(1) / (4 * nn * (nn - 2)));
    } else {
      cert.branch = CertificateBranch::mixed;
      const Subgroup S = squares_subgroup(A);
      const Subgroup T = torsion2_subgroup(A);
      const Rat s_size(static_cast<long>(S.size()));
      const Rat t_size(static_cast<long>(T.size()));
      const Rat s_index = nn / s_size;
      const Rat t_index = nn / t_size;
      const Rat c_s = (4 * nn) / (8 * s_size * s_size * (s_index - 1));
      const Rat c_t = (8 * t_size) / (8 * t_size * t_size * (t_index - 1));
      if (c_s + c_t >= 1) {
        throw ConsistencyError("build_certificate: cross-sum coefficients are not < 1");
      }
      const Rat denom = 4 * nn * (nn - 4);
      cert.gamma.reserve(pairs.size());
      for (const OmegaPair& p : pairs) {
        Rat g(1);
        if (S.contains(p.a) != S.contains(p.b)) g -= c_s;
        if (T.contains(p.a) != T.contains(p.b)) g -= c_t;
        g /= denom;
        if (g <= 0) {
          throw ConsistencyError("build_certificate: nonpositive gamma");
        }
        cert.gamma.push_back(std::move(g));
      }
    }
    // lambda_s = sum of gamma over the four triples of s (the minimal-vector
    // list and omega_pairs share deterministic orders).
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_pos;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      pair_pos[{pairs[i].a, pairs[i].b}] = i;
    }
    const auto mvs = minimal_vectors(A);
    cert.lambda.reserve(mvs.size());
    for (const MinimalVector& mv : mvs) {
      Rat l(0);
      for (const VectorTriple& t : mv.triples) {
        l += cert.gamma[pair_pos.at({t.a, t.b})];
      }
      cert.lambda.push_back(std::move(l));
    }
  }

  const CertificateCheck check = verify_certificate_detail(cert);
  if (!check.ok) {
    throw ConsistencyError("build_certificate: fresh certificate failed verification (" +
                           check.failed_check + ": " + check.detail + ")");
  }
  cert.verified = true;
  return cert;
}

CertificateCheck verify_certificate_detail(const EutaxyCertificate& cert) {
  const AbelianGroup& A = cert.group;
  const std::size_t n = A.order();
  if (n < 2) return {false, "malformed-certificate", "trivial group"};
  if (cert.pairs.size() != cert.gamma.size()) {
    return {false, "malformed-certificate", "gamma/pair arrays differ in length"};
  }
  for (const OmegaPair& p : cert.pairs) {
    if (p.a == 0 || p.b == 0 || p.a >= n || p.b >= n || p.b == p.a ||
        p.b == A.inverse_index(p.a)) {
      return {false, "malformed-certificate", "pair outside Omega(A)"};
    }
  }

  // Check 1: sum gamma m(a,b) m(a,b)* = 1 - e_A (branches that carry gamma).
  if (cert.branch != CertificateBranch::small_group) {
    GroupRingElement sum = GroupRingElement::zero(A);
    for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
      const GroupRingElement m = m_ab(A, cert.pairs[i].a, cert.pairs[i].b);
      sum = sum + m * m.involution() * cert.gamma[i];
    }
    if (sum != GroupRingElement::one(A) - e_full(A)) {
      return {false, "gamma-identity",
              "sum of gamma m(a,b)m(a,b)* is not 1 - e_A"};
    }
  }

  // Check 2: every lambda strictly positive.
  const auto vectors = certificate_vectors(A);
  if (cert.lambda.size() != vectors.size()) {
    return {false, "malformed-certificate",
            "lambda count does not match the minimal-vector count"};
  }
  for (const Rat& l : cert.lambda) {
    if (l <= 0) return {false, "lambda-positivity", "positivity violated"};
  }

  // Check 3: sum lambda_s s s^T = I - J/|A|.
  RatMatrix proj(n, n);
  for (std::size_t v = 0; v < vectors.size(); ++v) {
    const auto& coeffs = vectors[v].coeffs();
    for (std::size_t i = 0; i < n; ++i) {
      if (coeffs[i] == 0) continue;
      const Rat wi = cert.lambda[v] * coeffs[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (coeffs[j] == 0) continue;
        proj(i, j) += wi * coeffs[j];
      }
    }
  }
  if (proj != augmentation_projector(n)) {
    return {false, "projection-identity",
            "sum of lambda_s s s^T is not I - J/|A|"};
  }
  return {true, "", ""};
}

bool verify_certificate(const EutaxyCertificate& cert) {
  return verify_certificate_detail(cert).ok;
}

PerfectionReport perfection_rank(const AbelianGroup& A) {
  if (A.is_trivial()) {
    throw std::domain_error("perfection_rank: the trivial group has an empty lattice");
  }
  const std::size_t n = A.order();
  const auto vectors = certificate_vectors(A);
  const std::size_t dim = n * (n + 1) / 2;
  IntMatrix rows(vectors.size(), dim);
  for (std::size_t v = 0; v < vectors.size(); ++v) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        rows(v, col++) = Int(vectors[v].coeff(i).get_num() *
                             vectors[v].coeff(j).get_num());
      }
    }
  }
  PerfectionReport report;
  report.group = A;
  report.target = (n - 1) * n / 2;
  report.rank = integer_rank(std::move(rows));
  if (report.rank > report.target) {
    throw ConsistencyError("perfection_rank: rank exceeds the symmetric-operator dimension");
  }
  report.is_perfect = report.rank == report.target;
  return report;
}

ExtremalityReport extremality(const AbelianGroup& A) {
  ExtremalityReport report;
  try {
    const EutaxyCertificate cert = build_certificate(A);
    report.eutactic = cert.verified;
  } catch (const NotEutacticError& e) {
    report.eutactic = false;
    report.eutaxy_failure = e.what();
  }
  report.perfection = perfection_rank(A);
  report.extreme = report.eutactic && report.perfection.is_perfect;
  return report;
}

}  // namespace abelatt
