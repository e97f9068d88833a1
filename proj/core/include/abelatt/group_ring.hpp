#pragma once

#include <vector>

#include "abelatt/exact_linalg_fwd.hpp"
#include "abelatt/group.hpp"
#include "abelatt/numeric.hpp"

namespace abelatt {

/// An element of QA: a dense vector of exact rationals indexed by canonical
/// element order. Elements of ZA are the ones with is_integral() == true.
/// All operations are pure; values are immutable in practice.
class GroupRingElement {
 public:
  /// The zero element.
  explicit GroupRingElement(AbelianGroup group);
  GroupRingElement(AbelianGroup group, std::vector<Rat> coeffs);

  static GroupRingElement zero(const AbelianGroup& group);
  /// The ring identity (the group identity with coefficient 1).
  static GroupRingElement one(const AbelianGroup& group);
  /// The group element g as a ring element.
  static GroupRingElement basis(const GroupElement& g);
  /// g - 1, the generators of the augmentation ideal.
  static GroupRingElement aug_gen(const GroupElement& g);

  const AbelianGroup& group() const { return group_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& coeff(std::size_t index) const { return coeffs_[index]; }
  Rat& coeff(std::size_t index) { return coeffs_[index]; }

  bool is_zero() const;
  bool is_integral() const;

  GroupRingElement operator+(const GroupRingElement& other) const;
  GroupRingElement operator-(const GroupRingElement& other) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& other) const;  // convolution
  GroupRingElement operator*(const Rat& scalar) const;
  bool operator==(const GroupRingElement& other) const;
  bool operator!=(const GroupRingElement& other) const { return !(*this == other); }

  /// Sends each g to g^{-1} (the * involution).
  GroupRingElement involution() const;
  /// Sum of coefficients.
  Rat augmentation() const;
  /// Translate by a group element: this * g.
  GroupRingElement translate(std::size_t g_index) const;

  /// The |A| x |A| rational matrix of r -> this * r in canonical order.
  RatMatrix left_mult_matrix() const;

 private:
  void check_same_group(const GroupRingElement& other) const;

  AbelianGroup group_;
  std::vector<Rat> coeffs_;
};

GroupRingElement operator*(const Rat& scalar, const GroupRingElement& x);

GroupRingElement add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement sub(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement scale(const GroupRingElement& x, const Rat& q);
GroupRingElement mul(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement involution(const GroupRingElement& x);
Rat augmentation(const GroupRingElement& x);

/// psi(sum k_a a) = prod a^{k_a}. Requires an integral element.
GroupElement psi(const GroupRingElement& x);

/// Euclidean inner product of coefficient vectors; equals aug(x * y~).
Rat inner(const GroupRingElement& x, const GroupRingElement& y);
Rat norm_sq(const GroupRingElement& x);

/// e_B = (1/|B|) sum_{b in B} b, an idempotent of QA with augmentation 1.
/// 1 - e_A acts as the orthogonal projection onto the augmentation-zero
/// hyperplane.
struct Idempotent {
  Subgroup subgroup;
  GroupRingElement value;
};

Idempotent idempotent(const Subgroup& B);
/// Shorthand for idempotent over the whole group.
GroupRingElement e_full(const AbelianGroup& A);

/// m(a, b) = (a - 1)(b - 1), computed sparsely.
GroupRingElement m_ab(const AbelianGroup& A, std::size_t a, std::size_t b);

}  // namespace abelatt
