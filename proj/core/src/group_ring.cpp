#include "abelatt/group_ring.hpp"

#include <stdexcept>

#include "abelatt/errors.hpp"
#include "abelatt/exact_linalg.hpp"

namespace abelatt {

GroupRingElement::GroupRingElement(AbelianGroup group)
    : group_(std::move(group)), coeffs_(group_.order()) {}

GroupRingElement::GroupRingElement(AbelianGroup group, std::vector<Rat> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_.order()) {
    throw std::invalid_argument(
        "GroupRingElement: coefficient vector length must equal |A|");
  }
}

GroupRingElement GroupRingElement::zero(const AbelianGroup& group) {
  return GroupRingElement(group);
}

GroupRingElement GroupRingElement::one(const AbelianGroup& group) {
  GroupRingElement x(group);
  x.coeffs_[group.identity_index()] = 1;
  return x;
}

GroupRingElement GroupRingElement::basis(const GroupElement& g) {
  GroupRingElement x(g.group());
  x.coeffs_[g.index()] = 1;
  return x;
}

GroupRingElement GroupRingElement::aug_gen(const GroupElement& g) {
  GroupRingElement x(g.group());
  x.coeffs_[g.index()] += 1;
  x.coeffs_[g.group().identity_index()] -= 1;
  return x;
}

bool GroupRingElement::is_zero() const {
  for (const Rat& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool GroupRingElement::is_integral() const {
  for (const Rat& c : coeffs_) {
    if (!abelatt::is_integral(c)) return false;
  }
  return true;
}

void GroupRingElement::check_same_group(const GroupRingElement& other) const {
  if (group_ != other.group_) {
    throw GroupMismatchError("GroupRingElement: operands in different group rings");
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& other) const {
  check_same_group(other);
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
  }
  return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& other) const {
  check_same_group(other);
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
  }
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& other) const {
  check_same_group(other);
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      out.coeffs_[group_.mul_index(i, j)] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return out;
}

GroupRingElement GroupRingElement::operator*(const Rat& scalar) const {
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] * scalar;
  }
  return out;
}

bool GroupRingElement::operator==(const GroupRingElement& other) const {
  return group_ == other.group_ && coeffs_ == other.coeffs_;
}

GroupRingElement GroupRingElement::involution() const {
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[group_.inverse_index(i)] = coeffs_[i];
  }
  return out;
}

Rat GroupRingElement::augmentation() const {
  Rat sum(0);
  for (const Rat& c : coeffs_) sum += c;
  return sum;
}

GroupRingElement GroupRingElement::translate(std::size_t g_index) const {
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[group_.mul_index(i, g_index)] = coeffs_[i];
  }
  return out;
}

RatMatrix GroupRingElement::left_mult_matrix() const {
  const std::size_t n = group_.order();
  RatMatrix m(n, n);
  // Column j holds the coefficients of this * g_j.
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      m(group_.mul_index(i, j), j) += coeffs_[i];
    }
  }
  return m;
}

GroupRingElement operator*(const Rat& scalar, const GroupRingElement& x) {
  return x * scalar;
}

GroupRingElement add(const GroupRingElement& x, const GroupRingElement& y) {
  return x + y;
}
GroupRingElement sub(const GroupRingElement& x, const GroupRingElement& y) {
  return x - y;
}
GroupRingElement scale(const GroupRingElement& x, const Rat& q) { return x * q; }
GroupRingElement mul(const GroupRingElement& x, const GroupRingElement& y) {
  return x * y;
}
GroupRingElement involution(const GroupRingElement& x) { return x.involution(); }
Rat augmentation(const GroupRingElement& x) { return x.augmentation(); }

GroupElement psi(const GroupRingElement& x) {
  if (!x.is_integral()) {
    throw std::domain_error("psi: element must have integer coefficients");
  }
  const AbelianGroup& A = x.group();
  const auto& factors = A.invariant_factors();
  std::vector<Int> acc(factors.size(), Int(0));
  for (std::size_t i = 0; i < A.order(); ++i) {
    const Int& k = x.coeff(i).get_num();
    if (k == 0) continue;
    const auto coords = A.coords_at(i);
    for (std::size_t f = 0; f < factors.size(); ++f) {
      acc[f] += k * coords[f];
    }
  }
  std::vector<int> coords(factors.size());
  for (std::size_t f = 0; f < factors.size(); ++f) {
    Int r;
    Int n(factors[f]);
    mpz_fdiv_r(r.get_mpz_t(), acc[f].get_mpz_t(), n.get_mpz_t());
    coords[f] = static_cast<int>(r.get_si());
  }
  return A.element(coords);
}

Rat inner(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.group() != y.group()) {
    throw GroupMismatchError("inner: operands in different group rings");
  }
  Rat sum(0);
  for (std::size_t i = 0; i < x.group().order(); ++i) {
    sum += x.coeff(i) * y.coeff(i);
  }
  return sum;
}

Rat norm_sq(const GroupRingElement& x) { return inner(x, x); }

Idempotent idempotent(const Subgroup& B) {
  GroupRingElement value(B.parent());
  const Rat w = Rat(1) / Rat(static_cast<long>(B.size()));
  for (std::size_t i : B.indices()) value.coeff(i) = w;
  return Idempotent{B, value};
}

GroupRingElement e_full(const AbelianGroup& A) {
  GroupRingElement value(A);
  const Rat w = Rat(1) / Rat(static_cast<long>(A.order()));
  for (std::size_t i = 0; i < A.order(); ++i) value.coeff(i) = w;
  return value;
}

GroupRingElement m_ab(const AbelianGroup& A, std::size_t a, std::size_t b) {
  GroupRingElement x(A);
  x.coeff(A.mul_index(a, b)) += 1;
  x.coeff(a) -= 1;
  x.coeff(b) -= 1;
  x.coeff(A.identity_index()) += 1;
  return x;
}

}  // namespace abelatt
