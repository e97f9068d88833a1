#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace abelatt {

class GroupElement;

/// A finite abelian group presented by an ordered list of invariant factors,
/// each >= 2 (empty list = trivial group). The presentation is part of the
/// identity: C2xC4 and C4xC2 are distinct objects with different canonical
/// element orders, even though they are isomorphic.
///
/// Elements are mixed-radix coordinate tuples; the canonical index of an
/// element is its position in lexicographic mixed-radix order. Every
/// coefficient vector in this library is indexed that way.
///
/// Immutable and cheap to copy; safe to share across threads.
class AbelianGroup {
 public:
  AbelianGroup();  // trivial group
  explicit AbelianGroup(std::vector<int> invariant_factors);

  std::size_t order() const { return data_->order; }
  const std::vector<int>& invariant_factors() const { return data_->factors; }
  std::size_t num_factors() const { return data_->factors.size(); }
  bool is_trivial() const { return data_->factors.empty(); }
  bool is_cyclic() const { return data_->factors.size() == 1; }
  /// Every invariant factor equals 2.
  bool is_elementary_2() const;
  bool has_odd_order() const { return data_->order % 2 == 1; }

  /// Same invariant-factor list (not isomorphism).
  bool operator==(const AbelianGroup& other) const {
    return data_ == other.data_ || data_->factors == other.data_->factors;
  }
  bool operator!=(const AbelianGroup& other) const { return !(*this == other); }

  /// "C4xC2", "C1" for the trivial group.
  std::string spec_string() const;

  // Canonical-index arithmetic. Indices run over [0, order).
  std::size_t identity_index() const { return 0; }
  std::size_t index_of(const std::vector<int>& coords) const;
  std::vector<int> coords_at(std::size_t index) const;
  std::size_t mul_index(std::size_t g, std::size_t h) const;
  std::size_t inverse_index(std::size_t g) const;
  std::size_t pow_index(std::size_t g, long exponent) const;
  /// Order of the cyclic subgroup generated by g.
  std::size_t element_order(std::size_t g) const;

  GroupElement element(std::size_t index) const;
  GroupElement element(const std::vector<int>& coords) const;
  GroupElement identity() const;
  /// Generator of the i-th invariant factor, embedded in the group.
  GroupElement factor_generator(std::size_t i) const;

  /// All elements in canonical (lexicographic mixed-radix) order.
  std::vector<GroupElement> enumerate() const;

 private:
  struct Data {
    std::vector<int> factors;
    std::vector<std::size_t> strides;
    std::size_t order = 1;
  };
  std::shared_ptr<const Data> data_;
};

/// An element of a specific AbelianGroup, as a coordinate tuple.
class GroupElement {
 public:
  GroupElement(AbelianGroup group, std::vector<int> coords);

  const AbelianGroup& group() const { return group_; }
  const std::vector<int>& coords() const { return coords_; }
  std::size_t index() const { return index_; }
  bool is_identity() const { return index_ == 0; }

  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;
  GroupElement pow(long exponent) const;

  bool operator==(const GroupElement& other) const;
  bool operator!=(const GroupElement& other) const { return !(*this == other); }

 private:
  AbelianGroup group_;
  std::vector<int> coords_;
  std::size_t index_;
};

GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// A subgroup given by its element set; closure under product and inverse is
/// checked at construction.
class Subgroup {
 public:
  Subgroup(AbelianGroup parent, std::vector<std::size_t> element_indices);

  const AbelianGroup& parent() const { return parent_; }
  /// Sorted canonical indices.
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(std::size_t index) const { return member_[index]; }
  bool is_trivial() const { return indices_.size() == 1; }
  bool is_whole_group() const { return indices_.size() == parent_.order(); }
  std::vector<GroupElement> elements() const;

 private:
  AbelianGroup parent_;
  std::vector<std::size_t> indices_;
  std::vector<bool> member_;
};

/// Parses "C4xC2" (case-insensitive, whitespace-tolerant). "C1" denotes the
/// trivial group and must appear alone. Throws ParseError otherwise.
AbelianGroup parse_group_spec(const std::string& spec);

/// S = {a^2 : a in A}, the image of the squaring map.
Subgroup squares_subgroup(const AbelianGroup& A);
/// T = {a in A : a^2 = 1}, the kernel of the squaring map. |S| * |T| = |A|.
Subgroup torsion2_subgroup(const AbelianGroup& A);

/// Invariant-factor lists (largest first, each divisible by the next) of all
/// abelian group isomorphism types of the given order / of every order in
/// [2, max_order], in deterministic order.
std::vector<std::vector<int>> abelian_group_types(std::size_t order);
std::vector<std::vector<int>> abelian_group_types_up_to(std::size_t max_order);

}  // namespace abelatt
