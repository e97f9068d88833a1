#include "abelatt/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

#include "abelatt/errors.hpp"

namespace abelatt {

namespace {
// Element indices, strides and index products must stay well inside size_t.
constexpr std::size_t kMaxOrder = std::size_t{1} << 40;
}  // namespace

AbelianGroup::AbelianGroup() : AbelianGroup(std::vector<int>{}) {}

AbelianGroup::AbelianGroup(std::vector<int> invariant_factors) {
  auto data = std::make_shared<Data>();
  data->factors = std::move(invariant_factors);
  for (int n : data->factors) {
    if (n < 2) {
      throw std::invalid_argument(
          "AbelianGroup: every invariant factor must be >= 2 (got " +
          std::to_string(n) + ")");
    }
  }
  // strides[i] = product of factors after position i, so that
  // index = sum coords[i] * strides[i] is the lexicographic rank.
  data->strides.assign(data->factors.size(), 1);
  data->order = 1;
  for (std::size_t i = data->factors.size(); i-- > 0;) {
    data->strides[i] = data->order;
    const auto f = static_cast<std::size_t>(data->factors[i]);
    if (data->order > kMaxOrder / f) {
      throw std::invalid_argument("AbelianGroup: group order exceeds the supported bound");
    }
    data->order *= f;
  }
  data_ = std::move(data);
}

bool AbelianGroup::is_elementary_2() const {
  if (data_->factors.empty()) return false;
  return std::all_of(data_->factors.begin(), data_->factors.end(),
                     [](int n) { return n == 2; });
}

std::string AbelianGroup::spec_string() const {
  if (data_->factors.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < data_->factors.size(); ++i) {
    if (i > 0) out += "x";
    out += "C" + std::to_string(data_->factors[i]);
  }
  return out;
}

std::size_t AbelianGroup::index_of(const std::vector<int>& coords) const {
  if (coords.size() != data_->factors.size()) {
    throw std::invalid_argument("AbelianGroup::index_of: wrong tuple length");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= data_->factors[i]) {
      throw std::invalid_argument("AbelianGroup::index_of: residue out of range");
    }
    idx += static_cast<std::size_t>(coords[i]) * data_->strides[i];
  }
  return idx;
}

std::vector<int> AbelianGroup::coords_at(std::size_t index) const {
  std::vector<int> coords(data_->factors.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] = static_cast<int>(index / data_->strides[i]);
    index %= data_->strides[i];
  }
  return coords;
}

std::size_t AbelianGroup::mul_index(std::size_t g, std::size_t h) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < data_->factors.size(); ++i) {
    const auto n = static_cast<std::size_t>(data_->factors[i]);
    const std::size_t a = g / data_->strides[i] % n;
    const std::size_t b = h / data_->strides[i] % n;
    idx += (a + b) % n * data_->strides[i];
  }
  return idx;
}

std::size_t AbelianGroup::inverse_index(std::size_t g) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < data_->factors.size(); ++i) {
    const auto n = static_cast<std::size_t>(data_->factors[i]);
    const std::size_t a = g / data_->strides[i] % n;
    idx += (n - a) % n * data_->strides[i];
  }
  return idx;
}

std::size_t AbelianGroup::pow_index(std::size_t g, long exponent) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < data_->factors.size(); ++i) {
    const long n = data_->factors[i];
    const long a = static_cast<long>(g / data_->strides[i] % static_cast<std::size_t>(n));
    long e = ((a * (exponent % n)) % n + n) % n;
    idx += static_cast<std::size_t>(e) * data_->strides[i];
  }
  return idx;
}

std::size_t AbelianGroup::element_order(std::size_t g) const {
  std::size_t ord = 1;
  for (std::size_t i = 0; i < data_->factors.size(); ++i) {
    const auto n = static_cast<std::size_t>(data_->factors[i]);
    const std::size_t a = g / data_->strides[i] % n;
    const std::size_t local = n / std::gcd(n, a);
    ord = std::lcm(ord, local);
  }
  return ord;
}

GroupElement AbelianGroup::element(std::size_t index) const {
  return GroupElement(*this, coords_at(index));
}

GroupElement AbelianGroup::element(const std::vector<int>& coords) const {
  return GroupElement(*this, coords);
}

GroupElement AbelianGroup::identity() const {
  return GroupElement(*this, std::vector<int>(num_factors(), 0));
}

GroupElement AbelianGroup::factor_generator(std::size_t i) const {
  if (i >= num_factors()) {
    throw std::invalid_argument("AbelianGroup::factor_generator: no such factor");
  }
  std::vector<int> coords(num_factors(), 0);
  coords[i] = 1;
  return GroupElement(*this, coords);
}

std::vector<GroupElement> AbelianGroup::enumerate() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  for (std::size_t i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

GroupElement::GroupElement(AbelianGroup group, std::vector<int> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  index_ = group_.index_of(coords_);
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (group_ != other.group_) {
    throw GroupMismatchError("GroupElement::mul: elements of different groups");
  }
  return group_.element(group_.mul_index(index_, other.index_));
}

GroupElement GroupElement::inverse() const {
  return group_.element(group_.inverse_index(index_));
}

GroupElement GroupElement::pow(long exponent) const {
  return group_.element(group_.pow_index(index_, exponent));
}

bool GroupElement::operator==(const GroupElement& other) const {
  if (group_ != other.group_) {
    throw GroupMismatchError("GroupElement::eq: elements of different groups");
  }
  return index_ == other.index_;
}

GroupElement mul(const GroupElement& g, const GroupElement& h) { return g * h; }
GroupElement inverse(const GroupElement& g) { return g.inverse(); }

Subgroup::Subgroup(AbelianGroup parent, std::vector<std::size_t> element_indices)
    : parent_(std::move(parent)), indices_(std::move(element_indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  member_.assign(parent_.order(), false);
  for (std::size_t i : indices_) {
    if (i >= parent_.order()) {
      throw std::invalid_argument("Subgroup: element index out of range");
    }
    member_[i] = true;
  }
  if (indices_.empty() || !member_[0]) {
    throw std::invalid_argument("Subgroup: must contain the identity");
  }
  for (std::size_t a : indices_) {
    if (!member_[parent_.inverse_index(a)]) {
      throw std::invalid_argument("Subgroup: not closed under inverse");
    }
    for (std::size_t b : indices_) {
      if (!member_[parent_.mul_index(a, b)]) {
        throw std::invalid_argument("Subgroup: not closed under product");
      }
    }
  }
}

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(indices_.size());
  for (std::size_t i : indices_) out.push_back(parent_.element(i));
  return out;
}

namespace {

// Spec grammar: group := term ("x" term)* ; term := "C" integer.
std::vector<std::string> split_terms(const std::string& spec) {
  std::string compact;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw ParseError("group spec: empty input");
  std::vector<std::string> terms;
  std::string current;
  for (char c : compact) {
    if (c == 'x' || c == 'X') {
      if (current.empty()) throw ParseError("group spec: empty term before 'x'");
      terms.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (current.empty()) throw ParseError("group spec: trailing 'x'");
  terms.push_back(current);
  return terms;
}

int parse_term(const std::string& term) {
  if (term.size() < 2 || (term[0] != 'C' && term[0] != 'c')) {
    throw ParseError("group spec: bad term '" + term + "' (expected C<n>)");
  }
  const std::string digits = term.substr(1);
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("group spec: bad term '" + term + "' (expected C<n>)");
    }
  }
  if (digits.size() > 9) {
    throw ParseError("group spec: factor too large in '" + term + "'");
  }
  const int n = std::stoi(digits);
  if (n < 1) {
    throw ParseError("group spec: factor must be >= 1 in '" + term + "'");
  }
  return n;
}

}  // namespace

AbelianGroup parse_group_spec(const std::string& spec) {
  const auto terms = split_terms(spec);
  std::vector<int> factors;
  factors.reserve(terms.size());
  for (const auto& term : terms) factors.push_back(parse_term(term));
  const bool has_c1 =
      std::any_of(factors.begin(), factors.end(), [](int n) { return n == 1; });
  if (has_c1) {
    if (factors.size() != 1) {
      throw ParseError("group spec: 'C1' must appear alone");
    }
    return AbelianGroup();
  }
  return AbelianGroup(std::move(factors));
}

Subgroup squares_subgroup(const AbelianGroup& A) {
  std::vector<std::size_t> image;
  for (std::size_t g = 0; g < A.order(); ++g) {
    image.push_back(A.mul_index(g, g));
  }
  return Subgroup(A, std::move(image));
}

Subgroup torsion2_subgroup(const AbelianGroup& A) {
  std::vector<std::size_t> kernel;
  for (std::size_t g = 0; g < A.order(); ++g) {
    if (A.mul_index(g, g) == A.identity_index()) kernel.push_back(g);
  }
  return Subgroup(A, std::move(kernel));
}

namespace {

std::vector<std::vector<int>> partitions_of(int n) {
  // Partitions in descending part order, largest-first lexicographic.
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::map<long, int> factorize(std::size_t n) {
  std::map<long, int> out;
  for (long p = 2; static_cast<std::size_t>(p) * p <= n; ++p) {
    while (n % static_cast<std::size_t>(p) == 0) {
      ++out[p];
      n /= static_cast<std::size_t>(p);
    }
  }
  if (n > 1) ++out[static_cast<long>(n)];
  return out;
}

}  // namespace

std::vector<std::vector<int>> abelian_group_types(std::size_t order) {
  if (order == 0) throw std::invalid_argument("abelian_group_types: order 0");
  if (order == 1) return {{}};
  const auto primes = factorize(order);
  // One partition choice per prime; combine into invariant factors
  // d_i = prod_p p^(lambda_p[i]) with each partition padded by zeros. The
  // result is a divisibility chain, largest factor first.
  std::vector<std::vector<std::vector<int>>> choices;
  for (const auto& [p, e] : primes) choices.push_back(partitions_of(e));
  std::vector<std::vector<int>> result;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::size_t num_parts = 0;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      num_parts = std::max(num_parts, choices[i][pick[i]].size());
    }
    std::vector<int> factors(num_parts, 1);
    std::size_t prime_index = 0;
    for (const auto& [p, e] : primes) {
      const auto& parts = choices[prime_index][pick[prime_index]];
      for (std::size_t i = 0; i < parts.size(); ++i) {
        long pe = 1;
        for (int k = 0; k < parts[i]; ++k) pe *= p;
        factors[i] *= static_cast<int>(pe);
      }
      ++prime_index;
    }
    result.push_back(std::move(factors));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a > b; });
  return result;
}

std::vector<std::vector<int>> abelian_group_types_up_to(std::size_t max_order) {
  std::vector<std::vector<int>> out;
  for (std::size_t n = 2; n <= max_order; ++n) {
    auto types = abelian_group_types(n);
    out.insert(out.end(), types.begin(), types.end());
  }
  return out;
}

}  // namespace abelatt
