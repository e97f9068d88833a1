#include <doctest.h>

#include "abelatt/errors.hpp"
#include "abelatt/exact_linalg.hpp"
#include "abelatt/group_ring.hpp"
#include "helpers.hpp"

using namespace abelatt;
using abelatt::testing::random_integral;
using abelatt::testing::random_nonidentity;
using abelatt::testing::random_rational;

namespace {

GroupRingElement elem(const AbelianGroup& A, std::size_t i) {
  return GroupRingElement::basis(A.element(i));
}

}  // namespace

TEST_CASE("module operations") {
  const AbelianGroup A = parse_group_spec("C6");
  const std::size_t a = 1, b = 4;
  // (a-1) + (b-1) = a + b - 2
  const GroupRingElement lhs = GroupRingElement::aug_gen(A.element(a)) +
                               GroupRingElement::aug_gen(A.element(b));
  const GroupRingElement rhs =
      elem(A, a) + elem(A, b) - GroupRingElement::one(A) * Rat(2);
  CHECK(lhs == rhs);

  // |A| (1 - e_A) has integer coefficients.
  const GroupRingElement scaled =
      (GroupRingElement::one(A) - e_full(A)) * Rat(static_cast<long>(A.order()));
  CHECK(scaled.is_integral());

  const GroupRingElement x = random_rational(A);
  CHECK((x - x).is_zero());
}

TEST_CASE("convolution product") {
  const AbelianGroup A = parse_group_spec("C4xC2");
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t a = random_nonidentity(A);
    const std::size_t b = random_nonidentity(A);
    // (a-1)(b-1) = ab - a - b + 1
    const GroupRingElement prod = GroupRingElement::aug_gen(A.element(a)) *
                                  GroupRingElement::aug_gen(A.element(b));
    const GroupRingElement expanded = elem(A, A.mul_index(a, b)) - elem(A, a) -
                                      elem(A, b) + GroupRingElement::one(A);
    CHECK(prod == expanded);
    CHECK(prod == m_ab(A, a, b));
  }
  // e_A x = aug(x) e_A
  for (int trial = 0; trial < 20; ++trial) {
    const GroupRingElement x = random_integral(A);
    CHECK(e_full(A) * x == e_full(A) * x.augmentation());
    const GroupRingElement y = random_integral(A);
    CHECK(x * y == y * x);
  }
}

TEST_CASE("ring axioms on random triples") {
  for (const char* spec : {"C5", "C4xC2", "C3xC3"}) {
    const AbelianGroup A = parse_group_spec(spec);
    for (int trial = 0; trial < 20; ++trial) {
      const GroupRingElement x = random_rational(A);
      const GroupRingElement y = random_rational(A);
      const GroupRingElement z = random_rational(A);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * GroupRingElement::one(A) == x);
    }
  }
}

TEST_CASE("involution") {
  const AbelianGroup A = parse_group_spec("C6");
  // (a + 2b)~ = a^{-1} + 2 b^{-1}
  const std::size_t a = 1, b = 4;
  const GroupRingElement x = elem(A, a) + elem(A, b) * Rat(2);
  const GroupRingElement expected =
      elem(A, A.inverse_index(a)) + elem(A, A.inverse_index(b)) * Rat(2);
  CHECK(x.involution() == expected);

  for (int trial = 0; trial < 20; ++trial) {
    const GroupRingElement u = random_rational(A);
    const GroupRingElement v = random_rational(A);
    CHECK(u.involution().involution() == u);
    CHECK((u * v).involution() == u.involution() * v.involution());
  }
}

TEST_CASE("augmentation") {
  const AbelianGroup A = parse_group_spec("C5");
  const GroupRingElement prod = m_ab(A, 1, 2);
  CHECK(prod.augmentation() == 0);
  CHECK(e_full(A).augmentation() == 1);
  const GroupRingElement x = GroupRingElement::one(A) * Rat(3) + elem(A, 1) * Rat(2);
  CHECK(x.augmentation() == 5);
}

TEST_CASE("psi") {
  const AbelianGroup A = parse_group_spec("C4xC2");
  const std::size_t a = 3, b = 5;
  CHECK(psi(m_ab(A, a, b)).is_identity());
  CHECK(psi(elem(A, a) + elem(A, b)) == A.element(A.mul_index(a, b)));
  // psi(2a - 2) = a^2
  const GroupRingElement x = elem(A, a) * Rat(2) - GroupRingElement::one(A) * Rat(2);
  CHECK(psi(x) == A.element(A.mul_index(a, a)));
  CHECK_THROWS_AS(psi(e_full(A)), std::domain_error);

  for (int trial = 0; trial < 20; ++trial) {
    const GroupRingElement u = random_integral(A);
    const GroupRingElement v = random_integral(A);
    CHECK(psi(u + v) == psi(u) * psi(v));
  }
}

TEST_CASE("norms of the generating products") {
  // |(a-1)(b-1)|^2 is 8 when a = b = a^{-1}; 6 when a = b or a = b^{-1} with
  // a^2 != 1; 4 otherwise.
  for (const char* spec : {"C4", "C5", "C6", "C2xC2", "C4xC2"}) {
    const AbelianGroup A = parse_group_spec(spec);
    for (std::size_t a = 1; a < A.order(); ++a) {
      for (std::size_t b = 1; b < A.order(); ++b) {
        const Rat nsq = norm_sq(m_ab(A, a, b));
        const bool involution_case = a == b && A.mul_index(a, a) == 0;
        const bool six_case =
            !involution_case && (a == b || a == A.inverse_index(b));
        if (involution_case) {
          CHECK(nsq == 8);
        } else if (six_case) {
          CHECK(nsq == 6);
        } else {
          CHECK(nsq == 4);
        }
      }
    }
  }
}

TEST_CASE("inner product identities") {
  for (const char* spec : {"C5", "C4xC2"}) {
    const AbelianGroup A = parse_group_spec(spec);
    for (int trial = 0; trial < 100; ++trial) {
      const GroupRingElement x = random_integral(A);
      const GroupRingElement y = random_integral(A);
      // <x, y> = coefficient of 1 in x y~.
      CHECK(inner(x, y) == (x * y.involution()).coeff(0));
    }
    for (int trial = 0; trial < 20; ++trial) {
      const GroupRingElement x = random_rational(A);
      const std::size_t g = random_nonidentity(A);
      CHECK(norm_sq(x.translate(g)) == norm_sq(x));
    }
  }
}

TEST_CASE("idempotents") {
  const AbelianGroup A = parse_group_spec("C6");
  const GroupRingElement eA = e_full(A);
  CHECK(eA * eA == eA);
  CHECK(idempotent(squares_subgroup(A)).value.augmentation() == 1);

  for (int trial = 0; trial < 20; ++trial) {
    const GroupRingElement x = random_rational(A);
    CHECK(((GroupRingElement::one(A) - eA) * x).augmentation() == 0);
  }

  const Subgroup T = torsion2_subgroup(A);
  const GroupRingElement eT = idempotent(T).value;
  for (std::size_t b : T.indices()) {
    CHECK(elem(A, b) * eT == eT);
  }
  CHECK(eT * eT == eT);
}

TEST_CASE("left multiplication by 1 - e_A is I - J/n") {
  for (const auto& factors : abelian_group_types_up_to(16)) {
    const AbelianGroup A(factors);
    const std::size_t n = A.order();
    const RatMatrix m =
        (GroupRingElement::one(A) - e_full(A)).left_mult_matrix();
    const Rat w = Rat(1) / Rat(static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(m(i, j) == (i == j ? Rat(Rat(1) - w) : Rat(-w)));
      }
    }
  }
}

TEST_CASE("group ring mismatch raises") {
  const AbelianGroup A = parse_group_spec("C4");
  const AbelianGroup B = parse_group_spec("C2xC2");
  const GroupRingElement x = GroupRingElement::one(A);
  const GroupRingElement y = GroupRingElement::one(B);
  CHECK_THROWS_AS(x + y, GroupMismatchError);
  CHECK_THROWS_AS(x * y, GroupMismatchError);
  CHECK_THROWS_AS(inner(x, y), GroupMismatchError);
}
