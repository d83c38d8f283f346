#include <set>

#include "coxrep/weyl.hpp"
#include "doctest.h"

using namespace coxrep;

namespace {

// Number of partitions of n, by the standard recursion on the largest part.
int partitions(int n, int max) {
  if (n == 0) return 1;
  int s = 0;
  for (int k = 1; k <= std::min(n, max); ++k) s += partitions(n - k, k);
  return s;
}

}  // namespace

TEST_CASE("root system sizes and Weyl group orders") {
  for (auto t : {CartanType::A, CartanType::B, CartanType::C, CartanType::D})
    for (int n = (t == CartanType::D ? 2 : 1); n <= 4; ++n) {
      const RootSystem rs(t, n);
      CHECK(rs.weyl_group().size() == rs.expected_weyl_order());
      CHECK(rs.positive_roots().size() == rs.expected_positive_roots());
      CHECK(rs.roots().size() == 2 * rs.positive_roots().size());
      CHECK(rs.simple_reflections().size() == static_cast<std::size_t>(rs.semisimple_rank()));
      // W permutes the roots.
      const std::set<std::vector<std::int64_t>> roots(rs.roots().begin(), rs.roots().end());
      for (const auto& w : rs.weyl_group())
        for (const auto& a : rs.roots()) CHECK(roots.count(w.apply(a)) == 1);
    }
}

TEST_CASE("signed permutation algebra") {
  const RootSystem rs(CartanType::B, 3);
  for (const auto& x : rs.weyl_group()) {
    CHECK((x * x.inverse()).is_identity());
    const std::vector<std::int64_t> v{1, 2, 5};
    CHECK(x.apply(x.inverse().apply(v)) == v);
  }
  const auto& W = rs.weyl_group();
  for (std::size_t i = 0; i < W.size(); i += 7)
    for (std::size_t j = 0; j < W.size(); j += 11) {
      const std::vector<std::int64_t> v{3, -1, 4};
      CHECK((W[i] * W[j]).apply(v) == W[i].apply(W[j].apply(v)));
    }
}

TEST_CASE("Coxeter numbers") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(RootSystem(CartanType::A, n).order(RootSystem(CartanType::A, n).coxeter_element()) == n);
    CHECK(RootSystem(CartanType::B, n).order(RootSystem(CartanType::B, n).coxeter_element()) == 2 * n);
    CHECK(RootSystem(CartanType::C, n).order(RootSystem(CartanType::C, n).coxeter_element()) == 2 * n);
  }
  for (int n = 3; n <= 5; ++n)
    CHECK(RootSystem(CartanType::D, n).order(RootSystem(CartanType::D, n).coxeter_element()) == 2 * n - 2);
}

TEST_CASE("twisted fixed subgroup") {
  const RootSystem a1(CartanType::A, 2);
  CHECK(a1.twisted_fixed_subgroup(a1.coxeter_element(), SignedPerm::identity(2)).size() == 2);
  for (int n = 2; n <= 5; ++n) {
    const RootSystem rs(CartanType::A, n);
    const auto id = SignedPerm::identity(n);
    CHECK(rs.twisted_fixed_subgroup(rs.coxeter_element(), id).size() == static_cast<std::size_t>(n));
    CHECK(rs.twisted_fixed_subgroup(id, id).size() == rs.weyl_group().size());
    for (const auto& w : rs.twist_classes()) CHECK(rs.weyl_group().size() % rs.twisted_fixed_subgroup(w, id).size() == 0);
  }
}

TEST_CASE("twist classes: partitions for S_n, class equation") {
  for (int n = 1; n <= 5; ++n) {
    const RootSystem rs(CartanType::A, n);
    const auto reps = rs.twist_classes();
    CHECK(reps.size() == static_cast<std::size_t>(partitions(n, n)));
    std::size_t total = 0;
    const auto id = SignedPerm::identity(n);
    for (const auto& w : reps) total += rs.weyl_group().size() / rs.twisted_fixed_subgroup(w, id).size();
    CHECK(total == rs.weyl_group().size());
  }
  // B_n classes are pairs of partitions (a, b) with |a| + |b| = n: 5 for n = 2, 10 for n = 3.
  CHECK(RootSystem(CartanType::B, 2).twist_classes().size() == 5);
  CHECK(RootSystem(CartanType::B, 3).twist_classes().size() == 10);
}

TEST_CASE("F_q-ranks") {
  const RootSystem a1(CartanType::A, 2);
  const auto c = a1.coxeter_element();
  CHECK(fq_ranks(a1, c).torus == 1);
  CHECK(fq_ranks(a1, c).group == 2);
  CHECK(fq_ranks(a1, c, true).torus == 0);
  CHECK(fq_ranks(a1, c, true).group == 1);
  const RootSystem a4(CartanType::A, 5);
  for (const auto& w : a4.twist_classes()) {
    const auto ct = cycle_type(w);
    CHECK(fq_ranks(a4, w).torus == static_cast<int>(ct.positive.size()));
  }
  CHECK(fq_ranks(a4, SignedPerm::identity(5)).torus == 5);
  const RootSystem b3(CartanType::B, 3);
  CHECK(fq_ranks(b3, b3.coxeter_element()).torus == 0);
}

TEST_CASE("conjecture sign worked values") {
  const auto six = conjecture_sign(1, 2, 3, 3, 6, 1);
  CHECK(six.applicable);
  CHECK(six.exponent == 6);
  CHECK(six.sign == 1);
  const auto one_minus_q = conjecture_sign(1, 2, 3, 3, -2, 1);
  CHECK(one_minus_q.exponent == 3);
  CHECK(one_minus_q.sign == -1);
  // SL_2, theta = 1.
  CHECK(conjecture_sign(0, 1, 5, 5, -4, 1).sign == -1);
  // Non-integer exponent: |dim|_p = 2 with q = 4 gives log_q = 1/2.
  const auto half = conjecture_sign(1, 2, 4, 2, 6, 1);
  CHECK_FALSE(half.applicable);
  CHECK(half.exponent == mpq_class(9, 2));
  CHECK_FALSE(conjecture_sign(1, 1, 3, 3, 2, 0).applicable);
  CHECK_THROWS(conjecture_sign(1, 2, 3, 3, 0, 1));
  CHECK_THROWS(conjecture_sign(1, 2, 6, 2, 5, 1));
}

TEST_CASE("conjecture sign ignores the sign and p'-part of dim") {
  for (long d : {1L, 2L, 9L, 18L, 27L, 54L, 81L})
    for (long s : {1L, -1L, 5L, 7L}) {
      const auto a = conjecture_sign(1, 2, 3, 3, d, 1);
      const auto b = conjecture_sign(1, 2, 3, 3, d * s, 1);
      CHECK(a.applicable == b.applicable);
      CHECK(a.sign == b.sign);
      CHECK(a.exponent == b.exponent);
    }
}

TEST_CASE("classical degrees") {
  const RootSystem a1(CartanType::A, 2);
  CHECK(classical_r1_dim(a1, a1.coxeter_element(), 3) == 2);
  CHECK(classical_r1_dim(a1, SignedPerm::identity(2), 3) == 4);
  // GL_3, Coxeter torus: (q-1)(q^2-1)(q^3-1) / (q^3-1) = (q-1)^2 (q+1).
  const RootSystem a2(CartanType::A, 3);
  for (long q : {2L, 3L, 4L, 5L}) CHECK(classical_r1_dim(a2, a2.coxeter_element(), q) == (q - 1) * (q - 1) * (q + 1));
  // Sp_4, Coxeter torus T = q^2 + 1: (q^2-1)(q^4-1)/(q^2+1) = (q^2-1)^2.
  const RootSystem c2(CartanType::C, 2);
  for (long q : {2L, 3L}) CHECK(classical_r1_dim(c2, c2.coxeter_element(), q) == (q * q - 1) * (q * q - 1));
}

TEST_CASE("classical sweep: type A, n <= 5, every twist, every q") {
  const auto rows = sweep_conjecture({});
  std::size_t expected = 0;
  for (int n = 2; n <= 5; ++n) expected += static_cast<std::size_t>(partitions(n, n)) * 7;
  CHECK(rows.size() == expected);
  for (const auto& r : rows) {
    CHECK(r.conj.applicable);
    CHECK(r.conj.p_part == 1);
    CHECK(r.agrees);
  }
  CHECK(sweep_tsv(rows).find("fail") == std::string::npos);
}

TEST_CASE("classical sweep over B, C, D stays integral") {
  SweepOptions o;
  o.types = {CartanType::B, CartanType::C, CartanType::D};
  o.n_min = 2;
  o.n_max = 3;
  o.qs = {2, 3};
  for (const auto& r : sweep_conjecture(o)) {
    CHECK(r.conj.applicable);
    CHECK(r.agrees);
  }
}
