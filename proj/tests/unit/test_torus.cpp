#include <map>
#include <set>

#include "coxrep/torus.hpp"
#include "doctest.h"

using namespace coxrep;

namespace {

TorusPtr torus(int p, int k, int r, RingMode mode = RingMode::Mixed) {
  return CoxeterTorus::build(Ring::make(p, k, r, mode));
}

// psi(Tr(x tau)) in units of 1/e, computed from scratch.
std::int64_t pairing(const CoxeterTorus& t, std::uint32_t x, std::uint32_t tau) {
  const ExtRing& fe = t.ext().residue_ext();
  const Ring& f = t.ring().residue_field();
  const Code tr = fe.trace(fe.mul(fe.from_index(x), fe.from_index(tau)));
  return f.field_trace_to_prime(tr) * (t.exponent() / t.ring().p()) % t.exponent();
}

}  // namespace

TEST_CASE("torus orders") {
  CHECK(torus(2, 1, 1)->order() == 3);
  CHECK(torus(3, 1, 2)->order() == 72);
  CHECK(torus(2, 2, 2, RingMode::Equal)->order() == 16 * 15);
  for (auto mode : {RingMode::Mixed, RingMode::Equal})
    for (int r = 1; r <= 3; ++r) {
      const auto t = torus(2, 1, r, mode);
      CHECK(t->order() == (1u << (2 * (r - 1))) * 3);
    }
}

TEST_CASE("embedding is a homomorphism with det = norm and trace = trace") {
  for (auto mode : {RingMode::Mixed, RingMode::Equal}) {
    const auto t = torus(3, 1, 2, mode);
    const MatOps ops(t->ring());
    for (std::uint32_t i = 0; i < t->order(); ++i) {
      const Mat2 m = t->embed(i);
      CHECK(ops.det(m) == t->ext().norm(t->element(i)));
      CHECK(ops.trace(m) == t->ext().trace(t->element(i)));
      for (std::uint32_t j = 0; j < t->order(); j += 5)
        CHECK(ops.mul(m, t->embed(j)) == t->embed(t->group().mul(i, j)));
    }
    std::set<std::uint64_t> images;
    for (std::uint32_t i = 0; i < t->order(); ++i) images.insert(ops.pack(t->embed(i)));
    CHECK(images.size() == t->order());
  }
}

TEST_CASE("embed(sigma t) is GL2-conjugate to embed(t)") {
  const auto t = torus(3, 1, 2);
  const auto G = enumerate_group(t->ring_ptr(), Flavor::GL);
  const MatOps& ops = G->ops();
  for (std::uint32_t i = 0; i < t->order(); ++i) {
    const auto a = G->index_of(t->embed(i));
    const auto b = G->index_of(t->embed(t->sigma(i)));
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    CHECK(G->class_of(static_cast<std::uint32_t>(a)) == G->class_of(static_cast<std::uint32_t>(b)));
  }
  (void)ops;
}

TEST_CASE("dual group: count, trivial, distinct value vectors") {
  const auto t = torus(3, 1, 2);
  std::set<std::vector<std::int64_t>> seen;
  bool trivial = false;
  for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
    const auto th = t->character(n);
    std::vector<std::int64_t> v;
    for (std::uint32_t i = 0; i < t->order(); ++i) v.push_back(t->evaluate(th, i));
    trivial = trivial || std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
    seen.insert(v);
  }
  CHECK(seen.size() == 72);
  CHECK(trivial);
}

TEST_CASE("tau satisfies the defining identity on the whole top layer") {
  for (auto [p, k, r] : {std::tuple{3, 1, 2}, std::tuple{2, 1, 2}, std::tuple{2, 1, 3}, std::tuple{2, 2, 2}}) {
    const auto t = torus(p, k, r);
    const std::uint32_t q2 = t->q() * t->q();
    std::map<std::uint32_t, int> hits;
    for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
      const auto th = t->character(n);
      const auto tau = tau_of(*t, th);
      ++hits[tau];
      for (std::uint32_t x = 0; x < q2; ++x) {
        const ExtElem e = t->ext().add(t->ext().one(), t->ext().scale(t->ring().pi_power(r - 1), t->ext().lift(x)));
        CHECK(t->evaluate(th, t->index(e)) == pairing(*t, x, tau));
      }
    }
    CHECK(hits.size() == q2);
    CHECK(hits[0] >= 1);
  }
  CHECK(tau_of(*torus(3, 1, 2), torus(3, 1, 2)->group().trivial_character()) == 0);
  CHECK_THROWS_AS(tau_of(*torus(3, 1, 1), torus(3, 1, 1)->group().trivial_character()), std::invalid_argument);
}

TEST_CASE("tau of theta o sigma is sigma(tau)") {
  const auto t = torus(3, 1, 2);
  const ExtRing& fe = t->ext().residue_ext();
  for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
    const auto th = t->character(n);
    const auto tau = tau_of(*t, th);
    CHECK(tau_of(*t, t->compose_sigma(th)) == fe.index(fe.frobenius(fe.from_index(tau))));
  }
}

TEST_CASE("conductor examples") {
  const auto t = torus(3, 1, 2);
  const auto& U = t->units().group();
  const auto c1 = conductor(*t, t->group().trivial_character());
  CHECK(c1.r0 == 1);
  CHECK(t->at_level(1).group().is_trivial(c1.theta0));
  CHECK(U.is_trivial(c1.alpha));
  for (std::uint64_t a = 1; a < U.dual_size(); ++a) {
    const auto alpha = U.character(a);
    const auto c = conductor(*t, t->norm_pullback(alpha));
    CHECK(c.r0 == 1);
    CHECK(t->at_level(1).group().is_trivial(c.theta0));
    CHECK(c.alpha == U.inverse(alpha));
  }
}

TEST_CASE("brute-force conductor equals peeling, both modes, q in {2,3}, r <= 3") {
  for (auto mode : {RingMode::Mixed, RingMode::Equal})
    for (int p : {2, 3})
      for (int r = 1; r <= 3; ++r) {
        const auto t = torus(p, 1, r, mode);
        for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
          const auto th = t->character(n);
          const auto peeled = conductor_by_peeling(*t, th).first;
          const bool regular = r >= 2 && is_regular_tau(*t, tau_of(*t, th));
          const int expected = regular ? r : conductor_brute_force(*t, th);
          CHECK(peeled == expected);
          const auto c = conductor(*t, th);
          CHECK(c.r0 == expected);
          if (c.r0 > 1) CHECK(is_regular_tau(t->at_level(c.r0), tau_of(t->at_level(c.r0), c.theta0)));
        }
      }
}

TEST_CASE("conductor is twist-stable and inflation preserves level") {
  const auto t = torus(3, 1, 2);
  const auto& U = t->units().group();
  for (std::uint64_t n = 0; n < t->dual_size(); n += 7) {
    const auto th = t->character(n);
    const int r0 = conductor(*t, th).r0;
    for (std::uint64_t a = 0; a < U.dual_size(); ++a)
      CHECK(conductor(*t, t->group().multiply(th, t->norm_pullback(a))).r0 == r0);
  }
  const auto t3 = torus(2, 1, 3);
  for (std::uint64_t n = 0; n < t3->at_level(2).dual_size(); ++n) {
    const auto low = t3->at_level(2).character(n);
    const auto up = t3->inflate_from(low, 2);
    CHECK(t3->level_of(up) == t3->at_level(2).level_of(low));
    CHECK(t3->descend(up, 2) == low);
    if (is_regular_tau(t3->at_level(2), tau_of(t3->at_level(2), low))) CHECK(conductor(*t3, up).r0 == 2);
  }
}

TEST_CASE("regular characters have trivial Weyl stabiliser; 24 sigma-orbits at q=3, r=2") {
  const auto t = torus(3, 1, 2);
  int regular = 0;
  for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
    const auto th = t->character(n);
    const auto c = classify(*t, th);
    if (c.is_regular) {
      ++regular;
      CHECK(c.stab_size == 1);
    }
  }
  CHECK(regular / 2 == 24);
  CHECK(weyl_stabilizer(*t, t->group().trivial_character()) == 2);
}

TEST_CASE("regularity and conductor do not depend on psi") {
  const auto t = torus(3, 1, 2);
  for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
    const auto th = t->character(n);
    const auto a = classify(*t, th, {1});
    const auto b = classify(*t, th, {2});
    CHECK(a.is_regular == b.is_regular);
    CHECK(a.cond.r0 == b.cond.r0);
  }
}

TEST_CASE("general position at level one") {
  const auto t = torus(3, 1, 1);
  int gp = 0;
  for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
    const auto th = t->character(n);
    const auto o = t->group().character_order(th);
    // theta of order dividing q+1 = 4 but not q-1 = 2 satisfies theta != theta^q.
    if (o == 4) CHECK(general_position(*t, th));
    gp += general_position(*t, th) ? 1 : 0;
  }
  CHECK(gp == 8 - 2);
}

TEST_CASE("norm-one subgroup and SL flags") {
  const auto t = torus(3, 1, 1);
  CHECK(t->norm_one_group().order() == 4);
  int order_two = 0;
  for (std::uint64_t n = 0; n < t->norm_one_group().dual_size(); ++n)
    order_two += t->norm_one_group().character_order(t->norm_one_group().character(n)) == 2 ? 1 : 0;
  CHECK(order_two == 1);
  CHECK(t->norm_one_group().is_trivial(t->restrict_to_norm_one(t->group().trivial_character())));

  const auto t2 = torus(2, 1, 2);
  bool even_split = false;
  for (std::uint64_t n = 0; n < t2->dual_size(); ++n) {
    const auto c = classify(*t2, t2->character(n));
    if (c.is_regular && c.even_split) even_split = true;
  }
  CHECK(even_split);
}
