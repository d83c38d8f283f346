#include <algorithm>
#include <map>
#include <numeric>

#include "coxrep/chartab.hpp"
#include "doctest.h"

using namespace coxrep;

namespace {

GroupPtr group(int p, int k, int r, Flavor f, RingMode mode = RingMode::Mixed) {
  return enumerate_group(GroupSpec{p, k, r, mode, f});
}

std::vector<std::int64_t> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

// Brute-force oracle: the permutation character of S_3 acting on F_2^2 \ {0}
// has values (3, 1, 0) on (1, transpositions, 3-cycles), and decomposes as
// trivial + the degree-2 character.
std::int64_t fixed_nonzero_vectors(const MatrixGroup& g, std::uint32_t x) {
  const Mat2 m = g.mat(x);
  const Ring& R = g.ring();
  std::int64_t count = 0;
  for (Code u = 0; u < R.size(); ++u)
    for (Code v = 0; v < R.size(); ++v) {
      if (u == 0 && v == 0) continue;
      const Code u2 = R.add(R.mul(m.a, u), R.mul(m.b, v));
      const Code v2 = R.add(R.mul(m.c, u), R.mul(m.d, v));
      if (u2 == u && v2 == v) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("GL2(F2) has degrees 1,1,2") {
  const auto G = group(2, 1, 1, Flavor::GL);
  const auto t = character_table(G);
  CHECK(sorted_degrees(t) == std::vector<std::int64_t>{1, 1, 2});
  Character perm{G, {}, false, true};
  for (auto rep : G->classes().reps) perm.values.emplace_back(fixed_nonzero_vectors(*G, rep));
  const auto m = t.decompose(perm);
  CHECK(std::accumulate(m.begin(), m.end(), Rational(0)) == 2);
  CHECK(m[static_cast<std::size_t>(t.find(trivial_character(G)))] == 1);
}

TEST_CASE("GL2(F3) has 8 irreducibles with degree-square sum 48") {
  const auto G = group(3, 1, 1, Flavor::GL);
  const auto t = character_table(G);
  CHECK(t.size() == 8);
  std::int64_t s = 0;
  for (auto d : t.degrees()) s += d * d;
  CHECK(s == 48);
  CHECK(validate_table(t).ok());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) CHECK(inner_product(t[i], t[j]) == (i == j ? 1 : 0));
}

TEST_CASE("Steinberg character and 1 - St") {
  const auto G = group(3, 1, 1, Flavor::GL);
  const auto t = character_table(G);
  const auto st = steinberg(G);
  CHECK(st.degree() == 3);
  CHECK(t.find(st) >= 0);
  const auto v = trivial_character(G) - st;
  CHECK(inner_product(v, v) == 2);
  CHECK(steinberg(group(2, 1, 1, Flavor::GL)).degree() == 2);
  const auto S = group(3, 1, 1, Flavor::SL);
  const auto sst = steinberg(S);
  CHECK(sst.degree() == 3);
  CHECK(inner_product(sst, sst) == 1);
}

TEST_CASE("Induction from the Borel and Frobenius reciprocity") {
  const auto G = group(3, 1, 1, Flavor::GL);
  const auto B = borel_subgroup(*G);
  const auto inc = inclusion_map(*B, *G);
  CHECK(induce(trivial_character(B), G, inc).degree() == 4);

  const auto G2 = group(2, 1, 1, Flavor::GL);
  const auto B2 = borel_subgroup(*G2);
  const auto inc2 = inclusion_map(*B2, *G2);
  const auto tg = character_table(G2);
  const auto tb = character_table(B2);
  for (const auto& chi : tg.irreducibles())
    for (const auto& psi : tb.irreducibles())
      CHECK(inner_product(induce(psi, G2, inc2), chi) == inner_product(psi, restrict_to(chi, B2, inc2)));
}

TEST_CASE("abelian groups have only linear characters") {
  const auto G = group(3, 1, 1, Flavor::GL);
  // Diagonal torus of GL2(F3).
  std::vector<std::uint32_t> diag;
  for (std::uint32_t i = 0; i < G->size(); ++i) {
    const Mat2 m = G->mat(i);
    if (m.b == 0 && m.c == 0) diag.push_back(i);
  }
  const auto T = subgroup_from_elements(*G, diag, "diag");
  const auto t = character_table(T);
  CHECK(t.size() == 4);
  for (auto d : t.degrees()) CHECK(d == 1);
}

TEST_CASE("inflation and adjunction from level two") {
  for (int p : {2, 3}) {
    const auto G2 = group(p, 1, 2, Flavor::GL);
    const auto G1 = group(p, 1, 1, Flavor::GL);
    const auto hom = reduction_hom(*G2, *G1);
    const auto t1 = character_table(G1);
    const auto t2 = character_table(G2);
    for (const auto& a : t1.irreducibles())
      for (const auto& b : t1.irreducibles()) {
        const auto ia = inflate(a, G2, hom), ib = inflate(b, G2, hom);
        CHECK(ia.degree() == a.degree());
        CHECK(inner_product(ia, ib) == inner_product(a, b));
        CHECK(t2.find(ia) >= 0);
      }
    for (const auto& chi : t1.irreducibles())
      for (const auto& psi : t2.irreducibles()) {
        const auto s = adjunction_sides(chi, psi, hom);
        CHECK(s.lhs == s.rhs);
      }
  }
}

TEST_CASE("twisting by alpha(det) permutes the irreducibles of GL2(Z/4)") {
  const auto G = group(2, 1, 2, Flavor::GL);
  const auto t = character_table(G);
  const UnitGroup units(G->ring_ptr());
  for (std::uint64_t a = 0; a < units.group().dual_size(); ++a) {
    const auto alpha = units.group().character(a);
    std::vector<std::int64_t> image;
    for (const auto& chi : t.irreducibles()) {
      const auto tw = tensor_linear(chi, units, alpha);
      CHECK(tw.degree() == chi.degree());
      image.push_back(t.find(tw));
    }
    std::sort(image.begin(), image.end());
    std::vector<std::int64_t> all(t.size());
    std::iota(all.begin(), all.end(), 0);
    CHECK(image == all);
    if (a == 0) CHECK(tensor_linear(t[3], units, alpha) == t[3]);
  }
}

TEST_CASE("inner product rejects mismatched groups") {
  const auto a = trivial_character(group(2, 1, 1, Flavor::GL));
  const auto b = trivial_character(group(3, 1, 1, Flavor::GL));
  CHECK_THROWS_AS(inner_product(a, b), GroupMismatch);
}
