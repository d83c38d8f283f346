#include <numeric>

#include "coxrep/matgroup.hpp"
#include "doctest.h"

using namespace coxrep;

namespace {

std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t x = 1;
  for (int i = 0; i < e; ++i) x *= b;
  return x;
}

}  // namespace

TEST_CASE("group orders match the closed forms") {
  for (auto flavor : {Flavor::GL, Flavor::SL})
    for (auto mode : {RingMode::Mixed, RingMode::Equal})
      for (auto [p, k, r] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {3, 1, 1}, {2, 2, 1}, {2, 1, 2}, {3, 1, 2}, {2, 1, 3}}) {
        const GroupSpec spec{p, k, r, mode, flavor};
        const std::uint64_t q = power(p, k);
        const std::uint64_t level_one = flavor == Flavor::GL ? (q * q - 1) * (q * q - q) : q * (q * q - 1);
        const std::uint64_t expected = level_one * power(q, (flavor == Flavor::GL ? 4 : 3) * (r - 1));
        CHECK(spec.expected_order() == expected);
        const auto G = enumerate_group(spec);
        CAPTURE(spec.key());
        CHECK(G->size() == expected);
        CHECK(G->generated_order() == expected);
        CHECK(G->mat(0) == G->ops().identity());
      }
}

TEST_CASE("class counts of GL2 and SL2 over finite fields") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {7, 1}}) {
    const std::uint64_t q = power(p, k);
    const auto gl = enumerate_group(GroupSpec{p, k, 1, RingMode::Mixed, Flavor::GL});
    const auto sl = enumerate_group(GroupSpec{p, k, 1, RingMode::Mixed, Flavor::SL});
    CHECK(gl->classes().count() == q * q - 1);
    CHECK(sl->classes().count() == (q % 2 == 0 ? q + 1 : q + 4));
  }
}

TEST_CASE("class equation and centralisers") {
  for (auto flavor : {Flavor::GL, Flavor::SL}) {
    const auto G = enumerate_group(GroupSpec{3, 1, 2, RingMode::Equal, flavor});
    const auto& cd = G->classes();
    const auto members = G->class_members();
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < cd.count(); ++c) {
      total += cd.sizes[c];
      CHECK(cd.sizes[c] * cd.centralizer_orders[c] == G->size());
      CHECK(members[c].size() == cd.sizes[c]);
      CHECK(members[c].front() == cd.reps[c]);
    }
    CHECK(total == G->size());
    // Class functions: trace and det are constant on classes.
    for (std::size_t c = 0; c < cd.count(); ++c)
      for (auto x : members[c]) {
        CHECK(G->ops().trace(G->mat(x)) == G->ops().trace(G->mat(cd.reps[c])));
        CHECK(G->det(x) == G->det(cd.reps[c]));
      }
  }
}

TEST_CASE("multiplication, inverses and element orders") {
  const auto G = enumerate_group(GroupSpec{2, 1, 2, RingMode::Mixed, Flavor::GL});
  const Ring& R = G->ring();
  for (std::uint32_t i = 0; i < G->size(); ++i) {
    CHECK(G->mul(i, G->inv(i)) == 0);
    CHECK(G->det(G->mul(i, i)) == R.mul(G->det(i), G->det(i)));
    const auto n = G->element_order(i);
    CHECK(G->size() % n == 0);
    std::uint32_t x = 0;
    for (std::uint32_t j = 0; j < n; ++j) x = G->mul(x, i);
    CHECK(x == 0);
  }
  for (std::uint32_t i = 0; i < G->size(); i += 7)
    for (std::uint32_t j = 0; j < G->size(); j += 11) {
      CHECK(G->det(G->mul(i, j)) == R.mul(G->det(i), G->det(j)));
      CHECK(G->index_of(G->ops().mul(G->mat(i), G->mat(j))) == G->mul(i, j));
    }
}

TEST_CASE("reduction maps are surjective with principal congruence kernels") {
  for (auto flavor : {Flavor::GL, Flavor::SL})
    for (auto mode : {RingMode::Mixed, RingMode::Equal}) {
      const auto big = enumerate_group(GroupSpec{2, 1, 3, mode, flavor});
      const auto small = enumerate_group(GroupSpec{2, 1, 2, mode, flavor});
      const auto hom = reduction_hom(*big, *small);
      CHECK(is_surjective(hom, small->size()));
      CHECK(hom.kernel.size() == big->size() / small->size());
      CHECK(hom.kernel.size() == power(2, flavor == Flavor::GL ? 4 : 3));
      for (std::uint32_t i = 0; i < big->size(); i += 5)
        for (std::uint32_t j = 0; j < big->size(); j += 9)
          CHECK(hom.image[big->mul(i, j)] == small->mul(hom.image[i], hom.image[j]));
    }
}

TEST_CASE("subgroups and embeddings") {
  const GroupSpec spec{3, 1, 1, RingMode::Mixed, Flavor::GL};
  const auto gl = enumerate_group(spec);
  auto sspec = spec;
  sspec.flavor = Flavor::SL;
  const auto sl = enumerate_group(sspec);
  const auto emb = sl_embedding(*sl, *gl);
  for (std::uint32_t i = 0; i < sl->size(); ++i) CHECK(gl->mat(emb[i]) == sl->mat(i));
  const auto B = borel_subgroup(*gl);
  CHECK(B->size() == 2 * 2 * 3);
  for (std::uint32_t i = 0; i < B->size(); ++i) CHECK(B->mat(i).c == 0);
  CHECK(B->generated_order() == B->size());
  const auto incl = inclusion_map(*B, *gl);
  CHECK(incl.size() == B->size());
}

TEST_CASE("size bound and parsing") {
  CHECK_THROWS_AS(enumerate_group(GroupSpec{5, 1, 2, RingMode::Mixed, Flavor::GL}, 1000), SizeBoundExceeded);
  CHECK(parse_flavor("sl") == Flavor::SL);
  CHECK(to_string(Flavor::GL) == "gl");
  CHECK_THROWS(parse_flavor("pgl"));
  CHECK(GroupSpec{3, 1, 2, RingMode::Mixed, Flavor::GL}.key() == "gl_p3_k1_r2_mixed");
}
