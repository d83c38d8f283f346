#include <map>
#include <set>

#include "coxrep/predict.hpp"
#include "coxrep/weyl.hpp"
#include "doctest.h"

using namespace coxrep;

namespace {

TorusPtr torus(int p, int k, int r, RingMode mode = RingMode::Mixed) {
  return CoxeterTorus::build(Ring::make(p, k, r, mode));
}

std::int64_t total(const Prediction& p) {
  std::int64_t s = 0;
  for (const auto& c : p.constituents) s += c.coeff * c.mult * c.dim;
  return s;
}

}  // namespace

TEST_CASE("dimension set") {
  CHECK(dimension_set(3, 3) == std::vector<std::int64_t>{-2, 6, -18});
  CHECK(dimension_set(2, 1) == std::vector<std::int64_t>{-1});
  for (std::int64_t q : {2, 3, 4, 5, 7})
    for (int r = 1; r <= 4; ++r) {
      const auto d = dimension_set(q, r);
      CHECK(std::set<std::int64_t>(d.begin(), d.end()).size() == static_cast<std::size_t>(r));
    }
}

TEST_CASE("sign from dimension") {
  CHECK(sign_from_dim(18, 3) == -1);
  CHECK(sign_from_dim(-18, 3) == -1);
  CHECK(sign_from_dim(2, 3) == -1);
  CHECK(sign_from_dim(6, 3) == 1);
  CHECK(sign_from_dim(1, 2) == -1);
  CHECK_THROWS_AS(sign_from_dim(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(sign_from_dim(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(sign_from_dim(12, 3), std::invalid_argument);
}

TEST_CASE("worked predictions") {
  const auto t = torus(3, 1, 2);
  const auto one = predict_gl2(classify(*t, t->group().trivial_character()), 3, 2);
  CHECK(one.clause == clause::kNonGeneralPosition);
  CHECK(one.total_dim == -2);
  CHECK(one.constituents.size() == 2);
  CHECK(one.constituents[0].dim == 1);
  CHECK(one.constituents[1].dim == 3);
  int regular = 0;
  for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
    const auto c = classify(*t, t->character(n));
    if (!c.is_regular) continue;
    ++regular;
    const auto p = predict_gl2(c, 3, 2);
    CHECK(p.clause == clause::kRegular);
    CHECK(p.total_dim == 6);
    CHECK(p.irreducible_up_to_sign);
  }
  CHECK(regular == 48);

  // q = 2, r = 3: a non-regular character of conductor 2 gives +(q-1)q = +2.
  const auto t3 = torus(2, 1, 3);
  bool seen = false;
  for (std::uint64_t n = 0; n < t3->dual_size(); ++n) {
    const auto c = classify(*t3, t3->character(n));
    if (c.is_regular || c.cond.r0 != 2) continue;
    seen = true;
    const auto p = predict_gl2(c, 2, 3);
    CHECK(p.clause == clause::kDescended);
    CHECK(p.total_dim == 2);
  }
  CHECK(seen);
}

TEST_CASE("SL exceptions") {
  const auto t = torus(3, 1, 1);
  int quadratic = 0;
  for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
    const auto c = classify(*t, t->character(n));
    const auto p = predict_sl2(c, 3, 1);
    if (c.quadratic) {
      ++quadratic;
      CHECK(p.clause == clause::kSlQuadratic);
      CHECK(p.constituents.size() == 2);
      CHECK(p.constituents[0].dim == 1);
      CHECK_FALSE(p.irreducible_up_to_sign);
    }
    CHECK(total(p) == predict_gl2(c, 3, 1).total_dim);
  }
  CHECK(quadratic > 0);

  const auto t2 = torus(2, 1, 2);
  int split = 0;
  for (std::uint64_t n = 0; n < t2->dual_size(); ++n) {
    const auto c = classify(*t2, t2->character(n));
    if (!c.even_split) continue;
    ++split;
    const auto p = predict_sl2(c, 2, 2);
    CHECK(p.clause == clause::kSlEvenSplit);
    CHECK(p.constituents[0].dim == 1);
    CHECK(p.total_dim == 2);
  }
  CHECK(split > 0);
}

TEST_CASE("every prediction lies in the dimension set, with the formula sign and the conjecture sign") {
  for (auto [p, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{5, 1}})
    for (int r = 1; r <= 3; ++r) {
      if (p == 5 && r == 3) continue;
      const auto t = torus(p, k, r);
      const auto q = static_cast<std::int64_t>(t->q());
      const auto dims = dimension_set(q, r);
      for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
        const auto c = classify(*t, t->character(n));
        for (const auto& pred : {predict_gl2(c, q, r), predict_sl2(c, q, r)}) {
          CHECK(std::find(dims.begin(), dims.end(), pred.total_dim) != dims.end());
          CHECK(total(pred) == pred.total_dim);
          CHECK(sign_from_dim(pred.total_dim, q) == pred.sign);
          for (const auto& con : pred.constituents) CHECK(con.dim > 0);
        }
        const auto gl = predict_gl2(c, q, r);
        CHECK(conjecture_sign(1, 2, q, p, gl.total_dim, 1).sign == gl.sign);
        CHECK(conjecture_sign(0, 1, q, p, gl.total_dim, 1).sign == gl.sign);
      }
    }
}

TEST_CASE("prediction is invariant under sigma and under norm twists") {
  const auto t = torus(3, 1, 2);
  const auto& U = t->units().group();
  for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
    const auto th = t->character(n);
    const auto base = predict_gl2(classify(*t, th), 3, 2);
    CHECK(predict_gl2(classify(*t, t->compose_sigma(th)), 3, 2).same_shape(base));
    for (std::uint64_t a = 0; a < U.dual_size(); a += 3)
      CHECK(predict_gl2(classify(*t, t->group().multiply(th, t->norm_pullback(a))), 3, 2).same_shape(base));
  }
}

TEST_CASE("stability consistency for inflated characters") {
  const auto t = torus(2, 1, 3);
  int checked = 0;
  for (std::uint64_t n = 0; n < t->dual_size(); ++n) {
    const auto th = t->character(n);
    const int lvl = t->level_of(th);
    for (int rp = lvl; rp < 3; ++rp) {
      CHECK(stability_consistency(*t, th, rp));
      ++checked;
    }
    if (lvl == 3) CHECK_THROWS_AS(stability_consistency(*t, th, 2), std::invalid_argument);
  }
  CHECK(checked > 0);
  CHECK(stability_consistency(*t, t->group().trivial_character(), 1));
}
