#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "coxrep/cyclo.hpp"
#include "doctest.h"

using namespace coxrep;

namespace {

// Floating-point evaluation at exp(2 pi i / order), an independent oracle.
std::complex<double> eval(const Cyclo& x) {
  std::complex<double> s = 0;
  const double t = 2 * std::numbers::pi / x.order();
  for (std::size_t j = 0; j < x.coeffs().size(); ++j)
    s += static_cast<double>(x.coeffs()[j]) * std::polar(1.0, t * static_cast<double>(j));
  return s;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(CycloBasis::get(1).phi == std::vector<std::int64_t>{-1, 1});
  CHECK(CycloBasis::get(4).phi == std::vector<std::int64_t>{1, 0, 1});
  CHECK(CycloBasis::get(6).phi == std::vector<std::int64_t>{1, -1, 1});
  CHECK(CycloBasis::get(12).phi == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (int n : {5, 8, 9, 15, 21, 24}) {
    int phi = 0;
    for (int j = 1; j <= n; ++j) phi += std::gcd(j, n) == 1;
    CHECK(CycloBasis::get(n).degree == phi);
  }
}

TEST_CASE("sums of roots of unity") {
  for (int n : {1, 2, 3, 4, 6, 8, 12, 15}) {
    Cyclo s = 0;
    for (int j = 0; j < n; ++j) s += Cyclo::root_of_unity(n, j);
    CHECK(s == Cyclo(n == 1 ? 1 : 0));
    // Ramanujan sums: the primitive roots sum to mu(n).
    Cyclo prim = 0;
    for (int j = 1; j <= n; ++j)
      if (std::gcd(j, n) == 1) prim += Cyclo::root_of_unity(n, j);
    CHECK(prim.is_rational());
    CHECK(close(eval(prim), eval(Cyclo(prim.to_integer()))));
  }
  CHECK(Cyclo::root_of_unity(3, 1) + Cyclo::root_of_unity(3, 2) == Cyclo(-1));
}

TEST_CASE("arithmetic matches complex evaluation") {
  const std::vector<Cyclo> xs = {
      Cyclo::root_of_unity(12, 5), Cyclo::from_multiplicities(8, {1, 2, 0, -1, 3, 0, 0, 1}),
      Cyclo(7), Cyclo::root_of_unity(3, 1) * 4 + Cyclo(2), Cyclo::root_of_unity(5, 2) - Cyclo::root_of_unity(5, 3)};
  for (const auto& x : xs) {
    CHECK(close(eval(x.conj()), std::conj(eval(x))));
    CHECK(close(eval(-x), -eval(x)));
    for (const auto& y : xs) {
      CHECK(close(eval(x + y), eval(x) + eval(y)));
      CHECK(close(eval(x * y), eval(x) * eval(y)));
      CHECK((x + y) == (y + x));
      CHECK((x * y) == (y * x));
      CHECK((Cyclo::compare(x, y) == 0) == (x == y));
      CHECK(Cyclo::compare(x, y) == -Cyclo::compare(y, x));
    }
    CHECK(x.lifted(120) == x);
    CHECK(close(eval(x.lifted(120)), eval(x)));
  }
}

TEST_CASE("rationality and exact division") {
  const Cyclo z = Cyclo::root_of_unity(7, 1);
  const Cyclo norm_like = z * z.conj();
  CHECK(norm_like.is_rational());
  CHECK(norm_like.to_integer() == 1);
  CHECK_FALSE(z.is_rational());
  CHECK_THROWS(z.to_integer());
  CHECK((z * 6).divided_by(3) == z * 2);
  CHECK_THROWS((z * 5).divided_by(3));
  CHECK(Cyclo(0).is_zero());
  CHECK((z - z).is_zero());
}
