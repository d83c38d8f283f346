#pragma once

// Exact elements of Z[zeta_e].
//
// A value is stored in the power basis 1, z, ..., z^{phi(e)-1} after reduction
// modulo the e-th cyclotomic polynomial, which makes the representation
// canonical for a fixed e.  Values with different e are compared and combined
// in Z[zeta_lcm].

#include <cstdint>
#include <string>
#include <vector>

namespace coxrep {

/// Per-order data: Phi_e and the reductions of z^j for 0 <= j < e.
struct CycloBasis {
  int order = 1;
  int degree = 1;  // phi(order)
  std::vector<std::int64_t> phi;                   // monic, low degree first, length degree+1
  std::vector<std::vector<std::int64_t>> powers;   // powers[j] = z^j reduced, length degree

  static const CycloBasis& get(int order);
  /// Reduce a polynomial in z of any length (indices taken mod order).
  std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& poly) const;
};

class Cyclo {
 public:
  Cyclo() : Cyclo(0) {}
  /// The rational integer n.
  Cyclo(std::int64_t n);  // NOLINT(google-explicit-constructor)
  /// Coefficients in the reduced power basis of Z[zeta_order].
  Cyclo(int order, std::vector<std::int64_t> coeffs);

  static Cyclo root_of_unity(int order, std::int64_t power);
  /// Sum of mult[j] * zeta_order^j.
  static Cyclo from_multiplicities(int order, const std::vector<std::int64_t>& mult);

  int order() const { return order_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  /// Re-express in Z[zeta_target]; order() must divide target.
  Cyclo lifted(int target) const;

  bool is_rational() const;
  std::int64_t to_integer() const;  // throws unless rational
  bool is_zero() const;

  Cyclo conj() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator*(std::int64_t s) const;
  /// Exact division by an integer; throws if some coefficient is not divisible.
  Cyclo divided_by(std::int64_t s) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }

  bool operator==(const Cyclo& o) const;
  /// Total order used for deterministic sorting (compares at a common order).
  static int compare(const Cyclo& a, const Cyclo& b);

  std::string to_string() const;

 private:
  int order_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace coxrep
