#pragma once

// Finite abelian groups given by an explicit element enumeration, with an
// invariant-factor basis, discrete-log coordinates, and the dual group.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace coxrep {

/// A character of an AbelianGroup: exponents a_i in Z/n_i, meaning
/// g_i -> exp(2 pi i a_i / n_i) on the basis generators.
struct AbelianChar {
  std::vector<std::int64_t> exps;
  bool operator==(const AbelianChar&) const = default;
  auto operator<=>(const AbelianChar&) const = default;
};

class AbelianGroup {
 public:
  using Op = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

  /// Elements are 0..order-1; `op` is the group law on those indices.
  AbelianGroup(std::uint32_t order, std::uint32_t identity, Op op);

  std::uint32_t order() const { return order_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return op_(x, y); }
  std::uint32_t pow(std::uint32_t x, std::int64_t e) const;

  /// Invariant factors n_1 | n_2 | ... | n_m (all > 1) and matching generators.
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  const std::vector<std::uint32_t>& generators() const { return gens_; }
  std::int64_t exponent() const { return exponent_; }
  /// Coordinates e with x = prod g_i^{e_i}, 0 <= e_i < n_i.
  const std::vector<std::int64_t>& coords(std::uint32_t x) const { return coords_[x]; }
  std::uint32_t element_order(std::uint32_t x) const;

  // Dual group.
  std::uint64_t dual_size() const { return order_; }
  AbelianChar character(std::uint64_t index) const;
  std::uint64_t character_index(const AbelianChar& chi) const;
  AbelianChar trivial_character() const { return {std::vector<std::int64_t>(factors_.size(), 0)}; }
  AbelianChar multiply(const AbelianChar& a, const AbelianChar& b) const;
  AbelianChar inverse(const AbelianChar& a) const;
  /// chi(x) as k with value exp(2 pi i k / exponent()).
  std::int64_t evaluate(const AbelianChar& chi, std::uint32_t x) const;
  /// Recover the character from its values (exponent units) on all generators.
  AbelianChar from_generator_values(const std::vector<std::int64_t>& values) const;
  bool is_trivial(const AbelianChar& chi) const;
  /// Order of the character in the dual group.
  std::int64_t character_order(const AbelianChar& chi) const;

 private:
  void decompose();

  std::uint32_t order_;
  std::uint32_t identity_;
  Op op_;
  std::vector<std::int64_t> factors_;
  std::vector<std::uint32_t> gens_;
  std::int64_t exponent_ = 1;
  std::vector<std::vector<std::int64_t>> coords_;
};

}  // namespace coxrep
