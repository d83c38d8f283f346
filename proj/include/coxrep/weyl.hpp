#pragma once

// Classical Weyl groups as signed permutations, their root systems, twisted
// centralisers and F_q-ranks, plus the sign formula for Deligne-Lusztig
// characters evaluated on classical degrees.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace coxrep {

enum class CartanType { A, B, C, D };

std::string to_string(CartanType t);
CartanType parse_cartan_type(const std::string& text);

/// A signed permutation of {1..n}: image[i] = +-(j+1) sends e_i to +-e_j.
struct SignedPerm {
  std::vector<int> image;

  static SignedPerm identity(int n);
  int size() const { return static_cast<int>(image.size()); }
  SignedPerm operator*(const SignedPerm& o) const;  // (this * o)(e_i) = this(o(e_i))
  SignedPerm inverse() const;
  bool is_identity() const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;
  auto operator<=>(const SignedPerm&) const = default;
  std::string to_string() const;
};

/// Lengths of the positive and negative cycles of a signed permutation.
struct SignedCycleType {
  std::vector<int> positive;
  std::vector<int> negative;
  bool operator==(const SignedCycleType&) const = default;
};

/// Root datum of GL_n (type A, ambient lattice Z^n) or of the split classical
/// groups SO_{2n+1}, Sp_{2n}, SO_{2n} (types B, C, D).
class RootSystem {
 public:
  /// For type A the parameter is n (the Weyl group is S_n, rank n - 1).
  RootSystem(CartanType type, int n);

  CartanType type() const { return type_; }
  int n() const { return n_; }
  int semisimple_rank() const { return type_ == CartanType::A ? n_ - 1 : n_; }
  std::string name() const;

  const std::vector<std::vector<std::int64_t>>& roots() const { return roots_; }
  const std::vector<std::vector<std::int64_t>>& positive_roots() const { return positive_; }
  const std::vector<SignedPerm>& simple_reflections() const { return simple_; }
  const std::vector<SignedPerm>& weyl_group() const { return group_; }
  std::uint64_t expected_weyl_order() const;
  std::uint64_t expected_positive_roots() const;

  /// Product of the simple reflections in index order.
  SignedPerm coxeter_element() const;
  std::int64_t order(const SignedPerm& w) const;

  /// {x in W : x (w f0) = (w f0) x}.
  std::vector<SignedPerm> twisted_fixed_subgroup(const SignedPerm& w, const SignedPerm& f0) const;
  /// Least representatives of the f0-twisted conjugacy classes x w f0(x)^{-1}.
  std::vector<SignedPerm> twist_classes(const SignedPerm& f0) const;
  std::vector<SignedPerm> twist_classes() const { return twist_classes(SignedPerm::identity(n_)); }

 private:
  CartanType type_;
  int n_;
  std::vector<std::vector<std::int64_t>> roots_;
  std::vector<std::vector<std::int64_t>> positive_;
  std::vector<SignedPerm> simple_;
  std::vector<SignedPerm> group_;
};

SignedCycleType cycle_type(const SignedPerm& w);

struct FqRanks {
  int torus = 0;
  int group = 0;
};

/// rk of the w-twisted torus: dimension of the fixed space of w f0 on the
/// cocharacter space (Q^n; the sum-zero hyperplane when `semisimple_a` for type A).
FqRanks fq_ranks(const RootSystem& rs, const SignedPerm& w, const SignedPerm& f0, bool semisimple_a = false);
FqRanks fq_ranks(const RootSystem& rs, const SignedPerm& w, bool semisimple_a = false);

struct ConjectureSign {
  bool applicable = false;
  int sign = 0;
  mpq_class exponent;        // (rk_T + rk_G)(1 + log_q |dim|_p / #positive roots)
  mpz_class p_part;          // |dim|_p
  std::string reason;        // set when not applicable
};

ConjectureSign conjecture_sign(int rk_t, int rk_g, std::int64_t q, std::int64_t p, const mpz_class& dim,
                               std::int64_t positive_roots);

/// |G^F|_{p'} / |T_w^F| for the split group of the root system and torus twist w.
mpz_class classical_r1_dim(const RootSystem& rs, const SignedPerm& w, std::int64_t q);

struct SweepRow {
  std::string case_id;
  std::string type;
  int n = 0;
  std::string twist;
  std::int64_t q = 0;
  mpz_class dim;
  FqRanks ranks;
  std::int64_t positive_roots = 0;
  ConjectureSign conj;
  int classical_sign = 0;  // (-1)^{rk_G - rk_T}
  bool agrees = false;
};

struct SweepOptions {
  std::vector<CartanType> types{CartanType::A};
  int n_min = 2;
  int n_max = 5;
  std::vector<std::int64_t> qs{2, 3, 4, 5, 7, 8, 9};
  bool coxeter_only = false;
};

std::vector<SweepRow> sweep_conjecture(const SweepOptions& options);
std::string sweep_tsv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

}  // namespace coxrep
