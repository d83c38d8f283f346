#pragma once

// Exact character tables and the class-function calculus on enumerated
// matrix groups.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coxrep/cyclo.hpp"
#include "coxrep/matgroup.hpp"
#include "coxrep/unit_group.hpp"

namespace coxrep {

using Rational = mpq_class;

/// n / d in lowest terms.
Rational make_rational(std::int64_t n, std::int64_t d = 1);

inline constexpr std::uint64_t kDefaultTableBound = 50000;

class GroupMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A class function with exact cyclotomic values, one per conjugacy class of
/// `group` (class 0 holds the identity).
struct Character {
  GroupPtr group;
  std::vector<Cyclo> values;
  bool irreducible = false;
  bool is_virtual = false;

  std::int64_t degree() const { return values.at(0).to_integer(); }
  bool operator==(const Character& o) const { return group == o.group && values == o.values; }
};

Character trivial_character(GroupPtr group);
Character operator+(const Character& a, const Character& b);
Character operator-(const Character& a, const Character& b);
Character operator*(std::int64_t s, const Character& a);

/// <chi, psi> = |G|^{-1} sum_g chi(g) conj(psi(g)); throws GroupMismatch, or
/// std::domain_error if the sum is not rational.
Rational inner_product(const Character& chi, const Character& psi);

/// chi~(g) = chi(hom(g)); `chi` lives on the target of `hom`.
Character inflate(const Character& chi, GroupPtr source, const GroupHom& hom);

/// Compares <infl chi, psi>_G with <chi, psi^N>_{G/N}, where psi^N averages psi
/// over the cosets of N = ker(hom).  Both sides are computed independently.
struct AdjunctionResult {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};
AdjunctionResult adjunction_sides(const Character& chi, const Character& psi, const GroupHom& hom);
bool adjunction_check(const Character& chi, const Character& psi, const GroupHom& hom);
/// adjunction_sides for every pair (chis[i], psis[j]); the coset averages of
/// each psi are computed once and shared across the chis.
std::vector<std::vector<AdjunctionResult>> adjunction_matrix(const std::vector<Character>& chis,
                                                             const std::vector<Character>& psis, const GroupHom& hom);

Character restrict_to(const Character& chi, GroupPtr sub, const std::vector<std::uint32_t>& inclusion);
Character induce(const Character& chi, GroupPtr group, const std::vector<std::uint32_t>& inclusion);

/// Ind_B^G(1) - 1 at level one; throws std::logic_error unless irreducible of degree q.
Character steinberg(GroupPtr group);

/// chi tensored with g -> alpha(det g).
Character tensor_linear(const Character& chi, const UnitGroup& units, const AbelianChar& alpha);

/// The linear character g -> alpha(det g).
Character det_character(GroupPtr group, const UnitGroup& units, const AbelianChar& alpha);

class CharacterTable {
 public:
  CharacterTable(GroupPtr group, int exponent, std::uint64_t prime, std::vector<Character> irreducibles);

  GroupPtr group() const { return group_; }
  int exponent() const { return exponent_; }
  std::uint64_t dixon_prime() const { return prime_; }
  const std::vector<Character>& irreducibles() const { return irr_; }
  std::size_t size() const { return irr_.size(); }
  const Character& operator[](std::size_t i) const { return irr_[i]; }

  std::vector<std::int64_t> degrees() const;
  /// Index of an irreducible equal to chi, or -1.
  std::int64_t find(const Character& chi) const;
  /// Multiplicities <chi, irr_i>.
  std::vector<Rational> decompose(const Character& chi) const;

 private:
  GroupPtr group_;
  int exponent_;
  std::uint64_t prime_;
  std::vector<Character> irr_;
};

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group exponent (lcm of element orders).
int group_exponent(const MatrixGroup& group);

/// Smallest prime l = 1 mod e with l > 2 sqrt(order); throws TableError past `search_bound`.
std::uint64_t dixon_prime(int exponent, std::uint64_t order, std::uint64_t search_bound = 100000000);

/// Dixon-Schneider over F_l followed by lifting to Z[zeta_e].
CharacterTable character_table(GroupPtr group, std::uint64_t bound = kDefaultTableBound);

struct TableValidation {
  bool count_matches = false;
  bool degree_square_sum = false;
  bool degrees_divide_order = false;
  bool row_orthogonal = false;
  bool column_orthogonal = false;
  std::string detail;
  bool ok() const {
    return count_matches && degree_square_sum && degrees_divide_order && row_orthogonal && column_orthogonal;
  }
};

TableValidation validate_table(const CharacterTable& table);

/// TSV: class representative index, class size, then one column per irreducible.
void write_table_tsv(const CharacterTable& table, std::ostream& os);
/// JSON with class data and values written as power-basis strings.
std::string table_to_json(const CharacterTable& table);

}  // namespace coxrep
