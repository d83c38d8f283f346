#pragma once

// The Coxeter (nonsplit) torus T = (O'_r)^x inside GL_2(O_r), its character
// group, and the classification of each character theta: the top-layer
// element tau, regularity, conductor (r0, theta0, alpha), Weyl stabiliser and
// the restriction to the norm-one subgroup.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxrep/abelian.hpp"
#include "coxrep/cyclo.hpp"
#include "coxrep/matgroup.hpp"
#include "coxrep/ring.hpp"
#include "coxrep/unit_group.hpp"

namespace coxrep {

class CoxeterTorus;
using TorusPtr = std::shared_ptr<const CoxeterTorus>;

class CoxeterTorus : public std::enable_shared_from_this<CoxeterTorus> {
 public:
  /// Builds the torus at the ring's level together with all lower levels.
  static TorusPtr build(std::shared_ptr<const Ring> ring);
  static TorusPtr build(const GroupSpec& spec);

  CoxeterTorus(const CoxeterTorus&) = delete;
  CoxeterTorus& operator=(const CoxeterTorus&) = delete;

  const Ring& ring() const { return *ring_; }
  std::shared_ptr<const Ring> ring_ptr() const { return ring_; }
  const ExtRing& ext() const { return *ext_; }
  const UnitGroup& units() const { return *units_; }
  int level() const { return ring_->level(); }
  std::uint32_t q() const { return ring_->q(); }

  // T as an abelian group on indices 0..order-1.
  const AbelianGroup& group() const { return group_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(elems_.size()); }
  const ExtElem& element(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t index(const ExtElem& t) const;
  std::uint32_t identity() const { return group_.identity(); }

  /// Multiplication-by-t matrix in the basis (1, xi).
  Mat2 embed(std::uint32_t i) const;
  std::uint32_t sigma(std::uint32_t i) const { return sigma_[i]; }
  /// Index of N(t) in units().
  std::uint32_t norm_index(std::uint32_t i) const { return norm_[i]; }

  // Characters of T; values are multiples of 1/exponent().
  std::int64_t exponent() const { return group_.exponent(); }
  std::uint64_t dual_size() const { return group_.dual_size(); }
  AbelianChar character(std::uint64_t n) const { return group_.character(n); }
  std::int64_t evaluate(const AbelianChar& theta, std::uint32_t i) const { return group_.evaluate(theta, i); }
  Cyclo value(const AbelianChar& theta, std::uint32_t i) const;
  AbelianChar compose_sigma(const AbelianChar& theta) const;
  /// alpha o N for alpha in Irr(O_r^x).
  AbelianChar norm_pullback(const AbelianChar& alpha) const;
  const AbelianChar& norm_pullback(std::uint64_t alpha_index) const { return pullbacks_[alpha_index]; }

  /// Kernel of T_r -> T_j is generated by the layers j..r-1; layer i holds
  /// 1 + pi^i x_b for an F_p-basis x_b of F_{q^2}.
  const std::vector<std::uint32_t>& layer_generators(int i) const { return layers_.at(static_cast<std::size_t>(i)); }
  /// Least j >= 1 with eta trivial on ker(T_r -> T_j).
  int level_of(const AbelianChar& eta) const;

  /// The torus at level j <= level() (this when j == level()).
  const CoxeterTorus& at_level(int j) const;
  TorusPtr at_level_ptr(int j) const;
  /// Reduction T_r -> T_j on indices.
  std::uint32_t reduce_to(int j, std::uint32_t i) const;
  /// theta' on T_j with theta = theta' o reduction; requires level_of(theta) <= j.
  AbelianChar descend(const AbelianChar& theta, int j) const;
  /// theta' o reduction for theta' on T_j.
  AbelianChar inflate_from(const AbelianChar& theta_j, int j) const;

  // Norm-one subgroup (the SL_2 torus).
  const AbelianGroup& norm_one_group() const { return *sl_group_; }
  std::uint32_t norm_one_element(std::uint32_t i) const { return sl_elems_[i]; }
  AbelianChar restrict_to_norm_one(const AbelianChar& theta) const;

 private:
  explicit CoxeterTorus(std::shared_ptr<const Ring> ring);

  std::shared_ptr<const Ring> ring_;
  std::shared_ptr<const ExtRing> ext_;
  std::unique_ptr<UnitGroup> units_;
  std::vector<ExtElem> elems_;
  std::vector<std::int32_t> pos_;  // ext index -> torus index
  AbelianGroup group_;
  std::vector<std::uint32_t> sigma_;
  std::vector<std::uint32_t> norm_;
  std::vector<AbelianChar> pullbacks_;
  std::vector<std::vector<std::uint32_t>> layers_;

  TorusPtr lower_;
  std::vector<std::vector<std::uint32_t>> reduce_;  // reduce_[j][i] for j < r
  std::vector<std::vector<std::uint32_t>> lift_;    // lift_[j][i'] some preimage

  std::vector<std::uint32_t> sl_elems_;
  std::vector<std::int32_t> sl_pos_;
  std::unique_ptr<AbelianGroup> sl_group_;
};

/// psi_c(y) = zeta_p^{Tr_{F_q/F_p}(c y)} on (F_q, +); c is a nonzero residue-field code.
struct AdditiveCharacter {
  Code scale = 1;
};

/// tau in F_{q^2} (residue-extension index) with
/// theta(1 + pi^{j-1} x) = psi(Tr(x tau)) on the layer j-1, for theta of level <= j, j >= 2.
std::uint32_t tau_at_level(const CoxeterTorus& torus, const AbelianChar& theta, int j, AdditiveCharacter psi = {});
/// tau at the top layer; throws std::invalid_argument at level one.
std::uint32_t tau_of(const CoxeterTorus& torus, const AbelianChar& theta, AdditiveCharacter psi = {});
/// tau lies outside F_q.
bool is_regular_tau(const CoxeterTorus& torus, std::uint32_t tau);

struct Conductor {
  int r0 = 1;
  AbelianChar theta0;  // on the level-r0 torus
  AbelianChar alpha;   // on O_r^x
  std::uint64_t minimizers = 1;
};

/// Peels central tau layers by twisting with characters of O_r^x.  Returns r0 and
/// the accumulated twist (not canonicalised).
std::pair<int, AbelianChar> conductor_by_peeling(const CoxeterTorus& torus, const AbelianChar& theta,
                                                 AdditiveCharacter psi = {});
/// min over all alpha of level(theta * alpha o N).
int conductor_brute_force(const CoxeterTorus& torus, const AbelianChar& theta);
/// Full conductor with the canonical alpha: among all twists reaching r0, the
/// least by (theta0 exponents, alpha exponents).  Regular theta give (r, theta, 1).
Conductor conductor(const CoxeterTorus& torus, const AbelianChar& theta, AdditiveCharacter psi = {});

bool general_position(const CoxeterTorus& level_one, const AbelianChar& theta0);
int weyl_stabilizer(const CoxeterTorus& torus, const AbelianChar& theta);

struct TorusCharClass {
  AbelianChar theta;
  std::optional<std::uint32_t> tau;  // absent at level one
  bool is_regular = false;
  Conductor cond;
  bool general_position = false;  // of theta0 when r0 == 1
  int stab_size = 1;
  AbelianChar theta_bar;          // on the norm-one subgroup
  bool quadratic = false;         // q odd, r0 = 1, theta0 restricted to norm one has order 2
  bool even_split = false;        // q even, (regular or r0 > 1), theta_bar fixed by sigma
};

TorusCharClass classify(const CoxeterTorus& torus, const AbelianChar& theta, AdditiveCharacter psi = {});

/// One JSON object (single line) per classified character.
std::string to_json_line(const CoxeterTorus& torus, const TorusCharClass& c);
/// F_{q^2} element as "a+b*xi" with residue-field codes.
std::string format_residue_ext(const CoxeterTorus& torus, std::uint32_t tau);

}  // namespace coxrep
