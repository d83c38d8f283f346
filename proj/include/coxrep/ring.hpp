#pragma once

// Exact arithmetic in the truncated local rings O_r and their unramified
// quadratic extensions.
//
// Two concrete families realise O_r with residue field F_q, q = p^k:
//   * equal characteristic: F_q[t]/t^r
//   * mixed characteristic: the Galois ring GR(p^r, k) = (Z/p^r)[x]/(f)
// Elements are identified with a dense code in [0, q^r); the code is the
// mixed-radix packing of the canonical coefficient vector, so equality of
// codes is equality of elements.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxrep {

enum class RingMode { Equal, Mixed };

std::string to_string(RingMode mode);
RingMode parse_ring_mode(const std::string& text);

using Code = std::uint32_t;

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RingElem;

/// O_r.  Immutable after construction; share through shared_ptr.
class Ring {
 public:
  static constexpr std::uint32_t kMaxSize = 1024;

  static std::shared_ptr<const Ring> make(int p, int k, int r, RingMode mode);

  int p() const { return p_; }
  int k() const { return k_; }
  int level() const { return r_; }
  RingMode mode() const { return mode_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t unit_count() const { return size_ / q_ * (q_ - 1); }

  /// Coefficients f_0..f_{k-1} of the monic defining polynomial over F_p.
  const std::vector<int>& defining_poly() const { return fpoly_; }

  /// The residue field F_q = O_1 (this ring when r == 1).
  const Ring& residue_field() const { return residue_ ? *residue_ : *this; }
  std::shared_ptr<const Ring> residue_field_ptr() const;

  Code zero() const { return 0; }
  Code one() const { return one_; }
  Code add(Code a, Code b) const { return add_[a * size_ + b]; }
  Code mul(Code a, Code b) const { return mul_[a * size_ + b]; }
  Code neg(Code a) const { return neg_[a]; }
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  bool is_unit(Code a) const { return inv_[a] != kNoInverse; }
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const;
  Code from_int(std::int64_t n) const;

  /// Canonical coefficients: k values in [0, p^r) (mixed) or r values in
  /// [0, q) holding F_q codes (equal).
  std::vector<std::uint32_t> coeffs(Code a) const;
  Code from_coeffs(std::span<const std::uint32_t> coeffs) const;

  /// pi-adic valuation; r for zero.
  int valuation(Code a) const;
  /// pi = p (mixed) or t (equal).
  Code pi_power(int j) const;
  /// Reduction mod pi^{r'} into `target` (same p, k, mode; level r' <= r).
  Code reduce(Code a, const Ring& target) const;
  /// Residue in F_q (code of the residue field).
  Code residue(Code a) const;
  /// Coefficientwise lift of an F_q code.
  Code lift(Code fq) const;
  /// For y in pi^j O_r, the element y / pi^j of `target` (level r - j).
  Code divide_by_pi_power(Code y, int j, const Ring& target) const;

  std::vector<Code> units() const;
  /// Generators of (O_r, +) as an abelian group.
  std::vector<Code> additive_generators() const;

  /// Tr_{F_q/F_p}, only meaningful on the residue field; returns a value in [0, p).
  int field_trace_to_prime(Code fq) const;

  RingElem elem(Code c) const;

  bool same_family(const Ring& other) const {
    return p_ == other.p_ && k_ == other.k_ && mode_ == other.mode_;
  }

  std::string describe() const;

 private:
  static constexpr std::uint16_t kNoInverse = 0xffff;

  Ring(int p, int k, int r, RingMode mode);
  void build_tables();
  Code mul_slow(Code a, Code b) const;
  Code add_slow(Code a, Code b) const;

  int p_, k_, r_;
  RingMode mode_;
  std::uint32_t q_ = 1, size_ = 1, digit_base_ = 1;
  int digits_ = 1;
  std::vector<int> fpoly_;
  Code one_ = 1;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
  std::shared_ptr<const Ring> residue_;
};

/// Value wrapper for readability in tests and bindings; bulk code works on Code.
class RingElem {
 public:
  RingElem(const Ring* ring, Code code) : ring_(ring), code_(code) {}

  const Ring& ring() const { return *ring_; }
  Code code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return ring_->coeffs(code_); }

  RingElem operator+(const RingElem& o) const { return {ring_, ring_->add(code_, o.code_)}; }
  RingElem operator-(const RingElem& o) const { return {ring_, ring_->sub(code_, o.code_)}; }
  RingElem operator*(const RingElem& o) const { return {ring_, ring_->mul(code_, o.code_)}; }
  RingElem operator-() const { return {ring_, ring_->neg(code_)}; }
  RingElem inverse() const { return {ring_, ring_->inv(code_)}; }
  bool operator==(const RingElem& o) const { return ring_ == o.ring_ && code_ == o.code_; }

 private:
  const Ring* ring_;
  Code code_;
};

RingElem invert(const RingElem& a);

/// Element a + b*xi of O'_r = O_r[xi]/(xi^2 + c1 xi + c0).
struct ExtElem {
  Code a = 0;
  Code b = 0;
  bool operator==(const ExtElem&) const = default;
};

/// The unramified quadratic extension O'_r.
///
/// xi is a root of the least monic irreducible quadratic over F_q, lifted
/// coefficientwise to O_r.  The Frobenius sends xi to the other root
/// -c1 - xi.
class ExtRing {
 public:
  static std::shared_ptr<const ExtRing> make(std::shared_ptr<const Ring> base);

  const Ring& base() const { return *base_; }
  std::shared_ptr<const Ring> base_ptr() const { return base_; }
  Code c0() const { return c0_; }
  Code c1() const { return c1_; }
  std::uint32_t size() const { return base_->size() * base_->size(); }

  std::uint32_t index(const ExtElem& x) const { return x.a + base_->size() * x.b; }
  ExtElem from_index(std::uint32_t i) const { return {i % base_->size(), i / base_->size()}; }

  ExtElem embed(Code a) const { return {a, 0}; }
  ExtElem one() const { return {base_->one(), 0}; }
  ExtElem xi() const { return {0, base_->one()}; }
  ExtElem add(const ExtElem& x, const ExtElem& y) const;
  ExtElem sub(const ExtElem& x, const ExtElem& y) const;
  ExtElem neg(const ExtElem& x) const;
  ExtElem mul(const ExtElem& x, const ExtElem& y) const;
  ExtElem scale(Code s, const ExtElem& x) const;
  ExtElem pow(ExtElem x, std::uint64_t e) const;
  bool is_unit(const ExtElem& x) const { return base_->is_unit(norm(x)); }
  ExtElem inv(const ExtElem& x) const;

  ExtElem frobenius(const ExtElem& x) const;
  Code norm(const ExtElem& x) const;
  Code trace(const ExtElem& x) const;

  int valuation(const ExtElem& x) const;
  ExtElem reduce(const ExtElem& x, const ExtRing& target) const;
  /// Residue in F_{q^2}, encoded as an index of the level-1 extension.
  std::uint32_t residue(const ExtElem& x) const;
  ExtElem lift(std::uint32_t residue_index) const;
  ExtElem divide_by_pi_power(const ExtElem& x, int j, const ExtRing& target) const;

  const ExtRing& residue_ext() const { return residue_ ? *residue_ : *this; }

  std::vector<ExtElem> units() const;

 private:
  ExtRing() = default;

  std::shared_ptr<const Ring> base_;
  Code c0_ = 0, c1_ = 0;
  std::shared_ptr<const ExtRing> residue_;
};

/// Frobenius convenience used by the public surface.
inline ExtElem frobenius(const ExtRing& ext, const ExtElem& x) { return ext.frobenius(x); }
inline Code norm(const ExtRing& ext, const ExtElem& x) { return ext.norm(x); }
inline Code trace_ext(const ExtRing& ext, const ExtElem& x) { return ext.trace(x); }

std::shared_ptr<const Ring> make_ring(int p, int k, int r, RingMode mode);

/// Least monic irreducible polynomial of degree k over F_p (coefficients f_0..f_{k-1}),
/// ordered by the integer sum f_i p^i.
std::vector<int> least_irreducible(int p, int k);

}  // namespace coxrep
