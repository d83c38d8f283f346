#pragma once

#include <memory>
#include <vector>

#include "coxrep/abelian.hpp"
#include "coxrep/ring.hpp"

namespace coxrep {

/// O_r^x as an enumerated abelian group, with the characters alpha used for
/// determinant twists.
class UnitGroup {
 public:
  explicit UnitGroup(std::shared_ptr<const Ring> ring);
  // The group law captures this object.
  UnitGroup(const UnitGroup&) = delete;
  UnitGroup& operator=(const UnitGroup&) = delete;

  const Ring& ring() const { return *ring_; }
  const AbelianGroup& group() const { return group_; }
  const std::vector<Code>& elements() const { return units_; }
  std::uint32_t index(Code u) const;
  Code element(std::uint32_t i) const { return units_[i]; }
  /// alpha(u) as a multiple of 1/exponent().
  std::int64_t evaluate(const AbelianChar& alpha, Code u) const { return group_.evaluate(alpha, index(u)); }
  std::int64_t exponent() const { return group_.exponent(); }

 private:
  static std::vector<Code> collect_units(const Ring& ring);
  static std::vector<std::int32_t> positions(const Ring& ring, const std::vector<Code>& units);

  std::shared_ptr<const Ring> ring_;
  std::vector<Code> units_;
  std::vector<std::int32_t> pos_;
  AbelianGroup group_;
};

}  // namespace coxrep
