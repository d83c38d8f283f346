#include "coxrep/unit_group.hpp"

#include <stdexcept>

namespace coxrep {

std::vector<Code> UnitGroup::collect_units(const Ring& ring) { return ring.units(); }

std::vector<std::int32_t> UnitGroup::positions(const Ring& ring, const std::vector<Code>& units) {
  std::vector<std::int32_t> pos(ring.size(), -1);
  for (std::size_t i = 0; i < units.size(); ++i) pos[units[i]] = static_cast<std::int32_t>(i);
  return pos;
}

UnitGroup::UnitGroup(std::shared_ptr<const Ring> ring)
    : ring_(std::move(ring)),
      units_(collect_units(*ring_)),
      pos_(positions(*ring_, units_)),
      group_(static_cast<std::uint32_t>(units_.size()), static_cast<std::uint32_t>(pos_[ring_->one()]),
             [this](std::uint32_t x, std::uint32_t y) {
               return static_cast<std::uint32_t>(pos_[ring_->mul(units_[x], units_[y])]);
             }) {}

std::uint32_t UnitGroup::index(Code u) const {
  if (u >= pos_.size() || pos_[u] < 0) throw NotInvertible("not a unit: " + std::to_string(u));
  return static_cast<std::uint32_t>(pos_[u]);
}

}  // namespace coxrep
