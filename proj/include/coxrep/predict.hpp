#pragma once

// Predicted dimension, sign and decomposition of the Coxeter-torus
// Deligne-Lusztig character R(theta) of GL_2(O_r) and SL_2(O_r).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxrep/torus.hpp"

namespace coxrep {

struct Constituent {
  std::int64_t dim = 0;
  std::int64_t mult = 1;
  int coeff = 1;  // +1 or -1
  std::string label;
  bool operator==(const Constituent&) const = default;
};

namespace clause {
inline constexpr const char* kRegular = "regular";
inline constexpr const char* kDescended = "descended-regular";
inline constexpr const char* kGeneralPosition = "level-one-general-position";
inline constexpr const char* kNonGeneralPosition = "level-one-non-general-position";
inline constexpr const char* kSlQuadratic = "sl-quadratic-split";
inline constexpr const char* kSlEvenSplit = "sl-even-split";
}  // namespace clause

struct Prediction {
  std::int64_t total_dim = 0;
  std::vector<Constituent> constituents;
  bool irreducible_up_to_sign = false;
  int sign = 0;
  std::string clause;
  int r0 = 1;
  /// Non-general-position case: the degree-one constituent is alpha^{-1} o det.
  std::optional<AbelianChar> sigma1_alpha;

  /// Same dimensions, signs and constituents (ignores the clause and sigma1).
  bool same_shape(const Prediction& o) const {
    return total_dim == o.total_dim && constituents == o.constituents && irreducible_up_to_sign == o.irreducible_up_to_sign;
  }
};

Prediction predict_gl2(const TorusCharClass& tc, std::int64_t q, int r);
Prediction predict_sl2(const TorusCharClass& tc, std::int64_t q, int r);

/// {(-1)^i (q-1) q^{i-1} : 1 <= i <= r}, ascending by absolute value.
std::vector<std::int64_t> dimension_set(std::int64_t q, int r);

/// (-1)^{1 + log_q(|d|/(q-1))}; throws std::invalid_argument unless |d| = (q-1) q^i.
int sign_from_dim(std::int64_t d, std::int64_t q);

/// For theta inflated from level r' (level_of(theta) <= r'), the level-r and
/// level-r' predictions agree.  Throws std::invalid_argument otherwise.
bool stability_consistency(const CoxeterTorus& torus, const AbelianChar& theta, int r_prime);

std::string to_json_line(const Prediction& p);

}  // namespace coxrep
