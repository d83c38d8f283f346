#include "coxrep/predict.hpp"

#include <cstdlib>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "coxrep/numtheory.hpp"

namespace coxrep {

namespace {

// (q-1) q^{j-1}: the degree of the irreducible attached to a level-j regular character.
std::int64_t regular_degree(std::int64_t q, int j) { return (q - 1) * ipow(q, j - 1); }

int parity_sign(int j) { return j % 2 == 0 ? 1 : -1; }

Prediction irreducible(std::int64_t dim, int sign, const char* id, int r0, const char* label) {
  Prediction p;
  p.total_dim = sign * dim;
  p.constituents.push_back({dim, 1, sign, label});
  p.irreducible_up_to_sign = true;
  p.sign = sign;
  p.clause = id;
  p.r0 = r0;
  return p;
}

}  // namespace

Prediction predict_gl2(const TorusCharClass& tc, std::int64_t q, int r) {
  const int r0 = tc.cond.r0;
  if (r0 < 1 || r0 > r) throw std::invalid_argument("conductor level out of range");
  if (tc.is_regular) {
    if (r0 != r) throw std::invalid_argument("regular character with conductor below its level");
    return irreducible(regular_degree(q, r), parity_sign(r), clause::kRegular, r, "cuspidal");
  }
  if (r0 > 1) return irreducible(regular_degree(q, r0), parity_sign(r0), clause::kDescended, r0, "cuspidal");
  if (tc.general_position) return irreducible(q - 1, -1, clause::kGeneralPosition, 1, "cuspidal");

  Prediction p;
  p.constituents = {{1, 1, 1, "sigma1"}, {q, 1, -1, "sigma2"}};
  p.total_dim = 1 - q;
  p.sign = -1;
  p.clause = clause::kNonGeneralPosition;
  p.r0 = 1;
  p.sigma1_alpha = tc.cond.alpha;
  return p;
}

Prediction predict_sl2(const TorusCharClass& tc, std::int64_t q, int r) {
  Prediction p = predict_gl2(tc, q, r);
  if (tc.quadratic) {
    if (q % 2 == 0 || p.r0 != 1) throw std::invalid_argument("quadratic flag on an even or higher-level case");
    p.constituents = {{(q - 1) / 2, 1, -1, "half-a"}, {(q - 1) / 2, 1, -1, "half-b"}};
    p.irreducible_up_to_sign = false;
    p.clause = clause::kSlQuadratic;
  } else if (tc.even_split) {
    if (q % 2 != 0 || p.r0 < 2) throw std::invalid_argument("even-split flag on an odd or level-one case");
    const std::int64_t half = (ipow(q, p.r0) - ipow(q, p.r0 - 1)) / 2;
    p.constituents = {{half, 1, p.sign, "half-a"}, {half, 1, p.sign, "half-b"}};
    p.irreducible_up_to_sign = false;
    p.clause = clause::kSlEvenSplit;
  }
  p.sigma1_alpha.reset();
  return p;
}

std::vector<std::int64_t> dimension_set(std::int64_t q, int r) {
  std::vector<std::int64_t> out;
  for (int i = 1; i <= r; ++i) out.push_back(parity_sign(i) * regular_degree(q, i));
  return out;
}

int sign_from_dim(std::int64_t d, std::int64_t q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  std::int64_t m = std::llabs(d);
  if (m == 0 || m % (q - 1) != 0) throw std::invalid_argument("|d| is not (q-1) times a power of q");
  m /= q - 1;
  int log = 0;
  while (m % q == 0) {
    m /= q;
    ++log;
  }
  if (m != 1) throw std::invalid_argument("|d| is not (q-1) times a power of q");
  return parity_sign(1 + log);
}

bool stability_consistency(const CoxeterTorus& torus, const AbelianChar& theta, int r_prime) {
  if (r_prime < 1 || r_prime > torus.level()) throw std::invalid_argument("target level out of range");
  if (torus.level_of(theta) > r_prime) throw std::invalid_argument("character is not inflated from the target level");
  const CoxeterTorus& low = torus.at_level(r_prime);
  const auto q = static_cast<std::int64_t>(torus.q());
  const auto hi = classify(torus, theta);
  const auto lo = classify(low, torus.descend(theta, r_prime));
  return predict_gl2(hi, q, torus.level()).same_shape(predict_gl2(lo, q, r_prime)) &&
         predict_sl2(hi, q, torus.level()).same_shape(predict_sl2(lo, q, r_prime));
}

std::string to_json_line(const Prediction& p) {
  nlohmann::json j;
  j["clause"] = p.clause;
  j["total_dim"] = p.total_dim;
  j["sign"] = p.sign;
  j["r0"] = p.r0;
  j["irreducible_up_to_sign"] = p.irreducible_up_to_sign;
  auto& cs = j["constituents"] = nlohmann::json::array();
  for (const auto& c : p.constituents)
    cs.push_back({{"dim", c.dim}, {"mult", c.mult}, {"coeff", c.coeff}, {"label", c.label}});
  if (p.sigma1_alpha) j["sigma1_alpha"] = p.sigma1_alpha->exps;
  return j.dump();
}

}  // namespace coxrep
