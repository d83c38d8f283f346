#include "coxrep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "coxrep/numtheory.hpp"
#include "coxrep/predict.hpp"
#include "coxrep/torus.hpp"
#include "coxrep/weyl.hpp"

namespace coxrep {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::size_t CaseReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [v](const auto& c) { return c.verdict == v; }));
}

std::size_t SuiteReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.count(v);
  for (const auto& c : suite_checks) n += c.verdict == v ? 1 : 0;
  return n;
}

namespace {

using Clock = std::chrono::steady_clock;

Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

template <class Fn>
CheckResult timed(const std::string& id, const std::string& clause, Fn&& body) {
  CheckResult res;
  res.check_id = id;
  res.clause = clause;
  const auto start = Clock::now();
  try {
    body(res);
  } catch (const std::exception& e) {
    res.verdict = Verdict::Fail;
    res.note = std::string("error: ") + e.what();
  }
  res.runtime_s = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::string digest(const Prediction& p) {
  std::ostringstream os;
  os << p.clause << ":" << p.total_dim << ":";
  for (const auto& c : p.constituents) os << c.coeff * c.mult << "x" << c.dim << ";";
  return os.str();
}

std::map<std::int64_t, std::int64_t> degree_counts(const CharacterTable& t) {
  std::map<std::int64_t, std::int64_t> out;
  for (auto d : t.degrees()) ++out[d];
  return out;
}

class CaseRunner {
 public:
  CaseRunner(const GroupSpec& spec, const VerifyOptions& options, CaseReport& report)
      : spec_(spec), opt_(options), report_(report), q_(static_cast<std::int64_t>(spec.q())) {}

  void run() {
    add(timed("group.order", "closed-form order", [&](CheckResult& r) {
      group_ = opt_.cache.group(spec_, opt_.table_bound);
      const auto n = group_->size();
      const auto gen = group_->generated_order();
      r.computed = std::to_string(n) + " (generated by " + std::to_string(group_->generators().size()) +
                   " elements: " + std::to_string(gen) + ")";
      r.predicted = std::to_string(spec_.expected_order());
      r.verdict = verdict_of(n == spec_.expected_order() && gen == n);
    }));
    if (!group_) return;

    add(timed("table.validity", "orthogonality, degree sum, class count", [&](CheckResult& r) {
      table_.emplace(opt_.cache.table(spec_, group_, opt_.table_bound));
      const auto v = validate_table(*table_);
      std::int64_t sum = 0;
      for (auto x : table_->degrees()) sum += x * x;
      r.computed = "irr=" + std::to_string(table_->size()) + " classes=" +
                   std::to_string(group_->classes().count()) + " sum_deg2=" + std::to_string(sum);
      r.predicted = "irr=classes sum_deg2=" + std::to_string(group_->size());
      r.verdict = verdict_of(v.ok());
      r.note = v.detail;
    }));

    add(timed("torus.classification", "every theta classified", [&](CheckResult& r) {
      torus_ = CoxeterTorus::build(spec_);
      classes_.reserve(torus_->dual_size());
      for (std::uint64_t n = 0; n < torus_->dual_size(); ++n) classes_.push_back(classify(*torus_, torus_->character(n)));
      for (const auto& tc : classes_) predictions_.push_back(predict(tc));
      for (const auto& p : predictions_) {
        report_.prediction_digest.push_back(digest(p));
        report_.dimension_digest.push_back(p.total_dim);
      }
      std::sort(report_.prediction_digest.begin(), report_.prediction_digest.end());
      std::sort(report_.dimension_digest.begin(), report_.dimension_digest.end());
      r.computed = std::to_string(classes_.size()) + " characters";
      r.predicted = std::to_string(torus_->order()) + " = |T|";
      r.verdict = verdict_of(classes_.size() == torus_->order());
    }));
    if (!torus_ || classes_.size() != torus_->order()) return;

    check_conductor();
    check_dimensions();
    check_twist_invariance();
    check_prediction_stability();
    if (table_) {
      check_stability();
      check_census();
      if (spec_.flavor == Flavor::GL) check_sigma1();
      if (spec_.flavor == Flavor::SL) check_sl_exceptions();
    }
    check_conjecture();
    if (opt_.adjunction && table_) check_adjunction();
  }

 private:
  void add(CheckResult r) { report_.checks.push_back(std::move(r)); }

  Prediction predict(const TorusCharClass& tc) const {
    return spec_.flavor == Flavor::GL ? predict_gl2(tc, q_, spec_.r) : predict_sl2(tc, q_, spec_.r);
  }

  bool sl() const { return spec_.flavor == Flavor::SL; }

  // Census orbits: sigma-orbits of theta for GL; for SL, orbits of the
  // restriction to the norm-one torus under sigma, which inverts it.
  std::uint64_t orbit_key(std::uint64_t n) const {
    const CoxeterTorus& T = *torus_;
    const auto& theta = classes_[n].theta;
    if (!sl()) return std::min<std::uint64_t>(n, T.group().character_index(T.compose_sigma(theta)));
    const auto& S = T.norm_one_group();
    const auto bar = T.restrict_to_norm_one(theta);
    return std::min(S.character_index(bar), S.character_index(S.inverse(bar)));
  }

  void check_conductor() {
    add(timed("classification.conductor", "peeling = brute force; r0 > 1 implies theta0 regular", [&](CheckResult& r) {
      std::uint64_t agree = 0, post = 0;
      for (const auto& tc : classes_) {
        const int brute = conductor_brute_force(*torus_, tc.theta);
        const int peeled = conductor_by_peeling(*torus_, tc.theta).first;
        if (brute == peeled && peeled == tc.cond.r0) ++agree;
        if (tc.cond.r0 == 1) {
          ++post;
        } else {
          const CoxeterTorus& low = torus_->at_level(tc.cond.r0);
          if (is_regular_tau(low, tau_of(low, tc.cond.theta0))) ++post;
        }
      }
      const auto n = classes_.size();
      r.computed = "agree=" + std::to_string(agree) + " postcondition=" + std::to_string(post);
      r.predicted = "agree=" + std::to_string(n) + " postcondition=" + std::to_string(n);
      r.verdict = verdict_of(agree == n && post == n);
    }));
  }

  void check_dimensions() {
    add(timed("prediction.dimension_set", "dimension set and sign formula", [&](CheckResult& r) {
      const auto dims = dimension_set(q_, spec_.r);
      std::uint64_t in_set = 0, sign_ok = 0;
      std::set<std::int64_t> seen;
      for (const auto& p : predictions_) {
        seen.insert(p.total_dim);
        if (std::find(dims.begin(), dims.end(), p.total_dim) != dims.end()) ++in_set;
        if (std::llabs(p.total_dim) >= q_ - 1 && sign_from_dim(p.total_dim, q_) == p.sign) ++sign_ok;
      }
      std::ostringstream os;
      for (auto d : seen) os << d << " ";
      const auto n = predictions_.size();
      r.computed = "in_set=" + std::to_string(in_set) + " sign_ok=" + std::to_string(sign_ok) + " dims={ " + os.str() + "}";
      std::ostringstream ps;
      for (auto d : dims) ps << d << " ";
      r.predicted = "in_set=" + std::to_string(n) + " sign_ok=" + std::to_string(n) + " set={ " + ps.str() + "}";
      r.verdict = verdict_of(in_set == n && sign_ok == n);
    }));
  }

  void check_twist_invariance() {
    add(timed("prediction.twist_invariance", "theta o sigma and theta (alpha o N) predict the same", [&](CheckResult& r) {
      const auto& G = torus_->group();
      const auto& U = torus_->units().group();
      std::uint64_t tested = 0, same = 0;
      for (std::uint64_t n = 0; n < classes_.size(); ++n) {
        const auto& th = classes_[n].theta;
        const auto s = G.character_index(torus_->compose_sigma(th));
        tested++;
        same += predictions_[s].same_shape(predictions_[n]) ? 1 : 0;
        for (std::uint64_t a = 1; a < U.dual_size(); ++a) {
          const auto m = G.character_index(G.multiply(th, torus_->norm_pullback(a)));
          tested++;
          same += predictions_[m].same_shape(predictions_[n]) ? 1 : 0;
        }
      }
      r.computed = std::to_string(same) + " of " + std::to_string(tested) + " pairs agree";
      r.predicted = std::to_string(tested);
      r.verdict = verdict_of(same == tested);
    }));
  }

  void check_prediction_stability() {
    if (spec_.r == 1) return;
    add(timed("prediction.stability", "inflated theta predicts as at its own level", [&](CheckResult& r) {
      std::uint64_t tested = 0, ok = 0;
      for (const auto& tc : classes_) {
        const int lvl = torus_->level_of(tc.theta);
        for (int rp = lvl; rp < spec_.r; ++rp) {
          ++tested;
          ok += stability_consistency(*torus_, tc.theta, rp) ? 1 : 0;
        }
      }
      r.computed = std::to_string(ok) + " of " + std::to_string(tested);
      r.predicted = std::to_string(tested);
      r.verdict = verdict_of(ok == tested);
    }));
  }

  void check_stability() {
    add(timed("stability.norm", "<infl(1 - St), infl(1 - St)> = |W(T)^F|", [&](CheckResult& r) {
      const auto V = inflated_one_minus_st();
      const RootSystem a1(CartanType::A, 2);
      const auto w_f = a1.twisted_fixed_subgroup(a1.coxeter_element(), SignedPerm::identity(2)).size();
      const Rational norm = inner_product(V, V);
      r.computed = norm.get_str();
      r.predicted = std::to_string(w_f);
      r.verdict = verdict_of(norm == static_cast<long>(w_f) && w_f == 2);
    }));
    add(timed("stability.constituents", "infl(1 - St) = infl(1) - infl(St) in the level-r table", [&](CheckResult& r) {
      const auto [one, st] = inflated_pieces();
      const auto i1 = table_->find(one);
      const auto ist = table_->find(st);
      const auto mult = table_->decompose(one - st);
      std::map<std::int64_t, std::string> nonzero;
      for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] != 0) nonzero[(*table_)[i].degree()] += mult[i].get_str();
      std::ostringstream os;
      for (const auto& [deg, m] : nonzero) os << "deg" << deg << ":" << m << " ";
      r.computed = os.str() + (i1 >= 0 && ist >= 0 ? "both found" : "missing");
      r.predicted = "deg1:1 deg" + std::to_string(q_) + ":-1 both found";
      const bool shape = nonzero.size() == 2 && nonzero.count(1) && nonzero[1] == "1" && nonzero.count(q_) &&
                         nonzero[q_] == "-1";
      r.verdict = verdict_of(shape && i1 >= 0 && ist >= 0);
    }));
  }

  std::pair<Character, Character> inflated_pieces() {
    if (!level_one_) {
      level_one_ = spec_.r == 1 ? group_ : opt_.cache.group(spec_.at_level(1));
      st_ = steinberg(level_one_);
    }
    const auto one = trivial_character(level_one_);
    if (spec_.r == 1) return {one, *st_};
    const auto hom = reduction_hom(*group_, *level_one_);
    auto a = inflate(one, group_, hom);
    auto b = inflate(*st_, group_, hom);
    return {a, b};
  }

  Character inflated_one_minus_st() {
    const auto [a, b] = inflated_pieces();
    return a - b;
  }

  void check_census() {
    // Orbit representatives and what each predicts.
    std::map<std::uint64_t, std::uint64_t> rep_of;
    for (std::uint64_t n = 0; n < classes_.size(); ++n) rep_of.emplace(orbit_key(n), n);

    add(timed("census.orbit_consistency", "one prediction per orbit", [&](CheckResult& r) {
      std::uint64_t bad = 0;
      for (std::uint64_t n = 0; n < classes_.size(); ++n)
        if (!predictions_[n].same_shape(predictions_[rep_of.at(orbit_key(n))])) ++bad;
      r.computed = std::to_string(bad) + " mismatches over " + std::to_string(rep_of.size()) + " orbits";
      r.predicted = "0 mismatches";
      r.verdict = verdict_of(bad == 0);
    }));

    if (!sl() && spec_.r >= 2) {
      add(timed("census.regular_orbits", "regular", [&](CheckResult& r) {
        std::uint64_t regular = 0;
        for (const auto& [key, n] : rep_of) regular += classes_[n].is_regular ? 1 : 0;
        // tau is equidistributed over F_{q^2}; q^2 - q of its values are regular; sigma-orbits have size 2.
        const auto expected = torus_->order() / static_cast<std::uint64_t>(q_ * q_) *
                              static_cast<std::uint64_t>(q_ * q_ - q_) / 2;
        r.computed = std::to_string(regular);
        r.predicted = std::to_string(expected);
        r.verdict = verdict_of(regular == expected);
      }));
    }

    std::map<std::int64_t, std::int64_t> required;
    std::map<std::int64_t, std::set<std::string>> sources;
    for (const auto& [key, n] : rep_of)
      for (const auto& c : predictions_[n].constituents) {
        required[c.dim] += c.mult;
        sources[c.dim].insert(predictions_[n].clause);
      }
    const auto have = degree_counts(*table_);
    const bool guaranteed = !sl() || q_ >= 7;
    for (const auto& [deg, need] : required) {
      add(timed("census.degree=" + std::to_string(deg), join(sources[deg]), [&](CheckResult& r) {
        const auto it = have.find(deg);
        const auto got = it == have.end() ? 0 : it->second;
        r.computed = std::to_string(got);
        r.predicted = ">= " + std::to_string(need);
        r.verdict = verdict_of(got >= need);
        r.note = std::string(guaranteed ? "distinctness guaranteed" : "distinctness empirically observed") +
                 "; margin " + std::to_string(got - need);
      }));
    }
  }

  void check_sigma1() {
    add(timed("census.sigma1", clause::kNonGeneralPosition, [&](CheckResult& r) {
      const auto [one, st] = inflated_pieces();
      (void)one;
      const UnitGroup& units = torus_->units();
      std::uint64_t cases = 0, found = 0;
      std::set<std::int64_t> lin, big;
      for (std::uint64_t n = 0; n < classes_.size(); ++n) {
        const auto& p = predictions_[n];
        if (p.clause != clause::kNonGeneralPosition) continue;
        ++cases;
        if (!torus_->at_level(1).group().is_trivial(classes_[n].cond.theta0) || !p.sigma1_alpha) continue;
        const auto beta = units.group().inverse(*p.sigma1_alpha);
        const auto s1 = table_->find(det_character(group_, units, beta));
        const auto s2 = table_->find(tensor_linear(st, units, beta));
        if (s1 >= 0 && s2 >= 0 && (*table_)[static_cast<std::size_t>(s1)].degree() == 1 &&
            (*table_)[static_cast<std::size_t>(s2)].degree() == q_) {
          ++found;
          lin.insert(s1);
          big.insert(s2);
        }
      }
      r.computed = "found=" + std::to_string(found) + " distinct=" + std::to_string(lin.size()) + "/" +
                   std::to_string(big.size());
      r.predicted = "found=" + std::to_string(cases) + " distinct=" + std::to_string(cases) + "/" + std::to_string(cases);
      r.verdict = verdict_of(found == cases && lin.size() == cases && big.size() == cases);
      r.note = "degree-one constituent identified as alpha^{-1} o det";
    }));
  }

  void check_sl_exceptions() {
    std::map<std::uint64_t, std::uint64_t> rep_of;
    for (std::uint64_t n = 0; n < classes_.size(); ++n) rep_of.emplace(orbit_key(n), n);
    const auto have = degree_counts(*table_);
    const bool odd = q_ % 2 == 1;
    std::map<std::int64_t, std::int64_t> flagged;  // degree -> orbits
    for (const auto& [key, n] : rep_of) {
      const auto& p = predictions_[n];
      if (odd && p.clause == clause::kSlQuadratic) ++flagged[(q_ - 1) / 2];
      if (!odd && p.clause == clause::kSlEvenSplit) ++flagged[(ipow(q_, p.r0) - ipow(q_, p.r0 - 1)) / 2];
    }
    const std::string id = odd ? "sl.quadratic" : "sl.even_split";
    const std::string cl = odd ? clause::kSlQuadratic : clause::kSlEvenSplit;
    if (flagged.empty()) {
      add(timed(id, cl, [&](CheckResult& r) {
        r.computed = "no flagged orbits";
        r.predicted = odd ? "q odd: one quadratic orbit" : "q even: flagged orbits need r >= 2";
        r.verdict = odd ? Verdict::Fail : Verdict::Inapplicable;
      }));
      return;
    }
    for (const auto& [deg, orbits] : flagged) {
      add(timed(id + ".degree=" + std::to_string(deg), cl, [&](CheckResult& r) {
        auto it = have.find(deg);
        std::int64_t got = it == have.end() ? 0 : it->second;
        if (deg == 1) --got;  // the trivial character is not a candidate
        r.computed = std::to_string(got) + (deg == 1 ? " nontrivial" : "");
        r.predicted = ">= " + std::to_string(2 * orbits) + " (" + std::to_string(orbits) + " flagged orbit" +
                      (orbits == 1 ? "" : "s") + ")";
        r.verdict = verdict_of(got >= 2 * orbits);
      }));
    }
  }

  void check_conjecture() {
    add(timed("conjecture.sign", "sign conjecture vs predicted sign", [&](CheckResult& r) {
      const RootSystem a1(CartanType::A, 2);
      const auto ranks = fq_ranks(a1, a1.coxeter_element(), sl());
      const auto npos = static_cast<std::int64_t>(a1.positive_roots().size());
      std::uint64_t agree = 0, inapplicable = 0;
      std::set<std::string> exponents;
      for (const auto& p : predictions_) {
        const auto c = conjecture_sign(ranks.torus, ranks.group, q_, spec_.p, p.total_dim, npos);
        if (!c.applicable) {
          ++inapplicable;
          exponents.insert(c.exponent.get_str());
        } else if (c.sign == p.sign) {
          ++agree;
        }
      }
      r.computed = "agree=" + std::to_string(agree) + " inapplicable=" + std::to_string(inapplicable);
      r.predicted = "agree=" + std::to_string(predictions_.size()) + " inapplicable=0";
      r.verdict = verdict_of(agree == predictions_.size());
      r.note = "rk_T=" + std::to_string(ranks.torus) + " rk_G=" + std::to_string(ranks.group) + " positive_roots=" +
               std::to_string(npos) + (exponents.empty() ? "" : " non-integer exponents: " + join(exponents));
    }));
  }

  void check_adjunction() {
    for (int rp = 1; rp < spec_.r; ++rp) {
      add(timed("adjunction.level=" + std::to_string(rp), "inflation/coset-average adjunction, all irreducible pairs",
                [&](CheckResult& r) {
                  const auto spec_low = spec_.at_level(rp);
                  const auto low = opt_.cache.group(spec_low);
                  const auto low_table = opt_.cache.table(spec_low, low, opt_.table_bound);
                  const auto hom = reduction_hom(*group_, *low);
                  const auto m = adjunction_matrix(low_table.irreducibles(), table_->irreducibles(), hom);
                  std::uint64_t pairs = 0, hold = 0, nonzero = 0;
                  for (const auto& row : m)
                    for (const auto& a : row) {
                      ++pairs;
                      hold += a.holds() ? 1 : 0;
                      nonzero += a.lhs != 0 ? 1 : 0;
                    }
                  r.computed = std::to_string(hold) + " of " + std::to_string(pairs) + " pairs";
                  r.predicted = std::to_string(pairs);
                  r.verdict = verdict_of(hold == pairs && pairs > 0);
                  r.note = std::to_string(nonzero) + " pairs with nonzero multiplicity";
                }));
    }
  }

  GroupSpec spec_;
  const VerifyOptions& opt_;
  CaseReport& report_;
  std::int64_t q_;
  GroupPtr group_;
  std::optional<CharacterTable> table_;
  TorusPtr torus_;
  std::vector<TorusCharClass> classes_;
  std::vector<Prediction> predictions_;
  GroupPtr level_one_;
  std::optional<Character> st_;
};

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

nlohmann::json check_json(const std::string& key, const CheckResult& c, bool timing) {
  nlohmann::json j;
  j["case"] = key;
  j["check_id"] = c.check_id;
  j["clause"] = c.clause;
  j["computed"] = c.computed;
  j["predicted"] = c.predicted;
  j["verdict"] = to_string(c.verdict);
  if (!c.note.empty()) j["note"] = c.note;
  if (timing) j["runtime_s"] = c.runtime_s;
  return j;
}

std::string histogram_difference(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::map<std::string, std::pair<int, int>> h;
  for (const auto& x : a) ++h[x].first;
  for (const auto& x : b) ++h[x].second;
  std::string out;
  for (const auto& [k, v] : h)
    if (v.first != v.second) out += (out.empty() ? "" : "; ") + k + " " + std::to_string(v.first) + " vs " + std::to_string(v.second);
  return out;
}

// Cases that differ only in the ring mode.
std::vector<CheckResult> mode_checks(const std::vector<const CaseReport*>& members) {
  std::vector<CheckResult> out;
  const CaseReport& a = *members.front();
  std::string label;
  for (const auto* m : members) label += (label.empty() ? "" : " vs ") + m->key;

  out.push_back(timed("mode_independence.dimensions", "signed dimensions agree across ring modes", [&](CheckResult& r) {
    bool same = true;
    for (const auto* b : members) same = same && b->dimension_digest == a.dimension_digest;
    r.computed = same ? "identical" : "different";
    r.predicted = "identical";
    r.verdict = verdict_of(same);
    r.note = label;
  }));
  out.push_back(timed("mode_independence.decomposition", "clauses and constituents agree across ring modes",
                      [&](CheckResult& r) {
                        std::string diff;
                        for (const auto* b : members) {
                          const auto d = histogram_difference(a.prediction_digest, b->prediction_digest);
                          if (!d.empty()) diff += (diff.empty() ? "" : " | ") + d;
                        }
                        r.computed = diff.empty() ? "identical" : "different";
                        r.predicted = "identical";
                        r.verdict = verdict_of(diff.empty());
                        r.note = label + (diff.empty() ? "" : "; clause:dim:constituents counts " + diff);
                      }));
  out.push_back(timed("mode_independence.verdicts", "shared checks reach the same verdict", [&](CheckResult& r) {
    std::map<std::string, Verdict> va;
    for (const auto& c : a.checks) va[c.check_id] = c.verdict;
    std::size_t shared = 0, mismatched = 0;
    std::set<std::string> only;
    for (const auto* b : members) {
      std::map<std::string, Verdict> vb;
      for (const auto& c : b->checks) vb[c.check_id] = c.verdict;
      for (const auto& [id, v] : vb) {
        const auto it = va.find(id);
        if (it == va.end()) {
          only.insert(b->key + ":" + id);
          continue;
        }
        ++shared;
        mismatched += it->second == v ? 0 : 1;
      }
      for (const auto& [id, v] : va)
        if (!vb.count(id)) only.insert(a.key + ":" + id);
    }
    r.computed = std::to_string(mismatched) + " of " + std::to_string(shared) + " shared checks differ";
    r.predicted = "0 differ";
    r.verdict = verdict_of(mismatched == 0);
    r.note = label + (only.empty() ? "" : "; checks present in one mode only: " + join(only));
  }));
  return out;
}

}  // namespace

CaseReport run_case(const GroupSpec& spec, const VerifyOptions& options) {
  CaseReport report;
  report.spec = spec;
  report.key = spec.key();
  if (spec.expected_order() > options.table_bound) {
    report.inapplicable = true;
    report.reason = "order " + std::to_string(spec.expected_order()) + " exceeds the table bound " +
                    std::to_string(options.table_bound);
    CheckResult c;
    c.check_id = "case.size_bound";
    c.clause = "size bound";
    c.computed = std::to_string(spec.expected_order());
    c.predicted = "<= " + std::to_string(options.table_bound);
    c.verdict = Verdict::Inapplicable;
    report.checks.push_back(std::move(c));
    return report;
  }
  CaseRunner(spec, options, report).run();
  return report;
}

SuiteReport run_suite(const std::vector<GroupSpec>& cases, const VerifyOptions& options) {
  SuiteReport out;
  for (const auto& spec : cases) out.cases.push_back(run_case(spec, options));

  // Ring-mode independence: equal and mixed characteristic at the same (p, k, r, flavor).
  std::map<std::string, std::vector<const CaseReport*>> groups;
  for (const auto& c : out.cases) {
    if (c.inapplicable) continue;
    GroupSpec s = c.spec;
    s.mode = RingMode::Mixed;
    groups[s.key()].push_back(&c);
  }
  for (const auto& [key, members] : groups) {
    std::set<RingMode> modes;
    for (const auto* m : members) modes.insert(m->spec.mode);
    if (modes.size() < 2) continue;
    for (auto& c : mode_checks(members)) out.suite_checks.push_back(std::move(c));
  }

  if (options.classical_sweep) {
    out.suite_checks.push_back(timed("conjecture.classical_sweep",
                                     "r = 1 type A_{n-1}, n = 2..5, every twist, q in {2,3,4,5,7,8,9}",
                                     [&](CheckResult& r) {
                                       const auto rows = sweep_conjecture({});
                                       std::size_t agree = 0, inapplicable = 0;
                                       for (const auto& row : rows) {
                                         agree += row.agrees ? 1 : 0;
                                         inapplicable += row.conj.applicable ? 0 : 1;
                                       }
                                       r.computed = "agree=" + std::to_string(agree) +
                                                    " inapplicable=" + std::to_string(inapplicable);
                                       r.predicted = "agree=" + std::to_string(rows.size()) + " inapplicable=0";
                                       r.verdict = verdict_of(agree == rows.size() && inapplicable == 0);
                                     }));
  }
  return out;
}

std::vector<GroupSpec> parse_manifest(std::istream& is) {
  std::map<std::string, std::string> defaults{{"k", "1"}, {"mode", "mixed"}, {"flavor", "gl"}};
  std::vector<std::map<std::string, std::string>> blocks;
  std::map<std::string, std::string>* current = nullptr;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line == "[case]") {
      blocks.push_back(defaults);
      current = &blocks.back();
      continue;
    }
    if (line == "[defaults]") {
      current = &defaults;
      continue;
    }
    if (line.front() == '[') throw std::invalid_argument("manifest line " + std::to_string(lineno) + ": unknown section " + line);
    const auto eq = line.find('=');
    if (eq == std::string::npos || current == nullptr)
      throw std::invalid_argument("manifest line " + std::to_string(lineno) + ": expected key = value inside a section");
    auto key = line.substr(0, eq);
    key.erase(key.find_last_not_of(" \t") + 1);
    auto value = line.substr(eq + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    static const std::set<std::string> known{"p", "k", "r", "mode", "flavor"};
    if (!known.count(key)) throw std::invalid_argument("manifest line " + std::to_string(lineno) + ": unknown key " + key);
    (*current)[key] = value;
  }

  std::vector<GroupSpec> out;
  for (auto block : blocks) {
    for (const char* req : {"p", "r"})
      if (!block.count(req)) throw std::invalid_argument(std::string("manifest case without ") + req);
    for (const auto& p : split_list(block["p"]))
      for (const auto& k : split_list(block["k"]))
        for (const auto& r : split_list(block["r"]))
          for (const auto& f : split_list(block["flavor"]))
            for (const auto& m : split_list(block["mode"])) {
              GroupSpec s;
              s.p = std::stoi(p);
              s.k = std::stoi(k);
              s.r = std::stoi(r);
              s.flavor = parse_flavor(f);
              s.mode = parse_ring_mode(m);
              if (!is_prime(s.p) || s.k < 1 || s.r < 1) throw std::invalid_argument("manifest case " + s.key() + " is invalid");
              out.push_back(s);
            }
  }
  return out;
}

std::vector<GroupSpec> load_manifest(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open manifest " + path);
  return parse_manifest(is);
}

std::string report_json(const SuiteReport& report, bool timing) {
  nlohmann::json j;
  auto& cases = j["cases"] = nlohmann::json::array();
  for (const auto& c : report.cases) {
    nlohmann::json cj;
    cj["case"] = c.key;
    cj["p"] = c.spec.p;
    cj["k"] = c.spec.k;
    cj["r"] = c.spec.r;
    cj["mode"] = to_string(c.spec.mode);
    cj["flavor"] = to_string(c.spec.flavor);
    cj["status"] = c.inapplicable ? "inapplicable" : (c.ok() ? "pass" : "fail");
    if (!c.reason.empty()) cj["reason"] = c.reason;
    auto& checks = cj["checks"] = nlohmann::json::array();
    for (const auto& chk : c.checks) checks.push_back(check_json(c.key, chk, timing));
    cases.push_back(std::move(cj));
  }
  auto& suite = j["suite_checks"] = nlohmann::json::array();
  for (const auto& chk : report.suite_checks) suite.push_back(check_json("suite", chk, timing));
  j["summary"] = {{"pass", report.count(Verdict::Pass)},
                  {"fail", report.count(Verdict::Fail)},
                  {"inapplicable", report.count(Verdict::Inapplicable)}};
  j["ok"] = report.ok();
  return j.dump(1);
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream os;
  auto line = [&](const std::string& key, const CheckResult& c) {
    os << to_string(c.verdict) << "\t" << key << "\t" << c.check_id << "\tcomputed: " << c.computed
       << "\tpredicted: " << c.predicted;
    if (!c.note.empty()) os << "\t(" << c.note << ")";
    os << "\n";
  };
  for (const auto& c : report.cases)
    for (const auto& chk : c.checks) line(c.key, chk);
  for (const auto& chk : report.suite_checks) line("suite", chk);
  os << "summary: pass=" << report.count(Verdict::Pass) << " fail=" << report.count(Verdict::Fail)
     << " inapplicable=" << report.count(Verdict::Inapplicable) << "\n";
  return os.str();
}

}  // namespace coxrep
