// Command-line front end: torus classification, predictions, the classical
// sign sweep, verification runs and character-table dumps.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "coxrep/cache.hpp"
#include "coxrep/predict.hpp"
#include "coxrep/torus.hpp"
#include "coxrep/verify.hpp"
#include "coxrep/weyl.hpp"

using namespace coxrep;

namespace {

struct CaseArgs {
  int p = 3;
  int k = 1;
  int r = 2;
  std::string mode = "mixed";
  std::string flavor = "gl";

  GroupSpec spec() const { return {p, k, r, parse_ring_mode(mode), parse_flavor(flavor)}; }
};

void add_case_options(CLI::App* cmd, CaseArgs& a, bool flavor) {
  cmd->add_option("--p", a.p, "residue characteristic")->check(CLI::PositiveNumber);
  cmd->add_option("--k", a.k, "residue degree, q = p^k")->check(CLI::PositiveNumber);
  cmd->add_option("--r", a.r, "level")->check(CLI::PositiveNumber);
  cmd->add_option("--mode", a.mode, "mixed (Galois ring) or equal (F_q[t]/t^r)")->check(CLI::IsMember({"mixed", "equal"}));
  if (flavor) cmd->add_option("--flavor", a.flavor, "gl or sl")->check(CLI::IsMember({"gl", "sl"}));
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

Cache make_cache(const std::string& dir) { return dir.empty() ? Cache::from_environment() : Cache(dir); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter-torus Deligne-Lusztig characters of GL2/SL2 over finite local rings"};
  app.require_subcommand(1);
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "cache directory (default: $COXREP_CACHE_DIR, unset disables caching)");

  CaseArgs tor;
  std::string tor_out;
  std::int64_t psi_scale = 1;
  auto* classify_cmd = app.add_subcommand("classify-torus", "classify every character of the Coxeter torus (JSON lines)");
  add_case_options(classify_cmd, tor, false);
  classify_cmd->add_option("--psi", psi_scale, "additive character scale c in psi_c")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--out", tor_out, "output file");

  CaseArgs pre;
  std::string pre_out;
  auto* predict_cmd = app.add_subcommand("predict", "predicted dimension, sign and constituents per theta (JSON lines)");
  add_case_options(predict_cmd, pre, true);
  predict_cmd->add_option("--out", pre_out, "output file");

  std::vector<std::string> sweep_types{"A"};
  int n_min = 2, n_max = 5;
  std::vector<std::int64_t> sweep_qs{2, 3, 4, 5, 7, 8, 9};
  bool coxeter_only = false;
  std::string sweep_format = "tsv", sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep-conjecture", "level-one sign sweep over classical Weyl groups");
  sweep_cmd->add_option("--types", sweep_types, "Cartan types (A, B, C, D)")->delimiter(',');
  sweep_cmd->add_option("--n-min", n_min, "smallest n (type A: GL_n)")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--n-max", n_max, "largest n")->check(CLI::Range(1, 6));
  sweep_cmd->add_option("--q", sweep_qs, "prime powers")->delimiter(',');
  sweep_cmd->add_flag("--coxeter-only", coxeter_only, "only the Coxeter twist");
  sweep_cmd->add_option("--format", sweep_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  sweep_cmd->add_option("--out", sweep_out, "output file");

  CaseArgs ver;
  std::string manifest, report_path;
  bool no_timing = false, no_adjunction = false, no_sweep = false;
  std::uint64_t table_bound = kDefaultTableBound;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification checks; exit 0 iff nothing fails");
  add_case_options(verify_cmd, ver, true);
  verify_cmd->add_option("--manifest", manifest, "key = value manifest with [case] blocks");
  verify_cmd->add_option("--report", report_path, "write the JSON report here");
  verify_cmd->add_flag("--no-timing", no_timing, "omit runtimes from the JSON report");
  verify_cmd->add_flag("--no-adjunction", no_adjunction, "skip the adjunction sweep");
  verify_cmd->add_flag("--no-sweep", no_sweep, "skip the classical sign sweep");
  verify_cmd->add_option("--table-bound", table_bound, "largest group order for which tables are computed");

  CaseArgs tab;
  std::string tab_format = "tsv", tab_out;
  auto* table_cmd = app.add_subcommand("table", "dump a character table");
  add_case_options(table_cmd, tab, true);
  table_cmd->add_option("--format", tab_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  table_cmd->add_option("--out", tab_out, "output file");
  table_cmd->add_option("--table-bound", table_bound, "largest group order accepted");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      const auto T = CoxeterTorus::build(tor.spec());
      std::ostringstream os;
      for (std::uint64_t n = 0; n < T->dual_size(); ++n)
        os << to_json_line(*T, classify(*T, T->character(n), {static_cast<Code>(psi_scale)})) << "\n";
      emit(tor_out, os.str());
      return 0;
    }
    if (*predict_cmd) {
      const auto spec = pre.spec();
      const auto T = CoxeterTorus::build(spec);
      const auto q = static_cast<std::int64_t>(T->q());
      std::ostringstream os;
      for (std::uint64_t n = 0; n < T->dual_size(); ++n) {
        const auto tc = classify(*T, T->character(n));
        const auto p = spec.flavor == Flavor::GL ? predict_gl2(tc, q, spec.r) : predict_sl2(tc, q, spec.r);
        os << "{\"index\":" << n << ",\"prediction\":" << to_json_line(p) << "}\n";
      }
      emit(pre_out, os.str());
      return 0;
    }
    if (*sweep_cmd) {
      SweepOptions o;
      o.types.clear();
      for (const auto& t : sweep_types) o.types.push_back(parse_cartan_type(t));
      o.n_min = n_min;
      o.n_max = n_max;
      o.qs = sweep_qs;
      o.coxeter_only = coxeter_only;
      const auto rows = sweep_conjecture(o);
      emit(sweep_out, sweep_format == "tsv" ? sweep_tsv(rows) : sweep_json(rows) + "\n");
      for (const auto& r : rows)
        if (!r.agrees) return 1;
      return 0;
    }
    if (*verify_cmd) {
      VerifyOptions o;
      o.cache = make_cache(cache_dir);
      o.table_bound = table_bound;
      o.adjunction = !no_adjunction;
      o.classical_sweep = !no_sweep && !manifest.empty();
      const auto cases = manifest.empty() ? std::vector<GroupSpec>{ver.spec()} : load_manifest(manifest);
      const auto report = run_suite(cases, o);
      std::cout << report_text(report);
      if (!report_path.empty()) emit(report_path, report_json(report, !no_timing) + "\n");
      return report.ok() ? 0 : 1;
    }
    if (*table_cmd) {
      const auto cache = make_cache(cache_dir);
      const auto spec = tab.spec();
      const auto G = cache.group(spec, table_bound);
      const auto t = cache.table(spec, G, table_bound);
      if (tab_format == "tsv") {
        std::ostringstream os;
        write_table_tsv(t, os);
        emit(tab_out, os.str());
      } else {
        emit(tab_out, table_to_json(t) + "\n");
      }
      return 0;
    }
  } catch (const SizeBoundExceeded& e) {
    std::cerr << "size bound: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
