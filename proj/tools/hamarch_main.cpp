#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamarch/cubic.hpp"
#include "hamarch/extrapolate.hpp"
#include "hamarch/kpz.hpp"
#include "hamarch/transfer.hpp"
#include "hamarch/updown.hpp"

namespace fs = std::filesystem;
using namespace hamarch;

namespace {

constexpr const char* kVersion = HAMARCH_VERSION;

struct GlobalOpts {
  int threads = 0;
  unsigned precision = 64;
  std::size_t memo_capacity = std::size_t(1) << 22;
};

UdOptions ud_options(const GlobalOpts& g) {
  return UdOptions{g.threads, g.memo_capacity};
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

fs::path default_data_dir() {
  if (const char* env = std::getenv("HAMARCH_DATA_DIR")) return env;
  fs::path local = "data/golden";
  if (fs::exists(local / "SHA256SUMS")) return local;
#ifdef HAMARCH_SOURCE_DATA_DIR
  return HAMARCH_SOURCE_DATA_DIR;
#else
  return local;
#endif
}

int cmd_enumerate(const std::string& ens, bool cubic, int n_max, const std::string& method,
                  const fs::path& out, const fs::path& cache_dir, const GlobalOpts& g) {
  EnsembleSpec spec = spec_for({tag_from_name(ens), !cubic});
  bool transfer_ok = spec.id.colored && spec.id.tag != EnsembleTag::V &&
                     spec.id.tag != EnsembleTag::U;
  if ((method == "transfer" || method == "both") && !transfer_ok)
    throw Unsupported("method '" + method + "' not available for ensemble " + spec.name());
  if (n_max < spec.min_n) throw Error("N below the ensemble's minimal size");

  CountCache cache(cache_dir);
  CountSequence seq;
  seq.ensemble = spec.id;
  seq.tool_version = kVersion;
  seq.method = method == "transfer" ? CountMethod::Transfer : CountMethod::UpDown;
  seq.crosschecked = method == "both";

  // A transfer run over the whole z/y/x table shares one forward evolution.
  std::vector<BigInt> prefix;
  bool need_transfer = method != "updown";
  bool prefix_supported = spec.id.tag == EnsembleTag::Z || spec.id.tag == EnsembleTag::Y ||
                          spec.id.tag == EnsembleTag::X;
  bool all_cached = true;
  for (int n = spec.min_n; n <= n_max && all_cached; ++n)
    all_cached = cache.lookup(spec.id, seq.method, n).has_value();
  if (need_transfer && prefix_supported && !all_cached) {
    switch (spec.id.tag) {
      case EnsembleTag::Z: prefix = tm_z_prefix(n_max); break;
      case EnsembleTag::Y: prefix = tm_y_prefix(n_max); break;
      default: prefix = tm_x_prefix(n_max); break;
    }
  }
  auto transfer_value = [&](int n) {
    if (!prefix.empty()) return prefix[std::size_t(n - (spec.id.tag == EnsembleTag::Z))];
    return tm_enumerate(spec, n);
  };

  for (int n = spec.min_n; n <= n_max; ++n) {
    BigInt value;
    if (auto hit = cache.lookup(spec.id, seq.method, n)) {
      value = *hit;
    } else {
      if (method == "both") {
        value = ud_enumerate(spec, n, ud_options(g));
        BigInt tm = transfer_value(n);
        if (tm != value)
          throw Error("engine mismatch for " + spec.name() + " at N=" + std::to_string(n) +
                      ": updown=" + value.str() + " transfer=" + tm.str());
      } else if (seq.method == CountMethod::Transfer) {
        value = transfer_value(n);
      } else {
        value = ud_enumerate(spec, n, ud_options(g));
      }
      cache.store(spec.id, seq.method, n, value);
    }
    seq.entries.emplace_back(n, value);
    std::cerr << spec.name() << " N=" << n << ": " << value << "\n";
  }
  write_text(out, to_json_string(seq));
  return 0;
}

int cmd_extrapolate(const fs::path& in, const std::string& quantity, int k_max,
                    const fs::path& out, const fs::path& csv_out) {
  CountSequence seq = load_count_sequence(in);
  Quantity q = quantity == "mu2" ? Quantity::GrowthRateSquared : Quantity::Exponent;
  Estimate est = estimate(seq, q, k_max);
  write_text(out, est.to_json_string());
  if (!csv_out.empty()) {
    write_text(csv_out, to_csv({"family", "k", "N", "value"}, est.diagnostics_csv_rows()));
  }
  std::cerr << "estimate: " << est.value.str(16) << "  (+/- " << est.uncertainty.str(3)
            << ", " << est.stable_digits << " stable digits)\n";
  return 0;
}

std::string fixed_digits(const Real& v, int digits) {
  return v.str(digits, std::ios_base::fixed);
}

int cmd_predict(double n_in, const std::string& alpha_str, const std::string& format,
                const fs::path& out, const fs::path& data_dir, bool watermelon,
                const std::string& sweep) {
  Real alpha;
  if (alpha_str == "4/3")
    alpha = Real(4) / 3;
  else if (alpha_str == "9/8")
    alpha = Real(9) / 8;
  else
    alpha = Real(alpha_str);
  Real n(n_in);

  using nlohmann::json;
  if (watermelon) {
    std::vector<std::vector<std::string>> rows;
    for (int l = 1; l <= 12; ++l)
      rows.push_back({std::to_string(l), fixed_digits(watermelon_delta(l, alpha), 12)});
    write_text(out, to_csv({"l", "delta"}, rows));
    return 0;
  }
  if (!sweep.empty()) {
    // grid "lo:hi:steps" of alpha values
    double lo, hi;
    int steps;
    if (std::sscanf(sweep.c_str(), "%lf:%lf:%d", &lo, &hi, &steps) != 3 || steps < 2)
      throw Error("--sweep expects lo:hi:steps with steps >= 2");
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < steps; ++i) {
      Real a = Real(lo) + Real(hi - lo) * i / (steps - 1);
      BetaPredictions b = predicted_betas(n, a);
      rows.push_back({fixed_digits(a, 6), fixed_digits(b.beta_z, 6), fixed_digits(b.beta_y, 6),
                      fixed_digits(b.beta_x, 6), fixed_digits(b.beta_w, 6),
                      fixed_digits(b.beta_v, 6), fixed_digits(b.beta_u, 6)});
    }
    write_text(out, to_csv({"alpha", "beta_z", "beta_y", "beta_x", "beta_w", "beta_v", "beta_u"},
                           rows));
    return 0;
  }

  if (n != 0) {
    // Only the SLE/duality record is defined away from n = 0.
    SleDuality d = sle_and_duality(n);
    json j;
    j["n"] = n_in;
    j["kappa"] = fixed_digits(d.kappa, 12);
    j["g_tilde"] = fixed_digits(d.g_tilde, 12);
    j["g_prime"] = fixed_digits(d.g_prime, 12);
    j["n_prime"] = fixed_digits(d.n_prime, 12);
    j["alpha_ansatz"] = fixed_digits(d.alpha_ansatz, 12);
    j["gammaL_bicubic"] = fixed_digits(d.gammaL_bicubic, 12);
    write_text(out, j.dump(1) + "\n");
    return 0;
  }

  BetaPredictions naive = predicted_betas(n, Real(1));
  BetaPredictions corrected = predicted_betas(n, alpha);
  BetaClosedForms naive_forms = beta_closed_forms(false);
  BetaClosedForms corr_forms = beta_closed_forms(true);

  struct Row {
    const char* name;
    EnsembleTag tag;
    Quantity q;
    Real naive_v, corr_v;
    std::string naive_form, corr_form;
  };
  std::vector<Row> rows = {
      {"beta_z", EnsembleTag::Z, Quantity::Exponent, naive.beta_z, corrected.beta_z,
       naive_forms.beta_z, corr_forms.beta_z},
      {"beta_y", EnsembleTag::Y, Quantity::Exponent, naive.beta_y, corrected.beta_y,
       naive_forms.beta_y, corr_forms.beta_y},
      {"beta_x", EnsembleTag::X, Quantity::Exponent, naive.beta_x, corrected.beta_x,
       naive_forms.beta_x, corr_forms.beta_x},
      {"beta_w", EnsembleTag::W, Quantity::Exponent, naive.beta_w, corrected.beta_w,
       naive_forms.beta_w, corr_forms.beta_w},
      {"beta_v", EnsembleTag::V, Quantity::Exponent, naive.beta_v, corrected.beta_v,
       naive_forms.beta_v, corr_forms.beta_v},
      {"beta_u", EnsembleTag::U, Quantity::Exponent, naive.beta_u, corrected.beta_u,
       naive_forms.beta_u, corr_forms.beta_u},
  };

  std::vector<std::vector<std::string>> csv_rows;
  json jrows = json::array();
  for (const Row& r : rows) {
    std::string est_v = "", est_u = "";
    try {
      CountSequence seq = load_golden(data_dir, r.tag);
      Estimate est = estimate(seq, r.q, 7);
      est_v = fixed_digits(est.value, 5);
      est_u = est.uncertainty.str(2);
    } catch (const std::exception&) {
      // numeric column is best-effort; the formula columns always print
    }
    csv_rows.push_back({r.name, est_v, est_u, fixed_digits(r.naive_v, 5),
                        fixed_digits(r.corr_v, 5)});
    json jr;
    jr["exponent"] = r.name;
    jr["numeric_estimate"] = est_v;
    jr["numeric_uncertainty"] = est_u;
    jr["naive_kpz"] = fixed_digits(r.naive_v, 5);
    jr["corrected_kpz"] = fixed_digits(r.corr_v, 5);
    jr["naive_exact"] = r.naive_form;
    jr["corrected_exact"] = r.corr_form;
    jrows.push_back(std::move(jr));
  }

  if (format == "json") {
    json j;
    j["alpha"] = alpha_str;
    j["gamma"] = fixed_digits(naive.gamma, 12);
    j["rows"] = std::move(jrows);
    write_text(out, j.dump(1) + "\n");
  } else {
    write_text(out, to_csv({"exponent", "numeric_estimate", "numeric_uncertainty", "naive_kpz",
                            "corrected_kpz"},
                           csv_rows));
  }
  return 0;
}

struct CheckReport {
  int failures = 0;
  void check(bool ok, const std::string& what) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
  }
};

int cmd_crosscheck(const fs::path& data_dir, bool deep, bool no_transfer,
                   const GlobalOpts& g) {
  CheckReport rep;
  UdOptions ud = ud_options(g);

  if (auto bad = verify_golden_checksums(data_dir))
    rep.check(false, "golden checksum: " + *bad);
  else
    rep.check(true, "golden checksums");

  struct Depths {
    EnsembleTag tag;
    int ud_n, tm_n;
  };
  std::vector<Depths> depths = deep ? std::vector<Depths>{{EnsembleTag::Z, 14, 16},
                                                          {EnsembleTag::Y, 10, 8},
                                                          {EnsembleTag::X, 10, 8},
                                                          {EnsembleTag::W, 12, 9},
                                                          {EnsembleTag::V, 10, 0},
                                                          {EnsembleTag::U, 10, 0}}
                                    : std::vector<Depths>{{EnsembleTag::Z, 8, 12},
                                                          {EnsembleTag::Y, 6, 6},
                                                          {EnsembleTag::X, 6, 6},
                                                          {EnsembleTag::W, 7, 7},
                                                          {EnsembleTag::V, 6, 0},
                                                          {EnsembleTag::U, 6, 0}};

  for (const Depths& d : depths) {
    EnsembleSpec spec = spec_for({d.tag, true});
    CountSequence gold;
    try {
      gold = load_golden(data_dir, d.tag);
    } catch (const std::exception& e) {
      rep.check(false, "load golden " + tag_name(d.tag) + ": " + e.what());
      continue;
    }
    for (int n = spec.min_n; n <= d.ud_n; ++n) {
      BigInt got = ud_enumerate(spec, n, ud);
      if (got != gold.at(n)) {
        rep.check(false, "updown " + spec.name() + " N=" + std::to_string(n) + ": got " +
                             got.str() + ", table says " + gold.at(n).str());
        break;
      }
      if (n == d.ud_n) rep.check(true, "updown " + spec.name() + " matches table to N=" +
                                           std::to_string(n));
    }
    for (int n = spec.min_n; !no_transfer && n <= d.tm_n; ++n) {
      BigInt got = tm_enumerate(spec, n);
      if (got != gold.at(n)) {
        rep.check(false, "transfer " + spec.name() + " N=" + std::to_string(n) + ": got " +
                             got.str() + ", table says " + gold.at(n).str());
        break;
      }
      if (n == d.tm_n) rep.check(true, "transfer " + spec.name() + " matches table to N=" +
                                           std::to_string(n));
    }
  }

  // cubic engine against the closed forms
  int cubic_max = deep ? 12 : 8;
  for (EnsembleTag tag : kAllTags) {
    EnsembleSpec spec = spec_for({tag, false});
    bool ok = true;
    for (int n = spec.min_n; n <= cubic_max; ++n) {
      if (cubic_enumerate(spec, n, ud) != cubic_closed_form(spec.id, n)) {
        rep.check(false, "cubic " + tag_name(tag) + " N=" + std::to_string(n) +
                             " != closed form");
        ok = false;
        break;
      }
    }
    if (ok) rep.check(true, "cubic " + tag_name(tag) + " matches closed form to N=" +
                               std::to_string(cubic_max));
  }
  {
    bool ok = true;
    for (int n = 0; n <= 20; ++n)
      ok = ok && cubic_binomial_sum(n) == cubic_closed_form({EnsembleTag::Z, false}, n);
    rep.check(ok, "cubic binomial-sum identity to N=20");
  }

  // algebraic identities
  {
    bool ok = true;
    Real tol = Real("1e-12");
    for (int i = 0; i <= 10; ++i) {
      Real alpha = 1 + Real(i) / 10;
      BetaPredictions b = predicted_betas(Real(0), alpha);
      ok = ok && abs(2 * b.beta_u - b.beta_v - (2 * b.beta_w + b.gamma - 3)) < tol;
    }
    rep.check(ok, "consistency relation 2*beta_u - beta_v = 2*beta_w + gamma - 3");
    ok = true;
    for (int i = 0; i <= 110; ++i) {
      Real c = -10 + Real(i) / 10;
      Real gl = gamma_liouville(c);
      ok = ok && abs(gamma_string(c) - (1 - 4 / (gl * gl))) < tol;
    }
    rep.check(ok, "gamma(c) = 1 - 4/gamma_L(c)^2 on c in [-10, 1]");
    ok = true;
    for (int l = 1; l <= 12; ++l)
      ok = ok && abs(watermelon_delta(l, Real(9) / 8) - Real(l) / 8) < tol;
    rep.check(ok, "watermelon Delta_l = l/8 at alpha = 9/8");
    ok = true;
    for (double nv : {0.0, 0.5, 1.0}) {
      Real n(nv);
      ok = ok && abs(sle_and_duality(n).gammaL_bicubic -
                     gamma_liouville(central_charge(n, Packing::Fully))) < tol;
    }
    rep.check(ok, "gamma_L(kappa) matches gamma_L(c_fpl(n)) at n = 0, 1/2, 1");
  }

  std::cout << (rep.failures ? "crosscheck FAILED\n" : "crosscheck passed\n");
  return rep.failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and exponent analysis for Hamiltonian-path "
               "configurations on planar (bi)cubic maps"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  app.add_option("--precision", g.precision, "significant decimal digits for real arithmetic")
      ->default_val(64);
  app.add_option("--memo-capacity", g.memo_capacity, "arch-count memo entries per worker");

  auto* enumerate = app.add_subcommand("enumerate", "count configurations up to N");
  std::string ens = "z", method = "both";
  bool cubic = false;
  int n_max = 10;
  fs::path out_path, cache_dir = ".hamarch-cache", in_path, csv_path;
  enumerate->add_option("-e,--ensemble", ens, "ensemble letter z|y|x|w|v|u")->required();
  enumerate->add_flag("--cubic", cubic, "drop the bicoloring (cubic maps)");
  enumerate->add_option("-n,--n-max", n_max, "largest N")->required();
  enumerate->add_option("--method", method, "transfer|updown|both")
      ->check(CLI::IsMember({"transfer", "updown", "both"}));
  enumerate->add_option("-o,--out", out_path, "output CountSequence JSON ('-' = stdout)");
  enumerate->add_option("--cache-dir", cache_dir, "result cache directory");

  auto* extrap = app.add_subcommand("extrapolate", "estimate mu^2 or an exponent");
  std::string quantity = "mu2";
  int k_max = 7;
  extrap->add_option("-i,--in", in_path, "CountSequence JSON file")->required();
  extrap->add_option("-q,--quantity", quantity, "mu2|beta")
      ->check(CLI::IsMember({"mu2", "beta"}));
  extrap->add_option("--k-max", k_max, "deepest acceleration order");
  extrap->add_option("-o,--out", out_path, "Estimate JSON ('-' = stdout)");
  extrap->add_option("--csv", csv_path, "diagnostics table CSV");

  auto* predict = app.add_subcommand("predict", "KPZ predictions and comparisons");
  double n_value = 0.0;
  std::string alpha = "4/3", format = "csv", sweep;
  bool watermelon = false;
  fs::path data_dir = default_data_dir();
  predict->add_option("-n,--n", n_value, "loop fugacity");
  predict->add_option("--alpha", alpha, "correction factor (e.g. 1, 4/3, 9/8)");
  predict->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  predict->add_option("-o,--out", out_path, "output path ('-' = stdout)");
  predict->add_option("--data-dir", data_dir, "golden tables for the numeric column");
  predict->add_flag("--watermelon", watermelon, "emit Delta_l for l = 1..12");
  predict->add_option("--sweep", sweep, "alpha grid lo:hi:steps");

  auto* crosscheck = app.add_subcommand("crosscheck", "run the oracle suite");
  bool deep = false, no_transfer = false;
  fs::path cc_data_dir = default_data_dir();
  crosscheck->add_option("--data-dir", cc_data_dir, "golden table directory");
  crosscheck->add_flag("--deep", deep, "acceptance-depth checks (slower)");
  crosscheck->add_flag("--no-transfer", no_transfer,
                       "skip the transfer engine (up-down checks still run)");

  try {
    app.parse(argc, argv);
    set_real_precision(g.precision);
    if (*enumerate)
      return cmd_enumerate(ens, cubic, n_max, method, out_path, cache_dir, g);
    if (*extrap) return cmd_extrapolate(in_path, quantity, k_max, out_path, csv_path);
    if (*predict)
      return cmd_predict(n_value, alpha, format, out_path, data_dir, watermelon, sweep);
    if (*crosscheck) return cmd_crosscheck(cc_data_dir, deep, no_transfer, g);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
