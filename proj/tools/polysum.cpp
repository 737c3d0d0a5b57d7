// polysum: decompose natural numbers into practical + polygonal parts,
// check practicality, and run exhaustive representability surveys.
//
// Exit codes: 0 success, 1 verification failure (a checked claim fails or
// no decomposition exists), 2 usage error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polysum/arith.hpp"
#include "polysum/decompose.hpp"
#include "polysum/polygonal.hpp"
#include "polysum/practical.hpp"
#include "polysum/survey.hpp"

namespace ps = polysum;
using nlohmann::json;
using ps::u32;
using ps::u64;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

// Sieve reuse across invocations: versioned cache files keyed by bound.
ps::PracticalSieve load_or_generate(u64 bound, const std::string& cache_dir) {
  if (cache_dir.empty()) return ps::generate_practicals(bound);
  std::filesystem::create_directories(cache_dir);
  std::filesystem::path file =
      std::filesystem::path(cache_dir) / ("practical-" + std::to_string(bound) + ".psieve");
  if (std::filesystem::exists(file)) {
    try {
      ps::PracticalSieve sieve = ps::PracticalSieve::load(file.string());
      if (sieve.bound >= bound) return sieve;
    } catch (const std::exception& e) {
      std::cerr << "ignoring unreadable cache " << file << ": " << e.what() << "\n";
    }
  }
  ps::PracticalSieve sieve = ps::generate_practicals(bound);
  try {
    sieve.save(file.string());
  } catch (const std::exception& e) {
    std::cerr << "cache write failed for " << file << ": " << e.what() << "\n";
  }
  return sieve;
}

json report_json(const ps::PracticalityReport& rep) {
  json j{{"n", rep.n},
         {"practical", rep.practical},
         {"sigma_prefixes", rep.sigma_prefixes}};
  if (rep.failing_prime)
    j["failing_prime"] = *rep.failing_prime;
  else
    j["failing_prime"] = nullptr;
  return j;
}

int run_practical_check(u64 n, const std::string& format) {
  ps::PracticalityReport rep = ps::is_practical(n);
  if (format == "json") {
    std::cout << report_json(rep).dump() << "\n";
  } else if (rep.practical) {
    std::cout << "practical\n";
  } else {
    std::cout << "not practical (failing prime " << *rep.failing_prime << ")\n";
  }
  return kExitOk;
}

int run_practical_sieve(u64 bound, const std::string& out) {
  ps::PracticalSieve sieve = ps::generate_practicals(bound);
  sieve.save(out);
  std::cout << "wrote sieve bound=" << bound << " count=" << sieve.count()
            << " to " << out << "\n";
  return kExitOk;
}

int run_decompose_tri(u64 n, bool check, const std::string& format) {
  ps::TriDecomposition d = ps::decompose_practical_triangular(n);
  bool ok = !check || ps::verify(d);
  if (format == "json") {
    json j = json::parse(ps::witness_json(d));
    if (check) j["verified"] = ok;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << d.n << " = " << d.practical_part << " (practical) + T_"
              << d.tri_index << " = "
              << u64{d.tri_index} * (d.tri_index + 1) / 2 << "  [x=" << d.x
              << " m=" << d.m << " s=" << d.cofactor << "]";
    if (check) std::cout << (ok ? "  verified" : "  VERIFICATION FAILED");
    std::cout << "\n";
  }
  if (!ok) {
    std::cerr << "witness for n=" << n << " failed re-verification\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}

int run_decompose_poly(u32 s, u64 n, u32 r, u32 max_k, bool check,
                       const std::string& format) {
  std::optional<ps::Theorem2Witness> w = ps::theorem2_decompose(s, n, r, max_k);
  if (!w) {
    if (format == "json") {
      std::cout << json{{"n", n}, {"kind", "poly"}, {"s", s}, {"found", false}}
                       .dump()
                << "\n";
    } else {
      std::cout << "no decomposition found for n=" << n << " (s=" << s
                << ", r=" << r << ", max_k=" << max_k << ")\n";
    }
    return kExitVerifyFail;
  }
  bool ok = !check || ps::verify(w->dec);
  if (format == "json") {
    json j = json::parse(ps::witness_json(*w));
    if (check) j["verified"] = ok;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << n << " = " << w->dec.practical_part << " (practical) + P_" << s
              << "(" << w->dec.x << ") + P_" << s << "(" << w->dec.y << ")"
              << "  [r=" << w->r << " k=" << w->k << " n_k=" << w->n_k << "]";
    if (check) std::cout << (ok ? "  verified" : "  VERIFICATION FAILED");
    std::cout << "\n";
  }
  if (!ok) {
    std::cerr << "witness for n=" << n << " failed re-verification\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}

int run_survey_table(const std::vector<u32>& ss, u64 bound, bool allow_zero,
                     const std::string& format, const std::string& cache_dir) {
  ps::PracticalSieve sieve = load_or_generate(bound - 1, cache_dir);
  if (format == "csv") std::cout << ps::survey_csv_header() << "\n";
  for (u32 s : ss) {
    ps::SurveyRow row = ps::survey_row(s, bound, allow_zero, &sieve);
    if (format == "json") {
      std::cout << ps::to_json(row) << "\n";
    } else if (format == "csv") {
      std::cout << ps::to_csv(row) << "\n";
    } else {
      std::cout << "s=" << row.s_gon << " bound=" << row.bound
                << " non-representable=" << row.count_non_representable;
      if (row.largest_non_representable)
        std::cout << " largest=" << *row.largest_non_representable;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_verify_conj2(const std::vector<u32>& ss, u64 bound, bool allow_zero,
                     const std::string& format, const std::string& cache_dir) {
  ps::PracticalSieve sieve = load_or_generate(bound - 1, cache_dir);
  bool all_covered = true;
  for (u32 s : ss) {
    ps::RepBitmap rep = ps::rep_two_gonal(s, bound, allow_zero, &sieve);
    std::vector<u64> clear;
    for (u64 n = 1; n < bound && clear.size() < 16; ++n)
      if (!rep.bits.test(n)) clear.push_back(n);
    u64 total_clear = bound - 1 - (rep.bits.count() - (rep.bits.test(0) ? 1 : 0));
    if (format == "json") {
      json j{{"s", s}, {"bound", bound}, {"covered", clear.empty()},
             {"non_representable_count", total_clear},
             {"first_non_representable", clear}};
      std::cout << j.dump() << "\n";
    } else if (clear.empty()) {
      std::cout << "s=" << s << " bound=" << bound
                << ": all representable as practical + two " << s << "-gonals\n";
    } else {
      std::cout << "s=" << s << " bound=" << bound << ": " << total_clear
                << " non-representable, first " << clear[0] << "\n";
    }
    if (!clear.empty()) all_covered = false;
  }
  return all_covered ? kExitOk : kExitVerifyFail;
}

int run_verify_prop47(u32 s, u64 bound, const std::string& format,
                      const std::string& cache_dir) {
  ps::PracticalSieve sieve = load_or_generate(bound - 1, cache_dir);
  ps::ObstructionCensus census = ps::obstruction_census(s, bound, &sieve);
  u64 gonal_count = ps::gonal_values_upto(s, bound - 1).size();
  // Representable class members need practical part 1 or 2, so at most
  // 2 * |gonals| + slack of the class can be representable.
  u64 slack = 2 * gonal_count + 2;
  u64 lower = census.class_size > slack ? census.class_size - slack : 0;
  bool ok = census.non_representable_in_class >= lower;
  if (format == "json") {
    json j{{"s", s},
           {"bound", bound},
           {"residue", census.residue},
           {"class_size", census.class_size},
           {"non_representable_in_class", census.non_representable_in_class},
           {"lower_bound", lower},
           {"verified", ok}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "s=" << s << " bound=" << bound << ": residue "
              << census.residue << " (mod 12), class size "
              << census.class_size << ", non-representable "
              << census.non_representable_in_class << " (bound >= " << lower
              << ") -> " << (ok ? "obstruction verified" : "VIOLATED") << "\n";
  }
  return ok ? kExitOk : kExitVerifyFail;
}

int run_params_theorem2(u32 s, u64 prime_cap, const std::string& format) {
  ps::Theorem2Params params = ps::theorem2_params(s, prime_cap);
  if (format == "json") {
    json j{{"s", params.s_gon},
           {"special_prime", params.special_prime},
           {"i_s", params.special_prime_index},
           {"A", params.A},
           {"prime_cap", params.prime_cap},
           {"product_at_cap", params.product_at_cap},
           {"r_estimate_ln_pr", params.r_estimate_ln_pr}};
    if (params.r_exact) {
      j["r_exact"] = *params.r_exact;
      j["N_of_s"] = *params.N_of_s;
    } else {
      j["r_exact"] = nullptr;
      j["N_of_s"] = nullptr;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "s=" << params.s_gon << ": special prime p_i(s)="
              << params.special_prime << " (i(s)=" << params.special_prime_index
              << "), A(s)=" << params.A << "\n";
    if (params.r_exact) {
      std::cout << "proof-mode r=" << *params.r_exact << ", N(s)=" << *params.N_of_s
                << "\n";
    } else {
      std::cout << "proof-mode r infeasible below prime cap " << params.prime_cap
                << ": product(1+1/p)=" << params.product_at_cap << " < A(s)="
                << params.A << "; estimate ln p_r ~ " << params.r_estimate_ln_pr
                << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sums of practical and polygonal numbers"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  std::string format = "text";
  std::string cache_dir;

  // practical check <n> / practical sieve --bound B --out FILE
  CLI::App* practical = app.add_subcommand("practical", "practicality tests");
  practical->require_subcommand(1);
  CLI::App* pcheck = practical->add_subcommand("check", "Stewart-Sierpinski test");
  u64 pcheck_n = 0;
  pcheck->add_option("n", pcheck_n, "number to test")->required();
  pcheck->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  CLI::App* psieve = practical->add_subcommand("sieve", "enumerate practicals");
  u64 psieve_bound = 0;
  std::string psieve_out;
  psieve->add_option("--bound", psieve_bound, "sieve bound")->required();
  psieve->add_option("--out", psieve_out, "output file")->required();

  // decompose tri <n> / decompose poly --s S <n>
  CLI::App* decompose = app.add_subcommand("decompose", "decomposition engines");
  decompose->require_subcommand(1);
  CLI::App* dtri = decompose->add_subcommand("tri", "practical + triangular");
  u64 dtri_n = 0;
  bool dtri_check = false;
  dtri->add_option("n", dtri_n, "number to decompose")->required();
  dtri->add_flag("--check", dtri_check, "re-verify the witness from scratch");
  dtri->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  CLI::App* dpoly = decompose->add_subcommand("poly", "practical + two s-gonals");
  u64 dpoly_n = 0;
  u32 dpoly_s = 0, dpoly_r = 0, dpoly_maxk = 8;
  bool dpoly_check = false;
  dpoly->add_option("n", dpoly_n, "number to decompose")->required();
  dpoly->add_option("--s", dpoly_s, "gonality (s >= 4)")->required();
  dpoly->add_option("--r", dpoly_r, "prime count (default: max(3, i(s)))");
  dpoly->add_option("--max-k", dpoly_maxk, "largest special-prime exponent");
  dpoly->add_flag("--check", dpoly_check, "re-verify the witness from scratch");
  dpoly->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // survey table --s LIST --bound B [--no-zero-index]
  CLI::App* survey = app.add_subcommand("survey", "representability censuses");
  survey->require_subcommand(1);
  CLI::App* stable = survey->add_subcommand("table", "non-representable counts per s");
  std::vector<u32> stable_s;
  u64 stable_bound = 0;
  bool stable_nozero = false;
  std::string stable_format = "csv";
  stable->add_option("--s", stable_s, "gonalities (comma separated)")
      ->required()
      ->delimiter(',');
  stable->add_option("--bound", stable_bound, "survey bound (half-open)")->required();
  stable->add_flag("--no-zero-index", stable_nozero, "exclude P_s(0) = 0");
  stable->add_option("--format", stable_format)
      ->check(CLI::IsMember({"csv", "json", "text"}));
  stable->add_option("--cache-dir", cache_dir, "sieve cache directory");

  // verify conj2 --s LIST --bound B / verify prop47 --s S --bound B
  CLI::App* verify = app.add_subcommand("verify", "check the paper's claims");
  verify->require_subcommand(1);
  CLI::App* vconj2 = verify->add_subcommand(
      "conj2", "practical + two s-gonals coverage and counterexamples");
  std::vector<u32> vconj2_s;
  u64 vconj2_bound = 0;
  bool vconj2_nozero = false;
  vconj2->add_option("--s", vconj2_s, "gonalities")->required()->delimiter(',');
  vconj2->add_option("--bound", vconj2_bound, "bound")->required();
  vconj2->add_flag("--no-zero-index", vconj2_nozero, "exclude P_s(0) = 0");
  vconj2->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  vconj2->add_option("--cache-dir", cache_dir, "sieve cache directory");
  CLI::App* vprop = verify->add_subcommand("prop47", "mod-12 obstruction census");
  u32 vprop_s = 0;
  u64 vprop_bound = 0;
  vprop->add_option("--s", vprop_s, "gonality (0 or 4 mod 12)")->required();
  vprop->add_option("--bound", vprop_bound, "bound")->required();
  vprop->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  vprop->add_option("--cache-dir", cache_dir, "sieve cache directory");

  // params theorem2 --s S --prime-cap C
  CLI::App* params = app.add_subcommand("params", "proof-parameter analysis");
  params->require_subcommand(1);
  CLI::App* pth2 = params->add_subcommand("theorem2", "A(s), i(s), r, N(s)");
  u32 pth2_s = 0;
  u64 pth2_cap = 1'000'000;
  pth2->add_option("--s", pth2_s, "gonality (s >= 4)")->required();
  pth2->add_option("--prime-cap", pth2_cap, "largest prime considered");
  pth2->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (pcheck->parsed()) return run_practical_check(pcheck_n, format);
    if (psieve->parsed()) return run_practical_sieve(psieve_bound, psieve_out);
    if (dtri->parsed()) return run_decompose_tri(dtri_n, dtri_check, format);
    if (dpoly->parsed()) {
      if (dpoly_r == 0) {
        u32 i_s = ps::theorem2_params(dpoly_s, 100).special_prime_index;
        dpoly_r = std::max<u32>(3, i_s);
      }
      return run_decompose_poly(dpoly_s, dpoly_n, dpoly_r, dpoly_maxk,
                                dpoly_check, format);
    }
    if (stable->parsed())
      return run_survey_table(stable_s, stable_bound, !stable_nozero,
                              stable_format, cache_dir);
    if (vconj2->parsed())
      return run_verify_conj2(vconj2_s, vconj2_bound, !vconj2_nozero, format,
                              cache_dir);
    if (vprop->parsed())
      return run_verify_prop47(vprop_s, vprop_bound, format, cache_dir);
    if (pth2->parsed()) return run_params_theorem2(pth2_s, pth2_cap, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  std::cerr << "error: no subcommand selected\n";
  return kExitUsage;
}
