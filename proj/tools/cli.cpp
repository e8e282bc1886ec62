#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eisen/counting.hpp"
#include "eisen/density.hpp"
#include "eisen/errors.hpp"
#include "eisen/report.hpp"

namespace eisen::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Raised when a self-verification (both-mode, verify) finds a disagreement
// after its output has been written.
struct VerificationFailure {
  std::string message;
};

/// Builds the sieve on first use, sized to what the command needs but never
/// beyond the configured limit.
class SieveSource {
 public:
  explicit SieveSource(const CliConfig& config) : config_(config) {}

  const ArithSieve& require(std::uint64_t needed, std::string_view what) {
    needed = std::max<std::uint64_t>(needed, 2);
    if (needed > config_.sieve_limit) {
      throw ResourceError(std::string(what) + " needs a sieve up to " +
                          std::to_string(needed) +
                          ", above the configured limit " +
                          std::to_string(config_.sieve_limit) +
                          " (raise --sieve-limit / EISEN_SIEVE_LIMIT)");
    }
    if (!sieve_ || sieve_->limit() < needed) {
      sieve_ = std::make_unique<ArithSieve>(needed);
    }
    return *sieve_;
  }

 private:
  const CliConfig& config_;
  std::unique_ptr<ArithSieve> sieve_;
};

// Upper bound for the k-th prime: p_k < k (ln k + ln ln k) for k >= 6.
std::uint64_t nth_prime_bound(std::uint64_t k) {
  if (k < 6) return 13;
  const double x = static_cast<double>(k);
  return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) +
         1;
}

std::pair<unsigned, unsigned> parse_degree_range(const std::string& text) {
  const auto sep = text.find("..");
  const auto parse = [&](std::string_view part) {
    unsigned v = 0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw InvalidArgument("bad degree range '" + text + "', expected A..B");
    }
    return v;
  };
  if (sep == std::string::npos) {
    const unsigned d = parse(text);
    return {d, d};
  }
  const std::string_view view(text);
  return {parse(view.substr(0, sep)), parse(view.substr(sep + 2))};
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return OutputFormat::text;
}

std::string render_bound(const BigFloat& x, mpfr_rnd_t rnd) {
  return x.to_significant(20, rnd);
}

// ---------------------------------------------------------------- count

struct CountArgs {
  unsigned degree = 0;
  std::uint64_t height = 0;
  std::string variant = "monic";
  std::string method = "exact";
};

void cmd_count(const CountArgs& a, const CliConfig& cfg, SieveSource& sieves,
               std::ostream& out) {
  if (a.degree < 2) {
    throw InvalidArgument("--degree must be at least 2");
  }
  if (a.height < 1) throw InvalidArgument("--height must be at least 1");
  const Variant variant = parse_variant(a.variant);

  std::vector<ExactCount> results;
  if (a.method == "brute" || a.method == "both") {
    // Check the budget before building any sieve.
    const BruteOptions opts{cfg.enumeration_budget, cfg.threads};
    results.push_back(variant == Variant::monic
                          ? brute_count_monic(a.degree, a.height, opts)
                          : brute_count_general(a.degree, a.height, opts));
  }
  if (a.method == "exact" || a.method == "both") {
    const ArithSieve& sieve = sieves.require(a.height, "exact counting");
    const CountOptions opts{cfg.threads};
    results.insert(
        results.begin(),
        variant == Variant::monic
            ? count_monic_eisenstein(a.degree, a.height, sieve, opts)
            : count_general_eisenstein(a.degree, a.height, sieve, opts));
  }
  const bool match = std::all_of(results.begin(), results.end(), [&](auto& r) {
    return r.value == results.front().value;
  });

  switch (cfg.output_format) {
    case OutputFormat::text:
      out << results.front().value.get_str() << '\n';
      if (results.size() > 1) {
        for (const auto& r : results) {
          out << "# " << to_string(r.method) << '=' << r.value.get_str()
              << '\n';
        }
        out << "# " << (match ? "match" : "MISMATCH") << '\n';
      }
      break;
    case OutputFormat::csv:
      out << "variant,d,H,method,value\n";
      for (const auto& r : results) {
        out << to_string(r.variant) << ',' << r.degree << ',' << r.height
            << ',' << to_string(r.method) << ',' << r.value.get_str() << '\n';
      }
      break;
    case OutputFormat::json: {
      ordered_json doc;
      doc["variant"] = to_string(variant);
      doc["d"] = a.degree;
      doc["H"] = a.height;
      doc["results"] = ordered_json::array();
      for (const auto& r : results) {
        doc["results"].push_back(
            {{"method", to_string(r.method)}, {"value", r.value.get_str()}});
      }
      doc["match"] = match;
      out << doc.dump(2) << '\n';
      break;
    }
  }
  if (!match) {
    throw VerificationFailure{"inclusion-exclusion and brute force disagree"};
  }
}

// ---------------------------------------------------------------- density

struct DensityArgs {
  unsigned degree = 0;
  std::string kind = "theta";
  std::optional<std::uint64_t> prime_count;
  std::optional<std::uint64_t> prime_limit;
  std::optional<std::uint64_t> series_limit;
  std::string method = "product";
};

void cmd_density(const DensityArgs& a, const CliConfig& cfg,
                 SieveSource& sieves, std::ostream& out) {
  if (a.degree < 2) throw InvalidArgument("--degree must be at least 2");
  const DensityKind kind =
      a.kind == "rho" ? DensityKind::rho : DensityKind::theta;
  const auto precision = static_cast<mpfr_prec_t>(cfg.precision_bits);

  std::vector<DensityEstimate> estimates;
  if (a.method == "product" || a.method == "both") {
    const Truncation trunc =
        a.prime_limit ? Truncation::primes_up_to(*a.prime_limit)
                      : Truncation::primes(a.prime_count.value_or(
                            kDefaultPrimeCount));
    const std::uint64_t needed =
        a.prime_limit ? *a.prime_limit : nth_prime_bound(trunc.bound);
    estimates.push_back(density_product(
        kind, a.degree, trunc, sieves.require(needed, "Euler product"),
        precision));
  }
  if (a.method == "series" || a.method == "both") {
    const std::uint64_t limit = a.series_limit.value_or(kDefaultSeriesLimit);
    estimates.push_back(density_series(kind, a.degree, limit,
                                       sieves.require(limit, "Mobius series"),
                                       precision));
  }
  const bool overlap =
      estimates.size() < 2 || estimates[0].overlaps(estimates[1]);

  switch (cfg.output_format) {
    case OutputFormat::text:
      for (const auto& e : estimates) {
        out << to_string(e.kind) << '_' << e.degree << " = "
            << e.value.to_fixed(kTableDecimals) << "  ("
            << to_string(e.method) << ", " << to_string(e.truncation.kind)
            << '=' << e.truncation.bound << ")\n"
            << "  value   " << e.value.to_significant(20) << '\n'
            << "  bracket [" << render_bound(e.lower, MPFR_RNDD) << ", "
            << render_bound(e.upper, MPFR_RNDU) << "]\n";
      }
      if (estimates.size() > 1) {
        out << (overlap ? "brackets overlap\n" : "brackets DISJOINT\n");
      }
      break;
    case OutputFormat::csv:
      out << "kind,d,method,truncation,bound,value,lower,upper\n";
      for (const auto& e : estimates) {
        out << to_string(e.kind) << ',' << e.degree << ','
            << to_string(e.method) << ',' << to_string(e.truncation.kind)
            << ',' << e.truncation.bound << ','
            << e.value.to_significant(20) << ','
            << render_bound(e.lower, MPFR_RNDD) << ','
            << render_bound(e.upper, MPFR_RNDU) << '\n';
      }
      break;
    case OutputFormat::json: {
      ordered_json doc = ordered_json::array();
      for (const auto& e : estimates) {
        doc.push_back({{"kind", to_string(e.kind)},
                       {"d", e.degree},
                       {"method", to_string(e.method)},
                       {"truncation",
                        {{"kind", to_string(e.truncation.kind)},
                         {"bound", e.truncation.bound}}},
                       {"value", e.value.to_significant(20)},
                       {"lower", render_bound(e.lower, MPFR_RNDD)},
                       {"upper", render_bound(e.upper, MPFR_RNDU)}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
  if (!overlap) {
    throw VerificationFailure{"product and series brackets are disjoint"};
  }
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::string degrees = "2..10";
  std::uint64_t prime_count = kDefaultPrimeCount;
};

void cmd_table(const TableArgs& a, const CliConfig& cfg, SieveSource& sieves,
               std::ostream& out) {
  const auto [lo, hi] = parse_degree_range(a.degrees);
  if (lo < 2 || lo > hi) {
    throw InvalidArgument("degree range must satisfy 2 <= A <= B, got " +
                          a.degrees);
  }
  const ArithSieve& sieve =
      sieves.require(nth_prime_bound(a.prime_count), "density table");
  const DensityTable table =
      density_table(lo, hi, a.prime_count, sieve,
                    static_cast<mpfr_prec_t>(cfg.precision_bits));
  switch (cfg.output_format) {
    case OutputFormat::text:
      out << " d   theta    rho\n";
      for (const auto& row : table.rows) {
        out << std::setw(2) << row.degree << "   " << row.theta << "   "
            << row.rho << '\n';
      }
      out << "(Euler products over the first " << table.prime_count
          << " primes)\n";
      break;
    case OutputFormat::csv:
      out << emit_csv(table);
      break;
    case OutputFormat::json:
      out << emit_json(table);
      break;
  }
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  unsigned max_degree = 3;
  std::uint64_t max_height = 20;
};

void cmd_verify(const VerifyArgs& a, const CliConfig& cfg, SieveSource& sieves,
                std::ostream& out) {
  if (a.max_degree < 2) throw InvalidArgument("--max-degree must be >= 2");
  if (a.max_height < 1) throw InvalidArgument("--max-height must be >= 1");
  // The largest general enumeration bounds every other case in the sweep.
  const std::uint64_t largest =
      enumeration_size(Variant::general, a.max_degree, a.max_height);
  if (largest > cfg.enumeration_budget) {
    throw ResourceError("verify sweep needs " +
                        std::to_string(largest) +
                        " polynomials for its largest case, over the budget of " +
                        std::to_string(cfg.enumeration_budget));
  }
  const ArithSieve& sieve = sieves.require(a.max_height, "verify");
  const BruteOptions brute_opts{cfg.enumeration_budget, cfg.threads};
  const CountOptions count_opts{cfg.threads};

  struct Result {
    Variant variant;
    unsigned d;
    std::uint64_t h;
    mpz_class exact;
    mpz_class brute;
  };
  std::vector<Result> results;
  for (unsigned d = 2; d <= a.max_degree; ++d) {
    for (std::uint64_t h = 1; h <= a.max_height; ++h) {
      results.push_back({Variant::monic, d, h,
                         count_monic_eisenstein(d, h, sieve, count_opts).value,
                         brute_count_monic(d, h, brute_opts).value});
      results.push_back(
          {Variant::general, d, h,
           count_general_eisenstein(d, h, sieve, count_opts).value,
           brute_count_general(d, h, brute_opts).value});
    }
  }
  const auto failures = std::count_if(
      results.begin(), results.end(),
      [](const Result& r) { return r.exact != r.brute; });

  switch (cfg.output_format) {
    case OutputFormat::text:
      for (const auto& r : results) {
        out << (r.exact == r.brute ? "PASS" : "FAIL") << "  "
            << std::left << std::setw(8) << to_string(r.variant) << std::right
            << " d=" << r.d << " H=" << std::setw(3) << r.h
            << "  exact=" << r.exact.get_str()
            << " brute=" << r.brute.get_str() << '\n';
      }
      out << results.size() - static_cast<std::size_t>(failures) << '/'
          << results.size() << " checks passed\n";
      break;
    case OutputFormat::csv:
      out << "variant,d,H,exact,brute,status\n";
      for (const auto& r : results) {
        out << to_string(r.variant) << ',' << r.d << ',' << r.h << ','
            << r.exact.get_str() << ',' << r.brute.get_str() << ','
            << (r.exact == r.brute ? "pass" : "fail") << '\n';
      }
      break;
    case OutputFormat::json: {
      ordered_json doc;
      doc["checks"] = ordered_json::array();
      for (const auto& r : results) {
        doc["checks"].push_back({{"variant", to_string(r.variant)},
                                 {"d", r.d},
                                 {"H", r.h},
                                 {"exact", r.exact.get_str()},
                                 {"brute", r.brute.get_str()},
                                 {"pass", r.exact == r.brute}});
      }
      doc["failures"] = failures;
      out << doc.dump(2) << '\n';
      break;
    }
  }
  if (failures > 0) {
    throw VerificationFailure{std::to_string(failures) +
                              " exact/brute mismatches"};
  }
}

// ---------------------------------------------------------------- error-term

struct ErrorTermArgs {
  std::string variant = "monic";
  unsigned degree = 0;
  std::vector<std::uint64_t> heights;
};

void cmd_error_term(const ErrorTermArgs& a, const CliConfig& cfg,
                    SieveSource& sieves, std::ostream& out) {
  if (a.degree < 2) throw InvalidArgument("--degree must be at least 2");
  for (std::size_t i = 0; i < a.heights.size(); ++i) {
    if (a.heights[i] < 2) {
      throw InvalidArgument("--heights entries must be >= 2");
    }
    if (i > 0 && a.heights[i] <= a.heights[i - 1]) {
      throw InvalidArgument("--heights must be strictly ascending");
    }
  }
  if (a.heights.empty()) throw InvalidArgument("--heights is empty");
  const Variant variant = parse_variant(a.variant);
  const ProfileOptions opts{kDefaultPrimeCount,
                            static_cast<mpfr_prec_t>(cfg.precision_bits),
                            cfg.threads};
  const ArithSieve& sieve = sieves.require(
      std::max(a.heights.back(), nth_prime_bound(opts.prime_count)),
      "error-term profile");
  const auto rows = error_term_profile(variant, a.degree, a.heights, sieve, opts);

  switch (cfg.output_format) {
    case OutputFormat::text: {
      const char* norm = nullptr;
      if (variant == Variant::monic) {
        norm = a.degree == 2 ? "H (ln H)^2" : "H^(d-1)";
      } else {
        norm = a.degree == 2 ? "H^2 (ln H)^2" : "H^d";
      }
      out << to_string(variant) << " d=" << a.degree
          << "  ratio = residual / " << norm << '\n';
      for (const auto& r : rows) {
        BigFloat rel(r.residual.precision());
        mpfr_div(rel.get(), r.residual.get(), r.main.get(), MPFR_RNDN);
        mpfr_abs(rel.get(), rel.get(), MPFR_RNDN);
        out << "H=" << r.height << "  exact=" << r.exact.get_str()
            << "  main=" << r.main.to_significant(kReportSignificantDigits)
            << "  residual="
            << r.residual.to_significant(kReportSignificantDigits)
            << "  ratio=" << r.ratio.to_significant(kReportSignificantDigits)
            << "  rel_err=" << rel.to_significant(4) << '\n';
      }
      break;
    }
    case OutputFormat::csv:
      out << emit_csv(rows);
      break;
    case OutputFormat::json:
      out << emit_json(rows);
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CliConfig cfg;
  std::string format_name = "text";

  CLI::App app{"Exact counts and densities of Eisenstein polynomials",
               "eisen"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--sieve-limit", cfg.sieve_limit,
                 "Largest integer covered by the prime sieve")
      ->envname("EISEN_SIEVE_LIMIT")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{4'000'000'000}));
  app.add_option("--budget", cfg.enumeration_budget,
                 "Maximum number of polynomials a brute-force count may visit")
      ->envname("EISEN_ENUMERATION_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision-bits", cfg.precision_bits,
                 "Working precision for densities")
      ->envname("EISEN_PRECISION_BITS")
      ->check(CLI::Range(static_cast<int>(BigFloat::kMinPrecision), 1 << 16));
  app.add_option("--format", format_name, "Output format")
      ->envname("EISEN_FORMAT")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--threads", cfg.threads, "Worker threads")
      ->envname("EISEN_THREADS")
      ->check(CLI::Range(1U, 1024U));

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Exact E_d(H) or F_d(H)");
  count->add_option("--degree", count_args.degree, "Degree d >= 2")
      ->required();
  count->add_option("--height", count_args.height, "Height bound H >= 1")
      ->required();
  count->add_option("--variant", count_args.variant)
      ->check(CLI::IsMember({"monic", "general"}));
  count->add_option("--method", count_args.method)
      ->check(CLI::IsMember({"exact", "brute", "both"}));

  DensityArgs density_args;
  auto* density = app.add_subcommand("density", "Evaluate theta_d or rho_d");
  density->add_option("--degree", density_args.degree)->required();
  density->add_option("--kind", density_args.kind)
      ->check(CLI::IsMember({"theta", "rho"}));
  auto* pc = density->add_option("--prime-count", density_args.prime_count,
                                 "Use the first N primes (default 10000)");
  auto* pl = density->add_option("--prime-limit", density_args.prime_limit,
                                 "Use all primes up to P");
  pc->excludes(pl);
  density->add_option("--series-limit", density_args.series_limit,
                      "Sum the Mobius series up to S (default 10^6)");
  density->add_option("--method", density_args.method)
      ->check(CLI::IsMember({"product", "series", "both"}));

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Density table for a degree range");
  table->add_option("--degrees", table_args.degrees, "Range A..B")
      ->capture_default_str();
  table->add_option("--prime-count", table_args.prime_count)
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* verify =
      app.add_subcommand("verify", "Inclusion-exclusion vs brute force sweep");
  verify->add_option("--max-degree", verify_args.max_degree)
      ->capture_default_str();
  verify->add_option("--max-height", verify_args.max_height)
      ->capture_default_str();

  ErrorTermArgs error_args;
  auto* error_term =
      app.add_subcommand("error-term", "Residuals against the main term");
  error_term->add_option("--variant", error_args.variant)
      ->check(CLI::IsMember({"monic", "general"}));
  error_term->add_option("--degree", error_args.degree)->required();
  error_term->add_option("--heights", error_args.heights, "Comma-separated")
      ->delimiter(',')
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.output_format = parse_format(format_name);

  SieveSource sieves(cfg);
  try {
    if (*count) cmd_count(count_args, cfg, sieves, out);
    if (*density) cmd_density(density_args, cfg, sieves, out);
    if (*table) cmd_table(table_args, cfg, sieves, out);
    if (*verify) cmd_verify(verify_args, cfg, sieves, out);
    if (*error_term) cmd_error_term(error_args, cfg, sieves, out);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.message << '\n';
    return kVerificationFailure;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "refused: " << e.what() << '\n';
    return kResourceRefusal;
  } catch (const OutOfRange& e) {
    err << "refused: " << e.what() << '\n';
    return kResourceRefusal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kSuccess;
}

}  // namespace eisen::cli
