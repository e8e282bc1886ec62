#include "eisen/report.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include <json.hpp>

#include "eisen/counting.hpp"
#include "eisen/errors.hpp"

namespace eisen {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kTableHeader = "d,theta,rho";
constexpr std::string_view kProfileHeader =
    "variant,d,H,exact,main,residual,ratio";

std::string render_real(const BigFloat& x) {
  return x.to_significant(kReportSignificantDigits);
}

double json_real(const BigFloat& x) { return std::stod(render_real(x)); }

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// CSV body lines after checking the header; tolerates one trailing LF.
std::vector<std::string_view> csv_lines(std::string_view text,
                                        std::string_view header) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  auto lines = split(text, '\n');
  if (lines.empty() || lines.front() != header) {
    throw InvalidArgument("CSV header must be '" + std::string(header) + "'");
  }
  lines.erase(lines.begin());
  if (lines.empty()) throw InvalidArgument("CSV has no data rows");
  return lines;
}

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  if (text.empty()) throw InvalidArgument("empty integer field");
  for (const char c : text) {
    if (c < '0' || c > '9') {
      throw InvalidArgument("bad integer field '" + std::string(text) + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

mpz_class parse_big(std::string_view text) {
  mpz_class v;
  if (text.empty() || v.set_str(std::string(text), 10) != 0) {
    throw InvalidArgument("bad integer field '" + std::string(text) + "'");
  }
  return v;
}

unsigned parse_degree(std::uint64_t v) {
  if (v < 2 || v > 1'000'000) {
    throw InvalidArgument("degree out of range: " + std::to_string(v));
  }
  return static_cast<unsigned>(v);
}

void require_rows(bool empty) {
  if (empty) throw InvalidArgument("nothing to emit: input is empty");
}

}  // namespace

Variant parse_variant(std::string_view text) {
  if (text == "monic") return Variant::monic;
  if (text == "general") return Variant::general;
  throw InvalidArgument("unknown variant '" + std::string(text) + "'");
}

DensityTable density_table(unsigned d_min, unsigned d_max,
                           std::uint64_t prime_count, const ArithSieve& sieve,
                           mpfr_prec_t precision) {
  if (d_min < 2 || d_min > d_max) {
    throw InvalidArgument("degree range " + std::to_string(d_min) + ".." +
                          std::to_string(d_max) +
                          " must satisfy 2 <= d_min <= d_max");
  }
  DensityTable table;
  table.prime_count = prime_count;
  const Truncation trunc = Truncation::primes(prime_count);
  for (unsigned d = d_min; d <= d_max; ++d) {
    const auto theta = theta_product(d, trunc, sieve, precision);
    const auto rho = rho_product(d, trunc, sieve, precision);
    table.rows.push_back({d, theta.value.to_fixed(kTableDecimals),
                          rho.value.to_fixed(kTableDecimals)});
  }
  return table;
}

BigFloat main_term(Variant variant, unsigned degree, std::uint64_t height,
                   const BigFloat& density) {
  const unsigned long power = variant == Variant::monic ? degree : degree + 1UL;
  BigFloat out(density.precision());
  mpfr_ui_pow_ui(out.get(), 2 * height, power, MPFR_RNDN);
  mpfr_mul(out.get(), out.get(), density.get(), MPFR_RNDN);
  return out;
}

BigFloat error_normalization(Variant variant, unsigned degree,
                             std::uint64_t height, mpfr_prec_t precision) {
  BigFloat out(precision);
  if (degree > 2) {
    const unsigned long power =
        variant == Variant::monic ? degree - 1UL : degree;
    mpfr_ui_pow_ui(out.get(), height, power, MPFR_RNDN);
    return out;
  }
  BigFloat log_h(precision);
  mpfr_set_ui(log_h.get(), height, MPFR_RNDN);
  mpfr_log(log_h.get(), log_h.get(), MPFR_RNDN);
  mpfr_sqr(log_h.get(), log_h.get(), MPFR_RNDN);
  mpfr_set_ui(out.get(), height, MPFR_RNDN);
  if (variant == Variant::general) {
    mpfr_mul_ui(out.get(), out.get(), height, MPFR_RNDN);
  }
  mpfr_mul(out.get(), out.get(), log_h.get(), MPFR_RNDN);
  return out;
}

std::vector<ErrorTermRow> error_term_profile(
    Variant variant, unsigned degree, std::span<const std::uint64_t> heights,
    const ArithSieve& sieve, const ProfileOptions& options) {
  if (degree < 2) throw InvalidArgument("degree must be at least 2");
  if (heights.empty()) throw InvalidArgument("no heights given");
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (heights[i] < 2) {
      throw InvalidArgument("heights must be >= 2 so that log H > 0");
    }
    if (i > 0 && heights[i] <= heights[i - 1]) {
      throw InvalidArgument("heights must be strictly ascending");
    }
  }
  if (heights.back() > sieve.limit()) {
    throw OutOfRange("height " + std::to_string(heights.back()) +
                     " exceeds sieve limit " + std::to_string(sieve.limit()));
  }

  const DensityKind kind =
      variant == Variant::monic ? DensityKind::theta : DensityKind::rho;
  const DensityEstimate density =
      density_product(kind, degree, Truncation::primes(options.prime_count),
                      sieve, options.precision);
  const CountOptions count_options{options.threads};

  std::vector<ErrorTermRow> rows;
  for (const std::uint64_t h : heights) {
    ExactCount exact = variant == Variant::monic
                           ? count_monic_eisenstein(degree, h, sieve,
                                                    count_options)
                           : count_general_eisenstein(degree, h, sieve,
                                                      count_options);
    ErrorTermRow row{variant,
                     degree,
                     h,
                     std::move(exact.value),
                     main_term(variant, degree, h, density.value),
                     BigFloat(options.precision),
                     BigFloat(options.precision)};
    mpfr_sub_z(row.residual.get(), row.main.get(), row.exact.get_mpz_t(),
               MPFR_RNDN);
    mpfr_neg(row.residual.get(), row.residual.get(), MPFR_RNDN);
    const BigFloat norm =
        error_normalization(variant, degree, h, options.precision);
    mpfr_div(row.ratio.get(), row.residual.get(), norm.get(), MPFR_RNDN);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string emit_csv(const DensityTable& table) {
  require_rows(table.rows.empty());
  std::ostringstream out;
  out << kTableHeader << '\n';
  for (const auto& row : table.rows) {
    out << row.degree << ',' << row.theta << ',' << row.rho << '\n';
  }
  return out.str();
}

std::string emit_csv(std::span<const ErrorTermRow> rows) {
  require_rows(rows.empty());
  std::ostringstream out;
  out << kProfileHeader << '\n';
  for (const auto& row : rows) {
    out << to_string(row.variant) << ',' << row.degree << ',' << row.height
        << ',' << row.exact.get_str() << ',' << render_real(row.main) << ','
        << render_real(row.residual) << ',' << render_real(row.ratio) << '\n';
  }
  return out.str();
}

std::string emit_json(const DensityTable& table) {
  require_rows(table.rows.empty());
  ordered_json doc;
  doc["prime_count"] = table.prime_count;
  doc["rows"] = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    r["d"] = row.degree;
    r["theta"] = std::stod(row.theta);
    r["rho"] = std::stod(row.rho);
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

std::string emit_json(std::span<const ErrorTermRow> rows) {
  require_rows(rows.empty());
  ordered_json doc = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json r;
    r["variant"] = to_string(row.variant);
    r["d"] = row.degree;
    r["H"] = row.height;
    r["exact"] = row.exact.get_str();
    r["main"] = json_real(row.main);
    r["residual"] = json_real(row.residual);
    r["ratio"] = json_real(row.ratio);
    doc.push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

DensityTable parse_density_table_csv(std::string_view text) {
  DensityTable table;
  for (const auto line : csv_lines(text, kTableHeader)) {
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw InvalidArgument("table row needs 3 fields: '" + std::string(line) +
                            "'");
    }
    // Validate numeric shape; the table keeps the rendered text.
    (void)BigFloat::parse(fields[1]);
    (void)BigFloat::parse(fields[2]);
    table.rows.push_back({parse_degree(parse_u64(fields[0])),
                          std::string(fields[1]), std::string(fields[2])});
  }
  return table;
}

DensityTable parse_density_table_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    DensityTable table;
    table.prime_count = doc.at("prime_count").get<std::uint64_t>();
    for (const auto& r : doc.at("rows")) {
      const auto theta = BigFloat(r.at("theta").get<double>(), 64);
      const auto rho = BigFloat(r.at("rho").get<double>(), 64);
      table.rows.push_back({parse_degree(r.at("d").get<std::uint64_t>()),
                            theta.to_fixed(kTableDecimals),
                            rho.to_fixed(kTableDecimals)});
    }
    if (table.rows.empty()) throw InvalidArgument("table has no rows");
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed table JSON: ") + e.what());
  }
}

std::vector<ErrorTermRow> parse_error_rows_csv(std::string_view text) {
  std::vector<ErrorTermRow> rows;
  for (const auto line : csv_lines(text, kProfileHeader)) {
    const auto f = split(line, ',');
    if (f.size() != 7) {
      throw InvalidArgument("profile row needs 7 fields: '" +
                            std::string(line) + "'");
    }
    rows.push_back({parse_variant(f[0]), parse_degree(parse_u64(f[1])),
                    parse_u64(f[2]), parse_big(f[3]), BigFloat::parse(f[4]),
                    BigFloat::parse(f[5]), BigFloat::parse(f[6])});
  }
  return rows;
}

std::vector<ErrorTermRow> parse_error_rows_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    if (!doc.is_array() || doc.empty()) {
      throw InvalidArgument("profile JSON must be a non-empty array");
    }
    std::vector<ErrorTermRow> rows;
    const auto real = [](const ordered_json& v) {
      return BigFloat(v.get<double>(), BigFloat::kDefaultPrecision);
    };
    for (const auto& r : doc) {
      rows.push_back(
          {parse_variant(r.at("variant").get<std::string>()),
           parse_degree(r.at("d").get<std::uint64_t>()),
           r.at("H").get<std::uint64_t>(),
           parse_big(r.at("exact").get<std::string>()), real(r.at("main")),
           real(r.at("residual")), real(r.at("ratio"))});
    }
    return rows;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed profile JSON: ") + e.what());
  }
}

}  // namespace eisen
