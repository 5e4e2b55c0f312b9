#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <map>

#include "tautcalc/applications.hpp"
#include "tautcalc/cli.hpp"
#include "tautcalc/divisors.hpp"
#include "tautcalc/verify.hpp"

namespace tautcalc::cli {

namespace {

namespace app = applications;
namespace div = divisors;
using json = nlohmann::ordered_json;

// Largest r the ring engine is run at from `class strongly-bn`.
constexpr int kEngineRMax = 5;

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

IntSequence int_list(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) return {};
  if (!j[key].is_array()) throw UsageError(path + ": \"" + key + "\" must be an array");
  IntSequence out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw UsageError(path + ": \"" + key + "\" holds a non-integer");
    out.push_back(v.get<long>());
  }
  return out;
}

std::vector<app::RamificationProfile> read_ram(const std::string& path) {
  const json j = read_json(path);
  std::vector<app::RamificationProfile> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back({int_list(item, "orders", path)});
  } else {
    out.push_back({int_list(j, "orders", path)});
  }
  return out;
}

app::MultivanishingProfile read_multi(const std::string& path) {
  const json j = read_json(path);
  return {int_list(j, "orders", path), int_list(j, "divisor_degrees", path)};
}

app::LemmaCase parse_case(const std::string& text) {
  static const std::map<std::string, app::LemmaCase> cases = {
      {"I", app::LemmaCase::kI},   {"II", app::LemmaCase::kII}, {"III", app::LemmaCase::kIII},
      {"IV", app::LemmaCase::kIV}, {"V", app::LemmaCase::kV},   {"VI", app::LemmaCase::kVI}};
  auto it = cases.find(text);
  if (it == cases.end()) throw UsageError("unknown case " + text + " (expected I..VI)");
  return it->second;
}

json coefficient_map(const std::vector<std::pair<std::string, Rational>>& entries) {
  json out = json::object();
  for (const auto& [key, value] : entries) out[key] = to_string(value);
  return out;
}

void prym_command(Report& report, const RunConfig& config) {
  prym_suite(report, config.r, true);
  const auto x = div::solve_prym_class(config.r);
  std::vector<std::pair<std::string, Rational>> delta = {
      {"0p", x.b0p}, {"0pp", x.b0pp}, {"0ram", x.b0ram}};
  for (int i = 1; i <= x.g - 1; ++i) delta.emplace_back(std::to_string(i), *x.b_at(i));
  auto& p = report.payload();
  p["g"] = std::to_string(x.g);
  p["lambda"] = to_string(x.a);
  p["delta"] = coefficient_map(delta);
  p["unknown"] = x.unknown_labels();
}

void strongly_bn_command(Report& report, const RunConfig& config) {
  const bool engine = config.r <= kEngineRMax;
  strongly_bn_suite(report, config.r, engine, config.threads, true);
  if (!engine) {
    report.info("strongly-bn r=" + std::to_string(config.r), "engine check", "skipped above r=" + std::to_string(kEngineRMax));
  }
  const auto x = div::strongly_bn_class(config.r);
  std::vector<std::pair<std::string, Rational>> delta = {{"0", x.b0}};
  for (std::size_t i = 0; i < x.b_12.size(); ++i) delta.emplace_back(std::to_string(i) + ",{1,2}", x.b_12[i]);
  auto& p = report.payload();
  p["g"] = std::to_string(x.g);
  p["psi1"] = to_string(x.a1);
  p["psi2"] = to_string(x.a2);
  p["lambda"] = to_string(x.a);
  p["delta"] = coefficient_map(delta);
  p["unknown"] = x.unknown_labels();
  p["c"] = to_string(*x.c_scale);
}

void pointed_bn_command(Report& report, const RunConfig& config) {
  pointed_bn_suite(report, config.r);
  const auto x = div::pointed_bn_class(config.r);
  std::vector<std::pair<std::string, Rational>> delta;
  for (std::size_t i = 0; i < x.delta.size(); ++i) delta.emplace_back(std::to_string(i), x.delta[i]);
  auto& p = report.payload();
  p["g"] = std::to_string(x.h);
  p["psi"] = to_string(x.psi);
  p["lambda"] = to_string(x.lambda);
  p["delta"] = coefficient_map(delta);
  p["unknown"] = json::array();
}

void rho_command(Report& report, const RunConfig& config) {
  const std::string s = "rho";
  report.describe(s, "Brill-Noether numbers for g=" + std::to_string(config.g) + " r=" +
                         std::to_string(config.r) + " d=" + std::to_string(config.d));
  report.info(s, "rho", std::to_string(app::rho(config.g, config.r, config.d)));

  std::vector<app::RamificationProfile> profiles;
  for (const auto& path : config.ram_profiles) {
    for (auto& prof : read_ram(path)) profiles.push_back(std::move(prof));
  }
  if (!profiles.empty()) {
    report.info(s, "rho ramified", std::to_string(app::rho_ramified(config.g, config.r, config.d, profiles)));
  }
  if (config.multi_profile) {
    const auto prof = read_multi(*config.multi_profile);
    report.info(s, "rho multivanishing",
                std::to_string(app::rho_multivanishing(config.g, config.r, config.d, prof)));
    report.info(s, "rho multivanishing with g-r+d",
                std::to_string(app::rho_multivanishing(config.g, config.r, config.d, prof,
                                                       app::SecondFactor::kAsPrinted)));
    report.describe(s, "multivanishing uses the second factor g-d+r; the g-r+d row is the alternative reading");
  }
  if (config.lemma_case) {
    const auto c = parse_case(*config.lemma_case);
    const app::FeasibilityData data{config.g, config.r, config.d, profiles};
    const bool ok = app::feasibility_check(c, data);
    report.info(s, "case " + app::to_string(c) + ": rho >= " + std::to_string(app::feasibility_bound(c, config.r)),
                ok ? "true" : "false");
  }
}

void testcurve_command(Report& report, const RunConfig& config) {
  const auto curve = app::parse_test_curve(config.variant);
  const std::string s = "testcurve r=" + std::to_string(config.r);
  if (curve == app::TestCurve::kAPointed) {
    const auto x = div::strongly_bn_class(config.r);
    const auto profile = app::test_curve(curve, x.g);
    report.describe(s, profile.name + " against the strongly Brill-Noether class, up to the constant c");
    const Rational pairing = app::test_curve_pairing(profile, x.signed_coordinates());
    report.check(s, profile.name + " pairing", pairing, div::moving_point_pairing(x));
    report.info(s, "printed c * pairing", *x.c_scale * pairing);
    return;
  }
  const auto x = div::solve_prym_class(config.r);
  const auto profile = app::test_curve(curve, x.g);
  report.describe(s, profile.name + " against the Prym-Brill-Noether class, up to its scale");
  const Rational expected = curve == app::TestCurve::kXi ? 1 - make_rational(x.g, 3) : Rational(0);
  report.check(s, profile.name + " pairing", app::test_curve_pairing(profile, x.signed_coordinates()), expected);
}

int threads_from_env() {
  const char* env = std::getenv("TAUTCALC_THREADS");
  if (!env || !*env) return 1;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("TAUTCALC_THREADS is not an integer: ") + env);
  }
}

}  // namespace

void validate(const RunConfig& c) {
  require(c.threads >= 1, "--threads must be >= 1");
  switch (c.subcommand) {
    case Subcommand::kClass:
      require(c.variant == "prym" || c.variant == "strongly-bn" || c.variant == "pointed-bn",
              "class must be prym, strongly-bn or pointed-bn");
      require(c.r >= 3 && c.r <= 40, "class needs 3 <= r <= 40");
      break;
    case Subcommand::kFp: {
      require(c.r >= 2 && c.r <= 12, "fp needs 2 <= r <= 12");
      const int g = c.r * (c.r + 1) / 2 - 1;
      if (c.m) require(*c.m > g - 1 - c.r, "--m must exceed g - 1 - r = " + std::to_string(g - 1 - c.r));
      // The twisted entries reach the ring's top degree g + 2.
      if (c.degree_cap_override) {
        require(*c.degree_cap_override >= g + 2,
                "--degree-cap below the top degree " + std::to_string(g + 2) + " would drop nonzero terms");
      }
      break;
    }
    case Subcommand::kRho:
      require(c.g >= 0 && c.r >= 0 && c.d >= 0, "rho needs g, r, d >= 0");
      break;
    case Subcommand::kIdentities:
      require(c.r_max >= 3 && c.r_max <= 200, "identities needs 3 <= --r-max <= 200");
      break;
    case Subcommand::kKodaira:
      require(c.variant == "r14-2", "kodaira knows only r14-2");
      break;
    case Subcommand::kTestCurve:
      require(c.r >= 3 && c.r <= 40, "testcurve needs 3 <= r <= 40");
      break;
    case Subcommand::kNikulin:
      require(c.r_min >= 3 && c.r_min <= c.r_max && c.r_max <= 40, "nikulin needs 3 <= --r-min <= --r-max <= 40");
      break;
    case Subcommand::kVerifyAll:
      require(c.r_max >= 2 && c.r_max <= 8, "verify-all needs 2 <= --r-max <= 8");
      break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    Report report("");
    switch (config.subcommand) {
      case Subcommand::kClass:
        report = Report("class " + config.variant);
        if (config.variant == "prym") prym_command(report, config);
        if (config.variant == "strongly-bn") strongly_bn_command(report, config);
        if (config.variant == "pointed-bn") pointed_bn_command(report, config);
        break;
      case Subcommand::kFp:
        report = Report("fp");
        if (config.degree_cap_override) {
          report.info("fp", "degree cap", std::to_string(*config.degree_cap_override));
        }
        ring_suite(report, config.r, config.m, config.threads, false);
        degeneracy_suite(report, config.r, config.m, config.threads);
        break;
      case Subcommand::kRho:
        report = Report("rho");
        rho_command(report, config);
        break;
      case Subcommand::kIdentities:
        report = Report("identities");
        identity_suite(report, {std::max(50, config.r_max), config.r_max, config.r_max, 100});
        mu_nu_suite(report, std::min(config.r_max, 12));
        break;
      case Subcommand::kKodaira:
        report = Report("kodaira " + config.variant);
        kodaira_suite(report);
        break;
      case Subcommand::kTestCurve:
        report = Report("testcurve " + config.variant);
        testcurve_command(report, config);
        break;
      case Subcommand::kNikulin:
        report = Report("nikulin");
        nikulin_suite(report, config.r_min, config.r_max);
        break;
      case Subcommand::kVerifyAll:
        report = Report("verify-all");
        verify_all(report, {config.r_max, config.threads});
        break;
    }
    report.render(out, config.emit);
    if (report.ok()) return 0;
    report.write_diff(err);
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Exact tautological-ring and divisor-class verification", "tautcalc"};
  cli.require_subcommand(1);
  cli.fallthrough();

  RunConfig config;
  std::string emit = "table";
  std::optional<int> threads;
  cli.add_option("--emit", emit, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  cli.add_option("--threads", threads, "Worker threads for determinants (default $TAUTCALC_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  auto* cls = cli.add_subcommand("class", "Divisor class coefficients and their checks");
  cls->add_option("kind", config.variant, "prym, strongly-bn or pointed-bn")
      ->required()
      ->check(CLI::IsMember({"prym", "strongly-bn", "pointed-bn"}));
  cls->add_option("--r", config.r, "r >= 3")->required();

  auto* fp = cli.add_subcommand("fp", "Chern data and degeneracy intersections on C x C x Pic");
  fp->add_option("--r", config.r, "2 <= r <= 12")->required();
  fp->add_option("--m", config.m, "Twist, m > g - 1 - r (default g - r)");
  fp->add_option("--degree-cap", config.degree_cap_override, "Degree cap; must reach the top degree");

  auto* rho = cli.add_subcommand("rho", "Brill-Noether numbers");
  rho->add_option("--g", config.g)->required();
  rho->add_option("--r", config.r)->required();
  rho->add_option("--d", config.d)->required();
  rho->add_option("--ram", config.ram_profiles, "Ramification profile JSON, repeatable")->check(CLI::ExistingFile);
  rho->add_option("--multi", config.multi_profile, "Multivanishing profile JSON")->check(CLI::ExistingFile);
  rho->add_option("--case", config.lemma_case, "Feasibility case I..VI over the --ram profiles");

  int identities_r_max = 40;
  auto* identities = cli.add_subcommand("identities", "Binomial identities, mu = nu and Sigma");
  identities->add_option("--r-max", identities_r_max, "Upper r for the master and final identities");

  auto* kodaira = cli.add_subcommand("kodaira", "Slope check for the genus-14 level-2 space");
  kodaira->add_option("target", config.variant, "r14-2")->required()->check(CLI::IsMember({"r14-2"}));

  auto* testcurve = cli.add_subcommand("testcurve", "Test curve pairings");
  testcurve->add_option("--name", config.variant, "xi, A1, Ag-1 or A")->required();
  testcurve->add_option("--r", config.r, "r >= 3")->required();

  int nikulin_r_min = 3;
  int nikulin_r_max = 8;
  auto* nikulin = cli.add_subcommand("nikulin", "Xi_g pairing against the Prym-Brill-Noether class");
  nikulin->add_option("--r-min", nikulin_r_min);
  nikulin->add_option("--r-max", nikulin_r_max);

  int verify_r_max = 4;
  auto* verify = cli.add_subcommand("verify-all", "Every check at its default range");
  verify->add_option("--r-max", verify_r_max, "Upper r for ring and determinant checks");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    config.emit = emit == "json" ? Emit::kJson : emit == "csv" ? Emit::kCsv : Emit::kTable;
    config.threads = threads ? *threads : threads_from_env();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (cls->parsed()) config.subcommand = Subcommand::kClass;
  if (fp->parsed()) config.subcommand = Subcommand::kFp;
  if (rho->parsed()) config.subcommand = Subcommand::kRho;
  if (identities->parsed()) {
    config.subcommand = Subcommand::kIdentities;
    config.r_max = identities_r_max;
  }
  if (kodaira->parsed()) config.subcommand = Subcommand::kKodaira;
  if (testcurve->parsed()) config.subcommand = Subcommand::kTestCurve;
  if (nikulin->parsed()) {
    config.subcommand = Subcommand::kNikulin;
    config.r_min = nikulin_r_min;
    config.r_max = nikulin_r_max;
  }
  if (verify->parsed()) {
    config.subcommand = Subcommand::kVerifyAll;
    config.r_max = verify_r_max;
  }
  return run(config, out, err);
}

}  // namespace tautcalc::cli
