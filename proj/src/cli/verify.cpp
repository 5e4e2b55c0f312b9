#include "tautcalc/verify.hpp"

#include <functional>

#include "tautcalc/applications.hpp"
#include "tautcalc/combinatorics.hpp"
#include "tautcalc/degeneracy.hpp"
#include "tautcalc/divisors.hpp"

namespace tautcalc::cli {

namespace {

namespace app = applications;
namespace deg = degeneracy;
namespace div = divisors;

std::string r_section(const std::string& name, int r) { return name + " r=" + std::to_string(r); }

// Runs body, turning an escaping exception into a FAIL row.
void guarded(Report& report, const std::string& section, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.fail(section, "exception", e.what());
  }
}

std::string join(const IntSequence& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i]);
  return out + ")";
}

std::string class_diff(const ring::TautClass& computed, const ring::TautClass& expected) {
  if (computed == expected) return "equal";
  std::string out = "differs by";
  for (const auto& line : ring::debug_lines(computed - expected)) out += " [" + line + "]";
  return out;
}

// Counts how many r in [lo, hi] satisfy pred; failing r get their own row.
void family(Report& report, const std::string& section, const std::string& name, int lo, int hi,
            const std::function<bool(int)>& pred) {
  int held = 0;
  for (int r = lo; r <= hi; ++r) {
    if (pred(r)) {
      ++held;
    } else {
      report.check_true(section, name + " at " + std::to_string(r), false);
    }
  }
  const std::string total = std::to_string(hi - lo + 1);
  report.check(section, name + " [" + std::to_string(lo) + ".." + std::to_string(hi) + "]",
               std::to_string(held) + "/" + total, total + "/" + total);
}

}  // namespace

void identity_suite(Report& report, const IdentityRanges& ranges) {
  const std::string s = "identities";
  report.describe(s, "closed binomial identities behind the degree and Sigma computations");
  guarded(report, s, [&] {
    for (int p = 1; p <= 3; ++p) {
      family(report, s, "power sum p=" + std::to_string(p), 1, ranges.power_r_max,
             [p](int r) { return check_identity_power_sum(r, p); });
    }
    family(report, s, "master identity", 3, ranges.master_r_max, check_master_identity_sigma);
    family(report, s, "final identity", 1, ranges.final_r_max, check_final_identity);
    report.check_true(s, "catalan series to degree " + std::to_string(ranges.catalan_degree),
                      catalan_series_check(ranges.catalan_degree));
  });
}

void mu_nu_suite(Report& report, int r_max) {
  const std::string s = "mu-nu";
  report.describe(s, "pointed Brill-Noether divisor: mu = nu and the Sigma relation, from direct summation");
  guarded(report, s, [&] {
    for (int r = 3; r <= r_max; ++r) {
      const auto c = div::mu_nu(r);
      const long g = static_cast<long>(r) * (r + 1) / 2;
      const std::string tag = " r=" + std::to_string(r);
      report.check(s, "mu = nu" + tag, c.mu, c.nu);
      report.check(s, "Sigma = (g+1)(g-3)/(g(g-1)) n" + tag, c.sigma,
                   make_rational((g + 1) * (g - 3), g * (g - 1)) * c.n);
      report.check(s, "n closed form" + tag, c.n, n_closed_form(r));
    }
  });
}

void ring_suite(Report& report, int r, std::optional<int> m, int threads, bool literal_is_assertion) {
  const std::string base = "ring r=" + std::to_string(r);
  guarded(report, base, [&] {
    const auto prob = deg::DegeneracyProblem::make(r, m);
    const std::string s = base + " m=" + std::to_string(prob.m);
    report.describe(s, "Chern character and Chern classes of M_i against their closed forms");
    const deg::FpEngine engine(prob, {deg::EntryMode::kFull, threads});
    for (const auto& c : deg::ring_cross_check(engine, deg::FormulaVariant::kCorrected)) {
      const std::string name = c.name + " i=" + std::to_string(c.i);
      const bool literal_form = c.name == "c2" || c.name == "c3";
      report.check(s, literal_form ? name + " (corrected)" : name, class_diff(c.computed, c.expected),
                   "equal");
    }
    for (const auto& c : deg::ring_cross_check(engine, deg::FormulaVariant::kLiteral)) {
      if (c.name != "c2" && c.name != "c3") continue;
      const std::string name = c.name + " i=" + std::to_string(c.i) + " (printed)";
      if (literal_is_assertion) {
        report.check(s, name, class_diff(c.computed, c.expected), "equal");
      } else {
        report.info(s, name, class_diff(c.computed, c.expected));
      }
    }
  });
}

void degeneracy_suite(Report& report, int r, std::optional<int> m, int threads) {
  const std::string base = "degeneracy r=" + std::to_string(r);
  guarded(report, base, [&] {
    const auto prob = deg::DegeneracyProblem::make(r, m);
    const std::string s = base + " m=" + std::to_string(prob.m);
    report.describe(s, "intersections of the flag degeneracy class with the diagonal and a point slice");
    const auto det = deg::fp_determinant(prob, {deg::EntryMode::kFull, threads});
    const Rational diag = deg::intersect_diagonal(det, prob.g);
    const Rational eta2 = deg::intersect_point_slice(det, prob.g);
    report.info(s, "g", std::to_string(prob.g));
    report.check(s, "diagonal = double sum", diag, deg::n_combinatorial(prob));
    report.check(s, "diagonal = closed form", diag, n_closed_form(r));
    report.check(s, "eta2 det = Vandermonde breakdown", eta2, deg::point_slice_breakdown(prob));
    report.check(s, "eta3 det = eta2 det", deg::intersect_point_slice_second(det, prob.g), eta2);
    report.info(s, "gamma23 det", deg::intersect_gamma23(det, prob.g));
    report.info(s, "gamma24 gamma34 contribution", deg::gamma_pair_term(prob));

    const auto reduced = deg::fp_determinant(prob, {deg::EntryMode::kAnnihilatorReduced, threads});
    report.check(s, "reduced entries: diagonal", deg::intersect_diagonal(reduced, prob.g), diag);
    report.check(s, "reduced entries: eta2 det", deg::intersect_point_slice(reduced, prob.g), eta2);
  });
}

void theta_pure_suite(Report& report, int r_max, int threads) {
  const std::string s = "theta-pure";
  report.describe(s, "determinant of (1/(2i-j)!) against V(0, 2, ..., 2r)");
  guarded(report, s, [&] {
    for (int r = 1; r <= r_max; ++r) {
      IntSequence evens;
      for (int i = 0; i <= r; ++i) evens.push_back(2L * i);
      report.check(s, "r=" + std::to_string(r), deg::theta_pure_determinant(r, threads),
                   vandermonde_v(evens));
    }
  });
}

void prym_suite(Report& report, int r, bool with_coefficients) {
  const std::string s = r_section("prym", r);
  report.describe(s, "Prym-Brill-Noether class: relation system, closed forms, slopes, test curves");
  guarded(report, s, [&] {
    const auto x = div::solve_prym_class(r);
    const long g = x.g;
    if (with_coefficients) {
      report.info(s, "g", std::to_string(g));
      report.info(s, "lambda", x.a);
      report.info(s, "delta0'", x.b0p);
      report.info(s, "delta0''", x.b0pp);
      report.info(s, "delta0ram", x.b0ram);
      for (int i = 1; i <= g - 1; ++i) report.info(s, "delta" + std::to_string(i), *x.b_at(i));
      for (const auto& label : x.unknown_labels()) report.info(s, "delta" + label, "UNKNOWN");
    }
    for (const auto& c : div::prym_relations(x)) report.check(s, c.name, c.lhs, c.rhs);
    for (const auto& c : div::prym_closed_forms(x)) report.check(s, c.name, c.lhs, c.rhs);
    report.check_true(s, "pullback to genus 0 vanishes", div::pullback_to_genus0(x).is_zero());

    const auto sl = div::slopes(x);
    report.check(s, "a/b0ram = 4 + 4/g", sl.over_b0ram, 4 + make_rational(4, g));
    report.check(s, "a/b0' - a/b0ram = 2 + 2/g", sl.over_b0p - sl.over_b0ram, 2 + make_rational(2, g));

    const auto coords = x.signed_coordinates();
    for (auto curve : {app::TestCurve::kA1, app::TestCurve::kAgMinus1}) {
      const auto profile = app::test_curve(curve, static_cast<int>(g));
      report.check(s, profile.name + " pairing", app::test_curve_pairing(profile, coords), Rational(0));
    }
    const auto xi = app::test_curve(app::TestCurve::kXi, static_cast<int>(g));
    report.check(s, xi.name + " pairing", app::test_curve_pairing(xi, coords), 1 - make_rational(g, 3));

    if (r == 3) {
      // The displayed class in genus 6.
      const std::vector<Rational> want = {7, 1, 4, make_rational(3, 2), 15, 14, 12, 9, 5};
      std::vector<Rational> got = {x.a, x.b0p, x.b0pp, x.b0ram};
      for (int i = 1; i <= 5; ++i) got.push_back(*x.b_at(i));
      std::string got_s, want_s;
      for (std::size_t k = 0; k < got.size(); ++k) {
        got_s += (k ? ";" : "") + to_string(got[k]);
        want_s += (k ? ";" : "") + to_string(want[k]);
      }
      report.check(s, "genus 6 display (a; b0'; b0''; b0ram; b1..b5)", got_s, want_s);
    }
  });
}

void strongly_bn_suite(Report& report, int r, bool with_engine, int threads, bool with_coefficients) {
  const std::string s = r_section("strongly-bn", r);
  report.describe(s, "strongly Brill-Noether class in genus r(r+1)/2 - 1 and its moving-point relation");
  guarded(report, s, [&] {
    const auto x = div::strongly_bn_class(r);
    const long g = x.g;
    if (with_coefficients) {
      report.info(s, "g", std::to_string(g));
      report.info(s, "psi1", x.a1);
      report.info(s, "psi2", x.a2);
      report.info(s, "lambda", x.a);
      report.info(s, "delta0", x.b0);
      for (std::size_t i = 0; i < x.b_12.size(); ++i) {
        report.info(s, "delta" + std::to_string(i) + ",{1,2}", x.b_12[i]);
      }
      for (const auto& label : x.unknown_labels()) report.info(s, "delta" + label, "UNKNOWN");
      report.info(s, "c (printed)", *x.c_scale);
    }
    report.check(s, "a1 = a2", x.a1, x.a2);
    report.check(s, "a1 = (g^2+g+2)/8", x.a1, make_rational(g * g + g + 2, 8));
    report.check(s, "a = g+2", x.a, Rational(g + 2));
    report.check(s, "b0 = (g+1)/6", x.b0, make_rational(g + 1, 6));
    report.check(s, "a1 = (g^2+g+2)/(4g(g+1)) b_{0,{1,2}}", x.a1,
                 make_rational(g * g + g + 2, 4 * g * (g + 1)) * x.b_12[0]);
    bool b12_ok = true;
    for (long i = 0; i < g; ++i) {
      b12_ok = b12_ok && x.b_12[static_cast<std::size_t>(i)] == make_rational((g - i) * (g + i + 1), 2);
    }
    report.check_true(s, "b_{i,{1,2}} = (g-i)(g+i+1)/2", b12_ok);
    report.info(s, "(2g-1)a1 + a2 - b_{0,{1,2}}", div::moving_point_pairing(x));

    if (!with_engine) return;
    const auto ps = div::check_point_slice(r, threads);
    report.info(s, "eta2 det (engine)", ps.engine);
    report.info(s, "candidate c printed: c * pairing", ps.c_printed * ps.pairing);
    report.info(s, "candidate c printed: c * b_{0,{1,2}}", ps.c_printed * x.b_12[0]);
    report.info(s, "n/(2g-2)", ps.n_over_2g_minus_2);
    report.info(s, "engine-implied c", ps.implied_c);
    report.check(s, "engine-implied c / printed c", ps.ratio, Rational(2));
    report.check(s, "engine-implied c * b_{0,{1,2}} = n/(2g-2)", ps.implied_c_times_b012,
                 ps.n_over_2g_minus_2);
  });
}

void pointed_bn_suite(Report& report, int r) {
  const std::string s = r_section("pointed-bn", r);
  report.describe(s, "pointed Brill-Noether divisor mu BN + nu W in genus r(r+1)/2 - 1");
  guarded(report, s, [&] {
    const auto c = div::mu_nu(r);
    const auto x = div::pointed_bn_class(r);
    const long g = static_cast<long>(r) * (r + 1) / 2;
    report.info(s, "h", std::to_string(x.h));
    report.info(s, "mu", c.mu);
    report.info(s, "nu", c.nu);
    report.info(s, "n", c.n);
    report.info(s, "Sigma", c.sigma);
    report.info(s, "psi", x.psi);
    report.info(s, "lambda", x.lambda);
    for (std::size_t i = 0; i < x.delta.size(); ++i) report.info(s, "delta" + std::to_string(i), x.delta[i]);
    report.check(s, "mu = nu", c.mu, c.nu);
    report.check(s, "lambda = mu (g+1)", x.lambda, c.mu * (g + 1));
    report.check(s, "psi = nu g(g-1)/2", x.psi, c.nu * make_rational(g * (g - 1), 2));
    report.check(s, "delta0 = -mu g/6", x.delta[0], -c.mu * make_rational(g, 6));
  });
}

void kodaira_suite(Report& report) {
  const std::string s = "kodaira r14-2";
  report.describe(s, "combination of three pulled-back classes in genus 14 with psi part below 1");
  guarded(report, s, [&] {
    const auto k = app::kodaira_r14_2();
    const char* names[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < 3; ++i) report.check(s, names[i], k.solution[i], k.expected_solution[i]);
    report.check(s, "lambda", k.combination.lambda, k.target.lambda);
    report.check(s, "delta0'", k.combination.delta0p, k.target.delta0p);
    report.check(s, "delta0ram", k.combination.delta0ram, k.target.delta0ram);
    report.check(s, "psi", k.combination.psi, k.expected_psi);
    report.check_true(s, "psi < 1", k.psi_below_one());
    report.check_true(s, "z + 1/10^6 misses the target", k.perturbation_detected);
  });
}

void nikulin_suite(Report& report, int r_min, int r_max) {
  const std::string s = "nikulin";
  report.describe(s, "Xi_g against the Prym-Brill-Noether class: 1 - g/3, negative for r >= 3");
  guarded(report, s, [&] {
    for (int r = r_min; r <= r_max; ++r) {
      const auto n = app::nikulin(r);
      const std::string tag = " r=" + std::to_string(r) + " g=" + std::to_string(n.g);
      report.check(s, "pairing" + tag, n.pairing, n.expected);
      report.check_true(s, "negative" + tag, n.negative());
    }
  });
}

void rho_suite(Report& report, int r_min, int r_max) {
  const std::string s = "rho";
  report.describe(s, "Brill-Noether counts behind the test-curve and divisoriality arguments");
  guarded(report, s, [&] {
    family(report, s, "rho(2g-1, r, 2g-2) = -r-2", r_min, r_max,
           [](int r) { return app::double_cover_rho(r) == -r - 2; });
    auto multi = [](int r, app::SecondFactor f) {
      const long g = static_cast<long>(r) * (r + 1) / 2 - 1;
      const long d = g + r;
      app::MultivanishingProfile prof;
      for (long j = 0; j <= r; ++j) prof.orders.push_back(2 * j);
      for (long deg = 0; deg <= d + 2; deg += 2) prof.divisor_degrees.push_back(deg);
      return app::rho_multivanishing(g, r, d, prof, f);
    };
    family(report, s, "multivanishing (0,2,...,2r) = -1", r_min, r_max,
           [&](int r) { return multi(r, app::SecondFactor::kCorrected) == -1; });
    report.info(s, "multivanishing with g-r+d at r=3", std::to_string(multi(3, app::SecondFactor::kAsPrinted)));

    app::FeasibilityData prym;
    const long g = 6;
    prym.g = 2 * g - 1;
    prym.r = 3;
    prym.d = 2 * g - 2;
    report.check_true(s, "case VI rejects the genus-11 double cover g^3_10",
                      !app::feasibility_check(app::LemmaCase::kVI, prym));
  });
}

void sequence_suite(Report& report, int r_min, int r_max) {
  const std::string s = "sequences";
  report.describe(s, "vanishing sequences forced by the degeneration constraints");
  guarded(report, s, [&] {
    for (int r = r_min; r <= r_max; ++r) {
      const long g = static_cast<long>(r) * (r + 1) / 2;
      const std::string tag = " r=" + std::to_string(r);
      auto expect = [&](long first) {
        IntSequence seq;
        for (long i = 0; i <= r; ++i) seq.push_back(first + 2 * i);
        return join(seq);
      };
      report.check(s, "second relation" + tag, join(app::vanishing_sequence_solver(r, app::SequenceCase::kSecondRel).orders),
                   expect(g - r - 1));
      // Exactly one multidegree admits even orders, decided by the parity of g - r.
      const bool even = (g - r) % 2 == 0;
      const auto live = even ? app::SequenceCase::kStronglyEven : app::SequenceCase::kStronglyOdd;
      const auto dead = even ? app::SequenceCase::kStronglyOdd : app::SequenceCase::kStronglyEven;
      report.check(s, app::to_string(live) + tag, join(app::vanishing_sequence_solver(r, live).orders),
                   expect(even ? g - r - 2 : g - r - 1));
      const auto none = app::enumerate_sequences(r, app::sequence_constraints(r, dead));
      report.check(s, app::to_string(dead) + " solutions" + tag, std::to_string(none.size()), "0");
    }
  });
}

void verify_all(Report& report, const VerifyRanges& ranges) {
  identity_suite(report);
  mu_nu_suite(report, 12);
  for (int r = 2; r <= ranges.r_max; ++r) {
    const int m0 = r * (r + 1) / 2 - 1 - r;
    for (int m : {m0, m0 + 7}) ring_suite(report, r, m, ranges.threads, false);
    for (int m : {m0, m0 + 7}) degeneracy_suite(report, r, m, ranges.threads);
  }
  theta_pure_suite(report, 8, ranges.threads);
  for (int r = 3; r <= 10; ++r) prym_suite(report, r, false);
  for (int r = 3; r <= 10; ++r) {
    strongly_bn_suite(report, r, r <= ranges.r_max, ranges.threads, false);
  }
  kodaira_suite(report);
  nikulin_suite(report, 3, 8);
  rho_suite(report, 2, 20);
  sequence_suite(report, 3, 10);
}

}  // namespace tautcalc::cli
