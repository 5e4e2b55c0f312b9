#pragma once

#include <optional>

#include "tautcalc/report.hpp"

namespace tautcalc::cli {

// Each suite appends its rows to the report. Exceptions thrown by the
// computations become FAIL rows; none escape.

struct IdentityRanges {
  int power_r_max = 50;
  int master_r_max = 40;
  int final_r_max = 40;
  int catalan_degree = 100;
};

/// Power sums, the master and final binomial identities, the Catalan series.
void identity_suite(Report& report, const IdentityRanges& ranges = {});
/// mu = nu, the Sigma relation and the n closed form for r in 3..r_max.
void mu_nu_suite(Report& report, int r_max = 12);

/// Engine Chern data of every M_i against the closed forms. The printed
/// c_2, c_3 are checked when literal_is_assertion, else reported as info.
void ring_suite(Report& report, int r, std::optional<int> m, int threads, bool literal_is_assertion);
/// Diagonal and point-slice numbers against the double sums and the closed form.
void degeneracy_suite(Report& report, int r, std::optional<int> m, int threads);
/// det(1/(2i-j)!) = V(0, 2, ..., 2r) for r in 1..r_max.
void theta_pure_suite(Report& report, int r_max, int threads);

/// Coefficients, relations, closed forms, slopes and test curves of the
/// Prym-Brill-Noether class. with_coefficients adds one row per coefficient.
void prym_suite(Report& report, int r, bool with_coefficients);
/// Closed forms of the strongly Brill-Noether class and, when with_engine,
/// the moving-point relation against the degeneracy engine.
void strongly_bn_suite(Report& report, int r, bool with_engine, int threads, bool with_coefficients);
void pointed_bn_suite(Report& report, int r);

void kodaira_suite(Report& report);
void nikulin_suite(Report& report, int r_min, int r_max);
/// rho(2g-1, r, 2g-2) = -r-2 and the multivanishing count -1 for r in r_min..r_max.
void rho_suite(Report& report, int r_min, int r_max);
/// Uniqueness of the constrained vanishing sequences for r in r_min..r_max.
void sequence_suite(Report& report, int r_min, int r_max);

struct VerifyRanges {
  /// Upper end of the ring and determinant checks.
  int r_max = 4;
  int threads = 1;
};

/// Everything above at its default range.
void verify_all(Report& report, const VerifyRanges& ranges);

}  // namespace tautcalc::cli
