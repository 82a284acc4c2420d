#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cabounds/params.hpp"

namespace cabounds {

enum class BoundMethod {
  slj,
  discrete_slj,
  two_stage,
  gss_lll,
  cyclic_lll,
  frobenius_lll,
  pgl_lll,
  conditional_lll,       // LLL first stage, one row per leftover interaction
  conditional_lll_dslj,  // LLL first stage, discrete-SLJ second stage
  katona,
};

std::string_view to_string(BoundMethod method) noexcept;
/// Accepts the canonical names above plus short aliases ("gss", "cyclic", ...).
std::optional<BoundMethod> parse_bound_method(std::string_view name);
std::vector<BoundMethod> all_bound_methods();

/// How many other column-set events a column-set event may depend on.
enum class DependenceEstimate {
  /// d + 1 <= t * C(k, t-1).
  simple,
  /// d <= t * C(k-1, t-1) - C(k-t, t-1) for the group-action bounds
  /// (columns sharing a single column are independent under a sharply
  /// transitive action); d <= t * C(k-1, t-1) for the plain LLL bound.
  improved,
};

/// Size of the leftover set used by the conditional-LLL two-stage bound.
enum class LeftoverForm {
  /// floor(C(k,t) (v^t - 1) e (1 - 1/v^t)^n) at the first-stage n.
  expectation,
  /// floor(k e^t (v^t - 1) / t^2 (1 - 1/t)^(t-1)), the k-linear relaxation.
  closed_form,
};

enum class SecondStage { one_row_each, discrete_slj };

struct BoundOptions {
  DependenceEstimate dependence = DependenceEstimate::simple;
  LeftoverForm leftover = LeftoverForm::expectation;
  /// The discrete-SLJ recurrence runs on 64-bit words up to this starting
  /// count; beyond it `arbitrary_precision` must be set.
  std::uint64_t trace_cap = std::uint64_t{1} << 63;
  bool arbitrary_precision = false;
};

struct BoundReport {
  BoundMethod method = BoundMethod::slj;
  std::uint64_t value = 0;
  std::optional<std::uint64_t> stage1_rows;
  std::optional<double> expected_leftover;
  /// Named intermediates (orbit counts, dependence bound, log terms, ...).
  std::map<std::string, double> notes;
  /// The finite inequality that determined `value`, in plain text.
  std::string inequality;
};

/// r(0) = C(k,t) v^t, r(i) the interactions left after row i, and the
/// per-step deficits eps(i) = (1 - 1/v^t) r(i) - r(i+1) kept as numerators
/// over v^t.
struct DiscreteSljTrace {
  std::vector<BigInt> remaining;
  std::vector<BigInt> deficit_numerators;
  BigInt deficit_denominator;

  std::size_t rows() const noexcept { return remaining.empty() ? 0 : remaining.size() - 1; }
  double deficit(std::size_t i) const;
};

/// Lower estimate and the eps-dependent upper expression that bracket the
/// discrete-SLJ row count.
struct DiscreteSljSandwich {
  Real lower;
  Real upper;
  Real epsilon;
};

BoundReport slj_bound(const CAParams& params);

std::pair<BoundReport, DiscreteSljTrace> discrete_slj_bound(const CAParams& params,
                                                            const BoundOptions& options = {});
/// Same N as discrete_slj_bound without materialising the trace.
BoundReport discrete_slj_value(const CAParams& params, const BoundOptions& options = {});
Real discrete_slj_estimate(const CAParams& params);
DiscreteSljSandwich discrete_slj_sandwich(const CAParams& params, const DiscreteSljTrace& trace);

/// Rows needed by the discrete-SLJ recurrence started from `uncovered`
/// interactions with per-row cover probability 1/v^t.
std::uint64_t discrete_slj_rows_from(const BigInt& uncovered, const BigInt& tuples_per_set);

/// n + floor(C(k,t) v^t (1 - 1/v^t)^n).
BigInt two_stage_objective(const CAParams& params, std::uint64_t n);
/// floor(C(k,t) v^t (1 - 1/v^t)^n), exact whenever v^(tn) <= C(k,t) v^t.
BigInt expected_uncovered_floor(const CAParams& params, std::uint64_t n);
Real two_stage_analytic_optimum(const CAParams& params);
BoundReport two_stage_bound(const CAParams& params);

BoundReport gss_lll_bound(const CAParams& params, const BoundOptions& options = {});
BoundReport cyclic_lll_bound(const CAParams& params, const BoundOptions& options = {});
/// Throws unsupported_parameter unless v is a prime power.
BoundReport frobenius_lll_bound(const CAParams& params, const BoundOptions& options = {});
/// Throws unsupported_parameter unless v >= 3 and v - 1 is a prime power.
BoundReport pgl_lll_bound(const CAParams& params, const BoundOptions& options = {});
BoundReport conditional_lll_two_stage_bound(const CAParams& params, SecondStage second_stage,
                                            const BoundOptions& options = {});

/// Exact CAN(2,k,2): the smallest N with k <= C(N-1, ceil(N/2)).
std::uint64_t katona_kleitman_exact(std::uint64_t k);

/// Number of full-length PGL orbits on symbol t-tuples:
/// (v^(t-1) - (v-1)(2^(t-1)-1) - 1) / ((v-1)(v-2)).
BigInt pgl_full_orbit_count(unsigned t, unsigned v);

/// Coefficient c in CAN(t,k,v) <= c log k (1 + o(1)) for slj, gss_lll,
/// cyclic_lll, frobenius_lll and pgl_lll.
double asymptotic_coefficient(BoundMethod method, unsigned t, unsigned v);

/// Dispatches to the bound named by `method`.
BoundReport compute_bound(BoundMethod method, const CAParams& params, const BoundOptions& options = {});

}  // namespace cabounds
