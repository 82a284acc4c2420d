#include "cabounds/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "cabounds/error.hpp"

namespace cabounds {

namespace {

using boost::multiprecision::exp;
using boost::multiprecision::floor;
using boost::multiprecision::log;

const Real& euler_e() {
  static const Real value = boost::math::constants::e<Real>();
  return value;
}

struct MethodName {
  BoundMethod method;
  std::string_view name;
  std::string_view alias;
};

constexpr std::array<MethodName, 10> kMethodNames{{
    {BoundMethod::slj, "slj", "slj"},
    {BoundMethod::discrete_slj, "discrete_slj", "dslj"},
    {BoundMethod::two_stage, "two_stage", "two_stage"},
    {BoundMethod::gss_lll, "gss_lll", "gss"},
    {BoundMethod::cyclic_lll, "cyclic_lll", "cyclic"},
    {BoundMethod::frobenius_lll, "frobenius_lll", "frobenius"},
    {BoundMethod::pgl_lll, "pgl_lll", "pgl"},
    {BoundMethod::conditional_lll, "conditional_lll", "cond_lll"},
    {BoundMethod::conditional_lll_dslj, "conditional_lll_dslj", "cond_lll_dslj"},
    {BoundMethod::katona, "katona", "katona"},
}};

double to_double(const Real& x) { return x.convert_to<double>(); }

// Smallest integer n >= 0 with  log_const - n * rate < 0  (or <= 0 when not
// strict). The closed form is evaluated in double and then corrected against
// the inequality in 50-digit arithmetic, so boundary misrounding cannot leak.
std::uint64_t smallest_rows(const Real& log_const, const Real& rate, bool strict) {
  require(rate > 0, ErrorKind::internal_error, "non-positive decay rate");
  auto holds = [&](std::uint64_t n) {
    const Real lhs = log_const - Real(n) * rate;
    return strict ? lhs < 0 : lhs <= 0;
  };
  const double estimate = std::max(0.0, std::ceil(to_double(log_const / rate)));
  require(estimate < 9.0e18, ErrorKind::resource_limit, "row estimate overflows 64 bits");
  auto n = static_cast<std::uint64_t>(estimate);
  while (n > 0 && holds(n - 1)) --n;
  while (!holds(n)) ++n;
  return n;
}

// log(v^t / (v^t - 1)), the per-row decay rate of one uncovered interaction.
Real decay_rate(const CAParams& params) {
  const BigInt tuples = params.tuples_per_column_set();
  return log_ratio(tuples, 1);
}

// t * C(k, t-1) for the simple estimate, d + 1 for the improved one.
BigInt dependence_term(const CAParams& params, DependenceEstimate estimate, bool group_action) {
  const unsigned t = params.t();
  const unsigned k = params.k();
  if (estimate == DependenceEstimate::simple) return BigInt(t) * binomial(k, t - 1);
  BigInt d = BigInt(t) * binomial(k - 1, t - 1);
  if (group_action) d -= binomial(k - t, t - 1);
  return d + 1;
}

const char* dependence_label(DependenceEstimate estimate) {
  return estimate == DependenceEstimate::simple ? "simple" : "improved";
}

template <typename Int, typename OnStep>
std::uint64_t run_recurrence(Int r, const Int& tuples, OnStep&& on_step) {
  std::uint64_t i = 0;
  while (r > 0) {
    ++i;
    const Int quotient = r / tuples;
    const bool divisible = r % tuples == 0;
    Int next;
    if (i == 1 || !divisible) {
      next = r - quotient - (divisible ? 0 : 1);  // floor(y r) = r - ceil(r / v^t)
    } else {
      next = r - quotient - 1;
    }
    on_step(r, next);
    r = next;
  }
  return i;
}

void check_trace_cap(const BigInt& start, const BoundOptions& options) {
  if (options.arbitrary_precision) return;
  require(start <= options.trace_cap, ErrorKind::resource_limit,
          "discrete-SLJ start count " + start.str() + " exceeds the trace cap " +
              std::to_string(options.trace_cap) + "; enable arbitrary precision");
}

void require_prime_power_v(const CAParams& params) {
  require(is_prime_power(params.v()), ErrorKind::unsupported_parameter,
          "frobenius requires prime-power v (got v=" + std::to_string(params.v()) + ")");
}

void require_pgl_v(unsigned v) {
  require(v >= 3 && is_prime_power(v - 1), ErrorKind::unsupported_parameter,
          "pgl requires v >= 3 with v-1 a prime power (got v=" + std::to_string(v) + ")");
}

}  // namespace

std::string_view to_string(BoundMethod method) noexcept {
  for (const auto& entry : kMethodNames) {
    if (entry.method == method) return entry.name;
  }
  return "unknown";
}

std::optional<BoundMethod> parse_bound_method(std::string_view name) {
  for (const auto& entry : kMethodNames) {
    if (entry.name == name || entry.alias == name) return entry.method;
  }
  return std::nullopt;
}

std::vector<BoundMethod> all_bound_methods() {
  std::vector<BoundMethod> methods;
  for (const auto& entry : kMethodNames) methods.push_back(entry.method);
  return methods;
}

double DiscreteSljTrace::deficit(std::size_t i) const {
  return (Real(deficit_numerators.at(i)) / Real(deficit_denominator)).convert_to<double>();
}

BoundReport slj_bound(const CAParams& params) {
  const BigInt space = params.interaction_space_size();
  const Real rate = decay_rate(params);
  BoundReport report;
  report.method = BoundMethod::slj;
  report.value = smallest_rows(log_big(space), rate, /*strict=*/true);
  const Real leftover = exp(log_big(space) - Real(report.value) * rate);
  report.expected_leftover = to_double(leftover);
  report.notes["interactions"] = to_double(Real(space));
  report.notes["log_rate"] = to_double(rate);
  report.inequality = "C(k,t) v^t (1 - 1/v^t)^N < 1";
  return report;
}

std::pair<BoundReport, DiscreteSljTrace> discrete_slj_bound(const CAParams& params, const BoundOptions& options) {
  const BigInt start = params.interaction_space_size();
  check_trace_cap(start, options);
  const BigInt tuples = params.tuples_per_column_set();

  DiscreteSljTrace trace;
  trace.deficit_denominator = tuples;
  trace.remaining.push_back(start);
  run_recurrence<BigInt>(start, tuples, [&](const BigInt& r, const BigInt& next) {
    trace.remaining.push_back(next);
    trace.deficit_numerators.push_back(r * (tuples - 1) - next * tuples);
  });

  BoundReport report;
  report.method = BoundMethod::discrete_slj;
  report.value = trace.rows();
  const auto sandwich = discrete_slj_sandwich(params, trace);
  report.notes["estimate"] = to_double(sandwich.lower);
  report.notes["upper_expression"] = to_double(sandwich.upper);
  report.notes["epsilon"] = to_double(sandwich.epsilon);
  report.inequality =
      "r(i) = floor((1 - 1/v^t) r(i-1)), minus one more when i > 1 and v^t divides r(i-1); N = first i with r(i) = 0";
  return {std::move(report), std::move(trace)};
}

BoundReport discrete_slj_value(const CAParams& params, const BoundOptions& options) {
  const BigInt start = params.interaction_space_size();
  check_trace_cap(start, options);
  BoundReport report;
  report.method = BoundMethod::discrete_slj;
  report.value = discrete_slj_rows_from(start, params.tuples_per_column_set());
  report.notes["estimate"] = to_double(discrete_slj_estimate(params));
  report.inequality =
      "r(i) = floor((1 - 1/v^t) r(i-1)), minus one more when i > 1 and v^t divides r(i-1); N = first i with r(i) = 0";
  return report;
}

std::uint64_t discrete_slj_rows_from(const BigInt& uncovered, const BigInt& tuples_per_set) {
  if (uncovered <= 0) return 0;
  auto noop = [](const auto&, const auto&) {};
  if (uncovered <= (std::uint64_t{1} << 63) && tuples_per_set <= (std::uint64_t{1} << 32)) {
    return run_recurrence<std::uint64_t>(uncovered.convert_to<std::uint64_t>(),
                                         tuples_per_set.convert_to<std::uint64_t>(), noop);
  }
  return run_recurrence<BigInt>(uncovered, tuples_per_set, noop);
}

Real discrete_slj_estimate(const CAParams& params) {
  return log_big(params.column_set_count() + 1) / decay_rate(params);
}

DiscreteSljSandwich discrete_slj_sandwich(const CAParams& params, const DiscreteSljTrace& trace) {
  const BigInt sets = params.column_set_count();
  const Real rate = decay_rate(params);
  // eps = min eps(i) over 1 <= i < N-1; every such eps(i) is at least 1/v^t,
  // which is also the fallback when the range is empty.
  BigInt min_numerator = 1;
  bool seen = false;
  const std::size_t n = trace.rows();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!seen || trace.deficit_numerators[i] < min_numerator) {
      min_numerator = trace.deficit_numerators[i];
      seen = true;
    }
  }
  const Real epsilon = Real(min_numerator) / Real(trace.deficit_denominator);
  DiscreteSljSandwich out;
  out.epsilon = epsilon;
  out.lower = log_big(sets + 1) / rate;
  out.upper = (log(Real(sets) + epsilon) - log(epsilon)) / rate;
  return out;
}

BigInt expected_uncovered_floor(const CAParams& params, std::uint64_t n) {
  const BigInt space = params.interaction_space_size();
  const BigInt tuples = params.tuples_per_column_set();
  // When v^(tn) <= space the quantity is a small rational: take the floor
  // exactly. Otherwise it is a non-integer and 50 digits settle the floor.
  const std::uint64_t space_bits = boost::multiprecision::msb(space) + 1;
  const std::uint64_t min_bits_per_tuple = static_cast<std::uint64_t>(std::bit_width(params.v()) - 1) * params.t();
  if (n * min_bits_per_tuple <= space_bits) {
    const BigInt denominator = boost::multiprecision::pow(tuples, static_cast<unsigned>(n));
    if (denominator <= space) {
      return space * boost::multiprecision::pow(BigInt(tuples - 1), static_cast<unsigned>(n)) / denominator;
    }
  }
  const Real value = exp(log_big(space) - Real(n) * decay_rate(params));
  return BigInt(floor(value));
}

BigInt two_stage_objective(const CAParams& params, std::uint64_t n) {
  return BigInt(n) + expected_uncovered_floor(params, n);
}

Real two_stage_analytic_optimum(const CAParams& params) {
  const Real rate = decay_rate(params);
  return (log_big(params.interaction_space_size()) + log(rate)) / rate;
}

BoundReport two_stage_bound(const CAParams& params) {
  const Real rate = decay_rate(params);
  const Real optimum = two_stage_analytic_optimum(params);
  const auto centre = static_cast<std::int64_t>(to_double(floor(optimum)));
  constexpr std::int64_t kWindow = 64;
  const auto first = static_cast<std::uint64_t>(std::max<std::int64_t>(0, centre - kWindow));
  const auto last = static_cast<std::uint64_t>(std::max<std::int64_t>(0, centre + kWindow));

  BigInt best_total = -1;
  std::uint64_t best_n = 0;
  for (std::uint64_t n = first; n <= last; ++n) {
    const BigInt total = two_stage_objective(params, n);
    if (best_total < 0 || total < best_total) {  // ties keep the smallest n
      best_total = total;
      best_n = n;
    }
  }

  BoundReport report;
  report.method = BoundMethod::two_stage;
  report.value = to_u64_checked(best_total, "two-stage bound");
  report.stage1_rows = best_n;
  report.expected_leftover = to_double(exp(log_big(params.interaction_space_size()) - Real(best_n) * rate));
  report.notes["analytic_optimum_n"] = to_double(optimum);
  report.notes["analytic_bound"] = to_double(optimum + 1 / rate);
  report.notes["stage2_rows"] = to_double(Real(BigInt(best_total - best_n)));
  report.inequality = "min over n of n + floor(C(k,t) v^t (1 - 1/v^t)^n), n within 64 of the analytic optimum";
  return report;
}

BoundReport gss_lll_bound(const CAParams& params, const BoundOptions& options) {
  const BigInt tuples = params.tuples_per_column_set();
  const BigInt dep = dependence_term(params, options.dependence, /*group_action=*/false);
  const Real rate = decay_rate(params);
  // e * v^t (1 - 1/v^t)^N * dep <= 1, the union over the v^t tuples of a column set.
  const Real log_const = 1 + log_big(tuples) + log_big(dep);

  BoundReport report;
  report.method = BoundMethod::gss_lll;
  report.value = smallest_rows(log_const, rate, /*strict=*/false);
  report.notes["p"] = to_double(exp(log_big(tuples) - Real(report.value) * rate));
  report.notes["d_plus_1"] = to_double(Real(dep));
  report.notes["d"] = to_double(Real(BigInt(dep - 1)));
  report.inequality = std::string("e * v^t * (1 - 1/v^t)^N * (d+1) <= 1 with d+1 = ") +
                      (options.dependence == DependenceEstimate::simple ? "t*C(k,t-1)" : "t*C(k-1,t-1)+1") +
                      " (dependence: " + dependence_label(options.dependence) + ")";
  return report;
}

BoundReport cyclic_lll_bound(const CAParams& params, const BoundOptions& options) {
  const unsigned v = params.v();
  const BigInt orbits = ipow(v, params.t() - 1);
  const BigInt dep = dependence_term(params, options.dependence, /*group_action=*/true);
  const Real rate = log_ratio(orbits, 1);
  const Real log_const = 1 + log_big(orbits) + log_big(dep);
  const std::uint64_t n = smallest_rows(log_const, rate, /*strict=*/true);

  BoundReport report;
  report.method = BoundMethod::cyclic_lll;
  report.stage1_rows = n;
  report.value = v * n;
  report.notes["orbit_count"] = to_double(Real(orbits));
  report.notes["orbit_length"] = v;
  report.notes["group_order"] = v;
  report.notes["d_plus_1"] = to_double(Real(dep));
  report.notes["p"] = to_double(exp(log_big(orbits) - Real(n) * rate));
  report.inequality = std::string("e * v^(t-1) * (1 - 1/v^(t-1))^n * (d+1) < 1, N = v n (dependence: ") +
                      dependence_label(options.dependence) + ")";
  return report;
}

BoundReport frobenius_lll_bound(const CAParams& params, const BoundOptions& options) {
  require_prime_power_v(params);
  const unsigned v = params.v();
  const BigInt w = ipow(v, params.t() - 1);
  const BigInt full_orbits = (w - 1) / (v - 1);
  const BigInt dep = dependence_term(params, options.dependence, /*group_action=*/true);
  const Real rate = log_ratio(w, v - 1);
  const Real log_const = 1 + log_big(full_orbits) + log_big(dep);
  const std::uint64_t n = smallest_rows(log_const, rate, /*strict=*/true);
  const std::uint64_t order = std::uint64_t{v} * (v - 1);

  BoundReport report;
  report.method = BoundMethod::frobenius_lll;
  report.stage1_rows = n;
  report.value = order * n + v;
  report.notes["full_orbit_count"] = to_double(Real(full_orbits));
  report.notes["full_orbit_length"] = static_cast<double>(order);
  report.notes["short_orbit_rows"] = v;
  report.notes["group_order"] = static_cast<double>(order);
  report.notes["d_plus_1"] = to_double(Real(dep));
  report.notes["p"] = to_double(exp(log_big(full_orbits) - Real(n) * rate));
  report.inequality =
      std::string("e * ((v^(t-1)-1)/(v-1)) * (1 - (v-1)/v^(t-1))^n * (d+1) < 1, N = v(v-1) n + v (dependence: ") +
      dependence_label(options.dependence) + ")";
  return report;
}

BigInt pgl_full_orbit_count(unsigned t, unsigned v) {
  require_pgl_v(v);
  const BigInt numerator = ipow(v, t - 1) - BigInt(v - 1) * (ipow(2, t - 1) - 1) - 1;
  const BigInt denominator = BigInt(v - 1) * (v - 2);
  require(numerator % denominator == 0, ErrorKind::internal_error, "PGL orbit count is not integral");
  return numerator / denominator;
}

BoundReport pgl_lll_bound(const CAParams& params, const BoundOptions& options) {
  const unsigned v = params.v();
  require_pgl_v(v);
  const unsigned t = params.t();
  const BigInt r = pgl_full_orbit_count(t, v);
  const BigInt w = ipow(v, t - 1);
  const BigInt dep = dependence_term(params, options.dependence, /*group_action=*/true);
  const std::uint64_t order = std::uint64_t{v} * (v - 1) * (v - 2);

  std::uint64_t n = 0;
  if (r > 0) {
    const Real rate = log_ratio(w, BigInt(v - 1) * (v - 2));
    n = smallest_rows(1 + log_big(r) + log_big(dep), rate, /*strict=*/true);
  }
  const std::uint64_t full_part = order * n + v;
  const BoundReport binary = cyclic_lll_bound(CAParams(t, params.k(), 2), options);
  const std::uint64_t pairs = std::uint64_t{v} * (v - 1) / 2;
  const std::uint64_t pair_part = pairs * binary.value;

  BoundReport report;
  report.method = BoundMethod::pgl_lll;
  report.stage1_rows = n;
  report.value = full_part + pair_part;
  report.notes["r"] = to_double(Real(r));
  report.notes["group_order"] = static_cast<double>(order);
  report.notes["full_orbit_part"] = static_cast<double>(full_part);
  report.notes["pair_part"] = static_cast<double>(pair_part);
  report.notes["binary_ca_rows"] = static_cast<double>(binary.value);
  report.notes["short_orbit_rows"] = v;
  report.notes["d_plus_1"] = to_double(Real(dep));
  report.inequality =
      std::string("e * r * (1 - (v-1)(v-2)/v^(t-1))^n * (d+1) < 1; N = v(v-1)(v-2) n + v + C(v,2) * cyclic(t,k,2) "
                  "(dependence: ") +
      dependence_label(options.dependence) + ")";
  return report;
}

BoundReport conditional_lll_two_stage_bound(const CAParams& params, SecondStage second_stage,
                                            const BoundOptions& options) {
  const unsigned t = params.t();
  const unsigned k = params.k();
  const BigInt tuples = params.tuples_per_column_set();
  const Real rate = decay_rate(params);
  const BigInt dep = BigInt(t) * binomial(k, t - 1);
  // First stage: every interaction of a fixed representative set R (one per
  // column set) is covered once e * (1 - 1/v^t)^n * t C(k,t-1) <= 1.
  const std::uint64_t n = smallest_rows(1 + log_big(dep), rate, /*strict=*/false);

  const Real closed = Real(k) * exp(Real(t)) * Real(BigInt(tuples - 1)) / Real(t * t) *
                      boost::multiprecision::pow(1 - Real(1) / t, t - 1);
  const Real expectation =
      Real(BigInt(params.column_set_count() * (tuples - 1))) * euler_e() * exp(-Real(n) * rate);
  const Real leftover = options.leftover == LeftoverForm::expectation ? expectation : closed;
  const BigInt leftover_floor = BigInt(floor(leftover));

  const std::uint64_t stage2 = second_stage == SecondStage::one_row_each
                                   ? to_u64_checked(leftover_floor, "leftover count")
                                   : discrete_slj_rows_from(leftover_floor, tuples);

  BoundReport report;
  report.method = second_stage == SecondStage::one_row_each ? BoundMethod::conditional_lll
                                                            : BoundMethod::conditional_lll_dslj;
  report.stage1_rows = n;
  report.value = n + stage2;
  report.expected_leftover = to_double(leftover);
  report.notes["leftover_expectation"] = to_double(expectation);
  report.notes["leftover_closed_form"] = to_double(closed);
  report.notes["stage2_rows"] = static_cast<double>(stage2);
  report.inequality =
      std::string("n = ceil(log(e t C(k,t-1)) / log(v^t/(v^t-1))); leftover = ") +
      (options.leftover == LeftoverForm::expectation ? "floor(C(k,t)(v^t-1) e (1-1/v^t)^n)"
                                                     : "floor(k e^t (v^t-1)/t^2 (1-1/t)^(t-1))") +
      (second_stage == SecondStage::one_row_each ? "; one row per leftover" : "; discrete-SLJ rows on the leftover");
  return report;
}

std::uint64_t katona_kleitman_exact(std::uint64_t k) {
  require(k >= 2, ErrorKind::invalid_argument, "katona_kleitman_exact requires k >= 2");
  for (std::uint64_t n = 1;; ++n) {
    if (binomial(n - 1, (n + 1) / 2) >= k) return n;
  }
}

double asymptotic_coefficient(BoundMethod method, unsigned t, unsigned v) {
  require(t >= 2 && v >= 2, ErrorKind::invalid_argument, "asymptotic coefficient needs t, v >= 2");
  const BigInt vt = ipow(v, t);
  const BigInt w = ipow(v, t - 1);
  const Real tm1 = Real(t - 1);
  switch (method) {
    case BoundMethod::slj: return to_double(Real(t) / log_ratio(vt, 1));
    case BoundMethod::gss_lll: return to_double(tm1 / log_ratio(vt, 1));
    case BoundMethod::cyclic_lll: return to_double(Real(v) * tm1 / log_ratio(w, 1));
    case BoundMethod::frobenius_lll:
      require(is_prime_power(v), ErrorKind::unsupported_parameter,
              "frobenius requires prime-power v (got v=" + std::to_string(v) + ")");
      return to_double(Real(v) * (v - 1) * tm1 / log_ratio(w, v - 1));
    case BoundMethod::pgl_lll: {
      require_pgl_v(v);
      // t = 2 leaves no full orbits
      const Real full = pgl_full_orbit_count(t, v) == 0
                            ? Real(0)
                            : Real(v) * (v - 1) * (v - 2) * tm1 / log_ratio(w, BigInt(v - 1) * (v - 2));
      const Real pairs = Real(v) * (v - 1) * tm1 / log_ratio(ipow(2, t - 1), 1);
      return to_double(full + pairs);
    }
    default:
      fail(ErrorKind::unsupported_parameter,
           "no asymptotic coefficient for method " + std::string(to_string(method)));
  }
}

BoundReport compute_bound(BoundMethod method, const CAParams& params, const BoundOptions& options) {
  switch (method) {
    case BoundMethod::slj: return slj_bound(params);
    case BoundMethod::discrete_slj: return discrete_slj_value(params, options);
    case BoundMethod::two_stage: return two_stage_bound(params);
    case BoundMethod::gss_lll: return gss_lll_bound(params, options);
    case BoundMethod::cyclic_lll: return cyclic_lll_bound(params, options);
    case BoundMethod::frobenius_lll: return frobenius_lll_bound(params, options);
    case BoundMethod::pgl_lll: return pgl_lll_bound(params, options);
    case BoundMethod::conditional_lll:
      return conditional_lll_two_stage_bound(params, SecondStage::one_row_each, options);
    case BoundMethod::conditional_lll_dslj:
      return conditional_lll_two_stage_bound(params, SecondStage::discrete_slj, options);
    case BoundMethod::katona: {
      require(params.t() == 2 && params.v() == 2, ErrorKind::unsupported_parameter,
              "katona requires t=2 and v=2");
      BoundReport report;
      report.method = BoundMethod::katona;
      report.value = katona_kleitman_exact(params.k());
      report.inequality = "smallest N with k <= C(N-1, ceil(N/2)) (exact)";
      return report;
    }
  }
  fail(ErrorKind::internal_error, "unknown bound method");
}

}  // namespace cabounds
