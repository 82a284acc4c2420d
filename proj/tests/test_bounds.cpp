#include <gtest/gtest.h>

#include <cmath>

#include "cabounds/bounds.hpp"
#include "cabounds/error.hpp"
#include "oracles.hpp"

using namespace cabounds;
using oracle::Big;
using oracle::Float;

namespace {

struct Triple {
  unsigned t, k, v;
};

std::vector<Triple> small_grid() {
  std::vector<Triple> out;
  for (unsigned t = 2; t <= 4; ++t) {
    for (unsigned v = 2; v <= 5; ++v) {
      for (unsigned k = t; k <= 12; ++k) out.push_back({t, k, v});
    }
  }
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no cabounds::Error raised";
  return ErrorKind::internal_error;
}

// Smallest n with  e * a * (1 - num/den)^n * dep  (< or <=) 1, by repeated multiplication.
std::uint64_t lll_oracle(const Big& a, const Big& num, const Big& den, const Big& dep, bool strict) {
  const Float y = 1 - Float(num) / Float(den);
  Float value = oracle::e() * Float(a) * Float(dep);
  std::uint64_t n = 0;
  while (strict ? !(value < 1) : !(value <= 1)) {
    value *= y;
    ++n;
  }
  return n;
}

bool is_pp(unsigned v) { return is_prime_power(v); }

}  // namespace

// ------------------------------------------------------------------ SLJ

TEST(Slj, ValueAt6_54_3) { EXPECT_EQ(slj_bound(CAParams(6, 54, 3)).value, 17236u); }

TEST(Slj, MatchesExactIntegerOracle) {
  for (const auto& [t, k, v] : small_grid()) {
    EXPECT_EQ(slj_bound(CAParams(t, k, v)).value, oracle::slj(t, k, v)) << t << ' ' << k << ' ' << v;
  }
  EXPECT_EQ(oracle::slj(6, 54, 3), 17236u);
}

TEST(Slj, SmallestCase) {
  const BoundReport r = slj_bound(CAParams(2, 2, 2));
  EXPECT_EQ(r.value, 5u);
  // 4 (3/4)^5 < 1 <= 4 (3/4)^4
  EXPECT_LT(4 * std::pow(0.75, 5), 1.0);
  EXPECT_GE(4 * std::pow(0.75, 4), 1.0);
  ASSERT_TRUE(r.expected_leftover.has_value());
  EXPECT_NEAR(*r.expected_leftover, 4 * std::pow(0.75, 5), 1e-12);
}

// --------------------------------------------------------- discrete SLJ

TEST(DiscreteSlj, SmallestCaseTrace) {
  const auto [report, trace] = discrete_slj_bound(CAParams(2, 2, 2));
  EXPECT_EQ(report.value, 4u);
  const std::vector<BigInt> expected{4, 3, 2, 1, 0};
  EXPECT_EQ(trace.remaining, expected);
}

TEST(DiscreteSlj, MatchesRecurrenceOracle) {
  for (const auto& [t, k, v] : small_grid()) {
    const CAParams p(t, k, v);
    const auto [report, trace] = discrete_slj_bound(p);
    const auto expected = oracle::dslj_trace(t, k, v);
    ASSERT_EQ(trace.remaining.size(), expected.size()) << p.to_string();
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(trace.remaining[i], expected[i]);
    EXPECT_EQ(report.value, expected.size() - 1);
    EXPECT_EQ(discrete_slj_value(p).value, report.value);
  }
}

TEST(DiscreteSlj, ValueAt6_54_3) {
  const auto expected = oracle::dslj_trace(6, 54, 3);
  EXPECT_EQ(discrete_slj_value(CAParams(6, 54, 3)).value, expected.size() - 1);
  EXPECT_EQ(expected.size() - 1, 12853u);
}

TEST(DiscreteSlj, TraceInvariants) {
  for (const Triple& g : {Triple{2, 6, 3}, Triple{3, 9, 2}, Triple{4, 10, 3}}) {
    const CAParams p(g.t, g.k, g.v);
    const auto [report, trace] = discrete_slj_bound(p);
    EXPECT_EQ(trace.remaining.front(), p.interaction_space_size());
    EXPECT_EQ(trace.remaining.back(), 0);
    for (std::size_t i = 1; i < trace.remaining.size(); ++i) EXPECT_LT(trace.remaining[i], trace.remaining[i - 1]);
    EXPECT_EQ(trace.deficit(0), 0.0);
    for (std::size_t i = 0; i + 1 < trace.remaining.size(); ++i) {
      EXPECT_GE(trace.deficit(i), 0.0);
      EXPECT_LE(trace.deficit(i), 1.0);
    }
  }
}

TEST(DiscreteSlj, SandwichOnGrid) {
  for (unsigned t : {2u, 3u}) {
    for (unsigned v : {2u, 3u}) {
      for (unsigned k = 4; k <= 20; ++k) {
        const CAParams p(t, k, v);
        const auto [report, trace] = discrete_slj_bound(p);
        const auto s = discrete_slj_sandwich(p, trace);
        EXPECT_LT(s.lower, Real(report.value)) << p.to_string();
        EXPECT_LE(Real(report.value), s.upper) << p.to_string();
      }
    }
  }
}

TEST(DiscreteSlj, LowerEstimateAt6_54_3) {
  const CAParams p(6, 54, 3);
  const double lower = std::log(25827165.0 + 1) / std::log(729.0 / 728.0);
  EXPECT_GT(static_cast<double>(discrete_slj_value(p).value), lower);
  EXPECT_NEAR(discrete_slj_estimate(p).convert_to<double>(), lower, 1e-6);
}

TEST(DiscreteSlj, EstimateSmallestCase) {
  EXPECT_NEAR(discrete_slj_estimate(CAParams(2, 2, 2)).convert_to<double>(), std::log(2.0) / std::log(4.0 / 3.0),
              1e-12);
  EXPECT_NEAR(discrete_slj_estimate(CAParams(2, 2, 2)).convert_to<double>(), 2.409, 1e-3);
}

TEST(DiscreteSlj, NeverExceedsSlj) {
  for (const auto& [t, k, v] : small_grid()) {
    const CAParams p(t, k, v);
    EXPECT_LE(discrete_slj_value(p).value, slj_bound(p).value) << p.to_string();
  }
}

TEST(DiscreteSlj, TraceCapIsEnforced) {
  BoundOptions options;
  options.trace_cap = 1000;
  EXPECT_EQ(kind_of([&] { discrete_slj_bound(CAParams(3, 10, 3), options); }), ErrorKind::resource_limit);
  options.arbitrary_precision = true;
  EXPECT_NO_THROW(discrete_slj_bound(CAParams(3, 10, 3), options));
}

TEST(DiscreteSlj, BigIntegerPathAgreesWithWordPath) {
  // 2^70 forces the arbitrary-precision branch.
  const BigInt start = BigInt(1) << 70;
  const std::uint64_t big = discrete_slj_rows_from(start, 9);
  std::uint64_t small = discrete_slj_rows_from(BigInt(1) << 40, 9);
  EXPECT_GT(big, small);
  // r -> r - ceil(r/9) for non-multiples: a direct simulation agrees at 2^40.
  Big r = Big(1) << 40;
  std::uint64_t steps = 0;
  while (r > 0) {
    ++steps;
    const Big q = r / 9;
    r = (steps == 1 || r % 9 != 0) ? Big(r - (r + 8) / 9) : Big(r - q - 1);
  }
  EXPECT_EQ(small, steps);
}

// ------------------------------------------------------------ two-stage

TEST(TwoStage, ValueAt6_54_3) {
  const BoundReport r = two_stage_bound(CAParams(6, 54, 3));
  EXPECT_EQ(r.value, 13162u);
  ASSERT_TRUE(r.stage1_rows.has_value());
  EXPECT_EQ(*r.stage1_rows, 12402u);
  EXPECT_LT(r.value, slj_bound(CAParams(6, 54, 3)).value);
}

TEST(TwoStage, ObjectiveAt6_54_3MatchesExactFloor) {
  const CAParams p(6, 54, 3);
  EXPECT_EQ(two_stage_objective(p, 12402), 13162);
  for (unsigned n : {12400u, 12401u, 12402u, 12466u, 12467u}) {
    EXPECT_EQ(two_stage_objective(p, n), Big(n) + oracle::expected_floor(6, 54, 3, n)) << n;
  }
  EXPECT_EQ(two_stage_objective(p, 12401), 13163);
}

TEST(TwoStage, ObjectiveAtZero) {
  EXPECT_EQ(two_stage_objective(CAParams(2, 2, 2), 0), 4);
  EXPECT_EQ(two_stage_objective(CAParams(6, 54, 3), 0), CAParams(6, 54, 3).interaction_space_size());
}

TEST(TwoStage, MatchesFullScanOracle) {
  for (unsigned t : {2u, 3u}) {
    for (unsigned v : {2u, 3u, 4u}) {
      for (unsigned k = t; k <= 10; ++k) {
        const CAParams p(t, k, v);
        const Big vt = oracle::power(v, t);
        Big num = oracle::choose(k, t) * vt;
        Big den = 1;
        Big best = -1;
        std::uint64_t best_n = 0;
        const std::uint64_t limit = oracle::slj(t, k, v) + 5;
        for (unsigned n = 0; n <= limit; ++n) {
          const Big f = num / den;
          ASSERT_EQ(expected_uncovered_floor(p, n), f) << p.to_string() << " n=" << n;
          if (best < 0 || Big(n) + f < best) {
            best = Big(n) + f;
            best_n = n;
          }
          num *= vt - 1;
          den *= vt;
        }
        const BoundReport r = two_stage_bound(p);
        EXPECT_EQ(Big(r.value), best) << p.to_string();
        EXPECT_EQ(*r.stage1_rows, best_n) << p.to_string();
      }
    }
  }
}

TEST(TwoStage, ObjectiveDominatesBothTerms) {
  const CAParams p(3, 10, 3);
  for (std::uint64_t n = 0; n < 400; n += 7) {
    const BigInt f = two_stage_objective(p, n);
    EXPECT_GE(f, BigInt(n));
    EXPECT_GE(f, expected_uncovered_floor(p, n));
  }
}

TEST(TwoStage, AtMostCeilingOfAnalyticBound) {
  for (const auto& [t, k, v] : small_grid()) {
    const BoundReport r = two_stage_bound(CAParams(t, k, v));
    EXPECT_LE(static_cast<double>(r.value), std::ceil(r.notes.at("analytic_bound")) + 1e-9);
  }
  const BoundReport r = two_stage_bound(CAParams(6, 54, 3));
  EXPECT_LE(static_cast<double>(r.value), std::ceil(r.notes.at("analytic_bound")));
}

// ---------------------------------------------------------------- GSS

TEST(Gss, MatchesInequalityOracle) {
  for (const auto& [t, k, v] : small_grid()) {
    const CAParams p(t, k, v);
    const Big vt = oracle::power(v, t);
    const Big dep = Big(t) * oracle::choose(k, t - 1);
    EXPECT_EQ(gss_lll_bound(p).value, lll_oracle(vt, 1, vt, dep, false)) << p.to_string();
    BoundOptions improved;
    improved.dependence = DependenceEstimate::improved;
    const Big dep2 = Big(t) * oracle::choose(k - 1, t - 1) + 1;
    EXPECT_EQ(gss_lll_bound(p, improved).value, lll_oracle(vt, 1, vt, dep2, false)) << p.to_string();
  }
}

TEST(Gss, ReportsDependence) {
  const CAParams p(4, 12, 3);
  EXPECT_EQ(gss_lll_bound(p).notes.at("d_plus_1"), 4.0 * 220);
  BoundOptions improved;
  improved.dependence = DependenceEstimate::improved;
  EXPECT_EQ(gss_lll_bound(p, improved).notes.at("d"), 4.0 * 165);
  EXPECT_NE(gss_lll_bound(p).inequality.find("t*C(k,t-1)"), std::string::npos);
}

TEST(Gss, LogKLimitAt6_3) {
  const double rate = std::log(729.0 / 728.0);
  const double target = 5.0 / rate;
  // N = ceil((1 + log(v^t) + log(t C(k,5))) / rate), evaluated in doubles
  auto approx = [&](double k) {
    const double log_choose = std::lgamma(k + 1) - std::lgamma(6.0) - std::lgamma(k - 4);
    return (1 + 6 * std::log(3.0) + std::log(6.0) + log_choose) / rate;
  };
  for (unsigned k : {1'000'000u, 1'000'000'000u}) {
    const double n = static_cast<double>(gss_lll_bound(CAParams(6, k, 3)).value);
    EXPECT_NEAR(n, approx(k), 2.0) << k;
  }
  // the o(1) term shrinks like 1 / log k
  const double r6 = gss_lll_bound(CAParams(6, 1'000'000, 3)).value / std::log(1e6) / target;
  const double r9 = gss_lll_bound(CAParams(6, 1'000'000'000, 3)).value / std::log(1e9) / target;
  EXPECT_GT(r6, r9);
  EXPECT_GT(r9, 1.0);
  EXPECT_NEAR(asymptotic_coefficient(BoundMethod::gss_lll, 6, 3), target, 1e-6 * target);
}

// ------------------------------------------------------------- cyclic

TEST(Cyclic, SmallExample) {
  const BoundReport r = cyclic_lll_bound(CAParams(2, 4, 2));
  EXPECT_EQ(*r.stage1_rows, 6u);
  EXPECT_EQ(r.value, 12u);
  EXPECT_EQ(r.notes.at("orbit_count"), 2.0);
  EXPECT_EQ(r.notes.at("orbit_length"), 2.0);
}

TEST(Cyclic, MatchesInequalityOracle) {
  for (const auto& [t, k, v] : small_grid()) {
    const CAParams p(t, k, v);
    const Big w = oracle::power(v, t - 1);
    const Big dep = Big(t) * oracle::choose(k, t - 1);
    const BoundReport r = cyclic_lll_bound(p);
    EXPECT_EQ(*r.stage1_rows, lll_oracle(w, 1, w, dep, true)) << p.to_string();
    EXPECT_EQ(r.value, v * *r.stage1_rows);
    EXPECT_EQ(Big(static_cast<std::uint64_t>(r.notes.at("orbit_count"))) * v, oracle::power(v, t));
  }
}

TEST(Cyclic, CoefficientBeatsGss) {
  for (unsigned t = 2; t <= 6; ++t) {
    for (unsigned v = 2; v <= 7; ++v) {
      EXPECT_LT(asymptotic_coefficient(BoundMethod::cyclic_lll, t, v), asymptotic_coefficient(BoundMethod::gss_lll, t, v))
          << t << ' ' << v;
    }
  }
}

TEST(Cyclic, ImprovedDependenceNeverHurts) {
  BoundOptions improved;
  improved.dependence = DependenceEstimate::improved;
  for (const auto& [t, k, v] : small_grid()) {
    const CAParams p(t, k, v);
    EXPECT_LE(cyclic_lll_bound(p, improved).value, cyclic_lll_bound(p).value);
    const Big dep = Big(t) * oracle::choose(k - 1, t - 1) - oracle::choose(k - t, t - 1) + 1;
    EXPECT_EQ(cyclic_lll_bound(p, improved).notes.at("d_plus_1"), dep.convert_to<double>());
  }
}

// ---------------------------------------------------------- Frobenius

TEST(Frobenius, OrbitBookkeepingV3T2) {
  const BoundReport r = frobenius_lll_bound(CAParams(2, 4, 3));
  EXPECT_EQ(r.notes.at("full_orbit_count"), 1.0);
  EXPECT_EQ(r.notes.at("full_orbit_length"), 6.0);
  EXPECT_EQ(r.notes.at("short_orbit_rows"), 3.0);
  EXPECT_EQ(1 * 6 + 3, 9);
  EXPECT_EQ(r.value, 6 * *r.stage1_rows + 3);
}

TEST(Frobenius, RejectsNonPrimePower) {
  EXPECT_EQ(kind_of([] { frobenius_lll_bound(CAParams(2, 4, 6)); }), ErrorKind::unsupported_parameter);
  try {
    frobenius_lll_bound(CAParams(2, 4, 6));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("frobenius requires prime-power v"), std::string::npos);
  }
}

TEST(Frobenius, MatchesInequalityOracle) {
  for (const auto& [t, k, v] : small_grid()) {
    if (!is_pp(v)) continue;
    const CAParams p(t, k, v);
    const Big w = oracle::power(v, t - 1);
    const Big dep = Big(t) * oracle::choose(k, t - 1);
    const BoundReport r = frobenius_lll_bound(p);
    EXPECT_EQ(*r.stage1_rows, lll_oracle((w - 1) / (v - 1), v - 1, w, dep, true)) << p.to_string();
    EXPECT_EQ(r.value, std::uint64_t{v} * (v - 1) * *r.stage1_rows + v);
  }
}

TEST(Frobenius, CoefficientBeatsCyclic) {
  for (unsigned t = 2; t <= 6; ++t) {
    for (unsigned v : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      const double frob = asymptotic_coefficient(BoundMethod::frobenius_lll, t, v);
      const double cyc = asymptotic_coefficient(BoundMethod::cyclic_lll, t, v);
      if (v == 2) {
        EXPECT_NEAR(frob, cyc, 1e-9 * cyc);  // the Frobenius group of order 2 is the cyclic group
      } else {
        EXPECT_LT(frob, cyc) << t << ' ' << v;
      }
      if (t == 2) continue;  // x = (v-1)/v is too large for the expansion
      const double taylor = std::pow(v, t) * (t - 1) / (1 + (v - 1) / (2.0 * std::pow(v, t - 1)));
      EXPECT_NEAR(frob / taylor, 1.0, 0.05) << t << ' ' << v;
    }
  }
}

TEST(Coefficients, Ordering6_3) {
  const double frob = asymptotic_coefficient(BoundMethod::frobenius_lll, 6, 3);
  const double cyc = asymptotic_coefficient(BoundMethod::cyclic_lll, 6, 3);
  const double gss = asymptotic_coefficient(BoundMethod::gss_lll, 6, 3);
  const double slj = asymptotic_coefficient(BoundMethod::slj, 6, 3);
  EXPECT_LT(frob, cyc);
  EXPECT_LT(cyc, gss);
  EXPECT_LT(gss, slj);
  EXPECT_NEAR(slj / gss, 6.0 / 5.0, 1e-12);
  EXPECT_NEAR(slj, 6 / std::log(729.0 / 728.0), 1e-6);
}

TEST(Coefficients, SljOverGssIsTOverTMinusOne) {
  for (unsigned t = 2; t <= 8; ++t) {
    for (unsigned v = 2; v <= 6; ++v) {
      EXPECT_NEAR(asymptotic_coefficient(BoundMethod::slj, t, v) / asymptotic_coefficient(BoundMethod::gss_lll, t, v),
                  static_cast<double>(t) / (t - 1), 1e-12);
    }
  }
}

TEST(Coefficients, UnsupportedMethod) {
  EXPECT_EQ(kind_of([] { asymptotic_coefficient(BoundMethod::two_stage, 3, 3); }), ErrorKind::unsupported_parameter);
  EXPECT_EQ(kind_of([] { asymptotic_coefficient(BoundMethod::frobenius_lll, 3, 6); }),
            ErrorKind::unsupported_parameter);
}

// ---------------------------------------------------------------- PGL

TEST(Pgl, FullOrbitCount) {
  EXPECT_EQ(pgl_full_orbit_count(3, 5), 1);
  EXPECT_EQ(pgl_full_orbit_count(2, 5), 0);
  // r = (v^(t-1) - (v-1)(2^(t-1)-1) - 1) / ((v-1)(v-2)) evaluated directly
  for (unsigned v : {3u, 4u, 5u, 6u, 8u, 9u, 10u}) {
    for (unsigned t = 2; t <= 6; ++t) {
      const Big num = oracle::power(v, t - 1) - Big(v - 1) * (oracle::power(2, t - 1) - 1) - 1;
      EXPECT_EQ(pgl_full_orbit_count(t, v), num / ((v - 1) * (v - 2)));
      EXPECT_EQ(num % ((v - 1) * (v - 2)), 0);
    }
  }
}

TEST(Pgl, OrbitSizeAccounting) {
  // v + v(v-1) * (2^(t-1) - 1) + v(v-1)(v-2) r = v^t
  for (unsigned v : {3u, 4u, 5u, 6u, 8u}) {
    for (unsigned t = 2; t <= 5; ++t) {
      const BigInt r = pgl_full_orbit_count(t, v);
      EXPECT_EQ(BigInt(v) + BigInt(v) * (v - 1) * (ipow(2, t - 1) - 1) + BigInt(v) * (v - 1) * (v - 2) * r,
                ipow(v, t));
    }
  }
}

TEST(Pgl, ValueIsSumOfParts) {
  const CAParams p(3, 10, 5);
  const BoundReport r = pgl_lll_bound(p);
  const std::uint64_t binary = cyclic_lll_bound(CAParams(3, 10, 2)).value;
  EXPECT_EQ(r.value, 60 * *r.stage1_rows + 5 + 10 * binary);
  EXPECT_EQ(r.notes.at("r"), 1.0);
  EXPECT_EQ(r.notes.at("pair_part"), 10.0 * binary);
  EXPECT_EQ(r.notes.at("full_orbit_part"), 60.0 * *r.stage1_rows + 5);
}

TEST(Pgl, MatchesInequalityOracle) {
  for (const auto& [t, k, v] : small_grid()) {
    if (v < 3 || !is_pp(v - 1)) continue;
    const CAParams p(t, k, v);
    const Big r = pgl_full_orbit_count(t, v);
    const BoundReport report = pgl_lll_bound(p);
    if (r == 0) {
      EXPECT_EQ(*report.stage1_rows, 0u);
      continue;
    }
    const Big w = oracle::power(v, t - 1);
    const Big dep = Big(t) * oracle::choose(k, t - 1);
    EXPECT_EQ(*report.stage1_rows, lll_oracle(r, Big(v - 1) * (v - 2), w, dep, true)) << p.to_string();
  }
}

TEST(Pgl, RejectsWhenVMinusOneIsNotAPrimePower) {
  EXPECT_EQ(kind_of([] { pgl_lll_bound(CAParams(3, 5, 7)); }), ErrorKind::unsupported_parameter);
  EXPECT_EQ(kind_of([] { pgl_lll_bound(CAParams(3, 5, 2)); }), ErrorKind::unsupported_parameter);
  EXPECT_NO_THROW(pgl_lll_bound(CAParams(3, 5, 6)));
}

TEST(Pgl, CoefficientIsSumOfTwoTerms) {
  for (unsigned v : {3u, 4u, 5u, 6u, 8u}) {
    for (unsigned t = 2; t <= 6; ++t) {
      const double w = std::pow(v, t - 1);
      // no tuple of length 2 has three distinct symbols, so there is no full part
      const double full = t == 2 ? 0 : v * (v - 1.0) * (v - 2.0) * (t - 1) / -std::log1p(-(v - 1.0) * (v - 2.0) / w);
      const double pairs = v * (v - 1.0) / 2 * asymptotic_coefficient(BoundMethod::cyclic_lll, t, 2);
      EXPECT_NEAR(asymptotic_coefficient(BoundMethod::pgl_lll, t, v), full + pairs, 1e-9 * (full + pairs));
    }
  }
}

TEST(Pgl, FrobeniusTighterAtStrengthFiveUpTo29) {
  for (unsigned v = 3; v <= 29; ++v) {
    if (!is_pp(v) || !is_pp(v - 1)) continue;
    EXPECT_LT(asymptotic_coefficient(BoundMethod::frobenius_lll, 5, v), asymptotic_coefficient(BoundMethod::pgl_lll, 5, v))
        << v;
  }
}

// --------------------------------------------------- conditional LLL

TEST(ConditionalLll, FirstStageAndLeftoverMatchOracle) {
  for (const Triple& g : {Triple{2, 8, 3}, Triple{3, 12, 2}, Triple{4, 10, 3}, Triple{6, 54, 3}}) {
    const CAParams p(g.t, g.k, g.v);
    const BoundReport r = conditional_lll_two_stage_bound(p, SecondStage::one_row_each);
    const Big vt = oracle::power(g.v, g.t);
    const std::uint64_t n = lll_oracle(1, 1, vt, Big(g.t) * oracle::choose(g.k, g.t - 1), false);
    EXPECT_EQ(*r.stage1_rows, n);
    const Float leftover = Float(oracle::choose(g.k, g.t) * (vt - 1)) * oracle::e() *
                           boost::multiprecision::pow(1 - 1 / Float(vt), static_cast<int>(n));
    EXPECT_EQ(Big(r.value), Big(n) + Big(boost::multiprecision::floor(leftover))) << p.to_string();
  }
}

TEST(ConditionalLll, BeatsPlainLllBelowCrossoverNear200) {
  std::optional<unsigned> crossover;
  for (unsigned k = 10; k <= 1000; ++k) {
    const CAParams p(6, k, 3);
    const bool beats = conditional_lll_two_stage_bound(p, SecondStage::one_row_each).value < gss_lll_bound(p).value;
    if (!beats) {
      crossover = k;
      break;
    }
  }
  ASSERT_TRUE(crossover.has_value());
  EXPECT_GE(*crossover, 100u);
  EXPECT_LE(*crossover, 400u);
}

TEST(ConditionalLll, ClosedFormLeftoverIsLinearInK) {
  BoundOptions closed;
  closed.leftover = LeftoverForm::closed_form;
  for (unsigned k : {50u, 100u, 200u}) {
    const double a = conditional_lll_two_stage_bound(CAParams(6, k, 3), SecondStage::one_row_each, closed)
                         .notes.at("leftover_closed_form");
    const double b = conditional_lll_two_stage_bound(CAParams(6, 2 * k, 3), SecondStage::one_row_each, closed)
                         .notes.at("leftover_closed_form");
    EXPECT_NEAR(b, 2 * a, 1e-9 * b);
    const double expected = k * std::exp(6.0) * 728 / 36 * std::pow(5.0 / 6.0, 5);
    EXPECT_NEAR(a, expected, 1e-9 * expected);
  }
}

TEST(ConditionalLll, DensitySecondStageNeverWorse) {
  for (unsigned k = 50; k <= 1000; k += 50) {
    const CAParams p(6, k, 3);
    EXPECT_LE(conditional_lll_two_stage_bound(p, SecondStage::discrete_slj).value,
              conditional_lll_two_stage_bound(p, SecondStage::one_row_each).value)
        << k;
  }
}

// ------------------------------------------------------------- Katona

TEST(Katona, FormulaValues) {
  EXPECT_EQ(katona_kleitman_exact(4), 5u);
  EXPECT_EQ(katona_kleitman_exact(10), 6u);
  EXPECT_EQ(katona_kleitman_exact(11), 7u);
  EXPECT_EQ(katona_kleitman_exact(2), 4u);
}

TEST(Katona, K2MatchesBruteForceOverAllArrays) {
  // Smallest N <= 5 for which some N x 2 binary array covers all four pairs.
  std::optional<unsigned> smallest;
  for (unsigned n = 1; n <= 5 && !smallest; ++n) {
    for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
      unsigned seen = 0;
      for (unsigned r = 0; r < n; ++r) seen |= 1u << ((mask >> (2 * r)) & 3u);
      if (seen == 15u) {
        smallest = n;
        break;
      }
    }
  }
  ASSERT_TRUE(smallest.has_value());
  EXPECT_EQ(katona_kleitman_exact(2), *smallest);
}

// ------------------------------------------------------- cross-cutting

TEST(Bounds, AtLeastTuplesAndKatona) {
  for (const auto& [t, k, v] : small_grid()) {
    const CAParams p(t, k, v);
    for (BoundMethod m : all_bound_methods()) {
      if (m == BoundMethod::katona && !(t == 2 && v == 2)) continue;
      if (m == BoundMethod::frobenius_lll && !is_pp(v)) continue;
      if (m == BoundMethod::pgl_lll && (v < 3 || !is_pp(v - 1))) continue;
      const BoundReport r = compute_bound(m, p);
      EXPECT_GE(Big(r.value), oracle::power(v, t)) << to_string(m) << ' ' << p.to_string();
      if (r.stage1_rows) {
        EXPECT_LE(*r.stage1_rows, r.value);
      }
      if (t == 2 && v == 2) {
        EXPECT_GE(r.value, katona_kleitman_exact(k)) << to_string(m);
      }
    }
  }
}

TEST(Bounds, MonotoneInK) {
  for (unsigned t = 2; t <= 4; ++t) {
    for (unsigned v : {2u, 3u, 4u, 5u}) {
      for (BoundMethod m : {BoundMethod::slj, BoundMethod::discrete_slj, BoundMethod::two_stage, BoundMethod::gss_lll,
                            BoundMethod::cyclic_lll, BoundMethod::frobenius_lll, BoundMethod::pgl_lll}) {
        if (m == BoundMethod::pgl_lll && (v < 3 || !is_pp(v - 1))) continue;
        std::uint64_t previous = 0;
        for (unsigned k = t; k <= 30; ++k) {
          const std::uint64_t value = compute_bound(m, CAParams(t, k, v)).value;
          EXPECT_GE(value, previous) << to_string(m) << " t=" << t << " v=" << v << " k=" << k;
          previous = value;
        }
      }
    }
  }
}

TEST(Bounds, MonotoneInV) {
  for (unsigned t = 2; t <= 4; ++t) {
    for (unsigned k : {t, t + 3, 15u}) {
      for (BoundMethod m : {BoundMethod::slj, BoundMethod::discrete_slj, BoundMethod::two_stage, BoundMethod::gss_lll,
                            BoundMethod::cyclic_lll}) {
        std::uint64_t previous = 0;
        for (unsigned v = 2; v <= 9; ++v) {
          const std::uint64_t value = compute_bound(m, CAParams(t, k, v)).value;
          EXPECT_GE(value, previous) << to_string(m) << " t=" << t << " k=" << k << " v=" << v;
          previous = value;
        }
      }
      std::uint64_t previous = 0;
      for (unsigned v : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const std::uint64_t value = frobenius_lll_bound(CAParams(t, k, v)).value;
        EXPECT_GE(value, previous);
        previous = value;
      }
    }
  }
}

TEST(Bounds, OrderingAtStrengthSixAlphabetThree) {
  // Measured order of the three one-pass bounds: the discrete recurrence is
  // the tightest, the two-stage total sits between it and SLJ.
  for (unsigned k : {10u, 20u, 54u, 100u, 300u, 1000u}) {
    const CAParams p(6, k, 3);
    const auto dslj = discrete_slj_value(p).value;
    const auto two = two_stage_bound(p).value;
    const auto slj = slj_bound(p).value;
    EXPECT_LT(dslj, two) << k;
    EXPECT_LT(two, slj) << k;
  }
}

TEST(Bounds, MethodNames) {
  for (BoundMethod m : all_bound_methods()) EXPECT_EQ(parse_bound_method(to_string(m)), m);
  EXPECT_EQ(parse_bound_method("gss"), BoundMethod::gss_lll);
  EXPECT_EQ(parse_bound_method("frobenius"), BoundMethod::frobenius_lll);
  EXPECT_EQ(parse_bound_method("dslj"), BoundMethod::discrete_slj);
  EXPECT_FALSE(parse_bound_method("nope").has_value());
  EXPECT_EQ(kind_of([] { compute_bound(BoundMethod::katona, CAParams(3, 5, 2)); }), ErrorKind::unsupported_parameter);
  EXPECT_EQ(compute_bound(BoundMethod::katona, CAParams(2, 10, 2)).value, 6u);
}
