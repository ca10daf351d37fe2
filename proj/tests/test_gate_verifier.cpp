#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "wfuse/gate_verifier.h"

using namespace wfuse;

namespace {

constexpr double kTol = 1e-12;

// W_{n+m-2} with a sign flip on every term whose V sits in the last
// `b_survivors` photons.
SparseState phase_flipped_w(std::uint32_t photons, std::uint32_t b_survivors) {
  AmplitudeMap amps = w_state_amplitudes(photons);
  for (auto& [label, amp] : amps) {
    if (label.find('V') >= photons - b_survivors) {
      amp = -amp;
    }
  }
  return SparseState::normalized(std::move(amps));
}

}  // namespace

TEST_CASE("make_w_state") {
  const SparseState w2 = make_w_state(2);
  CHECK(w2.photons() == 2);
  CHECK(w2.amplitudes().size() == 2);
  CHECK(w2.amplitude("HV").real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(w2.amplitude("VH").real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(w2.amplitude("HH") == Amplitude(0.0, 0.0));

  const SparseState w3 = make_w_state(3);
  for (const char* label : {"VHH", "HVH", "HHV"}) {
    CHECK(std::abs(w3.amplitude(label) - 1 / std::sqrt(3.0)) < kTol);
  }
  CHECK(std::abs(make_w_state(10).norm_squared() - 1.0) < kTol);
  CHECK_THROWS_AS(make_w_state(1), std::invalid_argument);
}

TEST_CASE("SparseState validation") {
  CHECK_THROWS_AS(SparseState::from_amplitudes({{"H", 1.0}, {"V", 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SparseState::from_amplitudes({{"H", 0.6}, {"HV", 0.8}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SparseState::normalized({{"HX", 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SparseState::normalized({{"HH", 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SparseState::from_amplitudes({}), std::invalid_argument);
  const SparseState s = SparseState::from_amplitudes({{"HV", 1.0}, {"VV", 0.0}});
  CHECK(s.amplitudes().size() == 1);
}

TEST_CASE("fidelity") {
  CHECK(std::abs(fidelity(make_w_state(3), make_w_state(3)) - 1.0) < kTol);
  CHECK(fidelity(product_state("HHH"), make_w_state(3)) == 0.0);
  CHECK(std::abs(fidelity(make_w_state(2), product_state("HV")) - 0.5) < kTol);
  CHECK_THROWS_AS(fidelity(make_w_state(2), make_w_state(3)), std::invalid_argument);
}

TEST_CASE("W3 x W3") {
  const GateReport r = fuse(make_w_state(3), make_w_state(3), 2, 2);
  CHECK(std::abs(r.p_success - 4.0 / 9.0) < kTol);
  CHECK(std::abs(r.p_failure - 1.0 / 9.0) < kTol);
  CHECK(std::abs(r.p_recycle - 4.0 / 9.0) < kTol);
  REQUIRE(r.post_success_state);
  CHECK(std::abs(fidelity(*r.post_success_state, make_w_state(4)) - 1.0) < kTol);
  REQUIRE(r.post_failure_state);
  CHECK(std::abs(fidelity(*r.post_failure_state, product_state("HHHH")) - 1.0) < kTol);
}

TEST_CASE("W4 x W5 recycles into W3 and W4") {
  const GateReport r = fuse(make_w_state(4), make_w_state(5), 3, 4);
  CHECK(std::abs(r.p_recycle - 0.6) < kTol);
  REQUIRE(r.post_recycle_states);
  CHECK(std::abs(fidelity(r.post_recycle_states->first, make_w_state(3)) - 1.0) < kTol);
  CHECK(std::abs(fidelity(r.post_recycle_states->second, make_w_state(4)) - 1.0) < kTol);
}

TEST_CASE("a Bell pair does not grow the other state") {
  for (std::uint32_t n = 2; n <= 9; ++n) {
    const GateReport r = fuse(make_w_state(2), make_w_state(n), 1, n - 1);
    REQUIRE(r.post_success_state);
    CHECK(std::abs(fidelity(*r.post_success_state, make_w_state(n)) - 1.0) < kTol);
    CHECK(std::abs(r.p_success - 0.5) < kTol);
  }
}

TEST_CASE("amplitude simulation matches the closed forms on the grid") {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    for (std::uint32_t m = 2; m <= 8; ++m) {
      const ProbabilityCheck c = verify_probabilities(n, m);
      const double nm = n * m;
      REQUIRE(c.max_abs_deviation < kTol);
      REQUIRE(std::abs(c.simulated_success - (n + m - 2) / nm) < kTol);
      REQUIRE(std::abs(c.simulated_recycle - (n - 1) * (m - 1) / nm) < kTol);
      REQUIRE(std::abs(c.simulated_failure - 1 / nm) < kTol);
      REQUIRE(c.coincidence_split_deviation < kTol);
      REQUIRE(c.success_fidelity >= 1 - kTol);
      REQUIRE(c.recycle_fidelity >= 1 - kTol);
      REQUIRE(c.failure_fidelity >= 1 - kTol);

      // Against the lower-case model.
      const OutcomeDistribution d = outcome_distribution(WSize(n - 2), WSize(m - 2));
      REQUIRE(d == c.analytic);
      REQUIRE(std::abs(to_double(d.p_success) - c.simulated_success) < kTol);

      // Every detector event together carries all the probability.
      double total = 0.0;
      for (const auto& [pattern, p] : c.report.detector_breakdown) {
        total += p;
      }
      REQUIRE(std::abs(total - 1.0) < kTol);

      // Mixed patterns herald W with a relative minus sign until corrected.
      const SparseState target = make_w_state(n + m - 2);
      for (const std::string* key : {&kPatternDDbar, &kPatternDbarD}) {
        const SparseState& raw = c.report.coincidence_states.at(*key);
        REQUIRE(fidelity(raw, phase_flipped_w(n + m - 2, m - 1)) >= 1 - kTol);
        REQUIRE(fidelity(c.report.corrected_states.at(*key), target) >= 1 - kTol);
        if (n >= 3 && m >= 3) {
          REQUIRE(fidelity(raw, target) < 1 - 1e-3);
        }
      }
      for (const std::string* key : {&kPatternDD, &kPatternDbarDbar}) {
        REQUIRE(fidelity(c.report.coincidence_states.at(*key), target) >= 1 - kTol);
      }
    }
  }
}

TEST_CASE("verify_probabilities for two Bell pairs") {
  const ProbabilityCheck c = verify_probabilities(2, 2);
  CHECK(c.analytic.p_failure == ratio(1, 4));
  CHECK(c.analytic.p_recycle == ratio(1, 4));
  CHECK(c.analytic.p_success == ratio(1, 2));
  CHECK(c.max_abs_deviation < kTol);
  CHECK(verify_probabilities(3, 3).max_abs_deviation < kTol);
  CHECK(verify_probabilities(8, 7).max_abs_deviation < kTol);
  CHECK_THROWS_AS(verify_probabilities(1, 3), std::invalid_argument);
}

TEST_CASE("gate acts on any designated photon") {
  const SparseState a = make_w_state(4);
  const SparseState b = make_w_state(3);
  const GateReport r = fuse(a, b, 0, 1);
  CHECK(std::abs(r.p_success - 5.0 / 12.0) < kTol);
  REQUIRE(r.post_success_state);
  CHECK(std::abs(fidelity(*r.post_success_state, make_w_state(5)) - 1.0) < kTol);
}

TEST_CASE("gate input errors") {
  const SparseState a = make_w_state(3);
  CHECK_THROWS_AS(fuse(a, a, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(fuse(a, make_w_state(3), 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(fuse(a, make_w_state(3), 0, 5), std::invalid_argument);
  // Two different photons of one state are allowed.
  CHECK_NOTHROW(fuse(a, a, 0, 1));
}

TEST_CASE("W decomposition identity") {
  CHECK(check_decomposition(4, 2));
  CHECK(check_decomposition(6, 3));
  CHECK(check_decomposition(3, 1));
  for (std::uint32_t k = 2; k <= 10; ++k) {
    for (std::uint32_t i = 1; i < k; ++i) {
      REQUIRE(check_decomposition(k, i));
    }
  }
  CHECK_THROWS_AS(check_decomposition(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_decomposition(4, 4), std::invalid_argument);
}
