#include "wfuse/gate_verifier.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wfuse {

namespace {

double norm_squared_of(const AmplitudeMap& amps) {
  double total = 0.0;
  for (const auto& [label, amp] : amps) {
    total += std::norm(amp);
  }
  return total;
}

std::size_t validate_labels(const AmplitudeMap& amps) {
  if (amps.empty()) {
    throw std::invalid_argument("state has no amplitudes");
  }
  const std::size_t photons = amps.begin()->first.size();
  for (const auto& [label, amp] : amps) {
    if (label.size() != photons) {
      throw std::invalid_argument("labels of differing length: " + label);
    }
    if (label.find_first_not_of("HV") != std::string::npos) {
      throw std::invalid_argument("label must use only H and V: " + label);
    }
  }
  return photons;
}

void drop_zeros(AmplitudeMap& amps) {
  std::erase_if(amps, [](const auto& kv) { return kv.second == Amplitude(0.0, 0.0); });
}

AmplitudeMap tensor(const AmplitudeMap& x, const AmplitudeMap& y) {
  AmplitudeMap out;
  for (const auto& [lx, ax] : x) {
    for (const auto& [ly, ay] : y) {
      out[lx + ly] += ax * ay;
    }
  }
  return out;
}

AmplitudeMap scaled(AmplitudeMap x, double factor) {
  for (auto& [label, amp] : x) {
    amp *= factor;
  }
  return x;
}

std::string without(const std::string& label, std::size_t pos) {
  std::string out = label;
  out.erase(pos, 1);
  return out;
}

// Conditional amplitudes of `state` given photon `qubit` has polarization
// `pol`, with that photon removed.
AmplitudeMap project(const SparseState& state, std::size_t qubit, char pol) {
  AmplitudeMap out;
  for (const auto& [label, amp] : state.amplitudes()) {
    if (label[qubit] == pol) {
      out[without(label, qubit)] += amp;
    }
  }
  return out;
}

std::optional<SparseState> normalized_if_nonzero(AmplitudeMap amps) {
  drop_zeros(amps);
  if (amps.empty() || norm_squared_of(amps) == 0.0) {
    return std::nullopt;
  }
  return SparseState::normalized(std::move(amps));
}

}  // namespace

SparseState SparseState::from_amplitudes(AmplitudeMap amplitudes) {
  drop_zeros(amplitudes);
  const std::size_t photons = validate_labels(amplitudes);
  if (std::abs(norm_squared_of(amplitudes) - 1.0) > kAmplitudeTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
  return SparseState(std::move(amplitudes), photons);
}

SparseState SparseState::normalized(AmplitudeMap amplitudes) {
  drop_zeros(amplitudes);
  const std::size_t photons = validate_labels(amplitudes);
  const double norm = std::sqrt(norm_squared_of(amplitudes));
  if (norm == 0.0) {
    throw std::invalid_argument("cannot normalize a zero vector");
  }
  return SparseState(scaled(std::move(amplitudes), 1.0 / norm), photons);
}

Amplitude SparseState::amplitude(const std::string& label) const {
  const auto it = amplitudes_.find(label);
  return it == amplitudes_.end() ? Amplitude(0.0, 0.0) : it->second;
}

double SparseState::norm_squared() const { return norm_squared_of(amplitudes_); }

AmplitudeMap w_state_amplitudes(std::uint32_t photons) {
  if (photons < 1) {
    throw std::invalid_argument("W state needs at least one photon");
  }
  AmplitudeMap amps;
  const double a = 1.0 / std::sqrt(static_cast<double>(photons));
  for (std::uint32_t v = 0; v < photons; ++v) {
    std::string label(photons, 'H');
    label[v] = 'V';
    amps.emplace(std::move(label), a);
  }
  return amps;
}

SparseState make_w_state(std::uint32_t photons) {
  if (photons < 2) {
    throw std::invalid_argument("W state needs at least two photons, got " +
                                std::to_string(photons));
  }
  return SparseState::normalized(w_state_amplitudes(photons));
}

SparseState product_state(const std::string& label) {
  return SparseState::from_amplitudes({{label, 1.0}});
}

double fidelity(const SparseState& x, const SparseState& y) {
  if (x.photons() != y.photons()) {
    throw std::invalid_argument("fidelity of states with different photon counts");
  }
  Amplitude overlap = 0.0;
  for (const auto& [label, ax] : x.amplitudes()) {
    overlap += std::conj(ax) * y.amplitude(label);
  }
  return std::min(1.0, std::norm(overlap));
}

GateReport fuse(const SparseState& a, const SparseState& b, std::size_t qubit_a,
                std::size_t qubit_b) {
  if (&a == &b && qubit_a == qubit_b) {
    throw std::invalid_argument("both gate inputs name the same photon");
  }
  if (qubit_a >= a.photons() || qubit_b >= b.photons()) {
    throw std::invalid_argument("gate input photon index out of range");
  }
  for (const SparseState* s : {&a, &b}) {
    if (std::abs(s->norm_squared() - 1.0) > kAmplitudeTolerance) {
      throw std::invalid_argument("gate input is not normalized");
    }
  }

  const AmplitudeMap a_h = project(a, qubit_a, 'H');
  const AmplitudeMap a_v = project(a, qubit_a, 'V');
  const AmplitudeMap b_h = project(b, qubit_b, 'H');
  const AmplitudeMap b_v = project(b, qubit_b, 'V');
  const std::size_t a_survivors = a.photons() - 1;

  GateReport report;

  // HH: both photons exit in mode 4; the inputs stay separable.
  report.p_recycle = norm_squared_of(a_h) * norm_squared_of(b_h);
  if (auto left = normalized_if_nonzero(a_h), right = normalized_if_nonzero(b_h);
      left && right) {
    report.post_recycle_states.emplace(std::move(*left), std::move(*right));
  }

  // VV: both photons exit in mode 3.
  const AmplitudeMap vv = tensor(a_v, b_v);
  report.p_failure = norm_squared_of(vv);
  report.post_failure_state = normalized_if_nonzero(vv);

  // Coincidences. HV puts H in modes 3 and 4, VH puts V in both; projecting
  // each onto D or Dbar contributes 1/sqrt2, except V onto Dbar which gives
  // -1/sqrt2.
  const AmplitudeMap hv = tensor(a_h, b_v);
  const AmplitudeMap vh = tensor(a_v, b_h);
  const struct {
    const std::string* key;
    double sign;  // product of the two V projections
  } patterns[] = {{&kPatternDD, 1.0},
                  {&kPatternDDbar, -1.0},
                  {&kPatternDbarD, -1.0},
                  {&kPatternDbarDbar, 1.0}};
  for (const auto& pattern : patterns) {
    AmplitudeMap amps = scaled(hv, 0.5);
    for (const auto& [label, amp] : vh) {
      amps[label] += 0.5 * pattern.sign * amp;
    }
    drop_zeros(amps);
    const double p = norm_squared_of(amps);
    report.detector_breakdown[*pattern.key] = p;
    report.p_success += p;
    if (p == 0.0) {
      continue;
    }
    AmplitudeMap corrected = amps;
    if (pattern.sign < 0) {
      for (auto& [label, amp] : corrected) {
        const auto v_in_b = std::count(label.begin() + static_cast<std::ptrdiff_t>(a_survivors),
                                       label.end(), 'V');
        if (v_in_b % 2 == 1) {
          amp = -amp;
        }
      }
    }
    report.coincidence_states.emplace(*pattern.key, SparseState::normalized(std::move(amps)));
    report.corrected_states.emplace(*pattern.key, SparseState::normalized(std::move(corrected)));
  }
  if (const auto it = report.corrected_states.find(kPatternDD);
      it != report.corrected_states.end()) {
    report.post_success_state = it->second;
  }

  report.detector_breakdown[kPatternD1Only] = report.p_failure;
  report.detector_breakdown[kPatternD2Only] = report.p_recycle;
  return report;
}

ProbabilityCheck verify_probabilities(std::uint32_t n_photons, std::uint32_t m_photons) {
  if (n_photons < 2 || m_photons < 2) {
    throw std::invalid_argument("verify_probabilities needs W states of at least 2 photons");
  }
  const SparseState a = make_w_state(n_photons);
  const SparseState b = make_w_state(m_photons);

  ProbabilityCheck check;
  check.n_photons = n_photons;
  check.m_photons = m_photons;
  const std::int64_t n = n_photons;
  const std::int64_t m = m_photons;
  check.analytic = {ratio(n + m - 2, n * m), ratio((n - 1) * (m - 1), n * m), ratio(1, n * m)};

  check.report = fuse(a, b, n_photons - 1, m_photons - 1);
  const GateReport& r = check.report;
  check.simulated_success = r.p_success;
  check.simulated_recycle = r.p_recycle;
  check.simulated_failure = r.p_failure;
  check.max_abs_deviation = std::max({std::abs(r.p_success - to_double(check.analytic.p_success)),
                                      std::abs(r.p_recycle - to_double(check.analytic.p_recycle)),
                                      std::abs(r.p_failure - to_double(check.analytic.p_failure))});

  const double quarter = to_double(check.analytic.p_success) / 4.0;
  for (const std::string* key : {&kPatternDD, &kPatternDDbar, &kPatternDbarD, &kPatternDbarDbar}) {
    check.coincidence_split_deviation =
        std::max(check.coincidence_split_deviation, std::abs(r.detector_breakdown.at(*key) - quarter));
  }

  if (r.post_success_state) {
    check.success_fidelity = fidelity(*r.post_success_state, make_w_state(n_photons + m_photons - 2));
  }
  if (r.post_recycle_states) {
    const auto& [left, right] = *r.post_recycle_states;
    check.recycle_fidelity =
        fidelity(left, SparseState::normalized(w_state_amplitudes(n_photons - 1))) *
        fidelity(right, SparseState::normalized(w_state_amplitudes(m_photons - 1)));
  }
  if (r.post_failure_state) {
    check.failure_fidelity =
        fidelity(*r.post_failure_state, product_state(std::string(n_photons + m_photons - 2, 'H')));
  }
  return check;
}

bool check_decomposition(std::uint32_t k, std::uint32_t i) {
  if (k < 2 || i < 1 || i >= k) {
    throw std::invalid_argument("decomposition needs 1 <= i <= k-1");
  }
  const AmplitudeMap lhs = scaled(w_state_amplitudes(k), std::sqrt(static_cast<double>(k)));

  AmplitudeMap rhs = tensor(scaled(w_state_amplitudes(i), std::sqrt(static_cast<double>(i))),
                            {{std::string(k - i, 'H'), 1.0}});
  for (const auto& [label, amp] :
       tensor({{std::string(i, 'H'), 1.0}},
              scaled(w_state_amplitudes(k - i), std::sqrt(static_cast<double>(k - i))))) {
    rhs[label] += amp;
  }

  auto covered = [](const AmplitudeMap& from, const AmplitudeMap& other) {
    for (const auto& [label, amp] : from) {
      const auto it = other.find(label);
      const Amplitude theirs = it == other.end() ? Amplitude(0.0, 0.0) : it->second;
      if (std::abs(amp - theirs) > kAmplitudeTolerance) {
        return false;
      }
    }
    return true;
  };
  return covered(lhs, rhs) && covered(rhs, lhs);
}

}  // namespace wfuse
