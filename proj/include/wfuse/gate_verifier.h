#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "wfuse/core_model.h"
#include "wfuse/rational.h"

namespace wfuse {

using Amplitude = std::complex<double>;
// Basis label: one 'H' or 'V' per photon.
using AmplitudeMap = std::map<std::string, Amplitude>;

inline constexpr double kAmplitudeTolerance = 1e-12;

// Normalized pure state over polarization labels of a fixed photon count.
// Zero amplitudes are never stored.
class SparseState {
 public:
  // Requires equal-length H/V labels and unit norm within kAmplitudeTolerance.
  static SparseState from_amplitudes(AmplitudeMap amplitudes);
  // Rescales to unit norm; throws if the map has zero norm.
  static SparseState normalized(AmplitudeMap amplitudes);

  std::size_t photons() const { return photons_; }
  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  Amplitude amplitude(const std::string& label) const;
  double norm_squared() const;

 private:
  SparseState(AmplitudeMap amplitudes, std::size_t photons)
      : amplitudes_(std::move(amplitudes)), photons_(photons) {}

  AmplitudeMap amplitudes_;
  std::size_t photons_ = 0;
};

// |W_N> = sum of the N labels with exactly one V, amplitude 1/sqrt(N).
SparseState make_w_state(std::uint32_t photons);
// Same, but N = 1 is allowed and gives the single-photon state |V>.
AmplitudeMap w_state_amplitudes(std::uint32_t photons);
SparseState product_state(const std::string& label);

// |<x|y>|^2
double fidelity(const SparseState& x, const SparseState& y);

// Detector events, keyed in GateReport::detector_breakdown.
inline const std::string kPatternDD = "coincidence_D_D";
inline const std::string kPatternDDbar = "coincidence_D_Dbar";
inline const std::string kPatternDbarD = "coincidence_Dbar_D";
inline const std::string kPatternDbarDbar = "coincidence_Dbar_Dbar";
inline const std::string kPatternD1Only = "D1_only";
inline const std::string kPatternD2Only = "D2_only";

struct GateReport {
  double p_success = 0.0;
  double p_recycle = 0.0;
  double p_failure = 0.0;
  // Remaining photons after a (D,D) coincidence. Survivors of A (in order,
  // minus the sent photon) come first, then survivors of B.
  std::optional<SparseState> post_success_state;
  std::optional<std::pair<SparseState, SparseState>> post_recycle_states;
  std::optional<SparseState> post_failure_state;
  std::map<std::string, double> detector_breakdown;
  // Per coincidence pattern: the heralded state as measured, and after the
  // pi-phase correction (Z on each surviving photon of B) that mixed (D,Dbar)
  // patterns need. Same-result patterns are left untouched.
  std::map<std::string, SparseState> coincidence_states;
  std::map<std::string, SparseState> corrected_states;
};

// Sends photon qubit_a of `a` into mode 1 and photon qubit_b of `b` into
// mode 2 of the fusion gate. HWP(pi/2) on mode 2 then the PBS route
//   HH -> both photons in mode 4 (D2 only, recyclable),
//   VV -> both photons in mode 3 (D1 only, failure),
//   HV -> H in modes 3 and 4,  VH -> V in modes 3 and 4 (coincidence),
// and coincidences are read out in the D = (H+V)/sqrt2, Dbar = (H-V)/sqrt2
// basis.
GateReport fuse(const SparseState& a, const SparseState& b, std::size_t qubit_a,
                std::size_t qubit_b);

struct ProbabilityCheck {
  std::uint32_t n_photons = 0;
  std::uint32_t m_photons = 0;
  OutcomeDistribution analytic;  // (N+M-2)/NM, (N-1)(M-1)/NM, 1/NM
  double simulated_success = 0.0;
  double simulated_recycle = 0.0;
  double simulated_failure = 0.0;
  double max_abs_deviation = 0.0;
  double coincidence_split_deviation = 0.0;  // max |p(pattern) - (N+M-2)/4NM|
  double success_fidelity = 0.0;             // against W_{N+M-2}
  double recycle_fidelity = 0.0;             // product against W_{N-1}, W_{M-1}
  double failure_fidelity = 0.0;             // against the all-H product
  GateReport report;
};

// Fuses fresh W_N and W_M (last photon of each) and compares with the closed
// forms.
ProbabilityCheck verify_probabilities(std::uint32_t n_photons, std::uint32_t m_photons);

// Compares sqrt(k)|W_k> with sqrt(i)|W_i>|(k-i)_H> + sqrt(k-i)|i_H>|W_{k-i}>
// amplitude by amplitude; |W_1> is the single photon |V>.
bool check_decomposition(std::uint32_t k, std::uint32_t i);

}  // namespace wfuse
