#pragma once

// Signal/noise propagation through an n-stage cascade and the noise-factor
// formulas built on it. Each formula is computed along its own path so the
// identities between them can be checked against each other.
//
// Stage indices are 1-based throughout: stage x has input node x-1 and
// output node x. All functions validate the network and throw
// ValidationError for invalid input; stage-indexed functions throw
// std::out_of_range for x outside [1, n].

#include <cstddef>
#include <string>
#include <vector>

#include "cascade/network.hpp"
#include "cascade/units.hpp"

namespace cascade {

/// Relative tolerance for identities that are exact in real arithmetic.
inline constexpr double kIdentityTolerance = 1e-12;

/// |a - b| <= rel_tol * max(|a|, |b|). False if either side is NaN.
bool nearly_equal(double a, double b, double rel_tol = kIdentityTolerance);

struct NodeState {
  double signal = 0.0;
  double noise = 0.0;

  double snr() const { return signal / noise; }
};

/// Node 0 is the cascade input; node x is the output of stage x.
struct PropagationTrace {
  std::vector<NodeState> nodes;
};

PropagationTrace propagate(const CascadeNetwork& network);

/// Noise power at the input of stage x, expanded as the amplified source
/// noise plus every earlier stage's added noise amplified by the stages
/// between it and x.
double stage_input_noise(const CascadeNetwork& network, std::size_t x);

/// Classical per-stage factor 1 + N_ext(x) / (N_i * G_x). Refers every stage
/// to the cascade's source noise and ignores internal noise.
NoiseFactor stage_factor_friis(const CascadeNetwork& network, std::size_t x);

/// Stage factor from the stage's own input noise:
/// 1 + (N_int(x) + N_ext(x)) / (N_i(x) * G_x).
NoiseFactor stage_factor_corrected(const CascadeNetwork& network, std::size_t x);

/// Same quantity as stage_factor_corrected, computed from the earlier stages'
/// corrected factors: 1 + (N_int(x) + N_ext(x)) / (N_i * prod G_1..x * prod F_1..x-1).
NoiseFactor stage_factor_corrected_recursive(const CascadeNetwork& network, std::size_t x);

/// 1 + sum_x N_ext(x) / (N_i * prod G_1..x). Internal noise excluded.
NoiseFactor total_base_friis(const CascadeNetwork& network);

/// 1 + sum_x (N_int(x) + N_ext(x)) / (N_i * prod G_1..x).
NoiseFactor total_base_corrected(const CascadeNetwork& network);

/// F_1 + sum_{x>=2} (F_x - 1) / prod G_1..x-1 over the classical stage factors.
NoiseFactor total_friis_composition(const CascadeNetwork& network);

/// Product of the corrected stage factors.
NoiseFactor total_product_composition(const CascadeNetwork& network);

/// SNR_in / SNR_out read off the propagation trace.
NoiseFactor snr_ratio_total(const CascadeNetwork& network);

struct StageReport {
  std::size_t stage = 0;
  double stage_input_noise = 0.0;
  NoiseFactor friis;
  NoiseFactor corrected;
};

struct NoiseTotals {
  NoiseFactor base_friis;           // classical base sum
  NoiseFactor base_corrected;       // base sum with internal noise
  NoiseFactor friis_composition;    // classical stage-factor composition
  NoiseFactor product_composition;  // product of corrected stage factors
  NoiseFactor snr_ratio;            // direct SNR ratio
};

struct NoiseReport {
  std::vector<StageReport> per_stage;
  NoiseTotals totals;
};

NoiseReport build_report(const CascadeNetwork& network);

struct InvariantBreach {
  std::string identity;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Identities every report must satisfy: the corrected product, the
/// corrected base sum and the SNR ratio agree; the classical composition
/// agrees with the classical base sum.
std::vector<InvariantBreach> check_report(const NoiseReport& report,
                                          double rel_tol = kIdentityTolerance);

}  // namespace cascade
