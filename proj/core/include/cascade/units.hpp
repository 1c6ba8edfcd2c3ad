#pragma once

#include <cmath>

namespace cascade {

/// Decibels to a linear power ratio, 10^(db/10).
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Linear power ratio to decibels, 10*log10(ratio).
///
/// Throws std::domain_error for a ratio that is not strictly positive.
double linear_to_db(double ratio);

/// A dimensionless noise factor F = SNR_in / SNR_out.
///
/// The linear value is the primary quantity; the noise figure in dB is
/// derived on demand. When a factor is built from its excess over unity
/// (F - 1), that excess is kept as computed so compositions that need
/// F - 1 do not lose it to cancellation near F = 1.
class NoiseFactor {
 public:
  constexpr NoiseFactor() = default;

  static constexpr NoiseFactor from_value(double value) {
    return NoiseFactor(value, value - 1.0);
  }
  static constexpr NoiseFactor from_excess(double excess) {
    return NoiseFactor(1.0 + excess, excess);
  }

  constexpr double value() const { return value_; }
  constexpr double excess() const { return excess_; }
  double figure_db() const { return linear_to_db(value_); }

 private:
  constexpr NoiseFactor(double value, double excess) : value_(value), excess_(excess) {}

  double value_ = 1.0;
  double excess_ = 0.0;
};

}  // namespace cascade
