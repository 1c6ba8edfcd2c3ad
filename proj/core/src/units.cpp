#include "cascade/units.hpp"

#include <stdexcept>
#include <string>

namespace cascade {

double linear_to_db(double ratio) {
  if (!(ratio > 0.0)) {
    throw std::domain_error("linear_to_db: ratio must be > 0, got " + std::to_string(ratio));
  }
  return 10.0 * std::log10(ratio);
}

}  // namespace cascade
