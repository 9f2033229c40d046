#include "damposc/params.hpp"

#include <cmath>
#include <string>

#include "damposc/errors.hpp"

namespace damposc {

void validate(const OscillatorParams& params) {
  const auto require = [](bool ok, const char* what) {
    if (!ok) throw InvalidParameter(what);
  };
  require(std::isfinite(params.mass) && params.mass > 0.0, "mass must be positive");
  require(std::isfinite(params.omega) && params.omega > 0.0, "omega must be positive");
  require(std::isfinite(params.hbar) && params.hbar > 0.0, "hbar must be positive");
  require(std::isfinite(params.lambda) && params.lambda >= 0.0, "lambda must be non-negative");
}

}  // namespace damposc
