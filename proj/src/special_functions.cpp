#include <cmath>
#include <string>

#include "crenrich/errors.hpp"
#include "crenrich/quadrature.hpp"

namespace crenrich {

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("ln_gamma requires a finite x > 0, got " + std::to_string(x));
  }
  return std::lgamma(x);
}

double beta(double z1, double z2) {
  if (!(z1 > 0.0) || !(z2 > 0.0)) {
    throw DomainError("beta requires positive arguments, got (" + std::to_string(z1) + ", " +
                      std::to_string(z2) + ")");
  }
  return std::exp(ln_gamma(z1) + ln_gamma(z2) - ln_gamma(z1 + z2));
}

}  // namespace crenrich
