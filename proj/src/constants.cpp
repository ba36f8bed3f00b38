#include "maxfock/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace maxfock {

void PhysicalConstants::validate() const {
    for (double v : {hbar, eps0, c}) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw std::invalid_argument("physical constants must be finite and strictly positive");
        }
    }
}

} // namespace maxfock
