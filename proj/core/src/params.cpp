#include "mjb/params.hpp"

#include <stdexcept>
#include <string>

namespace mjb {

void TransformParams::validate() const {
  if (n < 0) throw std::invalid_argument("degree n must be nonnegative");
  if (k < 0 || l < 0) {
    throw std::invalid_argument("constraint orders k and l must be nonnegative");
  }
  if (k + l > n) {
    throw std::invalid_argument("k + l <= n violated (k=" + std::to_string(k) +
                                ", l=" + std::to_string(l) +
                                ", n=" + std::to_string(n) + ")");
  }
  if (!(alpha > -1.0)) throw std::invalid_argument("alpha > -1 violated");
  if (!(beta > -1.0)) throw std::invalid_argument("beta > -1 violated");
}

}  // namespace mjb
