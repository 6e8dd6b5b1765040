#include "weylmech/numeric/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "weylmech/errors.hpp"

namespace weylmech::numeric {

void GridSpec::validate() const {
  if (n < 8 || !std::has_single_bit(n)) throw GridError("grid size n must be a power of two and at least 8");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
    throw GridError("grid bounds must be finite with x_max > x_min");
  if (!std::isfinite(hbar) || !(hbar > 0.0)) throw GridError("hbar must be a positive finite number");
}

double GridSpec::dp() const { return 2.0 * std::numbers::pi * hbar / (static_cast<double>(n) * dx()); }

void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (a == b) return;
  std::ostringstream os;
  os << "grid mismatch: (n=" << a.n << ", [" << a.x_min << ", " << a.x_max << "), hbar=" << a.hbar << ") vs (n=" << b.n
     << ", [" << b.x_min << ", " << b.x_max << "), hbar=" << b.hbar << ")";
  throw GridError(os.str());
}

}  // namespace weylmech::numeric
