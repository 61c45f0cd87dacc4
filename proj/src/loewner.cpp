#include "accretive/loewner.hpp"

#include <algorithm>
#include <cmath>

namespace accretive {

double hermitian_norm(const HermitianMatrix& m) {
  const RealVector ev = m.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double loewner_gap(const HermitianMatrix& x, const HermitianMatrix& y) { return (x - y).min_eigenvalue(); }

double loewner_margin(const HermitianMatrix& x, const HermitianMatrix& y) {
  return loewner_gap(x, y) / std::max(1.0, hermitian_norm(x) + hermitian_norm(y));
}

}  // namespace accretive
