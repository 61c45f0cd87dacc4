#pragma once

#include "accretive/linalg.hpp"

namespace accretive {

/// lambda_min(X - Y) / max(1, ||X|| + ||Y||). Non-negative iff X >= Y in the
/// Loewner order (up to roundoff).
double loewner_margin(const HermitianMatrix& x, const HermitianMatrix& y);

/// Unnormalized lambda_min(X - Y).
double loewner_gap(const HermitianMatrix& x, const HermitianMatrix& y);

/// Operator norm of a Hermitian matrix (largest |eigenvalue|).
double hermitian_norm(const HermitianMatrix& m);

}  // namespace accretive
