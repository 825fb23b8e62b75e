#pragma once

namespace fpcutoff {

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
// Continued-fraction evaluation (modified Lentz); relative error ~1e-14.
// Internal support for the closed-form radial CDFs used by the quantile
// transport oracle; not part of the special-function contract surface.
double regularized_incomplete_beta(double a, double b, double x);

}  // namespace fpcutoff
