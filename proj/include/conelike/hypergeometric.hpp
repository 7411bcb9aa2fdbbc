#pragma once

#include "conelike/numerics.hpp"

namespace conelike {

// Principal argument except that negative reals get -pi: the continuous limit for
// arguments reached from below the real axis. Powers of 1-z and -z with z in the
// closed upper half-plane land in the closed lower half-plane, so their branches
// must be continued from below.
double arg_from_below(complex w);
complex pow_from_below(complex w, double p);

// Principal argument except that negative reals get +pi: the limit from above.
// Factors (w - x) with w in the closed upper half-plane continue from above.
double arg_from_above(complex w);
complex pow_from_above(complex w, double p);

// Gauss hypergeometric 2F1(a,b;c;z) for real parameters and z in the closed upper
// half-plane, on the branch continuous from above across the cut [1,inf).
// Assumes c is not a nonpositive integer. Away from the series zones the evaluator
// needs either nondegenerate connection constants (c-a-b, b-a nonintegral) or a
// valid Euler integral (c > b > 0); at least one holds for every call site here.
complex hyp2f1(double a, double b, double c, complex z);

namespace detail {
// Zone-forced evaluation for cross-validation: 0 series, 1 connection at 1,
// 2 connection at infinity, 3 Euler integral.
complex hyp2f1_forced(double a, double b, double c, complex z, int zone);
}  // namespace detail

}  // namespace conelike
