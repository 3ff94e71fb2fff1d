#pragma once

namespace plcsnet::stats {

/// ln Gamma(x) for x > 0 (Lanczos, reentrant unlike std::lgamma's signgam).
double log_gamma(double x);

/// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1].
double incomplete_beta(double a, double b, double x);

/// P(|T| >= |t|) for Student's t with df degrees of freedom.
/// Returns 1 at t = 0 and 0 for infinite |t|.
double student_t_two_sided_p(double t, double df);

}  // namespace plcsnet::stats
