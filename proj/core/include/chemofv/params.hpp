#ifndef CHEMOFV_PARAMS_HPP
#define CHEMOFV_PARAMS_HPP

#include "chemofv/field.hpp"

namespace chemofv {

/// Model constants of the indirect-production chemotaxis system
///
///   u_t = eps*Lap(u) - div(u grad v) + r*u - mu*u^theta
///     0 = d1*Lap(v) - beta*v + alpha*w
///     0 = d2*Lap(w) - delta*w + gamma*u
///
/// with zero-flux boundaries. eps = 0 selects the hyperbolic limit system;
/// every other constant is strictly positive and theta exceeds 1.
struct Params {
    double eps = 0.0;
    double r = 1.0;
    double mu = 1.0;
    double theta = 2.0;
    double d1 = 1.0;
    double d2 = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
    double delta = 1.0;
};

/// Returns p unchanged iff every sign/range constraint holds; otherwise throws
/// DomainError naming the first violated constraint.
Params validate_params(const Params& p);

/// max{ mean(u0), (r/mu)^(1/(theta-1)) } -- the scale that bounds the mean of u
/// for all time. Throws DomainError if u0 has a negative cell.
double m1(const Params& p, const Field& u0);

/// Attraction-repulsion variant: u is advected by -chi*grad(z) + xi*grad(w)
/// where z and w are the attracting/repelling signals. Reducible to Params
/// when xi*gamma = chi*alpha and d1*delta != d2*beta.
struct ARParams {
    double chi = 1.0;
    double xi = 1.0;
    double eps = 0.0;
    double r = 1.0;
    double mu = 1.0;
    double theta = 2.0;
    double d1 = 1.0;
    double d2 = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
    double delta = 1.0;
};

/// Checks positivity, the compatibility xi*gamma = chi*alpha (to 1e-12 relative)
/// and the non-degeneracy d1*delta != d2*beta (relative gap > 1e-9).
ARParams validate_ar_params(const ARParams& arp);

/// Collapses the attraction-repulsion system onto the single-signal system:
/// alpha is replaced by alpha_bar = xi*(d1*delta/d2 - beta), the chemotactic
/// coefficient is normalized to 1, all other constants are copied.
/// Throws DomainError if alpha_bar <= 0.
Params ar_reduce(const ARParams& arp);

} // namespace chemofv

#endif
