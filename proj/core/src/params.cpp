#include "chemofv/params.hpp"

#include <cmath>

namespace chemofv {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) throw DomainError(std::string(name) + " must be positive");
}

} // namespace

Params validate_params(const Params& p) {
    if (!(p.eps >= 0.0)) throw DomainError("eps must be nonnegative");
    require_positive(p.r, "r");
    require_positive(p.mu, "mu");
    if (!(p.theta > 1.0)) throw DomainError("theta must exceed 1");
    require_positive(p.d1, "d1");
    require_positive(p.d2, "d2");
    require_positive(p.alpha, "alpha");
    require_positive(p.beta, "beta");
    require_positive(p.gamma, "gamma");
    require_positive(p.delta, "delta");
    return p;
}

double m1(const Params& p, const Field& u0) {
    validate_params(p);
    if (u0.min() < 0.0) throw DomainError("u0 must be nonnegative");
    const double carrying = std::pow(p.r / p.mu, 1.0 / (p.theta - 1.0));
    return std::max(u0.mean(), carrying);
}

ARParams validate_ar_params(const ARParams& arp) {
    require_positive(arp.chi, "chi");
    require_positive(arp.xi, "xi");
    if (!(arp.eps >= 0.0)) throw DomainError("eps must be nonnegative");
    require_positive(arp.r, "r");
    require_positive(arp.mu, "mu");
    if (!(arp.theta > 1.0)) throw DomainError("theta must exceed 1");
    require_positive(arp.d1, "d1");
    require_positive(arp.d2, "d2");
    require_positive(arp.alpha, "alpha");
    require_positive(arp.beta, "beta");
    require_positive(arp.gamma, "gamma");
    require_positive(arp.delta, "delta");

    const double lhs = arp.xi * arp.gamma;
    const double rhs = arp.chi * arp.alpha;
    if (std::abs(lhs - rhs) > 1e-12 * std::max(std::abs(lhs), std::abs(rhs)))
        throw DomainError("compatibility xi*gamma = chi*alpha violated");

    const double a = arp.d1 * arp.delta;
    const double b = arp.d2 * arp.beta;
    if (!(std::abs(a - b) > 1e-9 * std::max(a, b)))
        throw DomainError("degenerate reduction: d1*delta = d2*beta");

    return arp;
}

Params ar_reduce(const ARParams& arp) {
    validate_ar_params(arp);
    const double alpha_bar = arp.xi * (arp.d1 * arp.delta / arp.d2 - arp.beta);
    if (!(alpha_bar > 0.0))
        throw DomainError("reduced production rate xi*(d1*delta/d2 - beta) must be positive");
    Params p;
    p.eps = arp.eps;
    p.r = arp.r;
    p.mu = arp.mu;
    p.theta = arp.theta;
    p.d1 = arp.d1;
    p.d2 = arp.d2;
    p.alpha = alpha_bar;
    p.beta = arp.beta;
    p.gamma = arp.gamma;
    p.delta = arp.delta;
    return validate_params(p);
}

} // namespace chemofv
