#ifndef CHEMOFV_DIAGNOSTICS_HPP
#define CHEMOFV_DIAGNOSTICS_HPP

#include <span>
#include <vector>

#include "chemofv/params.hpp"
#include "chemofv/sim_state.hpp"

namespace chemofv {

/// What to monitor and how often. q is the Sobolev exponent of the W^{1,q}
/// monitor and must exceed the grid dimension; theta is copied from Params.
struct DiagnosticsConfig {
    double q = 4.0;
    double theta = 2.0;
    int cadence = 1; // record every k-th accepted step
};

DiagnosticsConfig validate_diagnostics_config(const DiagnosticsConfig& cfg, int dim);

/// One sampled row of the monitored quantities. w1q is the q-th power of the
/// discrete W^{1,q} norm, integral(u^q) + integral(|grad_h u|^q), with the
/// centered-difference gradient (one-sided at boundaries). mass_id_err is the
/// larger relative defect of the two integral identities beta*int(v) =
/// alpha*int(w) and delta*int(w) = gamma*int(u).
struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;
    double mean = 0.0;
    double umax = 0.0;
    double ltheta = 0.0;
    double w1q = 0.0;
    double mass_id_err = 0.0;
    double dt = 0.0;
};

DiagnosticsRecord record(const SimState& state, const Params& p,
                         const DiagnosticsConfig& cfg);

/// integral of field^p with the cell quadrature hx*hy*sum.
double integral_pow(const Field& f, double p);

/// integral of |grad_h f|^q, centered interior / one-sided boundary stencils.
double grad_integral_pow(const Field& f, double q);

/// Relative defect of the two signal mass identities for the given state.
double mass_identity_error(const SimState& state, const Params& p);

/// Inputs of the scalar blow-up comparison: a nonnegative y with
/// y(t) >= a - b*t + d*integral(y^kappa) must leave any interval [0, T]
/// with T > 2/((kappa-1)*a^(kappa-1)*d), provided a > (2b/d)^(1/kappa).
struct BlowupBoundInputs {
    double a = 1.0;     // initial value, > 0
    double b = 0.0;     // drift, >= 0
    double d = 1.0;     // superlinear coefficient, > 0
    double kappa = 2.0; // exponent, > 1
};

/// The guaranteed upper bound 2/((kappa-1)*a^(kappa-1)*d) on the survival
/// time. Throws DomainError when the hypothesis a > (2b/d)^(1/kappa) fails.
double blowup_time_bound(const BlowupBoundInputs& inp);

struct EnvelopeFit {
    double C = 0.0;
    double valid_until = 0.0; // +infinity sentinel when C == 0
};

/// Fits the smallest C >= 0 with dy/dt <= C*(y + y^3) across consecutive
/// records of y = w1q, and the horizon ln(y0^-2 + 1)/(2C) up to which the
/// closed-form envelope 1/sqrt((y0^-2+1)e^{-2Ct} - 1) stays finite.
EnvelopeFit bernoulli_envelope_fit(std::span<const DiagnosticsRecord> series, double q);

/// Value of the fitted envelope at time t (for consistency checks).
double bernoulli_envelope(double y0, double C, double t);

/// true iff mean <= m1*(1 + 1e-6) in every record.
bool check_mean_bound(std::span<const DiagnosticsRecord> series, double m1);

} // namespace chemofv

#endif
