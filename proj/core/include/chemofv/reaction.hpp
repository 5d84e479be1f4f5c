#ifndef CHEMOFV_REACTION_HPP
#define CHEMOFV_REACTION_HPP

#include "chemofv/field.hpp"
#include "chemofv/params.hpp"

namespace chemofv {

/// Positivity-preserving update of the source r*u - mu*u^theta:
///   u+ = u*(1 + dt*r) / (1 + dt*mu*u^(theta-1)).
/// Growth is explicit, damping semi-implicit with the lagged factor, so
/// u+ >= 0 whenever u >= 0 and the carrying state (r/mu)^(1/(theta-1)) is an
/// exact fixed point.
Field reaction_update(const Field& u, const Params& p, double dt);

} // namespace chemofv

#endif
