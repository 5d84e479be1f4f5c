#include "chemofv/reaction.hpp"

#include <cmath>

namespace chemofv {

Field reaction_update(const Field& u, const Params& p, double dt) {
    if (!(dt > 0.0)) throw DomainError("reaction dt must be positive");
    Field out(u.grid());
    const int n = u.size();
    const double growth = 1.0 + dt * p.r;
    const double em1 = p.theta - 1.0;
    const bool quadratic = (p.theta == 2.0);
    for (int k = 0; k < n; ++k) {
        const double uk = u[k];
        const double damping = quadratic ? uk : (uk > 0.0 ? std::pow(uk, em1) : 0.0);
        out[k] = uk * growth / (1.0 + dt * p.mu * damping);
    }
    return out;
}

} // namespace chemofv
