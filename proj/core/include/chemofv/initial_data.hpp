#ifndef CHEMOFV_INITIAL_DATA_HPP
#define CHEMOFV_INITIAL_DATA_HPP

#include "chemofv/field.hpp"

namespace chemofv {

struct Point {
    double x = 0.0;
    double y = 0.0; // ignored on 1D grids
};

/// Smooth nonnegative compactly supported bump: cosine-squared profile of
/// radius `width` around `center`, rescaled so the discrete L^theta norm to
/// the theta-th power equals target_ltheta.
///
/// A width of at least the domain size degenerates to the constant field
/// (target_ltheta/|Omega|)^(1/theta). Throws DomainError when the support
/// would span fewer than 4 cells along an active axis (unresolvable) or the
/// center lies outside the domain.
Field make_bump(const Grid& grid, Point center, double width, double target_ltheta,
                double theta);

Field make_uniform(const Grid& grid, double value);

} // namespace chemofv

#endif
