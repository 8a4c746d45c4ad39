#include "webs/curvature.hpp"

namespace webs {

Series2 blaschke_curvature(const Web& w) {
    const Series2& f = w.f();
    if (f.order() < 3) throw InsufficientOrder("curvature needs validity order >= 3");

    const Series2 fx = d_dx(f), fy = d_dy(f);
    // Both partials are units at the origin (web invariant).  Splitting off
    // the constants, log(fx/fy) = log(c1) - log(c2) + log1p(u) - log1p(v);
    // the constant difference dies under d_x d_y, so it never needs to exist
    // as a rational.
    const Rat c1 = fx.coeff(0, 0), c2 = fy.coeff(0, 0);
    const Series2 u = (Rat(1) / c1) * fx - Rat(1);
    const Series2 v = (Rat(1) / c2) * fy - Rat(1);
    return d_dx(d_dy(log1p(u) - log1p(v)));
}

}  // namespace webs
