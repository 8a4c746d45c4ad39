#pragma once

// Blaschke curvature of a web presentation: K = d_x d_y log(f_x / f_y),
// valid three orders below f.  K vanishes identically exactly when the web
// is flat (equivalently, when the normal-form residue g vanishes), which
// gives an oracle for the normal-form pipeline that never runs it.

#include "webs/normalform.hpp"
#include "webs/series.hpp"

namespace webs {

Series2 blaschke_curvature(const Web& w);

}  // namespace webs
