#pragma once

#include "tanmax/interior.hpp"
#include "tanmax/kernels.hpp"
#include "tanmax/maximal.hpp"
#include "tanmax/space.hpp"

/// Serial reference implementations of the hot kernels. These are the
/// direct transcriptions of the definitions: triple loops, memberships
/// recomputed from the formulas, no tables, no OpenMP. The test suites
/// check the production kernels against them; the bench target times the
/// two side by side.
namespace tanmax::reference {

InteriorFunction ball_mean_field(const HomogeneousSpace& space, const BoundaryFunction& f);

BoundaryFunction hl_maximal(const HomogeneousSpace& space, const BoundaryFunction& f);

BoundaryFunction truncated_hl_maximal(const HomogeneousSpace& space,
                                      const BoundaryFunction& f, double eps);

BoundaryFunction tangential_maximal(const HomogeneousSpace& space,
                                    const InteriorFunction& u, const ApproachSpec& spec);

BoundaryFunction parametric_maximal(const HomogeneousSpace& space,
                                    const InteriorFunction& u, const ApproachSpec& spec);

BoundaryFunction modified_nontangential(const HomogeneousSpace& space,
                                        const InteriorFunction& u, double A, double delta);

InteriorFunction p0_field(const HomogeneousSpace& space, const BoundaryFunction& f, int k_hi);

}  // namespace tanmax::reference
