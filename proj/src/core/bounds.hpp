#pragma once

#include "generator.hpp"

namespace tdet {

// Normalized directional coefficients of a mapping (or the a_2, a_3 Taylor
// coefficients of a one-variable member; the two coincide on slices).
struct CoeffPair {
    Complex b2;
    Complex b3;
};

// Determinants of the symmetric Toeplitz matrices built from (1, b2, b3):
// the 2x2 minor [[b2, b3], [b3, b2]] and the full 3x3 [[1, b2, b3],
// [b2, 1, b2], [b3, b2, 1]].  Comparisons against bounds use the modulus.
Complex det_t22(const CoeffPair& c); // b2^2 - b3^2
Complex det_t31(const CoeffPair& c); // 2 b2^2 b3 - 2 b2^2 - b3^2 + 1

// Sharp closed-form bounds in terms of d1 = phi'(0), d2 = phi''(0).  The
// checked entry points throw ConditionNotMet outside the hypothesis of the
// corresponding theorem; the _formula variants evaluate unconditionally and
// exist for the CLI's --force escape hatch and for sweep tables.
double bound_t22(const Phi& phi);
double bound_t31(const Phi& phi);
double bound_t22_formula(const Phi& phi);
double bound_t31_formula(const Phi& phi);

// Sharp bound for |a2| over the subordination class: d1.
double bound_b2(const Phi& phi);

// Sharp Fekete-Szego bound  (d1/2) max{1, |d2/(2 d1) + (1 - 2 lambda) d1|},
// valid for every complex lambda with no side condition.
double fs_bound(const Phi& phi, Complex lambda);

struct BoundReport {
    double b22;
    double b31;
    bool thm1_ok;
    bool thm2_ok;
};

// Formula values plus condition flags; never throws.
BoundReport bound_report(const Phi& phi);

} // namespace tdet
