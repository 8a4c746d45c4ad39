#pragma once

// Webs with circular symmetry: an automorphism phi permuting the three
// foliations cyclically, conjugate to one of two linear models.  The solver
// takes the conjugating data (V, mu), produces psi = (A, B) tangent to the
// identity with
//     U(A, B) = x                       (2)
//     V(A, B) = y                       (3)
//     U(action) = F,  V(action) = G     (4), (5)
//     G = mu(x)                         (6)
// where (U, V) = psi^{-1} and "action" means the model's linear action
// applied to (A, B); the web function is f = -F.  Every residual is
// certified before a result is returned.

#include "webs/normalform.hpp"
#include "webs/series.hpp"
#include "webs/symmetry.hpp"

#include <optional>
#include <string>

namespace webs {

// The two linear models for the cyclic action:
//   Order3: (x, y) -> (-x - y, x), of order 3;
//   Order6: (x, y) -> ( x + y, -x), of order 6.
enum class LinearModel { Order3, Order6 };
std::string to_string(LinearModel m);
int model_order(LinearModel m);  // 3 or 6
PlaneMap model_action(LinearModel m, int order);

// Is P exactly invariant under the model's linear action, to P's order?
bool is_linear_invariant(const Series2& P, LinearModel model);

struct VerificationReport {
    int order = 0;
    // Residuals of the five conjugacy equations vanish to `order`.  eq4 and
    // eq5 define F and G, so they hold by construction; eq2, eq3 and eq6 are
    // computed independently.
    bool eq2 = false, eq3 = false, eq4 = false, eq5 = false, eq6 = false;
    bool g_independent_of_y = false;
    int phi_power = 0;  // 3 or 6, per the model
    bool phi_power_is_identity = false;
    std::optional<FoliationPermutation> permutation;  // of phi on the web
    SimpleClass flatness{SimpleTag::FlatToOrder, 0};  // of the web's residue
    // Extra certifications recorded only by theorem3_example.
    std::optional<bool> thm3_identities;
    std::optional<bool> thm3_five_points;
};

struct CircularResult {
    Series2 A, B;  // psi = (A, B), tangent to the identity
    Series2 U;     // first component of psi^{-1} (the second recovers V)
    Series2 F;     // first component of phi = psi^{-1} . action . psi
    Series1 G;     // second component of phi, a function of x alone; = mu
    Series2 f;     // the web function, f = -F
    VerificationReport report;
};

// Solve the conjugacy equations at order N >= 3.  Preconditions:
// V = y + higher-order, and mu = x + higher (Order3) / -x + higher (Order6) —
// the action itself forces the sign of mu'(0).
CircularResult solve_circular(const Series2& V, const Series1& mu, LinearModel model, int N);

// theta + P(x + theta, y + theta) = 0 for a perturbation P with zero 1-jet:
// the scalar shift behind the closed forms of both models.
Series2 solve_theta(const Series2& P, int N);

// Synthesize the web with circular symmetry attached to a perturbation P with
// zero 1-jet, via V = y + P and mu = x / -x per the model.  The admissible P
// depend on the model: Order3 needs P invariant under (-x-y, x); Order6 needs
// P *anti*-invariant under (x+y, -x), i.e. P(x+y, -x) = -P(x, y) — equivalently
// P odd and invariant under the rotation (x+y,-x)^2.  (A P invariant under the
// Order6 action would be even, and then the solved phi fails to permute the
// foliations; anti-invariance is exactly what makes the square of the action
// carry U to V, closing the 3-cycle.)  Beyond the solver's own residuals the
// closed forms are certified, with the same theta in both models:
//   Order3: A = x + theta, B = y + theta, U = x + P, F = -x - y - 3 theta;
//   Order6: A = x + theta, B = y + theta, U = x + P, F =  x + y + 3 theta,
// so the Order6 web f = -F = -x - y - 3 theta is carried to the Order3 one by
// (x, y) -> (-x, -y), and its normalized g is even.
CircularResult lemma1_synthesize(const Series2& P, LinearModel model, int N);

// The distinguished degree-6 invariant: P0 = x y (x-y)(x+y)(2x+y)(x+2y).
Series2 theorem3_p0(int order);

// The non-flat circularly symmetric web built from P0 (needs N >= 8).  The
// report additionally records the three normal-form identities of f and the
// five-point line condition f(-t,2t) = f(0,t) = f(t/2,t/2) = f(t,0) =
// f(2t,-t) = t.
CircularResult theorem3_example(int N);

}  // namespace webs
