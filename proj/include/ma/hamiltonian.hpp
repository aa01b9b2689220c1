#ifndef MA_HAMILTONIAN_HPP
#define MA_HAMILTONIAN_HPP

#include "ma/family.hpp"
#include "ma/linop.hpp"

namespace ma {

/// Matrix of constraint Poisson brackets. K11 acts on u, K12 is a
/// multiplication operator; K21 = -K12 and K22 = 0 are implicit.
struct PoissonMatrixK {
    LinOp K11;
    Poly K12;
    std::array<LinOp, CoeffCount> perTermK11;
    std::array<Poly, CoeffCount> perTermK12;
};

/// Momentum density: W = dL2/du_t, so that Phi_u = pi_u - W.
Poly build_constraint_W(const CoeffVector& coeffs);
Poly constraint_W_part(CoeffLabel l);

/// K from the constraint density, operator-theoretically:
/// K11 = D*_W - D_W (with respect to u), K12 = -dW/dv.
PoissonMatrixK derive_K(const CoeffVector& coeffs);

/// Hamiltonian density H1 and its per-label parts, generated from
/// H1 = W*v - L2[u_t := v] (exact, no divergence slack).
Poly build_H1(const CoeffVector& coeffs);
Poly h1_part(CoeffLabel l);

/// d(omega) = 0 modulo total divergence for omega built from K.
bool symplectic_check(const PoissonMatrixK& K);

/// The flow identities: per-label delta_u H1 - K11 v = -q, the v-derivative
/// identity delta_v H1 = -v K12, and the assembled J0 flow (v, q/Delta).
struct FlowReport {
    std::array<bool, CoeffCount> perLabel{};
    bool deltaV = false;
    bool assembledU = false;
    bool assembledV = false;
    bool all() const
    {
        for (bool b : perLabel)
            if (!b) return false;
        return deltaV && assembledU && assembledV;
    }
};

FlowReport verify_hamiltonian_flow(const MASystem& sys);

/// First Hamiltonian operator as a 2x2 matrix of inverse-free operators:
/// [[0, 1/Delta], [-1/Delta, (1/Delta) K11 (1/Delta)]].
struct J0Matrix {
    LinOp e11, e12, e21, e22;
};

J0Matrix build_J0(const MASystem& sys);

} // namespace ma

#endif
