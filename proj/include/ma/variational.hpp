#ifndef MA_VARIATIONAL_HPP
#define MA_VARIATIONAL_HPP

#include <array>

#include "ma/linop.hpp"

namespace ma {

/// Fréchet derivative (linearization) with respect to one dependent:
/// sum over jets J present of (dF/d var_J) D_J.
LinOp frechet(const Poly& F, Dep var = DepU);

/// Helmholtz self-adjointness residuals of D*_F - D_F, split in the paper's
/// five groups: coefficients of D_t, D_1, D_2, D_3 and the derivative-free
/// part. For second-order F no other groups survive; any unexpected leftover
/// is carried in `other` and also blocks selfAdjoint.
struct HelmholtzReport {
    bool selfAdjoint = false;
    std::array<Poly, 5> residuals; // D_t, D_1, D_2, D_3, derivative-free
    LinOp other;
};

HelmholtzReport helmholtz_check(const Poly& F);

/// Euler operator (variational derivative): sum_J (-D)_J (dL/d var_J).
Poly euler(const Poly& L, Dep var, int maxOrder = 10);

/// Exactness criterion: true iff the Euler operator with respect to every
/// given dependent symbol annihilates p. Empty list means every dependent
/// occurring in p.
bool divergence_test(const Poly& p, std::vector<Dep> dependents = {});

/// Homotopy-formula Lagrangian: each monomial of jet degree d maps to
/// u * m / (d+1). Assumes F has no explicit independent-variable dependence.
Poly homotopy_lagrangian(const Poly& F);

} // namespace ma

#endif
