#include "ma/hamiltonian.hpp"

#include "ma/variational.hpp"
#include "ma/wedge.hpp"

namespace ma {

namespace {

CoeffVector single(CoeffLabel l)
{
    CoeffVector cs;
    cs.set(l, 1);
    return cs;
}

Poly lagrangian_ut_to_v(const CoeffVector& coeffs)
{
    Poly L2 = two_component_lagrangian(coeffs);
    return L2.subst(key_u({DT}), Poly::var(Key::jet(DepV, Multi{})));
}

} // namespace

Poly build_constraint_W(const CoeffVector& coeffs)
{
    return two_component_lagrangian(coeffs).partial(key_u({DT}));
}

Poly constraint_W_part(CoeffLabel l) { return build_constraint_W(single(l)); }

PoissonMatrixK derive_K(const CoeffVector& coeffs)
{
    PoissonMatrixK K;
    for (int i = 0; i < CoeffCount; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        Poly W = constraint_W_part(l);
        LinOp D = frechet(W, DepU);
        K.perTermK11[l] = D.adjoint() - D;
        K.perTermK12[l] = -W.partial(Key::jet(DepV, Multi{}));
        if (!coeffs[l].is_zero()) {
            K.K11 += K.perTermK11[l].scaled(RatFn(coeffs[l]));
            K.K12 += coeffs[l] * K.perTermK12[l];
        }
    }
    return K;
}

Poly h1_part(CoeffLabel l)
{
    Poly v = Poly::var(Key::jet(DepV, Multi{}));
    return constraint_W_part(l) * v - lagrangian_ut_to_v(single(l));
}

Poly build_H1(const CoeffVector& coeffs)
{
    Poly H1;
    for (int i = 0; i < CoeffCount; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        if (!coeffs[l].is_zero()) H1 += coeffs[l] * h1_part(l);
    }
    return H1;
}

bool symplectic_check(const PoissonMatrixK& K)
{
    return closed_mod_divergence(omega_from_K(K.K11, K.K12));
}

FlowReport verify_hamiltonian_flow(const MASystem& sys)
{
    FlowReport rep;
    Poly v = Poly::var(Key::jet(DepV, Multi{}));
    PoissonMatrixK K = derive_K(sys.coeffs);
    for (int i = 0; i < CoeffCount; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        Poly lhs = euler(h1_part(l), DepU) -
                   K.perTermK11[l].apply(RatFn(v)).as_polynomial();
        rep.perLabel[l] = lhs == -sys.qParts[l];
    }
    Poly H1 = build_H1(sys.coeffs);
    rep.deltaV = euler(H1, DepV) == -(v * K.K12);

    // assembled flow (the J0 image of the gradient)
    RatFn du = RatFn(euler(H1, DepV)) / RatFn(sys.Delta);
    rep.assembledU = du == RatFn(v);
    RatFn dv = (RatFn(euler(H1, DepU)) - K.K11.apply(RatFn(v))) / RatFn(-sys.Delta);
    rep.assembledV = dv == RatFn(sys.q, sys.Delta);
    return rep;
}

J0Matrix build_J0(const MASystem& sys)
{
    PoissonMatrixK K = derive_K(sys.coeffs);
    RatFn invDelta = RatFn(Poly(1), sys.Delta);
    J0Matrix J;
    J.e11 = LinOp();
    J.e12 = LinOp::mult(invDelta);
    J.e21 = LinOp::mult(-invDelta);
    J.e22 = LinOp::mult(invDelta) * K.K11 * LinOp::mult(invDelta);
    return J;
}

} // namespace ma
