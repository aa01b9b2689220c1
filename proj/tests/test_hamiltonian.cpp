#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ma/hamiltonian.hpp"
#include "ma/variational.hpp"
#include "ma/wedge.hpp"

using namespace ma;

namespace {

Poly u(std::initializer_list<Dir> dirs) { return Poly::var(key_u(dirs)); }
Poly v(std::initializer_list<Dir> dirs) { return Poly::var(Key::jet(DepV, Multi::of(dirs))); }

LinOp A(Poly c, std::initializer_list<Dir> dirs)
{
    return LinOp::atom(RatFn(std::move(c)), Multi::of(dirs));
}

/// Hand-transcribed K11 table (independent regression data).
LinOp paper_K11(CoeffLabel l)
{
    switch (l) {
    case La1:
        return A(Poly(2) * (v({D1}) * u({D2, D2}) - v({D2}) * u({D1, D2})), {D1}) +
               A(Poly(2) * (v({D2}) * u({D1, D1}) - v({D1}) * u({D1, D2})), {D2}) +
               A(v({D1, D1}) * u({D2, D2}) + v({D2, D2}) * u({D1, D1}) -
                     Poly(2) * v({D1, D2}) * u({D1, D2}),
                 {});
    case La2:
        return A(Poly(2) * (v({D1}) * u({D3, D3}) - v({D3}) * u({D1, D3})), {D1}) +
               A(Poly(2) * (v({D3}) * u({D1, D1}) - v({D1}) * u({D1, D3})), {D3}) +
               A(v({D1, D1}) * u({D3, D3}) + v({D3, D3}) * u({D1, D1}) -
                     Poly(2) * v({D1, D3}) * u({D1, D3}),
                 {});
    case La3:
        return A(Poly(2) * (v({D2}) * u({D3, D3}) - v({D3}) * u({D2, D3})), {D2}) +
               A(Poly(2) * (v({D3}) * u({D2, D2}) - v({D2}) * u({D2, D3})), {D3}) +
               A(v({D2, D2}) * u({D3, D3}) + v({D3, D3}) * u({D2, D2}) -
                     Poly(2) * v({D2, D3}) * u({D2, D3}),
                 {});
    case La4:
        return A(Poly(2) * v({D1}) * u({D2, D3}) - v({D2}) * u({D1, D3}) - v({D3}) * u({D1, D2}),
                 {D1}) +
               A(v({D3}) * u({D1, D1}) - v({D1}) * u({D1, D3}), {D2}) +
               A(v({D2}) * u({D1, D1}) - v({D1}) * u({D1, D2}), {D3}) +
               A(v({D1, D1}) * u({D2, D3}) + v({D2, D3}) * u({D1, D1}) -
                     v({D1, D2}) * u({D1, D3}) - v({D1, D3}) * u({D1, D2}),
                 {});
    case La5:
        return A(v({D2}) * u({D2, D3}) - v({D3}) * u({D2, D2}), {D1}) +
               A(v({D1}) * u({D2, D3}) - Poly(2) * v({D2}) * u({D1, D3}) + v({D3}) * u({D1, D2}),
                 {D2}) +
               A(v({D2}) * u({D1, D2}) - v({D1}) * u({D2, D2}), {D3}) +
               A(v({D1, D2}) * u({D2, D3}) + v({D2, D3}) * u({D1, D2}) -
                     v({D1, D3}) * u({D2, D2}) - v({D2, D2}) * u({D1, D3}),
                 {});
    case La6:
        return A(v({D2}) * u({D3, D3}) - v({D3}) * u({D2, D3}), {D1}) +
               A(v({D1}) * u({D3, D3}) - v({D3}) * u({D1, D3}), {D2}) +
               A(Poly(2) * v({D3}) * u({D1, D2}) - v({D1}) * u({D2, D3}) - v({D2}) * u({D1, D3}),
                 {D3}) +
               A(v({D1, D2}) * u({D3, D3}) + v({D3, D3}) * u({D1, D2}) -
                     v({D1, D3}) * u({D2, D3}) - v({D2, D3}) * u({D1, D3}),
                 {});
    case La7: return A(Poly(2) * v({D1}), {D1}) + A(v({D1, D1}), {});
    case La8: return A(v({D2}), {D1}) + A(v({D1}), {D2}) + A(v({D1, D2}), {});
    case La9: return A(v({D3}), {D1}) + A(v({D1}), {D3}) + A(v({D1, D3}), {});
    case La10: return A(Poly(2) * v({D2}), {D2}) + A(v({D2, D2}), {});
    case La11: return A(v({D3}), {D2}) + A(v({D2}), {D3}) + A(v({D2, D3}), {});
    case La12: return A(Poly(2) * v({D3}), {D3}) + A(v({D3, D3}), {});
    case La13: return LinOp();
    case Lb1:
        return A(u({D1, D3}) * u({D2, D2}) - u({D1, D2}) * u({D2, D3}), {D1}) +
               A(u({D1, D1}) * u({D2, D3}) - u({D1, D2}) * u({D1, D3}), {D2}) +
               A(-(u({D1, D1}) * u({D2, D2}) - u({D1, D2}) * u({D1, D2})), {D3});
    case Lb2:
        return A(u({D1, D3}) * u({D2, D3}) - u({D1, D2}) * u({D3, D3}), {D1}) +
               A(u({D1, D1}) * u({D3, D3}) - u({D1, D3}) * u({D1, D3}), {D2}) +
               A(-(u({D1, D1}) * u({D2, D3}) - u({D1, D2}) * u({D1, D3})), {D3});
    case Lb3:
        return A(-(u({D2, D2}) * u({D3, D3}) - u({D2, D3}) * u({D2, D3})), {D1}) +
               A(u({D1, D2}) * u({D3, D3}) - u({D1, D3}) * u({D2, D3}), {D2}) +
               A(-(u({D1, D2}) * u({D2, D3}) - u({D1, D3}) * u({D2, D2})), {D3});
    case Lb4: return LinOp();
    case Lc1: return A(u({D1, D1}), {D2}) + A(-u({D1, D2}), {D1});
    case Lc2: return A(u({D1, D1}), {D3}) + A(-u({D1, D3}), {D1});
    case Lc3: return A(u({D1, D2}), {D2}) + A(-u({D2, D2}), {D1});
    case Lc4: return A(u({D1, D3}), {D2}) + A(-u({D2, D3}), {D1});
    case Lc5: return A(u({D2, D2}), {D3}) + A(-u({D2, D3}), {D2});
    case Lc6: return A(u({D1, D3}), {D3}) + A(-u({D3, D3}), {D1});
    case Lc7: return A(u({D2, D3}), {D3}) + A(-u({D3, D3}), {D2});
    case Lc8: return A(u({D1, D2}), {D3}) + A(-u({D1, D3}), {D2});
    case Lc8p: return A(u({D1, D2}), {D3}) + A(-u({D2, D3}), {D1});
    case Lc15: return -LinOp::deriv(D1);
    case Lc16: return -LinOp::deriv(D2);
    case Lc17: return -LinOp::deriv(D3);
    default: return LinOp(); // c9..c14, c18..c24
    }
}

Poly paper_K12(CoeffLabel l)
{
    if (l >= La1 && l <= La13) return -delta_part(l);
    return Poly();
}

} // namespace

TEST_CASE("constraint density W: frozen examples")
{
    CHECK(constraint_W_part(La7) == v({}) * u({D1, D1}));
    CHECK(constraint_W_part(Lc15) == Poly::var(key_u({D1})) * rat(1, 2));
    Poly b1 = (Poly::var(key_u({D1})) * (u({D1, D2}) * u({D2, D3}) - u({D1, D3}) * u({D2, D2})) -
               Poly::var(key_u({D2})) * (u({D1, D1}) * u({D2, D3}) - u({D1, D2}) * u({D1, D3})) +
               Poly::var(key_u({D3})) * (u({D1, D1}) * u({D2, D2}) - u({D1, D2}) * u({D1, D2}))) *
              rat(1, 4);
    CHECK(constraint_W_part(Lb1) == b1);
    CHECK(constraint_W_part(Lc9).is_zero());
    CHECK(constraint_W_part(Lb4).is_zero());
}

TEST_CASE("derive_K reproduces the transcribed tables for all 31 labels")
{
    PoissonMatrixK K = derive_K(CoeffVector::symbolic());
    for (int i = 0; i < CoeffCount; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        INFO("label ", coeff_name(l));
        CHECK(K.perTermK11[l] == paper_K11(l));
        CHECK(K.perTermK12[l] == paper_K12(l));
    }
}

TEST_CASE("K11 is skew-adjoint per label and for the symbolic sum")
{
    PoissonMatrixK K = derive_K(CoeffVector::symbolic());
    for (int i = 0; i < CoeffCount; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        INFO("label ", coeff_name(l));
        CHECK((K.perTermK11[l].adjoint() + K.perTermK11[l]).is_zero());
    }
    CHECK((K.K11.adjoint() + K.K11).is_zero());
}

TEST_CASE("H1 parts: frozen examples")
{
    CHECK(h1_part(La11) == v({}) * v({}) * u({D2, D3}) * rat(1, 2));
    CHECK(h1_part(Lc24) == Poly::var(key_u({})));
    CHECK(h1_part(Lc15).is_zero());
    CHECK(h1_part(Lc16).is_zero());
    CHECK(h1_part(Lc17).is_zero());
    CHECK(h1_part(Lb1).is_zero());
    CHECK(h1_part(Lb2).is_zero());
    CHECK(h1_part(Lb3).is_zero());
    for (CoeffLabel l : {Lc1, Lc2, Lc3, Lc4, Lc5, Lc6, Lc7, Lc8, Lc8p}) CHECK(h1_part(l).is_zero());
    // a-labels: H1 = -(v^2/2) K12
    PoissonMatrixK K = derive_K(CoeffVector::symbolic());
    for (int i = La1; i <= La13; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        CHECK(h1_part(l) == -(v({}) * v({}) * rat(1, 2)) * K.perTermK12[l]);
    }
    // W*v - L2[u_t := v] - H1 is exactly zero, in particular a divergence
    Poly H1 = build_H1(CoeffVector::symbolic());
    Poly W = build_constraint_W(CoeffVector::symbolic());
    Poly L2v = two_component_lagrangian(CoeffVector::symbolic())
                   .subst(key_u({DT}), Poly::var(Key::jet(DepV, Multi{})));
    Poly slack = W * v({}) - L2v - H1;
    CHECK(slack.is_zero());
    CHECK(divergence_test(slack));
}

TEST_CASE("symplectic check: per-label forms and the full symbolic omega")
{
    PoissonMatrixK K = derive_K(CoeffVector::symbolic());
    // omega^a7 = v_1 du ^ du_1 - u_11 du ^ dv is closed
    {
        Form w = omega_from_K(K.perTermK11[La7], K.perTermK12[La7]);
        Form expect = Form::wedge2(v({D1}), Gen::du(Multi{}), Gen::du(Multi::of({D1}))) +
                      Form::wedge2(-u({D1, D1}), Gen::du(Multi{}), Gen::dv(Multi{}));
        CHECK((w - expect).is_zero());
        CHECK(closed_mod_divergence(w));
    }
    for (int i = 0; i < CoeffCount; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        INFO("label ", coeff_name(l));
        CHECK(closed_mod_divergence(omega_from_K(K.perTermK11[l], K.perTermK12[l])));
    }
    CHECK(symplectic_check(K));

    // negative control: omega = u_11 du ^ dv is not closed
    Form bad = Form::wedge2(u({D1, D1}), Gen::du(Multi{}), Gen::dv(Multi{}));
    CHECK_FALSE(closed_mod_divergence(bad));
}

TEST_CASE("flow identities hold for all labels and assemble to (v, q/Delta)")
{
    MASystem sys = build_two_component(CoeffVector::symbolic());
    FlowReport rep = verify_hamiltonian_flow(sys);
    for (int i = 0; i < CoeffCount; ++i) {
        INFO("label ", coeff_name(static_cast<CoeffLabel>(i)));
        CHECK(rep.perLabel[i]);
    }
    CHECK(rep.deltaV);
    CHECK(rep.assembledU);
    CHECK(rep.assembledV);
}

TEST_CASE("flow identity frozen single cases")
{
    // label a11: delta_u((v^2/2)u_23) - (v_3 D_2 + v_2 D_3 + v_23)[v] = -v_2 v_3
    Poly H = h1_part(La11);
    LinOp K11 = A(v({D3}), {D2}) + A(v({D2}), {D3}) + A(v({D2, D3}), {});
    Poly lhs = euler(H, DepU) - K11.apply(RatFn(v({}))).as_polynomial();
    CHECK(lhs == -(v({D2}) * v({D3})));

    // label c24: delta_u(u) - 0 = 1 = -q^(24)
    CHECK(euler(h1_part(Lc24), DepU) == Poly(1));
    CHECK(q_part(Lc24) == Poly(-1));

    // label b4: delta_u H1^(b4) = -q^(b4) with K11^(b4) = 0
    CHECK(euler(h1_part(Lb4), DepU) == -q_part(Lb4));
}

TEST_CASE("J0 of E3 has the paper's K11")
{
    CoeffVector cs;
    cs.set_symbolic(La8).set_symbolic(La10).set_symbolic(La11).set_symbolic(Lc7).set_symbolic(Lc8);
    PoissonMatrixK K = derive_K(cs);
    // K11 = v_2 Dhat + D_2 Dhat[v] - c7 L_23(3) - c8 L_23(1),
    // Dhat = a8 D_1 + a10 D_2 + a11 D_3
    LinOp Dhat = LinOp::atom(RatFn(Poly::var(Pa8)), Multi::of({D1})) +
                 LinOp::atom(RatFn(Poly::var(Pa10)), Multi::of({D2})) +
                 LinOp::atom(RatFn(Poly::var(Pa11)), Multi::of({D3}));
    Poly dhatV = Poly::var(Pa8) * v({D1}) + Poly::var(Pa10) * v({D2}) + Poly::var(Pa11) * v({D3});
    LinOp expect = LinOp::mult(RatFn(v({D2}))) * Dhat +
                   LinOp::deriv(D2) * LinOp::mult(RatFn(dhatV)) -
                   build_L(D2, D3, D3).scaled(RatFn(Poly::var(Pc7))) -
                   build_L(D2, D3, D1).scaled(RatFn(Poly::var(Pc8)));
    CHECK(K.K11 == expect);
}

TEST_CASE("E1 K11 matches the display in the bi-Hamiltonian section")
{
    CoeffVector cs;
    cs.set_symbolic(La11).set_symbolic(Lc4).set_symbolic(Lc5).set_symbolic(Lc8)
        .set_symbolic(Lc9).set_symbolic(Lc10);
    PoissonMatrixK K = derive_K(cs);
    // K11 = a11 (v_3 D_2 + D_3 v_2) - c4 L_12(3) - c5 L_23(2) - c8 L_23(1)
    LinOp expect = (A(v({D3}), {D2}) + LinOp::deriv(D3) * LinOp::mult(RatFn(v({D2}))))
                       .scaled(RatFn(Poly::var(Pa11))) -
                   build_L(D1, D2, D3).scaled(RatFn(Poly::var(Pc4))) -
                   build_L(D2, D3, D2).scaled(RatFn(Poly::var(Pc5))) -
                   build_L(D2, D3, D1).scaled(RatFn(Poly::var(Pc8)));
    CHECK(K.K11 == expect);
}
