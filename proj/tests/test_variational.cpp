#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ma/family.hpp"
#include "ma/point.hpp"
#include "ma/variational.hpp"

using namespace ma;

namespace {
Poly u(std::initializer_list<Dir> dirs) { return Poly::var(key_u(dirs)); }
Poly v(std::initializer_list<Dir> dirs) { return Poly::var(Key::jet(DepV, Multi::of(dirs))); }
} // namespace

TEST_CASE("frechet examples")
{
    CHECK(frechet(u({DT, DT})) == LinOp::deriv(Multi::of({DT, DT})));

    Poly F = u({DT, DT}) * u({D1, D1}) - u({DT, D1}) * u({DT, D1}) + u({DT, D2}) + u({DT, D3});
    LinOp expect = LinOp::atom(RatFn(u({D1, D1})), Multi::of({DT, DT})) +
                   LinOp::atom(RatFn(u({DT, DT})), Multi::of({D1, D1})) -
                   LinOp::atom(RatFn(Poly(2) * u({DT, D1})), Multi::of({DT, D1})) +
                   LinOp::deriv(Multi::of({DT, D2})) + LinOp::deriv(Multi::of({DT, D3}));
    CHECK(frechet(F) == expect);
}

TEST_CASE("frechet of the full symbolic family has g free of u_ti")
{
    Poly F = build_F(CoeffVector::symbolic());
    LinOp D = frechet(F);
    // coefficient of D_t^2 is -g; it must not depend on any u_ti or u_tt
    RatFn g = D.coefficient(Multi::of({DT, DT}));
    Poly gp = g.as_polynomial();
    for (Dir d : {D1, D2, D3}) CHECK_FALSE(gp.depends_on(key_u({DT, d})));
    CHECK_FALSE(gp.depends_on(key_u({DT, DT})));
    // mixed t-z coefficients are the partials of f shifted by u_tt g's partials
    for (Dir d : {D1, D2, D3}) {
        RatFn c = D.coefficient(Multi::of({DT, d}));
        CHECK(c == RatFn(F.partial(key_u({DT, d}))));
    }
}

TEST_CASE("helmholtz: the full symbolic family is self-adjoint")
{
    Poly F = build_F(CoeffVector::symbolic());
    auto rep = helmholtz_check(F);
    CHECK(rep.selfAdjoint);
    for (auto& r : rep.residuals) CHECK(r.is_zero());
}

TEST_CASE("helmholtz: single-coefficient and perturbed cases")
{
    CoeffVector a7;
    a7.set(La7, 1);
    CHECK(helmholtz_check(build_F(a7)).selfAdjoint);

    // u_tt - u_t1^3 fails with a residual in the D_t group
    Poly bad = u({DT, DT}) - u({DT, D1}) * u({DT, D1}) * u({DT, D1});
    auto rep = helmholtz_check(bad);
    CHECK_FALSE(rep.selfAdjoint);
    CHECK_FALSE(rep.residuals[0].is_zero());
}

TEST_CASE("helmholtz rejects at least five perturbations of the family")
{
    Poly F = build_F(CoeffVector::symbolic());
    std::vector<Poly> perturbations = {
        u({DT, D1}) * u({DT, D1}) * u({DT, D1}),
        u({D1, D1}) * u({DT, D2}) * u({DT, D3}),
        u({DT, D1}) * u({DT, D2}) * u({DT, D3}),
        u({DT, DT}) * u({DT, DT}),
        u({DT, DT}) * u({DT, D1}),
        u({D1, D1}) * u({D1, D1}) * u({DT, DT}),
    };
    int rejected = 0;
    for (auto& p : perturbations)
        if (!helmholtz_check(F + p).selfAdjoint) ++rejected;
    CHECK(rejected >= 5);
}

TEST_CASE("euler examples")
{
    CHECK(euler(u({D1}) * u({D1}) * rat(1, 2), DepU) == -u({D1, D1}));
    CHECK(euler(Poly::var(key_u({})) * u({DT, DT}) * rat(1, 2), DepU) == u({DT, DT}));
}

TEST_CASE("euler annihilates total divergences")
{
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        Poly p;
        for (int t = 0; t < 3; ++t) {
            Mono m;
            for (int f = 0; f < 2; ++f) {
                Multi mu;
                int ord = static_cast<int>(rng.below(3));
                for (int o = 0; o < ord; ++o) mu = mu.plus(static_cast<Dir>(rng.below(4)));
                m = m.times(Mono::of(Key::jet(rng.below(2) ? DepV : DepU, mu)));
            }
            p += Poly::mono(m, rng.small_rational() + 1);
        }
        Dir d = static_cast<Dir>(rng.below(4));
        Poly div = total_derivative(d, p, 10);
        CHECK(euler(div, DepU).is_zero());
        CHECK(euler(div, DepV).is_zero());
    }
}

TEST_CASE("homotopy lagrangian weights")
{
    Poly F = Poly::var(Pa13) * u({DT, DT});
    CHECK(homotopy_lagrangian(F) ==
          Poly::var(Key::jet(DepU, Multi{})) * F * rat(1, 2));

    // degree-3 block gets weight u/4
    Poly blockA1 = coeff_block(La1);
    CHECK(homotopy_lagrangian(blockA1) ==
          Poly::var(Key::jet(DepU, Multi{})) * blockA1 * rat(1, 4));

    Poly constF = Poly::var(Pc24);
    CHECK(homotopy_lagrangian(constF) == Poly::var(Pc24) * Poly::var(Key::jet(DepU, Multi{})));
}

TEST_CASE("lagrangian roundtrip: euler(homotopy(F)) == F for the symbolic family")
{
    Poly F = build_F(CoeffVector::symbolic());
    Poly L = homotopy_lagrangian(F);
    CHECK(euler(L, DepU) == F);
}

TEST_CASE("lagrangian roundtrip holds per coefficient")
{
    for (int i = 0; i < CoeffCount; ++i) {
        CoeffVector cs;
        cs.set(static_cast<CoeffLabel>(i), 1);
        Poly F = build_F(cs);
        CHECK(euler(homotopy_lagrangian(F), DepU) == F);
    }
}

TEST_CASE("two-component lagrangian: a13 only")
{
    CoeffVector cs;
    cs.set(La13, 1);
    Poly L2 = two_component_lagrangian(cs);
    Poly expect = u({DT}) * v({}) - v({}) * v({}) * rat(1, 2);
    CHECK(L2 == expect);
    CHECK(euler(L2, DepV) == u({DT}) - v({}));
}

TEST_CASE("two-component lagrangian contracts (full symbolic)")
{
    CoeffVector cs = CoeffVector::symbolic();
    Poly L2 = two_component_lagrangian(cs);
    MASystem sys = build_two_component(cs);
    // euler over v gives (u_t - v) * Delta
    CHECK(euler(L2, DepV) == (u({DT}) - v({})) * sys.Delta);

    // both Euler expressions vanish on solutions of the two-component system
    Shell sh = sys.two_component_shell(8);
    CHECK(sh.reduce(euler(L2, DepV)).is_zero());
    CHECK(sh.reduce(euler(L2, DepU, 8)).is_zero());
}
