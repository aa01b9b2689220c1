#include "ma/variational.hpp"

#include <algorithm>

namespace ma {

LinOp frechet(const Poly& F, Dep var)
{
    LinOp op;
    for (Key k : F.support()) {
        if (!k.is_jet() || k.dep() != var) continue;
        Poly d = F.partial(k);
        if (!d.is_zero()) op += LinOp::atom(RatFn(d), k.multi());
    }
    return op;
}

HelmholtzReport helmholtz_check(const Poly& F)
{
    LinOp d = frechet(F, DepU);
    LinOp diff = d.adjoint() - d;
    HelmholtzReport rep;
    LinOp leftover = diff;
    const Multi groups[5] = {Multi::of({DT}), Multi::of({D1}), Multi::of({D2}), Multi::of({D3}),
                             Multi{}};
    for (int g = 0; g < 5; ++g) {
        RatFn c = diff.coefficient(groups[g]);
        rep.residuals[g] = c.is_zero() ? Poly() : c.as_polynomial();
        leftover -= LinOp::atom(c, groups[g]);
    }
    rep.other = leftover;
    rep.selfAdjoint = leftover.is_zero() && std::all_of(rep.residuals.begin(), rep.residuals.end(),
                                                        [](const Poly& p) { return p.is_zero(); });
    return rep;
}

Poly euler(const Poly& L, Dep var, int maxOrder)
{
    Poly r;
    for (Key k : L.support()) {
        if (!k.is_jet() || k.dep() != var) continue;
        Poly d = L.partial(k);
        if (d.is_zero()) continue;
        Poly dj = total_derivative(k.multi(), d, maxOrder);
        r += (k.multi().order() % 2 == 0) ? dj : -dj;
    }
    return r;
}

bool divergence_test(const Poly& p, std::vector<Dep> dependents)
{
    if (dependents.empty()) {
        bool present[kNumDeps] = {};
        for (Key k : p.support())
            if (k.is_jet()) present[k.dep()] = true;
        for (int d = 0; d < kNumDeps; ++d)
            if (present[d]) dependents.push_back(static_cast<Dep>(d));
    }
    for (Dep d : dependents)
        if (!euler(p, d).is_zero()) return false;
    return true;
}

Poly homotopy_lagrangian(const Poly& F)
{
    Poly L;
    Poly u = Poly::var(Key::jet(DepU, Multi{}));
    for (auto& t : F.terms()) {
        int d = t.m.jet_degree();
        L += u * Poly::mono(t.m, t.c / Rat(d + 1));
    }
    return L;
}

} // namespace ma
