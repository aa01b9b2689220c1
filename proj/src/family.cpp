#include "ma/family.hpp"

#include <mutex>

namespace ma {

namespace {

Poly U(Dir a, Dir b) { return Poly::var(Key::jet(DepU, Multi::of({a, b}))); }
Poly U1(Dir a) { return Poly::var(Key::jet(DepU, Multi::of({a}))); }
Poly minor2(Dir a1, Dir b1, Dir a2, Dir b2) { return U(a1, b1) * U(a2, b2); }

// 2x2 minors of the Hessian in z-indices
Poly M(Dir i, Dir j, Dir k, Dir l) { return U(i, j) * U(k, l) - U(i, k) * U(j, l); }

std::array<Poly, CoeffCount> make_blocks()
{
    std::array<Poly, CoeffCount> B;
    Poly utt = U(DT, DT);
    auto ut = [](Dir i) { return U(DT, i); };

    B[La1] = utt * (U(D1, D1) * U(D2, D2) - U(D1, D2) * U(D1, D2)) -
             ut(D1) * (ut(D1) * U(D2, D2) - ut(D2) * U(D1, D2)) +
             ut(D2) * (ut(D1) * U(D1, D2) - ut(D2) * U(D1, D1));
    B[La2] = utt * (U(D1, D1) * U(D3, D3) - U(D1, D3) * U(D1, D3)) -
             ut(D1) * (ut(D1) * U(D3, D3) - ut(D3) * U(D1, D3)) +
             ut(D3) * (ut(D1) * U(D1, D3) - ut(D3) * U(D1, D1));
    B[La3] = utt * (U(D2, D2) * U(D3, D3) - U(D2, D3) * U(D2, D3)) -
             ut(D2) * (ut(D2) * U(D3, D3) - ut(D3) * U(D2, D3)) +
             ut(D3) * (ut(D2) * U(D2, D3) - ut(D3) * U(D2, D2));
    B[La4] = utt * (U(D1, D1) * U(D2, D3) - U(D1, D2) * U(D1, D3)) -
             ut(D1) * (ut(D1) * U(D2, D3) - ut(D2) * U(D1, D3)) +
             ut(D3) * (ut(D1) * U(D1, D2) - ut(D2) * U(D1, D1));
    B[La5] = utt * (U(D1, D2) * U(D2, D3) - U(D1, D3) * U(D2, D2)) -
             ut(D1) * (ut(D2) * U(D2, D3) - ut(D3) * U(D2, D2)) +
             ut(D2) * (ut(D2) * U(D1, D3) - ut(D3) * U(D1, D2));
    B[La6] = utt * (U(D1, D2) * U(D3, D3) - U(D1, D3) * U(D2, D3)) -
             ut(D2) * (ut(D1) * U(D3, D3) - ut(D3) * U(D1, D3)) +
             ut(D3) * (ut(D1) * U(D2, D3) - ut(D3) * U(D1, D2));
    B[La7] = utt * U(D1, D1) - ut(D1) * ut(D1);
    B[La8] = utt * U(D1, D2) - ut(D1) * ut(D2);
    B[La9] = utt * U(D1, D3) - ut(D1) * ut(D3);
    B[La10] = utt * U(D2, D2) - ut(D2) * ut(D2);
    B[La11] = utt * U(D2, D3) - ut(D2) * ut(D3);
    B[La12] = utt * U(D3, D3) - ut(D3) * ut(D3);
    B[La13] = utt;

    B[Lb1] = ut(D1) * (U(D1, D2) * U(D2, D3) - U(D1, D3) * U(D2, D2)) -
             ut(D2) * (U(D1, D1) * U(D2, D3) - U(D1, D2) * U(D1, D3)) +
             ut(D3) * (U(D1, D1) * U(D2, D2) - U(D1, D2) * U(D1, D2));
    B[Lb2] = ut(D1) * (U(D1, D2) * U(D3, D3) - U(D1, D3) * U(D2, D3)) -
             ut(D2) * (U(D1, D1) * U(D3, D3) - U(D1, D3) * U(D1, D3)) +
             ut(D3) * (U(D1, D1) * U(D2, D3) - U(D1, D2) * U(D1, D3));
    B[Lb3] = ut(D1) * (U(D2, D2) * U(D3, D3) - U(D2, D3) * U(D2, D3)) -
             ut(D2) * (U(D1, D2) * U(D3, D3) - U(D1, D3) * U(D2, D3)) +
             ut(D3) * (U(D1, D2) * U(D2, D3) - U(D1, D3) * U(D2, D2));
    B[Lb4] = U(D1, D1) * (U(D2, D2) * U(D3, D3) - U(D2, D3) * U(D2, D3)) -
             U(D1, D2) * (U(D1, D2) * U(D3, D3) - U(D1, D3) * U(D2, D3)) +
             U(D1, D3) * (U(D1, D2) * U(D2, D3) - U(D1, D3) * U(D2, D2));

    B[Lc1] = ut(D1) * U(D1, D2) - ut(D2) * U(D1, D1);
    B[Lc2] = ut(D1) * U(D1, D3) - ut(D3) * U(D1, D1);
    B[Lc3] = ut(D1) * U(D2, D2) - ut(D2) * U(D1, D2);
    B[Lc4] = ut(D1) * U(D2, D3) - ut(D2) * U(D1, D3);
    B[Lc5] = ut(D2) * U(D2, D3) - ut(D3) * U(D2, D2);
    B[Lc6] = ut(D1) * U(D3, D3) - ut(D3) * U(D1, D3);
    B[Lc7] = ut(D2) * U(D3, D3) - ut(D3) * U(D2, D3);
    B[Lc8] = ut(D2) * U(D1, D3) - ut(D3) * U(D1, D2);
    B[Lc8p] = ut(D1) * U(D2, D3) - ut(D3) * U(D1, D2);
    B[Lc9] = U(D1, D1) * U(D2, D3) - U(D1, D2) * U(D1, D3);
    B[Lc10] = U(D1, D2) * U(D2, D3) - U(D1, D3) * U(D2, D2);
    B[Lc11] = U(D1, D2) * U(D3, D3) - U(D1, D3) * U(D2, D3);
    B[Lc12] = U(D1, D1) * U(D2, D2) - U(D1, D2) * U(D1, D2);
    B[Lc13] = U(D1, D1) * U(D3, D3) - U(D1, D3) * U(D1, D3);
    B[Lc14] = U(D2, D2) * U(D3, D3) - U(D2, D3) * U(D2, D3);
    B[Lc15] = ut(D1);
    B[Lc16] = ut(D2);
    B[Lc17] = ut(D3);
    B[Lc18] = U(D1, D1);
    B[Lc19] = U(D1, D2);
    B[Lc20] = U(D1, D3);
    B[Lc21] = U(D2, D2);
    B[Lc22] = U(D2, D3);
    B[Lc23] = U(D3, D3);
    B[Lc24] = Poly(1);
    return B;
}

const std::array<Poly, CoeffCount>& blocks()
{
    static const std::array<Poly, CoeffCount> B = make_blocks();
    return B;
}

} // namespace

const char* coeff_name(CoeffLabel l)
{
    static const char* names[CoeffCount] = {
        "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "a10", "a11", "a12", "a13",
        "b1", "b2", "b3", "b4",
        "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c11", "c12", "c13",
        "c14", "c15", "c16", "c17", "c18", "c19", "c20", "c21", "c22", "c23", "c24",
        "c8p",
    };
    return names[l];
}

CoeffLabel coeff_by_name(const std::string& name)
{
    for (int i = 0; i < CoeffCount; ++i)
        if (name == coeff_name(static_cast<CoeffLabel>(i))) return static_cast<CoeffLabel>(i);
    if (name == "c8'") return Lc8p;
    throw Error(ErrorCode::UnknownName, "coefficient '" + name + "'");
}

Param coeff_param(CoeffLabel l) { return param_by_name(coeff_name(l)); }

CoeffVector CoeffVector::symbolic()
{
    CoeffVector c;
    for (int i = 0; i < CoeffCount; ++i) c.set_symbolic(static_cast<CoeffLabel>(i));
    return c;
}

std::vector<CoeffLabel> CoeffVector::nonzero_labels() const
{
    std::vector<CoeffLabel> out;
    for (int i = 0; i < CoeffCount; ++i)
        if (!values_[i].is_zero()) out.push_back(static_cast<CoeffLabel>(i));
    return out;
}

const Poly& coeff_block(CoeffLabel l) { return blocks()[l]; }

Poly build_F(const CoeffVector& coeffs)
{
    Poly F;
    for (int i = 0; i < CoeffCount; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        if (!coeffs[l].is_zero()) F += coeffs[l] * coeff_block(l);
    }
    return F;
}

std::pair<Poly, Poly> split_f_g(const Poly& F)
{
    Key utt = key_u({DT, DT});
    if (F.degree_in(utt) > 1)
        throw Error(ErrorCode::NotAffineInUtt, "degree in u_tt is " + std::to_string(F.degree_in(utt)));
    Poly g = -F.partial(utt);
    Poly f = F + Poly::var(utt) * g;
    if (f.depends_on(utt) || g.depends_on(utt))
        throw Error(ErrorCode::Internal, "split left u_tt behind");
    return {f, g};
}

Poly delta_part(CoeffLabel l) { return coeff_block(l).partial(key_u({DT, DT})); }

Poly q_part(CoeffLabel l)
{
    Poly b = coeff_block(l);
    b = b.subst(key_u({DT, DT}), Poly::var(Pw));
    for (Dir d : {D1, D2, D3})
        b = b.subst(key_u({DT, d}), Poly::var(Key::jet(DepV, Multi::of({d}))));
    // b == w * deltaPart - qPart
    Poly q = -(b - Poly::var(Pw) * delta_part(l));
    if (q.depends_on(Key::param(Pw)))
        throw Error(ErrorCode::Internal, "q part depends on substitution symbol");
    return q;
}

MASystem build_system(const CoeffVector& coeffs)
{
    MASystem sys;
    sys.coeffs = coeffs;
    sys.F = build_F(coeffs);
    auto [f, g] = split_f_g(sys.F);
    sys.f = f;
    sys.g = g;
    sys.Delta = -g;
    Poly q;
    for (int i = 0; i < CoeffCount; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        sys.qParts[l] = q_part(l);
        if (!coeffs[l].is_zero()) q += coeffs[l] * sys.qParts[l];
    }
    sys.q = q;
    return sys;
}

MASystem build_two_component(const CoeffVector& coeffs)
{
    bool hasA = false;
    for (int i = La1; i <= La13; ++i)
        if (!coeffs[static_cast<CoeffLabel>(i)].is_zero()) hasA = true;
    if (!hasA)
        throw Error(ErrorCode::DeltaZero, "two-component split needs a nonzero a-coefficient");
    MASystem sys = build_system(coeffs);

    // substitution identity: F[u_tt->w, u_ti->v_i] == w*Delta - q
    Poly sub = sys.F.subst(key_u({DT, DT}), Poly::var(Pw));
    for (Dir d : {D1, D2, D3})
        sub = sub.subst(key_u({DT, d}), Poly::var(Key::jet(DepV, Multi::of({d}))));
    if (!(sub - (Poly::var(Pw) * sys.Delta - sys.q)).is_zero())
        throw Error(ErrorCode::Internal, "substitution identity violated");
    return sys;
}

Shell MASystem::one_component_shell(int maxOrder) const
{
    return Shell::one_component(RatFn(f, g), maxOrder);
}

Shell MASystem::two_component_shell(int maxOrder) const
{
    return Shell::two_component(RatFn(q, Delta), maxOrder);
}

std::vector<RatFn> MASystem::nonvanishing_fns(bool twoComponent) const
{
    std::vector<RatFn> fns;
    fns.push_back(RatFn(Delta));
    Shell sh = twoComponent ? two_component_shell() : one_component_shell();
    for (Key k : nonvanishing) {
        RatFn f = sh.is_constrained(k) ? sh.reduced(k) : RatFn::var(k);
        fns.push_back(f);
    }
    return fns;
}

Poly two_component_lagrangian(const CoeffVector& coeffs)
{
    Poly u = Poly::var(Key::jet(DepU, Multi{}));
    Poly ut = Poly::var(Key::jet(DepU, Multi::of({DT})));
    Poly v = Poly::var(Key::jet(DepV, Multi{}));
    auto u1 = [](Dir d) { return Poly::var(Key::jet(DepU, Multi::of({d}))); };

    Poly deltaPoly;
    for (int i = La1; i <= La13; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        if (!coeffs[l].is_zero()) deltaPoly += coeffs[l] * delta_part(l);
    }
    Poly L = (ut * v - v * v * rat(1, 2)) * deltaPoly;

    // b1..b3 blocks carry first-order jets u_i in place of u_ti
    auto bblock = [&](CoeffLabel l) {
        Poly b = coeff_block(l);
        for (Dir d : {D1, D2, D3}) b = b.subst(key_u({DT, d}), u1(d));
        return b;
    };
    for (CoeffLabel l : {Lb1, Lb2, Lb3})
        if (!coeffs[l].is_zero()) L += coeffs[l] * bblock(l) * ut * rat(1, 4);
    if (!coeffs[Lb4].is_zero()) L -= coeffs[Lb4] * coeff_block(Lb4) * u * rat(1, 4);

    for (CoeffLabel l : {Lc1, Lc2, Lc3, Lc4, Lc5, Lc6, Lc7, Lc8, Lc8p})
        if (!coeffs[l].is_zero()) L += coeffs[l] * bblock(l) * ut * rat(1, 3);
    for (CoeffLabel l : {Lc9, Lc10, Lc11, Lc12, Lc13, Lc14})
        if (!coeffs[l].is_zero()) L -= coeffs[l] * coeff_block(l) * u * rat(1, 3);

    for (auto [l, d] : std::initializer_list<std::pair<CoeffLabel, Dir>>{
             {Lc15, D1}, {Lc16, D2}, {Lc17, D3}})
        if (!coeffs[l].is_zero()) L += coeffs[l] * u1(d) * ut * rat(1, 2);
    for (CoeffLabel l : {Lc18, Lc19, Lc20, Lc21, Lc22, Lc23})
        if (!coeffs[l].is_zero()) L -= coeffs[l] * coeff_block(l) * u * rat(1, 2);
    if (!coeffs[Lc24].is_zero()) L -= coeffs[Lc24] * u;
    return L;
}

} // namespace ma
