#include "ma/integrability.hpp"

#include <map>

#include "ma/point.hpp"
#include "ma/variational.hpp"

namespace ma {

namespace {

RatFn inv_u(Dir a, Dir b) { return RatFn(Poly(1), Poly::var(key_u({a, b}))); }
RatFn cf(Param p) { return RatFn(Poly::var(p)); }

LinOp Lx(Dir i, Dir j, Dir k) { return build_L(i, j, k); }
LinOp Dx(Dir d) { return LinOp::deriv(d); }

std::string residual_summary(const LinOp& op, size_t maxTerms = 3)
{
    if (op.is_zero()) return "";
    std::string s;
    size_t n = 0;
    for (auto& [m, c] : op.atoms()) {
        if (n++ == maxTerms) {
            s += ", ...";
            break;
        }
        if (!s.empty()) s += ", ";
        std::string ds = "D";
        for (Dir d : kAllDirs)
            for (int i = 0; i < m.count(d); ++i) ds += dir_char(d);
        s += (m == Multi{} ? std::string("1") : ds) + ": " + c.str();
    }
    return s;
}

CheckVerdict verdict_of(const Shell& sh, const LinOp& op)
{
    CheckVerdict v;
    if (op.is_zero()) {
        v.pass = v.identical = true;
        return v;
    }
    LinOp red = reduce_op(sh, op);
    v.pass = red.is_zero();
    if (!v.pass) v.residual = residual_summary(red);
    return v;
}

bool numeric_zero(const LinOp& op, const Shell& sh, const std::vector<RatFn>& nonvanishing,
                  uint64_t seed, int points)
{
    for (int i = 0; i < points; ++i) {
        JetPoint pt = random_on_shell_point(sh, seed + 7919 * static_cast<uint64_t>(i), nonvanishing);
        for (auto& [m, c] : op.atoms())
            if (evaluate(c, pt) != 0) return false;
    }
    return true;
}

} // namespace

MASystem CatalogEntry::system() const
{
    MASystem sys = build_system(coeffs);
    sys.nonvanishing = sf.requiredNonvanishing;
    return sys;
}

LinOp build_symmetry_operator(const CoeffVector& coeffs)
{
    for (CoeffLabel l : {La1, La2, La3, La4, La5, La6, Lb1, Lb2, Lb3, Lb4})
        if (!coeffs[l].is_zero())
            throw Error(ErrorCode::OutsideSubfamily,
                        std::string("coefficient ") + coeff_name(l) + " outside the quadratic subfamily");

    struct LTerm {
        CoeffLabel l;
        Dir i, j, k1;
        Dir d1;
        Dir k2;
        Dir d2;
    };
    static const LTerm lterms[] = {
        {La7, DT, D1, D1, DT, DT, D1},  {La8, DT, D1, D2, DT, DT, D2},
        {La9, DT, D1, D3, DT, DT, D3},  {La10, DT, D2, D2, DT, DT, D2},
        {La11, DT, D2, D3, DT, DT, D3}, {La12, DT, D3, D3, DT, DT, D3},
        {Lc1, D1, D2, D1, DT, DT, D1},  {Lc2, D1, D3, D1, DT, DT, D1},
        {Lc3, D1, D2, D2, DT, DT, D2},  {Lc4, D1, D2, D3, DT, DT, D3},
        {Lc5, D2, D3, D2, DT, DT, D2},  {Lc6, D1, D3, D3, DT, DT, D3},
        {Lc7, D2, D3, D3, DT, DT, D3},  {Lc8, D2, D3, D1, DT, DT, D1},
        {Lc8p, D1, D3, D2, DT, DT, D2}, {Lc9, D1, D2, D3, D1, D1, D3},
        {Lc10, D2, D3, D2, D1, D1, D2}, {Lc11, D2, D3, D3, D1, D1, D3},
        {Lc12, D1, D2, D2, D1, D1, D2}, {Lc13, D1, D3, D3, D1, D1, D3},
        {Lc14, D2, D3, D3, D2, D2, D3},
    };
    LinOp S;
    for (auto& t : lterms)
        if (!coeffs[t.l].is_zero())
            S += (Lx(t.i, t.j, t.k1) * Dx(t.d1) - Lx(t.i, t.j, t.k2) * Dx(t.d2))
                     .scaled(RatFn(coeffs[t.l]));

    struct DTerm {
        CoeffLabel l;
        Dir a, b;
    };
    static const DTerm dterms[] = {
        {La13, DT, DT}, {Lc15, DT, D1}, {Lc16, DT, D2}, {Lc17, DT, D3}, {Lc18, D1, D1},
        {Lc19, D1, D2}, {Lc20, D1, D3}, {Lc21, D2, D2}, {Lc22, D2, D3}, {Lc23, D3, D3},
    };
    for (auto& t : dterms)
        if (!coeffs[t.l].is_zero())
            S += LinOp::deriv(Multi::of({t.a, t.b})).scaled(RatFn(coeffs[t.l]));
    return S;
}

LinOp reduce_op(const Shell& sh, const LinOp& op)
{
    LinOp out;
    for (auto& [m, c] : op.atoms()) out += LinOp::atom(sh.reduce(c), m);
    return out;
}

SkewReport check_skew_factorization(const CatalogEntry& entry, uint64_t seed, int points)
{
    const SkewFactorization& sf = entry.sf;
    MASystem sys = entry.system();
    Shell sh = sys.one_component_shell(8);

    SkewReport rep;
    LinOp cAA = commutator(sf.A1, sf.A2);
    LinOp cBB = commutator(sf.B1, sf.B2);
    LinOp cross = commutator(sf.A1, sf.B2) - commutator(sf.A2, sf.B1);
    rep.commAA = verdict_of(sh, cAA);
    rep.commBB = verdict_of(sh, cBB);
    rep.cross = verdict_of(sh, cross);

    LinOp S = frechet(sys.F, DepU);
    LinOp fact = (sf.A1 * sf.B2 - sf.A2 * sf.B1).scaled(sf.mu.inverse()) - S;
    rep.factorized = verdict_of(sh, fact);

    auto nv = sys.nonvanishing_fns(false);
    rep.numeric = numeric_zero(cAA, sh, nv, seed, points) &&
                  numeric_zero(cBB, sh, nv, seed + 1, points) &&
                  numeric_zero(cross, sh, nv, seed + 2, points) &&
                  numeric_zero(fact, sh, nv, seed + 3, points);
    return rep;
}

LaxPair build_lax(const SkewFactorization& sf)
{
    RatFn lambda = cf(Plambda);
    return {sf.A1.scaled(lambda) + sf.B1, sf.A2.scaled(lambda) + sf.B2};
}

LaxReport check_lax(const LaxPair& lax, const CatalogEntry& entry, uint64_t seed, int points)
{
    MASystem sys = entry.system();
    Shell sh = sys.one_component_shell(8);
    LinOp C = commutator(lax.X1, lax.X2);

    Key lk = Key::param(Plambda);
    LinOp byDeg[3];
    for (auto& [m, c] : C.atoms()) {
        if (c.den().depends_on(lk))
            throw Error(ErrorCode::Internal, "lambda in a denominator of [X1,X2]");
        for (int d = 0; d <= 2; ++d) {
            Poly cd;
            for (auto& t : c.num().terms())
                if (t.m.exponent(lk) == d)
                    cd += Poly::mono(*t.m.divide(Mono::of(lk, d)), t.c);
            if (!cd.is_zero()) byDeg[d] += LinOp::atom(RatFn(cd, c.den()), m);
        }
    }

    LaxReport rep;
    rep.deg2 = verdict_of(sh, byDeg[2]);
    rep.deg1 = verdict_of(sh, byDeg[1]);
    rep.deg0 = verdict_of(sh, byDeg[0]);
    auto nv = sys.nonvanishing_fns(false);
    rep.numeric = numeric_zero(byDeg[2], sh, nv, seed, points) &&
                  numeric_zero(byDeg[1], sh, nv, seed + 1, points) &&
                  numeric_zero(byDeg[0], sh, nv, seed + 2, points);
    return rep;
}

RecursionRelations recursion_relations(const SkewFactorization& sf)
{
    RecursionRelations rr;
    rr.rel1 = "(" + sf.A1.str() + ")[phit] = (" + sf.B1.str() + ")[phi]";
    rr.rel2 = "(" + sf.A2.str() + ")[phit] = (" + sf.B2.str() + ")[phi]";
    rr.sf = &sf;
    return rr;
}

bool RecursionRelations::compatible(const CatalogEntry& entry, const RatFn& phi) const
{
    MASystem sys = entry.system();
    Shell sh = sys.one_component_shell(8);
    LinOp S = frechet(sys.F, DepU);
    if (!sh.reduce(S.apply(phi, 8)).is_zero()) return true; // not a symmetry: vacuous
    RatFn r = (sf->A1 * sf->B2 - sf->A2 * sf->B1).apply(phi, 8);
    return sh.reduce(r).is_zero();
}

std::vector<std::string> catalog_names()
{
    return {"second-heavenly", "first-heavenly", "modified-heavenly", "husain",
            "general-heavenly", "E1", "E2", "E3", "E4", "E5", "E1-perm12"};
}

CatalogEntry catalog(const std::string& name)
{
    CatalogEntry e;
    e.name = name;
    if (name == "second-heavenly") {
        // u_tt u_11 - u_t1^2 + u_t2 + u_13 = 0 (the displayed u_t3 is a typo
        // for u_13; with u_t3 the printed factorization fails on shell)
        e.coeffs.set(La7, 1).set(Lc16, 1).set(Lc20, 1);
        e.sf = {Dx(DT), Dx(D1), Lx(DT, D1, DT) - Dx(D3), Lx(DT, D1, D1) + Dx(D2), RatFn(1L), {}};
        e.paperTag = "second heavenly; equation display corrected to u_13";
    } else if (name == "first-heavenly") {
        // (u_tt - u_11) u_23 - (u_t3 + u_13)(u_t2 - u_12) = 1
        e.coeffs.set(La11, 1).set(Lc8, -1).set(Lc9, -1).set(Lc24, -1);
        // A2 carries the opposite sign of the display; as printed the cross
        // commutator condition fails off shell and on shell
        e.sf = {Dx(DT) - Dx(D1), Dx(D3), Lx(DT, D2, DT) - Lx(D1, D2, D1) - Lx(DT, D1, D2),
                Lx(DT, D2, D3) + Lx(D1, D2, D3), RatFn(1L), {key_u({D2, D3})}};
        e.paperTag = "first heavenly; B1 with L_t1(2) as printed; A2 sign corrected";
    } else if (name == "modified-heavenly") {
        // u_1t u_2t - u_tt u_12 + u_13 = 0
        e.coeffs.set(La8, -1).set(Lc20, 1);
        e.sf = {Dx(DT), Dx(D1), Lx(DT, D2, DT) + Dx(D3), Lx(DT, D2, D1), RatFn(-1L),
                {key_u({D1, D2})}};
        e.paperTag = "modified heavenly";
    } else if (name == "husain") {
        // u_tt + u_11 + u_t2 u_13 - u_t3 u_12 = 0
        e.coeffs.set(La13, 1).set(Lc18, 1).set(Lc8, 1);
        e.sf = {Dx(DT), Dx(D1), Lx(D2, D3, DT) - Dx(D1), Lx(D2, D3, D1) + Dx(DT), RatFn(1L), {}};
        e.paperTag = "Husain equation";
    } else if (name == "general-heavenly") {
        // (beta+gamma)(u_t2 u_t3 - u_tt u_23 + u_11 u_23 - u_12 u_13)
        //   + (gamma-beta)(u_t2 u_13 - u_t3 u_12) = 0
        Poly bg = Poly::var(Pbeta) + Poly::var(Pgamma);
        Poly gb = Poly::var(Pgamma) - Poly::var(Pbeta);
        e.coeffs.set(La11, -bg).set(Lc9, bg).set(Lc8, gb);
        LinOp B1 = (Lx(DT, D3, D2).scaled(RatFn(Poly::var(Pbeta) - Poly::var(Pgamma))) +
                    Lx(D1, D3, D2).scaled(RatFn(bg)))
                       .scaled(inv_u(D2, D3));
        e.sf = {Lx(DT, D2, D3).scaled(inv_u(D2, D3)), Lx(D1, D2, D3).scaled(inv_u(D2, D3)), B1,
                Lx(DT, D3, D2).scaled(inv_u(D2, D3) * RatFn(bg)), -inv_u(D2, D3),
                {key_u({D2, D3})}};
        e.paperTag = "general heavenly, symbolic beta/gamma";
    } else if (name == "E1") {
        e.coeffs.set_symbolic(La11).set_symbolic(Lc4).set_symbolic(Lc5).set_symbolic(Lc8)
            .set_symbolic(Lc9).set_symbolic(Lc10);
        LinOp B1 = (Lx(DT, D3, D2).scaled(cf(Pc4) - cf(Pc8)) + Lx(D1, D3, D2).scaled(cf(Pc9)) +
                    Lx(D2, D3, D2).scaled(cf(Pc10)))
                       .scaled(inv_u(D2, D3));
        LinOp B2 = (Lx(D2, D3, D2).scaled(cf(Pc5)) + Lx(D1, D3, D2).scaled(cf(Pc8)) +
                    Lx(DT, D3, D2).scaled(cf(Pa11)))
                       .scaled(inv_u(D2, D3));
        e.sf = {Lx(DT, D2, D3).scaled(inv_u(D2, D3)), -Lx(D1, D2, D3).scaled(inv_u(D2, D3)), B1, B2,
                inv_u(D2, D3), {key_u({D2, D3})}};
        e.paperTag = "equation (eqi)";
    } else if (name == "E2") {
        e.coeffs.set_symbolic(La11).set_symbolic(Lc4).set_symbolic(Lc7).set_symbolic(Lc8)
            .set_symbolic(Lc9).set_symbolic(Lc11);
        LinOp B1 = (Lx(DT, D2, D3).scaled(cf(Pc8)) + Lx(D1, D2, D3).scaled(cf(Pc9)) +
                    Lx(D2, D3, D3).scaled(cf(Pc11)))
                       .scaled(inv_u(D2, D3));
        LinOp B2 = (Lx(D1, D2, D3).scaled(cf(Pc4) - cf(Pc8)) + Lx(D2, D3, D3).scaled(cf(Pc7)) +
                    Lx(DT, D2, D3).scaled(cf(Pa11)))
                       .scaled(inv_u(D2, D3));
        e.sf = {Lx(DT, D3, D2).scaled(inv_u(D2, D3)), -Lx(D1, D3, D2).scaled(inv_u(D2, D3)), B1, B2,
                inv_u(D2, D3), {key_u({D2, D3})}};
        e.paperTag = "equation (eqii)";
    } else if (name == "E3") {
        e.coeffs.set_symbolic(La8).set_symbolic(La10).set_symbolic(La11).set_symbolic(Lc7)
            .set_symbolic(Lc8);
        LinOp B1 = (Lx(DT, D1, D2).scaled(cf(Pa8)) + Lx(DT, D2, D2).scaled(cf(Pa10)) +
                    Lx(DT, D3, D2).scaled(cf(Pa11)))
                       .scaled(inv_u(DT, D2));
        LinOp B2 = (Lx(DT, D3, D2).scaled(cf(Pc7)) + Lx(DT, D1, D2).scaled(cf(Pc8)))
                       .scaled(inv_u(DT, D2));
        e.sf = {Lx(D2, D3, DT).scaled(inv_u(DT, D2)), -Lx(DT, D2, DT).scaled(inv_u(DT, D2)), B1, B2,
                inv_u(DT, D2), {key_u({DT, D2})}};
        e.paperTag = "equation (eqvii)";
    } else if (name == "E4") {
        e.coeffs.set_symbolic(La12).set_symbolic(Lc5).set_symbolic(Lc6).set_symbolic(Lc7)
            .set_symbolic(Lc8);
        LinOp A2 = (Lx(DT, D2, D3).scaled(cf(Pc5)) + Lx(DT, D1, D3).scaled(cf(Pc8)))
                       .scaled(inv_u(DT, D3));
        LinOp B2 = (Lx(DT, D3, DT).scaled(cf(Pa12)) + Lx(D1, D3, DT).scaled(cf(Pc6)) +
                    Lx(D2, D3, DT).scaled(cf(Pc7)))
                       .scaled(inv_u(DT, D3));
        e.sf = {Lx(DT, D3, D3).scaled(inv_u(DT, D3)), A2, -Lx(D2, D3, DT).scaled(inv_u(DT, D3)), B2,
                inv_u(DT, D3), {key_u({DT, D3})}};
        e.paperTag = "equation (eqviii)";
    } else if (name == "E5") {
        e.coeffs.set_symbolic(La7).set_symbolic(La8).set_symbolic(La9).set_symbolic(Lc1)
            .set_symbolic(Lc3).set_symbolic(Lc4);
        LinOp B1 = (Lx(DT, D1, D1).scaled(cf(Pc1)) + Lx(DT, D2, D1).scaled(cf(Pc3)) +
                    Lx(DT, D3, D1).scaled(cf(Pc4)))
                       .scaled(inv_u(DT, D1));
        LinOp B2 = (Lx(DT, D1, D1).scaled(cf(Pa7)) + Lx(DT, D2, D1).scaled(cf(Pa8)) +
                    Lx(DT, D3, D1).scaled(cf(Pa9)))
                       .scaled(inv_u(DT, D1));
        e.sf = {Lx(DT, D1, DT).scaled(inv_u(DT, D1)), -Lx(D1, D2, DT).scaled(inv_u(DT, D1)), B1, B2,
                inv_u(DT, D1), {key_u({DT, D1})}};
        e.paperTag = "equation (eqx)";
    } else if (name == "E1-perm12") {
        e.coeffs.set_symbolic(La9).set_symbolic(Lc2).set_symbolic(Lc4).set_symbolic(Lc8p)
            .set_symbolic(Lc9).set_symbolic(Lc10);
        LinOp B1 = -(Lx(DT, D3, D1).scaled(cf(Pc4) + cf(Pc8p)) + Lx(D1, D3, D1).scaled(cf(Pc9)) +
                     Lx(D2, D3, D1).scaled(cf(Pc10)))
                        .scaled(inv_u(D1, D3));
        LinOp B2 = (Lx(D1, D3, D1).scaled(cf(Pc2)) + Lx(D2, D3, D1).scaled(cf(Pc8p)) +
                    Lx(DT, D3, D1).scaled(cf(Pa9)))
                       .scaled(inv_u(D1, D3));
        e.sf = {Lx(DT, D1, D3).scaled(inv_u(D1, D3)), Lx(D1, D2, D3).scaled(inv_u(D1, D3)), B1, B2,
                inv_u(D1, D3), {key_u({D1, D3})}};
        e.paperTag = "equation (eqia), the 1<->2 transport of (eqi)";
    } else {
        throw Error(ErrorCode::UnknownName, "catalog entry '" + name + "'");
    }
    return e;
}

IndexPerm make_perm(Dir im1, Dir im2, Dir im3) { return {DT, im1, im2, im3}; }

namespace {

Multi permute_multi(const IndexPerm& p, Multi m)
{
    Multi out;
    for (Dir d : kAllDirs)
        for (int i = 0; i < m.count(d); ++i) out = out.plus(p[d]);
    return out;
}

Key permute_key(const IndexPerm& p, Key k)
{
    if (!k.is_jet()) return k;
    return Key::jet(k.dep(), permute_multi(p, k.multi()));
}

} // namespace

Poly permute_jets(const IndexPerm& p, const Poly& poly)
{
    std::map<Mono, Rat> acc;
    for (auto& t : poly.terms()) {
        Mono m;
        for (auto& [k, e] : t.m.factors) m = m.times(Mono::of(permute_key(p, k), e));
        acc[m] += t.c;
    }
    return Poly::from_map(std::move(acc));
}

RatFn permute_jets(const IndexPerm& p, const RatFn& f)
{
    return RatFn(permute_jets(p, f.num()), permute_jets(p, f.den()));
}

LinOp permute_op(const IndexPerm& p, const LinOp& op)
{
    LinOp out;
    for (auto& [m, c] : op.atoms()) out += LinOp::atom(permute_jets(p, c), permute_multi(p, m));
    return out;
}

CoeffPerm derive_coeff_permutation(const IndexPerm& p)
{
    if (p[DT] != DT) throw Error(ErrorCode::UnsupportedPermutation, "permutation must fix t");
    CoeffPerm cp;
    cp.indexPerm = p;
    for (int i = 0; i < CoeffCount; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        Poly image = permute_jets(p, coeff_block(l));
        bool found = false;
        for (int j = 0; j < CoeffCount && !found; ++j) {
            auto m = static_cast<CoeffLabel>(j);
            if (image == coeff_block(m)) {
                cp.target[l] = m;
                cp.sign[l] = 1;
                found = true;
            } else if (image == -coeff_block(m)) {
                cp.target[l] = m;
                cp.sign[l] = -1;
                found = true;
            }
        }
        if (!found)
            throw Error(ErrorCode::UnsupportedPermutation,
                        std::string("no signed match for block ") + coeff_name(l));
    }
    return cp;
}

Poly CoeffPerm::rename_params(const Poly& p) const
{
    std::map<Mono, Rat> acc;
    for (auto& t : p.terms()) {
        Mono m;
        Rat c = t.c;
        for (auto& [k, e] : t.m.factors) {
            Key nk = k;
            if (k.is_param()) {
                for (int i = 0; i < CoeffCount; ++i) {
                    auto l = static_cast<CoeffLabel>(i);
                    if (k.as_param() == coeff_param(l)) {
                        nk = Key::param(coeff_param(target[l]));
                        if (sign[l] < 0 && (e % 2)) c = -c;
                        break;
                    }
                }
            }
            m = m.times(Mono::of(nk, e));
        }
        acc[m] += c;
    }
    return Poly::from_map(std::move(acc));
}

RatFn CoeffPerm::rename_params(const RatFn& f) const
{
    return RatFn(rename_params(f.num()), rename_params(f.den()));
}

LinOp CoeffPerm::rename_params(const LinOp& op) const
{
    LinOp out;
    for (auto& [m, c] : op.atoms()) out += LinOp::atom(rename_params(c), m);
    return out;
}

CoeffVector apply_permutation(const IndexPerm& p, const CoeffVector& coeffs)
{
    CoeffPerm cp = derive_coeff_permutation(p);
    CoeffVector out;
    for (int i = 0; i < CoeffCount; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        if (coeffs[l].is_zero()) continue;
        Poly v = coeffs[l];
        if (cp.sign[l] < 0) v = -v;
        out.set(cp.target[l], out[cp.target[l]] + v);
    }
    return out;
}

CoeffVector transport_coeffs(const IndexPerm& p, const CoeffVector& coeffs)
{
    CoeffPerm cp = derive_coeff_permutation(p);
    CoeffVector moved = apply_permutation(p, coeffs);
    CoeffVector out;
    for (int i = 0; i < CoeffCount; ++i) {
        auto l = static_cast<CoeffLabel>(i);
        if (!moved[l].is_zero()) out.set(l, cp.rename_params(moved[l]));
    }
    return out;
}

SkewFactorization transport(const IndexPerm& p, const SkewFactorization& sf)
{
    CoeffPerm cp = derive_coeff_permutation(p);
    auto move = [&](const LinOp& op) { return cp.rename_params(permute_op(p, op)); };
    SkewFactorization out;
    out.A1 = move(sf.A1);
    out.A2 = move(sf.A2);
    out.B1 = move(sf.B1);
    out.B2 = move(sf.B2);
    out.mu = cp.rename_params(permute_jets(p, sf.mu));
    for (Key k : sf.requiredNonvanishing)
        out.requiredNonvanishing.push_back(permute_key(p, k));
    return out;
}

} // namespace ma
