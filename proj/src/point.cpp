#include "ma/point.hpp"

namespace ma {

Rat JetPoint::value(Key k) const
{
    if (auto it = values_.find(k); it != values_.end()) return it->second;
    if (auto it = derived_.find(k); it != derived_.end()) return it->second;
    if (shell_ && shell_->is_constrained(k)) {
        const RatFn& red = shell_->reduced(k);
        Rat v = evaluate(red, *this);
        return derived_.emplace(k, std::move(v)).first->second;
    }
    throw Error(ErrorCode::MissingAssignment, "no value for " + k.str());
}

Rat evaluate(const Poly& p, const JetPoint& pt)
{
    Rat sum(0);
    for (auto& t : p.terms()) {
        Rat prod = t.c;
        for (auto& [k, e] : t.m.factors) {
            Rat v = pt.value(k);
            for (int i = 0; i < e; ++i) prod *= v;
        }
        sum += prod;
    }
    return sum;
}

Rat evaluate(const RatFn& f, const JetPoint& pt)
{
    Rat d = evaluate(f.den(), pt);
    if (d == 0) throw Error(ErrorCode::ZeroDenominator, "denominator vanishes at point");
    return evaluate(f.num(), pt) / d;
}

namespace {

std::vector<Multi> multis_up_to(int maxOrder, int maxT)
{
    std::vector<Multi> out;
    for (int ct = 0; ct <= maxT; ++ct)
        for (int c1 = 0; c1 + ct <= maxOrder; ++c1)
            for (int c2 = 0; c1 + c2 + ct <= maxOrder; ++c2)
                for (int c3 = 0; c1 + c2 + c3 + ct <= maxOrder; ++c3) {
                    Multi m;
                    for (int i = 0; i < ct; ++i) m = m.plus(DT);
                    for (int i = 0; i < c1; ++i) m = m.plus(D1);
                    for (int i = 0; i < c2; ++i) m = m.plus(D2);
                    for (int i = 0; i < c3; ++i) m = m.plus(D3);
                    out.push_back(m);
                }
    return out;
}

void assign_all(JetPoint& pt, Rng& rng, const Shell* shell, int maxOrder)
{
    for (int p = 0; p < ParamCount; ++p)
        pt.assign(Key::param(static_cast<Param>(p)), rng.small_rational());
    if (!shell) {
        for (Multi m : multis_up_to(maxOrder, maxOrder)) {
            pt.assign(Key::jet(DepU, m), rng.small_rational());
            pt.assign(Key::jet(DepV, m), rng.small_rational());
        }
        return;
    }
    if (shell->mode() == Shell::Mode::OneComponent) {
        for (Multi m : multis_up_to(maxOrder, 1)) pt.assign(Key::jet(DepU, m), rng.small_rational());
    } else {
        for (Multi m : multis_up_to(maxOrder, 0)) {
            pt.assign(Key::jet(DepU, m), rng.small_rational());
            pt.assign(Key::jet(DepV, m), rng.small_rational());
        }
    }
}

} // namespace

JetPoint random_on_shell_point(const Shell& shell, uint64_t seed,
                               const std::vector<RatFn>& nonvanishing, int maxAttempts)
{
    for (int attempt = 0; attempt < maxAttempts; ++attempt) {
        Rng rng(seed + 0x51ed2701u * static_cast<uint64_t>(attempt));
        JetPoint pt(&shell);
        pt.seed = seed;
        assign_all(pt, rng, &shell, shell.max_order());
        try {
            bool ok = true;
            for (auto& f : nonvanishing)
                if (evaluate(f, pt) == 0) {
                    ok = false;
                    break;
                }
            // the defining right-hand side must itself be well-defined
            if (ok) (void)evaluate(shell.rhs(), pt);
            if (ok) return pt;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ZeroDenominator) throw;
        }
    }
    throw Error(ErrorCode::RetryExhausted, "no nondegenerate point found");
}

JetPoint random_point(uint64_t seed, int maxOrder)
{
    Rng rng(seed);
    JetPoint pt;
    pt.seed = seed;
    assign_all(pt, rng, nullptr, maxOrder);
    return pt;
}

} // namespace ma
