#include "ma/onshell.hpp"

namespace ma {

bool Shell::is_constrained(Key k) const
{
    if (!k.is_jet()) return false;
    int tc = k.multi().count(DT);
    if (mode_ == Mode::OneComponent) return k.dep() == DepU && tc >= 2;
    return (k.dep() == DepU || k.dep() == DepV) && tc >= 1;
}

const RatFn& Shell::reduced(Key k) const
{
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    if (!is_constrained(k)) throw Error(ErrorCode::Internal, "reduced() on free key " + k.str());

    RatFn value;
    Multi m = k.multi();
    if (mode_ == Mode::TwoComponent && k.dep() == DepU) {
        // u_{tJ} -> v_J with one t removed
        value = RatFn::var(Key::jet(DepV, m.minus(DT)));
        value = reduce(value);
    } else {
        // strip the defining t-block and prolong the right-hand side
        Multi rest = m.minus(DT);
        if (mode_ == Mode::OneComponent) rest = rest.minus(DT);
        value = reduce(total_derivative(rest, rhs_, maxOrder_));
    }
    return cache_.emplace(k, std::move(value)).first->second;
}

RatFn Shell::reduce(const RatFn& x) const
{
    RatFn cur = x;
    for (;;) {
        Key bad{};
        bool found = false;
        int bestT = 0, bestO = 0;
        auto scan = [&](const Poly& p) {
            for (auto& t : p.terms())
                for (auto& [k, e] : t.m.factors)
                    if (is_constrained(k)) {
                        int tc = k.multi().count(DT), o = k.order();
                        // innermost-first: prefer the smallest (t-count, order)
                        if (!found || tc < bestT || (tc == bestT && o < bestO)) {
                            bad = k;
                            bestT = tc;
                            bestO = o;
                            found = true;
                        }
                    }
        };
        scan(cur.num());
        scan(cur.den());
        if (!found) return cur;
        const RatFn& val = reduced(bad);
        RatFn n = subst(cur.num(), bad, val);
        RatFn d = subst(cur.den(), bad, val);
        cur = n / d;
    }
}

} // namespace ma
