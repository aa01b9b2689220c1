#ifndef MA_ONSHELL_HPP
#define MA_ONSHELL_HPP

#include <map>

#include "ma/ratfn.hpp"

namespace ma {

/// Shell relations of an equation, used for on-shell reduction and for
/// constructing random on-shell jet points.
///
/// One-component mode eliminates every u-jet carrying at least two t indices
/// through u_tt = f/g and its prolongations. Two-component mode first renames
/// u_{tJ} -> v_J and then eliminates v_{tJ} through v_t = q/Delta.
///
/// The reduction cache is per-instance and not synchronized; share const
/// instances across threads only after warm-up or keep one per thread.
class Shell {
public:
    enum class Mode { OneComponent, TwoComponent };

    static Shell one_component(RatFn utt, int maxOrder = 6)
    {
        Shell s;
        s.mode_ = Mode::OneComponent;
        s.rhs_ = std::move(utt);
        s.maxOrder_ = maxOrder;
        return s;
    }
    static Shell two_component(RatFn vt, int maxOrder = 6)
    {
        Shell s;
        s.mode_ = Mode::TwoComponent;
        s.rhs_ = std::move(vt);
        s.maxOrder_ = maxOrder;
        return s;
    }

    Mode mode() const { return mode_; }
    int max_order() const { return maxOrder_; }
    /// f/g in one-component mode, q/Delta in two-component mode.
    const RatFn& rhs() const { return rhs_; }

    /// True when the key is eliminated on shell.
    bool is_constrained(Key k) const;
    /// Fully reduced value of a constrained key.
    const RatFn& reduced(Key k) const;

    RatFn reduce(const RatFn& x) const;
    RatFn reduce(const Poly& x) const { return reduce(RatFn(x)); }

private:
    Mode mode_ = Mode::OneComponent;
    RatFn rhs_;
    int maxOrder_ = 6;
    mutable std::map<Key, RatFn> cache_;
};

} // namespace ma

#endif
