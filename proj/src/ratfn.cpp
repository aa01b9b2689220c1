#include "ma/ratfn.hpp"

namespace ma {

RatFn::RatFn(const Poly& num, const Poly& den) : num_(num), den_(den)
{
    if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
    normalize();
}

void RatFn::normalize()
{
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        // cancel common monomial factor
        Mono g = num_.monomial_content();
        Mono h = den_.monomial_content();
        Mono common;
        {
            auto a = g.factors.begin();
            for (auto& [k, e] : h.factors) {
                while (a != g.factors.end() && a->first < k) ++a;
                if (a != g.factors.end() && a->first == k)
                    common.factors.push_back({k, std::min(a->second, e)});
            }
        }
        if (!common.is_one()) {
            std::map<Mono, Rat> n2, d2;
            for (auto& t : num_.terms()) n2[*t.m.divide(common)] += t.c;
            for (auto& t : den_.terms()) d2[*t.m.divide(common)] += t.c;
            num_ = Poly::from_map(std::move(n2));
            den_ = Poly::from_map(std::move(d2));
        }
        // cancel exact polynomial divisor
        if (!den_.is_constant()) {
            if (auto q = num_.divide_exact(den_)) {
                num_ = *q;
                den_ = Poly(1);
            }
        }
    }
    Rat c = den_.content();
    if (den_.leading().c < 0) c = -c;
    if (c != 1) {
        num_ = num_.divide_by_content(c);
        den_ = den_.divide_by_content(c);
    }
}

Poly RatFn::as_polynomial() const
{
    if (!den_.is_constant())
        throw Error(ErrorCode::Internal, "as_polynomial on non-polynomial rational: " + str());
    Rat d = den_.constant_value();
    return num_ * (Rat(1) / d);
}

bool RatFn::is_param_only() const
{
    for (auto& t : num_.terms())
        for (auto& [k, e] : t.m.factors)
            if (k.is_jet()) return false;
    for (auto& t : den_.terms())
        for (auto& [k, e] : t.m.factors)
            if (k.is_jet()) return false;
    return true;
}

RatFn RatFn::operator-() const
{
    RatFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const
{
    if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const
{
    // cross-cancel before multiplying to limit swell
    RatFn a(num_, o.den_);
    RatFn b(o.num_, den_);
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn RatFn::operator/(const RatFn& o) const
{
    if (o.num_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero rational");
    return *this * o.inverse();
}

RatFn RatFn::inverse() const
{
    if (num_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
    RatFn r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

bool RatFn::equal(const RatFn& o) const
{
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::string RatFn::str() const
{
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    std::string n = num_.str();
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

RatFn total_derivative(Dir dir, const RatFn& f, int maxOrder)
{
    Poly dn = total_derivative(dir, f.num(), maxOrder);
    if (f.is_polynomial()) return RatFn(dn, f.den());
    Poly dd = total_derivative(dir, f.den(), maxOrder);
    return RatFn(dn * f.den() - f.num() * dd, f.den() * f.den());
}

RatFn total_derivative(Multi m, const RatFn& f, int maxOrder)
{
    RatFn r = f;
    for (Dir d : kAllDirs)
        for (int i = 0; i < m.count(d); ++i) r = total_derivative(d, r, maxOrder);
    return r;
}

RatFn subst(const Poly& p, Key k, const RatFn& value)
{
    RatFn r;
    std::vector<RatFn> powers{RatFn(1L)};
    for (auto& t : p.terms()) {
        int e = t.m.exponent(k);
        if (e == 0) {
            r += RatFn(Poly::mono(t.m, t.c));
            continue;
        }
        while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
        Mono rest = *t.m.divide(Mono::of(k, e));
        r += RatFn(Poly::mono(rest, t.c)) * powers[e];
    }
    return r;
}

} // namespace ma
