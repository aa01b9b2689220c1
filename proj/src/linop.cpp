#include "ma/linop.hpp"

#include <algorithm>
#include <sstream>

namespace ma {

namespace {

long binom(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// Enumerates sub-multisets S of J with the product of per-direction binomial
/// coefficients; callback(S, J-S, coeff).
template <typename F> void sub_multisets(Multi j, F&& f)
{
    for (int st = 0; st <= j.count(DT); ++st)
        for (int s1 = 0; s1 <= j.count(D1); ++s1)
            for (int s2 = 0; s2 <= j.count(D2); ++s2)
                for (int s3 = 0; s3 <= j.count(D3); ++s3) {
                    Multi s;
                    for (int i = 0; i < st; ++i) s = s.plus(DT);
                    for (int i = 0; i < s1; ++i) s = s.plus(D1);
                    for (int i = 0; i < s2; ++i) s = s.plus(D2);
                    for (int i = 0; i < s3; ++i) s = s.plus(D3);
                    Multi rest;
                    rest.bits = static_cast<uint16_t>(j.bits - s.bits);
                    long c = binom(j.count(DT), st) * binom(j.count(D1), s1) *
                             binom(j.count(D2), s2) * binom(j.count(D3), s3);
                    f(s, rest, c);
                }
}

} // namespace

LinOp LinOp::atom(RatFn c, Multi m)
{
    LinOp op;
    if (!c.is_zero()) op.atoms_.push_back({m, std::move(c)});
    return op;
}

LinOp LinOp::operator-() const
{
    LinOp r;
    r.max_order_hint = max_order_hint;
    for (auto& [m, c] : atoms_) r.atoms_.push_back({m, -c});
    return r;
}

LinOp LinOp::operator+(const LinOp& o) const
{
    LinOp r;
    r.max_order_hint = std::max(max_order_hint, o.max_order_hint);
    auto a = atoms_.begin(), b = o.atoms_.begin();
    while (a != atoms_.end() && b != o.atoms_.end()) {
        if (a->first == b->first) {
            RatFn c = a->second + b->second;
            if (!c.is_zero()) r.atoms_.push_back({a->first, std::move(c)});
            ++a;
            ++b;
        } else if (a->first < b->first) {
            r.atoms_.push_back(*a++);
        } else {
            r.atoms_.push_back(*b++);
        }
    }
    r.atoms_.insert(r.atoms_.end(), a, atoms_.end());
    r.atoms_.insert(r.atoms_.end(), b, o.atoms_.end());
    return r;
}

LinOp LinOp::operator-(const LinOp& o) const { return *this + (-o); }

LinOp LinOp::operator*(const LinOp& o) const
{
    int mo = std::max(max_order_hint, o.max_order_hint);
    std::map<Multi, RatFn> acc;
    for (auto& [ja, ca] : atoms_) {
        for (auto& [jb, cb] : o.atoms_) {
            // c_a D_Ja ∘ c_b D_Jb = c_a * sum_{S<=Ja} C(Ja,S) D_S(c_b) D_{Ja-S+Jb}
            sub_multisets(ja, [&](Multi s, Multi rest, long bin) {
                RatFn dcb = total_derivative(s, cb, mo);
                if (dcb.is_zero()) return;
                RatFn term = ca * dcb * RatFn(Rat(bin));
                Multi m = rest.plus(jb);
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(m, std::move(term));
                else it->second += term;
            });
        }
    }
    LinOp r;
    r.max_order_hint = mo;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.atoms_.push_back({m, std::move(c)});
    return r;
}

LinOp LinOp::scaled(const RatFn& c) const
{
    LinOp r;
    r.max_order_hint = max_order_hint;
    if (c.is_zero()) return r;
    for (auto& [m, cc] : atoms_) r.atoms_.push_back({m, cc * c});
    return r;
}

RatFn LinOp::apply(const RatFn& x, int maxOrder) const
{
    RatFn result;
    for (auto& [m, c] : atoms_) result += c * total_derivative(m, x, maxOrder);
    return result;
}

LinOp LinOp::adjoint(int maxOrder) const
{
    LinOp r;
    r.max_order_hint = max_order_hint;
    for (auto& [j, c] : atoms_) {
        int sign = (j.order() % 2 == 0) ? 1 : -1;
        // D_J ∘ c expanded by Leibniz
        sub_multisets(j, [&](Multi s, Multi rest, long bin) {
            RatFn dc = total_derivative(s, c, maxOrder);
            if (dc.is_zero()) return;
            r += LinOp::atom(dc * RatFn(Rat(sign * bin)), rest);
        });
    }
    return r;
}

std::string LinOp::str() const
{
    if (atoms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
        auto& [m, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string ds;
        for (Dir d : kAllDirs) {
            int n = m.count(d);
            if (!n) continue;
            if (!ds.empty()) ds += "*";
            ds += std::string("D") + dir_char(d);
            if (n > 1) ds += "^" + std::to_string(n);
        }
        if (ds.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << ds;
        } else {
            if (cs.find_first_of("+- ") != std::string::npos && cs[0] != '(') cs = "(" + cs + ")";
            os << cs << "*" << ds;
        }
    }
    return os.str();
}

LinOp build_L(Dir i, Dir j, Dir k)
{
    Poly ujk = Poly::var(Key::jet(DepU, Multi::of({j, k})));
    Poly uik = Poly::var(Key::jet(DepU, Multi::of({i, k})));
    return LinOp::atom(RatFn(ujk), Multi::of({i})) - LinOp::atom(RatFn(uik), Multi::of({j}));
}

LIdentityReport verify_L_identities(Dir i, Dir j, Dir k, Dir l)
{
    LIdentityReport rep;
    rep.cyclic = (build_L(i, j, k) + build_L(k, i, j) + build_L(j, k, i)).is_zero();
    LinOp lhs = LinOp::deriv(l) * build_L(i, j, k) - LinOp::deriv(k) * build_L(i, j, l);
    LinOp rhs = build_L(i, j, k) * LinOp::deriv(l) - build_L(i, j, l) * LinOp::deriv(k);
    rep.derivative = (lhs - rhs).is_zero();
    rep.threeTerm = (build_L(i, j, l) * LinOp::deriv(k) + build_L(j, k, l) * LinOp::deriv(i) +
                     build_L(k, i, l) * LinOp::deriv(j))
                        .is_zero();
    return rep;
}

FactorizationRelation factorization_relation(int variant, Dir i, Dir j, Dir k, Dir l)
{
    auto uu = [](Dir a, Dir b) { return RatFn::var(Key::jet(DepU, Multi::of({a, b}))); };
    FactorizationRelation fr;
    fr.lhs = build_L(i, j, k) * LinOp::deriv(l) - build_L(i, j, l) * LinOp::deriv(k);
    RatFn E = uu(j, k) * uu(i, l) - uu(i, k) * uu(j, l);
    switch (variant) {
    case 1:
        fr.rhs = build_L(i, j, k) * LinOp::mult(uu(j, k).inverse()) * build_L(l, k, j);
        fr.claimedResidual =
            LinOp::deriv(j) * LinOp::mult(uu(j, k).inverse() * E) * LinOp::deriv(k);
        break;
    case 2:
        fr.rhs = build_L(l, k, j) * LinOp::mult(uu(j, k).inverse()) * build_L(i, j, k);
        fr.claimedResidual =
            LinOp::deriv(k) * LinOp::mult(uu(j, k).inverse() * E) * LinOp::deriv(j);
        break;
    case 3:
        fr.rhs = build_L(i, j, l) * LinOp::mult(uu(j, l).inverse()) * build_L(l, k, j);
        fr.claimedResidual =
            LinOp::deriv(j) * LinOp::mult(uu(j, l).inverse() * E) * LinOp::deriv(l);
        break;
    case 4:
        fr.rhs = build_L(l, i, j) * LinOp::mult(uu(i, j).inverse()) * build_L(k, j, i) -
                 build_L(k, i, j) * LinOp::mult(uu(i, j).inverse()) * build_L(l, j, i);
        fr.claimedResidual =
            LinOp::deriv(i) * LinOp::mult(uu(i, j).inverse() * E) * LinOp::deriv(j);
        break;
    default: throw Error(ErrorCode::UnknownName, "factorization variant " + std::to_string(variant));
    }
    return fr;
}

} // namespace ma
