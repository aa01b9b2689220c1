#include "ma/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ma {

Param param_by_name(const std::string& name)
{
    for (int i = 0; i < ParamCount; ++i)
        if (name == param_name(static_cast<Param>(i))) return static_cast<Param>(i);
    throw Error(ErrorCode::UnknownName, "parameter '" + name + "'");
}

Mono Mono::times(const Mono& o) const
{
    Mono r;
    r.factors.reserve(factors.size() + o.factors.size());
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() && b != o.factors.end()) {
        if (a->first == b->first) {
            r.factors.push_back({a->first, static_cast<uint8_t>(a->second + b->second)});
            ++a;
            ++b;
        } else if (a->first < b->first) {
            r.factors.push_back(*a++);
        } else {
            r.factors.push_back(*b++);
        }
    }
    r.factors.insert(r.factors.end(), a, factors.end());
    r.factors.insert(r.factors.end(), b, o.factors.end());
    return r;
}

std::optional<Mono> Mono::divide(const Mono& o) const
{
    Mono r;
    auto a = factors.begin();
    for (auto& [k, e] : o.factors) {
        while (a != factors.end() && a->first < k) r.factors.push_back(*a++);
        if (a == factors.end() || a->first != k || a->second < e) return std::nullopt;
        if (a->second > e) r.factors.push_back({k, static_cast<uint8_t>(a->second - e)});
        ++a;
    }
    r.factors.insert(r.factors.end(), a, factors.end());
    return r;
}

Mono Mono::filter(const std::function<bool(Key)>& pred) const
{
    Mono r;
    for (auto& f : factors)
        if (pred(f.first)) r.factors.push_back(f);
    return r;
}

std::string Mono::str() const
{
    if (factors.empty()) return "1";
    std::string s;
    bool first = true;
    for (auto& [k, e] : factors) {
        if (!first) s += "*";
        first = false;
        s += k.str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

Poly Poly::mono(Mono m, Rat c)
{
    Poly p;
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Rat Poly::constant_value() const
{
    if (terms_.empty()) return Rat(0);
    if (terms_.size() == 1 && terms_[0].m.is_one()) return terms_[0].c;
    throw Error(ErrorCode::Internal, "constant_value on non-constant polynomial");
}

const Poly::Term& Poly::leading() const
{
    if (terms_.empty()) throw Error(ErrorCode::Internal, "leading term of zero polynomial");
    return terms_.back();
}

Poly Poly::from_map(std::map<Mono, Rat>&& acc)
{
    Poly p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.push_back({m, std::move(c)});
    return p;
}

Poly Poly::operator-() const
{
    Poly p;
    p.terms_.reserve(terms_.size());
    for (auto& t : terms_) p.terms_.push_back({t.m, -t.c});
    return p;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->m == b->m) {
            Rat c = a->c + b->c;
            if (c != 0) r.terms_.push_back({a->m, std::move(c)});
            ++a;
            ++b;
        } else if (a->m < b->m) {
            r.terms_.push_back(*a++);
        } else {
            r.terms_.push_back(*b++);
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const
{
    if (is_zero() || o.is_zero()) return {};
    std::map<Mono, Rat> acc;
    for (auto& a : terms_)
        for (auto& b : o.terms_) {
            acc[a.m.times(b.m)] += a.c * b.c;
        }
    return from_map(std::move(acc));
}

Poly Poly::operator*(const Rat& c) const
{
    if (c == 0) return {};
    Poly p;
    p.terms_.reserve(terms_.size());
    for (auto& t : terms_) p.terms_.push_back({t.m, t.c * c});
    return p;
}

Poly Poly::pow(int e) const
{
    Poly r(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Poly::equal(const Poly& o) const
{
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Poly Poly::partial(Key k) const
{
    std::map<Mono, Rat> acc;
    for (auto& t : terms_) {
        int e = t.m.exponent(k);
        if (e == 0) continue;
        Mono m = *t.m.divide(Mono::of(k));
        acc[m] += t.c * e;
    }
    return from_map(std::move(acc));
}

bool Poly::depends_on(Key k) const
{
    for (auto& t : terms_)
        if (t.m.exponent(k) > 0) return true;
    return false;
}

int Poly::degree_in(Key k) const
{
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.m.exponent(k));
    return d;
}

std::vector<Key> Poly::support() const
{
    std::vector<Key> keys;
    for (auto& t : terms_)
        for (auto& [k, e] : t.m.factors) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

Poly Poly::subst(Key k, const Poly& value) const
{
    Poly r;
    std::vector<Poly> powers{Poly(1)};
    for (auto& t : terms_) {
        int e = t.m.exponent(k);
        if (e == 0) {
            r += Poly::mono(t.m, t.c);
            continue;
        }
        while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
        Mono rest = *t.m.divide(Mono::of(k, e));
        r += Poly::mono(rest, t.c) * powers[e];
    }
    return r;
}

Rat Poly::content() const
{
    if (terms_.empty()) return Rat(0);
    mpz_class num = abs(terms_[0].c.get_num());
    mpz_class den = terms_[0].c.get_den();
    for (size_t i = 1; i < terms_.size(); ++i) {
        num = gcd(num, terms_[i].c.get_num());
        den = lcm(den, terms_[i].c.get_den());
    }
    Rat g(num, den);
    g.canonicalize();
    return g;
}

Mono Poly::monomial_content() const
{
    if (terms_.empty()) return Mono::one();
    Mono g = terms_[0].m;
    for (auto& t : terms_) {
        Mono next;
        for (auto& [k, e] : g.factors) {
            int e2 = t.m.exponent(k);
            int m = std::min<int>(e, e2);
            if (m > 0) next.factors.push_back({k, static_cast<uint8_t>(m)});
        }
        g = next;
        if (g.is_one()) break;
    }
    return g;
}

Poly Poly::divide_by_content(const Rat& c) const
{
    Poly p;
    p.terms_.reserve(terms_.size());
    for (auto& t : terms_) p.terms_.push_back({t.m, t.c / c});
    return p;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const
{
    if (divisor.is_zero()) return std::nullopt;
    Poly rem = *this;
    std::map<Mono, Rat> quo;
    const Term& dl = divisor.leading();
    // Bounded multivariate division: either divides exactly or we bail out.
    int guard = 4 * static_cast<int>(terms_.size()) + 64;
    while (!rem.is_zero()) {
        if (--guard < 0) return std::nullopt;
        const Term& rl = rem.leading();
        auto m = rl.m.divide(dl.m);
        if (!m) return std::nullopt;
        Rat c = rl.c / dl.c;
        quo[*m] += c;
        rem -= divisor * Poly::mono(*m, c);
    }
    return from_map(std::move(quo));
}

std::string Poly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    // Print highest-order terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->c;
        bool first = it == terms_.rbegin();
        if (c < 0) {
            os << (first ? "-" : " - ");
            c = -c;
        } else if (!first) {
            os << " + ";
        }
        if (it->m.is_one()) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << it->m.str();
        }
    }
    return os.str();
}

Poly total_derivative(Dir dir, const Poly& p, int maxOrder)
{
    std::map<Mono, Rat> acc;
    for (auto& t : p.terms()) {
        for (size_t i = 0; i < t.m.factors.size(); ++i) {
            auto [k, e] = t.m.factors[i];
            Poly dk; // derivative of the single variable k
            if (k.is_jet()) {
                Multi m = k.multi().plus(dir);
                if (m.order() > maxOrder)
                    throw Error(ErrorCode::OrderOverflow,
                                "jet order " + std::to_string(m.order()) + " exceeds max " +
                                    std::to_string(maxOrder));
                dk = Poly::var(Key::jet(k.dep(), m));
            } else {
                Param pr = k.as_param();
                if (pr == Pkt1) {
                    if (dir == DT) dk = Poly::var(Pkt1_t);
                    else if (dir == D1) dk = Poly::var(Pkt1_1);
                }
                // all other parameters are constants
            }
            if (dk.is_zero()) continue;
            Mono rest = *t.m.divide(Mono::of(k));
            Poly contrib = Poly::mono(rest, t.c * e) * dk;
            for (auto& ct : contrib.terms()) acc[ct.m] += ct.c;
        }
    }
    return Poly::from_map(std::move(acc));
}

Poly total_derivative(Multi m, const Poly& p, int maxOrder)
{
    Poly r = p;
    for (Dir d : kAllDirs)
        for (int i = 0; i < m.count(d); ++i) r = total_derivative(d, r, maxOrder);
    return r;
}

} // namespace ma
