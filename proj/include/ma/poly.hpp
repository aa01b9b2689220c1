#ifndef MA_POLY_HPP
#define MA_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ma/jet.hpp"

namespace ma {

using Rat = mpq_class;

/// mpq_class(n,d) does not canonicalize; always build fractions through this.
inline Rat rat(long n, long d = 1)
{
    Rat r(n, d);
    r.canonicalize();
    return r;
}

/// Monomial: sorted (key, exponent) factor list. Exponents are positive.
struct Mono {
    std::vector<std::pair<Key, uint8_t>> factors;

    static Mono one() { return {}; }
    static Mono of(Key k, int e = 1)
    {
        Mono m;
        if (e > 0) m.factors.push_back({k, static_cast<uint8_t>(e)});
        return m;
    }

    bool is_one() const { return factors.empty(); }
    int exponent(Key k) const
    {
        for (auto& [key, e] : factors)
            if (key == k) return e;
        return 0;
    }
    /// Total degree (sum of exponents over all factors).
    int degree() const
    {
        int d = 0;
        for (auto& [k, e] : factors) d += e;
        return d;
    }
    /// Total degree counting only jet factors.
    int jet_degree() const
    {
        int d = 0;
        for (auto& [k, e] : factors)
            if (k.is_jet()) d += e;
        return d;
    }
    /// Maximum jet order among factors.
    int max_order() const
    {
        int o = 0;
        for (auto& [k, e] : factors)
            if (k.is_jet() && k.order() > o) o = k.order();
        return o;
    }

    Mono times(const Mono& o) const;
    /// Divides by o; returns nullopt when not divisible.
    std::optional<Mono> divide(const Mono& o) const;
    /// Keeps only factors selected by pred.
    Mono filter(const std::function<bool(Key)>& pred) const;

    bool operator==(const Mono&) const = default;
    /// Graded lexicographic order (by total degree, then by factor sequence).
    std::strong_ordering operator<=>(const Mono& o) const
    {
        if (int c = degree() - o.degree(); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return factors <=> o.factors;
    }

    std::string str() const;
};

/// Exact sparse differential polynomial: canonical term list ordered by Mono.
class Poly {
public:
    struct Term {
        Mono m;
        Rat c;
    };

    Poly() = default;
    explicit Poly(const Rat& c)
    {
        if (c != 0) terms_.push_back({Mono::one(), c});
    }
    explicit Poly(long n) : Poly(Rat(n)) {}

    static Poly var(Key k) { return mono(Mono::of(k), 1); }
    static Poly var(Param p) { return var(Key::param(p)); }
    static Poly mono(Mono m, Rat c);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }
    /// Constant value when is_constant(), else throws.
    Rat constant_value() const;
    size_t size() const { return terms_.size(); }
    int degree() const
    {
        return terms_.empty() ? 0 : terms_.back().m.degree();
    }
    int max_order() const
    {
        int o = 0;
        for (auto& t : terms_) o = std::max(o, t.m.max_order());
        return o;
    }
    /// Leading (largest) term in the canonical order.
    const Term& leading() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return equal(o); }

    Poly pow(int e) const;

    bool equal(const Poly& o) const;

    /// Partial derivative with respect to a single ring variable.
    Poly partial(Key k) const;

    /// True when the variable occurs in some term.
    bool depends_on(Key k) const;
    /// Degree in a single variable.
    int degree_in(Key k) const;

    /// All distinct keys occurring, sorted.
    std::vector<Key> support() const;

    /// Substitute key := value (polynomial). Value may contain the key itself
    /// only if exponent bookkeeping terminates (not checked); callers
    /// substitute fresh symbols only.
    Poly subst(Key k, const Poly& value) const;

    /// Rational content: gcd of coefficients (positive); zero polynomial -> 0.
    Rat content() const;
    /// Monomial gcd of all terms (for content extraction of parameter factors).
    Mono monomial_content() const;
    Poly divide_by_content(const Rat& c) const;
    /// Exact division; nullopt if not divisible.
    std::optional<Poly> divide_exact(const Poly& divisor) const;

    std::string str() const;

    /// Internal: assumes map is coefficient-accumulated; drops zeros, sorts.
    static Poly from_map(std::map<Mono, Rat>&& acc);

private:
    std::vector<Term> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

/// Total derivative D_dir. Parameters differentiate to zero except the
/// kt1 formal constant (D_t kt1 = kt1_t, D_1 kt1 = kt1_1, D_2 = D_3 = 0).
/// Throws order-overflow when a produced jet exceeds maxOrder.
Poly total_derivative(Dir dir, const Poly& p, int maxOrder = 6);
/// Iterated total derivative over a multiset.
Poly total_derivative(Multi m, const Poly& p, int maxOrder = 6);

} // namespace ma

#endif
