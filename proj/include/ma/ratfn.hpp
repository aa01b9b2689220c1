#ifndef MA_RATFN_HPP
#define MA_RATFN_HPP

#include "ma/poly.hpp"

namespace ma {

/// Rational differential function num/den. Normalization is by rational
/// content and sign of the leading denominator coefficient; common monomial
/// factors and exact polynomial divisors are cancelled opportunistically.
/// No multivariate gcd is attempted; equality is cross-multiplication.
class RatFn {
public:
    RatFn() : num_(), den_(1) {}
    RatFn(const Poly& num, const Poly& den);
    explicit RatFn(const Poly& num) : num_(num), den_(1) {}
    explicit RatFn(const Rat& c) : num_(c), den_(1) {}
    explicit RatFn(long n) : num_(n), den_(1) {}

    static RatFn var(Key k) { return RatFn(Poly::var(k)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Polynomial value when den is constant; throws otherwise.
    Poly as_polynomial() const;
    bool is_param_only() const;

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

    /// a/b == c/d  <=>  a*d - c*b == 0.
    bool equal(const RatFn& o) const;
    bool operator==(const RatFn& o) const { return equal(o); }

    RatFn inverse() const;

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

inline RatFn operator*(const Poly& p, const RatFn& r) { return RatFn(p) * r; }
inline RatFn operator*(const Rat& c, const RatFn& r) { return RatFn(Poly(c)) * r; }

RatFn total_derivative(Dir dir, const RatFn& f, int maxOrder = 6);
RatFn total_derivative(Multi m, const RatFn& f, int maxOrder = 6);

/// Substitute a ring variable by a rational function inside a polynomial.
RatFn subst(const Poly& p, Key k, const RatFn& value);

} // namespace ma

#endif
