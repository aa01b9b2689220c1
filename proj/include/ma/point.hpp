#ifndef MA_POINT_HPP
#define MA_POINT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "ma/onshell.hpp"

namespace ma {

/// Deterministic small-rational source. Values are num/den with num in
/// [-9,9] and den in [1,9]; fully reproducible across platforms for a
/// given seed (no distribution objects involved).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    uint64_t next()
    {
        // splitmix64
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }
    Rat small_rational()
    {
        long num = below(19) - 9;
        long den = below(9) + 1;
        return rat(num, den);
    }

private:
    uint64_t state_;
};

/// Point of the jet space: exact rational assignments for free coordinates
/// and parameters; constrained jets derive lazily through the shell.
class JetPoint {
public:
    JetPoint() = default;
    explicit JetPoint(const Shell* shell) : shell_(shell) {}

    void assign(Key k, Rat v) { values_[k] = std::move(v); }
    bool has(Key k) const { return values_.count(k) || derived_.count(k); }

    /// Value of a key; derives constrained jets on demand (cached).
    /// Throws missing-assignment for unknown free keys and zero-denominator
    /// when a derived value hits a vanishing denominator.
    Rat value(Key k) const;

    uint64_t seed = 0;

private:
    std::map<Key, Rat> values_;
    mutable std::map<Key, Rat> derived_;
    const Shell* shell_ = nullptr;

    friend Rat evaluate(const Poly&, const JetPoint&);
};

Rat evaluate(const Poly& p, const JetPoint& pt);
Rat evaluate(const RatFn& f, const JetPoint& pt);

/// Random point with every free jet (and every parameter) assigned an
/// independent small rational. `nonvanishing` entries are re-checked and the
/// whole assignment retried (bounded) until all of them evaluate nonzero.
/// Identical seeds give identical points.
JetPoint random_on_shell_point(const Shell& shell, uint64_t seed,
                               const std::vector<RatFn>& nonvanishing = {},
                               int maxAttempts = 100);

/// Free-assignment variant without shell constraints (all u,v z-jets plus a
/// single t-layer for one-component use cases are free).
JetPoint random_point(uint64_t seed, int maxOrder = 6);

} // namespace ma

#endif
