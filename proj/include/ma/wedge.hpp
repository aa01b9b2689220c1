#ifndef MA_WEDGE_HPP
#define MA_WEDGE_HPP

#include "ma/linop.hpp"

namespace ma {

/// Generator of the graded algebra of vertical forms: dU_J or dV_J.
/// d commutes with total derivatives, so d(u_J) = dU_J.
struct Gen {
    uint32_t bits; // (component: 0 = du, 1 = dv) << 16 | multiset bits

    static Gen du(Multi m) { return Gen{m.bits}; }
    static Gen dv(Multi m) { return Gen{(1u << 16) | m.bits}; }
    int component() const { return bits >> 16; }
    Multi multi() const { return Multi{static_cast<uint16_t>(bits & 0xFFFF)}; }
    bool operator==(const Gen&) const = default;
    auto operator<=>(const Gen&) const = default;
    std::string str() const
    {
        std::string s = component() ? "dv" : "du";
        if (multi().order()) s += "_" + multi().str();
        return s;
    }
};

/// Homogeneous exterior form with differential-polynomial coefficients over
/// anticommuting generators dU_J, dV_J.
class Form {
public:
    struct Term {
        std::vector<Gen> gens; // strictly increasing
        Poly coeff;
    };

    Form() = default;

    static Form wedge2(Poly c, Gen a, Gen b);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form scaled(const Poly& c) const;
    Form& operator+=(const Form& o) { return *this = *this + o; }

    /// Exterior (vertical) derivative: one grade up.
    Form d(int maxOrder = 8) const;

    std::string str() const;

    /// Sorts generators (with sign), drops repeats, merges like terms.
    static Form make(std::vector<Term> raw);

private:
    std::vector<Term> terms_;
};

/// omega = (1/2) du ∧ K11 du + du ∧ K12 dv for a skew-adjoint K11 and a
/// multiplication-operator K12.
Form omega_from_K(const LinOp& K11, const Poly& K12);

/// Evaluates a 3-form on three formal characteristic slots (alternating sum)
/// as a scalar differential polynomial in the registered test symbols.
Poly pair_with_test_slots(const Form& threeForm);

/// Closedness modulo total divergence: d(omega) evaluated on formal slots
/// passes the Euler-operator exactness test in every dependent symbol.
bool closed_mod_divergence(const Form& omega);

} // namespace ma

#endif
