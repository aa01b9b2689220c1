#ifndef MA_FAMILY_HPP
#define MA_FAMILY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ma/onshell.hpp"

namespace ma {

/// Coefficient slots of the 31-term symplectic Monge-Ampère family, in the
/// paper's order a1..a13, b1..b4, c1..c24, c8'.
enum CoeffLabel : int {
    La1 = 0, La2, La3, La4, La5, La6, La7, La8, La9, La10, La11, La12, La13,
    Lb1, Lb2, Lb3, Lb4,
    Lc1, Lc2, Lc3, Lc4, Lc5, Lc6, Lc7, Lc8, Lc9, Lc10, Lc11, Lc12, Lc13, Lc14,
    Lc15, Lc16, Lc17, Lc18, Lc19, Lc20, Lc21, Lc22, Lc23, Lc24,
    Lc8p,
    CoeffCount,
};

const char* coeff_name(CoeffLabel l);
CoeffLabel coeff_by_name(const std::string& name);
/// The parameter symbol carrying this slot when kept symbolic.
Param coeff_param(CoeffLabel l);

/// Coefficient vector: each slot holds an exact parameter-only polynomial
/// (zero, a rational constant, the slot's own symbol, or an expression such
/// as -(beta+gamma)).
class CoeffVector {
public:
    CoeffVector() { values_.fill(Poly()); }

    static CoeffVector symbolic();

    const Poly& operator[](CoeffLabel l) const { return values_[l]; }
    CoeffVector& set(CoeffLabel l, Poly v)
    {
        values_[l] = std::move(v);
        return *this;
    }
    CoeffVector& set(CoeffLabel l, long v) { return set(l, Poly(v)); }
    CoeffVector& set_symbolic(CoeffLabel l) { return set(l, Poly::var(coeff_param(l))); }

    bool is_zero(CoeffLabel l) const { return values_[l].is_zero(); }
    std::vector<CoeffLabel> nonzero_labels() const;

    bool operator==(const CoeffVector& o) const = default;

private:
    std::array<Poly, CoeffCount> values_;
};

/// The basis block multiplying each coefficient in the family equation.
const Poly& coeff_block(CoeffLabel l);

/// Full equation polynomial F = sum of coefficient * block.
Poly build_F(const CoeffVector& coeffs);

/// F = f - u_tt g split: g = -dF/du_tt, f = F + u_tt*g; both free of u_tt.
/// Throws not-affine-in-u_tt.
std::pair<Poly, Poly> split_f_g(const Poly& F);

/// One member of the family together with its two-component data.
struct MASystem {
    CoeffVector coeffs;
    Poly F, f, g;
    Poly Delta;                          // +dF/du_tt = -g, the paper's (3.2)
    std::array<Poly, CoeffCount> qParts; // per-label q with v-substituted jets
    Poly q;                              // sum of coefficient * qPart
    std::vector<Key> nonvanishing;       // jets assumed nonzero (catalog-specific)

    /// Shells for on-shell reduction; constructed on demand.
    Shell one_component_shell(int maxOrder = 6) const;
    Shell two_component_shell(int maxOrder = 6) const;

    /// Denominator jets/functions a random point must keep nonzero.
    std::vector<RatFn> nonvanishing_fns(bool twoComponent) const;
};

/// Per-label q part: block with u_tt -> w and u_ti -> v_i, written as
/// w*DeltaPart - qPart. DeltaPart is the label's contribution to (3.2).
Poly q_part(CoeffLabel l);
Poly delta_part(CoeffLabel l);

/// Builds the full system; verifies the substitution identity
/// F[u_tt->w, u_ti->v_i] == w*Delta - q exactly. Throws delta-zero when a
/// two-component split is requested with no a-coefficient present.
MASystem build_two_component(const CoeffVector& coeffs);

/// One-component system (no delta-zero requirement).
MASystem build_system(const CoeffVector& coeffs);

/// Degenerate two-component Lagrangian of the evolutionary system (the
/// paper's overall-sign-flipped convention).
Poly two_component_lagrangian(const CoeffVector& coeffs);

} // namespace ma

#endif
