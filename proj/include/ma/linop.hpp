#ifndef MA_LINOP_HPP
#define MA_LINOP_HPP

#include "ma/ratfn.hpp"

namespace ma {

/// Linear differential operator in normal form: a sum of atoms c * D_J with
/// rational-function coefficients, all derivatives to the right of all
/// coefficients, distinct multisets. This makes zero-testing structural.
class LinOp {
public:
    LinOp() = default;

    static LinOp identity() { return mult(RatFn(1L)); }
    static LinOp deriv(Dir d) { return atom(RatFn(1L), Multi::of({d})); }
    static LinOp deriv(Multi m) { return atom(RatFn(1L), m); }
    static LinOp mult(RatFn c) { return atom(std::move(c), Multi{}); }
    static LinOp atom(RatFn c, Multi m);

    const std::vector<std::pair<Multi, RatFn>>& atoms() const { return atoms_; }
    bool is_zero() const { return atoms_.empty(); }
    /// True when the operator is multiplication by a function.
    bool is_mult() const
    {
        return atoms_.empty() || (atoms_.size() == 1 && atoms_[0].first == Multi{});
    }
    int order() const
    {
        int o = 0;
        for (auto& [m, c] : atoms_) o = std::max(o, m.order());
        return o;
    }
    RatFn coefficient(Multi m) const
    {
        for (auto& [mm, c] : atoms_)
            if (mm == m) return c;
        return RatFn();
    }

    LinOp operator-() const;
    LinOp operator+(const LinOp& o) const;
    LinOp operator-(const LinOp& o) const;
    /// Composition a after b (a ∘ b), expanded to normal form by Leibniz.
    LinOp operator*(const LinOp& o) const;
    LinOp& operator+=(const LinOp& o) { return *this = *this + o; }
    LinOp& operator-=(const LinOp& o) { return *this = *this - o; }

    LinOp scaled(const RatFn& c) const;

    bool equal(const LinOp& o) const { return (*this - o).is_zero(); }
    bool operator==(const LinOp& o) const { return equal(o); }

    /// Action on a value: sum of c * D_J(x).
    RatFn apply(const RatFn& x, int maxOrder = 6) const;
    RatFn apply(const Poly& x, int maxOrder = 6) const { return apply(RatFn(x), maxOrder); }

    /// Formal adjoint: (c D_J)* = (-1)^{|J|} D_J ∘ c, renormalized.
    LinOp adjoint(int maxOrder = 8) const;

    std::string str() const;

    int max_order_hint = 8; // prolongation bound used during composition

private:
    std::vector<std::pair<Multi, RatFn>> atoms_;
};

inline LinOp commutator(const LinOp& a, const LinOp& b) { return a * b - b * a; }

/// L_{ij(k)} = u_{jk} D_i - u_{ik} D_j.
LinOp build_L(Dir i, Dir j, Dir k);

/// Report for the three L_{ij(k)} identity families.
struct LIdentityReport {
    bool cyclic = false;      // L_ij(k) + L_ki(j) + L_jk(i) = 0
    bool derivative = false;  // D_l L_ij(k) - D_k L_ij(l) = L_ij(k) D_l - L_ij(l) D_k
    bool threeTerm = false;   // L_ij(l) D_k + L_jk(l) D_i + L_ki(l) D_j = 0
    bool all() const { return cyclic && derivative && threeTerm; }
};

LIdentityReport verify_L_identities(Dir i, Dir j, Dir k, Dir l);

/// One of the four factorization relations: returns (lhs, rhs, claimedResidual)
/// with lhs = L_ij(k) D_l - L_ij(l) D_k and the variant's right side; the
/// identity lhs = rhs + claimedResidual holds in normal form.
struct FactorizationRelation {
    LinOp lhs;
    LinOp rhs;
    LinOp claimedResidual;
    bool holds() const { return (lhs - rhs - claimedResidual).is_zero(); }
};

FactorizationRelation factorization_relation(int variant, Dir i, Dir j, Dir k, Dir l);

} // namespace ma

#endif
