#ifndef MA_INTEGRABILITY_HPP
#define MA_INTEGRABILITY_HPP

#include "ma/family.hpp"
#include "ma/linop.hpp"

namespace ma {

/// Certified skew-factorized symmetry condition: the linearization equals
/// mu * (A1 B2 - A2 B1) on solutions, with the commutator conditions.
struct SkewFactorization {
    LinOp A1, A2, B1, B2;
    RatFn mu; // scalar prefactor: mu^{-1}(A1 B2 - A2 B1) = S on shell
    std::vector<Key> requiredNonvanishing;

    /// The paper's noted symmetry: swapping A1<->B1, A2<->B2 preserves shape.
    SkewFactorization swapped() const { return {B1, B2, A1, A2, mu, requiredNonvanishing}; }
};

struct CatalogEntry {
    std::string name;
    CoeffVector coeffs;
    SkewFactorization sf;
    std::string paperTag;

    MASystem system() const;
};

/// Symmetry-condition operator of the quadratic subfamily, built from the
/// L_ij(k) constructors and pure-derivative terms. Equals frechet(build_F)
/// in normal form. Throws outside-subfamily if any of a1..a6, b1..b4 is set.
LinOp build_symmetry_operator(const CoeffVector& coeffs);

/// Reduce every coefficient of an operator on shell.
LinOp reduce_op(const Shell& sh, const LinOp& op);

struct CheckVerdict {
    bool pass = false;
    bool identical = false; // already zero before on-shell reduction
    std::string residual;   // leading monomials of a nonzero residual
};

struct SkewReport {
    CheckVerdict commAA;  // [A1,A2] = 0
    CheckVerdict commBB;  // [B1,B2] = 0
    CheckVerdict cross;   // [A1,B2] - [A2,B1] = 0 on shell
    CheckVerdict factorized; // mu^{-1}(A1B2 - A2B1) - S = 0 on shell
    bool numeric = false; // pre-reduction residuals vanish at random on-shell points
    bool all() const { return commAA.pass && commBB.pass && cross.pass && factorized.pass && numeric; }
};

SkewReport check_skew_factorization(const CatalogEntry& entry, uint64_t seed = 12345,
                                    int points = 20);

struct LaxPair {
    LinOp X1, X2;
};

/// X_i = lambda A_i + B_i with the spectral parameter as a formal symbol.
LaxPair build_lax(const SkewFactorization& sf);

struct LaxReport {
    CheckVerdict deg2, deg1, deg0; // lambda-coefficients of [X1,X2]
    bool numeric = false;
    bool all() const { return deg2.pass && deg1.pass && deg0.pass && numeric; }
};

LaxReport check_lax(const LaxPair& lax, const CatalogEntry& entry, uint64_t seed = 12345,
                    int points = 20);

/// Recursion relations in display form, plus the compatibility necessary
/// condition for a seed characteristic.
struct RecursionRelations {
    std::string rel1, rel2; // "A1[phit] = B1[phi]" style
    /// (A1 B2 - A2 B1)[phi] reduces to zero on shell whenever the symmetry
    /// operator annihilates phi on shell.
    bool compatible(const CatalogEntry& entry, const RatFn& phi) const;
    const SkewFactorization* sf = nullptr;
};

RecursionRelations recursion_relations(const SkewFactorization& sf);

std::vector<std::string> catalog_names();
CatalogEntry catalog(const std::string& name);

/// Permutation of the z-indices (t fixed). perm[d] is the image of d.
using IndexPerm = std::array<Dir, 4>;

IndexPerm make_perm(Dir im1, Dir im2, Dir im3); // t -> t fixed

Poly permute_jets(const IndexPerm& p, const Poly& poly);
RatFn permute_jets(const IndexPerm& p, const RatFn& f);
LinOp permute_op(const IndexPerm& p, const LinOp& op);

/// Signed coefficient permutation derived from the index permutation by
/// matching permuted basis blocks: block_l o perm = sign * block_target.
struct CoeffPerm {
    IndexPerm indexPerm;
    std::array<CoeffLabel, CoeffCount> target;
    std::array<int, CoeffCount> sign;

    /// Parameter substitution p_l -> sign * p_target(l) applied to a value.
    Poly rename_params(const Poly& p) const;
    RatFn rename_params(const RatFn& f) const;
    LinOp rename_params(const LinOp& op) const;
};

/// Throws unsupported-permutation when some block has no signed match
/// (never happens for permutations fixing t).
CoeffPerm derive_coeff_permutation(const IndexPerm& p);

/// Transported coefficients: F(result) == permute_jets(F(coeffs)).
CoeffVector apply_permutation(const IndexPerm& p, const CoeffVector& coeffs);

/// Transport of a factorization: index-permute the operators, then rename
/// the coefficient symbols by the derived signed permutation so the result
/// is expressed in the image equation's own slots.
SkewFactorization transport(const IndexPerm& p, const SkewFactorization& sf);
CoeffVector transport_coeffs(const IndexPerm& p, const CoeffVector& coeffs);

} // namespace ma

#endif
