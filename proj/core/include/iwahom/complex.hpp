#pragma once

#include <vector>

#include "iwahom/group.hpp"

namespace iwahom {

/// Element of the group ring Λ_n(G): coefficients indexed by group element.
using RingElem = std::vector<long long>;

/// Map between free Λ_n(G)-modules as a matrix of ring elements.
/// Component layout of a rank-t free module: component (k, g) at k*|G|+g.
struct FreeGMap {
    int rows = 0, cols = 0;
    std::vector<RingElem> blk;

    FreeGMap() = default;
    FreeGMap(int r, int c, long long gorder)
        : rows(r), cols(c), blk(static_cast<size_t>(r) * c, RingElem(gorder, 0)) {}
    RingElem& at(int i, int j) { return blk[static_cast<size_t>(i) * cols + j]; }
    const RingElem& at(int i, int j) const { return blk[static_cast<size_t>(i) * cols + j]; }
};

/// Component matrix of a free-module map (left multiplications).
ResidueMatrix compile_free_map(const FinitePGroup& G, const ResidueRing& R, const FreeGMap& f);

/// Σ_h λ[h] · (action of h), where gen_act[j] is the action of the j-th
/// group generator on the coefficient module (dimension dimB).
ResidueMatrix ring_elem_action(const FinitePGroup& G, const ResidueRing& R, const RingElem& lam,
                               const std::vector<ResidueMatrix>& gen_act, int dimB);

/// Bounded chain complex of modules: C[q] with d[q]: C[q] -> C[q-1].
struct GChainComplex {
    std::vector<GModule> C;
    std::vector<ResidueMatrix> d;  // size C.size()-1; d[q-1] maps C[q] -> C[q-1]
    void validate() const;         // consecutive composites vanish
};

/// Free resolution F_L -> ... -> F_0 -> M -> 0 over Λ_n(G), built from
/// Nakayama-minimal covers (Λ_n(G) is local). Not necessarily minimal in
/// higher degrees but exact by construction.
struct FreeResolution {
    FinitePGroup G;
    ResidueRing R;
    GModule target;
    std::vector<int> ranks;        // ranks[q], q = 0..L
    std::vector<FreeGMap> d;       // d[q-1]: F_q -> F_{q-1}, q = 1..L
    ResidueMatrix aug;             // components F_0 -> M

    int length() const { return static_cast<int>(ranks.size()) - 1; }
    GModule free_at(int q) const { return free_module(G, R, ranks[q]); }
};

/// Minimal free cover (Nakayama): free module, surjection, generator lifts.
struct FreeCover {
    int rank;
    ResidueMatrix aug;   // components F -> M
    ResidueMatrix gens;  // the chosen module generators of M (ambient columns)
};
FreeCover free_cover(const GModule& M);

FreeResolution projective_resolution(const GModule& M, int length);
/// Exactness of the computed stretch (homology vanishes at F_0..F_{L-1} and
/// aug is onto with ker aug = im d_1).
bool verify_resolution(const FreeResolution& P);

/// Injective resolution 0 -> A -> I^0 -> ... -> I^L via duality: I^q is the
/// Pontryagin dual of the q-th term of a projective resolution of A^∨
/// (projectives = injectives over the self-injective ring Λ_n(G)).
struct InjectiveResolution {
    GModule target;
    std::vector<GModule> I;
    std::vector<ResidueMatrix> d;  // d[q]: I^q -> I^{q+1}
    ResidueMatrix coaug;           // A -> I^0
};
InjectiveResolution injective_resolution(const GModule& A, int length);

/// Cochain complex Hom_{Λ(G)}(F_•, B) for a coefficient module B over the
/// resolution's ring; outer carries the transported action (a group acting
/// on B commuting with the ring action).
struct CochainComplex {
    std::vector<GModule> C;            // over `outer`
    std::vector<ResidueMatrix> delta;  // delta[q]: C^q -> C^{q+1}
};
CochainComplex hom_cochains(const FreeResolution& P, const std::vector<int>& compB,
                            const std::vector<ResidueMatrix>& ring_gen_act_on_B,
                            const FinitePGroup& outer,
                            const std::vector<ResidueMatrix>& outer_act_on_B);

std::vector<Subquotient> cochain_cohomology(const CochainComplex& C, int qmax);

/// H^q(H, A) for q <= qmax with the residual G/H-action (G abelian).
struct CohomologyResult {
    QuotientGroup Q;
    std::vector<GModule> H;        // modules over Q.q
    std::vector<Subquotient> raw;  // the same cohomology inside the cochain spaces
};
CohomologyResult group_cohomology(const FinitePGroup& G, const Subgroup& H, const GModule& A,
                                  int qmax);

/// Ext^p_{Λ_n(G)}(M, B) with the componentwise G-action on B.
std::vector<GModule> ext_over_group_ring(const GModule& M, const GModule& B, int pmax);

/// Ext^p_{Λ_n(G)}(M, Λ_n(G/H)) with the natural G/H-module structure
/// (the quotient group acts on values through inverses).
struct ExtRingResult {
    QuotientGroup Q;
    std::vector<GModule> E;  // over Q.q
};
ExtRingResult ext_into_quotient_ring(const GModule& M, const FinitePGroup& G, const Subgroup& H,
                                     int pmax);

/// Independent oracle: H^q(H, A) via inhomogeneous cochains; sizes guarded.
std::vector<FiniteModuleType> bar_cohomology(const FinitePGroup& G, const Subgroup& H,
                                             const GModule& A, int qmax);

/// Horseshoe data for a short exact sequence X -> Y -> W: the middle
/// resolution is blockwise F^X ⊕ F^W with lifted corrections.
FreeResolution horseshoe(const GModule& X, const GModule& Y, const GModule& W,
                         const ResidueMatrix& incl, const ResidueMatrix& proj,
                         const FreeResolution& PX, const FreeResolution& PW);

/// Cartan–Eilenberg resolution of a bounded chain complex of modules over
/// Λ_n(G): columns resolve C_q; horizontal maps come from the canonical
/// boundary-summand inclusions, so squares commute on the nose. Vertical
/// differentials get negated on odd columns when totalized.
struct CEResolution {
    FinitePGroup G;
    ResidueRing R;
    int cols = 0;                       // number of complex degrees (q)
    int prows = 0;                      // resolution length + 1 (p)
    std::vector<std::vector<int>> rank;          // rank[q][p]
    std::vector<std::vector<FreeGMap>> vert;     // vert[q][p-1]: P_{p,q} -> P_{p-1,q}
    std::vector<std::vector<FreeGMap>> horiz;    // horiz[q][p]: P_{p,q} -> P_{p,q-1}
    std::vector<ResidueMatrix> aug;              // P_{0,q} -> C_q
};
CEResolution cartan_eilenberg(const GChainComplex& Cx, int plen);

/// Push a free-module map along G -> G/H (coinvariants of free modules).
RingElem push_ring_elem(const FinitePGroup& G, const QuotientGroup& Q, const RingElem& lam);
FreeGMap push_map(const FinitePGroup& G, const QuotientGroup& Q, const FreeGMap& f);

/// (P_•)_H as a chain complex of free Λ_n(G/H)-modules.
GChainComplex coinvariants_complex(const FreeResolution& P, const FinitePGroup& G,
                                   const QuotientGroup& Q);

}  // namespace iwahom
