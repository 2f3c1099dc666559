#pragma once

#include <optional>
#include <vector>

#include "iwahom/residue.hpp"
#include "iwahom/zlinalg.hpp"

namespace iwahom {

/// Finite abelian p-group G = prod_j Z/p^{m_j} with the fixed generator list
/// g_1..g_r. Elements are exponent vectors, enumerated lexicographically so
/// that permutation actions and group rings can index by element.
struct FinitePGroup {
    long long p = 2;
    std::vector<int> orders;  // m_j >= 1; empty list = trivial group

    FinitePGroup() = default;
    FinitePGroup(long long p_, std::vector<int> orders_);

    int rank() const { return static_cast<int>(orders.size()); }
    long long order() const;
    long long gen_order(int j) const;  // p^{m_j}

    long long index_of(const std::vector<long long>& v) const;
    std::vector<long long> element(long long idx) const;
    long long add(long long i, long long j) const;
    long long neg(long long i) const;

    bool operator==(const FinitePGroup& o) const { return p == o.p && orders == o.orders; }
};

/// Subgroup given by generator vectors; elements materialized (desk scale).
struct Subgroup {
    std::vector<std::vector<long long>> gens;  // exponent vectors in the parent
    std::vector<long long> elements;           // sorted element indices

    bool contains(long long idx) const;
    long long order() const { return static_cast<long long>(elements.size()); }
};

Subgroup make_subgroup(const FinitePGroup& G, const std::vector<std::vector<long long>>& gens);
Subgroup trivial_subgroup(const FinitePGroup& G);
Subgroup full_subgroup(const FinitePGroup& G);
bool subgroup_leq(const Subgroup& A, const Subgroup& B);

/// Independent cyclic decomposition of a subgroup: generators h_i (as vectors
/// in the parent) with H = ⊕ <h_i>, ord(h_i) = p^{cyc[i]}.
struct SubgroupBasis {
    std::vector<std::vector<long long>> gens;
    std::vector<int> cyc;
};
SubgroupBasis subgroup_basis(const FinitePGroup& G, const Subgroup& H);

/// G/H with a canonical presentation; proj expresses the image of each
/// G-generator, lift picks a G-preimage of each quotient generator.
struct QuotientGroup {
    FinitePGroup q;
    std::vector<std::vector<long long>> proj;  // size G.rank()
    std::vector<std::vector<long long>> lift;  // size q.rank()
};
QuotientGroup quotient_group(const FinitePGroup& G, const Subgroup& H);

/// Finite module over Z/p^N with an action of G: underlying ⊕ Z/p^{e_i} on
/// standard generators, one action matrix per group generator. Elements are
/// coordinate vectors mod p^N; coordinate i is meaningful mod p^{e_i}, i.e.
/// the module is presented as coker(diag(p^{e_i})).
struct GModule {
    ResidueRing R;
    FinitePGroup G;
    std::vector<int> comp;              // exponents e_i in [1, N], weakly decreasing
    std::vector<ResidueMatrix> act;     // size G.rank(), each comp x comp

    int dim() const { return static_cast<int>(comp.size()); }
    FiniteModuleType type() const { return FiniteModuleType(comp); }
    long long order_log() const;        // sum of exponents
    ResidueMatrix relations() const;    // diag(p^{e_i})
    ResidueMatrix act_of(const std::vector<long long>& gvec) const;  // prod act[j]^v_j
    ResidueMatrix act_of_index(long long idx) const;
    /// Normalize coordinate i mod p^{e_i}.
    void normalize_matrix(ResidueMatrix& M) const;  // M: X -> this
};

GModule trivial_module(const ResidueRing& R, const FinitePGroup& G, std::vector<int> comp = {});
/// Left regular module Λ_n(G) (rank-1 free); guard on |G| * N.
GModule group_ring_module(const FinitePGroup& G, const ResidueRing& R);
/// Free module of the given rank over Λ_n(G); component (k,g) at k*|G|+g.
GModule free_module(const FinitePGroup& G, const ResidueRing& R, int rank);

/// Construction-time validation: commuting, invertible, order-respecting,
/// congruence-respecting action matrices.
void validate_module(const GModule& A);
bool is_hom(const GModule& A, const GModule& B, const ResidueMatrix& f);
void require_hom(const GModule& A, const GModule& B, const ResidueMatrix& f);

/// Pontryagin dual: same underlying type, g acting by precomposition with
/// g^{-1}. On matrices: S = P^{-1} (T^{-1})^t P with P = diag(p^{N-e_i}).
GModule pontryagin_dual(const GModule& A);
/// Dual of a hom f: A -> B, as a matrix B^dual -> A^dual.
ResidueMatrix dual_hom(const GModule& A, const GModule& B, const ResidueMatrix& f);

/// span(num)/span(den) of the ambient A, canonicalized with its transported
/// action. Ambient relations are implicitly part of both lattices.
struct Subquotient {
    GModule mod;          // canonical result
    ResidueMatrix gens;   // ambient coordinates of the canonical generators
    ResidueMatrix num;    // retained numerator lattice (with relations)
    ResidueMatrix den;    // retained denominator lattice (with relations)

    /// Express an ambient vector of the numerator lattice in canonical
    /// coordinates (throws std::logic_error if it does not lie there).
    std::vector<long long> express(const std::vector<long long>& v) const;
    bool contains(const std::vector<long long>& v) const;
};

Subquotient subquotient(const GModule& A, const ResidueMatrix& num, const ResidueMatrix& den);
Subquotient submodule(const GModule& A, const ResidueMatrix& num);
Subquotient quotient(const GModule& A, const ResidueMatrix& den);

/// Matrix of the map S -> T induced by the ambient map f (must carry
/// num(S) into num(T) + den(T)).
ResidueMatrix induced_hom(const Subquotient& S, const Subquotient& T, const ResidueMatrix& f);

/// Lattice span comparison (both implicitly include the ambient relations).
bool lattice_leq(const GModule& A, const ResidueMatrix& W1, const ResidueMatrix& W2);
bool lattice_eq(const GModule& A, const ResidueMatrix& W1, const ResidueMatrix& W2);
/// Generators of { v : f v ∈ span(target_lattice) }, relations included.
ResidueMatrix preimage_lattice(const GModule& A, const GModule& B, const ResidueMatrix& f,
                               const ResidueMatrix& target_lattice);
/// Intersection of two lattices in A.
ResidueMatrix lattice_intersect(const GModule& A, const ResidueMatrix& W1,
                                const ResidueMatrix& W2);

/// A^U with the residual G-action (G abelian), as a subquotient of A.
Subquotient invariants(const FinitePGroup& G, const Subgroup& U, const GModule& A);
/// A_U = A / <(u-1)a>, with the natural surjection recorded in the witness.
Subquotient coinvariants(const FinitePGroup& G, const Subgroup& U, const GModule& A);

/// Norm map a -> sum_{u in U/U'} u a from A^{U'} to A^{U}; Usub ⊆ U required.
ResidueMatrix corestriction_h0(const FinitePGroup& G, const Subgroup& Usub, const Subgroup& U,
                               const GModule& A, const Subquotient& invUsub,
                               const Subquotient& invU);

/// All subgroups U with H ≤ U ≤ G, ordered by increasing order then element
/// list; covering relation = inclusion of index p.
struct SubgroupPoset {
    std::vector<Subgroup> nodes;
    std::vector<std::pair<int, int>> covers;  // (smaller, larger)
    std::vector<std::vector<int>> leq;        // leq[i] = all j with nodes[i] ≤ nodes[j]
};
SubgroupPoset intermediate_subgroups(const FinitePGroup& G, const Subgroup& H);

/// Restrict the acting group along a quotient map: reinterpret an H-trivial
/// G-module as a module over G/H (asserts H-generators act trivially).
GModule descend_action(const GModule& A, const QuotientGroup& Q, const Subgroup& H);

struct SizeGuards {
    long long max_group_order = 4096;
    long long max_components = 20000;
    long long max_bar_space = 1 << 22;
};
SizeGuards& guards();

}  // namespace iwahom
