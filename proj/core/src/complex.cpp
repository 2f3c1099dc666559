#include "iwahom/complex.hpp"

#include <algorithm>

namespace iwahom {

ResidueMatrix compile_free_map(const FinitePGroup& G, const ResidueRing& R, const FreeGMap& f) {
    const long long n = G.order();
    ResidueMatrix M(R, static_cast<int>(f.rows * n), static_cast<int>(f.cols * n));
    for (int i = 0; i < f.rows; ++i)
        for (int j = 0; j < f.cols; ++j) {
            const RingElem& lam = f.at(i, j);
            for (long long k = 0; k < n; ++k) {
                if (lam[k] == 0) continue;
                for (long long h = 0; h < n; ++h) {
                    long long g = G.add(h, k);
                    int row = static_cast<int>(i * n + g);
                    int col = static_cast<int>(j * n + h);
                    M.at(row, col) = R.reduce(M.at(row, col) + lam[k]);
                }
            }
        }
    return M;
}

ResidueMatrix ring_elem_action(const FinitePGroup& G, const ResidueRing& R, const RingElem& lam,
                               const std::vector<ResidueMatrix>& gen_act, int dimB) {
    if (G.rank() == 0) {
        ResidueMatrix M = ResidueMatrix::identity(R, dimB);
        return rscale(M, lam.empty() ? 0 : lam[0]);
    }
    const int b = dimB;
    ResidueMatrix M(R, b, b);
    for (long long k = 0; k < G.order(); ++k) {
        if (lam[k] == 0) continue;
        auto v = G.element(k);
        ResidueMatrix T = ResidueMatrix::identity(R, b);
        for (int j = 0; j < G.rank(); ++j)
            if (v[j]) T = rmul(T, rpow(gen_act[j], v[j]));
        M = radd(M, rscale(T, lam[k]));
    }
    return M;
}

void GChainComplex::validate() const {
    for (size_t q = 1; q < d.size(); ++q) {
        ResidueMatrix comp = rmul(d[q - 1], d[q]);
        C[q - 1].normalize_matrix(comp);
        if (!comp.is_zero()) throw std::logic_error("chain complex: d∘d != 0");
    }
}

FreeCover free_cover(const GModule& M) {
    FreeCover out;
    const int m = M.dim();
    const long long n = M.G.order();
    if (m == 0) {
        out.rank = 0;
        out.aug = ResidueMatrix(M.R, 0, 0);
        out.gens = ResidueMatrix(M.R, 0, 0);
        return out;
    }
    // m·M = p·M + Σ (g_j - 1) M
    ResidueMatrix mM(M.R, m, 0);
    mM = rhcat(mM, rscale(ResidueMatrix::identity(M.R, m), M.R.p));
    for (int j = 0; j < M.G.rank(); ++j)
        mM = rhcat(mM, rsub(M.act[j], ResidueMatrix::identity(M.R, m)));
    Subquotient top = subquotient(M, ResidueMatrix::identity(M.R, m), mM);
    out.rank = top.mod.dim();
    out.gens = top.gens;
    out.aug = ResidueMatrix(M.R, m, static_cast<int>(out.rank * n));
    for (int k = 0; k < out.rank; ++k) {
        std::vector<long long> v(m);
        for (int i = 0; i < m; ++i) v[i] = top.gens.at(i, k);
        for (long long g = 0; g < n; ++g) {
            auto w = rmul_vec(M.act_of_index(g), v);
            for (int i = 0; i < m; ++i) out.aug.at(i, static_cast<int>(k * n + g)) = w[i];
        }
    }
    return out;
}

namespace {

bool lattice_is_zero(const GModule& ambient, const ResidueMatrix& L) {
    ResidueMatrix M = L;
    ambient.normalize_matrix(M);
    return M.is_zero();
}

// module generators of the sublattice K of a module A, by Nakayama
ResidueMatrix nakayama_gens(const GModule& A, const ResidueMatrix& K) {
    ResidueMatrix mK(A.R, A.dim(), 0);
    mK = rhcat(mK, rscale(K, A.R.p));
    for (int j = 0; j < A.G.rank(); ++j)
        mK = rhcat(mK, rmul(rsub(A.act[j], ResidueMatrix::identity(A.R, A.dim())), K));
    Subquotient top = subquotient(A, K, mK);
    return top.gens;
}

}  // namespace

FreeResolution projective_resolution(const GModule& M, int length) {
    FreeResolution P;
    P.G = M.G;
    P.R = M.R;
    P.target = M;
    const long long n = M.G.order();

    FreeCover cov = free_cover(M);
    P.ranks.push_back(cov.rank);
    P.aug = cov.aug;

    if (length == 0) return P;

    // kernel of the augmentation inside F_0
    GModule F0 = free_module(M.G, M.R, cov.rank);
    ResidueMatrix K = preimage_lattice(F0, M, cov.aug, ResidueMatrix(M.R, M.dim(), 0));

    for (int q = 1; q <= length; ++q) {
        GModule Fprev = free_module(M.G, M.R, P.ranks[q - 1]);
        if (P.ranks[q - 1] == 0 || lattice_is_zero(Fprev, K)) {
            P.ranks.push_back(0);
            P.d.emplace_back(P.ranks[q - 1], 0, n);
            K = ResidueMatrix(M.R, P.ranks[q - 1] == 0 ? 0 : Fprev.dim(), 0);
            continue;
        }
        ResidueMatrix gens = nakayama_gens(Fprev, K);
        int rank = gens.cols;
        FreeGMap dq(P.ranks[q - 1], rank, n);
        for (int t = 0; t < rank; ++t)
            for (int k = 0; k < P.ranks[q - 1]; ++k)
                for (long long g = 0; g < n; ++g)
                    dq.at(k, t)[g] = gens.at(static_cast<int>(k * n + g), t);
        P.ranks.push_back(rank);
        K = kernel_generators(compile_free_map(M.G, M.R, dq));
        P.d.push_back(std::move(dq));
    }
    return P;
}

bool verify_resolution(const FreeResolution& P) {
    const GModule& M = P.target;
    // augmentation onto M
    if (M.dim() > 0) {
        ResidueMatrix full = ResidueMatrix::identity(M.R, M.dim());
        if (!lattice_leq(M, full, P.aug)) return false;
    }
    GModule F0 = free_module(P.G, P.R, P.ranks[0]);
    ResidueMatrix K = preimage_lattice(F0, M, P.aug, ResidueMatrix(M.R, M.dim(), 0));
    for (size_t q = 0; q < P.d.size(); ++q) {
        GModule F = free_module(P.G, P.R, P.ranks[q]);
        ResidueMatrix im = compile_free_map(P.G, P.R, P.d[q]);
        if (!lattice_eq(F, im, K)) return false;
        K = kernel_generators(im);
    }
    return true;
}

InjectiveResolution injective_resolution(const GModule& A, int length) {
    InjectiveResolution I;
    I.target = A;
    GModule Adual = pontryagin_dual(A);
    FreeResolution P = projective_resolution(Adual, length);
    std::vector<GModule> frees;
    for (int q = 0; q <= P.length(); ++q) frees.push_back(P.free_at(q));
    for (int q = 0; q <= P.length(); ++q) I.I.push_back(pontryagin_dual(frees[q]));
    // coaug: (A^∨)^∨ -> F_0^∨; biduality is the identity on this presentation
    I.coaug = dual_hom(frees[0], Adual, P.aug);
    for (int q = 0; q + 1 <= P.length(); ++q) {
        ResidueMatrix dmat = compile_free_map(P.G, P.R, P.d[q]);
        I.d.push_back(dual_hom(frees[q + 1], frees[q], dmat));
    }
    return I;
}

CochainComplex hom_cochains(const FreeResolution& P, const std::vector<int>& compB,
                            const std::vector<ResidueMatrix>& ring_gen_act_on_B,
                            const FinitePGroup& outer,
                            const std::vector<ResidueMatrix>& outer_act_on_B) {
    CochainComplex out;
    const int b = static_cast<int>(compB.size());
    const int L = P.length();
    for (int q = 0; q <= L; ++q) {
        GModule Cq;
        Cq.R = P.R;
        Cq.G = outer;
        for (int k = 0; k < P.ranks[q]; ++k)
            Cq.comp.insert(Cq.comp.end(), compB.begin(), compB.end());
        for (int i = 0; i < outer.rank(); ++i) {
            ResidueMatrix T(P.R, Cq.dim(), Cq.dim());
            for (int k = 0; k < P.ranks[q]; ++k)
                for (int r = 0; r < b; ++r)
                    for (int c = 0; c < b; ++c) T.at(k * b + r, k * b + c) = outer_act_on_B[i].at(r, c);
            Cq.act.push_back(std::move(T));
        }
        out.C.push_back(std::move(Cq));
    }
    for (int q = 0; q + 1 <= L; ++q) {
        const FreeGMap& d = P.d[q];  // F_{q+1} -> F_q
        ResidueMatrix delta(P.R, P.ranks[q + 1] * b, P.ranks[q] * b);
        for (int j = 0; j < P.ranks[q + 1]; ++j)
            for (int k = 0; k < P.ranks[q]; ++k) {
                ResidueMatrix blk = ring_elem_action(P.G, P.R, d.at(k, j), ring_gen_act_on_B, b);
                for (int r = 0; r < b; ++r)
                    for (int c = 0; c < b; ++c) delta.at(j * b + r, k * b + c) = blk.at(r, c);
            }
        out.delta.push_back(std::move(delta));
    }
    return out;
}

std::vector<Subquotient> cochain_cohomology(const CochainComplex& Cx, int qmax) {
    std::vector<Subquotient> H;
    for (int q = 0; q <= qmax; ++q) {
        const GModule& Cq = Cx.C[q];
        ResidueMatrix Z = (q < static_cast<int>(Cx.delta.size()))
                              ? preimage_lattice(Cq, Cx.C[q + 1], Cx.delta[q],
                                                 ResidueMatrix(Cq.R, Cx.C[q + 1].dim(), 0))
                              : rhcat(ResidueMatrix::identity(Cq.R, Cq.dim()), Cq.relations());
        ResidueMatrix B = (q > 0) ? Cx.delta[q - 1] : ResidueMatrix(Cq.R, Cq.dim(), 0);
        H.push_back(subquotient(Cq, Z, B));
    }
    return H;
}

CohomologyResult group_cohomology(const FinitePGroup& G, const Subgroup& H, const GModule& A,
                                  int qmax) {
    CohomologyResult out;
    SubgroupBasis basis = subgroup_basis(G, H);
    FinitePGroup Habs(G.p, basis.cyc);
    GModule triv = trivial_module(A.R, Habs, {A.R.N});
    FreeResolution P = projective_resolution(triv, qmax + 1);
    std::vector<ResidueMatrix> ring_act;
    for (const auto& hv : basis.gens) ring_act.push_back(A.act_of(hv));
    CochainComplex Cx = hom_cochains(P, A.comp, ring_act, G, A.act);
    out.raw = cochain_cohomology(Cx, qmax);
    out.Q = quotient_group(G, H);
    for (const auto& sq : out.raw) out.H.push_back(descend_action(sq.mod, out.Q, H));
    return out;
}

std::vector<GModule> ext_over_group_ring(const GModule& M, const GModule& B, int pmax) {
    FreeResolution P = projective_resolution(M, pmax + 1);
    CochainComplex Cx = hom_cochains(P, B.comp, B.act, B.G, B.act);
    auto H = cochain_cohomology(Cx, pmax);
    std::vector<GModule> out;
    for (auto& sq : H) out.push_back(sq.mod);
    return out;
}

ExtRingResult ext_into_quotient_ring(const GModule& M, const FinitePGroup& G, const Subgroup& H,
                                     int pmax) {
    ExtRingResult out;
    out.Q = quotient_group(G, H);
    const FinitePGroup& Gbar = out.Q.q;
    const long long nb = Gbar.order();
    const ResidueRing& R = M.R;
    // Λ_n(G/H) as a G-module through the projection (left multiplication)
    std::vector<int> compB(nb, R.N);
    std::vector<ResidueMatrix> ring_act;
    for (int j = 0; j < G.rank(); ++j) {
        ResidueMatrix T(R, static_cast<int>(nb), static_cast<int>(nb));
        long long s = Gbar.index_of(out.Q.proj[j]);
        for (long long g = 0; g < nb; ++g) T.at(static_cast<int>(Gbar.add(g, s)), static_cast<int>(g)) = 1;
        ring_act.push_back(std::move(T));
    }
    // quotient group acts on values through inverses
    std::vector<ResidueMatrix> outer_act;
    for (int i = 0; i < Gbar.rank(); ++i) {
        ResidueMatrix T(R, static_cast<int>(nb), static_cast<int>(nb));
        std::vector<long long> e(Gbar.rank(), 0);
        e[i] = 1;
        long long s = Gbar.neg(Gbar.index_of(e));
        for (long long g = 0; g < nb; ++g) T.at(static_cast<int>(Gbar.add(g, s)), static_cast<int>(g)) = 1;
        outer_act.push_back(std::move(T));
    }
    FreeResolution P = projective_resolution(M, pmax + 1);
    CochainComplex Cx = hom_cochains(P, compB, ring_act, Gbar, outer_act);
    auto Hc = cochain_cohomology(Cx, pmax);
    for (auto& sq : Hc) out.E.push_back(sq.mod);
    return out;
}

std::vector<FiniteModuleType> bar_cohomology(const FinitePGroup& G, const Subgroup& H,
                                             const GModule& A, int qmax) {
    const long long h = H.order();
    const int m = A.dim();
    long long space = m;
    for (int q = 0; q <= qmax + 1; ++q) {
        if (space > guards().max_bar_space) throw resource_bound("bar resolution too large");
        space *= h;
    }
    const ResidueRing& R = A.R;
    FinitePGroup triv(G.p, {});
    auto dim_of = [&](int q) {
        long long d = m;
        for (int i = 0; i < q; ++i) d *= h;
        return d;
    };
    // position of a group element index inside H.elements
    auto pos = [&](long long idx) {
        return static_cast<long long>(
            std::lower_bound(H.elements.begin(), H.elements.end(), idx) - H.elements.begin());
    };
    std::vector<ResidueMatrix> acts(h, ResidueMatrix(R, 0, 0));
    for (long long u = 0; u < h; ++u) acts[u] = A.act_of_index(H.elements[u]);

    std::vector<ResidueMatrix> delta;  // delta[q]: C^q -> C^{q+1}
    for (int q = 0; q <= qmax; ++q) {
        long long rows = dim_of(q + 1), cols = dim_of(q);
        ResidueMatrix D(R, static_cast<int>(rows), static_cast<int>(cols));
        long long tuples = rows / m;
        std::vector<long long> u(q + 1);
        for (long long t = 0; t < tuples; ++t) {
            long long tt = t;
            for (int i = q; i >= 0; --i) {
                u[i] = tt % h;
                tt /= h;
            }
            // first face: u_0 acts on φ(u_1..u_q)
            long long col_t = 0;
            for (int i = 1; i <= q; ++i) col_t = col_t * h + u[i];
            const ResidueMatrix& T = acts[u[0]];
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c)
                    D.at(static_cast<int>(t * m + r), static_cast<int>(col_t * m + c)) =
                        R.reduce(D.at(static_cast<int>(t * m + r), static_cast<int>(col_t * m + c)) +
                                 T.at(r, c));
            // middle faces: merge u_{i-1} u_i
            long long sign = 1;
            for (int i = 1; i <= q; ++i) {
                sign = -sign;
                long long merged = pos(G.add(H.elements[u[i - 1]], H.elements[u[i]]));
                long long ct = 0;
                for (int k = 0; k <= q; ++k) {
                    if (k == i - 1) ct = ct * h + merged;
                    else if (k == i) continue;
                    else ct = ct * h + u[k];
                }
                for (int r = 0; r < m; ++r)
                    D.at(static_cast<int>(t * m + r), static_cast<int>(ct * m + r)) = R.reduce(
                        D.at(static_cast<int>(t * m + r), static_cast<int>(ct * m + r)) + sign);
            }
            // last face: drop u_q
            sign = (q % 2 == 0) ? -1 : 1;  // (-1)^{q+1}
            long long ct = 0;
            for (int k = 0; k < q; ++k) ct = ct * h + u[k];
            for (int r = 0; r < m; ++r)
                D.at(static_cast<int>(t * m + r), static_cast<int>(ct * m + r)) =
                    R.reduce(D.at(static_cast<int>(t * m + r), static_cast<int>(ct * m + r)) + sign);
        }
        delta.push_back(std::move(D));
    }

    std::vector<FiniteModuleType> out;
    for (int q = 0; q <= qmax; ++q) {
        GModule Cq;
        Cq.R = R;
        Cq.G = triv;
        Cq.comp.assign(static_cast<size_t>(dim_of(q)), 0);
        {
            size_t idx = 0;
            for (long long t = 0; t < dim_of(q) / m; ++t)
                for (int i = 0; i < m; ++i) Cq.comp[idx++] = A.comp[i];
        }
        GModule Cq1;
        Cq1.R = R;
        Cq1.G = triv;
        for (long long t = 0; t < dim_of(q + 1) / m; ++t)
            for (int i = 0; i < m; ++i) Cq1.comp.push_back(A.comp[i]);
        ResidueMatrix Z = preimage_lattice(Cq, Cq1, delta[q], ResidueMatrix(R, Cq1.dim(), 0));
        ResidueMatrix B = (q > 0) ? delta[q - 1] : ResidueMatrix(R, Cq.dim(), 0);
        out.push_back(subquotient(Cq, Z, B).mod.type());
    }
    return out;
}

FreeResolution horseshoe(const GModule& X, const GModule& Y, const GModule& W,
                         const ResidueMatrix& incl, const ResidueMatrix& proj,
                         const FreeResolution& PX, const FreeResolution& PW) {
    const ResidueRing& R = Y.R;
    const FinitePGroup& G = Y.G;
    const long long n = G.order();
    if (W.dim() == 0) {
        FreeResolution P = PX;
        P.target = Y;
        P.aug = rmul(incl, PX.aug);
        return P;
    }
    if (X.dim() == 0) {
        FreeResolution P = PW;
        P.target = Y;
        // lift the augmentation through the iso proj
        ResidueMatrix aug(R, Y.dim(), PW.aug.cols);
        ResidueMatrix solveM = rhcat(proj, W.relations());
        for (int c = 0; c < PW.aug.cols; ++c) {
            std::vector<long long> w(W.dim());
            for (int i = 0; i < W.dim(); ++i) w[i] = PW.aug.at(i, c);
            auto y = solve_linear(solveM, w);
            if (!y) throw std::logic_error("horseshoe: projection not surjective");
            for (int i = 0; i < Y.dim(); ++i) aug.at(i, c) = (*y)[i];
        }
        P.aug = aug;
        return P;
    }
    if (PX.length() != PW.length()) throw std::logic_error("horseshoe: length mismatch");
    const int L = PX.length();

    FreeResolution P;
    P.G = G;
    P.R = R;
    P.target = Y;
    for (int q = 0; q <= L; ++q) P.ranks.push_back(PX.ranks[q] + PW.ranks[q]);

    // τ on the free generators of F^W_0
    ResidueMatrix tau(R, Y.dim(), PW.ranks[0]);
    {
        ResidueMatrix solveM = rhcat(proj, W.relations());
        for (int k = 0; k < PW.ranks[0]; ++k) {
            std::vector<long long> w(W.dim());
            for (int i = 0; i < W.dim(); ++i) w[i] = PW.aug.at(i, static_cast<int>(k * n));
            auto y = solve_linear(solveM, w);
            if (!y) throw std::logic_error("horseshoe: projection not surjective");
            for (int i = 0; i < Y.dim(); ++i) tau.at(i, k) = (*y)[i];
        }
    }
    // assemble aug: X-part incl∘aug^X, W-part the module-map extension of τ
    ResidueMatrix tauext(R, Y.dim(), static_cast<int>(PW.ranks[0] * n));
    for (int k = 0; k < PW.ranks[0]; ++k) {
        std::vector<long long> y(Y.dim());
        for (int i = 0; i < Y.dim(); ++i) y[i] = tau.at(i, k);
        for (long long g = 0; g < n; ++g) {
            auto w = rmul_vec(Y.act_of_index(g), y);
            for (int i = 0; i < Y.dim(); ++i)
                tauext.at(i, static_cast<int>(k * n + g)) = w[i];
        }
    }
    P.aug = ResidueMatrix(R, Y.dim(), static_cast<int>(P.ranks[0] * n));
    {
        ResidueMatrix xa = rmul(incl, PX.aug);
        for (int c = 0; c < xa.cols; ++c)
            for (int i = 0; i < Y.dim(); ++i) P.aug.at(i, c) = xa.at(i, c);
        int off = static_cast<int>(PX.ranks[0] * n);
        for (int c = 0; c < tauext.cols; ++c)
            for (int i = 0; i < Y.dim(); ++i) P.aug.at(i, off + c) = tauext.at(i, c);
    }

    // corrections s_q : F^W_q -> F^X_{q-1}, solved degreewise
    std::vector<ResidueMatrix> scomp;  // component matrices
    for (int q = 1; q <= L; ++q) {
        GModule FXprev = free_module(G, R, PX.ranks[q - 1]);
        ResidueMatrix dW = compile_free_map(G, R, PW.d[q - 1]);
        ResidueMatrix s(R, FXprev.dim(), static_cast<int>(PW.ranks[q] * n));
        if (PW.ranks[q] > 0 && PX.ranks[q - 1] >= 0) {
            for (int k = 0; k < PW.ranks[q]; ++k) {
                // rhs at the free generator (k, e)
                std::vector<long long> dcol(dW.rows);
                for (int i = 0; i < dW.rows; ++i) dcol[i] = dW.at(i, static_cast<int>(k * n));
                std::vector<long long> u;
                if (q == 1) {
                    // solve incl∘aug^X∘u = -τ(dW gen)
                    std::vector<long long> z = rmul_vec(tauext, dcol);
                    for (auto& v : z) v = R.reduce(-v);
                    ResidueMatrix MA = rhcat(incl, Y.relations());
                    auto xt = solve_linear(MA, z);
                    if (!xt) throw std::logic_error("horseshoe: cycle not in the submodule");
                    std::vector<long long> xv(xt->begin(), xt->begin() + X.dim());
                    ResidueMatrix MB = rhcat(PX.aug, X.relations());
                    auto uu = solve_linear(MB, xv);
                    if (!uu) throw std::logic_error("horseshoe: augmentation not surjective");
                    u.assign(uu->begin(), uu->begin() + PX.ranks[0] * n);
                } else {
                    std::vector<long long> z = rmul_vec(scomp[q - 2], dcol);
                    for (auto& v : z) v = R.reduce(-v);
                    ResidueMatrix dX = compile_free_map(G, R, PX.d[q - 2]);
                    auto uu = solve_linear(dX, z);
                    if (!uu) throw std::logic_error("horseshoe: correction not liftable");
                    u = *uu;
                }
                // extend over the group: columns (k, g)
                for (long long g = 0; g < n; ++g) {
                    auto w = rmul_vec(FXprev.act_of_index(g), u);
                    for (int i = 0; i < FXprev.dim(); ++i)
                        s.at(i, static_cast<int>(k * n + g)) = w[i];
                }
            }
        }
        scomp.push_back(s);
        // assemble d_q as a FreeGMap: [[dX, s],[0, dW]]
        FreeGMap d(P.ranks[q - 1], P.ranks[q], n);
        for (int i = 0; i < PX.ranks[q - 1]; ++i)
            for (int j = 0; j < PX.ranks[q]; ++j) d.at(i, j) = PX.d[q - 1].at(i, j);
        for (int i = 0; i < PW.ranks[q - 1]; ++i)
            for (int j = 0; j < PW.ranks[q]; ++j)
                d.at(PX.ranks[q - 1] + i, PX.ranks[q] + j) = PW.d[q - 1].at(i, j);
        for (int j = 0; j < PW.ranks[q]; ++j)
            for (int i = 0; i < PX.ranks[q - 1]; ++i)
                for (long long g = 0; g < n; ++g)
                    d.at(i, PX.ranks[q] + j)[g] = s.at(static_cast<int>(i * n + g),
                                                       static_cast<int>(j * n));
        P.d.push_back(std::move(d));
    }
    return P;
}

namespace {

Subquotient identity_subquotient(const GModule& A) {
    return subquotient(A, ResidueMatrix::identity(A.R, A.dim()), ResidueMatrix(A.R, A.dim(), 0));
}

}  // namespace

CEResolution cartan_eilenberg(const GChainComplex& Cx, int plen) {
    CEResolution ce;
    const int nq = static_cast<int>(Cx.C.size());
    ce.cols = nq;
    ce.prows = plen + 1;
    if (nq == 0) return ce;
    ce.G = Cx.C[0].G;
    ce.R = Cx.C[0].R;
    const FinitePGroup& G = ce.G;
    const ResidueRing& R = ce.R;

    std::vector<Subquotient> SQB(nq), SQZ(nq), SQH(nq);
    std::vector<FreeResolution> RB(nq), RC(nq);
    for (int q = 0; q < nq; ++q) {
        const GModule& Cq = Cx.C[q];
        // cycles: kernel of d_q (everything for q = 0)
        ResidueMatrix Z(R, Cq.dim(), 0);
        if (q == 0) {
            Z = rhcat(ResidueMatrix::identity(R, Cq.dim()), Cq.relations());
        } else {
            Z = preimage_lattice(Cq, Cx.C[q - 1], Cx.d[q - 1],
                                 ResidueMatrix(R, Cx.C[q - 1].dim(), 0));
        }
        ResidueMatrix B = (q + 1 < nq) ? Cx.d[q] : ResidueMatrix(R, Cq.dim(), 0);
        SQB[q] = subquotient(Cq, B, ResidueMatrix(R, Cq.dim(), 0));
        SQZ[q] = subquotient(Cq, Z, ResidueMatrix(R, Cq.dim(), 0));
        SQH[q] = subquotient(Cq, Z, B);
        RB[q] = projective_resolution(SQB[q].mod, plen);
    }
    for (int q = 0; q < nq; ++q) {
        const GModule& Cq = Cx.C[q];
        FreeResolution RHq = projective_resolution(SQH[q].mod, plen);
        ResidueMatrix i1 = induced_hom(SQB[q], SQZ[q], ResidueMatrix::identity(R, Cq.dim()));
        ResidueMatrix p1 = induced_hom(SQZ[q], SQH[q], ResidueMatrix::identity(R, Cq.dim()));
        FreeResolution RZq = horseshoe(SQB[q].mod, SQZ[q].mod, SQH[q].mod, i1, p1, RB[q], RHq);
        if (q == 0) {
            // RC_0 resolves C_0 = Z_0
            FreeResolution tmp = RZq;
            tmp.target = Cq;
            tmp.aug = rmul(SQZ[q].gens, RZq.aug);
            RC[q] = tmp;
        } else {
            ResidueMatrix i2 = SQZ[q].gens;  // SQZ_q -> C_q
            Subquotient idq = identity_subquotient(Cq);
            ResidueMatrix p2 = induced_hom(idq, SQB[q - 1], Cx.d[q - 1]);
            RC[q] = horseshoe(SQZ[q].mod, Cq, SQB[q - 1].mod, i2, p2, RZq, RB[q - 1]);
        }
    }

    ce.rank.assign(nq, std::vector<int>(plen + 1, 0));
    ce.vert.assign(nq, {});
    ce.horiz.assign(nq, {});
    ce.aug.clear();
    for (int q = 0; q < nq; ++q) {
        for (int p = 0; p <= plen; ++p) ce.rank[q][p] = RC[q].ranks[p];
        ce.vert[q] = RC[q].d;
        ce.aug.push_back(RC[q].aug);
    }
    // horizontal maps: identity of the B_{q-1}-summand into RZ_{q-1}'s B-part
    for (int q = 0; q < nq; ++q) {
        std::vector<FreeGMap> hq;
        for (int p = 0; p <= plen; ++p) {
            FreeGMap h(q > 0 ? ce.rank[q - 1][p] : 0, ce.rank[q][p], G.order());
            if (q > 0) {
                // source layout: [RZ_q | RB_{q-1}], target layout: [RB_{q-1} | RH_{q-1} | RB_{q-2}]
                int srcoff = RC[q].ranks[p] - RB[q - 1].ranks[p];
                for (int j = 0; j < RB[q - 1].ranks[p]; ++j) h.at(j, srcoff + j)[0] = 1;
            }
            hq.push_back(std::move(h));
        }
        ce.horiz[q] = std::move(hq);
    }
    return ce;
}

RingElem push_ring_elem(const FinitePGroup& G, const QuotientGroup& Q, const RingElem& lam) {
    RingElem out(Q.q.order(), 0);
    for (long long g = 0; g < G.order(); ++g) {
        if (lam[g] == 0) continue;
        auto v = G.element(g);
        std::vector<long long> img(Q.q.rank(), 0);
        for (int j = 0; j < G.rank(); ++j)
            for (int i = 0; i < Q.q.rank(); ++i) img[i] += v[j] * Q.proj[j][i];
        out[Q.q.index_of(img)] += lam[g];
    }
    return out;
}

FreeGMap push_map(const FinitePGroup& G, const QuotientGroup& Q, const FreeGMap& f) {
    FreeGMap out(f.rows, f.cols, Q.q.order());
    for (int i = 0; i < f.rows; ++i)
        for (int j = 0; j < f.cols; ++j) out.at(i, j) = push_ring_elem(G, Q, f.at(i, j));
    return out;
}

GChainComplex coinvariants_complex(const FreeResolution& P, const FinitePGroup& G,
                                   const QuotientGroup& Q) {
    GChainComplex Cx;
    for (int q = 0; q <= P.length(); ++q) Cx.C.push_back(free_module(Q.q, P.R, P.ranks[q]));
    for (size_t q = 0; q < P.d.size(); ++q) {
        FreeGMap pushed = push_map(G, Q, P.d[q]);
        ResidueMatrix M = compile_free_map(Q.q, P.R, pushed);
        for (auto& x : M.a) x = P.R.reduce(x);
        Cx.d.push_back(std::move(M));
    }
    return Cx;
}

}  // namespace iwahom
