#include "iwahom/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace iwahom {

SizeGuards& guards() {
    static SizeGuards g;
    return g;
}

FinitePGroup::FinitePGroup(long long p_, std::vector<int> orders_)
    : p(p_), orders(std::move(orders_)) {
    if (!is_prime(p)) throw input_error("group: p not prime");
    for (int m : orders)
        if (m < 1) throw input_error("group: generator order exponent must be >= 1");
    if (order() > guards().max_group_order) throw resource_bound("group order exceeds guard");
}

long long FinitePGroup::order() const {
    long long o = 1;
    for (int m : orders) {
        for (int i = 0; i < m; ++i) {
            o *= p;
            if (o > (1LL << 40)) throw resource_bound("group order overflow");
        }
    }
    return o;
}

long long FinitePGroup::gen_order(int j) const {
    long long o = 1;
    for (int i = 0; i < orders[j]; ++i) o *= p;
    return o;
}

long long FinitePGroup::index_of(const std::vector<long long>& v) const {
    long long idx = 0;
    for (int j = 0; j < rank(); ++j) {
        long long oj = gen_order(j);
        long long c = v[j] % oj;
        if (c < 0) c += oj;
        idx = idx * oj + c;
    }
    return idx;
}

std::vector<long long> FinitePGroup::element(long long idx) const {
    std::vector<long long> v(rank(), 0);
    for (int j = rank() - 1; j >= 0; --j) {
        long long oj = gen_order(j);
        v[j] = idx % oj;
        idx /= oj;
    }
    return v;
}

long long FinitePGroup::add(long long i, long long j) const {
    auto a = element(i), b = element(j);
    for (int k = 0; k < rank(); ++k) a[k] += b[k];
    return index_of(a);
}

long long FinitePGroup::neg(long long i) const {
    auto a = element(i);
    for (auto& x : a) x = -x;
    return index_of(a);
}

bool Subgroup::contains(long long idx) const {
    return std::binary_search(elements.begin(), elements.end(), idx);
}

Subgroup make_subgroup(const FinitePGroup& G, const std::vector<std::vector<long long>>& gens) {
    Subgroup H;
    H.gens = gens;
    for (auto& g : H.gens)
        if (static_cast<int>(g.size()) != G.rank())
            throw input_error("subgroup generator has wrong length");
    std::set<long long> elems{0};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : H.gens) {
            long long gi = G.index_of(g);
            std::vector<long long> next;
            for (long long e : elems) {
                long long s = G.add(e, gi);
                if (!elems.count(s)) next.push_back(s);
            }
            if (!next.empty()) {
                grew = true;
                elems.insert(next.begin(), next.end());
            }
        }
    }
    H.elements.assign(elems.begin(), elems.end());
    return H;
}

Subgroup trivial_subgroup(const FinitePGroup& G) { return make_subgroup(G, {}); }

Subgroup full_subgroup(const FinitePGroup& G) {
    std::vector<std::vector<long long>> gens;
    for (int j = 0; j < G.rank(); ++j) {
        std::vector<long long> e(G.rank(), 0);
        e[j] = 1;
        gens.push_back(e);
    }
    return make_subgroup(G, gens);
}

bool subgroup_leq(const Subgroup& A, const Subgroup& B) {
    return std::includes(B.elements.begin(), B.elements.end(), A.elements.begin(),
                         A.elements.end());
}

SubgroupBasis subgroup_basis(const FinitePGroup& G, const Subgroup& H) {
    const int r = G.rank();
    const int s = static_cast<int>(H.gens.size());
    SubgroupBasis out;
    if (r == 0) return out;
    // L = columns of [gens | diag(p^m)]; H = L / diag lattice
    ZMat B(r, s + r);
    for (int c = 0; c < s; ++c)
        for (int i = 0; i < r; ++i) B.at(i, c) = H.gens[c][i];
    for (int j = 0; j < r; ++j) B.at(j, s + j) = G.gen_order(j);
    ZSmith sm = smith_z(B);
    // basis of L: w_i = d_i * Uinv e_i (full rank: all d_i > 0)
    ZMat W(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) W.at(i, j) = checked_mul(sm.Uinv.at(i, j), sm.D.at(j, j));
    // X = W^{-1} diag(p^m) = D^{-1} U diag(p^m), integral because diag ⊆ L
    ZMat X(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            long long num = checked_mul(sm.U.at(i, j), G.gen_order(j));
            if (num % sm.D.at(i, i) != 0) throw std::logic_error("subgroup_basis: not integral");
            X.at(i, j) = num / sm.D.at(i, i);
        }
    ZSmith sm2 = smith_z(X);
    // H ≅ coker(X) in the w-basis; generator i = W * Uinv2 e_i of order D2_ii
    ZMat Gens = zmul(W, sm2.Uinv);
    for (int i = 0; i < r; ++i) {
        long long d = sm2.D.at(i, i);
        if (d <= 1) continue;
        int c = 0;
        long long dd = d;
        while (dd > 1) {
            if (dd % G.p != 0) throw std::logic_error("subgroup_basis: non p-power order");
            dd /= G.p;
            ++c;
        }
        std::vector<long long> v(r);
        for (int k = 0; k < r; ++k) {
            long long m = Gens.at(k, i) % G.gen_order(k);
            v[k] = m < 0 ? m + G.gen_order(k) : m;
        }
        out.gens.push_back(v);
        out.cyc.push_back(c);
    }
    return out;
}

QuotientGroup quotient_group(const FinitePGroup& G, const Subgroup& H) {
    const int r = G.rank();
    const int s = static_cast<int>(H.gens.size());
    QuotientGroup Q;
    if (r == 0) {
        Q.q = FinitePGroup(G.p, {});
        return Q;
    }
    ZMat B(r, r + s);
    for (int j = 0; j < r; ++j) B.at(j, j) = G.gen_order(j);
    for (int c = 0; c < s; ++c)
        for (int i = 0; i < r; ++i) B.at(i, r + c) = H.gens[c][i];
    ZSmith sm = smith_z(B);
    std::vector<int> kept;
    std::vector<int> texp;
    for (int i = 0; i < r; ++i) {
        long long d = sm.D.at(i, i);
        if (d <= 1) continue;
        int c = 0;
        while (d > 1) {
            if (d % G.p != 0) throw std::logic_error("quotient_group: non p-power order");
            d /= G.p;
            ++c;
        }
        kept.push_back(i);
        texp.push_back(c);
    }
    Q.q = FinitePGroup(G.p, texp);
    // y = U x: proj(g_j) = kept rows of U e_j
    Q.proj.assign(r, {});
    for (int j = 0; j < r; ++j) {
        std::vector<long long> v(kept.size());
        for (size_t k = 0; k < kept.size(); ++k) {
            long long ord = Q.q.gen_order(static_cast<int>(k));
            long long m = sm.U.at(kept[k], j) % ord;
            v[k] = m < 0 ? m + ord : m;
        }
        Q.proj[j] = v;
    }
    Q.lift.assign(kept.size(), {});
    for (size_t k = 0; k < kept.size(); ++k) {
        std::vector<long long> v(r);
        for (int i = 0; i < r; ++i) {
            long long m = sm.Uinv.at(i, kept[k]) % G.gen_order(i);
            v[i] = m < 0 ? m + G.gen_order(i) : m;
        }
        Q.lift[k] = v;
    }
    return Q;
}

long long GModule::order_log() const {
    long long s = 0;
    for (int e : comp) s += e;
    return s;
}

ResidueMatrix GModule::relations() const {
    ResidueMatrix rel(R, dim(), dim());
    for (int i = 0; i < dim(); ++i) rel.at(i, i) = R.pow_p(comp[i]) % R.mod;
    return rel;
}

ResidueMatrix GModule::act_of(const std::vector<long long>& gvec) const {
    ResidueMatrix M = ResidueMatrix::identity(R, dim());
    for (int j = 0; j < G.rank(); ++j) {
        long long e = gvec[j] % G.gen_order(j);
        if (e < 0) e += G.gen_order(j);
        if (e) M = rmul(M, rpow(act[j], e));
    }
    return M;
}

ResidueMatrix GModule::act_of_index(long long idx) const { return act_of(G.element(idx)); }

void GModule::normalize_matrix(ResidueMatrix& M) const {
    for (int i = 0; i < dim(); ++i) {
        long long pe = R.pow_p(comp[i]);
        for (int j = 0; j < M.cols; ++j) M.at(i, j) %= pe;
    }
}

GModule trivial_module(const ResidueRing& R, const FinitePGroup& G, std::vector<int> comp) {
    if (comp.empty()) comp = {R.N};
    GModule A;
    A.R = R;
    A.G = G;
    std::sort(comp.begin(), comp.end(), std::greater<int>());
    A.comp = comp;
    for (int j = 0; j < G.rank(); ++j) A.act.push_back(ResidueMatrix::identity(R, A.dim()));
    return A;
}

GModule free_module(const FinitePGroup& G, const ResidueRing& R, int rank) {
    const long long n = G.order();
    if (rank * n > guards().max_components) throw resource_bound("free module too large");
    GModule A;
    A.R = R;
    A.G = G;
    A.comp.assign(rank * n, R.N);
    for (int j = 0; j < G.rank(); ++j) {
        ResidueMatrix P(R, static_cast<int>(rank * n), static_cast<int>(rank * n));
        std::vector<long long> ej(G.rank(), 0);
        ej[j] = 1;
        long long gj = G.index_of(ej);
        for (int k = 0; k < rank; ++k)
            for (long long g = 0; g < n; ++g)
                P.at(static_cast<int>(k * n + G.add(g, gj)), static_cast<int>(k * n + g)) = 1;
        A.act.push_back(std::move(P));
    }
    return A;
}

GModule group_ring_module(const FinitePGroup& G, const ResidueRing& R) {
    return free_module(G, R, 1);
}

void validate_module(const GModule& A) {
    const int m = A.dim();
    if (static_cast<int>(A.act.size()) != A.G.rank())
        throw input_error("module: one action matrix per group generator required");
    for (int j = 0; j < A.G.rank(); ++j) {
        const ResidueMatrix& T = A.act[j];
        if (T.rows != m || T.cols != m) throw input_error("module: action matrix shape");
        if (!is_hom(A, A, T))
            throw input_error("module: action of g" + std::to_string(j + 1) +
                              " does not respect component orders");
        ResidueMatrix P = rpow(T, A.G.gen_order(j));
        ResidueMatrix D = rsub(P, ResidueMatrix::identity(A.R, m));
        A.normalize_matrix(D);
        if (!D.is_zero())
            throw input_error("module: action of g" + std::to_string(j + 1) +
                              " has order not dividing ord(g)");
    }
    for (int j = 0; j < A.G.rank(); ++j)
        for (int k = j + 1; k < A.G.rank(); ++k) {
            ResidueMatrix C = rsub(rmul(A.act[j], A.act[k]), rmul(A.act[k], A.act[j]));
            A.normalize_matrix(C);
            if (!C.is_zero())
                throw input_error("module: action matrices g" + std::to_string(j + 1) + ", g" +
                                  std::to_string(k + 1) + " do not commute");
        }
}

bool is_hom(const GModule& A, const GModule& B, const ResidueMatrix& f) {
    if (f.rows != B.dim() || f.cols != A.dim()) return false;
    const ResidueRing& R = A.R;
    for (int i = 0; i < B.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            int need = B.comp[i] - A.comp[j];
            if (need > 0 && R.val(f.at(i, j)) < need) return false;
        }
    for (int g = 0; g < A.G.rank(); ++g) {
        ResidueMatrix C = rsub(rmul(f, A.act[g]), rmul(B.act[g], f));
        B.normalize_matrix(C);
        if (!C.is_zero()) return false;
    }
    return true;
}

void require_hom(const GModule& A, const GModule& B, const ResidueMatrix& f) {
    if (!is_hom(A, B, f)) throw std::logic_error("not a module homomorphism");
}

GModule pontryagin_dual(const GModule& A) {
    GModule D;
    D.R = A.R;
    D.G = A.G;
    D.comp = A.comp;
    const int m = A.dim();
    for (int g = 0; g < A.G.rank(); ++g) {
        ResidueMatrix Tinv = rinverse(A.act[g]);
        ResidueMatrix S(A.R, m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                long long x = Tinv.at(j, i);
                int diff = A.comp[i] - A.comp[j];
                if (diff >= 0) {
                    S.at(i, j) = (__int128)x * A.R.pow_p(diff) % A.R.mod;
                } else {
                    long long q = A.R.pow_p(-diff);
                    if (x % q != 0) throw std::logic_error("pontryagin_dual: divisibility");
                    S.at(i, j) = x / q;
                }
            }
        D.normalize_matrix(S);
        D.act.push_back(std::move(S));
    }
    return D;
}

ResidueMatrix dual_hom(const GModule& A, const GModule& B, const ResidueMatrix& f) {
    // f: A -> B; returns B^dual -> A^dual, entries p^{eA_i - eB_j} f_{ji}
    ResidueMatrix S(A.R, A.dim(), B.dim());
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < B.dim(); ++j) {
            long long x = f.at(j, i);
            int diff = A.comp[i] - B.comp[j];
            if (diff >= 0) {
                S.at(i, j) = (__int128)x * A.R.pow_p(diff) % A.R.mod;
            } else {
                long long q = A.R.pow_p(-diff);
                if (x % q != 0) throw std::logic_error("dual_hom: divisibility");
                S.at(i, j) = x / q;
            }
        }
    return S;
}

std::vector<long long> Subquotient::express(const std::vector<long long>& v) const {
    ResidueMatrix M = rhcat(gens, den);
    auto x = solve_linear(M, v);
    if (!x) throw std::logic_error("subquotient: vector not in the numerator lattice");
    std::vector<long long> out(x->begin(), x->begin() + gens.cols);
    for (int i = 0; i < mod.dim(); ++i) out[i] %= mod.R.pow_p(mod.comp[i]);
    return out;
}

bool Subquotient::contains(const std::vector<long long>& v) const {
    ResidueMatrix M = rhcat(gens, den);
    return solve_linear(M, v).has_value();
}

Subquotient subquotient(const GModule& A, const ResidueMatrix& num, const ResidueMatrix& den) {
    const ResidueRing& R = A.R;
    const int m = A.dim();
    ResidueMatrix rel = A.relations();
    ResidueMatrix W = rhcat(num, rel);
    ResidueMatrix Vd = rhcat(den, rel);

    // relations among the columns of W modulo span(Vd)
    ResidueMatrix K = kernel_generators(rhcat(W, Vd));
    ResidueMatrix Q(R, W.cols, K.cols);
    for (int i = 0; i < W.cols; ++i)
        for (int j = 0; j < K.cols; ++j) Q.at(i, j) = K.at(i, j);

    SmithResult sm = smith(Q);
    const int k = W.cols;
    const int lim = std::min(Q.rows, Q.cols);
    ResidueMatrix Gall = rmul(W, sm.Uinv);

    std::vector<std::pair<int, int>> kept;  // (exponent, column), sorted desc by exponent
    for (int i = 0; i < k; ++i) {
        int e = (i < lim) ? sm.dval[i] : R.N;
        if (e >= 1) kept.emplace_back(e, i);
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    Subquotient S;
    S.mod.R = R;
    S.mod.G = A.G;
    for (auto& [e, i] : kept) S.mod.comp.push_back(e);
    S.gens = ResidueMatrix(R, m, static_cast<int>(kept.size()));
    for (size_t t = 0; t < kept.size(); ++t)
        for (int i = 0; i < m; ++i) S.gens.at(i, static_cast<int>(t)) = Gall.at(i, kept[t].second);
    S.num = W;
    S.den = Vd;

    // transport the ambient action to the canonical generators
    ResidueMatrix Expr = rhcat(S.gens, Vd);
    for (int g = 0; g < A.G.rank(); ++g) {
        ResidueMatrix T(R, S.mod.dim(), S.mod.dim());
        for (int t = 0; t < S.mod.dim(); ++t) {
            std::vector<long long> col(m);
            for (int i = 0; i < m; ++i) col[i] = S.gens.at(i, t);
            auto w = rmul_vec(A.act[g], col);
            auto x = solve_linear(Expr, w);
            if (!x) throw std::logic_error("subquotient: action does not preserve the lattice");
            for (int i = 0; i < S.mod.dim(); ++i) T.at(i, t) = (*x)[i];
        }
        S.mod.normalize_matrix(T);
        S.mod.act.push_back(std::move(T));
    }
    return S;
}

Subquotient submodule(const GModule& A, const ResidueMatrix& num) {
    return subquotient(A, num, ResidueMatrix(A.R, A.dim(), 0));
}

Subquotient quotient(const GModule& A, const ResidueMatrix& den) {
    return subquotient(A, ResidueMatrix::identity(A.R, A.dim()), den);
}

ResidueMatrix induced_hom(const Subquotient& S, const Subquotient& T, const ResidueMatrix& f) {
    ResidueMatrix M(T.mod.R, T.mod.dim(), S.mod.dim());
    for (int t = 0; t < S.mod.dim(); ++t) {
        std::vector<long long> col(S.gens.rows);
        for (int i = 0; i < S.gens.rows; ++i) col[i] = S.gens.at(i, t);
        auto w = rmul_vec(f, col);
        auto x = T.express(w);
        for (int i = 0; i < T.mod.dim(); ++i) M.at(i, t) = x[i];
    }
    T.mod.normalize_matrix(M);
    return M;
}

bool lattice_leq(const GModule& A, const ResidueMatrix& W1, const ResidueMatrix& W2) {
    ResidueMatrix M = rhcat(W2, A.relations());
    for (int j = 0; j < W1.cols; ++j) {
        std::vector<long long> v(W1.rows);
        for (int i = 0; i < W1.rows; ++i) v[i] = W1.at(i, j);
        if (!solve_linear(M, v)) return false;
    }
    return true;
}

bool lattice_eq(const GModule& A, const ResidueMatrix& W1, const ResidueMatrix& W2) {
    return lattice_leq(A, W1, W2) && lattice_leq(A, W2, W1);
}

ResidueMatrix preimage_lattice(const GModule& A, const GModule& B, const ResidueMatrix& f,
                               const ResidueMatrix& target_lattice) {
    ResidueMatrix M = rhcat(f, rhcat(target_lattice, B.relations()));
    ResidueMatrix K = kernel_generators(M);
    ResidueMatrix out(A.R, A.dim(), K.cols + A.dim());
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < K.cols; ++j) out.at(i, j) = K.at(i, j);
    ResidueMatrix rel = A.relations();
    for (int i = 0; i < A.dim(); ++i) out.at(i, K.cols + i) = rel.at(i, i);
    return out;
}

ResidueMatrix lattice_intersect(const GModule& A, const ResidueMatrix& W1,
                                const ResidueMatrix& W2) {
    ResidueMatrix rel = A.relations();
    ResidueMatrix L1 = rhcat(W1, rel), L2 = rhcat(W2, rel);
    ResidueMatrix neg = rscale(L2, A.R.mod - 1);
    ResidueMatrix K = kernel_generators(rhcat(L1, neg));
    ResidueMatrix out(A.R, A.dim(), K.cols);
    for (int j = 0; j < K.cols; ++j) {
        std::vector<long long> x(L1.cols);
        for (int i = 0; i < L1.cols; ++i) x[i] = K.at(i, j);
        // intersection element = L1 * x
        for (int i = 0; i < A.dim(); ++i) {
            __int128 s = 0;
            for (int c = 0; c < L1.cols; ++c) s += (__int128)L1.at(i, c) * x[c];
            out.at(i, j) = static_cast<long long>(s % A.R.mod);
            if (out.at(i, j) < 0) out.at(i, j) += A.R.mod;
        }
    }
    return out;
}

Subquotient invariants(const FinitePGroup& G, const Subgroup& U, const GModule& A) {
    const int m = A.dim();
    if (U.gens.empty())
        return subquotient(A, ResidueMatrix::identity(A.R, m), ResidueMatrix(A.R, m, 0));
    // { v : (T_u - 1) v ∈ relations }, over all generators u of U
    ResidueMatrix stack(A.R, 0, m);
    ResidueMatrix relblock(A.R, 0, 0);
    for (const auto& u : U.gens) {
        ResidueMatrix D = rsub(A.act_of(u), ResidueMatrix::identity(A.R, m));
        stack = (stack.rows == 0) ? D : rvcat(stack, D);
    }
    const int copies = static_cast<int>(U.gens.size());
    ResidueMatrix rels(A.R, copies * m, copies * m);
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < m; ++i) rels.at(c * m + i, c * m + i) = A.R.pow_p(A.comp[i]) % A.R.mod;
    ResidueMatrix K = kernel_generators(rhcat(stack, rels));
    ResidueMatrix num(A.R, m, K.cols + m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < K.cols; ++j) num.at(i, j) = K.at(i, j);
    for (int i = 0; i < m; ++i) num.at(i, K.cols + i) = A.R.pow_p(A.comp[i]) % A.R.mod;
    return subquotient(A, num, ResidueMatrix(A.R, m, 0));
}

Subquotient coinvariants(const FinitePGroup& G, const Subgroup& U, const GModule& A) {
    const int m = A.dim();
    ResidueMatrix den(A.R, m, 0);
    for (const auto& u : U.gens) {
        ResidueMatrix D = rsub(A.act_of(u), ResidueMatrix::identity(A.R, m));
        den = rhcat(den, D);
    }
    return subquotient(A, ResidueMatrix::identity(A.R, m), den);
}

ResidueMatrix corestriction_h0(const FinitePGroup& G, const Subgroup& Usub, const Subgroup& U,
                               const GModule& A, const Subquotient& invUsub,
                               const Subquotient& invU) {
    if (!subgroup_leq(Usub, U)) throw input_error("corestriction: subgroups not nested");
    // coset representatives of U / Usub
    std::vector<long long> reps;
    for (long long e : U.elements) {
        bool seen = false;
        for (long long r : reps) {
            if (Usub.contains(G.add(e, G.neg(r)))) {
                seen = true;
                break;
            }
        }
        if (!seen) reps.push_back(e);
    }
    ResidueMatrix Nm(A.R, A.dim(), A.dim());
    for (long long r : reps) Nm = radd(Nm, A.act_of_index(r));
    return induced_hom(invUsub, invU, Nm);
}

SubgroupPoset intermediate_subgroups(const FinitePGroup& G, const Subgroup& H) {
    if (G.order() > guards().max_group_order) throw resource_bound("subgroup poset guard");
    SubgroupPoset P;
    std::map<std::vector<long long>, int> seen;
    std::vector<Subgroup> work{H};
    seen[H.elements] = 0;
    P.nodes.push_back(H);
    for (size_t w = 0; w < work.size(); ++w) {
        Subgroup U = work[w];
        for (long long e = 0; e < G.order(); ++e) {
            if (U.contains(e)) continue;
            auto gens = U.gens;
            gens.push_back(G.element(e));
            Subgroup V = make_subgroup(G, gens);
            if (!seen.count(V.elements)) {
                seen[V.elements] = static_cast<int>(P.nodes.size());
                P.nodes.push_back(V);
                work.push_back(V);
            }
        }
    }
    std::sort(P.nodes.begin(), P.nodes.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    const int n = static_cast<int>(P.nodes.size());
    P.leq.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (subgroup_leq(P.nodes[i], P.nodes[j])) P.leq[i].push_back(j);
    for (int i = 0; i < n; ++i)
        for (int j : P.leq[i])
            if (P.nodes[j].order() == P.nodes[i].order() * G.p) P.covers.emplace_back(i, j);
    return P;
}

GModule descend_action(const GModule& A, const QuotientGroup& Q, const Subgroup& H) {
    for (const auto& h : H.gens) {
        ResidueMatrix D = rsub(A.act_of(h), ResidueMatrix::identity(A.R, A.dim()));
        A.normalize_matrix(D);
        if (!D.is_zero()) throw std::logic_error("descend_action: H does not act trivially");
    }
    GModule B;
    B.R = A.R;
    B.G = Q.q;
    B.comp = A.comp;
    for (const auto& l : Q.lift) B.act.push_back(A.act_of(l));
    return B;
}

}  // namespace iwahom
