#include "iwahom/residue.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace iwahom {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ResidueRing::ResidueRing(long long p_, int N_) : p(p_), N(N_) {
    if (!is_prime(p)) throw input_error("ring: p = " + std::to_string(p) + " is not prime");
    if (N < 1) throw input_error("ring: N must be >= 1");
    mod = 1;
    for (int i = 0; i < N; ++i) {
        if (mod > (1LL << 60) / p) throw resource_bound("ring: p^N too large");
        mod *= p;
    }
}

int ResidueRing::val(long long x) const {
    x = reduce(x);
    if (x == 0) return N;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

long long ResidueRing::pow_p(int e) const {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

long long ResidueRing::unit_inverse(long long u) const {
    u = reduce(u);
    if (u % p == 0) throw input_error("unit_inverse: not a unit");
    // binary exponentiation by Euler: u^(phi-1), phi = p^(N-1)(p-1)
    long long e = (mod / p) * (p - 1) - 1;
    long long r = 1, b = u;
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % mod;
        b = (__int128)b * b % mod;
        e >>= 1;
    }
    return r;
}

FiniteModuleType::FiniteModuleType(std::vector<int> e) : exp(std::move(e)) {
    std::sort(exp.begin(), exp.end(), std::greater<int>());
    while (!exp.empty() && exp.back() <= 0) exp.pop_back();
}

long long FiniteModuleType::length() const {
    long long s = 0;
    for (int e : exp) s += e;
    return s;
}

std::string FiniteModuleType::str() const {
    if (exp.empty()) return "0";
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < exp.size(); ++i) os << (i ? "," : "") << exp[i];
    os << "]";
    return os.str();
}

ResidueMatrix ResidueMatrix::identity(ResidueRing r, int n) {
    ResidueMatrix I(r, n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1 % r.mod;
    return I;
}

ResidueMatrix ResidueMatrix::zero(ResidueRing r, int n, int m) { return ResidueMatrix(r, n, m); }

bool ResidueMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

bool ResidueMatrix::operator==(const ResidueMatrix& o) const {
    return ring == o.ring && rows == o.rows && cols == o.cols && a == o.a;
}

ResidueMatrix rmul(const ResidueMatrix& A, const ResidueMatrix& B) {
    if (A.cols != B.rows) throw std::logic_error("rmul: shape mismatch");
    ResidueMatrix C(A.ring, A.rows, B.cols);
    const long long m = A.ring.mod;
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            long long aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j) {
                long long b = B.at(k, j);
                if (b) C.at(i, j) = (C.at(i, j) + (__int128)aik * b) % m;
            }
        }
    return C;
}

std::vector<long long> rmul_vec(const ResidueMatrix& A, const std::vector<long long>& v) {
    std::vector<long long> r(A.rows, 0);
    const long long m = A.ring.mod;
    for (int i = 0; i < A.rows; ++i) {
        __int128 s = 0;
        for (int j = 0; j < A.cols; ++j) s += (__int128)A.at(i, j) * v[j];
        r[i] = static_cast<long long>(s % m);
        if (r[i] < 0) r[i] += m;
    }
    return r;
}

ResidueMatrix radd(const ResidueMatrix& A, const ResidueMatrix& B) {
    ResidueMatrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.ring.reduce(A.a[i] + B.a[i]);
    return C;
}

ResidueMatrix rsub(const ResidueMatrix& A, const ResidueMatrix& B) {
    ResidueMatrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.ring.reduce(A.a[i] - B.a[i]);
    return C;
}

ResidueMatrix rscale(const ResidueMatrix& A, long long c) {
    ResidueMatrix C = A;
    c = A.ring.reduce(c);
    for (auto& x : C.a) x = (__int128)x * c % A.ring.mod;
    return C;
}

ResidueMatrix rtranspose(const ResidueMatrix& A) {
    ResidueMatrix T(A.ring, A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

ResidueMatrix rhcat(const ResidueMatrix& A, const ResidueMatrix& B) {
    if (A.rows != B.rows) throw std::logic_error("rhcat: row mismatch");
    ResidueMatrix C(A.ring, A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

ResidueMatrix rvcat(const ResidueMatrix& A, const ResidueMatrix& B) {
    if (A.cols != B.cols) throw std::logic_error("rvcat: col mismatch");
    ResidueMatrix C(A.ring, A.rows + B.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C.at(A.rows + i, j) = B.at(i, j);
    return C;
}

ResidueMatrix rpow(const ResidueMatrix& A, long long e) {
    ResidueMatrix r = ResidueMatrix::identity(A.ring, A.rows);
    ResidueMatrix b = A;
    while (e > 0) {
        if (e & 1) r = rmul(r, b);
        b = rmul(b, b);
        e >>= 1;
    }
    return r;
}

namespace {

struct RSmithWork {
    ResidueMatrix& M;
    ResidueMatrix& U;
    ResidueMatrix& Uinv;
    ResidueMatrix& V;
    ResidueMatrix& Vinv;
    long long mod;

    void row_add(int i, int k, long long c) {
        for (int j = 0; j < M.cols; ++j)
            M.at(i, j) = (M.at(i, j) + (__int128)c * M.at(k, j)) % mod;
        for (int j = 0; j < U.cols; ++j)
            U.at(i, j) = (U.at(i, j) + (__int128)c * U.at(k, j)) % mod;
        long long cinv = mod - c % mod;
        for (int j = 0; j < Uinv.rows; ++j)
            Uinv.at(j, k) = (Uinv.at(j, k) + (__int128)cinv * Uinv.at(j, i)) % mod;
    }
    void col_add(int j, int k, long long c) {
        for (int i = 0; i < M.rows; ++i)
            M.at(i, j) = (M.at(i, j) + (__int128)c * M.at(i, k)) % mod;
        for (int i = 0; i < V.rows; ++i)
            V.at(i, j) = (V.at(i, j) + (__int128)c * V.at(i, k)) % mod;
        long long cinv = mod - c % mod;
        for (int i = 0; i < Vinv.cols; ++i)
            Vinv.at(k, i) = (Vinv.at(k, i) + (__int128)cinv * Vinv.at(j, i)) % mod;
    }
    void row_swap(int i, int k) {
        if (i == k) return;
        for (int j = 0; j < M.cols; ++j) std::swap(M.at(i, j), M.at(k, j));
        for (int j = 0; j < U.cols; ++j) std::swap(U.at(i, j), U.at(k, j));
        for (int j = 0; j < Uinv.rows; ++j) std::swap(Uinv.at(j, i), Uinv.at(j, k));
    }
    void col_swap(int j, int k) {
        if (j == k) return;
        for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, j), M.at(i, k));
        for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, j), V.at(i, k));
        for (int i = 0; i < Vinv.cols; ++i) std::swap(Vinv.at(j, i), Vinv.at(k, i));
    }
    void row_scale(int i, long long u, long long uinv) {
        for (int j = 0; j < M.cols; ++j) M.at(i, j) = (__int128)M.at(i, j) * u % mod;
        for (int j = 0; j < U.cols; ++j) U.at(i, j) = (__int128)U.at(i, j) * u % mod;
        for (int j = 0; j < Uinv.rows; ++j) Uinv.at(j, i) = (__int128)Uinv.at(j, i) * uinv % mod;
    }
};

}  // namespace

SmithResult smith(const ResidueMatrix& Min) {
    SmithResult s;
    const ResidueRing R = Min.ring;
    ResidueMatrix M = Min;
    s.U = ResidueMatrix::identity(R, M.rows);
    s.Uinv = s.U;
    s.V = ResidueMatrix::identity(R, M.cols);
    s.Vinv = s.V;
    RSmithWork w{M, s.U, s.Uinv, s.V, s.Vinv, R.mod};

    const int lim = std::min(M.rows, M.cols);
    int t = 0;
    for (; t < lim; ++t) {
        // pivot = entry of minimal p-valuation in the trailing block
        int pi = -1, pj = -1, bestv = R.N;
        for (int i = t; i < M.rows && bestv > 0; ++i)
            for (int j = t; j < M.cols; ++j) {
                int v = R.val(M.at(i, j));
                if (v < bestv) {
                    bestv = v;
                    pi = i;
                    pj = j;
                    if (v == 0) break;
                }
            }
        if (pi < 0) break;  // trailing block is zero
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        // normalize pivot to p^v (strip the unit)
        long long piv = M.at(t, t);
        long long pe = R.pow_p(bestv);
        long long unit = piv / pe;  // unit mod p^(N-v); invertible mod p^N as well
        w.row_scale(t, R.unit_inverse(unit), unit % R.mod);
        // every entry in row/col t has valuation >= bestv: exact elimination
        for (int i = t + 1; i < M.rows; ++i) {
            long long q = M.at(i, t) / pe;
            if (q) w.row_add(i, t, R.mod - R.reduce(q));
        }
        for (int j = t + 1; j < M.cols; ++j) {
            long long q = M.at(t, j) / pe;
            if (q) w.col_add(j, t, R.mod - R.reduce(q));
        }
    }
    s.D = M;
    s.dval.assign(lim, R.N);
    for (int i = 0; i < lim; ++i) s.dval[i] = R.val(M.at(i, i));
    // valuations are nondecreasing by minimal-valuation pivoting; assert cheaply
    for (int i = 0; i + 1 < lim; ++i)
        if (s.dval[i] > s.dval[i + 1]) throw std::logic_error("smith: divisibility chain broken");
    return s;
}

ResidueMatrix kernel_generators(const ResidueMatrix& M) {
    const ResidueRing R = M.ring;
    if (M.cols == 0) return ResidueMatrix(R, 0, 0);
    if (M.rows == 0) return ResidueMatrix::identity(R, M.cols);
    SmithResult s = smith(M);
    const int lim = std::min(M.rows, M.cols);
    // M x = 0  <=>  D y = 0 with x = V y: y_i in p^(N-e_i) R
    std::vector<std::pair<int, long long>> gens;  // (column of V, scale)
    for (int j = 0; j < M.cols; ++j) {
        int e = (j < lim) ? s.dval[j] : 0;
        if (e == 0) continue;  // unit pivot: y_j = 0 forced... e==0 means entry is a unit
        gens.emplace_back(j, R.pow_p(R.N - e));
    }
    // columns beyond the diagonal block are free
    for (int j = lim; j < M.cols; ++j) gens.emplace_back(j, 1);
    ResidueMatrix K(R, M.cols, static_cast<int>(gens.size()));
    for (size_t c = 0; c < gens.size(); ++c) {
        auto [j, sc] = gens[c];
        for (int i = 0; i < M.cols; ++i)
            K.at(i, static_cast<int>(c)) = (__int128)s.V.at(i, j) * sc % R.mod;
    }
    return K;
}

FiniteModuleType cokernel_type(const ResidueMatrix& M) { return cokernel_type(M, M.rows); }

FiniteModuleType cokernel_type(const ResidueMatrix& M, int target_rank) {
    const ResidueRing R = M.ring;
    std::vector<int> exps;
    if (M.cols == 0) {
        exps.assign(target_rank, R.N);
        return FiniteModuleType(std::move(exps));
    }
    SmithResult s = smith(M);
    const int lim = std::min(M.rows, M.cols);
    for (int i = 0; i < target_rank; ++i) {
        int e = (i < lim) ? s.dval[i] : R.N;
        if (e > 0) exps.push_back(e);
    }
    return FiniteModuleType(std::move(exps));
}

std::optional<std::vector<long long>> solve_linear(const ResidueMatrix& M,
                                                   const std::vector<long long>& b) {
    const ResidueRing R = M.ring;
    if (static_cast<int>(b.size()) != M.rows) throw std::logic_error("solve_linear: size mismatch");
    SmithResult s = smith(M);
    std::vector<long long> y = rmul_vec(s.U, b);
    std::vector<long long> z(M.cols, 0);
    const int lim = std::min(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i) {
        int e = (i < lim) ? s.dval[i] : R.N;
        long long pe = R.pow_p(e);
        if (i >= lim || e == R.N) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % pe != 0) return std::nullopt;
            z[i] = y[i] / pe;
        }
    }
    return rmul_vec(s.V, z);
}

bool is_invertible(const ResidueMatrix& M) {
    if (M.rows != M.cols) return false;
    SmithResult s = smith(M);
    for (int v : s.dval)
        if (v != 0) return false;
    return true;
}

ResidueMatrix rinverse(const ResidueMatrix& M) {
    if (M.rows != M.cols) throw std::logic_error("rinverse: not square");
    SmithResult s = smith(M);
    for (int v : s.dval)
        if (v != 0) throw input_error("rinverse: matrix not invertible");
    // M = Uinv D Vinv with D = I, so M^-1 = V U
    return rmul(s.V, s.U);
}

long long rdet(const ResidueMatrix& M) {
    auto cp = rcharpoly(M);
    long long c0 = cp[0];  // cp(0) = det(xI - M)|_{x=0} = (-1)^n det M
    if (M.rows % 2 == 1) c0 = M.ring.reduce(-c0);
    return c0;
}

std::vector<long long> rcharpoly(const ResidueMatrix& M) {
    // Berkowitz: division-free, valid over any commutative ring.
    const int n = M.rows;
    const long long mod = M.ring.mod;
    if (n == 0) return {1 % mod};
    std::vector<long long> poly{1 % mod};  // charpoly of the empty matrix (leading first)
    for (int k = 1; k <= n; ++k) {
        // principal k x k block; Toeplitz column from powers of the (k-1) block
        // c_i entries: 1, -M[k-1][k-1], -(R*A^j*C) ...
        std::vector<long long> c(k + 1, 0);
        c[0] = 1;
        c[1] = M.ring.reduce(-M.at(k - 1, k - 1));
        if (k >= 2) {
            int m = k - 1;
            std::vector<long long> row(m), col(m);
            for (int j = 0; j < m; ++j) row[j] = M.at(k - 1, j);
            for (int i = 0; i < m; ++i) col[i] = M.at(i, k - 1);
            std::vector<long long> v = col;  // A^j * C
            for (int j = 2; j <= k; ++j) {
                __int128 s = 0;
                for (int i = 0; i < m; ++i) s += (__int128)row[i] * v[i];
                c[j] = M.ring.reduce(-static_cast<long long>(s % mod));
                if (j < k) {
                    std::vector<long long> nv(m, 0);
                    for (int i = 0; i < m; ++i) {
                        __int128 t = 0;
                        for (int l = 0; l < m; ++l) t += (__int128)M.at(i, l) * v[l];
                        nv[i] = static_cast<long long>(t % mod);
                        if (nv[i] < 0) nv[i] += mod;
                    }
                    v = std::move(nv);
                }
            }
        }
        // poly = Toeplitz(c) * poly
        std::vector<long long> np(k + 1, 0);
        for (int i = 0; i <= k; ++i) {
            __int128 s = 0;
            for (int j = 0; j <= i && j < static_cast<int>(poly.size()); ++j)
                s += (__int128)c[i - j] * poly[j];
            np[i] = static_cast<long long>(s % mod);
            if (np[i] < 0) np[i] += mod;
        }
        poly = std::move(np);
    }
    // poly holds coefficients leading-degree-first; return low-first
    std::reverse(poly.begin(), poly.end());
    return poly;
}

}  // namespace iwahom
