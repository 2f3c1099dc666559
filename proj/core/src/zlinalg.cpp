#include "iwahom/zlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace iwahom {

namespace {
constexpr long long kLimit = (1LL << 62);
}

long long checked_add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r) || r >= kLimit || r <= -kLimit)
        throw resource_bound("integer overflow in exact arithmetic");
    return r;
}

long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r) || r >= kLimit || r <= -kLimit)
        throw resource_bound("integer overflow in exact arithmetic");
    return r;
}

ZMat ZMat::identity(int n) {
    ZMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

bool ZMat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

ZMat zmul(const ZMat& A, const ZMat& B) {
    if (A.cols != B.rows) throw std::logic_error("zmul: shape mismatch");
    ZMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            long long aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                if (B.at(k, j) != 0)
                    C.at(i, j) = checked_add(C.at(i, j), checked_mul(aik, B.at(k, j)));
        }
    return C;
}

ZMat ztranspose(const ZMat& A) {
    ZMat T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

ZMat zhcat(const ZMat& A, const ZMat& B) {
    if (A.rows != B.rows) throw std::logic_error("zhcat: row mismatch");
    ZMat C(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

namespace {

struct SmithWork {
    ZMat& M;
    ZMat& U;
    ZMat& Uinv;
    ZMat& V;
    ZMat& Vinv;

    // row_i += c * row_k  (inverse op recorded on Uinv columns)
    void row_add(int i, int k, long long c) {
        for (int j = 0; j < M.cols; ++j)
            M.at(i, j) = checked_add(M.at(i, j), checked_mul(c, M.at(k, j)));
        for (int j = 0; j < U.cols; ++j)
            U.at(i, j) = checked_add(U.at(i, j), checked_mul(c, U.at(k, j)));
        for (int j = 0; j < Uinv.rows; ++j)
            Uinv.at(j, k) = checked_add(Uinv.at(j, k), checked_mul(-c, Uinv.at(j, i)));
    }
    void col_add(int j, int k, long long c) {
        for (int i = 0; i < M.rows; ++i)
            M.at(i, j) = checked_add(M.at(i, j), checked_mul(c, M.at(i, k)));
        for (int i = 0; i < V.rows; ++i)
            V.at(i, j) = checked_add(V.at(i, j), checked_mul(c, V.at(i, k)));
        for (int i = 0; i < Vinv.cols; ++i)
            Vinv.at(k, i) = checked_add(Vinv.at(k, i), checked_mul(-c, Vinv.at(j, i)));
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
    void row_negate(int i) {
        for (int j = 0; j < M.cols; ++j) M.at(i, j) = -M.at(i, j);
        for (int j = 0; j < U.cols; ++j) U.at(i, j) = -U.at(i, j);
        for (int j = 0; j < Uinv.rows; ++j) Uinv.at(j, i) = -Uinv.at(j, i);
    }
};

}  // namespace

ZSmith smith_z(ZMat M) {
    const int n = M.rows, m = M.cols;
    ZSmith s;
    s.U = ZMat::identity(n);
    s.Uinv = ZMat::identity(n);
    s.V = ZMat::identity(m);
    s.Vinv = ZMat::identity(m);
    SmithWork w{M, s.U, s.Uinv, s.V, s.Vinv};

    int t = 0;
    const int lim = std::min(n, m);
    while (t < lim) {
        // pick the nonzero entry of least magnitude in the remaining block
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j) {
                long long v = std::llabs(M.at(i, j));
                if (v != 0 && (pi < 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            long long piv = M.at(t, t);
            for (int i = t + 1; i < n; ++i) {
                long long q = M.at(i, t) / piv;
                if (q != 0) w.row_add(i, t, -q);
                if (M.at(i, t) != 0) {
                    w.row_swap(t, i);  // remainder is strictly smaller
                    dirty = true;
                    break;
                }
            }
            if (dirty) continue;
            for (int j = t + 1; j < m; ++j) {
                long long q = M.at(t, j) / piv;
                if (q != 0) w.col_add(j, t, -q);
                if (M.at(t, j) != 0) {
                    w.col_swap(t, j);
                    dirty = true;
                    break;
                }
            }
        }
        if (M.at(t, t) < 0) w.row_negate(t);
        ++t;
    }

    // enforce the divisibility chain
    for (int i = 0; i + 1 < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            long long a = M.at(i, i), b = M.at(j, j);
            if (a == 0 || (b % a == 0)) continue;
            // fold d_j into row i, then re-reduce the 2x2 block
            w.col_add(i, j, 1);
            bool dirty = true;
            while (dirty) {
                dirty = false;
                long long piv = M.at(i, i);
                if (piv == 0 || M.at(j, i) % piv != 0) {
                    if (M.at(j, i) != 0 && (piv == 0 || std::llabs(M.at(j, i)) < std::llabs(piv)))
                        w.row_swap(i, j);
                    piv = M.at(i, i);
                }
                long long q = M.at(j, i) / piv;
                if (q != 0) w.row_add(j, i, -q);
                if (M.at(j, i) != 0) { w.row_swap(i, j); dirty = true; continue; }
                q = M.at(i, j) / M.at(i, i);
                if (q != 0) w.col_add(j, i, -q);
                if (M.at(i, j) != 0) { w.col_swap(i, j); dirty = true; continue; }
            }
            if (M.at(i, i) < 0) w.row_negate(i);
            if (M.at(j, j) < 0) w.row_negate(j);
            j = i;  // recheck the whole tail against the new d_i
        }
    }
    s.D = M;
    return s;
}

ZMat kernel_z(const ZMat& M) {
    if (M.cols == 0) return ZMat(0, 0);
    if (M.rows == 0) return ZMat::identity(M.cols);
    ZSmith s = smith_z(M);
    std::vector<int> freecols;
    const int lim = std::min(M.rows, M.cols);
    for (int j = 0; j < M.cols; ++j)
        if (j >= lim || s.D.at(j, j) == 0) freecols.push_back(j);
    ZMat K(M.cols, static_cast<int>(freecols.size()));
    for (size_t c = 0; c < freecols.size(); ++c)
        for (int i = 0; i < M.cols; ++i) K.at(i, static_cast<int>(c)) = s.V.at(i, freecols[c]);
    return K;
}

bool solve_z(const ZMat& M, const std::vector<long long>& b, std::vector<long long>& x) {
    ZSmith s = smith_z(M);
    std::vector<long long> y(M.rows, 0);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.rows; ++j)
            y[i] = checked_add(y[i], checked_mul(s.U.at(i, j), b[j]));
    std::vector<long long> z(M.cols, 0);
    const int lim = std::min(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i) {
        long long d = (i < lim) ? s.D.at(i, i) : 0;
        if (d == 0) {
            if (y[i] != 0) return false;
        } else {
            if (y[i] % d != 0) return false;
            z[i] = y[i] / d;
        }
    }
    x.assign(M.cols, 0);
    for (int i = 0; i < M.cols; ++i)
        for (int j = 0; j < M.cols; ++j)
            x[i] = checked_add(x[i], checked_mul(s.V.at(i, j), z[j]));
    return true;
}

}  // namespace iwahom
