#pragma once

#include <cstdint>
#include <vector>

#include "iwahom/errors.hpp"

namespace iwahom {

/// Dense matrix over the integers with overflow-checked arithmetic.
///
/// Kernel-type computations on the power-series side must run with exact
/// integer coefficients: reducing mod p^N first manufactures torsion that
/// does not exist over Z_p. Everything here throws resource_bound instead
/// of overflowing silently.
struct ZMat {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    ZMat() = default;
    ZMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static ZMat identity(int n);
    bool is_zero() const;
};

long long checked_add(long long x, long long y);
long long checked_mul(long long x, long long y);

ZMat zmul(const ZMat& A, const ZMat& B);
ZMat ztranspose(const ZMat& A);
ZMat zhcat(const ZMat& A, const ZMat& B);

/// U*M*V = D with U, V unimodular; D diagonal, d_1 | d_2 | ..., d_i >= 0.
/// Uinv and Vinv are maintained alongside so callers never invert.
struct ZSmith {
    ZMat U, Uinv, V, Vinv, D;
};

ZSmith smith_z(ZMat M);

/// Column basis of { v : M v = 0 } over Z.
ZMat kernel_z(const ZMat& M);

/// One solution of M x = b over Z, if any.
bool solve_z(const ZMat& M, const std::vector<long long>& b, std::vector<long long>& x);

}  // namespace iwahom
