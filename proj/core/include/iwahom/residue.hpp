#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwahom/errors.hpp"

namespace iwahom {

/// Coefficient ring Z/p^N, a finite chain ring. p is validated by trial
/// division; both 2^N and 3^N stay far below 2^62 for the supported N.
struct ResidueRing {
    long long p = 2;
    int N = 1;
    long long mod = 2;  // p^N

    ResidueRing() = default;
    ResidueRing(long long p_, int N_);

    long long reduce(long long x) const {
        long long r = x % mod;
        return r < 0 ? r + mod : r;
    }
    /// Largest e <= N with p^e | x; val(0) = N.
    int val(long long x) const;
    long long pow_p(int e) const;
    /// Inverse of a unit (throws input_error on non-units).
    long long unit_inverse(long long u) const;

    bool operator==(const ResidueRing& o) const { return p == o.p && N == o.N; }
};

bool is_prime(long long p);

/// Canonical isomorphism type of a finite abelian p-group: exponents of the
/// cyclic summands Z/p^{e_i}, sorted weakly decreasing. Empty = zero module.
struct FiniteModuleType {
    std::vector<int> exp;

    FiniteModuleType() = default;
    explicit FiniteModuleType(std::vector<int> e);

    int rank() const { return static_cast<int>(exp.size()); }
    /// Sum of exponents: log_p of the order.
    long long length() const;
    bool is_zero() const { return exp.empty(); }
    bool operator==(const FiniteModuleType& o) const { return exp == o.exp; }
    auto operator<=>(const FiniteModuleType& o) const { return exp <=> o.exp; }
    std::string str() const;
};

struct ResidueMatrix {
    ResidueRing ring;
    int rows = 0, cols = 0;
    std::vector<long long> a;

    ResidueMatrix() = default;
    ResidueMatrix(ResidueRing r, int rr, int cc)
        : ring(r), rows(rr), cols(cc), a(static_cast<size_t>(rr) * cc, 0) {}

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    void set(int i, int j, long long v) { at(i, j) = ring.reduce(v); }

    static ResidueMatrix identity(ResidueRing r, int n);
    static ResidueMatrix zero(ResidueRing r, int n, int m);
    bool is_zero() const;
    bool operator==(const ResidueMatrix& o) const;
};

ResidueMatrix rmul(const ResidueMatrix& A, const ResidueMatrix& B);
std::vector<long long> rmul_vec(const ResidueMatrix& A, const std::vector<long long>& v);
ResidueMatrix radd(const ResidueMatrix& A, const ResidueMatrix& B);
ResidueMatrix rsub(const ResidueMatrix& A, const ResidueMatrix& B);
ResidueMatrix rscale(const ResidueMatrix& A, long long c);
ResidueMatrix rtranspose(const ResidueMatrix& A);
ResidueMatrix rhcat(const ResidueMatrix& A, const ResidueMatrix& B);
ResidueMatrix rvcat(const ResidueMatrix& A, const ResidueMatrix& B);
ResidueMatrix rpow(const ResidueMatrix& A, long long e);

struct SmithResult {
    ResidueMatrix U, Uinv, V, Vinv, D;
    std::vector<int> dval;  // valuations of the diagonal (N encodes 0)
};

/// Smith normal form over Z/p^N: U*M*V = D, U and V invertible, D diagonal
/// with entries p^e and the divisibility chain along the diagonal. Pivoting
/// on minimal p-valuation; total for any input.
SmithResult smith(const ResidueMatrix& M);

/// Columns generating { v : M v = 0 }.
ResidueMatrix kernel_generators(const ResidueMatrix& M);

/// Isomorphism type of R^target_rank / column span of M (target_rank defaults
/// to M.rows).
FiniteModuleType cokernel_type(const ResidueMatrix& M);
FiniteModuleType cokernel_type(const ResidueMatrix& M, int target_rank);

/// Some x with M x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<long long>> solve_linear(const ResidueMatrix& M,
                                                   const std::vector<long long>& b);

bool is_invertible(const ResidueMatrix& M);
ResidueMatrix rinverse(const ResidueMatrix& M);

/// det via the division-free Berkowitz recursion (valid over Z/p^N).
long long rdet(const ResidueMatrix& M);
/// Characteristic polynomial of a square matrix, coefficients low-degree
/// first, degree = rows; division-free.
std::vector<long long> rcharpoly(const ResidueMatrix& M);

}  // namespace iwahom
