#include <doctest.h>

#include <random>
#include <set>

#include "iwahom/residue.hpp"

using namespace iwahom;

namespace {

long long rnd(std::mt19937_64& rng, long long bound) {
    return static_cast<long long>(rng() % static_cast<unsigned long long>(bound));
}

ResidueMatrix random_matrix(std::mt19937_64& rng, ResidueRing R, int r, int c) {
    ResidueMatrix M(R, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) M.at(i, j) = rnd(rng, R.mod);
    return M;
}

// all vectors v with M v = 0, by enumeration
std::set<std::vector<long long>> brute_kernel(const ResidueMatrix& M) {
    std::set<std::vector<long long>> out;
    const long long mod = M.ring.mod;
    std::vector<long long> v(M.cols, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < M.rows && ok; ++i) {
            __int128 s = 0;
            for (int j = 0; j < M.cols; ++j) s += (__int128)M.at(i, j) * v[j];
            if (s % mod != 0) ok = false;
        }
        if (ok) out.insert(v);
        int k = 0;
        while (k < M.cols && ++v[k] == mod) v[k++] = 0;
        if (k == M.cols) break;
    }
    return out;
}

size_t span_size(const ResidueMatrix& gens) {
    std::set<std::vector<long long>> span;
    span.insert(std::vector<long long>(gens.rows, 0));
    bool grew = true;
    while (grew) {
        grew = false;
        for (int j = 0; j < gens.cols; ++j) {
            std::vector<std::vector<long long>> add;
            for (const auto& v : span) {
                auto w = v;
                for (int i = 0; i < gens.rows; ++i)
                    w[i] = (w[i] + gens.at(i, j)) % gens.ring.mod;
                if (!span.count(w)) add.push_back(w);
            }
            for (auto& w : add) span.insert(w);
            if (!add.empty()) grew = true;
        }
    }
    return span.size();
}

}  // namespace

TEST_CASE("ring basics") {
    ResidueRing R(3, 2);
    CHECK(R.mod == 9);
    CHECK(R.val(0) == 2);
    CHECK(R.val(3) == 1);
    CHECK(R.val(6) == 1);
    CHECK(R.val(5) == 0);
    CHECK(R.unit_inverse(2) == 5);
    CHECK_THROWS_AS(ResidueRing(4, 1), input_error);
    CHECK_THROWS_AS(ResidueRing(9, 1), input_error);
}

TEST_CASE("snf on 1x1 [p] over Z/p^2") {
    ResidueRing R(2, 2);
    ResidueMatrix M(R, 1, 1);
    M.at(0, 0) = 2;
    auto s = smith(M);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.U.at(0, 0) == 1);
    CHECK(s.V.at(0, 0) == 1);
}

TEST_CASE("snf on [[2,2],[2,2]] over Z/4") {
    ResidueRing R(2, 2);
    ResidueMatrix M(R, 2, 2);
    M.at(0, 0) = M.at(0, 1) = M.at(1, 0) = M.at(1, 1) = 2;
    auto s = smith(M);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 0);
    CHECK(s.D.at(0, 1) == 0);
    CHECK(s.D.at(1, 0) == 0);
    CHECK(rmul(rmul(s.U, M), s.V) == s.D);
    CHECK(rmul(s.U, s.Uinv) == ResidueMatrix::identity(R, 2));
    CHECK(rmul(s.V, s.Vinv) == ResidueMatrix::identity(R, 2));
}

TEST_CASE("snf identity over Z/27") {
    ResidueRing R(3, 3);
    auto I = ResidueMatrix::identity(R, 3);
    auto s = smith(I);
    CHECK(s.D == I);
}

TEST_CASE("kernel examples") {
    ResidueRing R(2, 2);
    ResidueMatrix M(R, 1, 1);
    M.at(0, 0) = 2;
    auto K = kernel_generators(M);
    REQUIRE(K.cols == 1);
    CHECK(K.at(0, 0) == 2);

    ResidueRing Rp(3, 1);
    ResidueMatrix Z(Rp, 2, 2);
    auto KZ = kernel_generators(Z);
    CHECK(span_size(KZ) == 9);

    // [[1,1],[0,p]] over Z/p^2, p = 2: compare with enumeration
    ResidueMatrix A(R, 2, 2);
    A.at(0, 0) = 1;
    A.at(0, 1) = 1;
    A.at(1, 0) = 0;
    A.at(1, 1) = 2;
    auto KA = kernel_generators(A);
    auto bf = brute_kernel(A);
    for (int j = 0; j < KA.cols; ++j) {
        std::vector<long long> v(2);
        v[0] = KA.at(0, j);
        v[1] = KA.at(1, j);
        CHECK(bf.count(v));
    }
    CHECK(span_size(KA) == bf.size());
}

TEST_CASE("cokernel examples") {
    ResidueRing R2(2, 2);
    ResidueMatrix M(R2, 1, 1);
    M.at(0, 0) = 2;
    CHECK(cokernel_type(M) == FiniteModuleType({1}));

    ResidueRing R3(2, 3);
    ResidueMatrix E(R3, 2, 0);
    CHECK(cokernel_type(E) == FiniteModuleType({3, 3}));

    ResidueMatrix D(R3, 2, 2);
    D.at(0, 0) = 2;
    D.at(1, 1) = 4;
    CHECK(cokernel_type(D) == FiniteModuleType({2, 1}));
}

TEST_CASE("solve examples") {
    ResidueRing R(2, 2);
    ResidueMatrix M(R, 1, 1);
    M.at(0, 0) = 2;
    CHECK(solve_linear(M, {0}).has_value());
    CHECK(!solve_linear(M, {1}).has_value());

    ResidueMatrix D(R, 2, 2);
    D.at(0, 0) = 2;
    auto x = solve_linear(D, {2, 0});
    REQUIRE(x.has_value());
    auto b = rmul_vec(D, *x);
    CHECK(b[0] == 2);
    CHECK(b[1] == 0);
}

TEST_CASE("charpoly and det") {
    ResidueRing R(3, 2);
    ResidueMatrix M(R, 2, 2);
    M.at(0, 0) = 1;
    M.at(0, 1) = 2;
    M.at(1, 0) = 4;
    M.at(1, 1) = 5;
    // det = 5 - 8 = -3 = 6 mod 9; trace = 6
    CHECK(rdet(M) == 6);
    auto cp = rcharpoly(M);
    REQUIRE(cp.size() == 3);
    CHECK(cp[2] == 1);
    CHECK(cp[1] == R.reduce(-6));
    CHECK(cp[0] == 6);
}

TEST_CASE("snf property suite") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 1000; ++iter) {
        long long p = (iter % 2 == 0) ? 2 : 3;
        int N = 1 + static_cast<int>(rng() % 3);
        ResidueRing R(p, N);
        int r = 1 + static_cast<int>(rng() % 6);
        int c = 1 + static_cast<int>(rng() % 6);
        ResidueMatrix M = random_matrix(rng, R, r, c);
        auto s = smith(M);
        CHECK(rmul(rmul(s.U, M), s.V) == s.D);
        CHECK(is_invertible(s.U));
        CHECK(is_invertible(s.V));
        CHECK(R.val(rdet(s.U)) == 0);
        CHECK(R.val(rdet(s.V)) == 0);
        for (size_t i = 0; i + 1 < s.dval.size(); ++i) CHECK(s.dval[i] <= s.dval[i + 1]);
        for (int i = 0; i < s.D.rows; ++i)
            for (int j = 0; j < s.D.cols; ++j)
                if (i != j) CHECK(s.D.at(i, j) == 0);

        // brute-force kernel agreement on small spaces
        double bits = c * N * (p == 2 ? 1.0 : 1.585);
        if (bits <= 12) {
            auto K = kernel_generators(M);
            auto bf = brute_kernel(M);
            CHECK(span_size(K) == bf.size());
        }
        // cokernel invariance under row/column operations
        ResidueMatrix U = random_matrix(rng, R, r, r);
        for (int i = 0; i < r; ++i) U.at(i, i) = R.reduce(U.at(i, i) * p + 1);
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) U.at(i, j) = R.reduce(U.at(i, j) * p);
        if (is_invertible(U)) CHECK(cokernel_type(rmul(U, M)) == cokernel_type(M));
    }
}
