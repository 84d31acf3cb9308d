#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homalg/exactla.hpp"
#include "homalg/fppoly.hpp"

using namespace exactla;

// Independent 2x2/3x3 determinant oracle (cofactor expansion, no elimination).
static long cofactor_det(const std::vector<std::vector<long>>& a)
{
    size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    long acc = 0, sign = 1;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<long>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<long> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(a[i][k]);
            minor.push_back(row);
        }
        acc += sign * a[0][j] * cofactor_det(minor);
        sign = -sign;
    }
    return acc;
}

TEST_CASE("rref basics")
{
    // identical rows over F_2
    FpMatrix m(2, 2, 2, {1, 1, 1, 1});
    auto r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.pivot_cols == std::vector<size_t>{0});

    FpMatrix id3 = FpMatrix::identity(3, 3);
    auto r3 = rref(id3);
    CHECK(r3.rank == 3);
    CHECK(r3.reduced == id3);

    // Over F_3, [[1,2],[2,1]]: cofactor oracle first.
    long d = cofactor_det({{1, 2}, {2, 1}});
    CHECK(((d % 3) + 3) % 3 == 0);  // det = -3, vanishes mod 3
    FpMatrix s(3, 2, 2, {1, 2, 2, 1});
    CHECK(rank(s) == 1);  // oracle-confirmed: second row = 2 * first row mod 3
    CHECK(det(s) == 0);
}

TEST_CASE("rref preserves row space and is idempotent")
{
    std::mt19937_64 rng(20240801);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t p = (trial % 3 == 0) ? 2 : (trial % 3 == 1) ? 3 : 5;
        size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        FpVec e(rows * cols);
        for (auto& x : e)
            x = static_cast<Fp>(rng() % p);
        FpMatrix m(p, rows, cols, e);
        auto r = rref(m);
        CHECK(rref(r.reduced).reduced == r.reduced);
        // every original row reduces to zero against the reduced rows
        FpSubspace span(p, cols);
        for (size_t i = 0; i < r.rank; ++i)
            span.add(r.reduced.row(i));
        for (size_t i = 0; i < rows; ++i)
            CHECK(span.contains(m.row(i)));
        CHECK(span.dim() == r.rank);
    }
}

TEST_CASE("kernel basis")
{
    FpMatrix m(2, 2, 2, {1, 1, 0, 0});
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == FpVec{1, 1});

    CHECK(kernel_basis(FpMatrix::identity(3, 3)).empty());

    FpMatrix z(2, 2, 3);
    CHECK(kernel_basis(z).size() == 3);
}

TEST_CASE("rank-nullity on seeded random matrices")
{
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 100; ++trial) {
        std::uint32_t p = (trial % 2) ? 2 : 5;
        size_t rows = rng() % 6, cols = rng() % 6;
        FpVec e(rows * cols);
        for (auto& x : e)
            x = static_cast<Fp>(rng() % p);
        FpMatrix m(p, rows, cols, e);
        CHECK(rank(m) + kernel_basis(m).size() == cols);
    }
}

TEST_CASE("solve")
{
    FpMatrix id = FpMatrix::identity(5, 3);
    FpVec b{1, 4, 2};
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    FpMatrix row(2, 1, 2, {1, 1});
    auto y = solve(row, {1});
    REQUIRE(y.has_value());
    CHECK(row.apply(*y) == FpVec{1});

    FpMatrix z(3, 2, 2);
    CHECK_FALSE(solve(z, {1, 0}).has_value());
}

TEST_CASE("solve/kernel coherence")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint32_t p = 3;
        size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        FpVec e(rows * cols);
        for (auto& x : e)
            x = static_cast<Fp>(rng() % p);
        FpMatrix m(p, rows, cols, e);
        FpVec xs(cols);
        for (auto& v : xs)
            v = static_cast<Fp>(rng() % p);
        FpVec b = m.apply(xs);
        auto x0 = solve(m, b);
        REQUIRE(x0.has_value());
        CHECK(m.apply(*x0) == b);
        for (const auto& k : kernel_basis(m)) {
            FpVec xk(cols);
            for (size_t i = 0; i < cols; ++i)
                xk[i] = static_cast<Fp>(((*x0)[i] + k[i]) % p);
            CHECK(m.apply(xk) == b);
        }
    }
}

TEST_CASE("FpSolver agrees with solve")
{
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t p = 2 + 1 * (trial % 2);
        size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        FpVec e(rows * cols);
        for (auto& x : e)
            x = static_cast<Fp>(rng() % p);
        FpMatrix m(p, rows, cols, e);
        FpSolver s(m);
        for (int t2 = 0; t2 < 5; ++t2) {
            FpVec b(rows);
            for (auto& v : b)
                v = static_cast<Fp>(rng() % p);
            auto a1 = solve(m, b);
            auto a2 = s.solve(b);
            CHECK(a1.has_value() == a2.has_value());
            if (a1 && a2) {
                CHECK(m.apply(*a1) == b);
                CHECK(m.apply(*a2) == b);
            }
        }
    }
}

// Naive row/column gcd reduction oracle for the invariant factor product:
// the product of the invariant factors of a square nonsingular matrix is
// |det|, and d1 is the gcd of all entries.
TEST_CASE("smith normal form examples")
{
    // diag(2,3) -> (1,6)
    IntMatrix d23 = IntMatrix::from_int_rows({{2, 0}, {0, 3}});
    auto s = smith_normal_form(d23);
    REQUIRE(s.invariant_factors.size() == 2);
    CHECK(s.invariant_factors[0] == 1);  // gcd of entries oracle: gcd(2,3)=1
    CHECK(s.invariant_factors[1] == 6);  // |det| oracle: 6 = 1*6
    CHECK(s.U * d23 * s.V == s.D);

    IntMatrix m6 = IntMatrix::from_int_rows({{6}});
    CHECK(smith_normal_form(m6).invariant_factors == ZVec{Z(6)});

    IntMatrix z(3, 2);
    CHECK(smith_normal_form(z).invariant_factors.empty());
    CHECK(smith_normal_form(z).rank == 0);
}

TEST_CASE("SNF certificates on seeded random matrices")
{
    std::mt19937_64 rng(555111);
    for (int trial = 0; trial < 100; ++trial) {
        size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        std::vector<Z> e(rows * cols);
        for (auto& x : e)
            x = Z((long)(rng() % 41) - 20);
        IntMatrix m(rows, cols, e);
        auto s = smith_normal_form(m);
        CHECK(s.U * m * s.V == s.D);
        Z du = int_det(s.U), dv = int_det(s.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        }
        // off-diagonal of D vanishes
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                if (i != j)
                    CHECK(s.D.at(i, j) == 0);
    }
}

TEST_CASE("int solve and kernel")
{
    IntMatrix m = IntMatrix::from_int_rows({{2, 4}, {1, 3}});
    auto x = int_solve(m, {Z(2), Z(2)});
    REQUIRE(x.has_value());
    CHECK((m * IntMatrix(2, 1, {(*x)[0], (*x)[1]})) == IntMatrix(2, 1, {Z(2), Z(2)}));

    IntMatrix row = IntMatrix::from_int_rows({{2}});
    CHECK_FALSE(int_solve(row, {Z(1)}).has_value());  // 2x = 1 has no integer solution

    IntMatrix k = int_kernel_basis(IntMatrix::from_int_rows({{1, 2, 3}}));
    CHECK(k.cols() == 2);
    IntMatrix prod = IntMatrix::from_int_rows({{1, 2, 3}}) * k;
    CHECK(prod.is_zero());
}

TEST_CASE("cokernel invariants")
{
    auto c = int_cokernel(IntMatrix::from_int_rows({{6, 0}, {0, 10}}));
    REQUIRE(c.torsion.size() == 2);
    CHECK(c.torsion[0] == 2);
    CHECK(c.torsion[1] == 30);
    CHECK(c.free_rank == 0);

    auto c2 = int_cokernel(IntMatrix(2, 0));
    CHECK(c2.free_rank == 2);
    CHECK(c2.torsion.empty());
}

TEST_CASE("char poly and min poly")
{
    using namespace fppoly;
    // nilpotent Jordan block over F_2
    FpMatrix n(2, 2, 2, {0, 1, 0, 0});
    auto chi = char_poly(n);
    CHECK(equal(chi, monomial(2, 2)));  // t^2
    CHECK(equal(min_poly(n), monomial(2, 2)));

    FpMatrix id = FpMatrix::identity(3, 2);
    CHECK(equal(min_poly(id), make(3, {2, 1})));  // t - 1

    // companion-ish check over F_5: trace and det appear in char poly
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        size_t nn = 1 + rng() % 4;
        FpVec e(nn * nn);
        for (auto& x : e)
            x = static_cast<Fp>(rng() % 5);
        FpMatrix m(5, nn, nn, e);
        auto c = char_poly(m);
        REQUIRE(c.c.size() == nn + 1);
        CHECK(c.lead() == 1);
        // det(m) = (-1)^n * c(0)
        Fp c0 = c.at(0);
        Fp expect = det(m);
        if (nn % 2 == 1)
            c0 = static_cast<Fp>((5 - c0) % 5);
        CHECK(c0 == expect);
        // Cayley-Hamilton
        CHECK(eval_matrix(c, m).is_zero());
        // min poly divides char poly
        auto mp = min_poly(m);
        CHECK(divmod(c, mp).r.is_zero());
        CHECK(eval_matrix(mp, m).is_zero());
    }
}

TEST_CASE("polynomial factorization over small primes")
{
    using namespace fppoly;
    // t^2 + 1 = (t+1)^2 over F_2
    auto f = make(2, {1, 0, 1});
    auto fs = factor(f);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].second == 2);
    CHECK(equal(fs[0].first, make(2, {1, 1})));

    // t^2 + 1 irreducible over F_3
    CHECK(is_irreducible(make(3, {1, 0, 1})));

    // t^2 - 1 = (t-1)(t+1) over F_3
    auto g = factor(make(3, {2, 0, 1}));
    CHECK(g.size() == 2);

    // random products reassemble
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t p = (trial % 2) ? 2 : 3;
        size_t deg = 1 + rng() % 6;
        FpVec c(deg + 1);
        for (auto& x : c)
            x = static_cast<Fp>(rng() % p);
        c[deg] = 1;
        auto h = make(p, c);
        auto hf = factor(h);
        Poly prod = one(p);
        for (auto& [q, e] : hf)
            for (size_t i = 0; i < e; ++i)
                prod = mul(prod, q);
        CHECK(equal(prod, monic(h)));
        for (auto& [q, e] : hf)
            CHECK(is_irreducible(q));
    }
}

TEST_CASE("modulus validation")
{
    CHECK_THROWS_AS(FpMatrix(4, 1, 1), homalg::Error);
    CHECK_THROWS_AS(FpMatrix(1u << 17, 1, 1), homalg::Error);
}
