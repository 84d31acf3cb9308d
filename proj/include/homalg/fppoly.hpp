#pragma once

/* Univariate polynomials over F_p: just enough for characteristic and
 * minimal polynomials of small matrices and Berlekamp factorization
 * (deterministic for the small primes used here). */

#include <cstdint>
#include <vector>

#include "homalg/exactla.hpp"

namespace fppoly {

using exactla::Fp;
using exactla::FpMatrix;
using exactla::FpVec;

/* Coefficient vector, lowest degree first, no trailing zeros (zero poly = {}). */
struct Poly {
    std::uint32_t p;
    FpVec c;

    bool is_zero() const { return c.empty(); }
    std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
    Fp lead() const { return c.back(); }
    Fp at(std::size_t i) const { return i < c.size() ? c[i] : 0; }
};

Poly make(std::uint32_t p, FpVec coeffs);
Poly zero(std::uint32_t p);
Poly one(std::uint32_t p);
Poly monomial(std::uint32_t p, std::size_t deg, Fp coeff = 1);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Fp s);
Poly monic(const Poly& a);

/* Quotient and remainder; b must be nonzero. */
struct DivResult {
    Poly q, r;
};
DivResult divmod(const Poly& a, const Poly& b);

Poly gcd(const Poly& a, const Poly& b);  // monic

/* Bezout: returns (g, u, v) with u*a + v*b = g monic. */
struct Bezout {
    Poly g, u, v;
};
Bezout extended_gcd(const Poly& a, const Poly& b);

Fp eval(const Poly& a, Fp x);

bool equal(const Poly& a, const Poly& b);

/* Characteristic polynomial via Hessenberg reduction; works over any F_p. */
Poly char_poly(const FpMatrix& m);

/* Coefficient of t^(n-k) in det(tI - m), signed so that it equals the k-th
 * elementary symmetric function of the eigenvalues. */
Fp char_poly_symmetric_coeff(const Poly& chi, std::size_t n, std::size_t k);

/* Minimal polynomial of a square matrix (monic generator of its annihilator). */
Poly min_poly(const FpMatrix& m);

/* Full factorization into irreducibles with multiplicities (Berlekamp;
 * deterministic, intended for small p). Factors are monic, sorted. */
std::vector<std::pair<Poly, std::size_t>> factor(const Poly& f);

bool is_irreducible(const Poly& f);

/* Evaluate a polynomial at a matrix argument. */
FpMatrix eval_matrix(const Poly& f, const FpMatrix& m);

}  // namespace fppoly
