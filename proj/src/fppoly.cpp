#include "homalg/fppoly.hpp"

#include <algorithm>
#include <map>

namespace fppoly {

static Fp inv_mod(Fp a, std::uint32_t p)
{
    std::uint64_t base = a % p, result = 1;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Fp>(result);
}

static void trim(Poly& a)
{
    while (!a.c.empty() && a.c.back() == 0)
        a.c.pop_back();
}

Poly make(std::uint32_t p, FpVec coeffs)
{
    Poly a{p, std::move(coeffs)};
    for (auto& x : a.c)
        x %= p;
    trim(a);
    return a;
}

Poly zero(std::uint32_t p)
{
    return Poly{p, {}};
}

Poly one(std::uint32_t p)
{
    return Poly{p, {1}};
}

Poly monomial(std::uint32_t p, std::size_t deg, Fp coeff)
{
    FpVec c(deg + 1, 0);
    c[deg] = coeff % p;
    return make(p, std::move(c));
}

Poly add(const Poly& a, const Poly& b)
{
    Poly out{a.p, FpVec(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = (a.at(i) + b.at(i)) % a.p;
    trim(out);
    return out;
}

Poly sub(const Poly& a, const Poly& b)
{
    Poly out{a.p, FpVec(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = (a.at(i) + a.p - b.at(i)) % a.p;
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return zero(a.p);
    Poly out{a.p, FpVec(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i])
            continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = static_cast<Fp>((out.c[i + j] + (std::uint64_t)a.c[i] * b.c[j]) % a.p);
    }
    trim(out);
    return out;
}

Poly scale(const Poly& a, Fp s)
{
    Poly out = a;
    for (auto& x : out.c)
        x = static_cast<Fp>((std::uint64_t)x * s % a.p);
    trim(out);
    return out;
}

Poly monic(const Poly& a)
{
    if (a.is_zero())
        return a;
    return scale(a, inv_mod(a.lead(), a.p));
}

DivResult divmod(const Poly& a, const Poly& b)
{
    homalg::require(!b.is_zero(), "DivisionByZero", "polynomial division by zero");
    Poly r = a;
    Poly q = zero(a.p);
    Fp linv = inv_mod(b.lead(), a.p);
    while (!r.is_zero() && r.c.size() >= b.c.size()) {
        std::size_t shift = r.c.size() - b.c.size();
        Fp coef = static_cast<Fp>((std::uint64_t)r.lead() * linv % a.p);
        Poly term = monomial(a.p, shift, coef);
        q = add(q, term);
        r = sub(r, mul(term, b));
    }
    return {q, r};
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).r;
        x = y;
        y = r;
    }
    return monic(x);
}

Bezout extended_gcd(const Poly& a, const Poly& b)
{
    Poly r0 = a, r1 = b;
    Poly u0 = one(a.p), u1 = zero(a.p);
    Poly v0 = zero(a.p), v1 = one(a.p);
    while (!r1.is_zero()) {
        DivResult d = divmod(r0, r1);
        Poly r2 = d.r;
        Poly u2 = sub(u0, mul(d.q, u1));
        Poly v2 = sub(v0, mul(d.q, v1));
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    if (r0.is_zero())
        return {r0, u0, v0};
    Fp s = inv_mod(r0.lead(), a.p);
    return {scale(r0, s), scale(u0, s), scale(v0, s)};
}

Fp eval(const Poly& a, Fp x)
{
    std::uint64_t acc = 0;
    for (std::size_t i = a.c.size(); i-- > 0;)
        acc = (acc * x + a.c[i]) % a.p;
    return static_cast<Fp>(acc);
}

bool equal(const Poly& a, const Poly& b)
{
    return a.p == b.p && a.c == b.c;
}

Poly char_poly(const FpMatrix& m)
{
    homalg::require(m.rows() == m.cols(), "DimensionMismatch", "char_poly of non-square");
    const std::uint32_t p = m.p();
    const std::size_t n = m.rows();
    if (n == 0)
        return one(p);
    // Reduce to Hessenberg form by similarity transforms.
    FpMatrix h = m;
    for (std::size_t col = 0; col + 2 < n + 1 && col + 1 < n; ++col) {
        // find pivot in column col below row col+1
        std::size_t piv = col + 1;
        while (piv < n && h.at(piv, col) == 0)
            ++piv;
        if (piv == n)
            continue;
        if (piv != col + 1) {
            // swap rows and matching columns (similarity)
            for (std::size_t j = 0; j < n; ++j) {
                Fp t = h.at(piv, j);
                h.set(piv, j, h.at(col + 1, j));
                h.set(col + 1, j, t);
            }
            for (std::size_t i = 0; i < n; ++i) {
                Fp t = h.at(i, piv);
                h.set(i, piv, h.at(i, col + 1));
                h.set(i, col + 1, t);
            }
        }
        Fp inv = inv_mod(h.at(col + 1, col), p);
        for (std::size_t i = col + 2; i < n; ++i) {
            Fp f = static_cast<Fp>((std::uint64_t)h.at(i, col) * inv % p);
            if (!f)
                continue;
            // row i -= f * row col+1; col col+1 += f * col i (inverse op)
            for (std::size_t j = 0; j < n; ++j)
                h.set(i, j, static_cast<Fp>((h.at(i, j) + (std::uint64_t)(p - f) * h.at(col + 1, j)) % p));
            for (std::size_t i2 = 0; i2 < n; ++i2)
                h.set(i2, col + 1, static_cast<Fp>((h.at(i2, col + 1) + (std::uint64_t)f * h.at(i2, i)) % p));
        }
    }
    // char polys of leading principal Hessenberg blocks by recurrence:
    // p_0 = 1; p_k(t) = (t - h[k-1][k-1]) p_{k-1}(t)
    //                  - sum_{i=1}^{k-1} h[k-1-i][k-1] (prod_{j=1}^{i} h[k-j][k-j-1]) p_{k-1-i}(t)
    std::vector<Poly> pk(n + 1, one(p));
    for (std::size_t k = 1; k <= n; ++k) {
        Poly t_minus = make(p, {static_cast<Fp>((p - h.at(k - 1, k - 1) % p) % p), 1});
        Poly acc = mul(t_minus, pk[k - 1]);
        std::uint64_t prod = 1;
        for (std::size_t i = 1; i < k; ++i) {
            prod = prod * h.at(k - i, k - i - 1) % p;
            if (!prod)
                break;
            Fp coef = static_cast<Fp>(prod * h.at(k - 1 - i, k - 1) % p);
            if (coef)
                acc = sub(acc, scale(pk[k - 1 - i], coef));
        }
        pk[k] = acc;
    }
    return pk[n];
}

Fp char_poly_symmetric_coeff(const Poly& chi, std::size_t n, std::size_t k)
{
    // chi(t) = prod (t - lambda_i) = sum_j (-1)^j e_j t^(n-j)
    // => e_k = (-1)^k * coeff of t^(n-k).
    Fp c = chi.at(n - k);
    if (k % 2 == 1)
        c = static_cast<Fp>((chi.p - c) % chi.p);
    return c;
}

Poly min_poly(const FpMatrix& m)
{
    homalg::require(m.rows() == m.cols(), "DimensionMismatch", "min_poly of non-square");
    const std::uint32_t p = m.p();
    const std::size_t n = m.rows();
    if (n == 0)
        return one(p);
    // First linear dependency among vectorized powers I, m, m^2, ...
    std::vector<FpVec> pows;
    FpMatrix cur = FpMatrix::identity(p, n);
    exactla::FpSubspace span(p, n * n);
    for (std::size_t d = 0;; ++d) {
        pows.push_back(cur.entries());
        if (!span.add(cur.entries()))
            break;  // m^d dependent on lower powers
        cur = cur * m;
        homalg::require(d <= n, "Internal", "min_poly did not terminate");
    }
    // Solve sum c_i pows[i] = pows.back() for i < last.
    std::size_t deg = pows.size() - 1;
    FpMatrix sys = FpMatrix::from_cols(p, std::vector<FpVec>(pows.begin(), pows.begin() + deg));
    auto sol = exactla::solve(sys, pows.back());
    homalg::require(sol.has_value(), "Internal", "min_poly solve failed");
    FpVec coeffs(deg + 1, 0);
    for (std::size_t i = 0; i < deg; ++i)
        coeffs[i] = static_cast<Fp>((p - (*sol)[i] % p) % p);
    coeffs[deg] = 1;
    return make(p, std::move(coeffs));
}

FpMatrix eval_matrix(const Poly& f, const FpMatrix& m)
{
    const std::size_t n = m.rows();
    FpMatrix acc(m.p(), n, n);
    FpMatrix pw = FpMatrix::identity(m.p(), n);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i])
            acc = acc + pw.scale(f.c[i]);
        if (i + 1 < f.c.size())
            pw = pw * m;
    }
    return acc;
}

// --- Berlekamp factorization -------------------------------------------------

namespace {

Poly derivative(const Poly& f)
{
    if (f.c.size() <= 1)
        return zero(f.p);
    FpVec d(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i)
        d[i - 1] = static_cast<Fp>((std::uint64_t)f.c[i] * (i % f.p) % f.p);
    return make(f.p, std::move(d));
}

Poly pth_root(const Poly& f)
{
    // f = g(t^p) over F_p => g has coefficients f_{pi} (Frobenius is identity on F_p).
    FpVec g((f.c.size() + f.p - 1) / f.p);
    for (std::size_t i = 0; i < g.size(); ++i)
        g[i] = f.at(i * f.p);
    return make(f.p, std::move(g));
}

/* Berlekamp splitting of a squarefree monic f into irreducible factors. */
void berlekamp_squarefree(const Poly& f, std::vector<Poly>& out)
{
    const std::uint32_t p = f.p;
    std::size_t n = f.degree();
    if (n <= 1) {
        out.push_back(f);
        return;
    }
    // Frobenius matrix Q: column i = t^(p*i) mod f in coefficient basis.
    Poly tp = monomial(p, p);  // t^p
    // compute t^(p*i) iteratively
    std::vector<Poly> frob(n);
    frob[0] = one(p);
    Poly tpm = divmod(tp, f).r;
    for (std::size_t i = 1; i < n; ++i)
        frob[i] = divmod(mul(frob[i - 1], tpm), f).r;
    FpMatrix q(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q.set(j, i, frob[i].at(j));
    FpMatrix qmi = q - FpMatrix::identity(p, n);
    auto null_vecs = exactla::kernel_basis(qmi);
    if (null_vecs.size() == 1) {
        out.push_back(f);  // irreducible
        return;
    }
    // Split with a non-constant element v of the Berlekamp subalgebra:
    // f = prod_{c in F_p} gcd(f, v - c).
    for (const auto& nv : null_vecs) {
        Poly v = make(p, nv);
        if (v.degree() == 0)
            continue;
        std::vector<Poly> pieces;
        bool split = false;
        for (Fp c = 0; c < p; ++c) {
            Poly g = gcd(f, sub(v, make(p, {c})));
            if (g.degree() >= 1 && g.degree() < f.degree()) {
                split = true;
                pieces.push_back(g);
            }
        }
        if (split) {
            // recurse on the found pieces and the cofactor
            Poly rest = f;
            for (const auto& g : pieces) {
                berlekamp_squarefree(g, out);
                rest = divmod(rest, g).q;
            }
            if (rest.degree() >= 1)
                berlekamp_squarefree(rest, out);
            return;
        }
    }
    // Kernel dim > 1 guarantees some basis vector splits f over F_p.
    homalg::fail("Internal", "Berlekamp split not found");
}

}  // namespace

std::vector<std::pair<Poly, std::size_t>> factor(const Poly& f)
{
    homalg::require(!f.is_zero(), "DivisionByZero", "factor of zero polynomial");
    std::map<FpVec, std::pair<Poly, std::size_t>> acc;
    // Squarefree decomposition handling p-th powers, then Berlekamp.
    struct Item {
        Poly f;
        std::size_t mult;
    };
    std::vector<Item> stack{{monic(f), 1}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        Poly g = it.f;
        if (g.degree() == 0)
            continue;
        Poly gp = derivative(g);
        if (gp.is_zero()) {
            // g = h(t^p) = (pth_root h)(t)^p
            stack.push_back({pth_root(g), it.mult * g.p});
            continue;
        }
        Poly s = gcd(g, gp);
        if (s.degree() > 0) {
            Poly sqfree = divmod(g, s).q;
            stack.push_back({sqfree, it.mult});
            stack.push_back({s, it.mult});
            continue;
        }
        std::vector<Poly> irr;
        berlekamp_squarefree(g, irr);
        for (const auto& q : irr) {
            auto key = q.c;
            auto found = acc.find(key);
            if (found == acc.end())
                acc.emplace(key, std::make_pair(q, it.mult));
            else
                found->second.second += it.mult;
        }
    }
    std::vector<std::pair<Poly, std::size_t>> out;
    for (auto& [k, v] : acc)
        out.push_back(v);
    return out;
}

bool is_irreducible(const Poly& f)
{
    auto fs = factor(f);
    return fs.size() == 1 && fs[0].second == 1 && fs[0].first.degree() == f.degree();
}

}  // namespace fppoly
