#include <map>
#include <mutex>

#include "homalg/fppoly.hpp"
#include "homalg/homcore.hpp"

namespace homcore {

using algcore::same_algebra;
using homalg::fail;
using homalg::require;

// --- hom and tensor spaces -----------------------------------------------------

std::vector<FpMatrix> hom_space(const ModuleRep& m, const ModuleRep& n)
{
    require(same_algebra(m.over(), n.over()), "DimensionMismatch",
            "hom between modules over different algebras");
    const std::uint32_t p = m.over()->p();
    const std::size_t dm = m.dim(), dn = n.dim(), nb = m.over()->dim();
    const std::size_t vars = dn * dm;
    // Equations: f * act_m(b) - act_n(b) * f = 0, entrywise; unknowns f[r][c].
    std::vector<FpVec> rows;
    rows.reserve(nb * vars);
    for (std::size_t b = 0; b < nb; ++b) {
        const FpMatrix& am = m.action(b);
        const FpMatrix& an = n.action(b);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) {
                FpVec row(vars, 0);
                for (std::size_t k = 0; k < dm; ++k)
                    row[r * dm + k] = (row[r * dm + k] + am.at(k, c)) % p;
                for (std::size_t k = 0; k < dn; ++k)
                    row[k * dm + c] = static_cast<Fp>(
                        (row[k * dm + c] + (std::uint64_t)(p - an.at(r, k) % p)) % p);
                rows.push_back(std::move(row));
            }
    }
    FpMatrix sys = rows.empty() ? FpMatrix(p, 0, vars) : FpMatrix::from_rows(p, rows);
    std::vector<FpMatrix> out;
    for (const auto& v : exactla::kernel_basis(sys))
        out.emplace_back(p, dn, dm, v);
    return out;
}

FpVec coords_in_basis(std::uint32_t p, const std::vector<FpMatrix>& basis, const FpMatrix& elt)
{
    std::vector<FpVec> cols;
    for (const auto& b : basis)
        cols.push_back(b.entries());
    FpMatrix sys = basis.empty() ? FpMatrix(p, elt.entries().size(), 0)
                                 : FpMatrix::from_cols(p, cols);
    auto sol = exactla::solve(sys, elt.entries());
    require(sol.has_value(), "Internal", "element outside the spanned hom space");
    return *sol;
}

FpMatrix operator_on_homs(std::uint32_t p, const std::vector<FpMatrix>& domain_basis,
                          const std::vector<FpMatrix>& target_basis,
                          const std::function<FpMatrix(const FpMatrix&)>& op)
{
    FpMatrix out(p, target_basis.size(), domain_basis.size());
    for (std::size_t j = 0; j < domain_basis.size(); ++j) {
        FpVec coords = coords_in_basis(p, target_basis, op(domain_basis[j]));
        for (std::size_t i = 0; i < target_basis.size(); ++i)
            out.set(i, j, coords[i]);
    }
    return out;
}

FpMatrix TensorSpace::induce(const FpMatrix& on_x, const FpMatrix& on_y) const
{
    FpMatrix big(p, dim_x * dim_y, dim_x * dim_y);
    for (std::size_t u = 0; u < dim_x; ++u)
        for (std::size_t w = 0; w < on_x.rows(); ++w) {
            Fp a = on_x.at(w, u);
            if (!a)
                continue;
            for (std::size_t v = 0; v < dim_y; ++v)
                for (std::size_t z = 0; z < on_y.rows(); ++z) {
                    Fp b = on_y.at(z, v);
                    if (!b)
                        continue;
                    big.set(w * dim_y + z, u * dim_y + v,
                            static_cast<Fp>((big.at(w * dim_y + z, u * dim_y + v) +
                                             (std::uint64_t)a * b) %
                                            p));
                }
        }
    return projection * big * section;
}

TensorSpace tensor_space(std::uint32_t p, const std::vector<FpMatrix>& x_right_actions,
                         const std::vector<FpMatrix>& y_left_actions, std::size_t dim_x,
                         std::size_t dim_y)
{
    const std::size_t total = dim_x * dim_y;
    exactla::FpSubspace rel(p, total);
    for (std::size_t b = 0; b < x_right_actions.size(); ++b) {
        const FpMatrix& xr = x_right_actions[b];
        const FpMatrix& yl = y_left_actions[b];
        for (std::size_t u = 0; u < dim_x; ++u)
            for (std::size_t v = 0; v < dim_y; ++v) {
                FpVec rv(total, 0);
                for (std::size_t w = 0; w < dim_x; ++w)
                    if (xr.at(w, u))
                        rv[w * dim_y + v] = xr.at(w, u);
                for (std::size_t z = 0; z < dim_y; ++z)
                    if (yl.at(z, v))
                        rv[u * dim_y + z] =
                            static_cast<Fp>((rv[u * dim_y + z] + p - yl.at(z, v)) % p);
                rel.add(rv);
            }
    }
    auto coords = rel.complement_coords();
    TensorSpace ts;
    ts.p = p;
    ts.dim_x = dim_x;
    ts.dim_y = dim_y;
    ts.dim = coords.size();
    ts.projection = FpMatrix(p, ts.dim, total);
    for (std::size_t j = 0; j < total; ++j) {
        FpVec ej(total, 0);
        ej[j] = 1;
        FpVec red = rel.reduce(ej);
        for (std::size_t r = 0; r < ts.dim; ++r)
            ts.projection.set(r, j, red[coords[r]]);
    }
    ts.section = FpMatrix(p, total, ts.dim);
    for (std::size_t r = 0; r < ts.dim; ++r)
        ts.section.set(coords[r], r, 1);
    return ts;
}

ModuleRep tensor_right_with_bimodule(const ModuleRep& x_over_aop, const BimoduleRep& y)
{
    const AlgebraPtr& a = y.left_over();
    require(same_algebra(x_over_aop.over(), opposite_of(a)), "DimensionMismatch",
            "tensor middle algebra mismatch");
    TensorSpace ts = tensor_space(a->p(), x_over_aop.actions(), y.left_actions(),
                                  x_over_aop.dim(), y.dim());
    std::vector<FpMatrix> action;
    FpMatrix idx = FpMatrix::identity(a->p(), x_over_aop.dim());
    for (std::size_t r = 0; r < y.right_over()->dim(); ++r)
        action.push_back(ts.induce(idx, y.right_actions()[r]));
    return ModuleRep::build(opposite_of(y.right_over()), std::move(action));
}

ModuleRep tensor_bimodule_with_left(const BimoduleRep& t, const ModuleRep& x)
{
    const AlgebraPtr& r = t.right_over();
    require(same_algebra(x.over(), r), "DimensionMismatch", "tensor middle algebra mismatch");
    TensorSpace ts = tensor_space(r->p(), t.right_actions(), x.actions(), t.dim(), x.dim());
    std::vector<FpMatrix> action;
    FpMatrix idy = FpMatrix::identity(r->p(), x.dim());
    for (std::size_t i = 0; i < t.left_over()->dim(); ++i)
        action.push_back(ts.induce(t.left_actions()[i], idy));
    return ModuleRep::build(t.left_over(), std::move(action));
}

BimoduleRep tensor_bimodule_bimodule(const BimoduleRep& x, const BimoduleRep& y)
{
    const AlgebraPtr& a = x.right_over();
    require(same_algebra(a, y.left_over()), "DimensionMismatch", "tensor middle algebra mismatch");
    TensorSpace ts = tensor_space(a->p(), x.right_actions(), y.left_actions(), x.dim(), y.dim());
    std::vector<FpMatrix> left, right;
    FpMatrix idx = FpMatrix::identity(a->p(), x.dim());
    FpMatrix idy = FpMatrix::identity(a->p(), y.dim());
    for (std::size_t i = 0; i < x.left_over()->dim(); ++i)
        left.push_back(ts.induce(x.left_actions()[i], idy));
    for (std::size_t j = 0; j < y.right_over()->dim(); ++j)
        right.push_back(ts.induce(idx, y.right_actions()[j]));
    return BimoduleRep::build(x.left_over(), y.right_over(), std::move(left), std::move(right));
}

std::size_t tensor_dim(const ModuleRep& x_over_aop, const ModuleRep& y_over_a)
{
    TensorSpace ts = tensor_space(y_over_a.over()->p(), x_over_aop.actions(), y_over_a.actions(),
                                  x_over_aop.dim(), y_over_a.dim());
    return ts.dim;
}

// --- kernels, images, cokernels --------------------------------------------------

SubmoduleData kernel_module(const ModuleMap& f)
{
    auto kb = exactla::kernel_basis(f.matrix);
    FpMatrix basis = kb.empty() ? FpMatrix(f.source.over()->p(), f.source.dim(), 0)
                                : FpMatrix::from_cols(f.source.over()->p(), kb);
    return SubmoduleData{algcore::submodule(f.source, basis), basis};
}

SubmoduleData image_module(const ModuleMap& f)
{
    FpMatrix basis = exactla::column_space_basis(f.matrix);
    return SubmoduleData{algcore::submodule(f.target, basis), basis};
}

CokernelData cokernel_module(const ModuleMap& f)
{
    std::vector<FpVec> gens;
    for (std::size_t j = 0; j < f.matrix.cols(); ++j)
        gens.push_back(f.matrix.col(j));
    auto q = algcore::quotient_module(f.target, gens);
    return CokernelData{q.module, q.projection};
}

// --- radical (iterated trace-form kernels, characteristic p) ---------------------

std::vector<FpVec> jacobson_radical(const AlgebraPtr& a)
{
    const std::uint32_t p = a->p();
    const std::size_t n = a->dim();
    if (n == 0)
        return {};
    std::vector<FpMatrix> lm;
    for (std::size_t i = 0; i < n; ++i) {
        FpVec ei(n, 0);
        ei[i] = 1;
        lm.push_back(a->left_mult_matrix(ei));
    }
    auto lmul_of = [&](const FpVec& x) {
        FpMatrix acc(p, n, n);
        for (std::size_t i = 0; i < n; ++i)
            if (x[i])
                acc = acc + lm[i].scale(x[i]);
        return acc;
    };

    // Chain R_0 = A, R_{i+1} = {x in R_i : c_{p^i}(L_x L_y) = 0 for all y in R_i},
    // for p^i <= n; the forms are additive on the restricted domain and the
    // Frobenius twist is trivial over the prime field.
    std::vector<FpVec> cur;
    for (std::size_t i = 0; i < n; ++i) {
        FpVec ei(n, 0);
        ei[i] = 1;
        cur.push_back(ei);
    }
    std::size_t power = 1;
    while (power <= n && !cur.empty()) {
        std::vector<FpMatrix> curmuls;
        for (const auto& x : cur)
            curmuls.push_back(lmul_of(x));
        FpMatrix gram(p, cur.size(), cur.size());
        for (std::size_t s = 0; s < cur.size(); ++s)
            for (std::size_t t = 0; t < cur.size(); ++t) {
                FpMatrix prod = curmuls[s] * curmuls[t];
                auto chi = fppoly::char_poly(prod);
                gram.set(t, s, fppoly::char_poly_symmetric_coeff(chi, n, power));
            }
        auto null_coords = exactla::kernel_basis(gram);
        std::vector<FpVec> next;
        for (const auto& nc : null_coords) {
            FpVec elt(n, 0);
            for (std::size_t s = 0; s < cur.size(); ++s)
                if (nc[s])
                    for (std::size_t j = 0; j < n; ++j)
                        elt[j] = static_cast<Fp>((elt[j] + (std::uint64_t)nc[s] * cur[s][j]) % p);
            next.push_back(std::move(elt));
        }
        cur = std::move(next);
        power *= p;
    }

    // Certificates: two-sided ideal and nilpotent.
    {
        exactla::FpSubspace span(p, n, cur);
        for (const auto& r : cur)
            for (std::size_t i = 0; i < n; ++i) {
                FpVec ei(n, 0);
                ei[i] = 1;
                require(span.contains(a->multiply(r, ei)) && span.contains(a->multiply(ei, r)),
                        "Internal", "radical candidate is not an ideal");
            }
        exactla::FpSubspace power_space(p, n, cur);
        std::size_t guard = 0;
        while (power_space.dim() > 0) {
            require(++guard <= n + 1, "Internal", "radical candidate is not nilpotent");
            std::vector<FpVec> prod_gens;
            for (const auto& x : cur)
                for (const auto& y : power_space.row_basis())
                    prod_gens.push_back(a->multiply(x, y));
            exactla::FpSubspace next_space(p, n, prod_gens);
            require(next_space.dim() < power_space.dim() || next_space.dim() == 0, "Internal",
                    "radical candidate stabilized nonzero");
            power_space = std::move(next_space);
        }
    }
    return cur;
}

// --- Wedderburn splitting on the semisimple quotient ------------------------------

namespace {

struct QuotientAlgebra {
    AlgebraPtr algebra;
    FpMatrix projection;
    std::vector<std::size_t> coords;
};

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const std::vector<FpVec>& ideal_basis)
{
    const std::uint32_t p = a->p();
    const std::size_t n = a->dim();
    exactla::FpSubspace sub(p, n, ideal_basis);
    auto coords = sub.complement_coords();
    const std::size_t q = coords.size();
    FpMatrix proj(p, q, n);
    for (std::size_t j = 0; j < n; ++j) {
        FpVec ej(n, 0);
        ej[j] = 1;
        FpVec red = sub.reduce(ej);
        for (std::size_t r = 0; r < q; ++r)
            proj.set(r, j, red[coords[r]]);
    }
    auto lift = [&](std::size_t r) {
        FpVec big(n, 0);
        big[coords[r]] = 1;
        return big;
    };
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < q; ++r)
        labels.push_back("q" + std::to_string(r));
    std::vector<std::vector<FpVec>> structure(q, std::vector<FpVec>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            structure[i][j] = proj.apply(a->multiply(lift(i), lift(j)));
    FpVec unit = proj.apply(a->unit());
    QuotientAlgebra out;
    out.algebra =
        algcore::Algebra::build(p, std::move(labels), std::move(structure), std::move(unit));
    out.projection = std::move(proj);
    out.coords = std::move(coords);
    return out;
}

struct WedderburnSplitter {
    AlgebraPtr s;
    std::uint32_t p;
    std::uint64_t rng_state = 0x853c49e68282b21fULL;

    Fp rnd(std::uint32_t mod)
    {
        rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<Fp>((rng_state >> 33) % mod);
    }

    FpMatrix restricted_lmul(const FpVec& x, const FpMatrix& basis)
    {
        FpMatrix big = s->left_mult_matrix(x) * basis;
        auto small = exactla::solve_matrix(basis, big);
        require(small.has_value(), "Internal", "corner not closed under multiplication");
        return *small;
    }

    void split_corner(const FpMatrix& basis, const FpVec& unit, std::vector<FpVec>& out)
    {
        const std::size_t d = basis.cols();
        if (d == 0)
            return;
        if (d == 1) {
            out.push_back(unit);
            return;
        }
        auto try_split = [&](const FpVec& x) -> bool {
            FpMatrix lx = restricted_lmul(x, basis);
            fppoly::Poly mp = fppoly::min_poly(lx);
            auto fs = fppoly::factor(mp);
            if (fs.size() < 2)
                return false;
            fppoly::Poly f = fppoly::one(p);
            for (std::size_t e = 0; e < fs[0].second; ++e)
                f = fppoly::mul(f, fs[0].first);
            fppoly::Poly g = fppoly::divmod(mp, f).q;
            auto bez = fppoly::extended_gcd(f, g);
            fppoly::Poly uf = fppoly::mul(bez.u, f);
            FpMatrix em = fppoly::eval_matrix(uf, lx);
            auto unit_coords = exactla::solve(basis, unit);
            require(unit_coords.has_value(), "Internal", "corner unit outside corner");
            FpVec e = basis.apply(em.apply(*unit_coords));
            if (e == FpVec(e.size(), 0) || e == unit)
                return false;
            require(s->multiply(e, e) == e, "Internal", "constructed element not idempotent");
            FpVec ec(unit.size());
            for (std::size_t i = 0; i < unit.size(); ++i)
                ec[i] = static_cast<Fp>((unit[i] + p - e[i]) % p);
            for (const FpVec& idem : {e, ec}) {
                std::vector<FpVec> gens;
                for (std::size_t j = 0; j < d; ++j)
                    gens.push_back(s->multiply(idem, s->multiply(basis.col(j), idem)));
                exactla::FpSubspace span(p, unit.size(), gens);
                std::vector<FpVec> cols(span.row_basis().begin(), span.row_basis().end());
                FpMatrix corner_basis = cols.empty() ? FpMatrix(p, unit.size(), 0)
                                                     : FpMatrix::from_cols(p, cols);
                split_corner(corner_basis, idem, out);
            }
            return true;
        };

        bool commutative = true;
        for (std::size_t i = 0; i < d && commutative; ++i)
            for (std::size_t j = i + 1; j < d && commutative; ++j)
                if (s->multiply(basis.col(i), basis.col(j)) !=
                    s->multiply(basis.col(j), basis.col(i)))
                    commutative = false;
        if (commutative) {
            FpMatrix frob(p, d, d);
            for (std::size_t j = 0; j < d; ++j) {
                FpVec bj = basis.col(j);
                FpVec acc = bj;
                for (std::uint32_t e = 1; e < p; ++e)
                    acc = s->multiply(acc, bj);
                auto coords = exactla::solve(basis, acc);
                require(coords.has_value(), "Internal", "corner not closed under powers");
                for (std::size_t r = 0; r < d; ++r)
                    frob.set(r, j, (*coords)[r]);
            }
            auto fixed = exactla::kernel_basis(frob - FpMatrix::identity(p, d));
            if (fixed.size() <= 1) {
                out.push_back(unit);  // field
                return;
            }
            for (const auto& fx : fixed)
                if (try_split(basis.apply(fx)))
                    return;
            fail("Internal", "commutative corner with Berlekamp dim > 1 failed to split");
        }

        for (std::size_t j = 0; j < d; ++j)
            if (try_split(basis.col(j)))
                return;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                FpVec x(unit.size());
                FpVec bi = basis.col(i), bj = basis.col(j);
                for (std::size_t r = 0; r < unit.size(); ++r)
                    x[r] = static_cast<Fp>((bi[r] + bj[r]) % p);
                if (try_split(x))
                    return;
                if (try_split(s->multiply(bi, bj)))
                    return;
            }
        for (int trial = 0; trial < 4096; ++trial) {
            FpVec coords(d);
            for (auto& c : coords)
                c = rnd(p);
            if (try_split(basis.apply(coords)))
                return;
        }
        fail("Internal", "failed to split a non-commutative semisimple corner");
    }
};

std::mutex g_cache_mutex;
std::map<const algcore::Algebra*, std::shared_ptr<AlgebraData>> g_cache;
std::map<const algcore::Algebra*, AlgebraPtr> g_keepalive;

std::shared_ptr<AlgebraData> compute_algebra_data(const AlgebraPtr& a)
{
    auto data = std::make_shared<AlgebraData>();
    data->algebra = a;
    const std::uint32_t p = a->p();
    const std::size_t n = a->dim();

    data->opposite = algcore::opposite(a);
    data->radical = jacobson_radical(a);

    QuotientAlgebra q = quotient_algebra(a, data->radical);
    require(jacobson_radical(q.algebra).empty(), "Internal",
            "semisimple quotient has nonzero radical");

    const AlgebraPtr& s = q.algebra;
    const std::size_t sn = s->dim();

    // Center of S.
    std::vector<FpVec> sys_rows;
    for (std::size_t i = 0; i < sn; ++i) {
        FpVec ei(sn, 0);
        ei[i] = 1;
        FpMatrix comm = s->left_mult_matrix(ei) - s->right_mult_matrix(ei);
        for (std::size_t r = 0; r < sn; ++r)
            sys_rows.push_back(comm.row(r));
    }
    FpMatrix sys = sys_rows.empty() ? FpMatrix(p, 0, sn) : FpMatrix::from_rows(p, sys_rows);
    auto center = exactla::kernel_basis(sys);

    // Central primitive idempotents by splitting the center into fields.
    std::vector<FpVec> central_idems;
    {
        WedderburnSplitter wsplit{s, p};
        std::vector<FpVec> ccols(center.begin(), center.end());
        FpMatrix cbasis = ccols.empty() ? FpMatrix(p, sn, 0) : FpMatrix::from_cols(p, ccols);
        wsplit.split_corner(cbasis, s->unit(), central_idems);
    }

    // Primitive idempotents inside each block.
    std::vector<std::vector<FpVec>> block_prims;
    for (const auto& c : central_idems) {
        std::vector<FpVec> gens;
        for (std::size_t j = 0; j < sn; ++j) {
            FpVec ej(sn, 0);
            ej[j] = 1;
            gens.push_back(s->multiply(c, s->multiply(ej, c)));
        }
        exactla::FpSubspace span(p, sn, gens);
        std::vector<FpVec> cols(span.row_basis().begin(), span.row_basis().end());
        FpMatrix bbasis = cols.empty() ? FpMatrix(p, sn, 0) : FpMatrix::from_cols(p, cols);
        WedderburnSplitter wsplit{s, p};
        std::vector<FpVec> prims;
        wsplit.split_corner(bbasis, c, prims);
        block_prims.push_back(std::move(prims));
    }

    // Lift to A block by block, orthogonalize, idempotentize.
    auto lift_vec = [&](const FpVec& v) {
        FpVec big(n, 0);
        for (std::size_t r = 0; r < q.coords.size(); ++r)
            big[q.coords[r]] = v[r];
        return big;
    };
    auto idempotentize = [&](FpVec e) {
        for (std::size_t guard = 0; guard < 8 * (n + 2); ++guard) {
            FpVec e2 = a->multiply(e, e);
            if (e2 == e)
                return e;
            FpVec e3 = a->multiply(e2, e);
            FpVec next(n);
            for (std::size_t i = 0; i < n; ++i)
                next[i] = static_cast<Fp>(
                    ((std::uint64_t)3 * e2[i] + (std::uint64_t)2 * (p - 1) * e3[i]) % p);
            e = std::move(next);
        }
        fail("Internal", "idempotent lifting did not converge");
    };

    std::size_t total = 0;
    for (auto& bp : block_prims)
        total += bp.size();
    FpVec esum(n, 0);
    std::size_t done = 0;
    for (std::size_t b = 0; b < block_prims.size(); ++b) {
        for (const auto& ebar : block_prims[b]) {
            ++done;
            FpVec e;
            if (done == total) {
                e = FpVec(n);
                for (std::size_t i = 0; i < n; ++i)
                    e[i] = static_cast<Fp>((a->unit()[i] + p - esum[i]) % p);
            } else {
                FpVec f = lift_vec(ebar);
                FpVec one_minus(n);
                for (std::size_t i = 0; i < n; ++i)
                    one_minus[i] = static_cast<Fp>((a->unit()[i] + p - esum[i]) % p);
                FpVec g = a->multiply(one_minus, a->multiply(f, one_minus));
                e = idempotentize(std::move(g));
            }
            require(a->multiply(e, e) == e, "Internal", "lifted element not idempotent");
            for (std::size_t i = 0; i < n; ++i)
                esum[i] = static_cast<Fp>((esum[i] + e[i]) % p);
            data->idempotents.push_back(std::move(e));
            data->idempotent_block.push_back(b);
        }
    }
    require(n == 0 || esum == a->unit(), "Internal", "primitive idempotents do not sum to 1");
    for (std::size_t i = 0; i < data->idempotents.size(); ++i)
        for (std::size_t j = i + 1; j < data->idempotents.size(); ++j) {
            FpVec z(n, 0);
            require(a->multiply(data->idempotents[i], data->idempotents[j]) == z &&
                        a->multiply(data->idempotents[j], data->idempotents[i]) == z,
                    "Internal", "lifted idempotents not orthogonal");
        }
    data->block_count = central_idems.size();

    data->block_rep.assign(data->block_count, data->idempotents.size());
    for (std::size_t i = 0; i < data->idempotents.size(); ++i) {
        std::size_t b = data->idempotent_block[i];
        if (data->block_rep[b] == data->idempotents.size())
            data->block_rep[b] = i;
    }
    ModuleRep regular = ModuleRep::regular(a);
    for (std::size_t b = 0; b < data->block_count; ++b) {
        const FpVec& e = data->idempotents[data->block_rep[b]];
        FpMatrix basis = exactla::column_space_basis(a->right_mult_matrix(e));
        data->indec_proj_basis.push_back(basis);
        data->indec_projectives.push_back(algcore::submodule(regular, basis));
        std::vector<FpVec> radgens;
        for (const auto& r : data->radical)
            for (std::size_t j = 0; j < basis.cols(); ++j) {
                FpVec img = a->multiply(r, basis.col(j));
                auto coords = exactla::solve(basis, img);
                require(coords.has_value(), "Internal", "rad * Ae escaped Ae");
                radgens.push_back(*coords);
            }
        auto qt = algcore::quotient_module(data->indec_projectives.back(), radgens);
        data->simples.push_back(qt.module);
    }
    return data;
}

std::shared_ptr<AlgebraData> data_for(const AlgebraPtr& a)
{
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find(a.get());
        if (it != g_cache.end())
            return it->second;
    }
    auto data = compute_algebra_data(a);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto [it, inserted] = g_cache.emplace(a.get(), data);
    if (inserted)
        g_keepalive.emplace(a.get(), a);
    return it->second;
}

}  // namespace

const AlgebraData& algebra_data(const AlgebraPtr& a)
{
    auto d = data_for(a);
    return *d;
}

AlgebraPtr opposite_of(const AlgebraPtr& a)
{
    auto d = data_for(a);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find(d->opposite.get());
        if (it != g_cache.end())
            return d->opposite;
    }
    // Compute the opposite's data once and patch the back-pointer so that
    // opposite_of is involutive on cached pointers.
    auto od = compute_algebra_data(d->opposite);
    od->opposite = a;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto [it, inserted] = g_cache.emplace(d->opposite.get(), od);
    if (inserted)
        g_keepalive.emplace(d->opposite.get(), d->opposite);
    return d->opposite;
}

std::vector<FpVec> primitive_idempotents(const AlgebraPtr& a)
{
    return algebra_data(a).idempotents;
}

AlgebraPtr endomorphism_algebra(const ModuleRep& m, std::vector<FpMatrix>& basis_out)
{
    basis_out = hom_space(m, m);
    const std::uint32_t p = m.over()->p();
    const std::size_t d = basis_out.size();
    std::vector<std::vector<FpVec>> structure(d, std::vector<FpVec>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            structure[i][j] = coords_in_basis(p, basis_out, basis_out[i] * basis_out[j]);
    FpVec unit = coords_in_basis(p, basis_out, FpMatrix::identity(p, m.dim()));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i)
        labels.push_back("f" + std::to_string(i));
    return algcore::Algebra::build(p, std::move(labels), std::move(structure), std::move(unit));
}

std::vector<FpVec> radical_module_gens(const ModuleRep& m)
{
    std::vector<FpVec> gens;
    const auto& rad = algebra_data(m.over()).radical;
    for (const auto& r : rad) {
        FpMatrix act = m.action_of(r);
        for (std::size_t j = 0; j < m.dim(); ++j)
            gens.push_back(act.col(j));
    }
    return gens;
}

}  // namespace homcore
