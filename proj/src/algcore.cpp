#include "homalg/algcore.hpp"

#include <algorithm>
#include <map>

namespace algcore {

using homalg::fail;
using homalg::require;

FpVec Algebra::multiply(const FpVec& x, const FpVec& y) const
{
    require(x.size() == dim_ && y.size() == dim_, "DimensionMismatch", "algebra product");
    FpVec out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!x[i])
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!y[j])
                continue;
            std::uint64_t c = (std::uint64_t)x[i] * y[j] % p_;
            const FpVec& s = structure_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                out[k] = static_cast<Fp>((out[k] + c * s[k]) % p_);
        }
    }
    return out;
}

FpMatrix Algebra::left_mult_matrix(const FpVec& x) const
{
    FpMatrix m(p_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        FpVec ej(dim_, 0);
        ej[j] = 1;
        FpVec col = multiply(x, ej);
        for (std::size_t i = 0; i < dim_; ++i)
            m.set(i, j, col[i]);
    }
    return m;
}

FpMatrix Algebra::right_mult_matrix(const FpVec& x) const
{
    FpMatrix m(p_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        FpVec ej(dim_, 0);
        ej[j] = 1;
        FpVec col = multiply(ej, x);
        for (std::size_t i = 0; i < dim_; ++i)
            m.set(i, j, col[i]);
    }
    return m;
}

bool Algebra::is_commutative() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (structure_[i][j] != structure_[j][i])
                return false;
    return true;
}

bool Algebra::same_table(const Algebra& other) const
{
    return p_ == other.p_ && labels_ == other.labels_ && unit_ == other.unit_ &&
           structure_ == other.structure_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    if (a.get() == b.get())
        return true;
    if (!a || !b)
        return false;
    return a->same_table(*b);
}

AlgebraPtr Algebra::build(std::uint32_t p, std::vector<std::string> labels,
                          std::vector<std::vector<FpVec>> structure, FpVec unit)
{
    require(exactla::is_prime(p) && p < (1u << 16), "NonPrimeModulus",
            "modulus must be a prime below 2^16");
    const std::size_t n = labels.size();
    require(structure.size() == n, "DimensionMismatch", "structure constant rows");
    for (auto& row : structure) {
        require(row.size() == n, "DimensionMismatch", "structure constant cols");
        for (auto& v : row) {
            require(v.size() == n, "DimensionMismatch", "structure constant vector");
            for (auto& x : v)
                x %= p;
        }
    }
    require(unit.size() == n, "DimensionMismatch", "unit vector");
    for (auto& x : unit)
        x %= p;

    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->p_ = p;
    alg->dim_ = n;
    alg->labels_ = std::move(labels);
    alg->structure_ = std::move(structure);
    alg->unit_ = std::move(unit);

    // Unit law on basis elements.
    for (std::size_t i = 0; i < n; ++i) {
        FpVec ei(n, 0);
        ei[i] = 1;
        if (alg->multiply(alg->unit_, ei) != ei || alg->multiply(ei, alg->unit_) != ei)
            fail("UnitViolation", "unit fails on basis element " + std::to_string(i));
    }
    // Associativity on basis triples.
    for (std::size_t i = 0; i < n; ++i) {
        FpVec ei(n, 0);
        ei[i] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const FpVec& bij = alg->structure_[i][j];
            for (std::size_t k = 0; k < n; ++k) {
                FpVec ek(n, 0);
                ek[k] = 1;
                FpVec lhs = alg->multiply(bij, ek);
                FpVec rhs = alg->multiply(ei, alg->structure_[j][k]);
                if (lhs != rhs)
                    fail("AssociativityViolation", "(b" + std::to_string(i) + " b" + std::to_string(j) +
                                                       ") b" + std::to_string(k) + " differs");
            }
        }
    }
    return alg;
}

AlgebraPtr build_algebra(std::uint32_t p, std::vector<std::string> labels,
                         std::vector<std::vector<FpVec>> structure, FpVec unit)
{
    return Algebra::build(p, std::move(labels), std::move(structure), std::move(unit));
}

AlgebraPtr field_algebra(std::uint32_t p)
{
    return Algebra::build(p, {"1"}, {{{1}}}, {1});
}

AlgebraPtr group_algebra(std::uint32_t p, const std::vector<std::vector<std::size_t>>& cayley,
                         std::vector<std::string> element_names)
{
    const std::size_t n = cayley.size();
    require(n > 0, "NotAGroup", "empty table");
    for (const auto& row : cayley) {
        require(row.size() == n, "NotAGroup", "table is not square");
        for (auto x : row)
            require(x < n, "NotAGroup", "entry out of range");
    }
    // Identity element.
    std::size_t id = n;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g)
            ok = cayley[e][g] == g && cayley[g][e] == g;
        if (ok) {
            id = e;
            break;
        }
    }
    require(id < n, "NotAGroup", "no identity element");
    // Inverses: each row and column is a permutation containing the identity.
    for (std::size_t g = 0; g < n; ++g) {
        bool has_inv = false;
        for (std::size_t h = 0; h < n; ++h)
            if (cayley[g][h] == id && cayley[h][g] == id)
                has_inv = true;
        require(has_inv, "NotAGroup", "element " + std::to_string(g) + " has no inverse");
    }
    // Associativity.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
                    fail("NotAGroup", "associativity fails at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");

    std::vector<std::string> labels;
    for (std::size_t g = 0; g < n; ++g)
        labels.push_back(g < element_names.size() ? element_names[g] : "g" + std::to_string(g));
    std::vector<std::vector<FpVec>> structure(n, std::vector<FpVec>(n, FpVec(n, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            structure[i][j][cayley[i][j]] = 1;
    FpVec unit(n, 0);
    unit[id] = 1;
    return Algebra::build(p, std::move(labels), std::move(structure), std::move(unit));
}

namespace {

using Mono = std::vector<std::size_t>;  // exponent vector

bool divisible(const Mono& m, const Mono& d)
{
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < d[i])
            return false;
    return true;
}

std::string mono_name(const Mono& m, const std::vector<std::string>& vars)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t k = 0; k < m[i]; ++k)
            s += vars[i];
    }
    return s.empty() ? "1" : s;
}

}  // namespace

AlgebraPtr monomial_quotient_algebra(std::uint32_t p, std::vector<std::string> variables,
                                     const std::vector<std::vector<std::size_t>>& ideal_gens)
{
    const std::size_t k = variables.size();
    for (const auto& g : ideal_gens)
        require(g.size() == k, "DimensionMismatch", "ideal generator arity");
    // Finite dimension: every variable needs a pure power among the generators.
    std::vector<std::size_t> bound(k, 0);
    for (std::size_t v = 0; v < k; ++v) {
        for (const auto& g : ideal_gens) {
            bool pure = g[v] > 0;
            for (std::size_t w = 0; w < k && pure; ++w)
                if (w != v && g[w] > 0)
                    pure = false;
            if (pure && (bound[v] == 0 || g[v] < bound[v]))
                bound[v] = g[v];
        }
        if (bound[v] == 0)
            fail("InfiniteDimensionalQuotient",
                 "variable " + variables[v] + " has no pure power in the ideal");
    }
    // Standard monomials: exponents below the pure-power bounds, not divisible
    // by any generator. Deterministic graded-lex order.
    std::vector<Mono> basis;
    Mono cur(k, 0);
    auto in_ideal = [&](const Mono& m) {
        for (const auto& g : ideal_gens)
            if (divisible(m, g))
                return true;
        return false;
    };
    // enumerate the box, then sort graded-lex
    std::vector<Mono> box;
    for (;;) {
        if (!in_ideal(cur))
            box.push_back(cur);
        std::size_t i = 0;
        while (i < k) {
            if (++cur[i] < bound[i])
                break;
            cur[i] = 0;
            ++i;
        }
        if (i == k)
            break;
        if (k == 0)
            break;
    }
    if (k == 0)
        box.push_back({});
    std::sort(box.begin(), box.end(), [](const Mono& a, const Mono& b) {
        std::size_t da = 0, db = 0;
        for (auto x : a)
            da += x;
        for (auto x : b)
            db += x;
        if (da != db)
            return da < db;
        return a < b;
    });
    basis = std::move(box);

    std::map<Mono, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index[basis[i]] = i;
    const std::size_t n = basis.size();
    std::vector<std::string> labels;
    for (const auto& m : basis)
        labels.push_back(mono_name(m, variables));
    std::vector<std::vector<FpVec>> structure(n, std::vector<FpVec>(n, FpVec(n, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mono prod(k);
            for (std::size_t v = 0; v < k; ++v)
                prod[v] = basis[i][v] + basis[j][v];
            if (!in_ideal(prod)) {
                auto it = index.find(prod);
                require(it != index.end(), "Internal", "product escaped the monomial box");
                structure[i][j][it->second] = 1;
            }
        }
    FpVec unit(n, 0);
    unit[index.at(Mono(k, 0))] = 1;
    return Algebra::build(p, std::move(labels), std::move(structure), std::move(unit));
}

AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    require(a->p() == b->p(), "DimensionMismatch", "modulus mismatch in product algebra");
    const std::size_t na = a->dim(), nb = b->dim(), n = na + nb;
    std::vector<std::string> labels;
    for (const auto& l : a->labels())
        labels.push_back("(" + l + ",0)");
    for (const auto& l : b->labels())
        labels.push_back("(0," + l + ")");
    std::vector<std::vector<FpVec>> structure(n, std::vector<FpVec>(n, FpVec(n, 0)));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k2 = 0; k2 < na; ++k2)
                structure[i][j][k2] = a->sc(i, j)[k2];
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k2 = 0; k2 < nb; ++k2)
                structure[na + i][na + j][na + k2] = b->sc(i, j)[k2];
    FpVec unit(n, 0);
    for (std::size_t i = 0; i < na; ++i)
        unit[i] = a->unit()[i];
    for (std::size_t i = 0; i < nb; ++i)
        unit[na + i] = b->unit()[i];
    return Algebra::build(a->p(), std::move(labels), std::move(structure), std::move(unit));
}

AlgebraPtr opposite(const AlgebraPtr& a)
{
    const std::size_t n = a->dim();
    std::vector<std::vector<FpVec>> structure(n, std::vector<FpVec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            structure[i][j] = a->sc(j, i);
    return Algebra::build(a->p(), a->labels(), std::move(structure), a->unit());
}

// --- Modules -----------------------------------------------------------------

ModuleRep ModuleRep::build(AlgebraPtr over, std::vector<FpMatrix> action)
{
    require(action.size() == over->dim(), "DimensionMismatch", "one action matrix per basis element");
    std::size_t d = action.empty() ? 0 : action.front().rows();
    for (const auto& m : action)
        require(m.rows() == d && m.cols() == d && m.p() == over->p(), "DimensionMismatch",
                "action matrix shape");
    ModuleRep rep;
    rep.over_ = std::move(over);
    rep.dim_ = d;
    rep.action_ = std::move(action);
    if (!rep.action_of(rep.over_->unit()).is_identity())
        fail("UnitNotIdentity", "action of the unit is not the identity");
    const std::size_t n = rep.over_->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FpMatrix lhs = rep.action_[i] * rep.action_[j];
            FpMatrix rhs(rep.over_->p(), d, d);
            const FpVec& s = rep.over_->sc(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (s[k])
                    rhs = rhs + rep.action_[k].scale(s[k]);
            if (!(lhs == rhs))
                fail("RelationViolation", "action violates b" + std::to_string(i) + "*b" +
                                              std::to_string(j) + " relation");
        }
    return rep;
}

ModuleRep ModuleRep::zero(AlgebraPtr over)
{
    std::vector<FpMatrix> action(over->dim(), FpMatrix(over->p(), 0, 0));
    return build(std::move(over), std::move(action));
}

ModuleRep ModuleRep::regular(AlgebraPtr over)
{
    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < over->dim(); ++i) {
        FpVec ei(over->dim(), 0);
        ei[i] = 1;
        action.push_back(over->left_mult_matrix(ei));
    }
    return build(std::move(over), std::move(action));
}

FpMatrix ModuleRep::action_of(const FpVec& x) const
{
    require(x.size() == over_->dim(), "DimensionMismatch", "algebra element size");
    FpMatrix acc(over_->p(), dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i])
            acc = acc + action_[i].scale(x[i]);
    return acc;
}

ModuleRep build_module(AlgebraPtr over, std::vector<FpMatrix> action)
{
    return ModuleRep::build(std::move(over), std::move(action));
}

BimoduleRep BimoduleRep::build(AlgebraPtr left_over, AlgebraPtr right_over,
                               std::vector<FpMatrix> left_action, std::vector<FpMatrix> right_action)
{
    require(left_over->p() == right_over->p(), "DimensionMismatch", "bimodule modulus mismatch");
    BimoduleRep b;
    b.left_ = std::move(left_over);
    b.right_ = std::move(right_over);
    b.la_ = std::move(left_action);
    b.ra_ = std::move(right_action);
    b.dim_ = b.la_.empty() ? (b.ra_.empty() ? 0 : b.ra_.front().rows()) : b.la_.front().rows();
    // Validate both single-sided structures via ModuleRep.
    (void)ModuleRep::build(b.left_, b.la_);
    (void)ModuleRep::build(opposite(b.right_), b.ra_);
    // Commuting actions.
    for (const auto& l : b.la_)
        for (const auto& r : b.ra_)
            if (!(l * r == r * l))
                fail("RelationViolation", "bimodule actions do not commute");
    return b;
}

ModuleRep BimoduleRep::as_left() const
{
    return ModuleRep::build(left_, la_);
}

ModuleRep BimoduleRep::as_right() const
{
    return ModuleRep::build(opposite(right_), ra_);
}

AlgebraPtr BimoduleRep::enveloping_algebra(const AlgebraPtr& a, const AlgebraPtr& r)
{
    AlgebraPtr rop = opposite(r);
    const std::size_t na = a->dim(), nr = r->dim(), n = na * nr;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nr; ++j)
            labels.push_back(a->labels()[i] + "(x)" + rop->labels()[j] + "op");
    std::vector<std::vector<FpVec>> structure(n, std::vector<FpVec>(n, FpVec(n, 0)));
    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t j1 = 0; j1 < nr; ++j1)
            for (std::size_t i2 = 0; i2 < na; ++i2)
                for (std::size_t j2 = 0; j2 < nr; ++j2) {
                    const FpVec& ca = a->sc(i1, i2);
                    const FpVec& cr = rop->sc(j1, j2);
                    std::size_t row = i1 * nr + j1, col = i2 * nr + j2;
                    for (std::size_t ka = 0; ka < na; ++ka) {
                        if (!ca[ka])
                            continue;
                        for (std::size_t kr = 0; kr < nr; ++kr) {
                            if (!cr[kr])
                                continue;
                            structure[row][col][ka * nr + kr] = static_cast<Fp>(
                                (std::uint64_t)ca[ka] * cr[kr] % a->p());
                        }
                    }
                }
    FpVec unit(n, 0);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nr; ++j)
            unit[i * nr + j] =
                static_cast<Fp>((std::uint64_t)a->unit()[i] * r->unit()[j] % a->p());
    return Algebra::build(a->p(), std::move(labels), std::move(structure), std::move(unit));
}

ModuleRep BimoduleRep::as_enveloping_module() const
{
    AlgebraPtr env = enveloping_algebra(left_, right_);
    const std::size_t na = left_->dim(), nr = right_->dim();
    std::vector<FpMatrix> action;
    action.reserve(na * nr);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nr; ++j)
            action.push_back(la_[i] * ra_[j]);
    return ModuleRep::build(env, std::move(action));
}

BimoduleRep build_bimodule(AlgebraPtr left_over, AlgebraPtr right_over,
                           std::vector<FpMatrix> left_action, std::vector<FpMatrix> right_action)
{
    return BimoduleRep::build(std::move(left_over), std::move(right_over), std::move(left_action),
                              std::move(right_action));
}

ModuleMap ModuleMap::build(ModuleRep source, ModuleRep target, FpMatrix matrix)
{
    require(same_algebra(source.over(), target.over()), "DimensionMismatch",
            "module map across different algebras");
    require(matrix.rows() == target.dim() && matrix.cols() == source.dim(), "DimensionMismatch",
            "module map shape");
    for (std::size_t i = 0; i < source.over()->dim(); ++i)
        if (!(matrix * source.action(i) == target.action(i) * matrix))
            fail("RelationViolation", "matrix does not intertwine action of b" + std::to_string(i));
    return ModuleMap{std::move(source), std::move(target), std::move(matrix)};
}

bool ModuleMap::is_injective() const
{
    return exactla::rank(matrix) == source.dim();
}

bool ModuleMap::is_surjective() const
{
    return exactla::rank(matrix) == target.dim();
}

bool ModuleMap::is_bijective() const
{
    return source.dim() == target.dim() && exactla::rank(matrix) == source.dim();
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b)
{
    require(same_algebra(a.over(), b.over()), "DimensionMismatch", "direct sum across algebras");
    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < a.over()->dim(); ++i) {
        FpMatrix m(a.over()->p(), a.dim() + b.dim(), a.dim() + b.dim());
        for (std::size_t r = 0; r < a.dim(); ++r)
            for (std::size_t c = 0; c < a.dim(); ++c)
                m.set(r, c, a.action(i).at(r, c));
        for (std::size_t r = 0; r < b.dim(); ++r)
            for (std::size_t c = 0; c < b.dim(); ++c)
                m.set(a.dim() + r, a.dim() + c, b.action(i).at(r, c));
        action.push_back(std::move(m));
    }
    return ModuleRep::build(a.over(), std::move(action));
}

ModuleRep direct_sum(const std::vector<ModuleRep>& parts, AlgebraPtr over)
{
    ModuleRep acc = ModuleRep::zero(over);
    for (const auto& p : parts)
        acc = direct_sum(acc, p);
    return acc;
}

ModuleRep submodule(const ModuleRep& m, const FpMatrix& basis_cols)
{
    const std::size_t d = basis_cols.cols();
    std::vector<FpMatrix> action;
    exactla::FpSolver solver(basis_cols);
    for (std::size_t i = 0; i < m.over()->dim(); ++i) {
        FpMatrix img = m.action(i) * basis_cols;
        FpMatrix small(m.over()->p(), d, d);
        for (std::size_t j = 0; j < d; ++j) {
            auto coords = solver.solve(img.col(j));
            require(coords.has_value(), "RelationViolation", "subspace is not invariant");
            for (std::size_t r = 0; r < d; ++r)
                small.set(r, j, (*coords)[r]);
        }
        action.push_back(std::move(small));
    }
    return ModuleRep::build(m.over(), std::move(action));
}

QuotientRep quotient_module(const ModuleRep& m, const std::vector<FpVec>& subspace_gens)
{
    exactla::FpSubspace sub(m.over()->p(), m.dim(), subspace_gens);
    for (const auto& v : sub.row_basis())
        for (std::size_t i = 0; i < m.over()->dim(); ++i)
            require(sub.contains(m.action(i).apply(v)), "RelationViolation",
                    "quotient by a non-invariant subspace");
    auto coords = sub.complement_coords();
    const std::size_t q = coords.size();
    // projection: v -> residue of v mod sub, read off complement coordinates
    FpMatrix proj(m.over()->p(), q, m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
        FpVec ej(m.dim(), 0);
        ej[j] = 1;
        FpVec red = sub.reduce(ej);
        for (std::size_t r = 0; r < q; ++r)
            proj.set(r, j, red[coords[r]]);
    }
    std::vector<FpMatrix> action;
    for (std::size_t i = 0; i < m.over()->dim(); ++i) {
        FpMatrix a(m.over()->p(), q, q);
        for (std::size_t j = 0; j < q; ++j) {
            FpVec ej(m.dim(), 0);
            ej[coords[j]] = 1;
            FpVec img = sub.reduce(m.action(i).apply(ej));
            for (std::size_t r = 0; r < q; ++r)
                a.set(r, j, img[coords[r]]);
        }
        action.push_back(std::move(a));
    }
    return QuotientRep{ModuleRep::build(m.over(), std::move(action)), std::move(proj)};
}

FpMatrix generated_submodule(const ModuleRep& m, const std::vector<FpVec>& gens)
{
    exactla::FpSubspace span(m.over()->p(), m.dim());
    std::vector<FpVec> queue;
    for (const auto& g : gens)
        if (span.add(g))
            queue.push_back(g);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        FpVec v = queue[head];
        for (std::size_t i = 0; i < m.over()->dim(); ++i) {
            FpVec w = m.action(i).apply(v);
            if (span.add(w))
                queue.push_back(w);
        }
    }
    std::vector<FpVec> cols;
    for (const auto& row : span.row_basis())
        cols.push_back(row);
    FpMatrix out = FpMatrix::from_cols(m.over()->p(), cols);
    if (cols.empty())
        out = FpMatrix(m.over()->p(), m.dim(), 0);
    return out;
}

}  // namespace algcore
