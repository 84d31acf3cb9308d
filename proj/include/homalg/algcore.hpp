#pragma once

/* Finite-dimensional associative unital algebras over F_p given by structure
 * constants on a labeled basis, together with finite-dimensional modules
 * (action matrices) and bimodules. Right modules are uniformly stored as left
 * modules over the opposite algebra. Everything is validated at construction
 * and immutable afterwards. */

#include <memory>
#include <string>
#include <vector>

#include "homalg/exactla.hpp"

namespace algcore {

using exactla::Fp;
using exactla::FpMatrix;
using exactla::FpVec;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
  public:
    /* Validates associativity and the unit law; throws
     * AssociativityViolation / UnitViolation / NonPrimeModulus. */
    static AlgebraPtr build(std::uint32_t p, std::vector<std::string> labels,
                            std::vector<std::vector<FpVec>> structure, FpVec unit);

    std::uint32_t p() const { return p_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const FpVec& unit() const { return unit_; }

    /* Coefficient vector of b_i * b_j. */
    const FpVec& sc(std::size_t i, std::size_t j) const { return structure_[i][j]; }
    const std::vector<std::vector<FpVec>>& structure() const { return structure_; }

    FpVec multiply(const FpVec& x, const FpVec& y) const;

    /* Matrix of left multiplication by x: column j = x * b_j. */
    FpMatrix left_mult_matrix(const FpVec& x) const;
    /* Matrix of right multiplication by x: column j = b_j * x. */
    FpMatrix right_mult_matrix(const FpVec& x) const;

    bool is_commutative() const;

    /* Structural identity (same p, labels, table, unit). */
    bool same_table(const Algebra& other) const;

  private:
    Algebra() = default;
    std::uint32_t p_ = 2;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<FpVec>> structure_;
    FpVec unit_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/* A left module over `over`, given by one action matrix per basis element.
 * A right A-module is a ModuleRep over opposite(A). */
class ModuleRep {
  public:
    /* Validates action(1) = id and the structure-constant relations;
     * throws RelationViolation / UnitNotIdentity. */
    static ModuleRep build(AlgebraPtr over, std::vector<FpMatrix> action);
    /* Zero module over A. */
    static ModuleRep zero(AlgebraPtr over);
    /* A acting on itself by left multiplication. */
    static ModuleRep regular(AlgebraPtr over);

    const AlgebraPtr& over() const { return over_; }
    std::size_t dim() const { return dim_; }
    const FpMatrix& action(std::size_t i) const { return action_[i]; }
    const std::vector<FpMatrix>& actions() const { return action_; }

    /* Action of an arbitrary algebra element. */
    FpMatrix action_of(const FpVec& x) const;

    bool operator==(const ModuleRep& rhs) const
    {
        return same_algebra(over_, rhs.over_) && action_ == rhs.action_;
    }

  private:
    ModuleRep() = default;
    AlgebraPtr over_;
    std::size_t dim_ = 0;
    std::vector<FpMatrix> action_;
};

/* A-R-bimodule: left action of A, right action of R, commuting. The right
 * action is stored as matrices rho(r) with m*r = rho(r)(m), so
 * rho(r s) = rho(s) rho(r). */
class BimoduleRep {
  public:
    static BimoduleRep build(AlgebraPtr left_over, AlgebraPtr right_over,
                             std::vector<FpMatrix> left_action, std::vector<FpMatrix> right_action);

    const AlgebraPtr& left_over() const { return left_; }
    const AlgebraPtr& right_over() const { return right_; }
    std::size_t dim() const { return dim_; }
    const std::vector<FpMatrix>& left_actions() const { return la_; }
    const std::vector<FpMatrix>& right_actions() const { return ra_; }

    /* Forget one side. as_left: left module over A. as_right: left module
     * over opposite(R). */
    ModuleRep as_left() const;
    ModuleRep as_right() const;

    /* The bimodule as a left module over the enveloping algebra
     * A (x) R^op (basis pairs in row-major (i over A, j over R) order). */
    ModuleRep as_enveloping_module() const;

    /* The enveloping algebra A (x) R^op itself. */
    static AlgebraPtr enveloping_algebra(const AlgebraPtr& a, const AlgebraPtr& r);

  private:
    BimoduleRep() = default;
    AlgebraPtr left_, right_;
    std::size_t dim_ = 0;
    std::vector<FpMatrix> la_, ra_;
};

/* A homomorphism of left modules: matrix * action_src(b i) = action_tgt(b i) * matrix. */
struct ModuleMap {
    ModuleRep source, target;
    FpMatrix matrix;  // target.dim x source.dim

    /* Throws RelationViolation if the matrix does not intertwine. */
    static ModuleMap build(ModuleRep source, ModuleRep target, FpMatrix matrix);
    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const;
};

// --- Constructors ------------------------------------------------------------

/* Validated multiplication-table constructor. */
AlgebraPtr build_algebra(std::uint32_t p, std::vector<std::string> labels,
                         std::vector<std::vector<FpVec>> structure, FpVec unit);

/* The one-dimensional algebra F_p. */
AlgebraPtr field_algebra(std::uint32_t p);

/* Group algebra F_p[G] from a Cayley table (table[i][j] = index of g_i g_j).
 * Checks the group axioms; throws NotAGroup. */
AlgebraPtr group_algebra(std::uint32_t p, const std::vector<std::vector<std::size_t>>& cayley,
                         std::vector<std::string> element_names = {});

/* Commutative monomial quotient F_p[x_1..x_k]/(monomial ideal). Generators are
 * exponent vectors. Requires a pure power of every variable in the ideal;
 * throws InfiniteDimensionalQuotient otherwise. */
AlgebraPtr monomial_quotient_algebra(std::uint32_t p, std::vector<std::string> variables,
                                     const std::vector<std::vector<std::size_t>>& ideal_gens);

AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

AlgebraPtr opposite(const AlgebraPtr& a);

ModuleRep build_module(AlgebraPtr over, std::vector<FpMatrix> action);

BimoduleRep build_bimodule(AlgebraPtr left_over, AlgebraPtr right_over,
                           std::vector<FpMatrix> left_action, std::vector<FpMatrix> right_action);

/* Simple module of a commutative local quotient-type situation is not special-
 * cased; build simple modules from action matrices or via homcore. */

/* Direct sum of modules over the same algebra. */
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
ModuleRep direct_sum(const std::vector<ModuleRep>& parts, AlgebraPtr over);

/* Restriction of a module to an invariant subspace. `basis` columns span the
 * subspace; every action must preserve it. */
ModuleRep submodule(const ModuleRep& m, const FpMatrix& basis_cols);

/* Quotient of a module by the span of the given vectors (must be invariant). */
struct QuotientRep {
    ModuleRep module;
    FpMatrix projection;  // quotient.dim x m.dim
};
QuotientRep quotient_module(const ModuleRep& m, const std::vector<FpVec>& subspace_gens);

/* Span of A-orbits of the given vectors, as column basis matrix. */
FpMatrix generated_submodule(const ModuleRep& m, const std::vector<FpVec>& gens);

}  // namespace algcore
