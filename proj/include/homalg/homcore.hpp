#pragma once

/* Single-ring homological machinery over finite-dimensional F_p-algebras:
 * Hom and tensor spaces, Jacobson radical and primitive idempotents,
 * projective covers and minimal resolutions, syzygies, duals, transpose,
 * Ext, torsionfree tests, injective resolutions via the linear duality D,
 * certified isomorphism testing, Krull-Remak-Schmidt decomposition, module
 * enumeration up to isomorphism, and extension middle terms. */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homalg/algcore.hpp"

namespace homcore {

using algcore::AlgebraPtr;
using algcore::BimoduleRep;
using algcore::ModuleMap;
using algcore::ModuleRep;
using exactla::Fp;
using exactla::FpMatrix;
using exactla::FpVec;

// --- basic spaces ------------------------------------------------------------

/* Basis of Hom_A(M, N) (matrices N.dim x M.dim, deterministic order). */
std::vector<FpMatrix> hom_space(const ModuleRep& m, const ModuleRep& n);

/* Coordinates of a matrix in a hom basis (exact; throws if not in span). */
FpVec coords_in_basis(std::uint32_t p, const std::vector<FpMatrix>& basis, const FpMatrix& elt);

/* Matrix (in the given hom bases) of a linear operator on hom spaces. */
FpMatrix operator_on_homs(std::uint32_t p, const std::vector<FpMatrix>& domain_basis,
                          const std::vector<FpMatrix>& target_basis,
                          const std::function<FpMatrix(const FpMatrix&)>& op);

/* X (x)_A Y as a quotient of the vector-space tensor product.
 * x_right_actions are the action matrices of X as a left opposite(A)-module;
 * y_left_actions those of Y as a left A-module. */
struct TensorSpace {
    std::uint32_t p = 2;
    std::size_t dim_x = 0, dim_y = 0, dim = 0;
    FpMatrix projection;  // dim x (dim_x*dim_y)
    FpMatrix section;     // (dim_x*dim_y) x dim, projection*section = I
    /* Operator induced on the quotient by on_x (x) on_y; both must commute
     * with the balancing relations. */
    FpMatrix induce(const FpMatrix& on_x, const FpMatrix& on_y) const;
};
TensorSpace tensor_space(std::uint32_t p, const std::vector<FpMatrix>& x_right_actions,
                         const std::vector<FpMatrix>& y_left_actions, std::size_t dim_x,
                         std::size_t dim_y);

/* Tr-style tensor wrappers used by the change-of-ring lemmas. */

/* X (right A-module, stored over opposite(A)) tensor Y (A-R-bimodule):
 * the result is a right R-module, i.e. a ModuleRep over opposite(R). */
ModuleRep tensor_right_with_bimodule(const ModuleRep& x_over_aop, const BimoduleRep& y);

/* T (A-R-bimodule) tensor X (left R-module): a left A-module. */
ModuleRep tensor_bimodule_with_left(const BimoduleRep& t, const ModuleRep& x);

/* X (B-A-bimodule) tensor Y (A-C-bimodule): a B-C-bimodule. */
BimoduleRep tensor_bimodule_bimodule(const BimoduleRep& x, const BimoduleRep& y);

/* Plain dimension of X (x)_A Y for tests. */
std::size_t tensor_dim(const ModuleRep& x_over_aop, const ModuleRep& y_over_a);

// --- submodule / quotient plumbing --------------------------------------------

struct SubmoduleData {
    ModuleRep module;
    FpMatrix basis;  // ambient.dim x module.dim, columns a basis
};
SubmoduleData kernel_module(const ModuleMap& f);
SubmoduleData image_module(const ModuleMap& f);

struct CokernelData {
    ModuleRep module;
    FpMatrix projection;  // module.dim x ambient.dim
};
CokernelData cokernel_module(const ModuleMap& f);

// --- radical, idempotents, simples --------------------------------------------

/* Basis of the Jacobson radical as elements of A (iterated trace-form
 * kernels in characteristic p). Certified nilpotent at computation time;
 * the quotient recomputes to radical zero. */
std::vector<FpVec> jacobson_radical(const AlgebraPtr& a);

/* Complete list of orthogonal primitive idempotents summing to 1. */
std::vector<FpVec> primitive_idempotents(const AlgebraPtr& a);

/* Cached derived data of an algebra. Computed once, immutable afterwards. */
struct AlgebraData {
    AlgebraPtr algebra;
    AlgebraPtr opposite;                       // cached, with back-pointer
    std::vector<FpVec> radical;                // basis of rad(A)
    std::vector<FpVec> idempotents;            // orthogonal primitive, sum 1
    std::vector<std::size_t> idempotent_block; // Wedderburn block per idempotent
    std::size_t block_count = 0;
    /* One representative primitive idempotent per block. */
    std::vector<std::size_t> block_rep;        // index into idempotents
    std::vector<ModuleRep> indec_projectives;  // A e per block
    std::vector<FpMatrix> indec_proj_basis;    // columns: basis of A e inside A
    std::vector<ModuleRep> simples;            // top(A e) per block
};
const AlgebraData& algebra_data(const AlgebraPtr& a);

/* Cached opposite algebra; opposite_of(opposite_of(a)) is pointer-equal to a. */
AlgebraPtr opposite_of(const AlgebraPtr& a);

/* Endomorphism algebra of a module with its matrix basis. */
AlgebraPtr endomorphism_algebra(const ModuleRep& m, std::vector<FpMatrix>& basis_out);

/* Generators of rad(A) * M. */
std::vector<FpVec> radical_module_gens(const ModuleRep& m);

// --- covers and resolutions ----------------------------------------------------

struct Cover {
    ModuleRep projective;
    ModuleMap epi;                       // projective -> M, kernel inside rad * projective
    std::vector<std::size_t> summand_blocks;  // indec projective block per summand
};
Cover projective_cover(const ModuleRep& m);

bool is_projective(const ModuleRep& m);

/* terms[i] = P_i; differentials[i]: P_{i+1} -> P_i (i >= 0);
 * augmentation: P_0 -> M. length = number of terms - 1. */
struct Resolution {
    ModuleRep of;
    std::vector<ModuleRep> terms;
    std::vector<ModuleMap> differentials;
    ModuleMap augmentation;
    bool minimal = false;
};
Resolution minimal_projective_resolution(const ModuleRep& m, std::size_t length);

/* Non-minimal resolution: pads each cover with a deterministic extra free
 * summand driven by the seed. First-class input for presentation-dependent
 * constructions. */
Resolution padded_projective_resolution(const ModuleRep& m, std::size_t length, std::uint64_t seed);

bool resolution_is_exact(const Resolution& r);
bool resolution_is_minimal(const Resolution& r);

/* Kernel at step n of the minimal resolution (syzygy(M, 0) = M). */
ModuleRep syzygy(const ModuleRep& m, std::size_t n);

bool pd_at_most(const ModuleRep& m, std::size_t t);

// --- duals, transpose, Ext ------------------------------------------------------

/* Hom_A(M, A) as a module over opposite(A), with the hom basis retained. */
struct DualModule {
    ModuleRep module;              // over opposite(A)
    std::vector<FpMatrix> basis;   // maps M -> A (dimA x dimM)
};
DualModule dual_star(const ModuleRep& m);

/* Matrix of the dual of g: M -> N, i.e. N* -> M*, in the stored dual bases. */
FpMatrix dual_map_matrix(const DualModule& nstar, const DualModule& mstar, const FpMatrix& g);

struct Presentation {
    ModuleRep p1, p0;
    FpMatrix d;    // P1 -> P0
    FpMatrix aug;  // P0 -> M
    ModuleRep of;
};
Presentation minimal_presentation(const ModuleRep& m);
Presentation padded_presentation(const ModuleRep& m, std::uint64_t seed);

struct TransposeData {
    Presentation presentation;
    DualModule mstar, p0star, p1star;
    FpMatrix dual_d;            // P0* -> P1* (matrix in dual bases)
    FpMatrix incl;              // M* -> P0*
    ModuleRep transpose;        // over opposite(A)
    FpMatrix coker_projection;  // P1* -> transpose
    bool four_term_exact = false;

    /* Evaluation map delta_M: M -> M** and its certified exact sequence
     * 0 -> Ext^1(Tr M, A) -> M -> M** -> Ext^2(Tr M, A) -> 0. */
    FpMatrix delta;
    std::size_t delta_kernel_dim = 0, delta_cokernel_dim = 0;
};
TransposeData transpose(const ModuleRep& m);
TransposeData transpose_with(const Presentation& pres);

struct ExtValue {
    std::size_t i = 0;
    std::size_t dim = 0;
    std::optional<ModuleRep> as_module;  // over opposite(A) when N is the regular module
};

/* Ext^i_A(M, N) via the minimal projective resolution of M. */
ExtValue ext(const ModuleRep& m, const ModuleRep& n, std::size_t i);

/* Ext^i from a supplied resolution (for independence cross-checks). */
std::size_t ext_dim_from_resolution(const Resolution& r, const ModuleRep& n, std::size_t i);

/* Ext^i_A(M, A) with the right-module structure carried along. */
ExtValue ext_into_regular(const ModuleRep& m, std::size_t i);

struct TorsionfreeReport {
    std::size_t k = 0;
    bool verdict = false;
    std::optional<std::size_t> first_failure;
};
TorsionfreeReport is_k_torsionfree(const ModuleRep& m, std::size_t k);

/* Linear dual D(M) over opposite(A) (transposed actions). */
ModuleRep vector_dual_D(const ModuleRep& m);

/* Minimal injective resolution through the duality D: terms[i] = I^i,
 * differentials[i]: I^i -> I^{i+1}, augmentation: M -> I^0. */
Resolution minimal_injective_resolution(const ModuleRep& m, std::size_t length);

bool is_self_injective(const AlgebraPtr& a);

enum class GpStatus { confirmed_exact, yes_up_to_cutoff, no };
struct GpVerdict {
    GpStatus status = GpStatus::no;
    std::size_t cutoff = 0;
    /* On `no`: (degree, side) with side 0 = Ext^i(M,A) != 0, 1 = Ext^i(M*,A) != 0,
     * 2 = delta_M not bijective (degree unused). */
    std::optional<std::pair<std::size_t, int>> witness;
};
GpVerdict is_totally_reflexive_up_to(const ModuleRep& m, std::size_t cutoff);

// --- isomorphism, decomposition, enumeration ------------------------------------

struct IsoResult {
    std::optional<FpMatrix> witness;  // invertible intertwiner M -> N
    std::string strategy;             // "dims", "hypercube", "random", ...
    bool certified_complete = false;  // search provably exhaustive
};
IsoResult is_isomorphic(const ModuleRep& m, const ModuleRep& n,
                        std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/* Cheap iso-invariant fingerprint used to prescreen pairs. */
std::vector<std::size_t> iso_fingerprint(const ModuleRep& m);

struct Decomposition {
    std::vector<std::pair<ModuleRep, std::size_t>> summands;  // (indecomposable, multiplicity)
    /* Columns: bases of the indecomposable pieces in order (with multiplicity),
     * concatenated into an invertible change-of-basis certificate. */
    FpMatrix change_of_basis;
};
Decomposition decompose_indecomposables(const ModuleRep& m);

bool is_indecomposable(const ModuleRep& m);

/* Does some summand of the KRS decomposition of y equal m up to iso? */
bool is_direct_summand(const ModuleRep& m, const ModuleRep& y);

/* Delete projective summands; returns the non-projective part (up to iso). */
ModuleRep stable_part(const ModuleRep& m);

struct Catalog {
    AlgebraPtr over;
    std::size_t cap = 0;
    std::vector<ModuleRep> modules;  // pairwise non-isomorphic, deterministic order
    std::uint64_t seed = 0;
    std::uint64_t candidates_examined = 0;
};
/* All iso-classes of nonzero modules of dimension <= cap, built by closing
 * the simple modules under extensions with simple quotients (every module
 * has a maximal submodule, so the sweep is complete), deduplicated with
 * is_isomorphic. Throws BudgetExceeded when the candidate count passes the
 * budget. Results are cached per algebra and cap. */
const Catalog& enumerate_modules_up_to(const AlgebraPtr& a, std::size_t cap,
                                       std::uint64_t budget = 10000000, std::uint64_t seed = 1);

/* Cocycle description of Ext^1(Z, X): class representatives modulo
 * coboundaries. Each cocycle is one matrix (dimX x dimZ) per algebra basis
 * element. */
struct Ext1Cocycles {
    std::size_t dim = 0;                               // dim Ext^1(Z, X)
    std::vector<std::vector<FpMatrix>> class_basis;    // basis of Z^1/B^1
};
Ext1Cocycles ext1_cocycles(const ModuleRep& z, const ModuleRep& x);

/* Middle term of the extension of Z by X along the given cocycle. */
ModuleRep middle_term(const ModuleRep& z, const ModuleRep& x,
                      const std::vector<FpMatrix>& cocycle);

/* Middle terms for each basis class and the zero class; with all_classes,
 * every class in Ext^1 when p^dim <= class_budget. */
std::vector<ModuleRep> extension_middle_terms(const ModuleRep& z, const ModuleRep& x,
                                              bool all_classes = false,
                                              std::size_t class_budget = 256);

}  // namespace homcore
