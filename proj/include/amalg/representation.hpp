#pragma once

#include "amalg/algebra.hpp"
#include "amalg/ratlin.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amalg {

// Sublattice constraints f(t) = lambda f(s) carving a subspace out of an
// ambient coordinate space. Indices are 0-based here; the file format is
// 1-based and converts at the boundary. lambda may be any nonnegative
// rational; the quotient case analysis sorts out which values can occur
// for sublattice-algebras.
struct ConstraintSystem {
    struct Constraint {
        int t = 0;
        int s = 0;
        Rational lambda;
    };

    int ambient = 0;
    std::vector<Constraint> constraints;

    void validate() const;
};

// Lattice/algebra isometry of an AM-algebra with unit onto the plain-sup
// pointwise coordinate algebra: x |-> (w_k x_k).
struct RepresentationResult {
    RatVec scaling;             // diagonal of the isometry
    StructureTensor transported;
    bool is_pointwise = false;  // always true on return; see represent_am_unit
};

// Preconditions: positive + associative product, weighted_sup norm, a
// two-sided identity equal to the order unit of the ball (e_k = 1/w_k).
// Norm submultiplicativity then follows (|xy| <= |x||y| <= ||x|| ||y|| e^2
// = ||x|| ||y|| e) and is not a separate gate. The transported tensor must
// come out as the Kronecker diagonal; anything else raises
// TheoremViolation, since a positive unital product on a coordinate
// lattice with identity 1 is forced to be pointwise.
// Throws: PreconditionViolated, NotAM, NoIdentity, IdentityNotOrderUnit,
// TheoremViolation.
RepresentationResult represent_am_unit(const AlgebraSpec& a);

// All nonnegative structure tensors admitting 1 = (1,...,1) as two-sided
// identity: the solution set of sum_i c[i][j][k] = delta_{jk},
// sum_j c[i][j][k] = delta_{ik}, c >= 0. Associativity is deliberately not
// imposed; the solution set is the singleton {Kronecker} anyway, which is
// the stronger statement. Solved exactly: equations whose surviving
// coefficients all share a sign and whose residual is zero force their
// variables to zero; the remaining system is solved by elimination. A
// positive-dimensional leftover would raise TheoremViolation.
std::vector<StructureTensor> martignon_products(int n);

// Basis (rows) of the solution subspace {f : f_t = lambda f_s for all
// constraints}, via an exact null-space computation.
RatMat solution_basis(const ConstraintSystem& cs);

// {p : f_p = 0 for every f in the solution subspace}; sorted, 0-based.
std::vector<int> forced_zero_coordinates(const ConstraintSystem& cs);

struct SubalgebraVerdict {
    bool closed = false;
    // basis pair whose pointwise product escapes the subspace
    struct Witness {
        int bi = 0, bj = 0;
        RatVec product;
    };
    std::optional<Witness> witness;
};

// Whether the solution subspace is closed under the pointwise product,
// decided on all pairwise products of a subspace basis by exact linear
// membership.
SubalgebraVerdict subalgebra_check(const ConstraintSystem& cs);

// Quotient-and-glue normal form of a sublattice-algebra: coordinates are
// partitioned into classes (f is constant on each class for every solution
// f), a set F of classes on which every solution vanishes, and the induced
// embedding onto {g on classes : g = 0 on F}.
struct QuotientResult {
    std::vector<std::vector<int>> classes; // partition of 0..ambient-1, each sorted
    std::vector<int> zero_classes;         // indices into classes, sorted
    RatMat basis;                          // basis of the solution subspace
    RatMat embedded_basis;                 // the same basis as functions on classes
    int solution_dim = 0;

    int class_of(int coordinate) const;
};

// The gluing algorithm: forced zeros, per-constraint case split
// (s forced zero -> t zero; lambda = 0 -> t zero; lambda = 1 -> glue t,s;
// anything else contradicts closure under squares), union-find over the
// glue pairs, then construction and verification of the embedding. The
// image is verified to equal the vanishing ideal by dimension count plus
// membership of the indicator of every non-vanishing class.
// Throws NotSubalgebra; ContradictsSubalgebra is the unreachable-case
// sentinel.
QuotientResult quotient_representation(const ConstraintSystem& cs);

struct AmClassification {
    bool ok = false;
    std::string failed_condition; // empty when ok
    int zero_set_size = 0;        // always 0 at finite scale when ok
    RatVec isometry_diag;
};

// Isometry onto a pointwise algebra iff the norm is weighted_sup and the
// tensor is diagonal with d_k = w_k. Finite-dimensional vanishing ideals
// are full function algebras on fewer points, so the zero set is empty on
// success.
AmClassification classify_am_algebra(const AlgebraSpec& a);

} // namespace amalg
