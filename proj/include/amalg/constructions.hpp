#pragma once

#include "amalg/algebra.hpp"
#include "amalg/representation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace amalg {

// Named example algebras. Parameters: n for the parameterized families,
// weights for the pointwise family (defaults to all ones).
struct GalleryName {
    enum class Kind { pointwise, twisted_linf2, c0_R, cyclic_convolution, zero_product };

    Kind kind = Kind::pointwise;
    int n = 1;
    RatVec weights; // pointwise only; empty means all ones

    static GalleryName pointwise(int n, RatVec w = {});
    static GalleryName twisted_linf2();
    static GalleryName c0_R(int n);
    static GalleryName cyclic_convolution(int n);
    static GalleryName zero_product(int n);

    static const std::vector<std::string>& names();
    static GalleryName parse(const std::string& name, int n, const RatVec& weights);
};

// pointwise(n, w): diagonal tensor d_k = w_k under weighted_sup(w), so the
//   spec is unital with identity (1/w_k).
// twisted_linf2: dim 2, plain sup, only e_1 e_1 = e_2.
// c0_R(n): dim n+1, plain sup, (x, l)(y, m) = (xy + l y + m x, l m).
// cyclic_convolution(n): dim n, weighted_l1 with unit weights,
//   e_i e_j = e_{i+j mod n} (indices as group elements 0..n-1).
// zero_product(n): dim n+1, plain sup, identity atom adjoined at the last
//   coordinate over an identically-zero product on the first n.
AlgebraSpec gallery(const GalleryName& name);

struct IdealAeReport {
    std::vector<int> support;   // support of the identity, sorted
    AlgebraSpec restricted;     // the ideal A_e as a spec of its own
    std::optional<RepresentationResult> representation;
    std::string representation_error; // set when representation is empty
    bool ambient_submultiplicative = false;
    bool norm_coincides = false; // ||x|| == ||x||_e exactly on all samples
    std::optional<Element> norm_witness;
    bool spectral_within_tol = false;
    double spectral_max_err = 0.0;
    int samples = 0;
};

inline constexpr double kSpectralTol = 1e-9;
inline constexpr int kSpectralDepth = 12; // compares ||x^(2^k)||^(1/2^k) at k = 12

// Restriction of a unital spec to the ideal generated by its identity,
// with the order-unit norm report: ||x||_e = max |x_k| / e_k must equal
// the ambient norm exactly on random samples from the ideal, and the
// repeated-squaring root must approach it within kSpectralTol for positive
// samples. Preconditions: positive + associative product and a two-sided
// identity of norm one.
IdealAeReport ideal_Ae(const AlgebraSpec& a, int samples = 100, std::uint64_t seed = 20240901);

struct StarResult {
    StructureTensor tensor;
    std::vector<std::pair<int, int>> differs_at; // basis pairs with changed products
};

// The projection-deformed product
//   x * y = Px Py + alpha(Px) Pd y + Pd x beta(Py)
// where P is the band projection onto the ideal of the identity and
// alpha, beta are the transported point evaluations x -> x_k / e_k at the
// given support coordinates. The result is re-verified to be positive,
// associative, and to keep e as a two-sided identity; failures raise
// TheoremViolation. Throws NoIdentity / IndexOutsideSupport.
StarResult star_product(const AlgebraSpec& a, int alpha_idx, int beta_idx);

struct AstResult {
    StructureTensor tensor;
    std::vector<std::pair<int, int>> differs_at;
    Element witness_x;      // witness_x * witness_x != 0 under the new product
    Element witness_square; // its new square, phi(x)^2 x0
};

// The rank-one deformation for the remaining case: with A_e = span{e},
// all complement products zero, a positive functional phi on the
// complement and a positive x0 in the complement,
//   x * y = l m e + l y' + m x' + phi(x') phi(y') x0.
// Positivity, associativity and the identity are re-verified; a witness
// with x * x != 0 but x x = 0 is produced. Throws PreconditionViolated
// naming the failed hypothesis.
AstResult ast_product(const AlgebraSpec& a, const Functional& phi, const Element& x0);

} // namespace amalg
