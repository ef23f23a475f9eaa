#pragma once

#include "amalg/algebra.hpp"

#include <utility>
#include <vector>

namespace amalg {

// Complexification z = re + i im of the coordinate lattice. The only
// module allowed floating point: coordinatewise moduli leave the rational
// field. Fixed tolerance for all comparisons, with an exact fast path when
// re^2 + im^2 is a perfect rational square (covers im = 0 and Pythagorean
// data bit-exactly).
inline constexpr double kComplexTol = 1e-12;

struct ComplexElement {
    Element re, im;

    ComplexElement() = default;
    ComplexElement(Element r, Element i);

    int dim() const { return re.dim(); }

    friend bool operator==(const ComplexElement&, const ComplexElement&) = default;
};

ComplexElement cx_conjugate(const ComplexElement& z);

// (x1 + i x2)(y1 + i y2) = (x1 y1 - x2 y2) + i (x1 y2 + x2 y1); exact.
ComplexElement cx_product(const ComplexElement& z1, const ComplexElement& z2,
                          const StructureTensor& t);

// |z|_k = sqrt(re_k^2 + im_k^2); the coordinatewise lattice realization of
// sup_theta (re cos theta + im sin theta).
std::vector<double> cx_modulus(const ComplexElement& z);

// ||z||_C = ||  |z|  ||.
double cx_norm(const ComplexElement& z, const NormSpec& n);

// |z1 z2| <= |z1| |z2| coordinatewise within kComplexTol on each sampled
// pair. Requires a positive tensor.
bool check_modulus_submultiplicative(
    const StructureTensor& t,
    const std::vector<std::pair<ComplexElement, ComplexElement>>& samples);

// || conj(z) z || = ||z||^2 within kComplexTol. Only meaningful on the
// representation image: the spec must be pointwise with unit weights, else
// NotRepresentedPointwise.
bool check_cstar_identity(const AlgebraSpec& a, const std::vector<ComplexElement>& samples);

} // namespace amalg
