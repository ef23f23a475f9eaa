#include "amalg/complexify.hpp"

#include "amalg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace amalg {

ComplexElement::ComplexElement(Element r, Element i) : re(std::move(r)), im(std::move(i)) {
    if (re.dim() != im.dim()) throw DimensionMismatch("complex element: re/im dimensions differ");
}

ComplexElement cx_conjugate(const ComplexElement& z) {
    return {z.re, -z.im};
}

ComplexElement cx_product(const ComplexElement& z1, const ComplexElement& z2,
                          const StructureTensor& t) {
    return {multiply(z1.re, z2.re, t) - multiply(z1.im, z2.im, t),
            multiply(z1.re, z2.im, t) + multiply(z1.im, z2.re, t)};
}

std::vector<double> cx_modulus(const ComplexElement& z) {
    std::vector<double> m(static_cast<std::size_t>(z.dim()));
    for (int k = 0; k < z.dim(); ++k) {
        const Rational square = z.re[k] * z.re[k] + z.im[k] * z.im[k];
        Rational root;
        if (exact_sqrt(square, root)) {
            m[static_cast<std::size_t>(k)] = to_double(root);
        } else {
            m[static_cast<std::size_t>(k)] = std::sqrt(to_double(square));
        }
    }
    return m;
}

double cx_norm(const ComplexElement& z, const NormSpec& n) {
    if (z.dim() != n.dim()) throw DimensionMismatch("cx_norm");
    const std::vector<double> m = cx_modulus(z);
    double acc = 0.0;
    for (int k = 0; k < z.dim(); ++k) {
        const double term = to_double(n.weights[static_cast<std::size_t>(k)]) *
                            m[static_cast<std::size_t>(k)];
        acc = (n.kind == NormKind::weighted_sup) ? std::max(acc, term) : acc + term;
    }
    return acc;
}

namespace {

std::vector<double> contract(const StructureTensor& t, const std::vector<double>& x,
                             const std::vector<double>& y) {
    std::vector<double> z(static_cast<std::size_t>(t.dim), 0.0);
    for (int i = 0; i < t.dim; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0.0) continue;
        for (int j = 0; j < t.dim; ++j) {
            if (y[static_cast<std::size_t>(j)] == 0.0) continue;
            const double xy = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            for (int k = 0; k < t.dim; ++k) {
                const Rational& c = t.at(i, j, k);
                if (c != 0) z[static_cast<std::size_t>(k)] += xy * to_double(c);
            }
        }
    }
    return z;
}

} // namespace

bool check_modulus_submultiplicative(
    const StructureTensor& t,
    const std::vector<std::pair<ComplexElement, ComplexElement>>& samples) {
    if (!t.is_nonnegative()) {
        throw NotPositiveProduct("check_modulus_submultiplicative needs a positive product");
    }
    for (const auto& [z1, z2] : samples) {
        const std::vector<double> lhs = cx_modulus(cx_product(z1, z2, t));
        const std::vector<double> rhs = contract(t, cx_modulus(z1), cx_modulus(z2));
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            if (lhs[k] > rhs[k] + kComplexTol) return false;
        }
    }
    return true;
}

bool check_cstar_identity(const AlgebraSpec& a, const std::vector<ComplexElement>& samples) {
    a.validate();
    const bool unit_weights = std::all_of(a.norm.weights.begin(), a.norm.weights.end(),
                                          [](const Rational& w) { return w == 1; });
    if (a.norm.kind != NormKind::weighted_sup || !unit_weights ||
        a.tensor != StructureTensor::kronecker(a.dim())) {
        throw NotRepresentedPointwise(
            "check_cstar_identity: spec is not the pointwise unit-weight representation image");
    }
    for (const ComplexElement& z : samples) {
        const double lhs = cx_norm(cx_product(cx_conjugate(z), z, a.tensor), a.norm);
        const double nz = cx_norm(z, a.norm);
        if (std::fabs(lhs - nz * nz) > kComplexTol) return false;
    }
    return true;
}

} // namespace amalg
