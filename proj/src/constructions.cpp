#include "amalg/constructions.hpp"

#include "amalg/errors.hpp"
#include "amalg/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace amalg {

GalleryName GalleryName::pointwise(int n, RatVec w) {
    GalleryName g;
    g.kind = Kind::pointwise;
    g.n = n;
    g.weights = std::move(w);
    return g;
}

GalleryName GalleryName::twisted_linf2() {
    GalleryName g;
    g.kind = Kind::twisted_linf2;
    g.n = 2;
    return g;
}

GalleryName GalleryName::c0_R(int n) {
    GalleryName g;
    g.kind = Kind::c0_R;
    g.n = n;
    return g;
}

GalleryName GalleryName::cyclic_convolution(int n) {
    GalleryName g;
    g.kind = Kind::cyclic_convolution;
    g.n = n;
    return g;
}

GalleryName GalleryName::zero_product(int n) {
    GalleryName g;
    g.kind = Kind::zero_product;
    g.n = n;
    return g;
}

const std::vector<std::string>& GalleryName::names() {
    static const std::vector<std::string> list = {
        "pointwise", "twisted_linf2", "c0_R", "cyclic_convolution", "zero_product"};
    return list;
}

GalleryName GalleryName::parse(const std::string& name, int n, const RatVec& weights) {
    if (name == "pointwise") return pointwise(n, weights);
    if (!weights.empty()) throw BadParameter("weights are only valid for the pointwise family");
    if (name == "twisted_linf2") return twisted_linf2();
    if (name == "c0_R") return c0_R(n);
    if (name == "cyclic_convolution") return cyclic_convolution(n);
    if (name == "zero_product") return zero_product(n);
    throw BadParameter("unknown gallery name: " + name);
}

AlgebraSpec gallery(const GalleryName& name) {
    if (name.n < 1) throw BadParameter("gallery: n must be >= 1");
    AlgebraSpec spec;
    switch (name.kind) {
    case GalleryName::Kind::pointwise: {
        RatVec w = name.weights;
        if (w.empty()) w.assign(static_cast<std::size_t>(name.n), Rational(1));
        if (static_cast<int>(w.size()) != name.n) {
            throw BadParameter("gallery: pointwise weights must have length n");
        }
        for (const Rational& wk : w) {
            if (wk <= 0) throw BadParameter("gallery: pointwise weights must be positive");
        }
        spec.tensor = StructureTensor::diagonal(w);
        spec.norm = NormSpec::sup(std::move(w));
        spec.label = "pointwise(" + std::to_string(name.n) + ")";
        break;
    }
    case GalleryName::Kind::twisted_linf2: {
        spec.tensor = StructureTensor(2);
        spec.tensor.at(0, 0, 1) = 1; // (x1,y1)(x2,y2) = (0, x1 x2)
        spec.norm = NormSpec::sup_ones(2);
        spec.label = "twisted_linf2";
        break;
    }
    case GalleryName::Kind::c0_R: {
        const int n = name.n;
        const int last = n; // 0-based index of the adjoined scalar slot
        spec.tensor = StructureTensor(n + 1);
        for (int i = 0; i < n; ++i) {
            spec.tensor.at(i, i, i) = 1;    // xy
            spec.tensor.at(i, last, i) = 1; // m x
            spec.tensor.at(last, i, i) = 1; // l y
        }
        spec.tensor.at(last, last, last) = 1; // l m
        spec.norm = NormSpec::sup_ones(n + 1);
        spec.label = "c0_R(" + std::to_string(n) + ")";
        break;
    }
    case GalleryName::Kind::cyclic_convolution: {
        const int n = name.n;
        spec.tensor = StructureTensor(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) spec.tensor.at(i, j, (i + j) % n) = 1;
        }
        spec.norm = NormSpec::l1_ones(n);
        spec.label = "cyclic_convolution(" + std::to_string(n) + ")";
        break;
    }
    case GalleryName::Kind::zero_product: {
        const int n = name.n;
        const int last = n;
        spec.tensor = StructureTensor(n + 1);
        for (int i = 0; i < n; ++i) {
            spec.tensor.at(i, last, i) = 1;
            spec.tensor.at(last, i, i) = 1;
        }
        spec.tensor.at(last, last, last) = 1;
        spec.norm = NormSpec::sup_ones(n + 1);
        spec.label = "zero_product(" + std::to_string(n) + ")";
        break;
    }
    }
    spec.validate();
    return spec;
}

namespace {

// Shared gate for the deformation constructions: positive + associative
// product with a two-sided identity. Norm submultiplicativity is not part
// of the vector-lattice-algebra axioms these constructions live in.
Element require_unital_vector_lattice_algebra(const AxiomReport& rep, const char* who) {
    if (!rep.positive_product) {
        throw PreconditionViolated(std::string(who) + ": product is not positive");
    }
    if (!rep.associative) {
        throw PreconditionViolated(std::string(who) + ": product is not associative");
    }
    if (!rep.identity) throw NoIdentity(std::string(who) + ": no two-sided identity");
    return *rep.identity;
}

void verify_product_axioms(const StructureTensor& t, const Element& e, const char* who) {
    const int n = t.dim;
    if (!t.is_nonnegative()) {
        throw TheoremViolation(std::string(who) + ": constructed product lost positivity");
    }
    for (int i = 0; i < n; ++i) {
        const Element ei = Element::atom(n, i);
        for (int j = 0; j < n; ++j) {
            const Element ej = Element::atom(n, j);
            const Element eij = multiply(ei, ej, t);
            for (int l = 0; l < n; ++l) {
                const Element el = Element::atom(n, l);
                if (multiply(eij, el, t) != multiply(ei, multiply(ej, el, t), t)) {
                    throw TheoremViolation(std::string(who) +
                                           ": constructed product is not associative");
                }
            }
        }
        if (multiply(e, ei, t) != ei || multiply(ei, e, t) != ei) {
            throw TheoremViolation(std::string(who) + ": identity lost by the construction");
        }
    }
}

std::vector<std::pair<int, int>> tensor_differences(const StructureTensor& a,
                                                    const StructureTensor& b) {
    std::vector<std::pair<int, int>> diff;
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
            for (int k = 0; k < a.dim; ++k) {
                if (a.at(i, j, k) != b.at(i, j, k)) {
                    diff.emplace_back(i, j);
                    break;
                }
            }
        }
    }
    return diff;
}

} // namespace

IdealAeReport ideal_Ae(const AlgebraSpec& a, int samples, std::uint64_t seed) {
    const AxiomReport rep = check_axioms(a);
    const Element e = require_unital_vector_lattice_algebra(rep, "ideal_Ae");
    if (norm(e, a.norm) != 1) {
        throw PreconditionViolated("ideal_Ae: identity does not have norm one");
    }

    IdealAeReport out;
    out.ambient_submultiplicative = rep.submultiplicative;
    out.samples = samples;
    const BandProjectionPair p = band_projection(e);
    out.support = p.support;
    const int m = static_cast<int>(p.support.size());

    // Products of ideal elements stay in the ideal: |xy| <= |x||y| <=
    // lm e^2 = lm e. A nonzero block leaking outside the support would
    // contradict that.
    for (int i : p.support) {
        for (int j : p.support) {
            for (int k = 0; k < a.dim(); ++k) {
                if (!p.in_support(k) && a.tensor.at(i, j, k) != 0) {
                    throw TheoremViolation("ideal_Ae: ideal is not closed under the product");
                }
            }
        }
    }

    // The ideal as a spec of its own, in its support coordinates. In
    // dimension one the two norm kinds coincide; record sup so the
    // restricted spec is exactly an AM-spec.
    RatVec weights;
    weights.reserve(static_cast<std::size_t>(m));
    for (int k : p.support) weights.push_back(a.norm.weights[static_cast<std::size_t>(k)]);
    const NormKind kind = (a.norm.kind == NormKind::weighted_l1 && m == 1)
                              ? NormKind::weighted_sup
                              : a.norm.kind;
    out.restricted.norm = NormSpec(kind, std::move(weights));
    out.restricted.tensor = StructureTensor(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < m; ++k) {
                out.restricted.tensor.at(i, j, k) =
                    a.tensor.at(p.support[static_cast<std::size_t>(i)],
                                p.support[static_cast<std::size_t>(j)],
                                p.support[static_cast<std::size_t>(k)]);
            }
        }
    }
    out.restricted.label = a.label.empty() ? "A_e" : a.label + " | A_e";

    try {
        out.representation = represent_am_unit(out.restricted);
    } catch (const Error& err) {
        out.representation_error = err.what();
    }

    // Order-unit norm against ambient norm, exact, on random ideal
    // elements; repeated-squaring root against the order-unit norm for
    // their moduli.
    Sampler sampler(seed);
    out.norm_coincides = true;
    out.spectral_within_tol = true;
    out.spectral_max_err = 0.0;
    for (int trial = 0; trial < samples; ++trial) {
        Element x = Element::zero(a.dim());
        for (int k : p.support) x[k] = sampler.rational();

        Rational unit_norm(0); // ||x||_e = max |x_k| / e_k over the support
        for (int k : p.support) {
            unit_norm = std::max(unit_norm, Rational(::abs(x[k]) / e[k]));
        }
        if (out.norm_coincides && unit_norm != norm(x, a.norm)) {
            out.norm_coincides = false;
            out.norm_witness = x;
        }

        Element power = abs(x);
        if (power.is_zero()) continue;
        for (int step = 0; step < kSpectralDepth; ++step) power = multiply(power, power, a.tensor);
        const Rational power_norm = norm(power, a.norm);
        double root = 0.0;
        if (power_norm != 0) {
            root = std::exp(log_to_double(power_norm) / std::pow(2.0, kSpectralDepth));
        }
        const double err = std::fabs(root - to_double(unit_norm));
        out.spectral_max_err = std::max(out.spectral_max_err, err);
        if (err > kSpectralTol) out.spectral_within_tol = false;
    }
    return out;
}

StarResult star_product(const AlgebraSpec& a, int alpha_idx, int beta_idx) {
    const AxiomReport rep = check_axioms(a);
    const Element e = require_unital_vector_lattice_algebra(rep, "star_product");
    const BandProjectionPair p = band_projection(e);
    const int n = a.dim();
    if (alpha_idx < 0 || alpha_idx >= n || e[alpha_idx] == 0) {
        throw IndexOutsideSupport("star_product: alpha index outside support of the identity");
    }
    if (beta_idx < 0 || beta_idx >= n || e[beta_idx] == 0) {
        throw IndexOutsideSupport("star_product: beta index outside support of the identity");
    }

    // The transported point evaluations are multiplicative on the ideal
    // because its product is forced diagonal with e_k e_k = (1/e_k) e_k,
    // and products of ideal elements cannot leave the ideal.
    for (int i : p.support) {
        for (int j : p.support) {
            for (int k = 0; k < n; ++k) {
                const Rational expected =
                    (i == j && j == k && p.in_support(k)) ? Rational(1 / e[k]) : Rational(0);
                if (a.tensor.at(i, j, k) != expected) {
                    throw TheoremViolation(
                        "star_product: ideal block is not the forced diagonal product");
                }
            }
        }
    }

    StarResult out;
    out.tensor = StructureTensor(n);
    for (int i = 0; i < n; ++i) {
        const bool i_in = p.in_support(i);
        for (int j = 0; j < n; ++j) {
            const bool j_in = p.in_support(j);
            if (i_in && j_in) {
                const Element prod = multiply(Element::atom(n, i), Element::atom(n, j), a.tensor);
                for (int k = 0; k < n; ++k) out.tensor.at(i, j, k) = prod[k];
            } else if (i_in && !j_in) {
                if (i == alpha_idx) out.tensor.at(i, j, j) = 1 / e[alpha_idx];
            } else if (!i_in && j_in) {
                if (j == beta_idx) out.tensor.at(i, j, i) = 1 / e[beta_idx];
            }
            // both outside the support: product is zero
        }
    }

    verify_product_axioms(out.tensor, e, "star_product");
    out.differs_at = tensor_differences(out.tensor, a.tensor);
    return out;
}

AstResult ast_product(const AlgebraSpec& a, const Functional& phi, const Element& x0) {
    const AxiomReport rep = check_axioms(a);
    const Element e = require_unital_vector_lattice_algebra(rep, "ast_product");
    const BandProjectionPair p = band_projection(e);
    const int n = a.dim();
    if (p.support.size() != 1) {
        throw PreconditionViolated("ast_product: the ideal of the identity is not one-dimensional");
    }
    const int s = p.support[0];
    for (int i = 0; i < n; ++i) {
        if (i == s) continue;
        for (int j = 0; j < n; ++j) {
            if (j == s) continue;
            for (int k = 0; k < n; ++k) {
                if (a.tensor.at(i, j, k) != 0) {
                    throw PreconditionViolated(
                        "ast_product: products on the complement of the ideal are not all zero");
                }
            }
        }
    }
    if (phi.dim() != n || x0.dim() != n) throw DimensionMismatch("ast_product: phi / x0 dimension");
    if (!phi.is_nonnegative()) throw PreconditionViolated("ast_product: phi is not positive");
    if (phi[s] != 0) throw PreconditionViolated("ast_product: phi is not supported on the complement");
    const bool phi_zero = std::all_of(phi.coords.begin(), phi.coords.end(),
                                      [](const Rational& v) { return v == 0; });
    if (phi_zero) throw PreconditionViolated("ast_product: phi is zero");
    if (!x0.is_nonnegative()) throw PreconditionViolated("ast_product: x0 is not positive");
    if (x0[s] != 0) throw PreconditionViolated("ast_product: x0 is not in the complement");
    if (x0.is_zero()) throw PreconditionViolated("ast_product: x0 is zero");

    // x = l e + x' with l = x_s / e_s:
    //   x * y = l m e + l y' + m x' + phi(x') phi(y') x0
    AstResult out;
    out.tensor = StructureTensor(n);
    const Rational inv_es = 1 / e[s];
    out.tensor.at(s, s, s) = inv_es;
    for (int j = 0; j < n; ++j) {
        if (j == s) continue;
        out.tensor.at(s, j, j) = inv_es;
        out.tensor.at(j, s, j) = inv_es;
        for (int i = 0; i < n; ++i) {
            if (i == s) continue;
            for (int k = 0; k < n; ++k) {
                if (x0[k] != 0) out.tensor.at(i, j, k) = phi[i] * phi[j] * x0[k];
            }
        }
    }

    verify_product_axioms(out.tensor, e, "ast_product");
    out.differs_at = tensor_differences(out.tensor, a.tensor);

    int witness_idx = -1;
    for (int i = 0; i < n; ++i) {
        if (i != s && phi[i] != 0) {
            witness_idx = i;
            break;
        }
    }
    out.witness_x = Element::atom(n, witness_idx);
    out.witness_square = multiply(out.witness_x, out.witness_x, out.tensor);
    if (out.witness_square.is_zero() ||
        !multiply(out.witness_x, out.witness_x, a.tensor).is_zero()) {
        throw TheoremViolation("ast_product: non-uniqueness witness failed to verify");
    }
    return out;
}

} // namespace amalg
