#include "amalg/algebra.hpp"

#include "amalg/errors.hpp"
#include "amalg/ratlin.hpp"

#include <algorithm>

namespace amalg {

StructureTensor StructureTensor::kronecker(int n) {
    StructureTensor t(n);
    for (int k = 0; k < n; ++k) t.at(k, k, k) = 1;
    return t;
}

StructureTensor StructureTensor::diagonal(const RatVec& d) {
    StructureTensor t(static_cast<int>(d.size()));
    for (int k = 0; k < t.dim; ++k) t.at(k, k, k) = d[static_cast<std::size_t>(k)];
    return t;
}

bool StructureTensor::is_nonnegative() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v >= 0; });
}

void AlgebraSpec::validate() const {
    if (norm.dim() != tensor.dim) {
        throw ValidationError("algebra spec: norm dimension " + std::to_string(norm.dim()) +
                              " does not match tensor dimension " + std::to_string(tensor.dim));
    }
    for (const Rational& w : norm.weights) {
        if (w <= 0) throw ValidationError("algebra spec: nonpositive norm weight");
    }
}

RatVec BilinearMap::operator()(const RatVec& x, const RatVec& y) const {
    if (static_cast<int>(x.size()) != da || static_cast<int>(y.size()) != db) {
        throw DimensionMismatch("bilinear map evaluation");
    }
    RatVec z(static_cast<std::size_t>(dc), Rational(0));
    for (int i = 0; i < da; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < db; ++j) {
            if (y[static_cast<std::size_t>(j)] == 0) continue;
            const Rational xy = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            for (int k = 0; k < dc; ++k) {
                const Rational& cijk = at(i, j, k);
                if (cijk != 0) z[static_cast<std::size_t>(k)] += xy * cijk;
            }
        }
    }
    return z;
}

BilinearMap as_bilinear(const StructureTensor& t) {
    BilinearMap p(t.dim, t.dim, t.dim);
    p.c = t.c;
    return p;
}

StructureTensor as_tensor(const BilinearMap& p) {
    if (p.da != p.db || p.db != p.dc) throw DimensionMismatch("as_tensor: map is not square");
    StructureTensor t(p.da);
    t.c = p.c;
    return t;
}

Element multiply(const Element& x, const Element& y, const StructureTensor& t) {
    if (x.dim() != t.dim || y.dim() != t.dim) {
        throw DimensionMismatch("multiply: element dimensions do not match the tensor");
    }
    Element z = Element::zero(t.dim);
    for (int i = 0; i < t.dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < t.dim; ++j) {
            if (y[j] == 0) continue;
            const Rational xy = x[i] * y[j];
            for (int k = 0; k < t.dim; ++k) {
                const Rational& cijk = t.at(i, j, k);
                if (cijk != 0) z[k] += xy * cijk;
            }
        }
    }
    return z;
}

std::optional<Element> find_identity(const StructureTensor& t) {
    const int n = t.dim;
    // Unknown e; rows demand e e_j = e_j (left) and e_j e = e_j (right).
    RatMat a;
    RatVec b;
    a.reserve(static_cast<std::size_t>(2) * n * n);
    for (int j = 0; j < n; ++j) {
        for (int m = 0; m < n; ++m) {
            RatVec left(static_cast<std::size_t>(n), Rational(0));
            RatVec right(static_cast<std::size_t>(n), Rational(0));
            for (int i = 0; i < n; ++i) {
                left[static_cast<std::size_t>(i)] = t.at(i, j, m);
                right[static_cast<std::size_t>(i)] = t.at(j, i, m);
            }
            const Rational delta = (j == m) ? 1 : 0;
            a.push_back(std::move(left));
            b.push_back(delta);
            a.push_back(std::move(right));
            b.push_back(delta);
        }
    }
    const auto solution = solve_linear(a, b);
    if (!solution) return std::nullopt;
    Element e(*solution);
    // Re-verify on atoms; a consistent system can only have this one
    // solution (e = e e' = e' for any two two-sided identities).
    for (int j = 0; j < n; ++j) {
        const Element ej = Element::atom(n, j);
        if (multiply(e, ej, t) != ej || multiply(ej, e, t) != ej) {
            throw TheoremViolation("find_identity: solved system does not verify");
        }
    }
    return e;
}

namespace {

DisjointnessWitness make_disjointness_witness(const StructureTensor& t, int i, int j, int k) {
    // c[i][j][k] != 0 with not(i = j = k). Instantiate the violated axiom
    // with atoms: either (e_i e_j) ^ e_k != 0 against the disjoint pair
    // (e_j, e_k), or, when j = k, the mirrored product (e_i e_j) ^ e_j with
    // the disjoint pair (e_i, e_j).
    DisjointnessWitness w;
    w.entry = {i, j, k};
    const int n = t.dim;
    if (j != k) {
        w.h = Element::atom(n, i);
        w.f = Element::atom(n, j);
        w.g = Element::atom(n, k);
        w.left = true; // inf(h f, g) != 0
    } else {
        w.h = Element::atom(n, j);
        w.f = Element::atom(n, i);
        w.g = Element::atom(n, j);
        w.left = false; // inf(f h, g) != 0
    }
    return w;
}

} // namespace

FAlgebraClass classify_f_algebra(const StructureTensor& t) {
    if (!t.is_nonnegative()) {
        throw NotPositiveProduct("classify_f_algebra needs a positive product");
    }
    FAlgebraClass out;
    out.f_algebra = true;
    out.almost_f_algebra = true;
    for (int i = 0; i < t.dim && (out.f_algebra || out.almost_f_algebra); ++i) {
        for (int j = 0; j < t.dim; ++j) {
            for (int k = 0; k < t.dim; ++k) {
                if (t.at(i, j, k) == 0) continue;
                if (out.f_algebra && !(i == j && j == k)) {
                    out.f_algebra = false;
                    out.f_witness = make_disjointness_witness(t, i, j, k);
                }
                if (out.almost_f_algebra && i != j) {
                    out.almost_f_algebra = false;
                    DisjointnessWitness w;
                    w.entry = {i, j, k};
                    w.f = Element::atom(t.dim, i);
                    w.g = Element::atom(t.dim, j);
                    out.almost_f_witness = w;
                }
            }
        }
    }
    return out;
}

AxiomReport check_axioms(const AlgebraSpec& a) {
    a.validate();
    const StructureTensor& t = a.tensor;
    const int n = t.dim;
    AxiomReport rep;

    rep.positive_product = true;
    for (int i = 0; i < n && rep.positive_product; ++i) {
        for (int j = 0; j < n && rep.positive_product; ++j) {
            for (int k = 0; k < n; ++k) {
                if (t.at(i, j, k) < 0) {
                    rep.positive_product = false;
                    rep.positivity_witness = {{i, j, k}};
                    break;
                }
            }
        }
    }

    // Associativity via the structure-constant contraction
    // sum_k c[i][j][k] c[k][l][m] = sum_k c[j][l][k] c[i][k][m].
    rep.associative = true;
    for (int i = 0; i < n && rep.associative; ++i) {
        for (int j = 0; j < n && rep.associative; ++j) {
            for (int l = 0; l < n && rep.associative; ++l) {
                for (int m = 0; m < n; ++m) {
                    Rational lhs(0), rhs(0);
                    for (int k = 0; k < n; ++k) {
                        lhs += t.at(i, j, k) * t.at(k, l, m);
                        rhs += t.at(j, l, k) * t.at(i, k, m);
                    }
                    if (lhs != rhs) {
                        rep.associative = false;
                        rep.associativity_witness = {{i, j, l}};
                        break;
                    }
                }
            }
        }
    }

    // Submultiplicativity at the extreme points of the positive unit ball.
    rep.submultiplicative = true;
    if (a.norm.kind == NormKind::weighted_sup) {
        Element u = Element::zero(n);
        for (int k = 0; k < n; ++k) u[k] = 1 / a.norm.weights[static_cast<std::size_t>(k)];
        const Element uu = multiply(u, u, t);
        if (norm(uu, a.norm) > 1) {
            rep.submultiplicative = false;
            rep.submult_witness = SubmultWitness{u, u, norm(uu, a.norm)};
        }
    } else {
        for (int i = 0; i < n && rep.submultiplicative; ++i) {
            for (int j = 0; j < n; ++j) {
                const Element xi = Element::atom(n, i, 1 / a.norm.weights[static_cast<std::size_t>(i)]);
                const Element yj = Element::atom(n, j, 1 / a.norm.weights[static_cast<std::size_t>(j)]);
                const Rational p = norm(multiply(xi, yj, t), a.norm);
                if (p > 1) {
                    rep.submultiplicative = false;
                    rep.submult_witness = SubmultWitness{xi, yj, p};
                    break;
                }
            }
        }
    }

    rep.identity = find_identity(t);
    rep.identity_norm_one = rep.identity && norm(*rep.identity, a.norm) == 1;

    if (rep.positive_product) {
        const FAlgebraClass cls = classify_f_algebra(t);
        rep.f_algebra = cls.f_algebra;
        rep.almost_f_algebra = cls.almost_f_algebra;
        rep.f_witness = cls.f_witness;
        rep.almost_f_witness = cls.almost_f_witness;
    }
    return rep;
}

BilinearMap arens_adjoint(const BilinearMap& p) {
    BilinearMap q(p.dc, p.da, p.db);
    // q(phi, a)(b) = phi(p(a, b)), evaluated on dual atoms phi = delta_k
    // and basis vectors a = e_i, b = e_j.
    for (int i = 0; i < p.da; ++i) {
        RatVec ei(static_cast<std::size_t>(p.da), Rational(0));
        ei[static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < p.db; ++j) {
            RatVec ej(static_cast<std::size_t>(p.db), Rational(0));
            ej[static_cast<std::size_t>(j)] = 1;
            const RatVec value = p(ei, ej);
            for (int k = 0; k < p.dc; ++k) {
                q.at(k, i, j) = value[static_cast<std::size_t>(k)];
            }
        }
    }
    return q;
}

BilinearMap transpose(const BilinearMap& p) {
    if (p.da != p.db) throw DimensionMismatch("transpose: map is not square");
    BilinearMap q(p.db, p.da, p.dc);
    for (int i = 0; i < p.da; ++i) {
        for (int j = 0; j < p.db; ++j) {
            for (int k = 0; k < p.dc; ++k) q.at(j, i, k) = p.at(i, j, k);
        }
    }
    return q;
}

ArensProducts arens_products(const StructureTensor& t) {
    const BilinearMap p = as_bilinear(t);
    const BilinearMap first = arens_adjoint(arens_adjoint(arens_adjoint(p)));
    const BilinearMap second =
        transpose(arens_adjoint(arens_adjoint(arens_adjoint(transpose(p)))));
    ArensProducts out;
    out.first = as_tensor(first);
    out.second = as_tensor(second);
    out.regular = (out.first == out.second);
    return out;
}

} // namespace amalg
