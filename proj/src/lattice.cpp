#include "amalg/lattice.hpp"

#include "amalg/errors.hpp"

#include <algorithm>

namespace amalg {

namespace {

void require_same_dim(int a, int b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a) +
                                " and " + std::to_string(b) + " differ");
    }
}

} // namespace

Element Element::atom(int dim, int k, const Rational& value) {
    Element e = zero(dim);
    e[k] = value;
    return e;
}

bool Element::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

bool Element::is_nonnegative() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c >= 0; });
}

Element operator+(const Element& x, const Element& y) {
    require_same_dim(x.dim(), y.dim(), "element sum");
    Element z = x;
    for (int k = 0; k < z.dim(); ++k) z[k] += y[k];
    return z;
}

Element operator-(const Element& x, const Element& y) {
    require_same_dim(x.dim(), y.dim(), "element difference");
    Element z = x;
    for (int k = 0; k < z.dim(); ++k) z[k] -= y[k];
    return z;
}

Element operator-(const Element& x) {
    Element z = x;
    for (int k = 0; k < z.dim(); ++k) z[k] = -z[k];
    return z;
}

Element operator*(const Rational& a, const Element& x) {
    Element z = x;
    for (int k = 0; k < z.dim(); ++k) z[k] *= a;
    return z;
}

NormSpec::NormSpec(NormKind k, RatVec w) : kind(k), weights(std::move(w)) {
    for (const Rational& wk : weights) {
        if (wk <= 0) throw ValidationError("norm weights must be strictly positive");
    }
}

Functional Functional::atom(int dim, int k, const Rational& value) {
    RatVec c(static_cast<std::size_t>(dim), Rational(0));
    c[static_cast<std::size_t>(k)] = value;
    return Functional(std::move(c));
}

Rational Functional::operator()(const Element& x) const {
    require_same_dim(dim(), x.dim(), "pairing");
    Rational acc(0);
    for (int k = 0; k < dim(); ++k) acc += coords[static_cast<std::size_t>(k)] * x[k];
    return acc;
}

bool Functional::is_nonnegative() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c >= 0; });
}

Element lattice_combine(const Element& x, const Element& y, LatticeOp op) {
    if (op == LatticeOp::sup || op == LatticeOp::inf) {
        require_same_dim(x.dim(), y.dim(), "lattice_combine");
    }
    Element z = Element::zero(x.dim());
    for (int k = 0; k < x.dim(); ++k) {
        switch (op) {
        case LatticeOp::sup: z[k] = std::max(x[k], y[k]); break;
        case LatticeOp::inf: z[k] = std::min(x[k], y[k]); break;
        case LatticeOp::abs: z[k] = ::abs(x[k]); break;
        case LatticeOp::pos: z[k] = std::max(x[k], Rational(0)); break;
        case LatticeOp::neg: z[k] = std::max(Rational(-x[k]), Rational(0)); break;
        }
    }
    return z;
}

Element sup(const Element& x, const Element& y) { return lattice_combine(x, y, LatticeOp::sup); }
Element inf(const Element& x, const Element& y) { return lattice_combine(x, y, LatticeOp::inf); }
Element abs(const Element& x) { return lattice_combine(x, x, LatticeOp::abs); }
Element pos(const Element& x) { return lattice_combine(x, x, LatticeOp::pos); }
Element neg(const Element& x) { return lattice_combine(x, x, LatticeOp::neg); }

Rational norm(const Element& x, const NormSpec& n) {
    require_same_dim(x.dim(), n.dim(), "norm");
    Rational acc(0);
    for (int k = 0; k < x.dim(); ++k) {
        const Rational term = n.weights[static_cast<std::size_t>(k)] * ::abs(x[k]);
        if (n.kind == NormKind::weighted_sup) {
            acc = std::max(acc, term);
        } else {
            acc += term;
        }
    }
    return acc;
}

Rational dual_norm(const Functional& f, const NormSpec& n) {
    require_same_dim(f.dim(), n.dim(), "dual_norm");
    Rational acc(0);
    for (int k = 0; k < f.dim(); ++k) {
        const Rational term = ::abs(f[k]) / n.weights[static_cast<std::size_t>(k)];
        if (n.kind == NormKind::weighted_sup) {
            acc += term; // dual of sup is l1 with inverted weights
        } else {
            acc = std::max(acc, term);
        }
    }
    return acc;
}

AmNormVerdict is_am_norm(const NormSpec& n) {
    if (n.kind == NormKind::weighted_sup || n.dim() <= 1) return {true, std::nullopt};
    // Any two distinct atoms violate the identity under an l1 norm:
    // ||e_1 v e_2|| = w_1 + w_2 > max(w_1, w_2).
    return {false, std::make_pair(Element::atom(n.dim(), 0), Element::atom(n.dim(), 1))};
}

std::optional<Element> order_unit_of_ball(const NormSpec& n) {
    if (n.kind == NormKind::weighted_l1 && n.dim() >= 2) return std::nullopt;
    Element e = Element::zero(n.dim());
    for (int k = 0; k < n.dim(); ++k) e[k] = 1 / n.weights[static_cast<std::size_t>(k)];
    return e;
}

bool verify_unit_duality(const NormSpec& n, const Element& e,
                         const std::vector<Functional>& samples) {
    require_same_dim(e.dim(), n.dim(), "verify_unit_duality");
    if (!e.is_nonnegative()) throw NotPositive("candidate order unit has a negative coordinate");

    std::vector<Functional> checks;
    checks.reserve(samples.size() + static_cast<std::size_t>(n.dim()) + 1);
    for (int k = 0; k < n.dim(); ++k) checks.push_back(Functional::atom(n.dim(), k));
    checks.push_back(Functional(RatVec(static_cast<std::size_t>(n.dim()), Rational(1))));
    for (const Functional& f : samples) {
        require_same_dim(f.dim(), n.dim(), "verify_unit_duality sample");
        if (!f.is_nonnegative()) throw NotPositive("sampled functional has a negative coordinate");
        checks.push_back(f);
    }
    for (const Functional& f : checks) {
        if (f(e) != dual_norm(f, n)) return false;
    }
    return true;
}

bool BandProjectionPair::in_support(int k) const {
    return std::binary_search(support.begin(), support.end(), k);
}

Element BandProjectionPair::apply(const Element& x) const {
    require_same_dim(x.dim(), dim, "band projection");
    Element z = Element::zero(dim);
    for (int k : support) z[k] = x[k];
    return z;
}

Element BandProjectionPair::apply_complement(const Element& x) const {
    require_same_dim(x.dim(), dim, "band projection");
    Element z = x;
    for (int k : support) z[k] = 0;
    return z;
}

BandProjectionPair band_projection(const Element& e) {
    BandProjectionPair p;
    p.dim = e.dim();
    for (int k = 0; k < e.dim(); ++k) {
        if (e[k] < 0) throw NotPositive("band_projection needs a positive element");
        if (e[k] > 0) p.support.push_back(k);
    }
    return p;
}

} // namespace amalg
