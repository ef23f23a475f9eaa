#pragma once

#include "amalg/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace amalg {

// Finite-dimensional Archimedean vector lattices in an atom basis with
// coordinatewise order. All operations are pure and exact.

struct Element {
    RatVec coords;

    Element() = default;
    explicit Element(RatVec c) : coords(std::move(c)) {}
    Element(std::initializer_list<Rational> c) : coords(c) {}

    int dim() const { return static_cast<int>(coords.size()); }
    const Rational& operator[](int k) const { return coords[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return coords[static_cast<std::size_t>(k)]; }

    static Element zero(int dim) { return Element(RatVec(static_cast<std::size_t>(dim), Rational(0))); }
    static Element atom(int dim, int k, const Rational& value = Rational(1));

    bool is_zero() const;
    bool is_nonnegative() const;

    friend bool operator==(const Element&, const Element&) = default;
};

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator-(const Element& x);
Element operator*(const Rational& a, const Element& x);

enum class LatticeOp { sup, inf, abs, pos, neg };

enum class NormKind { weighted_sup, weighted_l1 };

// A lattice norm given by strictly positive weights: either
// max_k w_k |x_k| or sum_k w_k |x_k|. These two kinds keep every unit-ball
// extreme-point computation finite and exact.
struct NormSpec {
    NormKind kind = NormKind::weighted_sup;
    RatVec weights;

    NormSpec() = default;
    NormSpec(NormKind k, RatVec w);

    int dim() const { return static_cast<int>(weights.size()); }

    static NormSpec sup(RatVec w) { return NormSpec(NormKind::weighted_sup, std::move(w)); }
    static NormSpec l1(RatVec w) { return NormSpec(NormKind::weighted_l1, std::move(w)); }
    static NormSpec sup_ones(int dim) { return sup(RatVec(static_cast<std::size_t>(dim), Rational(1))); }
    static NormSpec l1_ones(int dim) { return l1(RatVec(static_cast<std::size_t>(dim), Rational(1))); }

    friend bool operator==(const NormSpec&, const NormSpec&) = default;
};

// Coordinate pairing f(x) = sum_k f_k x_k. Finite-dimensional duality is
// coordinate duality, so functionals share the coordinate representation.
struct Functional {
    RatVec coords;

    Functional() = default;
    explicit Functional(RatVec c) : coords(std::move(c)) {}
    Functional(std::initializer_list<Rational> c) : coords(c) {}

    int dim() const { return static_cast<int>(coords.size()); }
    const Rational& operator[](int k) const { return coords[static_cast<std::size_t>(k)]; }

    static Functional atom(int dim, int k, const Rational& value = Rational(1));

    Rational operator()(const Element& x) const;
    bool is_nonnegative() const;

    friend bool operator==(const Functional&, const Functional&) = default;
};

// Coordinate projection onto the support of a positive element together
// with its disjoint complement. P + Pd = id, P Pd = 0, and range(P) is the
// ideal {x : |x| <= lambda e}.
struct BandProjectionPair {
    int dim = 0;
    std::vector<int> support; // sorted ascending

    bool in_support(int k) const;
    Element apply(const Element& x) const;            // P
    Element apply_complement(const Element& x) const; // Pd
};

Element lattice_combine(const Element& x, const Element& y, LatticeOp op);

// Binary/unary shorthands over lattice_combine.
Element sup(const Element& x, const Element& y);
Element inf(const Element& x, const Element& y);
Element abs(const Element& x);
Element pos(const Element& x);
Element neg(const Element& x);

Rational norm(const Element& x, const NormSpec& n);

// Dual norm by coordinate duality: the dual of weighted_sup(w) is
// weighted_l1(1/w) and vice versa.
Rational dual_norm(const Functional& f, const NormSpec& n);

struct AmNormVerdict {
    bool am = false;
    // positive pair violating ||x v y|| = ||x|| v ||y|| when am is false
    std::optional<std::pair<Element, Element>> witness;
};

// ||x v y|| = max(||x||, ||y||) on positive elements: true for every
// weighted_sup norm, and for weighted_l1 only in dimension one.
AmNormVerdict is_am_norm(const NormSpec& n);

// The positive e with [-e, e] equal to the unit ball, when one exists.
std::optional<Element> order_unit_of_ball(const NormSpec& n);

// Checks f(e) = ||f||* exactly for every coordinate atom functional, for
// their sum, and for each caller-provided positive functional. This is the
// norming-order-unit property of e.
bool verify_unit_duality(const NormSpec& n, const Element& e,
                         const std::vector<Functional>& samples);

BandProjectionPair band_projection(const Element& e);

} // namespace amalg
