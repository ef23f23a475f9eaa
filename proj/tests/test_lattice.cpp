#include "amalg/lattice.hpp"

#include "amalg/errors.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace amalg;
using testsupport::Gen;

namespace {

Rational R(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Signed extreme points of the unit ball, used as the independent oracle
// for the dual norm: every coordinate sign pattern of (1/w_k) for sup,
// the signed scaled atoms for l1.
std::vector<Element> ball_extreme_points(const NormSpec& n) {
    std::vector<Element> points;
    if (n.kind == NormKind::weighted_sup) {
        const int count = 1 << n.dim();
        for (int mask = 0; mask < count; ++mask) {
            Element x = Element::zero(n.dim());
            for (int k = 0; k < n.dim(); ++k) {
                x[k] = ((mask >> k) & 1 ? Rational(1) : Rational(-1)) /
                       n.weights[static_cast<std::size_t>(k)];
            }
            points.push_back(std::move(x));
        }
    } else {
        for (int k = 0; k < n.dim(); ++k) {
            points.push_back(Element::atom(n.dim(), k, 1 / n.weights[static_cast<std::size_t>(k)]));
            points.push_back(Element::atom(n.dim(), k, -1 / n.weights[static_cast<std::size_t>(k)]));
        }
    }
    return points;
}

Rational oracle_dual_norm(const Functional& f, const NormSpec& n) {
    Rational best(0);
    for (const Element& x : ball_extreme_points(n)) best = std::max(best, f(x));
    return best;
}

} // namespace

TEST_CASE("lattice_combine on coordinates") {
    const Element x{R(1), R(-2)};
    const Element y{R(0), R(3)};
    CHECK(sup(x, y) == Element{R(1), R(3)});
    CHECK(abs(Element{R(-1), R(2)}) == Element{R(1), R(2)});
    CHECK(inf(x, x) == x);
    CHECK_THROWS_AS(sup(x, Element{R(1)}), DimensionMismatch);
}

TEST_CASE("lattice identities on random elements") {
    Gen gen(101);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = static_cast<int>(gen.integer(1, 7));
        const Element x = gen.element(dim);
        const Element y = gen.element(dim);
        CHECK(x == pos(x) - neg(x));
        CHECK(abs(x) == sup(x, -x));
        CHECK(sup(x, y) + inf(x, y) == x + y);
    }
}

TEST_CASE("norms: examples") {
    CHECK(norm(Element{R(3), R(-4)}, NormSpec::sup_ones(2)) == R(4));
    CHECK(norm(Element{R(3), R(-4)}, NormSpec::l1({R(1), R(2)})) == R(11));
    CHECK(norm(Element::zero(3), NormSpec::l1_ones(3)) == R(0));
    CHECK_THROWS_AS(norm(Element::zero(2), NormSpec::sup_ones(3)), DimensionMismatch);
}

TEST_CASE("norm axioms and lattice monotonicity, random") {
    Gen gen(102);
    for (int trial = 0; trial < 150; ++trial) {
        const int dim = static_cast<int>(gen.integer(1, 6));
        const NormSpec n = gen.norm_spec(dim);
        const Element x = gen.element(dim);
        const Element y = gen.element(dim);
        const Rational a = gen.rational();
        CHECK(norm(a * x, n) == Rational(::abs(a)) * norm(x, n));
        CHECK(norm(x + y, n) <= norm(x, n) + norm(y, n));
        // |x| <= |x| + |y| pointwise, so monotonicity is exercised on a pair
        const Element bigger = abs(x) + abs(y);
        CHECK(norm(x, n) <= norm(bigger, n));
        CHECK((norm(x, n) == 0) == x.is_zero());
    }
}

TEST_CASE("dual norm matches the extreme-point oracle") {
    CHECK(dual_norm(Functional{R(1), R(1)}, NormSpec::sup_ones(2)) == R(2));
    CHECK(dual_norm(Functional{R(0), R(5)}, NormSpec::sup({R(1), R(2)})) == R(5, 2));
    CHECK(dual_norm(Functional{R(0), R(0)}, NormSpec::l1_ones(2)) == R(0));

    Gen gen(103);
    for (int trial = 0; trial < 100; ++trial) {
        const int dim = static_cast<int>(gen.integer(1, 5));
        const NormSpec n = gen.norm_spec(dim);
        const Functional f = gen.functional(dim);
        CHECK(dual_norm(f, n) == oracle_dual_norm(f, n));
    }
}

TEST_CASE("AM property of the norm kinds") {
    CHECK(is_am_norm(NormSpec::sup({R(2), R(1, 3)})).am);
    CHECK(is_am_norm(NormSpec::l1({R(7)})).am);

    const AmNormVerdict verdict = is_am_norm(NormSpec::l1_ones(2));
    REQUIRE_FALSE(verdict.am);
    REQUIRE(verdict.witness.has_value());
    const auto& [x, y] = *verdict.witness;
    const NormSpec n = NormSpec::l1_ones(2);
    CHECK(norm(sup(x, y), n) != std::max(norm(x, n), norm(y, n)));

    // the identity holds for all positive pairs under every sup norm
    Gen gen(104);
    for (int trial = 0; trial < 150; ++trial) {
        const int dim = static_cast<int>(gen.integer(1, 6));
        RatVec w;
        for (int k = 0; k < dim; ++k) w.push_back(gen.positive_rational());
        const NormSpec n2 = NormSpec::sup(w);
        const Element x = gen.positive_element(dim);
        const Element y = gen.positive_element(dim);
        CHECK(norm(sup(x, y), n2) == std::max(norm(x, n2), norm(y, n2)));
    }
}

TEST_CASE("order unit of the ball") {
    CHECK(*order_unit_of_ball(NormSpec::sup_ones(2)) == Element{R(1), R(1)});
    const Element e = *order_unit_of_ball(NormSpec::sup({R(2), R(1, 3)}));
    CHECK(e == Element{R(1, 2), R(3)});
    CHECK_FALSE(order_unit_of_ball(NormSpec::l1_ones(2)).has_value());

    // [-e, e] = ball on extreme points: corners of the box have norm one
    const NormSpec n = NormSpec::sup({R(2), R(1, 3)});
    for (const Element& x : ball_extreme_points(n)) {
        CHECK(norm(x, n) == 1);
        CHECK(inf(x, e) == x);     // x <= e
        CHECK(sup(x, -e) == x);    // -e <= x
    }
}

TEST_CASE("unit duality") {
    CHECK(verify_unit_duality(NormSpec::sup_ones(2), Element{R(1), R(1)},
                              {Functional{R(2), R(3)}}));
    // f(e) = 5 = dual norm for the sample above
    CHECK(Functional{R(2), R(3)}(Element{R(1), R(1)}) == R(5));

    const NormSpec weighted = NormSpec::sup({R(2), R(1)});
    const Element e{R(1, 2), R(1)};
    CHECK(verify_unit_duality(weighted, e, {}));
    CHECK(Functional::atom(2, 1)(e) == dual_norm(Functional::atom(2, 1), weighted));

    // no norming order unit exists for l1 in dimension >= 2
    const NormSpec l1 = NormSpec::l1_ones(2);
    for (const Element& candidate :
         {Element{R(1), R(1)}, Element{R(1), R(0)}, Element{R(1, 2), R(1, 2)}}) {
        CHECK_FALSE(verify_unit_duality(l1, candidate, {}));
    }
    CHECK_THROWS_AS(verify_unit_duality(l1, Element{R(-1), R(0)}, {}), NotPositive);
}

TEST_CASE("order_unit_of_ball always passes verify_unit_duality") {
    Gen gen(105);
    for (int trial = 0; trial < 100; ++trial) {
        const int dim = static_cast<int>(gen.integer(1, 6));
        const NormSpec n = gen.norm_spec(dim);
        const auto e = order_unit_of_ball(n);
        if (!e) continue;
        std::vector<Functional> samples;
        for (int s = 0; s < 4; ++s) samples.push_back(gen.positive_functional(dim));
        CHECK(verify_unit_duality(n, *e, samples));
    }
}

TEST_CASE("band projections") {
    const BandProjectionPair p = band_projection(Element{R(0), R(0), R(1)});
    CHECK(p.support == std::vector<int>{2});
    CHECK(p.apply(Element{R(5), R(7), R(9)}) == Element{R(0), R(0), R(9)});

    const BandProjectionPair full = band_projection(Element{R(1), R(1)});
    CHECK(full.apply(Element{R(4), R(-2)}) == Element{R(4), R(-2)});
    CHECK(full.apply_complement(Element{R(4), R(-2)}) == Element::zero(2));

    const BandProjectionPair none = band_projection(Element::zero(2));
    CHECK(none.support.empty());
    CHECK(none.apply(Element{R(4), R(-2)}) == Element::zero(2));

    CHECK_THROWS_AS(band_projection(Element{R(-1)}), NotPositive);

    Gen gen(106);
    for (int trial = 0; trial < 100; ++trial) {
        const int dim = static_cast<int>(gen.integer(1, 6));
        const Element e = gen.positive_element(dim);
        const BandProjectionPair proj = band_projection(e);
        const Element x = gen.element(dim);
        CHECK(proj.apply(proj.apply(x)) == proj.apply(x));
        CHECK(proj.apply(x) + proj.apply_complement(x) == x);
        // range(P) = ideal of e: P x is dominated by a multiple of e, and
        // anything dominated by a multiple of e is fixed by P
        Rational lambda(0);
        for (int k : proj.support) lambda = std::max(lambda, Rational(::abs(x[k]) / e[k]));
        CHECK(inf(abs(proj.apply(x)), lambda * e) == abs(proj.apply(x)));
    }
}
