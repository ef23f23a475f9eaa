#pragma once

#include "amalg/lattice.hpp"
#include "amalg/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace amalg {

// Structure constants of a bilinear product: e_i e_j = sum_k c[i][j][k] e_k.
// Dense storage; desk-scale dimensions.
struct StructureTensor {
    int dim = 0;
    RatVec c; // dim^3, index (i*dim + j)*dim + k

    StructureTensor() = default;
    explicit StructureTensor(int n)
        : dim(n), c(static_cast<std::size_t>(n) * n * n, Rational(0)) {}

    const Rational& at(int i, int j, int k) const {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    Rational& at(int i, int j, int k) {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }

    static StructureTensor kronecker(int n);
    // c[k][k][k] = d_k, everything else zero
    static StructureTensor diagonal(const RatVec& d);

    bool is_nonnegative() const;

    friend bool operator==(const StructureTensor&, const StructureTensor&) = default;
};

struct AlgebraSpec {
    NormSpec norm;
    StructureTensor tensor;
    std::string label;

    int dim() const { return norm.dim(); }
    void validate() const; // dims agree, weights positive
};

// General bounded bilinear map P: A x B -> C in coordinates.
struct BilinearMap {
    int da = 0, db = 0, dc = 0;
    RatVec c; // index (i*db + j)*dc + k

    BilinearMap() = default;
    BilinearMap(int a, int b, int cdim)
        : da(a), db(b), dc(cdim),
          c(static_cast<std::size_t>(a) * b * cdim, Rational(0)) {}

    const Rational& at(int i, int j, int k) const {
        return c[(static_cast<std::size_t>(i) * db + j) * dc + k];
    }
    Rational& at(int i, int j, int k) {
        return c[(static_cast<std::size_t>(i) * db + j) * dc + k];
    }

    // Evaluation on concrete coordinate vectors.
    RatVec operator()(const RatVec& x, const RatVec& y) const;

    friend bool operator==(const BilinearMap&, const BilinearMap&) = default;
};

BilinearMap as_bilinear(const StructureTensor& t);
StructureTensor as_tensor(const BilinearMap& p); // requires da == db == dc

Element multiply(const Element& x, const Element& y, const StructureTensor& t);

// The unique two-sided identity when the linear system e e_j = e_j = e_j e
// is solvable. Two-sided identities are automatically unique.
std::optional<Element> find_identity(const StructureTensor& t);

// Witness for a failed disjointness axiom: the offending tensor entry
// (i,j,k) plus concrete atoms with inf(f, g) = 0. For the f-algebra axiom
// the violation is inf(h f, g) != 0 (left) or inf(f h, g) != 0 with h >= 0;
// for the almost-f axiom it is multiply(f, g) != 0 itself and h is unused.
struct DisjointnessWitness {
    std::array<int, 3> entry{};
    Element h, f, g;
    bool left = true;
};

struct SubmultWitness {
    Element x, y;
    Rational product_norm; // ||x y|| with ||x|| = ||y|| = 1
};

// One pass over the whole axiom battery. Never throws on well-shaped
// input; every false flag carries a witness reproducible by re-evaluation.
struct AxiomReport {
    bool positive_product = false;
    std::optional<std::array<int, 3>> positivity_witness;

    bool associative = false;
    std::optional<std::array<int, 3>> associativity_witness; // basis triple (i,j,l)

    // Checked at unit-ball extreme points; the reduction to extreme points
    // presumes a positive product (positive bilinear maps are monotone on
    // positives and satisfy |P(x,y)| <= P(|x|,|y|)).
    bool submultiplicative = false;
    std::optional<SubmultWitness> submult_witness;

    std::optional<Element> identity;
    bool identity_norm_one = false;

    // Only populated when positive_product holds (the classification is
    // defined on positive products).
    std::optional<bool> f_algebra;
    std::optional<bool> almost_f_algebra;
    std::optional<DisjointnessWitness> f_witness;
    std::optional<DisjointnessWitness> almost_f_witness;
};

AxiomReport check_axioms(const AlgebraSpec& a);

struct FAlgebraClass {
    bool f_algebra = false;
    std::optional<DisjointnessWitness> f_witness;
    bool almost_f_algebra = false;
    std::optional<DisjointnessWitness> almost_f_witness;
};

// Atom-level criteria: f-algebra iff the tensor is diagonal
// (c[i][j][k] = 0 unless i = j = k), almost f-algebra iff e_i e_j = 0 for
// all i != j. Supports of disjoint elements are disjoint index sets, which
// reduces the elementwise definitions to these tensor conditions; the test
// suite cross-checks the reduction against brute-force atom oracles.
FAlgebraClass classify_f_algebra(const StructureTensor& t);

// Arens adjoint P*: C* x A -> B*, P*(phi, a)(b) = phi(P(a, b)), with dual
// spaces identified coordinatewise. Computed by evaluating the definition
// on basis triples.
BilinearMap arens_adjoint(const BilinearMap& p);

// P^t(b, a) = P(a, b); square maps only.
BilinearMap transpose(const BilinearMap& p);

struct ArensProducts {
    StructureTensor first;  // P***
    StructureTensor second; // P^{t***t}
    bool regular = false;
};

// Both extensions computed mechanically by three adjoints (plus the two
// transposes for the second product), never by an index shortcut. In
// finite dimensions both must reproduce the original tensor.
ArensProducts arens_products(const StructureTensor& t);

} // namespace amalg
