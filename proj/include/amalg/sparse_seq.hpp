#pragma once

#include "amalg/rational.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace amalg {

// Finitely supported sequences over positive integer indices, with sup
// norm and coordinatewise order and product: a genuinely non-unital model
// where approximate units converge eventually-exactly, keeping the whole
// module tolerance-free.

struct SparseSeq {
    std::map<long, Rational> entries; // index >= 1, no stored zeros

    SparseSeq() = default;
    explicit SparseSeq(std::map<long, Rational> e);

    bool is_zero() const { return entries.empty(); }
    bool is_nonnegative() const;
    long max_support_index() const; // 0 for the zero sequence
    Rational at(long i) const;

    friend bool operator==(const SparseSeq&, const SparseSeq&) = default;
};

struct SparseFunctional {
    std::map<long, Rational> entries;

    SparseFunctional() = default;
    explicit SparseFunctional(std::map<long, Rational> e);

    bool is_nonnegative() const;
    long max_support_index() const;
    Rational pairing(const SparseSeq& x) const;
    Rational norm() const; // sum |f_i|, the l1 dual of sup

    friend bool operator==(const SparseFunctional&, const SparseFunctional&) = default;
};

// e_n = e_1 + ... + e_n, the canonical approximate unit.
struct UnitPrefix {
    long n = 1;
    SparseSeq realize() const;
};

enum class SeqOp { sup, inf, add, mul, sub };

SparseSeq seq_ops(const SparseSeq& x, const SparseSeq& y, SeqOp op);
Rational seq_norm(const SparseSeq& x);

// Least N with pairing(f, e_n) = ||f|| for all n >= N; equals the top
// support index of f. Throws NotPositive for functionals with negative
// entries.
long approx_order_unit_witness(const SparseFunctional& f);

// Least N with e_n x = x for all n >= N; the top support index of x.
long approx_algebraic_identity_witness(const SparseSeq& x);

// For samples (x, y, h) with inf(x, y) = 0 and h >= 0, checks
// inf(h x, y) = 0 exactly. Throws PreconditionViolated on a non-disjoint
// pair, NotPositive on a negative h.
bool verify_f_algebra_sparse(
    const std::vector<std::tuple<SparseSeq, SparseSeq, SparseSeq>>& samples);

} // namespace amalg
