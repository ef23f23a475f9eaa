#include "amalg/sparse_seq.hpp"

#include "amalg/errors.hpp"

#include <algorithm>
#include <set>

namespace amalg {

namespace {

void strip_zeros(std::map<long, Rational>& entries) {
    for (auto it = entries.begin(); it != entries.end();) {
        if (it->first < 1) throw ValidationError("sparse sequence: indices start at 1");
        if (it->second == 0) {
            it = entries.erase(it);
        } else {
            ++it;
        }
    }
}

std::set<long> united_support(const std::map<long, Rational>& a, const std::map<long, Rational>& b) {
    std::set<long> keys;
    for (const auto& [i, v] : a) keys.insert(i);
    for (const auto& [i, v] : b) keys.insert(i);
    return keys;
}

} // namespace

SparseSeq::SparseSeq(std::map<long, Rational> e) : entries(std::move(e)) {
    strip_zeros(entries);
}

bool SparseSeq::is_nonnegative() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const auto& kv) { return kv.second >= 0; });
}

long SparseSeq::max_support_index() const {
    return entries.empty() ? 0 : entries.rbegin()->first;
}

Rational SparseSeq::at(long i) const {
    const auto it = entries.find(i);
    return it == entries.end() ? Rational(0) : it->second;
}

SparseFunctional::SparseFunctional(std::map<long, Rational> e) : entries(std::move(e)) {
    strip_zeros(entries);
}

bool SparseFunctional::is_nonnegative() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const auto& kv) { return kv.second >= 0; });
}

long SparseFunctional::max_support_index() const {
    return entries.empty() ? 0 : entries.rbegin()->first;
}

Rational SparseFunctional::pairing(const SparseSeq& x) const {
    Rational acc(0);
    for (const auto& [i, fi] : entries) acc += fi * x.at(i);
    return acc;
}

Rational SparseFunctional::norm() const {
    Rational acc(0);
    for (const auto& [i, fi] : entries) acc += ::abs(fi);
    return acc;
}

SparseSeq UnitPrefix::realize() const {
    if (n < 1) throw BadParameter("unit prefix index must be >= 1");
    std::map<long, Rational> e;
    for (long i = 1; i <= n; ++i) e[i] = 1;
    return SparseSeq(std::move(e));
}

SparseSeq seq_ops(const SparseSeq& x, const SparseSeq& y, SeqOp op) {
    std::map<long, Rational> out;
    if (op == SeqOp::mul) {
        for (const auto& [i, xi] : x.entries) {
            const Rational yi = y.at(i);
            if (yi != 0) out[i] = xi * yi;
        }
        return SparseSeq(std::move(out));
    }
    for (long i : united_support(x.entries, y.entries)) {
        const Rational xi = x.at(i);
        const Rational yi = y.at(i);
        Rational v;
        switch (op) {
        case SeqOp::sup: v = std::max(xi, yi); break;
        case SeqOp::inf: v = std::min(xi, yi); break;
        case SeqOp::add: v = xi + yi; break;
        case SeqOp::sub: v = xi - yi; break;
        case SeqOp::mul: break; // handled above
        }
        if (v != 0) out[i] = v;
    }
    return SparseSeq(std::move(out));
}

Rational seq_norm(const SparseSeq& x) {
    Rational acc(0);
    for (const auto& [i, xi] : x.entries) acc = std::max(acc, Rational(::abs(xi)));
    return acc;
}

long approx_order_unit_witness(const SparseFunctional& f) {
    if (!f.is_nonnegative()) {
        throw NotPositive("approx_order_unit_witness needs a positive functional");
    }
    // pairing(f, e_n) = sum_{i <= n} f_i, which hits ||f|| = sum f_i
    // exactly once n covers the support.
    return f.max_support_index();
}

long approx_algebraic_identity_witness(const SparseSeq& x) {
    return x.max_support_index();
}

bool verify_f_algebra_sparse(
    const std::vector<std::tuple<SparseSeq, SparseSeq, SparseSeq>>& samples) {
    for (const auto& [x, y, h] : samples) {
        if (!h.is_nonnegative()) throw NotPositive("verify_f_algebra_sparse: h must be positive");
        if (!seq_ops(x, y, SeqOp::inf).is_zero()) {
            throw PreconditionViolated("verify_f_algebra_sparse: sample pair is not disjoint");
        }
        if (!seq_ops(seq_ops(h, x, SeqOp::mul), y, SeqOp::inf).is_zero()) return false;
    }
    return true;
}

} // namespace amalg
