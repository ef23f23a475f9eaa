#include "amalg/sampling.hpp"

namespace amalg {

long Sampler::integer(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(eng_);
}

Rational Sampler::rational(long max_num, long max_den) {
    Rational q(integer(-max_num, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
}

Rational Sampler::positive_rational(long max_num, long max_den) {
    Rational q(integer(1, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
}

Rational Sampler::nonnegative_rational(long max_num, long max_den) {
    Rational q(integer(0, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
}

Element Sampler::element(int dim, long max_num, long max_den) {
    Element x = Element::zero(dim);
    for (int k = 0; k < dim; ++k) x[k] = rational(max_num, max_den);
    return x;
}

Element Sampler::nonnegative_element(int dim, long max_num, long max_den) {
    Element x = Element::zero(dim);
    for (int k = 0; k < dim; ++k) x[k] = nonnegative_rational(max_num, max_den);
    return x;
}

SparseSeq Sampler::sparse(long max_index, int max_entries, long max_num, long max_den) {
    std::map<long, Rational> entries;
    const int count = static_cast<int>(integer(0, max_entries));
    for (int i = 0; i < count; ++i) {
        entries[integer(1, max_index)] = rational(max_num, max_den);
    }
    return SparseSeq(std::move(entries));
}

SparseFunctional Sampler::sparse_functional_positive(long max_index, int max_entries,
                                                     long max_num, long max_den) {
    std::map<long, Rational> entries;
    const int count = static_cast<int>(integer(0, max_entries));
    for (int i = 0; i < count; ++i) {
        entries[integer(1, max_index)] = positive_rational(max_num, max_den);
    }
    return SparseFunctional(std::move(entries));
}

} // namespace amalg
