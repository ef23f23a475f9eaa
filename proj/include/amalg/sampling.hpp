#pragma once

#include "amalg/lattice.hpp"
#include "amalg/rational.hpp"
#include "amalg/sparse_seq.hpp"

#include <cstdint>
#include <random>

namespace amalg {

// Deterministic sample source for the randomized report checks; a fixed
// seed fixes every draw.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    // numerator in [-max_num, max_num], denominator in [1, max_den]
    Rational rational(long max_num = 10, long max_den = 6);
    Rational positive_rational(long max_num = 10, long max_den = 6); // > 0
    Rational nonnegative_rational(long max_num = 10, long max_den = 6);

    Element element(int dim, long max_num = 10, long max_den = 6);
    Element nonnegative_element(int dim, long max_num = 10, long max_den = 6);

    SparseSeq sparse(long max_index = 20, int max_entries = 6, long max_num = 9, long max_den = 4);
    SparseFunctional sparse_functional_positive(long max_index = 20, int max_entries = 6,
                                                long max_num = 9, long max_den = 4);

    long integer(long lo, long hi);

private:
    std::mt19937_64 eng_;
};

} // namespace amalg
