#include "amalg/rational.hpp"

#include "amalg/errors.hpp"

#include <cctype>
#include <cmath>

namespace amalg {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    const std::size_t slash = text.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = all_digits(text, start, text.size());
    } else {
        ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
    }
    if (!ok) throw ValidationError("not a rational: '" + text + "'");
    Rational q;
    if (q.set_str(text, 10) != 0) throw ValidationError("not a rational: '" + text + "'");
    if (q.get_den() == 0) throw ValidationError("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& value) {
    return value.get_str();
}

double to_double(const Rational& value) {
    return value.get_d();
}

double log_to_double(const Rational& value) {
    if (value <= 0) throw BadParameter("log of a nonpositive rational");
    long num_exp = 0;
    long den_exp = 0;
    const double num_mant = mpz_get_d_2exp(&num_exp, value.get_num().get_mpz_t());
    const double den_mant = mpz_get_d_2exp(&den_exp, value.get_den().get_mpz_t());
    return std::log(num_mant) - std::log(den_mant) +
           std::log(2.0) * static_cast<double>(num_exp - den_exp);
}

bool exact_sqrt(const Rational& value, Rational& root) {
    if (value < 0) return false;
    if (mpz_perfect_square_p(value.get_num().get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(value.get_den().get_mpz_t()) == 0) return false;
    mpz_class num_root, den_root;
    mpz_sqrt(num_root.get_mpz_t(), value.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), value.get_den().get_mpz_t());
    root = Rational(num_root, den_root);
    root.canonicalize();
    return true;
}

} // namespace amalg
