#include "torsionforge/rational.hpp"

#include "torsionforge/errors.hpp"

#include <cctype>

namespace torsionforge {

std::string to_string(const Rational& x) {
    return x.get_str();
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw Error("malformed rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw Error("malformed rational literal: " + text);
    if (q.get_den() == 0) throw Error("rational literal with zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

Rational rational_pow(const Rational& base, int exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (sgn(base) == 0) throw DivisionByZero();
        return 1 / rational_pow(base, -exp);
    }
    Rational acc(1), b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

double to_double(const Rational& x) {
    return x.get_d();
}

}  // namespace torsionforge
