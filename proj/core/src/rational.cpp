#include "bsdecomp/rational.hpp"

#include "bsdecomp/errors.hpp"

namespace bsdecomp {

Rational make_rational(Int num, Int den) {
    if (den == 0) throw BadRational("zero denominator");
    Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

Rational from_int(Int value) {
    return Rational(Integer(static_cast<long>(value)));
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw BadRational("empty rational literal");
    mpq_t raw;
    mpq_init(raw);
    if (mpq_set_str(raw, text.c_str(), 10) != 0) {
        mpq_clear(raw);
        throw BadRational("malformed rational literal: " + text);
    }
    if (mpz_sgn(mpq_denref(raw)) == 0) {
        mpq_clear(raw);
        throw BadRational("zero denominator: " + text);
    }
    Rational q(raw);
    mpq_clear(raw);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Int floor_to_int(const Rational& value) {
    Integer quotient;
    mpz_fdiv_q(quotient.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return static_cast<Int>(quotient.get_si());
}

bool fits_in_int(const Rational& value) {
    return value.get_den() == 1 && value.get_num().fits_slong_p();
}

}  // namespace bsdecomp
