#include "lpadecomp/scalar.hpp"

#include "lpadecomp/errors.hpp"

namespace lpadecomp {

Field Field::prime(std::uint64_t p) {
    mpz_class z(std::to_string(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
        throw InputError(std::to_string(p) + " is not prime");
    return Field(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(modulus_); }

Scalar Field::reduce(const Scalar& q) const {
    if (is_rational())
        return q;
    mpz_class p(std::to_string(modulus_));
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (den == 0)
        throw InputError("coefficient " + q.get_str() + " is undefined in " + name());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    if (r < 0)
        r += p;
    return Scalar(r);
}

Field parse_field(const std::string& text) {
    if (text == "q" || text == "Q")
        return Field::rationals();
    if (text.rfind("p:", 0) == 0) {
        std::string digits = text.substr(2);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19)
            throw InputError("malformed prime in field '" + text + "'");
        return Field::prime(std::stoull(digits));
    }
    throw InputError("unknown field '" + text + "' (expected q or p:<prime>)");
}

std::string format_scalar(const Scalar& s) { return s.get_str(); }

} // namespace lpadecomp
