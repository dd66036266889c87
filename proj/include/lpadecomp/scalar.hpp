#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lpadecomp {

using Scalar = mpq_class;

/// Coefficient field: the rationals, or F_p for a prime p. Scalars are
/// stored as mpq values; over F_p they are kept reduced to [0, p).
class Field {
  public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t p); // throws InputError unless p is prime

    bool is_rational() const { return modulus_ == 0; }
    std::uint64_t modulus() const { return modulus_; }
    std::string name() const;

    Scalar reduce(const Scalar& q) const;
    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    bool operator==(const Field&) const = default;

  private:
    explicit Field(std::uint64_t p) : modulus_(p) {}
    std::uint64_t modulus_;
};

/// Parses "q", "Q" or "p:<prime>".
Field parse_field(const std::string& text);

std::string format_scalar(const Scalar& s);

} // namespace lpadecomp
