#include "lpadecomp/multiplicity.hpp"

#include "lpadecomp/errors.hpp"

namespace lpadecomp {

Multiplicity operator+(Multiplicity a, Multiplicity b) {
    if (a.omega_ || b.omega_)
        return Multiplicity::omega();
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a.value_, b.value_, &r))
        throw ResourceError("path count overflows 64 bits");
    return Multiplicity(r);
}

Multiplicity operator*(Multiplicity a, Multiplicity b) {
    if (a.is_zero() || b.is_zero())
        return Multiplicity(0);
    if (a.omega_ || b.omega_)
        return Multiplicity::omega();
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a.value_, b.value_, &r))
        throw ResourceError("path count overflows 64 bits");
    return Multiplicity(r);
}

} // namespace lpadecomp
