#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lpadecomp {

/// Cardinality in N ∪ {ω}. Used both for bundle multiplicities (always >= 1)
/// and for edge/path counts (zero allowed). ω absorbs addition and
/// multiplication by nonzero values; ω · 0 = 0.
class Multiplicity {
  public:
    constexpr Multiplicity() = default;
    constexpr explicit Multiplicity(std::uint64_t n) : value_(n) {}

    static constexpr Multiplicity omega() {
        Multiplicity m;
        m.omega_ = true;
        return m;
    }

    constexpr bool is_omega() const { return omega_; }
    constexpr bool is_zero() const { return !omega_ && value_ == 0; }
    constexpr bool is_finite() const { return !omega_; }
    // Only meaningful when finite.
    constexpr std::uint64_t value() const { return value_; }

    friend Multiplicity operator+(Multiplicity a, Multiplicity b);
    friend Multiplicity operator*(Multiplicity a, Multiplicity b);
    Multiplicity& operator+=(Multiplicity o) { return *this = *this + o; }

    friend constexpr bool operator==(Multiplicity a, Multiplicity b) {
        return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Multiplicity a, Multiplicity b) {
        if (a.omega_ || b.omega_)
            return a.omega_ <=> b.omega_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return omega_ ? "omega" : std::to_string(value_); }

  private:
    std::uint64_t value_ = 0;
    bool omega_ = false;
};

} // namespace lpadecomp
