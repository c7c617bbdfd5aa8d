#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cancelfield::jet {

/// Base fields of the jet alphabet.
///
/// The enumeration order is the canonical base order used when sorting
/// factors inside a monomial, so coefficient-like fields (the components of a
/// cancellation field, linearization backgrounds) print ahead of the fields
/// they multiply.
enum class Base : std::uint8_t {
    theta1,
    theta2,
    ubar,   // linearization background, tangential velocity
    wbar,   // linearization background, normal velocity
    u,
    w,
    f,
    h,
    psi,
    pE,
    src,    // generic source term of a linearized equation
    test,
    zcoord, // the coordinate function z (not a field; carries no jets)
};

inline constexpr std::array kAllBases = {
    Base::theta1, Base::theta2, Base::ubar, Base::wbar, Base::u,    Base::w,      Base::f,
    Base::h,      Base::psi,    Base::pE,   Base::src,  Base::test, Base::zcoord,
};

enum class Axis : std::uint8_t { t, x, z };

std::string_view base_name(Base b) noexcept;
std::optional<Base> base_from_name(std::string_view name) noexcept;

/// A derivative ∂_t^dt ∂_x^dx ∂_z^dz applied to a base field. Mixed partials
/// commute, so the four counters are the whole identity of a jet.
struct JetVar {
    Base base{Base::u};
    std::uint16_t dt{0};
    std::uint16_t dx{0};
    std::uint16_t dz{0};

    friend constexpr auto operator<=>(const JetVar&, const JetVar&) = default;

    constexpr std::uint16_t count(Axis a) const noexcept {
        switch (a) {
        case Axis::t: return dt;
        case Axis::x: return dx;
        case Axis::z: return dz;
        }
        return 0;
    }

    constexpr JetVar derived(Axis a, std::uint16_t n = 1) const noexcept {
        JetVar j = *this;
        switch (a) {
        case Axis::t: j.dt = static_cast<std::uint16_t>(j.dt + n); break;
        case Axis::x: j.dx = static_cast<std::uint16_t>(j.dx + n); break;
        case Axis::z: j.dz = static_cast<std::uint16_t>(j.dz + n); break;
        }
        return j;
    }

    constexpr bool has_time() const noexcept { return dt > 0; }
    constexpr unsigned order() const noexcept { return unsigned{dt} + dx + dz; }
};

constexpr JetVar jv(Base b, std::uint16_t dt = 0, std::uint16_t dx = 0, std::uint16_t dz = 0) noexcept {
    return JetVar{b, dt, dx, dz};
}

/// "u", "u_xz", "w_txx", ... Suffix letters are always emitted in t, x, z order.
std::string to_string(const JetVar& j);

} // namespace cancelfield::jet
