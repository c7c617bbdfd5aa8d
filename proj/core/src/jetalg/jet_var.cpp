#include "cancelfield/jetalg/jet_var.hpp"

namespace cancelfield::jet {

std::string_view base_name(Base b) noexcept {
    switch (b) {
    case Base::theta1: return "theta1";
    case Base::theta2: return "theta2";
    case Base::ubar: return "ubar";
    case Base::wbar: return "wbar";
    case Base::u: return "u";
    case Base::w: return "w";
    case Base::f: return "f";
    case Base::h: return "h";
    case Base::psi: return "psi";
    case Base::pE: return "pE";
    case Base::src: return "S";
    case Base::test: return "test";
    case Base::zcoord: return "z";
    }
    return "?";
}

std::optional<Base> base_from_name(std::string_view name) noexcept {
    for (Base b : kAllBases) {
        if (base_name(b) == name) return b;
    }
    return std::nullopt;
}

std::string to_string(const JetVar& j) {
    std::string s(base_name(j.base));
    if (j.order() == 0) return s;
    s += '_';
    s.append(j.dt, 't');
    s.append(j.dx, 'x');
    s.append(j.dz, 'z');
    return s;
}

} // namespace cancelfield::jet
