#include "pretzel/sign_class.hpp"

namespace pretzel {

bool SignClass::holds(const ZPoly& p) const {
    switch (kind) {
        case Kind::None:
        case Kind::Delegated: return true;
        case Kind::Sign: return !p.is_zero() && (p.leading_coeff() > 0) == (sign > 0);
        case Kind::Monomial: return !p.is_zero() && p.degree() == z_exp && p.leading_coeff() == sign;
        case Kind::Exact: return p == exact;
    }
    return false;
}

SignClass SignClass::times_parity(int k) const {
    if (k % 2 == 0) return *this;
    SignClass r = *this;
    r.sign = -sign;
    if (kind == Kind::Exact) r.exact = exact.negated();
    return r;
}

std::string SignClass::describe() const {
    switch (kind) {
        case Kind::None: return "";
        case Kind::Delegated: return "delegated";
        case Kind::Sign: return sign > 0 ? "+F" : "-F";
        case Kind::Monomial: return std::string(sign > 0 ? "" : "-") + "z^" + std::to_string(z_exp);
        case Kind::Exact: return "=" + exact.to_string();
    }
    return "";
}

}  // namespace pretzel
