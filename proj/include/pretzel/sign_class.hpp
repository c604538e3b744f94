#pragma once

#include <string>

#include "pretzel/laurent.hpp"

namespace pretzel {

// What a formula asserts about p^h or p^l. Sign is membership of the leading
// z-monomial in F or -F; Monomial pins the leading term exactly; Exact pins
// the whole z-polynomial.
struct SignClass {
    enum class Kind { None, Sign, Monomial, Exact, Delegated };

    Kind kind = Kind::None;
    int sign = 1;
    int z_exp = 0;
    ZPoly exact;

    static SignClass none() { return {}; }
    static SignClass delegated() { return {Kind::Delegated, 1, 0, {}}; }
    static SignClass of_sign(int s) { return {Kind::Sign, s >= 0 ? 1 : -1, 0, {}}; }
    // (-1)^k F
    static SignClass parity(int k) { return of_sign(k % 2 == 0 ? 1 : -1); }
    static SignClass monomial(int s, int z) { return {Kind::Monomial, s >= 0 ? 1 : -1, z, {}}; }
    static SignClass exactly(ZPoly p) { return {Kind::Exact, 1, 0, std::move(p)}; }

    bool asserted() const { return kind == Kind::Sign || kind == Kind::Monomial || kind == Kind::Exact; }
    bool holds(const ZPoly& p) const;
    // the class of (-1)^k times a member
    SignClass times_parity(int k) const;
    std::string describe() const;

    friend bool operator==(const SignClass&, const SignClass&) = default;
};

}  // namespace pretzel
