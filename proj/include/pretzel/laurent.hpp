#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace pretzel {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in z alone; used for p^h, p^l and the f_n sequence.
class ZPoly {
public:
    ZPoly() = default;
    static ZPoly monomial(const BigInt& c, int z);

    void add_term(int z, const BigInt& c);
    const std::map<int, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const;         // highest z exponent
    int low_degree() const;
    const BigInt& leading_coeff() const;
    BigInt coeff(int z) const;

    // every coefficient has the given sign
    bool all_coeffs_positive() const;
    bool all_coeffs_negative() const;

    ZPoly shifted(int dz) const;
    ZPoly negated() const;

    friend ZPoly operator+(const ZPoly& p, const ZPoly& q);
    friend ZPoly operator-(const ZPoly& p, const ZPoly& q);
    friend ZPoly operator*(const ZPoly& p, const ZPoly& q);
    friend bool operator==(const ZPoly& p, const ZPoly& q) { return p.terms_ == q.terms_; }

    std::string to_string() const;

private:
    std::map<int, BigInt> terms_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class LaurentPoly2 {
public:
    // ordered by (a_exp, z_exp); this is also the serialization order
    using Key = std::pair<int, int>;

    LaurentPoly2() = default;
    static LaurentPoly2 monomial(const BigInt& c, int z_exp, int a_exp);
    static LaurentPoly2 one() { return monomial(1, 0, 0); }
    static LaurentPoly2 from_zpoly(const ZPoly& p, int a_exp);

    void add_term(int z_exp, int a_exp, const BigInt& c);
    const std::map<Key, BigInt>& terms() const { return terms_; }
    BigInt coeff(int z_exp, int a_exp) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    LaurentPoly2 operator-() const;
    friend LaurentPoly2 operator+(const LaurentPoly2& p, const LaurentPoly2& q);
    friend LaurentPoly2 operator-(const LaurentPoly2& p, const LaurentPoly2& q);
    friend LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q);
    LaurentPoly2& operator+=(const LaurentPoly2& q);
    friend bool operator==(const LaurentPoly2& p, const LaurentPoly2& q) { return p.terms_ == q.terms_; }

    LaurentPoly2 pow(unsigned k) const;

    // substitution a -> -a^{-1}: the HOMFLY-PT polynomial of the mirror image
    LaurentPoly2 mirror() const;

    std::string to_string() const;
    static LaurentPoly2 parse(std::string_view text);
    nlohmann::json to_json() const;
    static LaurentPoly2 from_json(const nlohmann::json& j);

    // rough heap footprint, used by the memo cache accounting
    std::size_t approx_bytes() const;

private:
    std::map<Key, BigInt> terms_;
};

LaurentPoly2 add(const LaurentPoly2& p, const LaurentPoly2& q);
LaurentPoly2 mul(const LaurentPoly2& p, const LaurentPoly2& q);

struct AProfile {
    int E = 0;
    int e = 0;
    ZPoly p_h;
    ZPoly p_l;
};

AProfile a_profile(const LaurentPoly2& p);

}  // namespace pretzel
