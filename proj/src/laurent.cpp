#include "pretzel/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace pretzel {

namespace {

template <class Map, class K>
void accumulate(Map& m, const K& key, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = m.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

bool is_odd(int k) { return (k % 2) != 0; }

nlohmann::json coef_to_json(const BigInt& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

BigInt coef_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("coefficient must be an integer");
}

}  // namespace

// ---------------------------------------------------------------- ZPoly

ZPoly ZPoly::monomial(const BigInt& c, int z) {
    ZPoly p;
    p.add_term(z, c);
    return p;
}

void ZPoly::add_term(int z, const BigInt& c) { accumulate(terms_, z, c); }

int ZPoly::degree() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
    return terms_.rbegin()->first;
}

int ZPoly::low_degree() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
    return terms_.begin()->first;
}

const BigInt& ZPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

BigInt ZPoly::coeff(int z) const {
    auto it = terms_.find(z);
    return it == terms_.end() ? BigInt(0) : it->second;
}

bool ZPoly::all_coeffs_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

bool ZPoly::all_coeffs_negative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second < 0; });
}

ZPoly ZPoly::shifted(int dz) const {
    ZPoly r;
    for (const auto& [z, c] : terms_) r.terms_.emplace(z + dz, c);
    return r;
}

ZPoly ZPoly::negated() const {
    ZPoly r;
    for (const auto& [z, c] : terms_) r.terms_.emplace(z, -c);
    return r;
}

ZPoly operator+(const ZPoly& p, const ZPoly& q) {
    ZPoly r = p;
    for (const auto& [z, c] : q.terms_) r.add_term(z, c);
    return r;
}

ZPoly operator-(const ZPoly& p, const ZPoly& q) { return p + q.negated(); }

ZPoly operator*(const ZPoly& p, const ZPoly& q) {
    ZPoly r;
    for (const auto& [z1, c1] : p.terms_)
        for (const auto& [z2, c2] : q.terms_) r.add_term(z1 + z2, c1 * c2);
    return r;
}

std::string ZPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [z, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*z^" + std::to_string(z);
    }
    return out;
}

// ---------------------------------------------------------------- LaurentPoly2

LaurentPoly2 LaurentPoly2::monomial(const BigInt& c, int z_exp, int a_exp) {
    LaurentPoly2 p;
    p.add_term(z_exp, a_exp, c);
    return p;
}

LaurentPoly2 LaurentPoly2::from_zpoly(const ZPoly& p, int a_exp) {
    LaurentPoly2 r;
    for (const auto& [z, c] : p.terms()) r.terms_.emplace(Key{a_exp, z}, c);
    return r;
}

void LaurentPoly2::add_term(int z_exp, int a_exp, const BigInt& c) {
    accumulate(terms_, Key{a_exp, z_exp}, c);
}

BigInt LaurentPoly2::coeff(int z_exp, int a_exp) const {
    auto it = terms_.find(Key{a_exp, z_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& q) {
    for (const auto& [k, c] : q.terms_) accumulate(terms_, k, c);
    return *this;
}

LaurentPoly2 operator+(const LaurentPoly2& p, const LaurentPoly2& q) {
    LaurentPoly2 r = p;
    r += q;
    return r;
}

LaurentPoly2 operator-(const LaurentPoly2& p, const LaurentPoly2& q) { return p + (-q); }

LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q) {
    LaurentPoly2 r;
    for (const auto& [k1, c1] : p.terms_)
        for (const auto& [k2, c2] : q.terms_)
            accumulate(r.terms_, LaurentPoly2::Key{k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    return r;
}

LaurentPoly2 add(const LaurentPoly2& p, const LaurentPoly2& q) { return p + q; }
LaurentPoly2 mul(const LaurentPoly2& p, const LaurentPoly2& q) { return p * q; }

LaurentPoly2 LaurentPoly2::pow(unsigned k) const {
    LaurentPoly2 r = one();
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

LaurentPoly2 LaurentPoly2::mirror() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{-k.first, k.second}, is_odd(k.first) ? BigInt(-c) : c);
    return r;
}

std::string LaurentPoly2::to_string() const {
    if (terms_.empty()) return "0";
    // a lone constant prints bare, so the unknot reads "1"
    if (terms_.size() == 1 && terms_.begin()->first == Key{0, 0}) return terms_.begin()->second.str();
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*z^" + std::to_string(k.second) + "*a^" + std::to_string(k.first);
    }
    return out;
}

namespace {

class TermReader {
public:
    explicit TermReader(std::string_view s) : s_(s) {}

    bool done() const { return i_ == s_.size(); }
    std::size_t pos() const { return i_; }

    void expect(std::string_view lit) {
        if (s_.substr(i_, lit.size()) != lit)
            throw ParseError("expected '" + std::string(lit) + "'", i_);
        i_ += lit.size();
    }

    std::string integer() {
        std::size_t start = i_;
        if (i_ < s_.size() && s_[i_] == '-') ++i_;
        std::size_t digits = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == digits) throw ParseError("expected integer", start);
        return std::string(s_.substr(start, i_ - start));
    }

    int small_integer() {
        std::size_t start = i_;
        std::string t = integer();
        try {
            return std::stoi(t);
        } catch (const std::out_of_range&) {
            throw ParseError("exponent out of range", start);
        }
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

LaurentPoly2 LaurentPoly2::parse(std::string_view text) {
    LaurentPoly2 r;
    if (text == "0") return r;
    TermReader in(text);
    if (in.done()) throw ParseError("empty input", 0);
    {
        TermReader bare(text);
        std::string c = bare.integer();
        if (bare.done()) {
            if (BigInt(c) == 0) throw ParseError("zero coefficient", 0);
            r.terms_.emplace(Key{0, 0}, BigInt(c));
            return r;
        }
    }
    for (;;) {
        std::size_t at = in.pos();
        BigInt c(in.integer());
        if (c == 0) throw ParseError("zero coefficient", at);
        in.expect("*z^");
        int z = in.small_integer();
        in.expect("*a^");
        int a = in.small_integer();
        if (r.terms_.count(Key{a, z})) throw ParseError("repeated term", at);
        r.terms_.emplace(Key{a, z}, c);
        if (in.done()) break;
        in.expect(" + ");
    }
    return r;
}

nlohmann::json LaurentPoly2::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : terms_) arr.push_back({coef_to_json(c), k.second, k.first});
    return arr;
}

LaurentPoly2 LaurentPoly2::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    LaurentPoly2 r;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("term must be [coef, z, a]");
        r.add_term(t[1].get<int>(), t[2].get<int>(), coef_from_json(t[0]));
    }
    return r;
}

std::size_t LaurentPoly2::approx_bytes() const {
    // map node overhead plus the limb storage of each coefficient
    std::size_t bytes = sizeof(*this);
    for (const auto& [k, c] : terms_) {
        bytes += 48 + sizeof(k) + sizeof(c);
        std::size_t bits = c == 0 ? 0 : boost::multiprecision::msb(abs(c)) + 1;
        if (bits > 128) bytes += bits / 8;
    }
    return bytes;
}

AProfile a_profile(const LaurentPoly2& p) {
    if (p.is_zero()) throw std::domain_error("empty polynomial has no profile");
    AProfile r;
    r.e = p.terms().begin()->first.first;
    r.E = p.terms().rbegin()->first.first;
    for (const auto& [k, c] : p.terms()) {
        if (k.first == r.E) r.p_h.add_term(k.second, c);
        if (k.first == r.e) r.p_l.add_term(k.second, c);
    }
    return r;
}

}  // namespace pretzel
