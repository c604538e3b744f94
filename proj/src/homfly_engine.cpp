#include "pretzel/homfly_engine.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <string>

namespace pretzel {

namespace {

LaurentPoly2 mono(int c, int z, int a) { return LaurentPoly2::monomial(c, z, a); }

// H(D+) from H(D-) and H(D0), or H(D-) from H(D+) and H(D0)
LaurentPoly2 skein(int crossing_sign, const LaurentPoly2& switched, const LaurentPoly2& smoothed) {
    if (crossing_sign > 0) return mono(1, 0, -2) * switched + mono(1, 1, -1) * smoothed;
    return mono(1, 0, 2) * switched - mono(1, 1, 1) * smoothed;
}

const LaurentPoly2& delta() {
    static const LaurentPoly2 d = unlink_delta();
    return d;
}

int sgn(int x) { return x > 0 ? 1 : -1; }

}  // namespace

ZPoly fib_f(int n) {
    if (n < 2) throw std::invalid_argument("f_n is defined for n >= 2");
    ZPoly prev = ZPoly::monomial(1, -1), cur = ZPoly::monomial(1, 0);
    if (n == 2) return prev;
    for (int k = 4; k <= n; ++k) {
        ZPoly next = cur.shifted(1) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

LaurentPoly2 torus_parallel(int m) {
    if (std::abs(m) <= 1) throw std::invalid_argument("torus_parallel needs |m| >= 2");
    int n = std::abs(m);
    if (m > 0) return LaurentPoly2::from_zpoly(fib_f(n + 2), 1 - n) - LaurentPoly2::from_zpoly(fib_f(n), -1 - n);
    LaurentPoly2 r = LaurentPoly2::from_zpoly(fib_f(n), n + 1) - LaurentPoly2::from_zpoly(fib_f(n + 2), n - 1);
    return n % 2 == 0 ? r : -r;
}

LaurentPoly2 torus_antiparallel(int m) {
    if (m % 2 != 0 || std::abs(m) < 2) throw std::invalid_argument("torus_antiparallel needs an even m with |m| >= 2");
    int k = std::abs(m) / 2, s = sgn(m);
    LaurentPoly2 r;
    for (int j = 1; j <= 2 * k - 3; j += 2) r.add_term(1, -s * j, s);
    r.add_term(1, -s * (2 * k - 1), s);
    r.add_term(-1, -s * (2 * k - 1), s);
    r.add_term(-1, -s * (2 * k + 1), -s);
    return r;
}

LaurentPoly2 unlink_delta() {
    // a kinked unknot: D+ and D- are unknots and D0 is the two-component unlink,
    // so 1 = a^-2 + a^-1 z delta
    return (LaurentPoly2::one() - mono(1, 0, -2)) * mono(1, -1, 1);
}

void verify_unlink_normalization() {
    LaurentPoly2 d = unlink_delta();
    if (d != mono(1, -1, 1) - mono(1, -1, -1))
        throw std::logic_error("two-component unlink normalization is not (a - a^-1) z^-1");
    // positive Hopf link: switching a crossing gives the unlink, smoothing it the unknot
    if (skein(1, d, LaurentPoly2::one()) != torus_antiparallel(2))
        throw std::logic_error("unlink normalization does not reproduce the Hopf link");
}

// ---------------------------------------------------------------- PretzelState

PretzelState PretzelState::from_grouping(const Type3Grouping& g) {
    PretzelState s;
    s.parallel = g.parallel_strips();
    s.antiparallel = g.antiparallel_strips();
    return s;
}

PretzelState PretzelState::from_strips(const std::vector<int>& strips, const std::vector<StripClass>& classes) {
    if (strips.size() != classes.size()) throw std::invalid_argument("strip and class lists differ in length");
    PretzelState s;
    for (std::size_t i = 0; i < strips.size(); ++i)
        (classes[i] == StripClass::Parallel ? s.parallel : s.antiparallel).push_back(strips[i]);
    return s;
}

void PretzelState::validate() const {
    // with a parallel strip present the diagram is Type 3, where odd strips are parallel
    if (parallel.empty()) return;
    for (int e : antiparallel)
        if (e % 2 != 0) throw InvalidInput("an odd strip next to a parallel strip must be parallel");
}

// ---------------------------------------------------------------- cache

std::size_t MemoCache::KeyHash::operator()(const Key& k) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : k) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
        h *= 1099511628211ull;
    }
    return h;
}

MemoCache::Value MemoCache::get(const Key& k) {
    std::lock_guard lock(mu_);
    auto it = index_.find(k);
    if (it == index_.end()) {
        ++stats_.misses;
        return nullptr;
    }
    ++stats_.hits;
    lru_.splice(lru_.begin(), lru_, it->second);
    return it->second->value;
}

void MemoCache::put(const Key& k, Value v) {
    std::size_t bytes = v->approx_bytes() + k.size() * sizeof(int) + 96;
    std::lock_guard lock(mu_);
    if (index_.count(k)) return;
    lru_.push_front(Entry{k, std::move(v), bytes});
    index_.emplace(k, lru_.begin());
    bytes_ += bytes;
    while (cap_ > 0 && bytes_ > cap_ && lru_.size() > 1) {
        auto& last = lru_.back();
        bytes_ -= last.bytes;
        index_.erase(last.key);
        lru_.pop_back();
        ++stats_.evictions;
    }
}

CacheStats MemoCache::stats() const {
    std::lock_guard lock(mu_);
    CacheStats s = stats_;
    s.entries = lru_.size();
    s.bytes = bytes_;
    return s;
}

void MemoCache::clear() {
    std::lock_guard lock(mu_);
    lru_.clear();
    index_.clear();
    bytes_ = 0;
    stats_ = {};
}

// ---------------------------------------------------------------- engine

EngineOptions EngineOptions::from_env() {
    EngineOptions o;
    if (const char* v = std::getenv("PRETZEL_CACHE_BYTES")) {
        try {
            o.cache_bytes = static_cast<std::size_t>(std::stoull(v));
        } catch (const std::exception&) {
            throw InvalidInput(std::string("PRETZEL_CACHE_BYTES is not a byte count: ") + v);
        }
    }
    return o;
}

HomflyEngine::HomflyEngine(EngineOptions opts) : opts_(opts), cache_(opts.cache_bytes) {
    verify_unlink_normalization();
}

HomflyEngine& default_engine() {
    static HomflyEngine engine(EngineOptions::from_env());
    return engine;
}

LaurentPoly2 HomflyEngine::homfly(const PretzelState& state) {
    state.validate();
    return state.factor * eval(state.parallel, state.antiparallel);
}

LaurentPoly2 HomflyEngine::homfly(const Type3Grouping& g) { return homfly(PretzelState::from_grouping(g)); }

LaurentPoly2 HomflyEngine::homfly(const RawPretzel& raw) {
    RawPretzel std_raw = standardize(raw);
    if (std_raw.empty()) return delta();
    Orientation o = choose_orientation(std_raw);
    return homfly(PretzelState::from_strips(std_raw.strips, o.classes));
}

LaurentPoly2 HomflyEngine::torus(int e, bool parallel) {
    if (std::abs(e) <= 1) return LaurentPoly2::one();
    bool par = parallel || e % 2 != 0;
    if (opts_.closed_form_bases) return par ? torus_parallel(e) : torus_antiparallel(e);
    // P(e-1, 1) is T(2, e) with parallel strands; |e| parallel single strips twist antiparallel strands
    if (par) return eval({e - sgn(e), sgn(e)}, {});
    return eval(std::vector<int>(std::abs(e), sgn(e)), {});
}

LaurentPoly2 HomflyEngine::eval(std::vector<int> par, std::vector<int> anti) {
    std::sort(par.begin(), par.end());
    std::sort(anti.begin(), anti.end());
    if (!opts_.memoize) return compute(par, anti);
    MemoCache::Key key = par;
    key.push_back(INT_MIN);
    key.insert(key.end(), anti.begin(), anti.end());
    if (auto hit = cache_.get(key)) return *hit;
    auto value = std::make_shared<const LaurentPoly2>(compute(par, anti));
    cache_.put(key, value);
    return *value;
}

LaurentPoly2 HomflyEngine::compute(const std::vector<int>& par, const std::vector<int>& anti) {
    // a strip without crossings splits the diagram into a connected sum of 2-braid closures
    auto zeros = std::count(par.begin(), par.end(), 0) + std::count(anti.begin(), anti.end(), 0);
    if (zeros > 0) {
        LaurentPoly2 r = delta().pow(static_cast<unsigned>(zeros - 1));
        for (int e : par)
            if (e) r = r * torus(e, true);
        for (int e : anti)
            if (e) r = r * torus(e, false);
        return r;
    }

    // largest parallel strip first, then largest antiparallel
    int best = -1;
    bool best_par = false;
    for (std::size_t i = 0; i < par.size(); ++i)
        if (std::abs(par[i]) >= 2 && (best < 0 || std::abs(par[i]) > std::abs(par[best]))) {
            best = static_cast<int>(i);
            best_par = true;
        }
    if (best < 0)
        for (std::size_t i = 0; i < anti.size(); ++i)
            if (std::abs(anti[i]) >= 2 && (best < 0 || std::abs(anti[i]) > std::abs(anti[best])))
                best = static_cast<int>(i);

    if (best >= 0) {
        if (best_par) {
            int m = par[best], s = sgn(m);
            auto switched = par, smoothed = par;
            switched[best] = m - 2 * s;
            smoothed[best] = m - s;
            return skein(s, eval(switched, anti), eval(smoothed, anti));
        }
        int m = anti[best], s = sgn(m);
        auto switched = anti, smoothed = anti;
        switched[best] = m - 2 * s;
        smoothed.erase(smoothed.begin() + best);
        return skein(s, eval(par, switched), eval(par, smoothed));
    }

    // only lone crossings remain
    if (!par.empty() && !anti.empty())
        throw std::logic_error("mixed single-crossing strips cannot occur in a pretzel state");
    const bool parallel = !par.empty();
    const auto& singles = parallel ? par : anti;
    int total = 0;
    for (int e : singles) total += e;
    if (total == 0) return delta();
    int s = sgn(total), r = std::abs(total);
    if (r == 1 && !parallel) return LaurentPoly2::one();
    std::vector<int> rest(r - 2, s);
    LaurentPoly2 switched = parallel ? eval(rest, {}) : eval({}, rest);
    LaurentPoly2 smoothed = parallel ? LaurentPoly2::one() : eval({}, std::vector<int>(r - 1, s));
    return skein(s, switched, smoothed);
}

// ---------------------------------------------------------------- profiles

nlohmann::json HomflyProfile::to_json() const {
    return {{"E", E}, {"e", e}, {"span", span}, {"b0", b0},
            {"p_h", p_h.to_string()}, {"p_l", p_l.to_string()},
            {"p_h0", p_h0.to_string()}, {"p_l0", p_l0.to_string()}};
}

bool uniform_a_parity(const LaurentPoly2& h) {
    if (h.is_zero()) return true;
    int first = h.terms().begin()->first.first & 1;
    return std::all_of(h.terms().begin(), h.terms().end(),
                       [&](const auto& t) { return (t.first.first & 1) == first; });
}

HomflyProfile profile(const LaurentPoly2& h) {
    AProfile a = a_profile(h);
    if (!uniform_a_parity(h)) throw std::logic_error("a-exponents of a HOMFLY-PT polynomial share one parity");
    HomflyProfile p;
    p.E = a.E;
    p.e = a.e;
    p.span = a.E - a.e;
    p.b0 = p.span / 2 + 1;
    p.p_h = a.p_h;
    p.p_l = a.p_l;
    p.p_h0 = ZPoly::monomial(a.p_h.leading_coeff(), a.p_h.degree());
    p.p_l0 = ZPoly::monomial(a.p_l.leading_coeff(), a.p_l.degree());
    return p;
}

HomflyProfile profile(const Type3Grouping& g, HomflyEngine& engine) { return profile(engine.homfly(g)); }

HomflyProfile profile(const RawPretzel& raw, HomflyEngine& engine) { return profile(engine.homfly(raw)); }

ConnectedSumProfile connected_sum_profile(const std::vector<int>& parallel_factors,
                                          const std::vector<int>& antiparallel_factors) {
    int s = 0, w = 0, c = 0, c_minus = 0, pieces = 0;
    int rho_p = 0, rho_m = 0, kappa_p = 0, kappa_m = 0, r_plus = 0, r_minus = 0;
    for (int m : parallel_factors) {
        if (std::abs(m) < 2) throw std::invalid_argument("parallel factors need |m| >= 2");
        s += 2;
        (m > 0 ? rho_p : rho_m)++;
        ++pieces;
        w += m;
        c += std::abs(m);
        if (m < 0) c_minus -= m;
    }
    for (int m : antiparallel_factors) {
        if (m % 2 != 0 || std::abs(m) < 2) throw std::invalid_argument("antiparallel factors need an even |m| >= 2");
        s += std::abs(m);
        ++pieces;
        w += m;
        c += std::abs(m);
        if (m > 0) {
            ++kappa_p;
            r_plus += m / 2 - 1;
        } else {
            ++kappa_m;
            c_minus -= m;
            r_minus += -m / 2 - 1;
        }
    }
    if (pieces == 0) return {0, 0, SignClass::monomial(1, 0), SignClass::monomial(1, 0)};
    s -= pieces - 1;
    ConnectedSumProfile out;
    out.E = s - w - 1 - 2 * r_minus;
    out.e = -s - w + 1 + 2 * r_plus;
    if (kappa_p + kappa_m == 0) {
        out.h = SignClass::monomial(c_minus % 2 == 0 ? 1 : -1, c - rho_p - 3 * rho_m);
        out.l = SignClass::monomial((rho_p + rho_m + c_minus) % 2 == 0 ? 1 : -1, c - 3 * rho_p - rho_m);
    } else {
        out.h = SignClass::parity(c_minus);
        out.l = SignClass::parity(rho_p - rho_m + kappa_p + kappa_m + c_minus);
    }
    return out;
}

}  // namespace pretzel
