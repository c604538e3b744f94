#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "pretzel/laurent.hpp"
#include "pretzel/pretzel.hpp"
#include "pretzel/sign_class.hpp"

namespace pretzel {

ZPoly fib_f(int n);
LaurentPoly2 torus_parallel(int m);
LaurentPoly2 torus_antiparallel(int m);
// H of the two-component unlink, derived from the skein relation on a kinked unknot
LaurentPoly2 unlink_delta();
// throws std::logic_error if the derived unlink value does not reproduce the Hopf link
void verify_unlink_normalization();

// A pretzel diagram as two multisets of strips. Zero entries are strips without
// crossings. Antiparallel entries are even unless every strip is antiparallel.
struct PretzelState {
    std::vector<int> parallel;
    std::vector<int> antiparallel;
    LaurentPoly2 factor = LaurentPoly2::one();

    static PretzelState from_grouping(const Type3Grouping& g);
    static PretzelState from_strips(const std::vector<int>& strips, const std::vector<StripClass>& classes);
    void validate() const;
};

struct EngineOptions {
    bool closed_form_bases = true;
    bool memoize = true;
    std::size_t cache_bytes = 0;  // 0: unbounded

    // reads PRETZEL_CACHE_BYTES
    static EngineOptions from_env();
};

struct CacheStats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t evictions = 0;
    std::size_t entries = 0;
    std::size_t bytes = 0;
};

class MemoCache {
public:
    using Key = std::vector<int>;
    using Value = std::shared_ptr<const LaurentPoly2>;

    explicit MemoCache(std::size_t cap_bytes) : cap_(cap_bytes) {}

    Value get(const Key& k);
    void put(const Key& k, Value v);
    CacheStats stats() const;
    void clear();

private:
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };
    struct Entry {
        Key key;
        Value value;
        std::size_t bytes;
    };

    mutable std::mutex mu_;
    std::size_t cap_;
    std::list<Entry> lru_;  // front is most recent
    std::unordered_map<Key, std::list<Entry>::iterator, KeyHash> index_;
    std::size_t bytes_ = 0;
    CacheStats stats_;
};

// Skein recursion over strips. Thread-safe; the memo cache is shared by all callers.
class HomflyEngine {
public:
    explicit HomflyEngine(EngineOptions opts = {});

    LaurentPoly2 homfly(const PretzelState& state);
    LaurentPoly2 homfly(const Type3Grouping& g);
    // any pretzel diagram; the orientation is chosen as in classify
    LaurentPoly2 homfly(const RawPretzel& raw);

    LaurentPoly2 torus(int e, bool parallel);

    const EngineOptions& options() const { return opts_; }
    CacheStats stats() const { return cache_.stats(); }
    void clear_cache() { cache_.clear(); }

private:
    LaurentPoly2 eval(std::vector<int> par, std::vector<int> anti);
    LaurentPoly2 compute(const std::vector<int>& par, const std::vector<int>& anti);

    EngineOptions opts_;
    MemoCache cache_;
};

// process-wide engine configured from the environment
HomflyEngine& default_engine();

struct HomflyProfile {
    int E = 0;
    int e = 0;
    int span = 0;
    int b0 = 1;
    ZPoly p_h;
    ZPoly p_l;
    ZPoly p_h0;
    ZPoly p_l0;

    nlohmann::json to_json() const;
};

HomflyProfile profile(const LaurentPoly2& h);
HomflyProfile profile(const Type3Grouping& g, HomflyEngine& engine = default_engine());
HomflyProfile profile(const RawPretzel& raw, HomflyEngine& engine = default_engine());

bool uniform_a_parity(const LaurentPoly2& h);

struct ConnectedSumProfile {
    int E = 0;
    int e = 0;
    SignClass h;
    SignClass l;
};

// connected sum of T_p(m,2) for each parallel factor and T_o(m,2) for each antiparallel one
ConnectedSumProfile connected_sum_profile(const std::vector<int>& parallel_factors,
                                          const std::vector<int>& antiparallel_factors);

}  // namespace pretzel
