#include "pretzel/pretzel.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <charconv>
#include <numeric>

namespace pretzel {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

int parse_int(std::string_view s, std::string_view what) {
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InvalidInput("bad integer '" + std::string(s) + "' in " + std::string(what));
    return v;
}

std::vector<int> parse_list(std::string_view s, std::string_view what) {
    std::vector<int> out;
    s = trim(s);
    if (s.empty()) return out;
    for (auto tok : split(s, ',')) out.push_back(parse_int(tok, what));
    return out;
}

void sort_desc(std::vector<int>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

int count_ones(const std::vector<int>& v) { return static_cast<int>(std::count(v.begin(), v.end(), 1)); }

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::string join_signed(const std::vector<int>& v, int factor) {
    if (v.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(factor * v[i]);
    }
    return out;
}

std::string join_plain(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- RawPretzel

std::string RawPretzel::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < strips.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(strips[i]);
        if (hint(i)) out += hint(i);
    }
    return out;
}

RawPretzel parse_strips(std::string_view text) {
    RawPretzel raw;
    text = trim(text);
    if (text.empty()) throw InvalidInput("no strips given");
    bool any_hint = false;
    for (auto tok : split(text, ',')) {
        tok = trim(tok);
        char h = 0;
        if (!tok.empty() && (tok.back() == 'p' || tok.back() == 'a')) {
            h = tok.back();
            tok.remove_suffix(1);
            any_hint = true;
        }
        raw.strips.push_back(parse_int(tok, "strip list"));
        raw.hints.push_back(h);
    }
    if (!any_hint) raw.hints.clear();
    return raw;
}

// ---------------------------------------------------------------- Type3Grouping

Type3Grouping Type3Grouping::make(std::vector<int> mu, std::vector<int> nu,
                                  std::vector<int> alpha, std::vector<int> beta) {
    Type3Grouping g{std::move(mu), std::move(nu), std::move(alpha), std::move(beta)};
    sort_desc(g.mu);
    sort_desc(g.nu);
    sort_desc(g.alpha);
    sort_desc(g.beta);
    g.validate();
    return g;
}

int Type3Grouping::delta_plus() const { return count_ones(mu); }
int Type3Grouping::delta_minus() const { return count_ones(nu); }
int Type3Grouping::sum_mu() const { return sum(mu); }
int Type3Grouping::sum_nu() const { return sum(nu); }
int Type3Grouping::sum_alpha() const { return sum(alpha); }
int Type3Grouping::sum_beta() const { return sum(beta); }

void Type3Grouping::validate() const {
    for (const auto* v : {&mu, &nu, &alpha, &beta}) {
        for (int x : *v)
            if (x <= 0) throw InvalidInput("grouping entries must be positive");
        if (!std::is_sorted(v->begin(), v->end(), std::greater<>()))
            throw InvalidInput("grouping lists must be sorted descending");
    }
    int rho = rho_plus() + rho_minus();
    if (rho < 2 || rho % 2 != 0)
        throw InvalidInput("a Type 3 grouping needs an even number (at least 2) of parallel strips");
    if (!is_standard())
        throw InvalidInput("grouping is not standard: it has lone crossings of both signs");
}

std::string Type3Grouping::key() const {
    return "P3(" + join_signed(mu, 1) + ";" + join_signed(nu, -1) + "|" + join_signed(alpha, 2) + ";" +
           join_signed(beta, -2) + ")";
}

std::string Type3Grouping::group_text() const {
    return "mu=" + join_plain(mu) + ";nu=" + join_plain(nu) + ";alpha=" + join_plain(alpha) +
           ";beta=" + join_plain(beta);
}

nlohmann::json Type3Grouping::to_json() const {
    return {{"key", key()},
            {"mu", mu},
            {"nu", nu},
            {"alpha", alpha},
            {"beta", beta},
            {"rho_plus", rho_plus()},
            {"rho_minus", rho_minus()},
            {"kappa_plus", kappa_plus()},
            {"kappa_minus", kappa_minus()},
            {"delta_plus", delta_plus()},
            {"delta_minus", delta_minus()},
            {"n", n()},
            {"crossings", crossings()}};
}

std::vector<int> Type3Grouping::parallel_strips() const {
    std::vector<int> out(mu.begin(), mu.end());
    for (int x : nu) out.push_back(-x);
    return out;
}

std::vector<int> Type3Grouping::antiparallel_strips() const {
    std::vector<int> out;
    for (int x : alpha) out.push_back(2 * x);
    for (int x : beta) out.push_back(-2 * x);
    return out;
}

namespace {

// one part of the P3(...) form: signed crossing counts, "0" for empty
std::vector<int> parse_key_part(std::string_view s, int sign, bool antiparallel) {
    s = trim(s);
    std::vector<int> out;
    if (s == "0") return out;
    for (int x : parse_list(s, "grouping key")) {
        if (x * sign <= 0) throw InvalidInput("wrong sign in grouping key part '" + std::string(s) + "'");
        int v = x * sign;
        if (antiparallel) {
            if (v % 2 != 0) throw InvalidInput("antiparallel strips must have an even crossing count");
            v /= 2;
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

Type3Grouping parse_group(std::string_view text) {
    text = trim(text);
    if (text.rfind("P3(", 0) == 0) {
        if (text.back() != ')') throw InvalidInput("grouping key must end with ')'");
        auto body = text.substr(3, text.size() - 4);
        auto halves = split(body, '|');
        if (halves.size() != 2) throw InvalidInput("grouping key needs exactly one '|'");
        auto left = split(halves[0], ';');
        auto right = split(halves[1], ';');
        if (left.size() != 2 || right.size() != 2) throw InvalidInput("grouping key needs ';' in each half");
        return Type3Grouping::make(parse_key_part(left[0], 1, false), parse_key_part(left[1], -1, false),
                                   parse_key_part(right[0], 1, true), parse_key_part(right[1], -1, true));
    }
    std::vector<int> parts[4];
    bool seen[4] = {false, false, false, false};
    static const char* names[4] = {"mu", "nu", "alpha", "beta"};
    for (auto field : split(text, ';')) {
        field = trim(field);
        if (field.empty()) continue;
        auto eq = field.find('=');
        if (eq == std::string_view::npos) throw InvalidInput("expected name=list in '" + std::string(field) + "'");
        auto name = trim(field.substr(0, eq));
        int idx = -1;
        for (int i = 0; i < 4; ++i)
            if (name == names[i]) idx = i;
        if (idx < 0) throw InvalidInput("unknown grouping field '" + std::string(name) + "'");
        if (seen[idx]) throw InvalidInput("repeated grouping field '" + std::string(name) + "'");
        seen[idx] = true;
        parts[idx] = parse_list(field.substr(eq + 1), name);
    }
    return Type3Grouping::make(parts[0], parts[1], parts[2], parts[3]);
}

Type3Grouping mirror(const Type3Grouping& g) { return Type3Grouping{g.nu, g.mu, g.beta, g.alpha}; }

// ---------------------------------------------------------------- LinkType

std::string LinkType::name() const {
    switch (kind) {
        case LinkKind::Type1: return "Type1";
        case LinkKind::Type2: return "Type2";
        case LinkKind::Type3: return "Type3";
        case LinkKind::Unlink: return "Unlink";
    }
    return "?";
}

nlohmann::json LinkType::to_json() const {
    nlohmann::json j = {{"type", name()}, {"components", components}};
    if (!classes.empty()) {
        std::string cls;
        for (auto c : classes) cls += c == StripClass::Parallel ? 'p' : 'a';
        j["classes"] = cls;
    }
    if (grouping) j["grouping"] = grouping->to_json();
    return j;
}

// ---------------------------------------------------------------- standardize / classify

bool is_standard(const RawPretzel& raw) {
    bool pos = std::count(raw.strips.begin(), raw.strips.end(), 1) > 0;
    bool neg = std::count(raw.strips.begin(), raw.strips.end(), -1) > 0;
    return !(pos && neg);
}

RawPretzel standardize(const RawPretzel& raw) {
    RawPretzel cur = raw;
    for (;;) {
        auto p = std::find(cur.strips.begin(), cur.strips.end(), 1);
        auto m = std::find(cur.strips.begin(), cur.strips.end(), -1);
        if (p == cur.strips.end() || m == cur.strips.end()) break;
        std::size_t ip = p - cur.strips.begin(), im = m - cur.strips.begin();
        for (std::size_t i : {std::max(ip, im), std::min(ip, im)}) {
            cur.strips.erase(cur.strips.begin() + i);
            if (i < cur.hints.size()) cur.hints.erase(cur.hints.begin() + i);
        }
    }
    if (std::all_of(cur.hints.begin(), cur.hints.end(), [](char h) { return h == 0; })) cur.hints.clear();
    return cur;
}

namespace {

// Endpoints of strip i: 4i+0 top-left, +1 top-right, +2 bottom-left, +3 bottom-right.
struct Trace {
    std::vector<int> comp;             // component of each endpoint
    std::vector<bool> entered_outside;  // reached along an outer arc in the walk direction
    int components = 0;
};

Trace trace(const std::vector<int>& strips) {
    const int k = static_cast<int>(strips.size());
    auto strip_mate = [&](int x) {
        int i = x / 4, p = x % 4;
        bool odd = std::abs(strips[i]) % 2 != 0;
        static const int even_map[4] = {2, 3, 0, 1};
        static const int odd_map[4] = {3, 2, 1, 0};
        return 4 * i + (odd ? odd_map[p] : even_map[p]);
    };
    auto outer_mate = [&](int x) {
        int i = x / 4, p = x % 4;
        switch (p) {
            case 0: return 4 * ((i + k - 1) % k) + 1;
            case 1: return 4 * ((i + 1) % k) + 0;
            case 2: return 4 * ((i + k - 1) % k) + 3;
            default: return 4 * ((i + 1) % k) + 2;
        }
    };
    Trace t;
    t.comp.assign(4 * k, -1);
    t.entered_outside.assign(4 * k, false);
    // the top long strand, from the top-right of the last strip to the top-left of the first
    std::vector<int> starts{4 * (k - 1) + 1};
    for (int x = 0; x < 4 * k; ++x) starts.push_back(x);
    for (int start : starts) {
        if (t.comp[start] >= 0) continue;
        int c = t.components++;
        int x = start;
        do {
            t.comp[x] = c;
            int y = outer_mate(x);
            t.comp[y] = c;
            t.entered_outside[y] = true;
            x = strip_mate(y);
        } while (x != start);
    }
    return t;
}

}  // namespace

int component_count(const std::vector<int>& strips) {
    if (strips.empty()) return 2;
    return trace(strips).components;
}

std::vector<Orientation> orientations(const std::vector<int>& strips) {
    std::vector<Orientation> out;
    if (strips.empty()) return out;
    Trace t = trace(strips);
    if (t.components > 24) throw InvalidInput("too many components to enumerate orientations");
    const int k = static_cast<int>(strips.size());
    for (unsigned long mask = 0; mask < (1ul << (t.components - 1)); ++mask) {
        auto flipped = [&](int x) { return t.comp[x] > 0 && ((mask >> (t.comp[x] - 1)) & 1ul); };
        auto downward = [&](int x) { return t.entered_outside[x] != flipped(x); };
        Orientation o;
        o.components = t.components;
        for (int i = 0; i < k; ++i)
            o.classes.push_back(downward(4 * i) == downward(4 * i + 1) ? StripClass::Parallel
                                                                        : StripClass::Antiparallel);
        o.bottom_right_to_left = t.entered_outside[2] != flipped(2);
        out.push_back(std::move(o));
    }
    return out;
}

namespace {

Type3Grouping grouping_from(const std::vector<int>& strips, const std::vector<StripClass>& classes) {
    std::vector<int> mu, nu, alpha, beta;
    for (std::size_t i = 0; i < strips.size(); ++i) {
        int e = strips[i];
        if (classes[i] == StripClass::Parallel) {
            (e > 0 ? mu : nu).push_back(std::abs(e));
        } else {
            if (e % 2 != 0) throw std::logic_error("odd antiparallel strip in a Type 3 diagram");
            (e > 0 ? alpha : beta).push_back(std::abs(e) / 2);
        }
    }
    return Type3Grouping::make(mu, nu, alpha, beta);
}

bool matches_hints(const RawPretzel& raw, const Orientation& o) {
    for (std::size_t i = 0; i < raw.strips.size(); ++i) {
        char h = raw.hint(i);
        if (h == 'p' && o.classes[i] != StripClass::Parallel) return false;
        if (h == 'a' && o.classes[i] != StripClass::Antiparallel) return false;
    }
    return true;
}

int parallel_count(const Orientation& o) {
    return static_cast<int>(std::count(o.classes.begin(), o.classes.end(), StripClass::Parallel));
}

// mu, nu, alpha, beta as in a grouping; zero strips sort last within their class
std::array<std::vector<int>, 4> orientation_key(const std::vector<int>& strips, const std::vector<StripClass>& classes) {
    std::array<std::vector<int>, 4> key;
    for (std::size_t i = 0; i < strips.size(); ++i) {
        int e = strips[i];
        int slot = (classes[i] == StripClass::Parallel ? 0 : 2) + (e < 0 ? 1 : 0);
        int v = std::abs(e);
        if (classes[i] == StripClass::Antiparallel && v % 2 == 0) v /= 2;
        key[slot].push_back(v);
    }
    for (auto& v : key) sort_desc(v);
    return key;
}

}  // namespace

Orientation choose_orientation(const RawPretzel& raw) {
    if (raw.empty()) throw InvalidInput("the empty diagram has no strips to orient");
    if (!raw.hints.empty() && raw.hints.size() != raw.strips.size())
        throw InvalidInput("hint list does not match strip list");
    std::optional<Orientation> best;
    std::array<std::vector<int>, 4> best_key;
    for (auto& o : orientations(raw.strips)) {
        if (!matches_hints(raw, o)) continue;
        auto key = orientation_key(raw.strips, o.classes);
        bool better = !best || parallel_count(o) > parallel_count(*best) ||
                      (parallel_count(o) == parallel_count(*best) && key < best_key);
        if (better) {
            best = std::move(o);
            best_key = std::move(key);
        }
    }
    if (!best) throw InvalidInput("no orientation realizes the requested strip classes");
    return *best;
}

LinkType classify(const RawPretzel& raw) {
    if (!is_standard(raw)) throw InvalidInput("diagram is not standard: standardize it first");
    LinkType lt;
    if (raw.empty()) {
        lt.kind = LinkKind::Unlink;
        lt.components = 2;
        return lt;
    }
    if (std::count(raw.strips.begin(), raw.strips.end(), 0))
        throw InvalidInput("a strip without crossings splits the diagram into a connected sum");
    Orientation o = choose_orientation(raw);
    lt.classes = o.classes;
    lt.components = o.components;
    if (parallel_count(o) > 0) {
        lt.kind = LinkKind::Type3;
        lt.grouping = grouping_from(raw.strips, o.classes);
    } else {
        lt.kind = o.bottom_right_to_left ? LinkKind::Type1 : LinkKind::Type2;
    }
    return lt;
}

// ---------------------------------------------------------------- enumeration

namespace {

// nonincreasing partitions of total with parts in [lo, hi], largest first part first
void partitions(int total, int hi, int lo, std::vector<int>& cur,
                const std::function<void(const std::vector<int>&)>& f) {
    if (total == 0) {
        f(cur);
        return;
    }
    for (int p = std::min(total, hi); p >= lo; --p) {
        cur.push_back(p);
        partitions(total - p, p, lo, cur, f);
        cur.pop_back();
    }
}

// every nonincreasing list with weight*sum <= budget, by increasing sum
void multisets(int budget, int lo, int weight, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    f(cur);
    for (int t = 1; t <= budget / weight; ++t) partitions(t, t, lo, cur, f);
}

}  // namespace

void enumerate_type3(int max_crossings, const std::function<void(const Type3Grouping&)>& sink) {
    if (max_crossings < 2) throw InvalidInput("max_crossings must be at least 2");
    multisets(max_crossings, 1, 1, [&](const std::vector<int>& mu) {
        int after_mu = max_crossings - sum(mu);
        multisets(after_mu, 2, 1, [&](const std::vector<int>& nu) {
            std::size_t rho = mu.size() + nu.size();
            if (rho < 2 || rho % 2 != 0) return;
            int r = after_mu - sum(nu);
            multisets(r, 1, 2, [&](const std::vector<int>& alpha) {
                multisets(r - 2 * sum(alpha), 1, 2, [&](const std::vector<int>& beta) {
                    sink(Type3Grouping{mu, nu, alpha, beta});
                });
            });
        });
    });
}

std::vector<Type3Grouping> enumerate_type3(int max_crossings) {
    std::vector<Type3Grouping> out;
    enumerate_type3(max_crossings, [&](const Type3Grouping& g) { out.push_back(g); });
    return out;
}

}  // namespace pretzel
