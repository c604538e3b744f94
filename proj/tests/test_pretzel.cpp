#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "diagram_oracle.hpp"
#include "doctest.h"
#include "pretzel/pretzel.hpp"

using namespace pretzel;

namespace {

RawPretzel raw(std::vector<int> s) { return RawPretzel{std::move(s), {}}; }

std::string classify_key(const std::vector<int>& strips) {
    LinkType t = classify(raw(strips));
    return t.grouping ? t.grouping->key() : t.name();
}

// Every Type 3 grouping read off an oriented diagram with at most max_c
// crossings, normalized to nu_i > 1. Uses only the oracle's diagram tracing.
std::set<std::string> groupings_from_diagrams(int max_c) {
    std::set<std::string> out;
    std::vector<int> cur;
    std::function<void(int)> grow = [&](int budget) {
        if (!cur.empty()) {
            for (const auto& od : oracle::oriented_diagrams(cur, false)) {
                if (std::count(od.classes.begin(), od.classes.end(), 'p') == 0) continue;
                std::vector<int> mu, nu, alpha, beta;
                for (std::size_t i = 0; i < cur.size(); ++i) {
                    int e = cur[i];
                    if (od.classes[i] == 'p') {
                        (e > 0 ? mu : nu).push_back(std::abs(e));
                    } else {
                        REQUIRE(e % 2 == 0);
                        (e > 0 ? alpha : beta).push_back(std::abs(e) / 2);
                    }
                }
                auto ones = [](const std::vector<int>& v) { return std::count(v.begin(), v.end(), 1); };
                if (ones(mu) && ones(nu)) continue;
                if (ones(nu)) {
                    std::swap(mu, nu);
                    std::swap(alpha, beta);
                }
                out.insert(Type3Grouping::make(mu, nu, alpha, beta).key());
            }
        }
        for (int e = -budget; e <= budget; ++e) {
            // rotations give the same groupings, so the first strip carries the largest |e|
            if (e == 0 || (!cur.empty() && std::abs(e) > std::abs(cur.front()))) continue;
            cur.push_back(e);
            grow(budget - std::abs(e));
            cur.pop_back();
        }
    };
    grow(max_c);
    return out;
}

}  // namespace

TEST_CASE("parse_strips") {
    RawPretzel r = parse_strips("2,-3,4");
    CHECK(r.strips == std::vector<int>{2, -3, 4});
    CHECK(r.hints.empty());
    RawPretzel h = parse_strips(" 2p, -4a ,4");
    CHECK(h.strips == std::vector<int>{2, -4, 4});
    CHECK(h.hint(0) == 'p');
    CHECK(h.hint(1) == 'a');
    CHECK(h.hint(2) == 0);
    CHECK(h.to_string() == "2p,-4a,4");
    CHECK_THROWS_AS(parse_strips("2,x"), InvalidInput);
    CHECK_THROWS_AS(parse_strips("2q"), InvalidInput);
    CHECK_THROWS_AS(parse_strips(""), InvalidInput);
}

TEST_CASE("standardize") {
    CHECK(standardize(raw({3, 1, -1})).strips == std::vector<int>{3});
    CHECK(standardize(raw({2, -3, 4})).strips == std::vector<int>{2, -3, 4});
    CHECK(standardize(raw({1, -1, 1, -1})).empty());
    CHECK(is_standard(raw({1, 1, 2})));
    CHECK_FALSE(is_standard(raw({1, 2, -1})));

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> len(1, 7), val(-3, 3);
    for (int i = 0; i < 300; ++i) {
        std::vector<int> s;
        for (int k = len(rng); k > 0; --k) {
            int v = val(rng);
            s.push_back(v == 0 ? 1 : v);
        }
        RawPretzel once = standardize(raw(s));
        CHECK(is_standard(once));
        CHECK(standardize(once).strips == once.strips);
    }
}

TEST_CASE("classification of known diagrams") {
    CHECK(classify_key({2, -3, 4}) == "P3(2;-3|4;0)");
    CHECK(classify_key({1, -3, 2}) == "P3(1;-3|2;0)");
    LinkType left = classify(parse_strips("2p,-4p,-4p,-2p,4a,4a"));
    REQUIRE(left.grouping);
    CHECK(left.grouping->key() == "P3(2;-4,-4,-2|4,4;0)");

    LinkType t = classify(raw({2, -3, 4}));
    CHECK(t.kind == LinkKind::Type3);
    CHECK(t.grouping->mu == std::vector<int>{2});
    CHECK(t.grouping->nu == std::vector<int>{3});
    CHECK(t.grouping->alpha == std::vector<int>{2});
    CHECK(t.grouping->beta.empty());
}

TEST_CASE("classify edge cases") {
    CHECK(classify(raw({})).kind == LinkKind::Unlink);
    CHECK_THROWS_AS(classify(raw({1, -1})), InvalidInput);
    CHECK_THROWS_AS(classify(raw({2, 0, 3})), InvalidInput);
    CHECK_THROWS_AS(classify(parse_strips("3a,3p")), InvalidInput);
    CHECK_THROWS_AS(classify(parse_strips("2,3a,4")), InvalidInput);
    CHECK(classify(parse_strips("3a,3")).kind == LinkKind::Type1);

    // all strips antiparallel: Type 1 or Type 2
    LinkType pair = classify(raw({2, 2}));
    CHECK(pair.kind == LinkKind::Type3);
    LinkType odd = classify(raw({3, 3, 3}));
    CHECK(odd.components == 1);
    LinkType evens = classify(raw({2, 4, -2}));
    CHECK((evens.kind == LinkKind::Type1 || evens.kind == LinkKind::Type2 || evens.kind == LinkKind::Type3));
}

TEST_CASE("classification against the diagram oracle") {
    // the orientation chosen by classify is one of the oracle's orientations
    for (std::vector<int> s : {std::vector<int>{2, -3, 4}, {1, -3, 2}, {3, 3, -2}, {2, 2, 2, -5}, {1, 1, 4, -4}}) {
        LinkType t = classify(raw(s));
        std::string cls;
        for (auto c : t.classes) cls += c == StripClass::Parallel ? 'p' : 'a';
        bool found = false;
        for (const auto& od : oracle::oriented_diagrams(s, false))
            if (std::string(od.classes.begin(), od.classes.end()) == cls) {
                found = true;
                CHECK(od.components == t.components);
            }
        CHECK(found);
    }
}

TEST_CASE("classify is invariant under rotation and reversal") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(2, 6), val(-5, 5);
    int checked = 0;
    while (checked < 200) {
        std::vector<int> s;
        for (int k = len(rng); k > 0; --k) {
            int v = val(rng);
            if (v != 0) s.push_back(v);
        }
        if (s.empty() || !is_standard(raw(s))) continue;
        std::string base = classify_key(s);
        for (std::size_t r = 0; r < s.size(); ++r) {
            std::vector<int> rot = s;
            std::rotate(rot.begin(), rot.begin() + r, rot.end());
            CHECK(classify_key(rot) == base);
            std::reverse(rot.begin(), rot.end());
            CHECK(classify_key(rot) == base);
        }
        ++checked;
    }
}

TEST_CASE("grouping text forms") {
    Type3Grouping g = parse_group("mu=2;nu=3;alpha=2;beta=");
    CHECK(g.key() == "P3(2;-3|4;0)");
    CHECK(g.group_text() == "mu=2;nu=3;alpha=2;beta=");
    CHECK(parse_group("P3(2;-3|4;0)") == g);
    CHECK(parse_group(g.key()) == g);
    CHECK(parse_group("mu=1,2,1,2;nu=;alpha=1,3").key() == "P3(2,2,1,1;0|6,2;0)");
    CHECK_THROWS_AS(parse_group("mu=2;nu=3;gamma=1"), InvalidInput);
    CHECK_THROWS_AS(parse_group("P3(2;-3|3;0)"), InvalidInput);
    CHECK_THROWS_AS(parse_group("P3(2;3|4;0)"), InvalidInput);
    CHECK_THROWS_AS(parse_group("mu=2;nu=;alpha=1"), InvalidInput);      // odd main cycle
    CHECK_THROWS_AS(parse_group("mu=1;nu=1"), InvalidInput);             // not standard
    CHECK_THROWS_AS(parse_group("mu=;nu=;alpha=1"), InvalidInput);       // no main cycle
    CHECK_THROWS_AS(parse_group("mu=0,2;nu="), InvalidInput);

    nlohmann::json j = g.to_json();
    CHECK(j["key"] == "P3(2;-3|4;0)");
    CHECK(j["n"] == 1);
    CHECK(j["crossings"] == 9);
    CHECK(j["kappa_plus"] == 1);
}

TEST_CASE("derived counts") {
    Type3Grouping g = parse_group("P3(3,1,1,1,1,1;-5,-4|0;0)");
    CHECK(g.rho_plus() == 6);
    CHECK(g.rho_minus() == 2);
    CHECK(g.n() == 4);
    CHECK(g.delta_plus() == 5);
    CHECK(g.delta_minus() == 0);
    CHECK(g.crossings() == 17);
}

TEST_CASE("mirror") {
    CHECK(mirror(parse_group("P3(2;-3|4;0)")).key() == "P3(3;-2|0;-4)");
    CHECK(mirror(parse_group("P3(1;-3|2;0)")).key() == "P3(3;-1|0;-2)");
    for (const auto& g : enumerate_type3(10)) {
        CHECK(mirror(mirror(g)) == g);
        CHECK_NOTHROW(mirror(g).validate());
    }
}

TEST_CASE("enumeration") {
    auto small = enumerate_type3(2);
    CHECK(std::find(small.begin(), small.end(), parse_group("P3(1,1;0|0;0)")) != small.end());
    auto nine = enumerate_type3(9);
    CHECK(std::find(nine.begin(), nine.end(), parse_group("P3(2;-3|4;0)")) != nine.end());
    CHECK(enumerate_type3(6).size() == 55);
    CHECK(enumerate_type3(12).size() == 2064);

    std::set<std::string> keys;
    for (const auto& g : enumerate_type3(12)) {
        CHECK(keys.insert(g.key()).second);
        CHECK((g.rho_plus() + g.rho_minus()) % 2 == 0);
        CHECK(g.delta_minus() == 0);
        CHECK(g.crossings() <= 12);
        CHECK_NOTHROW(g.validate());
    }

    // order is fixed
    auto a = enumerate_type3(8), b = enumerate_type3(8);
    CHECK(a == b);
}

TEST_CASE("enumeration equals the groupings of all small diagrams") {
    std::set<std::string> enumerated;
    for (const auto& g : enumerate_type3(6)) enumerated.insert(g.key());
    std::set<std::string> traced = groupings_from_diagrams(6);
    CHECK(traced.size() == 55);
    CHECK(traced == enumerated);
}

TEST_CASE("component counts") {
    CHECK(component_count({2, -3, 4}) == 2);
    CHECK(component_count({3, 3, 3}) == 1);
    CHECK(component_count({2, 2, 2}) == 3);
    CHECK(component_count({}) == 2);
    for (std::vector<int> s : {std::vector<int>{1, 2}, {2, 2}, {3, -1, 4}, {2, 0, 2}, {5}})
        CHECK(component_count(s) == oracle::oriented_diagrams(s, false).front().components);
}
