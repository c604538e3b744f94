#include "diagram_oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace oracle {

using pretzel::LaurentPoly2;

namespace {

using Point = std::array<int, 3>;  // strip, level, position

struct Edge {
    Point u, v;
    char kind;  // 'x' crossing leg, 't' top closing arc, 'b' bottom closing arc, 'e' other outer arc
    int strip = 0, level = 0;
    char leg = 0;  // 'A' runs from position 0 down to 1, 'B' from 1 down to 0
};

struct Step {
    int edge;
    Point from, to;
};

struct Diagram {
    std::vector<int> strips;
    std::vector<Edge> edges;
    std::map<Point, std::vector<int>> incident;
    std::vector<std::vector<Step>> comps;

    explicit Diagram(const std::vector<int>& s) : strips(s) {
        const int k = static_cast<int>(s.size());
        auto link = [&](Point u, Point v, Edge e) {
            e.u = u;
            e.v = v;
            incident[u].push_back(static_cast<int>(edges.size()));
            incident[v].push_back(static_cast<int>(edges.size()));
            edges.push_back(e);
        };
        for (int i = 0; i < k; ++i) {
            int m = std::abs(s[i]);
            for (int j = 0; j < m; ++j) {
                link({i, j, 0}, {i, j + 1, 1}, {{}, {}, 'x', i, j, 'A'});
                link({i, j, 1}, {i, j + 1, 0}, {{}, {}, 'x', i, j, 'B'});
            }
            int i2 = (i + 1) % k, m2 = std::abs(s[i2]);
            link({i, 0, 1}, {i2, 0, 0}, {{}, {}, i == k - 1 ? 't' : 'e'});
            link({i, m, 1}, {i2, m2, 0}, {{}, {}, i == k - 1 ? 'b' : 'e'});
        }
        std::vector<bool> used(edges.size(), false);
        auto walk = [&](int eid, Point u) {
            std::vector<Step> seq;
            while (!used[eid]) {
                used[eid] = true;
                const Edge& e = edges[eid];
                Point v = e.u == u ? e.v : e.u;
                seq.push_back({eid, u, v});
                int next = eid;
                for (int x : incident[v])
                    if (x != eid) {
                        next = x;
                        break;
                    }
                eid = next;
                u = v;
            }
            return seq;
        };
        int top = 0;
        while (edges[top].kind != 't') ++top;
        comps.push_back(walk(top, {k - 1, 0, 1}));
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (!used[i]) comps.push_back(walk(static_cast<int>(i), edges[i].u));
    }
};

using Visit = std::pair<int, bool>;  // crossing id, passes over
using Visits = std::vector<std::vector<Visit>>;

LaurentPoly2 mono(int c, int z, int a) { return LaurentPoly2::monomial(c, z, a); }

class Descender {
public:
    LaurentPoly2 eval(const Visits& vis, const std::map<int, int>& sign) {
        std::vector<int> key;
        for (const auto& c : vis) {
            key.push_back(-1);
            for (auto [x, o] : c) key.push_back(2 * x + o);
        }
        key.push_back(-2);
        for (auto [x, s] : sign) key.push_back(2 * x + (s > 0));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        LaurentPoly2 r = compute(vis, sign);
        memo_.emplace(std::move(key), r);
        return r;
    }

private:
    LaurentPoly2 compute(const Visits& vis, const std::map<int, int>& sign) {
        // a crossing met twice in a row is a kink
        for (std::size_t ci = 0; ci < vis.size(); ++ci) {
            const auto& c = vis[ci];
            const std::size_t n = c.size();
            for (std::size_t t = 0; n >= 2 && t < n; ++t) {
                if (c[t].first != c[(t + 1) % n].first) continue;
                int x = c[t].first;
                Visits nv = vis;
                std::erase_if(nv[ci], [x](const Visit& v) { return v.first == x; });
                auto s = sign;
                s.erase(x);
                return eval(nv, s);
            }
        }

        int bad = -1;
        std::map<int, bool> seen;
        for (const auto& c : vis) {
            for (auto [x, o] : c) {
                if (seen.count(x)) continue;
                seen[x] = true;
                if (!o) {
                    bad = x;
                    break;
                }
            }
            if (bad >= 0) break;
        }
        if (bad < 0) return delta_pow(static_cast<unsigned>(vis.size() - 1));

        const int x = bad;
        Visits sw = vis;
        for (auto& c : sw)
            for (auto& v : c)
                if (v.first == x) v.second = !v.second;
        auto s2 = sign;
        s2[x] = -sign.at(x);
        LaurentPoly2 h_switched = eval(sw, s2);

        std::vector<std::pair<std::size_t, std::size_t>> locs;
        for (std::size_t ci = 0; ci < vis.size(); ++ci)
            for (std::size_t t = 0; t < vis[ci].size(); ++t)
                if (vis[ci][t].first == x) locs.push_back({ci, t});
        auto [c1, t1] = locs[0];
        auto [c2, t2] = locs[1];
        Visits nv;
        if (c1 != c2) {
            for (std::size_t i = 0; i < vis.size(); ++i)
                if (i != c1 && i != c2) nv.push_back(vis[i]);
            std::vector<Visit> merged;
            const auto& a = vis[c1];
            const auto& b = vis[c2];
            for (std::size_t i = 1; i < b.size(); ++i) merged.push_back(b[(t2 + i) % b.size()]);
            for (std::size_t i = 1; i < a.size(); ++i) merged.push_back(a[(t1 + i) % a.size()]);
            nv.push_back(merged);
        } else {
            const auto& c = vis[c1];
            for (std::size_t i = 0; i < vis.size(); ++i)
                if (i != c1) nv.push_back(vis[i]);
            nv.emplace_back(c.begin() + t1 + 1, c.begin() + t2);
            std::vector<Visit> rest(c.begin() + t2 + 1, c.end());
            rest.insert(rest.end(), c.begin(), c.begin() + t1);
            nv.push_back(rest);
        }
        auto s3 = sign;
        s3.erase(x);
        LaurentPoly2 h_smoothed = eval(nv, s3);
        if (sign.at(x) > 0) return mono(1, 0, -2) * h_switched + mono(1, 1, -1) * h_smoothed;
        return mono(1, 0, 2) * h_switched - mono(1, 1, 1) * h_smoothed;
    }

    static LaurentPoly2 delta_pow(unsigned k) {
        return (mono(1, -1, 1) - mono(1, -1, -1)).pow(k);
    }

    std::map<std::vector<int>, LaurentPoly2> memo_;
};


struct Oriented {
    std::vector<std::pair<Point, Point>> dir;  // edge -> (from, to)
    std::vector<bool> reversed;
    std::vector<char> classes;
};

Oriented orient(const Diagram& d, unsigned flips) {
    const auto& strips = d.strips;
    const int k = static_cast<int>(strips.size());
    const std::size_t nc = d.comps.size();
    Oriented o;
    o.dir.resize(d.edges.size());
    o.reversed.assign(nc, false);
    for (std::size_t ci = 0; ci < nc; ++ci) {
        o.reversed[ci] = ci > 0 && ((flips >> (ci - 1)) & 1);
        for (const auto& st : d.comps[ci])
            o.dir[st.edge] = o.reversed[ci] ? std::pair{st.to, st.from} : std::pair{st.from, st.to};
    }
    for (int i = 0; i < k; ++i) {
        bool down[2] = {false, false};
        for (int p = 0; p < 2; ++p) {
            Point pt{i, 0, p};
            if (strips[i] != 0) {
                for (std::size_t e = 0; e < d.edges.size(); ++e) {
                    const Edge& ed = d.edges[e];
                    if (ed.kind == 'x' && ed.strip == i && ed.level == 0 && (ed.u == pt || ed.v == pt)) {
                        down[p] = o.dir[e].first == pt;
                        break;
                    }
                }
            } else {
                Point other = p == 0 ? Point{(i - 1 + k) % k, 0, 1} : Point{(i + 1) % k, 0, 0};
                for (std::size_t e = 0; e < d.edges.size(); ++e) {
                    const Edge& ed = d.edges[e];
                    if (ed.kind != 'x' && ((ed.u == pt && ed.v == other) || (ed.u == other && ed.v == pt))) {
                        down[p] = o.dir[e].second == pt;
                        break;
                    }
                }
            }
        }
        o.classes.push_back(down[0] == down[1] ? 'p' : 'a');
    }
    return o;
}

LaurentPoly2 descend(const Diagram& d, const Oriented& o) {
    const auto& strips = d.strips;
    const int k = static_cast<int>(strips.size());
    // over strand chosen so that the crossing sign equals the sign of the entry
    std::map<std::pair<int, int>, char> over;
    for (int i = 0; i < k; ++i) {
        int h = (strips[i] > 0 ? 1 : -1) * (o.classes[i] == 'p' ? 1 : -1);
        for (int j = 0; j < std::abs(strips[i]); ++j) over[{i, j}] = h > 0 ? 'B' : 'A';
    }
    auto vec = [&](int e) -> std::pair<int, int> {
        bool is_down = o.dir[e].first[1] < o.dir[e].second[1];
        if (d.edges[e].leg == 'A') return is_down ? std::pair{1, -1} : std::pair{-1, 1};
        return is_down ? std::pair{-1, -1} : std::pair{1, 1};
    };
    std::map<std::pair<int, int>, std::map<char, int>> legs;
    for (std::size_t e = 0; e < d.edges.size(); ++e)
        if (d.edges[e].kind == 'x') legs[{d.edges[e].strip, d.edges[e].level}][d.edges[e].leg] = static_cast<int>(e);
    for (const auto& [x, lg] : legs) {
        char ov = over[x];
        auto a = vec(lg.at(ov));
        auto b = vec(lg.at(ov == 'A' ? 'B' : 'A'));
        int sg = a.first * b.second - a.second * b.first > 0 ? 1 : -1;
        if (sg != (strips[x.first] > 0 ? 1 : -1))
            throw std::logic_error("diagram crossing sign disagrees with the strip sign");
    }

    std::map<std::pair<int, int>, int> id;
    std::map<int, int> sign;
    Visits vis;
    for (std::size_t ci = 0; ci < d.comps.size(); ++ci) {
        std::vector<Visit> seq;
        std::vector<int> order;
        for (const auto& st : d.comps[ci]) order.push_back(st.edge);
        if (o.reversed[ci]) std::reverse(order.begin(), order.end());
        for (int e : order) {
            const Edge& ed = d.edges[e];
            if (ed.kind != 'x') continue;
            std::pair<int, int> x{ed.strip, ed.level};
            auto [it, fresh] = id.emplace(x, static_cast<int>(id.size()));
            if (fresh) sign[it->second] = strips[x.first] > 0 ? 1 : -1;
            seq.push_back({it->second, ed.leg == over[x]});
        }
        vis.push_back(std::move(seq));
    }
    Descender desc;
    return desc.eval(vis, sign);
}

// oriented smoothing of every crossing; each leg is cut at its crossing and
// its start is joined to the end of the partner leg
SeifertData seifert(const Diagram& d, const Oriented& o) {
    std::map<Point, int> outgoing;
    for (std::size_t e = 0; e < d.edges.size(); ++e) outgoing[o.dir[e].first] = static_cast<int>(e);
    std::map<std::pair<int, int>, std::map<char, int>> legs;
    for (std::size_t e = 0; e < d.edges.size(); ++e)
        if (d.edges[e].kind == 'x') legs[{d.edges[e].strip, d.edges[e].level}][d.edges[e].leg] = static_cast<int>(e);

    std::vector<int> circle(d.edges.size(), -1);
    SeifertData sd;
    for (std::size_t start = 0; start < d.edges.size(); ++start) {
        if (circle[start] >= 0) continue;
        int e = static_cast<int>(start);
        while (circle[e] < 0) {
            circle[e] = sd.circles;
            const Edge& ed = d.edges[e];
            Point next = o.dir[e].second;
            if (ed.kind == 'x') {
                int partner = legs[{ed.strip, ed.level}].at(ed.leg == 'A' ? 'B' : 'A');
                next = o.dir[partner].second;
            }
            e = outgoing.at(next);
        }
        ++sd.circles;
    }
    for (const auto& [x, lg] : legs)
        sd.crossings.push_back({circle[lg.at('A')], circle[lg.at('B')], d.strips[x.first] > 0 ? 1 : -1});
    return sd;
}

}  // namespace

std::vector<OrientedDiagram> oriented_diagrams(const std::vector<int>& strips, bool with_homfly) {
    if (strips.empty()) throw std::invalid_argument("oracle needs at least one strip");
    const Diagram d(strips);
    const std::size_t nc = d.comps.size();
    std::vector<OrientedDiagram> out;
    for (unsigned flips = 0; flips < (1u << (nc - 1)); ++flips) {
        Oriented o = orient(d, flips);
        OrientedDiagram od;
        od.classes = o.classes;
        od.components = static_cast<int>(nc);
        od.seifert = seifert(d, o);
        if (with_homfly) od.homfly = descend(d, o);
        out.push_back(std::move(od));
    }
    return out;
}

}  // namespace oracle
