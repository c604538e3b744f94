#include "pretzel/braid_index.hpp"

#include <algorithm>

namespace pretzel {

namespace {

struct Facts {
    int rp, rm, kp, km, dp, dm, sa, sb, n;
    int mu1 = 0, nu1 = 0;
    int am = 0, bm = 0, a2 = 0, b2 = 0;  // 0 when absent
    bool one;

    explicit Facts(const Type3Grouping& g)
        : rp(g.rho_plus()), rm(g.rho_minus()), kp(g.kappa_plus()), km(g.kappa_minus()),
          dp(g.delta_plus()), dm(g.delta_minus()), sa(g.sum_alpha()), sb(g.sum_beta()), n(g.n()),
          one(rp == 1 && rm == 1) {
        if (rp) mu1 = g.mu.front();
        if (rm) nu1 = g.nu.front();
        if (kp) am = g.alpha.back();
        if (km) bm = g.beta.back();
        if (kp >= 2) a2 = g.alpha[kp - 2];
        if (km >= 2) b2 = g.beta[km - 2];
    }
};

// 2n minus the Seifert circles removable around the main cycle
int cycle_value(int n, int lone, int kappa, int extra) {
    return 2 * n - std::min(lone, kappa) - std::min(std::max(lone - kappa, 0), n - 1) + extra;
}

}  // namespace

std::vector<Clause> theorem_clauses(const Type3Grouping& g) {
    const Facts f(g);
    const int rp = f.rp, rm = f.rm, kp = f.kp, km = f.km, dp = f.dp, dm = f.dm;
    const int Sa = f.sa, Sb = f.sb, n = f.n, mu1 = f.mu1, nu1 = f.nu1;
    const int am = f.am, bm = f.bm, a2 = f.a2, b2 = f.b2;
    std::vector<Clause> out;
    auto add = [&](const char* id, bool cond, int lo, int hi) {
        if (cond) out.push_back(Clause{id, lo, hi});
    };
    auto exact = [&](const char* id, bool cond, int v) { add(id, cond, v, v); };

    if (rp + rm == 2) {
        if (f.one) {
            exact("MT1e0.1", kp == 0 && km == 0 && std::abs(mu1 - nu1) == 1, 1);
            exact("MT1e0.2", kp == 0 && km == 0 && std::abs(mu1 - nu1) != 1, 2);
            exact("MT1e1.1", km == 0 && kp == 1 && mu1 == 1 && nu1 == 3 && am == 1, Sa);
            exact("MT1e1.2", km == 0 && kp > 1 && mu1 == 1 && nu1 == 3 && am == 1 && a2 > 2, Sa);
            exact("MT1e1.3", km == 0 && kp > 0 && mu1 == 1 && nu1 == 2 && am > 1, Sa);
            exact("MT1e1.4", kp == 0 && km == 1 && nu1 == 1 && mu1 == 3 && bm == 1, Sb);
            exact("MT1e1.5", kp == 0 && km > 1 && nu1 == 1 && mu1 == 3 && bm == 1 && b2 > 2, Sb);
            exact("MT1e1.6", kp == 0 && km > 0 && nu1 == 1 && mu1 == 2 && bm > 1, Sb);
            exact("MT1e2.1", km == 0 && kp > 0 && mu1 > 1 && nu1 == mu1 + 1 && am > mu1, 1 + Sa);
            exact("MT1e2.2", km == 0 && kp > 1 && mu1 == 1 && nu1 == 3 && am == 1 && a2 == 1, 1 + Sa);
            exact("MT1e2.3", km == 0 && kp > 0 && mu1 == 1 && nu1 == 2 && am == 1, 1 + Sa);
            exact("MT1e2.4", km == 0 && kp > 0 && mu1 == 1 && nu1 == 3 && am > 1, 1 + Sa);
            exact("MT1e2.5", km == 0 && kp > 0 && mu1 == 1 && nu1 >= 4, 1 + Sa);
            exact("MT1e2.6", kp == 0 && km > 0 && nu1 > 1 && mu1 == nu1 + 1 && bm > nu1, 1 + Sb);
            exact("MT1e2.7", kp == 0 && km > 1 && mu1 == 3 && nu1 == 1 && bm == 1 && b2 == 1, 1 + Sb);
            exact("MT1e2.8", kp == 0 && km > 0 && mu1 == 2 && nu1 == 1 && bm == 1, 1 + Sb);
            exact("MT1e2.9", kp == 0 && km > 0 && mu1 == 3 && nu1 == 1 && bm > 1, 1 + Sb);
            exact("MT1e2.10", kp == 0 && km > 0 && mu1 >= 4 && nu1 == 1, 1 + Sb);
            exact("MT1e3.1", km == 0 && kp > 0 && mu1 > 1 && nu1 == mu1 + 1 && am == 1, 2 + Sa);
            exact("MT1e3.2", km == 0 && kp > 0 && mu1 > 1 && nu1 != mu1 + 1, 2 + Sa);
            exact("MT1e3.4", kp == 0 && km > 0 && nu1 > 1 && mu1 == nu1 + 1 && bm == 1, 2 + Sb);
            exact("MT1e3.5", kp == 0 && km > 0 && nu1 > 1 && mu1 != nu1 + 1, 2 + Sb);
            add("MT1e4.1", km == 0 && kp > 0 && mu1 > 1 && nu1 == mu1 + 1 && am > 1 && am <= mu1, 1 + Sa, 2 + Sa);
            add("MT1e4.2", kp == 0 && km > 0 && nu1 > 1 && mu1 == nu1 + 1 && bm > 1 && bm <= nu1, 1 + Sb, 2 + Sb);
            add("MT1e4.3", km == 0 && kp > 1 && mu1 == 1 && nu1 == 3 && am == 1 && a2 == 2, Sa, 1 + Sa);
            add("MT1e4.4", kp == 0 && km > 1 && mu1 == 3 && nu1 == 1 && bm == 1 && b2 == 2, Sb, 1 + Sb);
            exact("MT1e6.1", km > 0 && kp > 0 && mu1 == 1 && nu1 >= 2, 1 + Sa + Sb);
            exact("MT1e6.2", kp > 0 && km > 0 && mu1 >= 2 && nu1 == 1, 1 + Sa + Sb);
            exact("MT1e7.1", km > 0 && mu1 > 1 && nu1 == mu1 + 1, 2 + Sa + Sb);
            exact("MT1e7.2", kp > 0 && nu1 > 1 && mu1 == nu1 + 1, 2 + Sa + Sb);
            exact("MT1e7.3", mu1 > 1 && nu1 > 1 && std::abs(mu1 - nu1) != 1 && kp + km > 0, 2 + Sa + Sb);
        }
        exact("MT1e3.3", rp == 0 && rm == 2 && km == 0 && kp > 0, 2 + Sa);
        exact("MT1e3.6", rp == 2 && rm == 0 && kp == 0 && km > 0, 2 + Sb);
        exact("MT1e5.1", rp == 2 && dp == 2 && rm == 0 && kp >= 2, Sa + Sb);
        exact("MT1e5.2", rm == 2 && dm == 2 && rp == 0 && km >= 2, Sa + Sb);
        exact("MT1e6.3", rp == 2 && rm == 0 && dp >= 1 && kp == 1, 1 + Sa + Sb);
        exact("MT1e6.4", rm == 2 && rp == 0 && dm >= 1 && km == 1, 1 + Sa + Sb);
        exact("MT1e6.5", rp == 2 && rm == 0 && dp == 1 && kp >= 1, 1 + Sa + Sb);
        exact("MT1e6.6", rm == 2 && rp == 0 && dm == 1 && km >= 1, 1 + Sa + Sb);
        exact("MT1e7.4", rp == 2 && rm == 0 && kp > 0 && dp == 0, 2 + Sa + Sb);
        exact("MT1e7.5", rm == 2 && rp == 0 && km > 0 && dm == 0, 2 + Sa + Sb);
        // closed 2-braids with no antiparallel strips
        exact("BASIC", rp * rm == 0 && kp + km == 0, 2);
    } else {
        exact("MT2e1.1", dp > rm + kp, 2 * n - kp - std::min(dp - kp, n - 1) + Sa + Sb);
        exact("MT2e1.2", dm > rp + km, 2 * n - km - std::min(dm - km, n - 1) + Sa + Sb);
        // when every main-cycle crossing pair is lone on one side the printed value drops too many circles
        int v1 = cycle_value(n, dp, kp, Sa + Sb), v2 = cycle_value(n, dm, km, Sa + Sb);
        exact(v1 == 2 * n - dp + Sa + Sb ? "MT2e2.1" : "MT2e2.1-boundary", dm == 0 && dp <= rm + kp, v1);
        exact(v2 == 2 * n - dm + Sa + Sb ? "MT2e2.2" : "MT2e2.2-boundary", dp == 0 && dm <= rp + km, v2);
    }
    return out;
}

Type3Grouping rewrite_lone_pair(const Type3Grouping& g) {
    const Facts f(g);
    if (f.one && f.mu1 == 1 && f.nu1 == 3 && f.km == 0 && f.kp >= 2 && f.am == 1 && f.a2 == 2) {
        std::vector<int> alpha(g.alpha.begin(), g.alpha.end() - 1);
        return Type3Grouping::make({2}, {3}, alpha, {});
    }
    if (f.one && f.nu1 == 1 && f.mu1 == 3 && f.kp == 0 && f.km >= 2 && f.bm == 1 && f.b2 == 2) {
        std::vector<int> beta(g.beta.begin(), g.beta.end() - 1);
        return Type3Grouping::make({3}, {2}, {}, beta);
    }
    return g;
}

ClauseMatch select_clause(const Type3Grouping& g) {
    g.validate();
    ClauseMatch m{{}, g, g, false, 0, true};
    if (g.delta_minus() > 0) {
        m.normalized = mirror(g);
        m.mirrored = true;
    }
    m.rewritten = rewrite_lone_pair(m.normalized);
    auto all = theorem_clauses(m.rewritten);
    if (all.empty()) throw DispatchGap(g.key());
    m.clause = all.front();
    m.matches = static_cast<int>(all.size());
    for (const auto& c : all)
        if (c.lower != m.clause.lower || c.upper != m.clause.upper) m.values_agree = false;
    if (m.rewritten != m.normalized) {
        bool negative_side = m.normalized.kappa_plus() == 0;
        m.clause.id = negative_side ? "MT1e4.4" : "MT1e4.3";
    }
    return m;
}

bool in_interval_family(const Type3Grouping& g) {
    Type3Grouping h = rewrite_lone_pair(g.delta_minus() > 0 ? mirror(g) : g);
    const Facts f(h);
    if (!f.one) return false;
    bool positive = f.mu1 > 1 && f.nu1 == f.mu1 + 1 && f.kp > 0 && f.am > 1 && f.am <= f.mu1 && f.km == 0;
    bool negative = f.nu1 > 1 && f.mu1 == f.nu1 + 1 && f.km > 0 && f.bm > 1 && f.bm <= f.nu1 && f.kp == 0;
    return positive || negative;
}

const std::vector<ResolvedInstance>& resolved_instances() {
    static const std::vector<ResolvedInstance> table = [] {
        const char* doubled = "MFW bound of the parallel double forces the upper value";
        const char* tripled = "MFW bound of the parallel triple forces the upper value";
        return std::vector<ResolvedInstance>{
            {"P3(2;-3|4;0)", 4, doubled},     {"P3(2;-3|4,4;0)", 6, doubled},
            {"P3(2;-3|4,4,4;0)", 8, doubled}, {"P3(2;-3|6,4;0)", 7, doubled},
            {"P3(4;-5|4;0)", 4, doubled},     {"P3(4;-5|4,4;0)", 6, doubled},
            {"P3(3;-4|6;0)", 5, tripled},     {"P3(4;-5|6;0)", 5, tripled},
            {"P3(3;-4|6,6;0)", 8, tripled},
        };
    }();
    return table;
}

namespace {

const ResolvedInstance* find_resolved(const Type3Grouping& g) {
    for (const auto& key : {g.key(), mirror(g).key()})
        for (const auto& r : resolved_instances())
            if (r.key == key) return &r;
    return nullptr;
}

}  // namespace

std::optional<int> BraidIndexResult::best_value() const {
    if (kind == Kind::Exact) return lower;
    if (resolved) return resolved;
    return conjectured;
}

nlohmann::json BraidIndexResult::to_json() const {
    nlohmann::json j = {{"input", input}, {"case_id", case_id}, {"kind", kind_name()},
                        {"lower", lower},  {"upper", upper},     {"E", E},
                        {"e", e}};
    if (resolved) j["resolved"] = {{"value", *resolved}, {"provenance", resolved_note}};
    if (conjectured) j["conjectured"] = *conjectured;
    return j;
}

BraidIndexResult braid_index(const Type3Grouping& g, Policy policy, HomflyEngine& engine) {
    ClauseMatch m = select_clause(g);
    BraidIndexResult r;
    r.input = g.key();
    r.case_id = m.clause.id;

    FormulaEe f = formula_Ee(g);
    r.formula_source = f.source;
    if (f.delegated()) {
        HomflyProfile p = profile(g, engine);
        r.E = p.E;
        r.e = p.e;
    } else {
        r.E = *f.E;
        r.e = *f.e;
    }
    r.lower = (r.E - r.e) / 2 + 1;
    r.plan = upper_bound(g);
    r.upper = r.plan.final_seifert_count;
    r.consistent = m.values_agree && m.clause.lower == r.lower && m.clause.upper == r.upper;
    r.kind = r.lower == r.upper ? BraidIndexResult::Kind::Exact : BraidIndexResult::Kind::Interval;
    if (r.kind == BraidIndexResult::Kind::Interval) {
        if (const auto* res = find_resolved(g)) {
            r.resolved = res->value;
            r.resolved_note = res->note;
        }
        if (policy == Policy::AssumeConjecture) r.conjectured = r.upper;
    }
    return r;
}

}  // namespace pretzel
