#include "pretzel/seifert_stats.hpp"

#include <algorithm>
#include <sstream>

#include "pretzel/braid_index.hpp"

namespace pretzel {

nlohmann::json SeifertStats::to_json() const {
    return {{"s", s},
            {"c", c},
            {"c_minus", c_minus},
            {"w", w},
            {"delta_plus", delta_plus},
            {"delta_minus", delta_minus},
            {"r_plus", r_plus},
            {"r_minus", r_minus},
            {"sigma_plus", sigma_plus},
            {"sigma_minus", sigma_minus}};
}

SeifertStats compute_stats(const Type3Grouping& g) {
    g.validate();
    SeifertStats st;
    const int kp = g.kappa_plus(), km = g.kappa_minus();
    st.s = 2 * g.n() - kp - km + 2 * g.sum_alpha() + 2 * g.sum_beta();
    st.c = g.crossings();
    st.c_minus = g.sum_nu() + 2 * g.sum_beta();
    st.w = st.c - 2 * st.c_minus;
    st.delta_plus = g.delta_plus();
    st.delta_minus = g.delta_minus();
    st.r_plus = g.sum_alpha() - kp;
    st.r_minus = g.sum_beta() - km;

    auto count = [](const std::vector<int>& v, auto pred) {
        return static_cast<int>(std::count_if(v.begin(), v.end(), pred));
    };
    auto at_least_two = [](int x) { return x >= 2; };
    auto is_one = [](int x) { return x == 1; };
    if (g.n() >= 2) {
        st.sigma_plus = count(g.mu, at_least_two);
        st.sigma_minus = count(g.nu, at_least_two);
    } else if (g.rho_plus() == 1) {
        st.sigma_plus = g.mu.front() >= 2;
        st.sigma_minus = g.nu.front() >= 2;
    } else {
        st.sigma_plus = g.rho_plus() == 2;
        st.sigma_minus = g.rho_minus() == 2;
    }
    st.sigma_plus += count(g.alpha, is_one);
    st.sigma_minus += count(g.beta, is_one);
    return st;
}

std::string move_name(MoveKind k) {
    switch (k) {
        case MoveKind::MPMainCycle: return "MP-main-cycle";
        case MoveKind::MPStrip: return "MP-strip";
        case MoveKind::NMove: return "N-move";
        case MoveKind::AMove: return "A-move";
        case MoveKind::SpecialLongCircle: return "special-long-circle";
    }
    return "?";
}

int ReductionPlan::total_moves() const {
    int t = 0;
    for (const auto& m : moves) t += m.count;
    return t;
}

nlohmann::json ReductionPlan::to_json() const {
    nlohmann::json mv = nlohmann::json::array();
    for (const auto& m : moves) mv.push_back({{"kind", move_name(m.kind)}, {"count", m.count}});
    return {{"case", case_label}, {"moves", mv}, {"s_initial", s_initial}, {"s_final", final_seifert_count}};
}

std::string ReductionPlan::trace() const {
    std::ostringstream os;
    os << case_label << ": s = " << s_initial << "\n";
    int s = s_initial;
    for (const auto& m : moves) {
        s -= m.count;
        os << "  " << move_name(m.kind) << " x" << m.count << " -> s = " << s;
        if (!m.condition.empty()) os << "  (" << m.condition << ")";
        os << "\n";
    }
    os << "  braid index <= " << final_seifert_count << "\n";
    return os.str();
}

ReductionPlan upper_bound(const Type3Grouping& g) {
    ClauseMatch m = select_clause(g);
    const Type3Grouping& h = m.normalized;
    const int n = h.n(), kp = h.kappa_plus(), dp = h.delta_plus();
    const int r = h.sum_alpha() - kp + h.sum_beta() - h.kappa_minus();
    const std::string& id = m.clause.id;

    ReductionPlan plan;
    plan.case_label = id;
    plan.s_initial = compute_stats(g).s;
    auto add = [&](MoveKind k, int count, std::string why) {
        if (count > 0) plan.moves.push_back(Move{k, count, std::move(why)});
    };
    auto strips = [&] { add(MoveKind::MPStrip, r, "extra circles inside antiparallel strips"); };
    auto is = [&](std::initializer_list<const char*> ids) {
        return std::any_of(ids.begin(), ids.end(), [&](const char* x) { return id == x; });
    };
    const bool cycle = id.rfind("MT2e1", 0) == 0;
    const bool cycle2 = id.rfind("MT2e2", 0) == 0;

    if (cycle || (cycle2 && dp > kp)) {
        add(MoveKind::AMove, kp, "lone crossing next to each antiparallel strip");
        add(MoveKind::MPMainCycle, std::min(dp - kp, n - 1), "remaining lone crossings on the main cycle");
        strips();
    } else if (cycle2) {
        add(MoveKind::AMove, dp, "every lone crossing faces an antiparallel strip");
        strips();
    } else if (is({"MT1e0.1"})) {
        add(MoveKind::SpecialLongCircle, 1, "adjacent parallel strips");
    } else if (is({"MT1e0.2", "BASIC"})) {
    } else if (is({"MT1e1.1", "MT1e1.4"})) {
        add(MoveKind::AMove, 1, "single lone crossing");
        add(MoveKind::SpecialLongCircle, 1, "strips of 1 and 3 crossings");
    } else if (is({"MT1e1.2", "MT1e1.5"})) {
        add(MoveKind::AMove, 1, "single lone crossing");
        add(MoveKind::SpecialLongCircle, 1, "strips of 1 and 3 crossings");
        strips();
    } else if (is({"MT1e1.3", "MT1e1.6"})) {
        add(MoveKind::NMove, 1, "strips of 1 and 2 crossings");
        add(MoveKind::SpecialLongCircle, 1, "no antiparallel strip of length 1");
        strips();
    } else if (is({"MT1e2.1", "MT1e2.6"})) {
        add(MoveKind::SpecialLongCircle, 1, "adjacent parallel strips");
        strips();
    } else if (is({"MT1e2.2", "MT1e2.7", "MT1e4.3", "MT1e4.4"})) {
        add(MoveKind::AMove, 1, "single lone crossing");
        strips();
    } else if (is({"MT1e2.3", "MT1e2.4", "MT1e2.5", "MT1e2.8", "MT1e2.9", "MT1e2.10", "MT1e6.1", "MT1e6.2"})) {
        add(MoveKind::NMove, 1, "parallel strip of one crossing");
        strips();
    } else if (is({"MT1e5.1", "MT1e5.2"})) {
        add(MoveKind::AMove, 2, "two lone crossings");
        strips();
    } else if (is({"MT1e6.3", "MT1e6.4", "MT1e6.5", "MT1e6.6"})) {
        add(MoveKind::AMove, 1, "one lone crossing");
        strips();
    } else {
        strips();
    }
    plan.final_seifert_count = plan.s_initial - plan.total_moves();
    return plan;
}

}  // namespace pretzel
