#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pretzel/homfly_engine.hpp"
#include "pretzel/pretzel.hpp"
#include "pretzel/seifert_stats.hpp"
#include "pretzel/sign_class.hpp"

namespace pretzel {

class DispatchGap : public std::logic_error {
public:
    explicit DispatchGap(const std::string& what) : std::logic_error("dispatch gap: " + what) {}
};

struct FormulaEe {
    std::optional<int> E;  // absent for delegated cases
    std::optional<int> e;
    SignClass sign_class_h;
    SignClass sign_class_l;
    std::string source;

    bool delegated() const { return !E.has_value(); }
    nlohmann::json to_json() const;
};

// Closed-form extreme a-degrees of H with the sign data on p^h, p^l.
FormulaEe formula_Ee(const Type3Grouping& g);

// MFW bound (E-e)/2+1; delegated cases are computed by the engine
int lower_bound(const Type3Grouping& g, HomflyEngine& engine = default_engine());

// Leading data for an alternating diagram without lone crossings.
FormulaEe alternating_profile(const SeifertStats& stats);

struct Clause {
    std::string id;
    int lower = 0;
    int upper = 0;
};

// P3(1;-3|...,4,2;0) -> P3(2;-3|...,4;0) and its mirror; identity elsewhere
Type3Grouping rewrite_lone_pair(const Type3Grouping& g);

// every clause whose hypotheses hold for g, in table order (g taken as given)
std::vector<Clause> theorem_clauses(const Type3Grouping& g);

struct ClauseMatch {
    Clause clause;
    Type3Grouping normalized;  // after mirroring away negative lone crossings
    Type3Grouping rewritten;   // after the lone-pair rewrite
    bool mirrored = false;
    int matches = 0;           // how many clauses held
    bool values_agree = true;  // all matching clauses give the same bounds
};

// normalizes, rewrites and takes the first matching clause; throws DispatchGap
ClauseMatch select_clause(const Type3Grouping& g);

// the groupings whose two bounds differ by one
bool in_interval_family(const Type3Grouping& g);

enum class Policy { Strict, AssumeConjecture };

struct ResolvedInstance {
    std::string key;
    int value;
    std::string note;
};

const std::vector<ResolvedInstance>& resolved_instances();

struct BraidIndexResult {
    enum class Kind { Exact, Interval };

    std::string input;
    Kind kind = Kind::Exact;
    std::string case_id;
    int lower = 0;
    int upper = 0;
    std::optional<int> resolved;
    std::string resolved_note;
    std::optional<int> conjectured;
    int E = 0;
    int e = 0;
    std::string formula_source;
    ReductionPlan plan;
    // the clause bounds equal the MFW bound and the planner's count
    bool consistent = true;

    std::string kind_name() const { return kind == Kind::Exact ? "Exact" : "Interval"; }
    // resolved or conjectured value where available, else the exact value
    std::optional<int> best_value() const;
    nlohmann::json to_json() const;
};

BraidIndexResult braid_index(const Type3Grouping& g, Policy policy = Policy::Strict,
                             HomflyEngine& engine = default_engine());

}  // namespace pretzel
