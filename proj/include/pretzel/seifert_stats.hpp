#pragma once

#include <string>
#include <vector>

#include "pretzel/pretzel.hpp"

namespace pretzel {

// Seifert-circle data of the standard Type 3 diagram of a grouping.
struct SeifertStats {
    int s = 0;
    int c = 0;
    int c_minus = 0;
    int w = 0;
    int delta_plus = 0;
    int delta_minus = 0;
    int r_plus = 0;
    int r_minus = 0;
    int sigma_plus = 0;
    int sigma_minus = 0;

    bool has_lone_crossings() const { return delta_plus + delta_minus + r_plus + r_minus > 0; }
    nlohmann::json to_json() const;
    friend bool operator==(const SeifertStats&, const SeifertStats&) = default;
};

SeifertStats compute_stats(const Type3Grouping& g);

enum class MoveKind { MPMainCycle, MPStrip, NMove, AMove, SpecialLongCircle };

std::string move_name(MoveKind k);

struct Move {
    MoveKind kind;
    int count;
    std::string condition;  // why the move is available on this grouping
};

struct ReductionPlan {
    std::string case_label;
    std::vector<Move> moves;
    int s_initial = 0;
    int final_seifert_count = 0;

    int total_moves() const;
    nlohmann::json to_json() const;
    std::string trace() const;
};

// Seifert-circle reduction moves realizing the constructive braid-index upper bound.
ReductionPlan upper_bound(const Type3Grouping& g);

}  // namespace pretzel
