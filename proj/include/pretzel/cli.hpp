#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pretzel/braid_index.hpp"

namespace pretzel::cli {

enum ExitCode { Ok = 0, Usage = 1, Invalid = 2, CheckFailed = 3 };

struct SweepRecord {
    std::string key;
    int c = 0;
    int E_formula = 0, e_formula = 0;
    int E_engine = 0, e_engine = 0;
    int b0 = 0;
    int upper = 0;
    std::string case_id;
    bool agree_Ee = false;
    bool agree_sandwich = false;
    long long micros = 0;
    std::string failure;  // empty when both flags hold

    bool ok() const { return agree_Ee && agree_sandwich; }
    nlohmann::json to_json() const;
};

struct SweepOptions {
    int max_crossings = 12;
    int workers = 1;
    // re-evaluate with a cache-free engine built on skein bases and test the mirror identity
    bool check = false;
    // micros column holds wall time; off keeps reports byte-identical between runs
    bool timing = false;
};

SweepRecord sweep_one(const Type3Grouping& g, HomflyEngine& engine, bool check);
std::vector<SweepRecord> run_sweep(const SweepOptions& opt, HomflyEngine& engine);

extern const char* const kCsvHeader;
std::string render_csv(const std::vector<SweepRecord>& rows);
std::string render_json(const std::vector<SweepRecord>& rows);

struct ExampleRow {
    std::string label;
    std::string key;
    std::string expected;
    std::string computed;
    bool pass = false;
};

std::vector<ExampleRow> run_examples(HomflyEngine& engine);

// argv-style entry point; returns the process exit code
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pretzel::cli
