#include "pretzel/cli.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

namespace pretzel::cli {

const char* const kCsvHeader = "key,c,E_formula,e_formula,E_engine,e_engine,b0,upper,case,agree_Ee,agree_sandwich,micros";

nlohmann::json SweepRecord::to_json() const {
    nlohmann::json j = {{"key", key},           {"c", c},
                        {"E_formula", E_formula}, {"e_formula", e_formula},
                        {"E_engine", E_engine},   {"e_engine", e_engine},
                        {"b0", b0},               {"upper", upper},
                        {"case", case_id},        {"agree_Ee", agree_Ee},
                        {"agree_sandwich", agree_sandwich}, {"micros", micros}};
    if (!failure.empty()) j["failure"] = failure;
    return j;
}

namespace {

void note(std::string& failure, const std::string& what) {
    if (!failure.empty()) failure += "; ";
    failure += what;
}

}  // namespace

SweepRecord sweep_one(const Type3Grouping& g, HomflyEngine& engine, bool check) {
    SweepRecord r;
    r.key = g.key();
    r.c = g.crossings();
    try {
        LaurentPoly2 h = engine.homfly(g);
        HomflyProfile p = profile(h);
        r.E_engine = p.E;
        r.e_engine = p.e;
        r.b0 = p.b0;

        FormulaEe f = formula_Ee(g);
        r.E_formula = f.delegated() ? p.E : *f.E;
        r.e_formula = f.delegated() ? p.e : *f.e;
        r.agree_Ee = r.E_formula == p.E && r.e_formula == p.e;
        if (!r.agree_Ee) note(r.failure, "E/e differ from engine (" + f.source + ")");
        if (f.sign_class_h.asserted() && !f.sign_class_h.holds(p.p_h)) {
            r.agree_Ee = false;
            note(r.failure, "p_h outside " + f.sign_class_h.describe());
        }
        if (f.sign_class_l.asserted() && !f.sign_class_l.holds(p.p_l)) {
            r.agree_Ee = false;
            note(r.failure, "p_l outside " + f.sign_class_l.describe());
        }

        BraidIndexResult bi = braid_index(g, Policy::Strict, engine);
        r.upper = bi.upper;
        r.case_id = bi.case_id;
        int gap = in_interval_family(g) ? 1 : 0;
        r.agree_sandwich = bi.lower <= bi.upper && bi.consistent && bi.lower == p.b0 && bi.upper - bi.lower == gap;
        if (!r.agree_sandwich) note(r.failure, "bounds inconsistent with clause " + bi.case_id);

        if (check) {
            EngineOptions o;
            o.closed_form_bases = false;
            o.memoize = false;
            HomflyEngine plain(o);
            if (plain.homfly(g) != h) {
                r.agree_Ee = false;
                note(r.failure, "skein-base engine disagrees");
            }
            if (engine.homfly(mirror(g)) != h.mirror()) {
                r.agree_Ee = false;
                note(r.failure, "mirror identity fails");
            }
        }
    } catch (const std::exception& ex) {
        r.agree_Ee = r.agree_sandwich = false;
        note(r.failure, ex.what());
    }
    return r;
}

std::vector<SweepRecord> run_sweep(const SweepOptions& opt, HomflyEngine& engine) {
    std::vector<Type3Grouping> all = enumerate_type3(opt.max_crossings);
    std::vector<SweepRecord> rows(all.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < all.size();) {
            auto t0 = std::chrono::steady_clock::now();
            rows[i] = sweep_one(all[i], engine, opt.check);
            if (opt.timing)
                rows[i].micros = std::chrono::duration_cast<std::chrono::microseconds>(
                                     std::chrono::steady_clock::now() - t0).count();
        }
    };
    int n = std::max(1, opt.workers);
    if (n == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int k = 0; k < n; ++k) pool.emplace_back(work);
    }
    return rows;
}

std::string render_csv(const std::vector<SweepRecord>& rows) {
    std::ostringstream os;
    os << kCsvHeader << "\n";
    auto b = [](bool x) { return x ? "true" : "false"; };
    for (const auto& r : rows)
        os << '"' << r.key << "\"," << r.c << ',' << r.E_formula << ',' << r.e_formula << ',' << r.E_engine << ','
           << r.e_engine << ',' << r.b0 << ',' << r.upper << ',' << r.case_id << ',' << b(r.agree_Ee) << ','
           << b(r.agree_sandwich) << ',' << r.micros << "\n";
    return os.str();
}

std::string render_json(const std::vector<SweepRecord>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(r.to_json());
    return arr.dump(1) + "\n";
}

namespace {

std::string describe_value(const BraidIndexResult& r) {
    if (r.kind == BraidIndexResult::Kind::Exact) return "Exact " + std::to_string(r.lower);
    std::string s = "Interval(" + std::to_string(r.lower) + "," + std::to_string(r.upper) + ")";
    if (r.resolved) s += " resolved " + std::to_string(*r.resolved);
    return s;
}

}  // namespace

std::vector<ExampleRow> run_examples(HomflyEngine& engine) {
    struct Expected {
        const char* label;
        const char* key;
        const char* expected;
        const char* case_prefix;
    };
    static const Expected rows[] = {
        {"(i)", "P3(3,1,1,1,1,1;-5,-4|0;0)", "Exact 5", "MT2e1"},
        {"(ii)", "P3(2,2,2,1,1;-2,-2,-2|0;0)", "Exact 6", ""},
        {"(iii)", "P3(2;-3|4;0)", "Interval(3,4) resolved 4", ""},
        {"(iv)", "P3(2;-3|6;0)", "Exact 4", ""},
        {"(v)", "P3(3,3,2;-3|0;-4,-4)", "Exact 8", "MT2e2"},
        {"(vi)", "P3(3,1,1,1,1,1,1,1;0|4,4,2;0)", "Exact 7", "MT2e1"},
    };
    std::vector<ExampleRow> out;
    for (const auto& s : rows) {
        BraidIndexResult r = braid_index(parse_group(s.key), Policy::Strict, engine);
        ExampleRow row{s.label, s.key, s.expected, describe_value(r) + " [" + r.case_id + "]", false};
        row.pass = describe_value(r) == s.expected && r.case_id.rfind(s.case_prefix, 0) == 0 && r.consistent;
        out.push_back(row);
    }
    return out;
}

namespace {

struct InputArgs {
    std::string strips;
    std::string group;
};

void add_input(CLI::App* sub, InputArgs& in) {
    auto* s = sub->add_option("--strips", in.strips, "strip crossing counts, e.g. 2,-3,4 or 2p,-4a");
    auto* g = sub->add_option("--group", in.group, "grouping, e.g. \"mu=2;nu=3;alpha=2;beta=\" or P3(2;-3|4;0)");
    s->excludes(g);
    g->excludes(s);
}

// a Type 3 grouping from either input form
Type3Grouping grouping_of(const InputArgs& in) {
    if (!in.group.empty()) return parse_group(in.group);
    LinkType t = classify(standardize(parse_strips(in.strips)));
    if (t.kind != LinkKind::Type3) throw InvalidInput("not a Type 3 pretzel link: " + t.name());
    return *t.grouping;
}

void write_out(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + path);
    f << text;
}

int cmd_classify(const InputArgs& in, std::ostream& out) {
    nlohmann::json j;
    if (!in.group.empty()) {
        Type3Grouping g = parse_group(in.group);
        g.validate();
        LinkType t{LinkKind::Type3, g, {}, 2};
        j = t.to_json();
    } else {
        RawPretzel raw = parse_strips(in.strips);
        RawPretzel std_raw = standardize(raw);
        j = classify(std_raw).to_json();
        j["input"] = raw.to_string();
        if (std_raw.strips != raw.strips) j["standardized"] = std_raw.to_string();
    }
    out << j.dump(2) << "\n";
    return Ok;
}

int cmd_bounds(const InputArgs& in, bool conjecture, std::ostream& out, std::ostream& err) {
    Type3Grouping g = grouping_of(in);
    BraidIndexResult r = braid_index(g, conjecture ? Policy::AssumeConjecture : Policy::Strict);
    nlohmann::json j = r.to_json();
    j["formula_source"] = r.formula_source;
    j["plan"] = r.plan.to_json();
    out << j.dump(2) << "\n";
    if (r.lower > r.upper || !r.consistent) {
        err << "sandwich check failed for " << g.key() << "\n";
        return CheckFailed;
    }
    return Ok;
}

int cmd_homfly(const InputArgs& in, const std::string& format, std::ostream& out) {
    LaurentPoly2 h;
    std::string input;
    if (!in.group.empty()) {
        Type3Grouping g = parse_group(in.group);
        g.validate();
        h = default_engine().homfly(g);
        input = g.key();
    } else {
        RawPretzel raw = parse_strips(in.strips);
        h = default_engine().homfly(raw);
        input = raw.to_string();
    }
    HomflyProfile p = profile(h);
    if (format == "json") {
        out << nlohmann::json{{"input", input}, {"homfly", h.to_string()}, {"terms", h.to_json()},
                              {"profile", p.to_json()}}.dump(2)
            << "\n";
    } else {
        out << h.to_string() << "\n";
        out << "E=" << p.E << " e=" << p.e << " b0=" << p.b0 << " p_h=" << p.p_h.to_string()
            << " p_l=" << p.p_l.to_string() << "\n";
    }
    return Ok;
}

int cmd_sweep(const SweepOptions& opt, const std::string& format, const std::string& path, std::ostream& out,
              std::ostream& err) {
    if (opt.max_crossings < 2) throw InvalidInput("--max-crossings must be at least 2");
    if (opt.workers < 1) throw InvalidInput("--workers must be positive");
    HomflyEngine& engine = default_engine();
    std::vector<SweepRecord> rows = run_sweep(opt, engine);
    write_out(format == "json" ? render_json(rows) : render_csv(rows), path, out);

    CacheStats cs = engine.stats();
    err << "groupings " << rows.size() << ", cache hits " << cs.hits << ", misses " << cs.misses << ", evictions "
        << cs.evictions << ", entries " << cs.entries << ", bytes " << cs.bytes << "\n";
    for (const auto& r : rows)
        if (!r.ok()) {
            err << "FAILED " << r.to_json().dump() << "\n";
            return CheckFailed;
        }
    return Ok;
}

int cmd_examples(const std::string& format, const std::string& path, std::ostream& out) {
    std::vector<ExampleRow> rows = run_examples(default_engine());
    std::ostringstream os;
    bool all = true;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"row", r.label}, {"key", r.key}, {"expected", r.expected}, {"computed", r.computed},
                           {"pass", r.pass}});
        os << arr.dump(2) << "\n";
    } else if (format == "csv") {
        os << "row,key,expected,computed,pass\n";
        for (const auto& r : rows)
            os << r.label << ",\"" << r.key << "\",\"" << r.expected << "\",\"" << r.computed << "\","
               << (r.pass ? "pass" : "FAIL") << "\n";
    } else {
        for (const auto& r : rows)
            os << r.label << "  " << r.key << "  expected " << r.expected << "  got " << r.computed << "  "
               << (r.pass ? "pass" : "FAIL") << "\n";
    }
    for (const auto& r : rows) all = all && r.pass;
    write_out(os.str(), path, out);
    return all ? Ok : CheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Braid indices and HOMFLY-PT polynomials of Type 3 pretzel links"};
    app.require_subcommand(1);

    InputArgs classify_in, bounds_in, homfly_in;
    bool conjecture = false;
    std::string format = "csv", homfly_format = "text", examples_format = "text", out_path, examples_path;
    SweepOptions sweep;

    auto* c = app.add_subcommand("classify", "classify a pretzel diagram");
    add_input(c, classify_in);
    auto* b = app.add_subcommand("bounds", "braid index bounds of a Type 3 link");
    add_input(b, bounds_in);
    b->add_flag("--assume-conjecture", conjecture, "report the upper bound as the conjectured value on intervals");
    auto* h = app.add_subcommand("homfly", "HOMFLY-PT polynomial of a pretzel diagram");
    add_input(h, homfly_in);
    h->add_option("--format", homfly_format)->check(CLI::IsMember({"text", "json"}));
    auto* s = app.add_subcommand("sweep", "cross-check every grouping up to a crossing count");
    s->add_option("--max-crossings", sweep.max_crossings)->required();
    s->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--out", out_path);
    s->add_option("--workers", sweep.workers);
    s->add_flag("--check", sweep.check, "also compare against a cache-free engine and the mirror identity");
    s->add_flag("--timing", sweep.timing, "fill the micros column");
    auto* e = app.add_subcommand("examples", "reproduce the worked braid-index examples");
    e->add_option("--format", examples_format)->check(CLI::IsMember({"text", "csv", "json"}));
    e->add_option("--out", examples_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex, out, err);
        return code == 0 ? Ok : Usage;
    }

    auto need_input = [&](const InputArgs& in) {
        if (in.strips.empty() && in.group.empty()) throw CLI::RequiredError("--strips or --group");
    };
    try {
        if (*c) {
            need_input(classify_in);
            return cmd_classify(classify_in, out);
        }
        if (*b) {
            need_input(bounds_in);
            return cmd_bounds(bounds_in, conjecture, out, err);
        }
        if (*h) {
            need_input(homfly_in);
            return cmd_homfly(homfly_in, homfly_format, out);
        }
        if (*s) return cmd_sweep(sweep, format, out_path, out, err);
        if (*e) return cmd_examples(examples_format, examples_path, out);
    } catch (const CLI::Error& ex) {
        err << ex.what() << "\n";
        return Usage;
    } catch (const DispatchGap& ex) {
        err << ex.what() << "\n";
        return CheckFailed;
    } catch (const std::invalid_argument& ex) {
        err << "invalid input: " << ex.what() << "\n";
        return Invalid;
    } catch (const ParseError& ex) {
        err << "invalid input: " << ex.what() << "\n";
        return Invalid;
    }
    return Usage;
}

}  // namespace pretzel::cli
