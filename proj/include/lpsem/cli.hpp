#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lpsem/check.hpp"
#include "lpsem/generate.hpp"
#include "lpsem/ground.hpp"
#include "lpsem/render.hpp"
#include "lpsem/report.hpp"
#include "lpsem/semantics.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitParseError = 2,
    kExitCapExceeded = 3,
    kExitNotDefinite = 4,
    kExitUsage = 64,
};

struct RunConfig {
    /// Program file; "-" reads stdin. `check` generates programs when empty.
    std::string input;
    std::string semantics = "wf";
    std::string format = "text";
    std::size_t cap = kDefaultEnumerationCap;
    std::uint64_t seed = 1;
    GeneratorOptions gen;
    /// Number of seeded programs `check` generates (seeds seed, seed+1, ...).
    std::size_t programs = 1;
    bool trace = false;
    unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void validate(const RunConfig& cfg) {
    if (cfg.format != "text" && cfg.format != "json") throw UsageError("--format must be text or json");
    if (cfg.cap == 0) throw UsageError("--cap must be positive");
    if (cfg.gen.atoms == 0) throw UsageError("--atoms must be positive");
    if (!(cfg.gen.neg_prob >= 0.0 && cfg.gen.neg_prob <= 1.0)) throw UsageError("--neg-prob must lie in [0,1]");
    if (cfg.programs == 0) throw UsageError("--programs must be positive");
    if (cfg.jobs == 0) throw UsageError("--jobs must be positive");
}

inline std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    buf << in.rdbuf();
    return buf.str();
}

inline GroundProgram load_program(const RunConfig& cfg) {
    if (cfg.input.empty()) throw UsageError("no input program given");
    return ground_text(read_input(cfg.input));
}

/// Maps the library's errors onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const EnumerationCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapExceeded;
    } catch (const NotDefiniteError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNotDefinite;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

inline SemanticsKind semantics_from(const RunConfig& cfg) {
    if (auto k = parse_semantics(cfg.semantics)) return *k;
    throw UsageError("unknown semantics '" + cfg.semantics + "'");
}

// ---------------------------------------------------------------------------
// compute

inline void print_report(const GroundProgram& g, const SemanticsReport& r, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == "json") {
        Json j = r.interpretation() ? interpretation_json(g, *r.interpretation()) : model_set_json(g, *r.models());
        if (cfg.trace && !r.trace.empty()) j["trace"] = trace_json(g, r.trace);
        out << j.dump() << '\n';
        return;
    }
    out << "semantics: " << to_string(r.kind) << '\n';
    if (const auto* i = r.interpretation()) {
        out << "model: " << format_interpretation(g, *i) << '\n';
        out << "undefined: " << format_atom_set(g, i->undefined()) << '\n';
        out << "total: " << (r.total ? "yes" : "no") << '\n';
    } else {
        out << "models: " << r.models()->size() << '\n';
        for (const auto& m : *r.models()) out << "  " << format_atom_set(g, m) << '\n';
    }
    if (cfg.trace) {
        for (std::size_t k = 0; k < r.trace.size(); ++k) out << "stage " << k << ": " << format_stage(g, r.trace[k]) << '\n';
    }
}

inline int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        validate(cfg);
        const auto kind = semantics_from(cfg);
        const auto g = load_program(cfg);
        print_report(g, compute_report(g, kind, cfg.cap), cfg, out);
        return static_cast<int>(kExitOk);
    });
}

// ---------------------------------------------------------------------------
// compare

struct CompareRow {
    SemanticsKind kind;
    std::optional<SemanticsReport> report;
    std::string unavailable;
};

inline std::vector<CompareRow> compare_rows(const GroundProgram& g, std::size_t cap) {
    std::vector<CompareRow> rows;
    for (auto k : kAllSemantics) {
        CompareRow row{k, std::nullopt, {}};
        try {
            row.report = compute_report(g, k, cap);
        } catch (const NotDefiniteError&) {
            row.unavailable = "program is not definite";
        } catch (const EnumerationCapExceeded& e) {
            row.unavailable = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string_view set_relation(const std::vector<AtomSet>& a, const std::vector<AtomSet>& b) {
    auto contains_all = [](const std::vector<AtomSet>& x, const std::vector<AtomSet>& y) {
        return std::all_of(y.begin(), y.end(), [&](const AtomSet& m) { return std::find(x.begin(), x.end(), m) != x.end(); });
    };
    const bool sub = contains_all(b, a);
    const bool sup = contains_all(a, b);
    if (sub && sup) return "equal";
    if (sub) return "subset";
    if (sup) return "superset";
    return "different";
}

inline int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        validate(cfg);
        const auto g = load_program(cfg);
        const auto rows = compare_rows(g, cfg.cap);

        Json semantics = Json::array();
        Json agreement = Json::array();
        std::ostringstream text;
        text << std::left;
        for (const auto& row : rows) {
            Json entry;
            entry["name"] = to_string(row.kind);
            text << std::setw(11) << to_string(row.kind);
            if (!row.report) {
                entry["available"] = false;
                entry["reason"] = row.unavailable;
                text << "n/a      (" << row.unavailable << ")\n";
            } else if (const auto* i = row.report->interpretation()) {
                entry["available"] = true;
                entry["total"] = row.report->total;
                entry["model"] = interpretation_json(g, *i);
                text << std::setw(9) << (row.report->total ? "total" : "partial") << format_interpretation(g, *i) << '\n';
            } else {
                const auto& ms = *row.report->models();
                entry["available"] = true;
                entry["models"] = model_set_json(g, ms)["models"];
                entry["count"] = ms.size();
                std::string listed;
                for (const auto& m : ms) listed += (listed.empty() ? "" : " ") + format_atom_set(g, m);
                text << std::setw(9) << (std::to_string(ms.size()) + " model" + (ms.size() == 1 ? "" : "s"))
                     << listed << '\n';
            }
            semantics.push_back(std::move(entry));
        }

        text << "\nagreement:\n";
        for (std::size_t a = 0; a < rows.size(); ++a) {
            for (std::size_t b = a + 1; b < rows.size(); ++b) {
                if (!rows[a].report || !rows[b].report) continue;
                const auto* ia = rows[a].report->interpretation();
                const auto* ib = rows[b].report->interpretation();
                const auto* ma = rows[a].report->models();
                const auto* mb = rows[b].report->models();
                std::string_view rel;
                if (ia && ib) {
                    rel = knowledge_relation(*ia, *ib);
                } else if (ma && mb) {
                    rel = set_relation(*ma, *mb);
                } else {
                    continue;
                }
                Json e;
                e["a"] = to_string(rows[a].kind);
                e["b"] = to_string(rows[b].kind);
                e["relation"] = rel;
                agreement.push_back(std::move(e));
                text << "  " << std::setw(11) << to_string(rows[a].kind) << std::setw(11) << to_string(rows[b].kind)
                     << rel << '\n';
            }
        }

        if (cfg.format == "json") {
            Json j;
            j["semantics"] = std::move(semantics);
            j["agreement"] = std::move(agreement);
            out << j.dump() << '\n';
        } else {
            out << text.str();
        }
        return static_cast<int>(kExitOk);
    });
}

// ---------------------------------------------------------------------------
// check

struct CheckSummary {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    /// First failure (or, with no failure, first skip reason), tagged with its seed.
    std::string witness;

    CheckStatus status() const {
        if (failed) return CheckStatus::fail;
        if (passed) return CheckStatus::pass;
        return CheckStatus::skipped;
    }
};

inline CheckLimits limits_from(const RunConfig& cfg) {
    CheckLimits limits;
    limits.enumeration_cap = cfg.cap;
    return limits;
}

/// Runs the check suite over `programs` generated programs with consecutive
/// seeds; results are merged in seed order whatever the job count.
inline std::vector<CheckSummary> check_generated(const RunConfig& cfg) {
    std::vector<std::vector<CheckResult>> per_program(cfg.programs);
    const auto limits = limits_from(cfg);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < cfg.programs; k = next++) {
            auto g = ground(generate_program(cfg.gen, cfg.seed + k));
            per_program[k] = run_checks(g, limits);
        }
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cfg.programs)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<CheckSummary> summary;
    for (std::size_t k = 0; k < per_program.size(); ++k) {
        const auto& results = per_program[k];
        if (summary.empty()) {
            for (const auto& r : results) summary.push_back(CheckSummary{r.name, 0, 0, 0, {}});
        }
        for (std::size_t c = 0; c < results.size(); ++c) {
            auto& s = summary[c];
            const auto& r = results[c];
            const std::string tagged = "seed " + std::to_string(cfg.seed + k) + ": " + r.witness;
            switch (r.status) {
                case CheckStatus::pass: ++s.passed; break;
                case CheckStatus::fail:
                    if (!s.failed) s.witness = tagged;
                    ++s.failed;
                    break;
                case CheckStatus::skipped:
                    if (!s.failed && s.witness.empty()) s.witness = tagged;
                    ++s.skipped;
                    break;
            }
        }
    }
    for (auto& s : summary)
        if (s.status() == CheckStatus::pass) s.witness.clear();
    return summary;
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        validate(cfg);
        bool any_failed = false;
        if (!cfg.input.empty()) {
            const auto g = load_program(cfg);
            const auto results = run_checks(g, limits_from(cfg));
            Json checks = Json::array();
            for (const auto& r : results) {
                any_failed = any_failed || r.status == CheckStatus::fail;
                Json e;
                e["name"] = r.name;
                e["status"] = to_string(r.status);
                e["witness"] = r.witness.empty() ? Json(nullptr) : Json(r.witness);
                checks.push_back(std::move(e));
                if (cfg.format == "text") {
                    out << std::left << std::setw(9) << to_string(r.status) << r.name;
                    if (!r.witness.empty()) out << "  (" << r.witness << ')';
                    out << '\n';
                }
            }
            if (cfg.format == "json") {
                Json j;
                j["checks"] = std::move(checks);
                out << j.dump() << '\n';
            }
        } else {
            const auto summary = check_generated(cfg);
            Json checks = Json::array();
            if (cfg.format == "text") {
                out << "# seed " << cfg.seed << ", " << cfg.programs << " program(s), atoms " << cfg.gen.atoms
                    << ", clauses " << cfg.gen.clauses << ", max body " << cfg.gen.max_body << ", neg-prob "
                    << cfg.gen.neg_prob << (cfg.gen.stratified ? ", stratified" : "") << '\n';
            }
            for (const auto& s : summary) {
                any_failed = any_failed || s.status() == CheckStatus::fail;
                Json e;
                e["name"] = s.name;
                e["status"] = to_string(s.status());
                e["witness"] = s.witness.empty() ? Json(nullptr) : Json(s.witness);
                e["passed"] = s.passed;
                e["failed"] = s.failed;
                e["skipped"] = s.skipped;
                checks.push_back(std::move(e));
                if (cfg.format == "text") {
                    out << std::left << std::setw(9) << to_string(s.status()) << std::setw(28) << s.name << s.passed
                        << " passed, " << s.failed << " failed, " << s.skipped << " skipped";
                    if (!s.witness.empty()) out << "  (" << s.witness << ')';
                    out << '\n';
                }
            }
            if (cfg.format == "json") {
                Json j;
                j["seed"] = cfg.seed;
                j["programs"] = cfg.programs;
                j["checks"] = std::move(checks);
                out << j.dump() << '\n';
            }
        }
        return static_cast<int>(any_failed ? kExitFailure : kExitOk);
    });
}

// ---------------------------------------------------------------------------
// gen

inline int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        validate(cfg);
        const auto text = to_string(generate_program(cfg.gen, cfg.seed));
        if (cfg.format == "json") {
            Json j;
            j["seed"] = cfg.seed;
            j["program"] = text;
            out << j.dump() << '\n';
        } else {
            out << "% seed " << cfg.seed << ", atoms " << cfg.gen.atoms << ", clauses " << cfg.gen.clauses
                << ", max body " << cfg.gen.max_body << ", neg-prob " << cfg.gen.neg_prob
                << (cfg.gen.stratified ? ", stratified" : "") << '\n'
                << text;
        }
        return static_cast<int>(kExitOk);
    });
}

}  // namespace lpsem::cli
