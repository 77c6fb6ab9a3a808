#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpsem/ground.hpp"
#include "lpsem/interp.hpp"
#include "lpsem/levelmap.hpp"
#include "lpsem/operators.hpp"
#include "lpsem/render.hpp"
#include "lpsem/semantics.hpp"

namespace lpsem {

enum class CheckStatus { pass, fail, skipped };

inline std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    /// Failure witness or skip reason; empty on pass.
    std::string witness;
};

struct CheckLimits {
    /// |B_P| bound for stable/maxstable/supported enumeration.
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    /// |B_P| bound for per-subset level-mapping searches.
    std::size_t subset_level_cap = 5;
    /// |B_P| bound for the 3^|B_P| greatest-model searches.
    std::size_t greatest_cap = kDefaultGreatestModelCap;
    /// |B_P| bound for exhaustive stratification search.
    std::size_t stratification_cap = kDefaultLevelSearchCap;
};

namespace detail {

struct CheckFailure {
    std::string witness;
};

struct CheckSkip {
    std::string reason;
};

inline void require(bool cond, const std::function<std::string()>& witness) {
    if (!cond) throw CheckFailure{witness()};
}

inline void within(std::size_t atoms, std::size_t cap) {
    if (atoms > cap) throw CheckSkip{"cap: |B_P| = " + std::to_string(atoms) + " exceeds " + std::to_string(cap)};
}

inline void definite_only(const GroundProgram& g) {
    if (!g.is_definite()) throw CheckSkip{"not applicable: program is not definite"};
}

}  // namespace detail

/// Runs every characterization check applicable to g. Checks over budget are
/// reported as skipped.
inline std::vector<CheckResult> run_checks(const GroundProgram& g, const CheckLimits& limits = {}) {
    using detail::require;
    const std::size_t n = g.size();
    auto fmt = [&](const PartialInterpretation& i) { return format_interpretation(g, i); };
    auto fmt_set = [&](const AtomSet& s) { return format_atom_set(g, s); };

    std::vector<CheckResult> results;
    auto run = [&](std::string name, const std::function<void()>& body) {
        CheckResult r{std::move(name), CheckStatus::pass, {}};
        try {
            body();
        } catch (const detail::CheckFailure& f) {
            r.status = CheckStatus::fail;
            r.witness = f.witness;
        } catch (const detail::CheckSkip& s) {
            r.status = CheckStatus::skipped;
            r.witness = s.reason;
        } catch (const std::exception& e) {
            r.status = CheckStatus::fail;
            r.witness = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    };

    run("wf-alternating", [&] {
        auto direct = well_founded_model(g);
        auto alt = wf_alternating(g).model;
        require(direct == alt, [&] { return "W_P gives " + fmt(direct) + ", GL^2 gives " + fmt(alt); });
    });

    run("maxwf-alternating", [&] {
        auto direct = maxwf_model(g);
        auto alt = maxwf_alternating(g).model;
        require(direct == alt, [&] { return "CW_P gives " + fmt(direct) + ", CGL^2 gives " + fmt(alt); });
    });

    run("fitting-below-wf-and-maxwf", [&] {
        auto fit = fitting_model(g);
        auto wf = well_founded_model(g);
        auto mwf = maxwf_model(g);
        require(knowledge_leq(fit, wf), [&] { return "fitting " + fmt(fit) + " not below wf " + fmt(wf); });
        require(knowledge_leq(fit, mwf), [&] { return "fitting " + fmt(fit) + " not below maxwf " + fmt(mwf); });
    });

    auto greatest_check = [&](Condition c, const PartialInterpretation& expected) {
        detail::within(n, limits.greatest_cap);
        auto r = greatest_model_with_condition(g, c, limits.greatest_cap);
        require(r.greatest.has_value(), [&] {
            return "no greatest model for " + std::string(to_string(c)) + "; maximal " + fmt(r.maximal.at(0)) +
                   " and " + fmt(r.maximal.at(1));
        });
        require(*r.greatest == expected, [&] { return "greatest is " + fmt(*r.greatest) + ", expected " + fmt(expected); });
    };
    run("fitting-level-mapping", [&] { greatest_check(Condition::fitting, fitting_model(g)); });
    run("wf-level-mapping", [&] { greatest_check(Condition::well_founded, well_founded_model(g)); });
    run("maxwf-level-mapping", [&] { greatest_check(Condition::max_circular, maxwf_model(g)); });

    run("maxwf-trace-levels", [&] {
        auto t = maxwf_trace(g);
        auto l = extract_level_mapping_from_trace(t);
        require(check_condition(g, t.result(), l, Condition::max_circular),
                [&] { return "stage levels of " + fmt(t.result()) + " violate (CW)"; });
    });

    run("stable-fages", [&] {
        detail::within(n, limits.subset_level_cap);
        for_each_subset(g, limits.subset_level_cap, [&](const AtomSet& m) {
            const bool stable = is_stable(g, m);
            const bool characterized =
                is_two_valued_model(g, m) && find_level_mapping(g, m, Condition::fages, std::nullopt, n).has_value();
            require(stable == characterized, [&] {
                return "M = " + fmt_set(m) + ": stable=" + std::to_string(stable) +
                       ", model with Fages mapping=" + std::to_string(characterized);
            });
        });
    });

    run("maxstable-level-mapping", [&] {
        detail::within(n, limits.subset_level_cap);
        for_each_subset(g, limits.subset_level_cap, [&](const AtomSet& m) {
            const bool maxstable = is_maxstable(g, m);
            const bool characterized =
                is_supported(g, m) && find_level_mapping(g, m, Condition::maxstable, std::nullopt, n).has_value();
            require(maxstable == characterized, [&] {
                return "M = " + fmt_set(m) + ": gfp(T+_{P/M}) = M is " + std::to_string(maxstable) +
                       ", supported with level mapping is " + std::to_string(characterized);
            });
        });
    });

    run("stable-enumeration", [&] {
        detail::within(n, limits.enumeration_cap);
        auto models = stable_models(g, limits.enumeration_cap);
        auto alt = wf_alternating(g);
        for (const auto& m : models) {
            require(is_supported_model(g, m), [&] { return "stable model " + fmt_set(m) + " is not supported"; });
            require(alt.pair.lfp_sq.is_subset_of(m) && m.is_subset_of(alt.pair.gfp_sq),
                    [&] { return "stable model " + fmt_set(m) + " outside [lfp(GL^2), gfp(GL^2)]"; });
        }
        if (is_total(alt.model)) {
            require(models.size() == 1 && models.front() == alt.model.pos(),
                    [&] { return "total wf model " + fmt(alt.model) + " but " + std::to_string(models.size()) +
                                 " stable model(s)"; });
        }
    });

    run("maxstable-enumeration", [&] {
        detail::within(n, limits.enumeration_cap);
        auto models = maxstable_models(g, limits.enumeration_cap);
        auto alt = maxwf_alternating(g);
        for (const auto& m : models) {
            require(is_supported_model(g, m), [&] { return "maxstable model " + fmt_set(m) + " is not supported"; });
            require(alt.pair.lfp_sq.is_subset_of(m) && m.is_subset_of(alt.pair.gfp_sq),
                    [&] { return "maxstable model " + fmt_set(m) + " outside [lfp(CGL^2), gfp(CGL^2)]"; });
        }
    });

    run("definite-least", [&] {
        detail::definite_only(g);
        detail::within(n, limits.enumeration_cap);
        auto least = least_model(g);
        auto stable = stable_models(g, limits.enumeration_cap);
        require(stable.size() == 1 && stable.front() == least,
                [&] { return "least model " + fmt_set(least) + " but " + std::to_string(stable.size()) + " stable"; });
        if (n > limits.subset_level_cap) return;
        std::vector<AtomSet> witnesses;
        for_each_subset(g, limits.subset_level_cap, [&](const AtomSet& m) {
            if (is_two_valued_model(g, m) && find_level_mapping(g, m, Condition::def_least, std::nullopt, n))
                witnesses.push_back(m);
        });
        require(witnesses.size() == 1 && witnesses.front() == least, [&] {
            return std::to_string(witnesses.size()) + " model(s) admit the least-model mapping; least is " +
                   fmt_set(least);
        });
    });

    run("definite-greatest", [&] {
        detail::definite_only(g);
        detail::within(n, limits.enumeration_cap);
        auto greatest = greatest_model(g);
        auto maxstable = maxstable_models(g, limits.enumeration_cap);
        require(maxstable.size() == 1 && maxstable.front() == greatest, [&] {
            return "greatest model " + fmt_set(greatest) + " but " + std::to_string(maxstable.size()) + " maxstable";
        });
        if (n > limits.subset_level_cap) return;
        std::vector<AtomSet> witnesses;
        for_each_subset(g, limits.subset_level_cap, [&](const AtomSet& m) {
            if (is_supported(g, m) && find_level_mapping(g, m, Condition::def_greatest, std::nullopt, n))
                witnesses.push_back(m);
        });
        require(witnesses.size() == 1 && witnesses.front() == greatest, [&] {
            return std::to_string(witnesses.size()) +
                   " supported interpretation(s) admit the greatest-model mapping; greatest is " + fmt_set(greatest);
        });
    });

    run("stratified-wf-total", [&] {
        if (!is_locally_stratified(g)) return;
        auto wf = well_founded_model(g);
        require(is_total(wf), [&] { return "stratified program with partial wf model " + fmt(wf); });
    });

    run("stratification-search", [&] {
        const bool stratified = is_locally_stratified(g);
        detail::within(n, limits.stratification_cap);
        const bool searched =
            find_level_mapping(g, g.empty_set(), Condition::locally_stratified, std::nullopt, limits.stratification_cap)
                .has_value();
        require(stratified == searched, [&] {
            return "SCC test says " + std::to_string(stratified) + ", exhaustive search says " +
                   std::to_string(searched);
        });
    });

    return results;
}

}  // namespace lpsem
