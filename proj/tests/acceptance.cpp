// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lpsem/levelmap.hpp"
#include "lpsem/operators.hpp"
#include "lpsem/render.hpp"
#include "lpsem/semantics.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace lpsem;
using testing_support::random_program;

namespace {

struct Outcome {
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    std::string first;  // first mismatch, for the report

    void expect(bool ok, const std::function<std::string()>& what) {
        ++cases;
        if (ok) return;
        if (mismatches++ == 0) first = what();
    }
};

std::string show(const GroundProgram& g) {
    std::string s;
    for (const auto& c : g.clauses()) s += to_string(g.to_clause(c)) + " ";
    return s.empty() ? "(empty)" : s;
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    body(o);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.mismatches == 0 && secs < limit_s;
    if (!ok) ++failures;
    std::printf("criterion %d %s  %-34s %7zu checks  %zu mismatches  %.2f s (limit %.0f s)", id, ok ? "PASS" : "FAIL",
                title, o.cases, o.mismatches, secs, limit_s);
    if (!o.first.empty()) std::printf("  first: %s", o.first.c_str());
    std::printf("\n");
    std::fflush(stdout);
}

// ---------------------------------------------------------------------------

void example1(Outcome& o) {
    auto g = ground_text(testing_support::kExample1);
    using testing_support::atoms;
    using testing_support::interp;
    auto m1 = interp(g, {"p", "not q"});
    auto m2 = interp(g, {"not p", "q"});
    o.expect(well_founded_model(g) == interp(g, {"q", "not p"}), [] { return "wf model"; });
    o.expect(maxwf_model(g) == m1, [] { return "maxwf model"; });
    o.expect(fitting_model(g) == PartialInterpretation::empty(2), [] { return "fitting model"; });
    o.expect(stable_models(g) == std::vector<AtomSet>{atoms(g, {"q"})}, [] { return "stable models"; });
    o.expect(maxstable_models(g) == std::vector<AtomSet>{atoms(g, {"p"})}, [] { return "maxstable models"; });
    o.expect(supported_models(g) == std::vector<AtomSet>{atoms(g, {"p"}), atoms(g, {"q"})},
             [] { return "supported models"; });

    LevelMapping l(2);
    l.set(g.id_of("p"), 0);
    l.set(g.id_of("q"), 1);
    o.expect(check_condition(g, m1, l, Condition::ci_cii), [] { return "M1 with l(p)=0, l(q)=1"; });
    o.expect(check_condition(g, m2, l, Condition::ci_cii), [] { return "M2 with l(p)=0, l(q)=1"; });
    auto r = greatest_model_with_condition(g, Condition::ci_cii);
    const bool pair = r.maximal.size() == 2 && ((r.maximal[0] == m1 && r.maximal[1] == m2) ||
                                                (r.maximal[0] == m2 && r.maximal[1] == m1));
    o.expect(!r.greatest && pair, [] { return "(Ci)-substituted condition should leave M1, M2 incomparable"; });
    o.expect(!knowledge_leq(m1, m2) && !knowledge_leq(m2, m1), [] { return "M1, M2 comparable"; });
}

void alternating(Outcome& o) {
    for (std::uint64_t s = 0; s < 600; ++s) {
        auto g = random_program(s, 1 + s % 8, s % 13);
        o.expect(well_founded_model(g) == wf_alternating(g).model, [&] { return "wf vs GL^2: " + show(g); });
        o.expect(maxwf_model(g) == maxwf_alternating(g).model, [&] { return "maxwf vs CGL^2: " + show(g); });
    }
}

void greatest_models(Outcome& o) {
    std::size_t programs = 0;
    for (std::uint64_t s = 1000; programs < 200; ++s) {
        auto g = random_program(s, 1 + s % 4, s % 8);
        if (g.size() > 4) continue;
        ++programs;
        const auto p = oracle::from(g);
        struct Case {
            Condition c;
            oracle::Cond oc;
            PartialInterpretation expected;
        } cases[] = {{Condition::fitting, oracle::Cond::fi_fii, fitting_model(g)},
                     {Condition::well_founded, oracle::Cond::fi_cii, well_founded_model(g)},
                     {Condition::max_circular, oracle::Cond::ci_fii, maxwf_model(g)}};
        for (const auto& k : cases) {
            auto r = greatest_model_with_condition(g, k.c);
            o.expect(r.greatest && *r.greatest == k.expected,
                     [&] { return std::string(to_string(k.c)) + ": " + show(g); });
            auto oracle_greatest = oracle::greatest_model_with(p, k.oc);
            o.expect(oracle_greatest && *oracle_greatest == oracle::interp_of(k.expected),
                     [&] { return std::string("oracle ") + std::string(to_string(k.c)) + ": " + show(g); });
        }
    }
}

void stable_characterizations(Outcome& o) {
    for (std::uint64_t s = 2000; s < 2300; ++s) {
        auto g = random_program(s, 1 + s % 5, s % 10);
        const auto p = oracle::from(g);
        for_each_subset(g, 5, [&](const AtomSet& m) {
            const bool stable = is_stable(g, m);
            const bool maxstable = is_maxstable(g, m);
            o.expect(stable == (is_two_valued_model(g, m) && find_level_mapping(g, m, Condition::fages).has_value()),
                     [&] { return "Fages at M=" + format_atom_set(g, m) + ": " + show(g); });
            o.expect(maxstable ==
                         (is_supported(g, m) && find_level_mapping(g, m, Condition::maxstable).has_value()),
                     [&] { return "maxstable mapping at M=" + format_atom_set(g, m) + ": " + show(g); });
            o.expect(stable == oracle::is_stable(p, oracle::mask_of(m)) &&
                         maxstable == oracle::is_maxstable(p, oracle::mask_of(m)),
                     [&] { return "oracle at M=" + format_atom_set(g, m) + ": " + show(g); });
        });
    }
}

void definite(Outcome& o) {
    for (std::uint64_t s = 3000; s < 3300; ++s) {
        auto g = random_program(s, 1 + s % 8, s % 13, 0.0);
        const auto least = least_model(g);
        const auto greatest = greatest_model(g);
        o.expect(stable_models(g) == std::vector<AtomSet>{least}, [&] { return "stable = {least}: " + show(g); });
        o.expect(maxstable_models(g) == std::vector<AtomSet>{greatest},
                 [&] { return "maxstable = {greatest}: " + show(g); });
        const auto p = oracle::from(g);
        o.expect(oracle::least_fixpoint(p) == oracle::mask_of(least) &&
                     oracle::greatest_fixpoint(p) == oracle::mask_of(greatest),
                 [&] { return "oracle fixpoints: " + show(g); });
        if (g.size() > 5) continue;
        std::vector<AtomSet> with_least, with_greatest;
        for_each_subset(g, 5, [&](const AtomSet& m) {
            if (is_two_valued_model(g, m) && find_level_mapping(g, m, Condition::def_least)) with_least.push_back(m);
            if (is_supported(g, m) && find_level_mapping(g, m, Condition::def_greatest)) with_greatest.push_back(m);
        });
        o.expect(with_least == std::vector<AtomSet>{least}, [&] { return "least-model mapping: " + show(g); });
        o.expect(with_greatest == std::vector<AtomSet>{greatest}, [&] { return "greatest-model mapping: " + show(g); });
    }
}

void operator_laws(Outcome& o) {
    std::mt19937_64 rng(4000);
    for (int k = 0; k < 1200; ++k) {
        auto g = random_program(rng(), 1 + rng() % 8, rng() % 13);
        auto i = testing_support::random_partial(g.size(), rng);
        auto j = testing_support::random_extension(i, rng);
        o.expect(knowledge_leq(phi(g, i), phi(g, j)), [&] { return "Phi: " + show(g); });
        if (!greatest_self_founded(g, i).intersects(j.neg()))
            o.expect(knowledge_leq(cw_op(g, i), cw_op(g, j)), [&] { return "CW: " + show(g); });

        // W_P and CW_P along their own iterations, where both stay consistent
        const auto wf = well_founded_trace(g);
        const std::size_t a = rng() % wf.stages.size();
        const std::size_t b = a + rng() % (wf.stages.size() - a);
        o.expect(knowledge_leq(wp_op(g, wf.stages[a]), wp_op(g, wf.stages[b])), [&] { return "W iterates: " + show(g); });
        const auto mw = maxwf_trace(g);
        const std::size_t c = rng() % mw.stages.size();
        const std::size_t d = c + rng() % (mw.stages.size() - c);
        o.expect(knowledge_leq(cw_op(g, mw.stages[c]), cw_op(g, mw.stages[d])), [&] { return "CW iterates: " + show(g); });
        o.expect(tp(g, i).is_subset_of(tp(g, j)) && greatest_unfounded(g, i).is_subset_of(greatest_unfounded(g, j)),
                 [&] { return "T and U parts of W: " + show(g); });

        auto m = testing_support::random_subset(g.size(), rng);
        auto n = testing_support::random_superset(m, rng);
        o.expect(gl(g, n).is_subset_of(gl(g, m)), [&] { return "GL antitone: " + show(g); });
        o.expect(cgl(g, n).is_subset_of(cgl(g, m)), [&] { return "CGL antitone: " + show(g); });
    }
    for (int k = 0; k < 300; ++k) {
        auto g = random_program(rng(), 1 + rng() % 5, rng() % 10);
        const auto p = oracle::from(g);
        auto i = testing_support::random_partial(g.size(), rng);
        const auto oi = oracle::interp_of(i);
        const auto u = oracle::mask_of(greatest_unfounded(g, i));
        const auto s = oracle::mask_of(greatest_self_founded(g, i));
        bool greatest_u = oracle::is_unfounded(p, oi, u);
        bool greatest_s = oracle::is_self_founded(p, oi, s);
        for (auto x : oracle::subsets(p)) {
            if (oracle::is_unfounded(p, oi, x)) greatest_u = greatest_u && oracle::subset(x, u);
            if (oracle::is_self_founded(p, oi, x)) greatest_s = greatest_s && oracle::subset(x, s);
        }
        o.expect(greatest_u, [&] { return "U_P not greatest: " + show(g); });
        o.expect(greatest_s, [&] { return "S_P not greatest: " + show(g); });
    }
}

void stratified_programs(Outcome& o) {
    for (std::uint64_t s = 5000; s < 5500; ++s) {
        auto g = random_program(s, 1 + s % 8, s % 13, 0.5, true);
        o.expect(is_locally_stratified(g), [&] { return "generated program not stratified: " + show(g); });
        o.expect(is_total(well_founded_model(g)), [&] { return "partial wf model: " + show(g); });
    }
    for (std::uint64_t s = 6000; s < 6600; ++s) {
        auto g = random_program(s, 1 + s % 6, s % 11, 0.5, s % 3 == 0);
        if (g.size() > 6) continue;
        const bool scc = is_locally_stratified(g);
        const bool search =
            find_level_mapping(g, g.empty_set(), Condition::locally_stratified, std::nullopt, 6).has_value();
        const bool oracle_search = oracle::mapping_exists(oracle::from(g), {}, oracle::Cond::stratified);
        o.expect(scc == search && search == oracle_search, [&] { return "SCC vs search: " + show(g); });
    }
}

}  // namespace

int main() {
    criterion(1, "example 1 fidelity", 1, example1);
    criterion(2, "alternating fixpoints", 30, alternating);
    criterion(3, "greatest models (F, WF, CW)", 300, greatest_models);
    criterion(4, "stable / maxstable mappings", 300, stable_characterizations);
    criterion(5, "definite duality", 300, definite);
    criterion(6, "operator laws", 300, operator_laws);
    criterion(7, "stratification", 300, stratified_programs);
    return failures == 0 ? 0 : 1;
}
