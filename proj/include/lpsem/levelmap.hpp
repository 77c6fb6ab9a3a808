#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpsem/atom_set.hpp"
#include "lpsem/ground.hpp"
#include "lpsem/interp.hpp"
#include "lpsem/operators.hpp"
#include "lpsem/semantics.hpp"

namespace lpsem {

/// Partial map from atoms to natural-number levels.
class LevelMapping {
public:
    LevelMapping() = default;
    explicit LevelMapping(std::size_t universe) : levels_(universe) {}

    std::size_t universe() const { return levels_.size(); }
    void set(AtomId a, unsigned level) { levels_.at(a) = level; }
    void clear(AtomId a) { levels_.at(a).reset(); }
    std::optional<unsigned> level(AtomId a) const { return levels_.at(a); }

    AtomSet domain() const {
        AtomSet d(levels_.size());
        for (AtomId a = 0; a < levels_.size(); ++a)
            if (levels_[a]) d.insert(a);
        return d;
    }

    friend bool operator==(const LevelMapping&, const LevelMapping&) = default;

private:
    std::vector<std::optional<unsigned>> levels_;
};

enum class Condition {
    def_least,           // Theorem 1: least model of a definite program
    fages,               // stable models
    fitting,             // (F): (Fi) or (Fii)
    well_founded,        // (WF): (Fi) or (Cii)
    max_circular,        // (CW): (Ci) or (Fii)
    maxstable,           // maxstable models
    def_greatest,        // greatest model of a definite program
    locally_stratified,  // total stratification
    ci_cii,              // (Ci) or (Cii): (WF) with (Fi) replaced by (Ci)
};

inline constexpr Condition kAllConditions[] = {
    Condition::def_least,    Condition::fages,        Condition::fitting,
    Condition::well_founded, Condition::max_circular, Condition::maxstable,
    Condition::def_greatest, Condition::locally_stratified, Condition::ci_cii,
};

inline std::string_view to_string(Condition c) {
    switch (c) {
        case Condition::def_least: return "DEF_LEAST";
        case Condition::fages: return "FAGES";
        case Condition::fitting: return "F";
        case Condition::well_founded: return "WF";
        case Condition::max_circular: return "CW";
        case Condition::maxstable: return "MAXSTABLE";
        case Condition::def_greatest: return "DEF_GREATEST";
        case Condition::locally_stratified: return "LOCALLY_STRATIFIED";
        case Condition::ci_cii: return "CI_CII";
    }
    return "?";
}

inline std::optional<Condition> parse_condition(std::string_view name) {
    for (Condition c : kAllConditions)
        if (to_string(c) == name) return c;
    return std::nullopt;
}

/// Conditions stated for total level mappings over two-valued interpretations.
inline bool is_total_condition(Condition c) {
    switch (c) {
        case Condition::def_least:
        case Condition::fages:
        case Condition::maxstable:
        case Condition::def_greatest:
        case Condition::locally_stratified: return true;
        default: return false;
    }
}

class DomainMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

class LevelChecker {
public:
    LevelChecker(const GroundProgram& g, const PartialInterpretation& i, const LevelMapping& l)
        : g_(g), i_(i), l_(l) {}

    bool holds(Condition c) const {
        switch (c) {
            case Condition::fitting: return each_decided([&](AtomId a) { return fi(a) || fii(a); });
            case Condition::well_founded: return each_decided([&](AtomId a) { return fi(a) || cii(a); });
            case Condition::max_circular: return each_decided([&](AtomId a) { return ci(a) || fii(a); });
            case Condition::ci_cii: return each_decided([&](AtomId a) { return ci(a) || cii(a); });
            case Condition::def_least:
            case Condition::fages: return each_true_atom_has_decreasing_support();
            case Condition::def_greatest:
            case Condition::maxstable: return each_false_atom_blocked_below();
            case Condition::locally_stratified: return stratifies();
        }
        return false;
    }

private:
    unsigned lv(AtomId a) const { return *l_.level(a); }
    bool is_true(AtomId a) const { return i_.pos().contains(a); }
    bool is_false(AtomId a) const { return i_.neg().contains(a); }

    template <typename Pred>
    bool each_decided(Pred&& pred) const {
        for (AtomId a = 0; a < g_.size(); ++a) {
            if ((is_true(a) || is_false(a)) && !pred(a)) return false;
        }
        return true;
    }

    // (Fi): A true, some clause with every body literal true and of lower level.
    bool fi(AtomId a) const {
        if (!is_true(a)) return false;
        const unsigned la = lv(a);
        for (std::size_t ci : g_.clauses_for(a)) {
            const auto& c = g_.clause(ci);
            bool ok = true;
            for (AtomId b : c.pos) ok = ok && is_true(b) && la > lv(b);
            for (AtomId b : c.neg) ok = ok && is_false(b) && la > lv(b);
            if (ok) return true;
        }
        return false;
    }

    // (Fii): A false, every clause has a false body literal of lower level.
    bool fii(AtomId a) const {
        if (!is_false(a)) return false;
        const unsigned la = lv(a);
        for (std::size_t ci : g_.clauses_for(a)) {
            const auto& c = g_.clause(ci);
            bool blocked = false;
            for (AtomId b : c.pos) blocked = blocked || (is_false(b) && la > lv(b));
            for (AtomId b : c.neg) blocked = blocked || (is_true(b) && la > lv(b));
            if (!blocked) return false;
        }
        return true;
    }

    // (Ci): A true, some clause with every body literal true, positive atoms
    // at most A's level and negated atoms strictly below.
    bool ci(AtomId a) const {
        if (!is_true(a)) return false;
        const unsigned la = lv(a);
        for (std::size_t ci : g_.clauses_for(a)) {
            const auto& c = g_.clause(ci);
            bool ok = true;
            for (AtomId b : c.pos) ok = ok && is_true(b) && la >= lv(b);
            for (AtomId b : c.neg) ok = ok && is_false(b) && la > lv(b);
            if (ok) return true;
        }
        return false;
    }

    // (Cii): A false, every clause has a false positive atom at most A's level
    // or a true negated atom strictly below.
    bool cii(AtomId a) const {
        if (!is_false(a)) return false;
        const unsigned la = lv(a);
        for (std::size_t ci : g_.clauses_for(a)) {
            const auto& c = g_.clause(ci);
            bool blocked = false;
            for (AtomId b : c.pos) blocked = blocked || (is_false(b) && la >= lv(b));
            for (AtomId b : c.neg) blocked = blocked || (is_true(b) && la > lv(b));
            if (!blocked) return false;
        }
        return true;
    }

    bool each_true_atom_has_decreasing_support() const {
        for (AtomId a = 0; a < g_.size(); ++a) {
            if (!is_true(a)) continue;
            const unsigned la = lv(a);
            bool found = false;
            for (std::size_t ci : g_.clauses_for(a)) {
                const auto& c = g_.clause(ci);
                bool ok = true;
                for (AtomId b : c.pos) ok = ok && is_true(b) && la > lv(b);
                for (AtomId b : c.neg) ok = ok && !is_true(b);
                if (ok) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }

    // For A ∉ M: every clause whose negated atoms lie outside M has a positive
    // atom outside M of lower level. On definite programs this is the
    // greatest-model condition.
    bool each_false_atom_blocked_below() const {
        for (AtomId a = 0; a < g_.size(); ++a) {
            if (is_true(a)) continue;
            const unsigned la = lv(a);
            for (std::size_t ci : g_.clauses_for(a)) {
                const auto& c = g_.clause(ci);
                bool applicable = true;
                for (AtomId b : c.neg) applicable = applicable && !is_true(b);
                if (!applicable) continue;
                bool blocked = false;
                for (AtomId b : c.pos) blocked = blocked || (!is_true(b) && la > lv(b));
                if (!blocked) return false;
            }
        }
        return true;
    }

    bool stratifies() const {
        for (const auto& c : g_.clauses()) {
            const unsigned lh = lv(c.head);
            for (AtomId b : c.pos)
                if (lh < lv(b)) return false;
            for (AtomId b : c.neg)
                if (lh <= lv(b)) return false;
        }
        return true;
    }

    const GroundProgram& g_;
    const PartialInterpretation& i_;
    const LevelMapping& l_;
};

inline AtomSet required_domain(const GroundProgram& g, const PartialInterpretation& i, Condition c) {
    return is_total_condition(c) ? g.base() : i.decided();
}

inline void validate(const GroundProgram& g, const PartialInterpretation& i, Condition c) {
    if (i.universe() != g.size()) throw std::invalid_argument("interpretation does not match the program's base");
    if (is_total_condition(c) && c != Condition::locally_stratified && !is_total(i)) {
        throw DomainMismatch(std::string(to_string(c)) + " needs a total interpretation");
    }
    if ((c == Condition::def_least || c == Condition::def_greatest) && !g.is_definite()) throw NotDefiniteError();
}

}  // namespace detail

/// Checks the clause-wise level condition c for every atom in scope. Model or
/// supportedness requirements of the corresponding characterizations are not
/// part of the check.
inline bool check_condition(const GroundProgram& g, const PartialInterpretation& i, const LevelMapping& l,
                            Condition c) {
    detail::validate(g, i, c);
    if (l.universe() != g.size() || l.domain() != detail::required_domain(g, i, c)) {
        throw DomainMismatch(std::string("level mapping domain does not match ") +
                             (is_total_condition(c) ? "the Herbrand base" : "the decided atoms"));
    }
    return detail::LevelChecker(g, i, l).holds(c);
}

/// Two-valued form: m is read totally.
inline bool check_condition(const GroundProgram& g, const TwoValuedInterpretation& m, const LevelMapping& l,
                            Condition c) {
    return check_condition(g, total_extension(m, g.base()), l, c);
}

/// Default bound on the number of atoms a level search ranges over.
inline constexpr std::size_t kDefaultLevelSearchCap = 6;

/// Exhaustive search over mappings into {0, ..., max_levels-1}; max_levels
/// defaults to the size of the domain, which loses nothing since conditions
/// only compare levels.
inline std::optional<LevelMapping> find_level_mapping(const GroundProgram& g, const PartialInterpretation& i,
                                                      Condition c, std::optional<unsigned> max_levels = std::nullopt,
                                                      std::size_t cap = kDefaultLevelSearchCap) {
    detail::validate(g, i, c);
    const auto domain = detail::required_domain(g, i, c).to_vector();
    if (domain.size() > cap) throw EnumerationCapExceeded(cap, domain.size());
    const unsigned k = max_levels.value_or(static_cast<unsigned>(domain.size()));

    LevelMapping l(g.size());
    for (AtomId a : domain) l.set(a, 0);
    if (domain.empty()) {
        if (detail::LevelChecker(g, i, l).holds(c)) return l;
        return std::nullopt;
    }
    if (k == 0) return std::nullopt;

    std::vector<unsigned> digits(domain.size(), 0);
    const detail::LevelChecker checker(g, i, l);
    while (true) {
        if (checker.holds(c)) return l;
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == k) {
            digits[pos] = 0;
            l.set(domain[pos], 0);
            ++pos;
        }
        if (pos == digits.size()) return std::nullopt;
        l.set(domain[pos], digits[pos]);
    }
}

inline std::optional<LevelMapping> find_level_mapping(const GroundProgram& g, const TwoValuedInterpretation& m,
                                                      Condition c, std::optional<unsigned> max_levels = std::nullopt,
                                                      std::size_t cap = kDefaultLevelSearchCap) {
    return find_level_mapping(g, total_extension(m, g.base()), c, max_levels, cap);
}

// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultGreatestModelCap = 4;

struct GreatestModelResult {
    /// Present iff exactly one candidate is maximal.
    std::optional<PartialInterpretation> greatest;
    /// Maximal candidates in enumeration order; two of them witness absence.
    std::vector<PartialInterpretation> maximal;
    std::size_t candidates = 0;
};

/// Among all models I of g admitting an I-partial level mapping satisfying c,
/// finds the greatest in knowledge order (brute force over 3^|B_P|).
inline GreatestModelResult greatest_model_with_condition(const GroundProgram& g, Condition c,
                                                         std::size_t cap = kDefaultGreatestModelCap) {
    if (is_total_condition(c)) {
        throw std::invalid_argument(std::string(to_string(c)) + " is not a partial-interpretation condition");
    }
    const std::size_t n = g.size();
    if (n > cap) throw EnumerationCapExceeded(cap, n);

    std::vector<PartialInterpretation> candidates;
    std::vector<unsigned> digits(n, 0);  // 0 undefined, 1 true, 2 false
    while (true) {
        AtomSet pos(n), neg(n);
        for (AtomId a = 0; a < n; ++a) {
            if (digits[a] == 1) pos.insert(a);
            if (digits[a] == 2) neg.insert(a);
        }
        auto i = PartialInterpretation::checked(std::move(pos), std::move(neg));
        if (is_model(g, i) && find_level_mapping(g, i, c, std::nullopt, n)) candidates.push_back(std::move(i));

        std::size_t k = 0;
        while (k < n && ++digits[k] == 3) digits[k++] = 0;
        if (k == n) break;
    }

    GreatestModelResult r;
    r.candidates = candidates.size();
    for (const auto& x : candidates) {
        bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                     [&](const PartialInterpretation& y) { return x != y && knowledge_leq(x, y); });
        if (!dominated) r.maximal.push_back(x);
    }
    if (r.maximal.size() == 1) r.greatest = r.maximal.front();
    return r;
}

// ---------------------------------------------------------------------------
// Local stratification via strongly connected components

namespace detail {

struct DependencyGraph {
    // edges[a] = (b, strict) for head a and body atom b
    std::vector<std::vector<std::pair<AtomId, bool>>> edges;

    explicit DependencyGraph(const GroundProgram& g) : edges(g.size()) {
        for (const auto& c : g.clauses()) {
            for (AtomId b : c.pos) edges[c.head].emplace_back(b, false);
            for (AtomId b : c.neg) edges[c.head].emplace_back(b, true);
        }
    }

    /// Tarjan's algorithm, iterative. Components are numbered in completion
    /// order, so every edge points to a component with number <= its source's.
    std::vector<std::size_t> components(std::size_t& count) const {
        const std::size_t n = edges.size();
        constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
        std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
        std::vector<bool> on_stack(n, false);
        std::vector<AtomId> stack;
        std::vector<std::pair<AtomId, std::size_t>> call;
        std::size_t next_index = 0;
        count = 0;
        for (AtomId root = 0; root < n; ++root) {
            if (index[root] != kUnvisited) continue;
            call.emplace_back(root, 0);
            while (!call.empty()) {
                auto& [v, edge] = call.back();
                if (edge == 0 && index[v] == kUnvisited) {
                    index[v] = low[v] = next_index++;
                    stack.push_back(v);
                    on_stack[v] = true;
                }
                if (edge < edges[v].size()) {
                    AtomId w = edges[v][edge++].first;
                    if (index[w] == kUnvisited) {
                        call.emplace_back(w, 0);
                    } else if (on_stack[w]) {
                        low[v] = std::min(low[v], index[w]);
                    }
                    continue;
                }
                if (low[v] == index[v]) {
                    AtomId w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = count;
                    } while (w != v);
                    ++count;
                }
                AtomId done = v;
                call.pop_back();
                if (!call.empty()) {
                    AtomId parent = call.back().first;
                    low[parent] = std::min(low[parent], low[done]);
                }
            }
        }
        return comp;
    }
};

}  // namespace detail

/// A total level mapping witnessing local stratification, if one exists:
/// positive dependencies may stay level, negative ones must go strictly down.
inline std::optional<LevelMapping> stratification(const GroundProgram& g) {
    detail::DependencyGraph graph(g);
    std::size_t count = 0;
    const auto comp = graph.components(count);
    for (AtomId a = 0; a < g.size(); ++a)
        for (auto [b, strict] : graph.edges[a])
            if (strict && comp[a] == comp[b]) return std::nullopt;

    std::vector<std::vector<AtomId>> members(count);
    for (AtomId a = 0; a < g.size(); ++a) members[comp[a]].push_back(a);
    std::vector<unsigned> level(count, 0);
    for (std::size_t k = 0; k < count; ++k) {
        for (AtomId a : members[k])
            for (auto [b, strict] : graph.edges[a])
                if (comp[b] != k) level[k] = std::max(level[k], level[comp[b]] + (strict ? 1U : 0U));
    }
    LevelMapping l(g.size());
    for (AtomId a = 0; a < g.size(); ++a) l.set(a, level[comp[a]]);
    return l;
}

/// No negative dependency inside a strongly connected component.
inline bool is_locally_stratified(const GroundProgram& g) { return stratification(g).has_value(); }

/// Level of an atom = (index of the first stage deciding it) - 1.
inline LevelMapping extract_level_mapping_from_trace(const FixpointTrace<PartialInterpretation>& t) {
    if (t.stages.empty()) return LevelMapping();
    LevelMapping l(t.stages.front().universe());
    AtomSet seen = t.stages.front().decided();
    for (AtomId a : seen) l.set(a, 0);
    for (std::size_t k = 1; k < t.stages.size(); ++k) {
        auto now = t.stages[k].decided();
        for (AtomId a : now - seen) l.set(a, static_cast<unsigned>(k - 1));
        seen |= now;
    }
    return l;
}

}  // namespace lpsem
