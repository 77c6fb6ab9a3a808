#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpsem/atom_set.hpp"
#include "lpsem/ground.hpp"
#include "lpsem/interp.hpp"

namespace lpsem {

// ---------------------------------------------------------------------------
// Fixpoint iteration

enum class Direction { up, down };

/// Raised when an iteration exceeds its step cap or leaves the expected chain
/// order, both of which mean the operator is not monotone.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Stages F↑0, F↑1, ... (or ↓) up to and including the first repeat.
template <typename T>
struct FixpointTrace {
    std::vector<T> stages;
    /// Index of the first stage that equals its successor.
    std::size_t closure_index = 0;

    const T& result() const { return stages.back(); }
};

inline bool chain_leq(const AtomSet& a, const AtomSet& b) { return a.is_subset_of(b); }
inline bool chain_leq(const PartialInterpretation& a, const PartialInterpretation& b) { return knowledge_leq(a, b); }

/// Step cap for iterations over a base of n atoms.
inline std::size_t iteration_cap(std::size_t n) { return 2 * n + 2; }

template <typename T, typename Op>
FixpointTrace<T> iterate_to_fixpoint(Op&& op, T start, Direction direction, std::size_t cap) {
    FixpointTrace<T> trace;
    trace.stages.push_back(std::move(start));
    for (std::size_t step = 0;; ++step) {
        if (step >= cap) {
            throw NonConvergence("no fixed point within " + std::to_string(cap) + " steps");
        }
        T next = op(trace.stages.back());
        const T& prev = trace.stages.back();
        const bool ordered = direction == Direction::up ? chain_leq(prev, next) : chain_leq(next, prev);
        if (!ordered) {
            throw NonConvergence("iteration left the " + std::string(direction == Direction::up ? "ascending" : "descending") +
                                 " chain at stage " + std::to_string(step + 1));
        }
        const bool closed = next == prev;
        trace.stages.push_back(std::move(next));
        if (closed) {
            trace.closure_index = trace.stages.size() - 2;
            return trace;
        }
    }
}

// ---------------------------------------------------------------------------
// Three-valued operators

namespace detail {
inline void require_universe(const GroundProgram& g, std::size_t universe) {
    if (universe != g.size()) throw std::invalid_argument("interpretation does not match the program's base");
}
}  // namespace detail

/// Heads of clauses whose body is true in i.
inline AtomSet tp(const GroundProgram& g, const PartialInterpretation& i) {
    detail::require_universe(g, i.universe());
    AtomSet out(g.size());
    for (const auto& c : g.clauses()) {
        if (!out.contains(c.head) && truth_of_body(i, c) == TruthValue::true_) out.insert(c.head);
    }
    return out;
}

/// Atoms all of whose clause bodies are false in i (atoms without clauses included).
inline AtomSet fp(const GroundProgram& g, const PartialInterpretation& i) {
    detail::require_universe(g, i.universe());
    AtomSet out(g.size());
    for (AtomId a = 0; a < g.size(); ++a) {
        bool all_false = true;
        for (std::size_t ci : g.clauses_for(a)) {
            if (truth_of_body(i, g.clause(ci)) != TruthValue::false_) {
                all_false = false;
                break;
            }
        }
        if (all_false) out.insert(a);
    }
    return out;
}

/// Fitting's operator T_P(I) ∪ ¬F_P(I).
inline PartialInterpretation phi(const GroundProgram& g, const PartialInterpretation& i) {
    auto t = tp(g, i);
    auto f = fp(g, i);
    if (t.intersects(f)) throw std::logic_error("phi: T_P and F_P overlap on a consistent input");
    return PartialInterpretation::checked(std::move(t), std::move(f));
}

/// Greatest U such that each clause for each A ∈ U has a body literal false in
/// i or a positive body atom in U. Computed by descending from B_P.
inline AtomSet greatest_unfounded(const GroundProgram& g, const PartialInterpretation& i) {
    detail::require_universe(g, i.universe());
    auto step = [&](const AtomSet& u) {
        AtomSet next(g.size());
        for (AtomId a : u) {
            bool unfounded = true;
            for (std::size_t ci : g.clauses_for(a)) {
                const auto& c = g.clause(ci);
                if (truth_of_body(i, c) == TruthValue::false_) continue;
                bool in_u = false;
                for (AtomId b : c.pos) {
                    if (u.contains(b)) {
                        in_u = true;
                        break;
                    }
                }
                if (!in_u) {
                    unfounded = false;
                    break;
                }
            }
            if (unfounded) next.insert(a);
        }
        return next;
    };
    return iterate_to_fixpoint(step, g.base(), Direction::down, iteration_cap(g.size())).result();
}

/// T_P(I) ∪ ¬U_P(I). Throws InconsistentInterpretation when the two parts
/// overlap, which can happen for inputs not reachable from ∅.
inline PartialInterpretation wp_op(const GroundProgram& g, const PartialInterpretation& i) {
    return PartialInterpretation::checked(tp(g, i), greatest_unfounded(g, i), "W_P");
}

/// T_P applied to the total reading of m.
inline TwoValuedInterpretation tp_plus(const GroundProgram& g, const TwoValuedInterpretation& m) {
    detail::require_universe(g, m.universe());
    AtomSet out(g.size());
    for (const auto& c : g.clauses()) {
        if (out.contains(c.head)) continue;
        bool fires = true;
        for (AtomId a : c.pos) fires = fires && m.contains(a);
        for (AtomId a : c.neg) fires = fires && !m.contains(a);
        if (fires) out.insert(c.head);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reduct and the two-valued Gelfond-Lifschitz style operators

class NotDefiniteError : public std::invalid_argument {
public:
    NotDefiniteError() : std::invalid_argument("program is not definite") {}
};

/// A ground program without negative body literals.
class ReductProgram {
public:
    explicit ReductProgram(GroundProgram g) : program_(std::move(g)) {
        if (!program_.is_definite()) throw NotDefiniteError();
    }
    const GroundProgram& program() const { return program_; }

private:
    GroundProgram program_;
};

/// P/M: clauses whose negated atoms all lie outside m, negation stripped.
inline ReductProgram reduct(const GroundProgram& g, const TwoValuedInterpretation& m) {
    detail::require_universe(g, m.universe());
    std::vector<GroundClause> kept;
    for (const auto& c : g.clauses()) {
        bool blocked = false;
        for (AtomId b : c.neg) blocked = blocked || m.contains(b);
        if (!blocked) kept.push_back(GroundClause{c.head, c.pos, {}});
    }
    return ReductProgram(g.with_clauses(std::move(kept)));
}

inline FixpointTrace<AtomSet> lfp_definite_trace(const ReductProgram& r) {
    const auto& g = r.program();
    return iterate_to_fixpoint([&](const AtomSet& m) { return tp_plus(g, m); }, g.empty_set(), Direction::up,
                               iteration_cap(g.size()));
}

inline FixpointTrace<AtomSet> gfp_definite_trace(const ReductProgram& r) {
    const auto& g = r.program();
    return iterate_to_fixpoint([&](const AtomSet& m) { return tp_plus(g, m); }, g.base(), Direction::down,
                               iteration_cap(g.size()));
}

inline TwoValuedInterpretation lfp_definite(const ReductProgram& r) { return lfp_definite_trace(r).result(); }
inline TwoValuedInterpretation gfp_definite(const ReductProgram& r) { return gfp_definite_trace(r).result(); }

/// GL_P(m): least model of P/m.
inline TwoValuedInterpretation gl(const GroundProgram& g, const TwoValuedInterpretation& m) {
    return lfp_definite(reduct(g, m));
}

/// CGL_P(m): greatest model of P/m.
inline TwoValuedInterpretation cgl(const GroundProgram& g, const TwoValuedInterpretation& m) {
    return gfp_definite(reduct(g, m));
}

// ---------------------------------------------------------------------------
// Self-founded sets and CW_P

/// Greatest S disjoint from i's false atoms such that every A ∈ S has a clause
/// whose negative literals are true in i and whose positive atoms are true in
/// i or lie in S. Computed by descending from B_P \ I⁻.
inline AtomSet greatest_self_founded(const GroundProgram& g, const PartialInterpretation& i) {
    detail::require_universe(g, i.universe());
    auto step = [&](const AtomSet& s) {
        AtomSet next(g.size());
        for (AtomId a : s) {
            for (std::size_t ci : g.clauses_for(a)) {
                const auto& c = g.clause(ci);
                bool supported = true;
                for (AtomId b : c.neg) supported = supported && i.neg().contains(b);
                for (AtomId b : c.pos) supported = supported && (i.pos().contains(b) || s.contains(b));
                if (supported) {
                    next.insert(a);
                    break;
                }
            }
        }
        return next;
    };
    return iterate_to_fixpoint(step, g.base() - i.neg(), Direction::down, iteration_cap(g.size())).result();
}

/// S_P(I) ∪ ¬F_P(I).
inline PartialInterpretation cw_op(const GroundProgram& g, const PartialInterpretation& i) {
    auto s = greatest_self_founded(g, i);
    auto f = fp(g, i);
    if (s.intersects(f)) throw std::logic_error("cw_op: S_P and F_P overlap on a consistent input");
    return PartialInterpretation::checked(std::move(s), std::move(f));
}

}  // namespace lpsem
