#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpsem/atom_set.hpp"
#include "lpsem/ground.hpp"
#include "lpsem/interp.hpp"
#include "lpsem/operators.hpp"

namespace lpsem {

/// Default bound on |B_P| for exhaustive subset enumeration (2^20 checks).
inline constexpr std::size_t kDefaultEnumerationCap = 20;

class EnumerationCapExceeded : public std::runtime_error {
public:
    EnumerationCapExceeded(std::size_t cap, std::size_t atoms)
        : std::runtime_error("enumeration cap exceeded: |B_P| = " + std::to_string(atoms) + " > cap " +
                             std::to_string(cap)),
          cap_(cap),
          atoms_(atoms) {}
    std::size_t cap() const { return cap_; }
    std::size_t atoms() const { return atoms_; }

private:
    std::size_t cap_;
    std::size_t atoms_;
};

// ---------------------------------------------------------------------------
// Definite programs

inline TwoValuedInterpretation least_model(const GroundProgram& g) { return lfp_definite(ReductProgram(g)); }
inline TwoValuedInterpretation greatest_model(const GroundProgram& g) { return gfp_definite(ReductProgram(g)); }

// ---------------------------------------------------------------------------
// Least fixed points of the three-valued operators

inline FixpointTrace<PartialInterpretation> fitting_trace(const GroundProgram& g) {
    return iterate_to_fixpoint([&](const PartialInterpretation& i) { return phi(g, i); },
                               PartialInterpretation::empty(g.size()), Direction::up, iteration_cap(g.size()));
}

inline FixpointTrace<PartialInterpretation> well_founded_trace(const GroundProgram& g) {
    return iterate_to_fixpoint([&](const PartialInterpretation& i) { return wp_op(g, i); },
                               PartialInterpretation::empty(g.size()), Direction::up, iteration_cap(g.size()));
}

inline FixpointTrace<PartialInterpretation> maxwf_trace(const GroundProgram& g) {
    return iterate_to_fixpoint([&](const PartialInterpretation& i) { return cw_op(g, i); },
                               PartialInterpretation::empty(g.size()), Direction::up, iteration_cap(g.size()));
}

inline PartialInterpretation fitting_model(const GroundProgram& g) { return fitting_trace(g).result(); }
inline PartialInterpretation well_founded_model(const GroundProgram& g) { return well_founded_trace(g).result(); }
inline PartialInterpretation maxwf_model(const GroundProgram& g) { return maxwf_trace(g).result(); }

// ---------------------------------------------------------------------------
// Alternating fixed points

/// Extreme fixed points of the square of an antitone operator.
struct AlternatingPair {
    TwoValuedInterpretation lfp_sq;
    TwoValuedInterpretation gfp_sq;
};

struct AlternatingResult {
    AlternatingPair pair;
    /// lfp_sq ∪ ¬(B_P \ gfp_sq)
    PartialInterpretation model;
    FixpointTrace<AtomSet> lower;
    FixpointTrace<AtomSet> upper;
};

namespace detail {

template <typename AntitoneOp>
AlternatingResult alternate(const GroundProgram& g, AntitoneOp op, const char* name) {
    auto squared = [&](const AtomSet& m) { return op(g, op(g, m)); };
    const auto cap = iteration_cap(g.size());
    AlternatingResult r;
    r.lower = iterate_to_fixpoint(squared, g.empty_set(), Direction::up, cap);
    r.upper = iterate_to_fixpoint(squared, g.base(), Direction::down, cap);
    r.pair = {r.lower.result(), r.upper.result()};
    if (!r.pair.lfp_sq.is_subset_of(r.pair.gfp_sq)) {
        throw std::logic_error(std::string(name) + ": least fixed point of the square is not below the greatest");
    }
    if (op(g, r.pair.lfp_sq) != r.pair.gfp_sq || op(g, r.pair.gfp_sq) != r.pair.lfp_sq) {
        throw std::logic_error(std::string(name) + ": extreme fixed points of the square are not swapped by the operator");
    }
    r.model = PartialInterpretation::checked(r.pair.lfp_sq, g.base() - r.pair.gfp_sq);
    return r;
}

}  // namespace detail

inline AlternatingResult wf_alternating(const GroundProgram& g) {
    return detail::alternate(g, [](const GroundProgram& p, const AtomSet& m) { return gl(p, m); }, "GL");
}

inline AlternatingResult maxwf_alternating(const GroundProgram& g) {
    return detail::alternate(g, [](const GroundProgram& p, const AtomSet& m) { return cgl(p, m); }, "CGL");
}

// ---------------------------------------------------------------------------
// Two-valued predicates (no cap)

inline bool is_stable(const GroundProgram& g, const TwoValuedInterpretation& m) { return gl(g, m) == m; }
inline bool is_maxstable(const GroundProgram& g, const TwoValuedInterpretation& m) { return cgl(g, m) == m; }

/// Supported interpretation: m ⊆ T_P⁺(m).
inline bool is_supported(const GroundProgram& g, const TwoValuedInterpretation& m) {
    return m.is_subset_of(tp_plus(g, m));
}

/// Classical model: T_P⁺(m) ⊆ m.
inline bool is_two_valued_model(const GroundProgram& g, const TwoValuedInterpretation& m) {
    return tp_plus(g, m).is_subset_of(m);
}

/// Fixed point of T_P⁺.
inline bool is_supported_model(const GroundProgram& g, const TwoValuedInterpretation& m) { return tp_plus(g, m) == m; }

// ---------------------------------------------------------------------------
// Exhaustive enumeration

/// Calls visit(m) for every m ⊆ B_P, in mask order.
template <typename Visit>
void for_each_subset(const GroundProgram& g, std::size_t cap, Visit&& visit) {
    const std::size_t n = g.size();
    if (n > cap || n >= 63) throw EnumerationCapExceeded(std::min<std::size_t>(cap, 62), n);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) visit(AtomSet::from_mask(n, mask));
}

/// Subsets satisfying pred, sorted by their ascending atom lists.
template <typename Pred>
std::vector<TwoValuedInterpretation> enumerate_models(const GroundProgram& g, std::size_t cap, Pred&& pred) {
    std::vector<TwoValuedInterpretation> out;
    for_each_subset(g, cap, [&](const AtomSet& m) {
        if (pred(m)) out.push_back(m);
    });
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

inline std::vector<TwoValuedInterpretation> stable_models(const GroundProgram& g,
                                                          std::size_t cap = kDefaultEnumerationCap) {
    return enumerate_models(g, cap, [&](const AtomSet& m) { return is_stable(g, m); });
}

inline std::vector<TwoValuedInterpretation> maxstable_models(const GroundProgram& g,
                                                             std::size_t cap = kDefaultEnumerationCap) {
    return enumerate_models(g, cap, [&](const AtomSet& m) { return is_maxstable(g, m); });
}

inline std::vector<TwoValuedInterpretation> supported_models(const GroundProgram& g,
                                                             std::size_t cap = kDefaultEnumerationCap) {
    return enumerate_models(g, cap, [&](const AtomSet& m) { return is_supported_model(g, m); });
}

}  // namespace lpsem
