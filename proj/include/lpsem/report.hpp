#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lpsem/ground.hpp"
#include "lpsem/interp.hpp"
#include "lpsem/operators.hpp"
#include "lpsem/render.hpp"
#include "lpsem/semantics.hpp"

namespace lpsem {

enum class SemanticsKind { least, greatest, fitting, wf, wf_alt, maxwf, maxwf_alt, stable, maxstable, supported };

inline constexpr SemanticsKind kAllSemantics[] = {
    SemanticsKind::least,     SemanticsKind::greatest,  SemanticsKind::fitting, SemanticsKind::wf,
    SemanticsKind::wf_alt,    SemanticsKind::maxwf,     SemanticsKind::maxwf_alt,
    SemanticsKind::stable,    SemanticsKind::maxstable, SemanticsKind::supported,
};

inline std::string_view to_string(SemanticsKind k) {
    switch (k) {
        case SemanticsKind::least: return "least";
        case SemanticsKind::greatest: return "greatest";
        case SemanticsKind::fitting: return "fitting";
        case SemanticsKind::wf: return "wf";
        case SemanticsKind::wf_alt: return "wf-alt";
        case SemanticsKind::maxwf: return "maxwf";
        case SemanticsKind::maxwf_alt: return "maxwf-alt";
        case SemanticsKind::stable: return "stable";
        case SemanticsKind::maxstable: return "maxstable";
        case SemanticsKind::supported: return "supported";
    }
    return "?";
}

inline std::optional<SemanticsKind> parse_semantics(std::string_view name) {
    for (auto k : kAllSemantics)
        if (to_string(k) == name) return k;
    return std::nullopt;
}

inline bool is_model_set_semantics(SemanticsKind k) {
    return k == SemanticsKind::stable || k == SemanticsKind::maxstable || k == SemanticsKind::supported;
}

using TraceStage = std::variant<PartialInterpretation, AtomSet>;

struct SemanticsReport {
    SemanticsKind kind = SemanticsKind::wf;
    /// Single-model semantics yield a partial interpretation (two-valued ones
    /// read totally); enumerated semantics yield a sorted model list.
    std::variant<PartialInterpretation, std::vector<AtomSet>> model;
    /// Meaningful for single-model semantics only.
    bool total = false;
    std::vector<TraceStage> trace;

    const PartialInterpretation* interpretation() const { return std::get_if<PartialInterpretation>(&model); }
    const std::vector<AtomSet>* models() const { return std::get_if<std::vector<AtomSet>>(&model); }
};

namespace detail {

template <typename T>
std::vector<TraceStage> to_stages(const FixpointTrace<T>& t) {
    return {t.stages.begin(), t.stages.end()};
}

/// L_k ∪ ¬(B_P \ G_k), the shorter chain padded with its limit.
inline std::vector<TraceStage> alternating_stages(const GroundProgram& g, const AlternatingResult& r) {
    const std::size_t len = std::max(r.lower.stages.size(), r.upper.stages.size());
    std::vector<TraceStage> out;
    for (std::size_t k = 0; k < len; ++k) {
        const auto& lo = r.lower.stages[std::min(k, r.lower.stages.size() - 1)];
        const auto& hi = r.upper.stages[std::min(k, r.upper.stages.size() - 1)];
        out.emplace_back(PartialInterpretation::checked(lo, g.base() - hi));
    }
    return out;
}

}  // namespace detail

/// Throws NotDefiniteError for least/greatest on normal programs and
/// EnumerationCapExceeded for enumerated semantics above `cap` atoms.
inline SemanticsReport compute_report(const GroundProgram& g, SemanticsKind kind,
                                      std::size_t cap = kDefaultEnumerationCap) {
    SemanticsReport r;
    r.kind = kind;
    auto single = [&](PartialInterpretation i) {
        r.total = is_total(i);
        r.model = std::move(i);
    };
    switch (kind) {
        case SemanticsKind::least:
        case SemanticsKind::greatest: {
            ReductProgram definite(g);
            auto t = kind == SemanticsKind::least ? lfp_definite_trace(definite) : gfp_definite_trace(definite);
            single(total_extension(t.result(), g.base()));
            r.trace = detail::to_stages(t);
            break;
        }
        case SemanticsKind::fitting:
        case SemanticsKind::wf:
        case SemanticsKind::maxwf: {
            auto t = kind == SemanticsKind::fitting ? fitting_trace(g)
                     : kind == SemanticsKind::wf    ? well_founded_trace(g)
                                                    : maxwf_trace(g);
            single(t.result());
            r.trace = detail::to_stages(t);
            break;
        }
        case SemanticsKind::wf_alt:
        case SemanticsKind::maxwf_alt: {
            auto a = kind == SemanticsKind::wf_alt ? wf_alternating(g) : maxwf_alternating(g);
            single(a.model);
            r.trace = detail::alternating_stages(g, a);
            break;
        }
        case SemanticsKind::stable: r.model = stable_models(g, cap); break;
        case SemanticsKind::maxstable: r.model = maxstable_models(g, cap); break;
        case SemanticsKind::supported: r.model = supported_models(g, cap); break;
    }
    return r;
}

inline Json trace_json(const GroundProgram& g, const std::vector<TraceStage>& trace) {
    Json arr = Json::array();
    for (const auto& s : trace) {
        if (const auto* i = std::get_if<PartialInterpretation>(&s)) {
            arr.push_back(interpretation_json(g, *i));
        } else {
            arr.push_back(atom_list_json(g, std::get<AtomSet>(s)));
        }
    }
    return arr;
}

inline std::string format_stage(const GroundProgram& g, const TraceStage& s) {
    if (const auto* i = std::get_if<PartialInterpretation>(&s)) return format_interpretation(g, *i);
    return format_atom_set(g, std::get<AtomSet>(s));
}

/// Knowledge-order relation between two interpretations.
inline std::string_view knowledge_relation(const PartialInterpretation& a, const PartialInterpretation& b) {
    const bool le = knowledge_leq(a, b);
    const bool ge = knowledge_leq(b, a);
    if (le && ge) return "equal";
    if (le) return "below";
    if (ge) return "above";
    return "incomparable";
}

}  // namespace lpsem
