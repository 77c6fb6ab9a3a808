#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "lpsem/atom_set.hpp"
#include "lpsem/ground.hpp"

namespace lpsem {

enum class TruthValue { false_, undefined, true_ };

inline const char* to_string(TruthValue v) {
    switch (v) {
        case TruthValue::true_: return "true";
        case TruthValue::false_: return "false";
        case TruthValue::undefined: return "undefined";
    }
    return "?";
}

/// A two-valued interpretation is a subset of B_P.
using TwoValuedInterpretation = AtomSet;

struct GroundLiteral {
    AtomId atom = 0;
    bool negated = false;
};

class InconsistentInterpretation : public std::runtime_error {
public:
    explicit InconsistentInterpretation(AtomId witness, const std::string& context = "")
        : std::runtime_error("inconsistent interpretation: atom #" + std::to_string(witness) +
                             " is both true and false" + (context.empty() ? "" : " (" + context + ")")),
          witness_(witness) {}
    AtomId witness() const { return witness_; }

private:
    AtomId witness_;
};

class OutOfBaseError : public std::invalid_argument {
public:
    explicit OutOfBaseError(AtomId atom)
        : std::invalid_argument("atom #" + std::to_string(atom) + " is outside the base"), atom_(atom) {}
    AtomId atom() const { return atom_; }

private:
    AtomId atom_;
};

/// Consistent pair (I⁺, I⁻). Carries no reference to the base beyond its
/// universe size.
class PartialInterpretation {
public:
    PartialInterpretation() = default;

    static PartialInterpretation empty(std::size_t universe) {
        return PartialInterpretation(AtomSet(universe), AtomSet(universe));
    }

    /// Throws InconsistentInterpretation if pos and neg overlap.
    static PartialInterpretation checked(AtomSet pos, AtomSet neg, const std::string& context = "") {
        if (pos.universe() != neg.universe()) throw std::invalid_argument("interpretation: universe mismatch");
        auto both = pos & neg;
        if (!both.empty()) throw InconsistentInterpretation(both.first(), context);
        return PartialInterpretation(std::move(pos), std::move(neg));
    }

    const AtomSet& pos() const { return pos_; }
    const AtomSet& neg() const { return neg_; }
    AtomSet decided() const { return pos_ | neg_; }
    AtomSet undefined() const { return decided().complement(); }
    std::size_t universe() const { return pos_.universe(); }

    TruthValue value(AtomId a) const {
        if (pos_.contains(a)) return TruthValue::true_;
        if (neg_.contains(a)) return TruthValue::false_;
        return TruthValue::undefined;
    }

    friend bool operator==(const PartialInterpretation&, const PartialInterpretation&) = default;

private:
    PartialInterpretation(AtomSet pos, AtomSet neg) : pos_(std::move(pos)), neg_(std::move(neg)) {}

    AtomSet pos_;
    AtomSet neg_;
};

inline PartialInterpretation make_partial(const AtomSet& pos, const AtomSet& neg, const AtomSet& base) {
    for (const AtomSet* s : {&pos, &neg}) {
        auto outside = *s - base;
        if (!outside.empty()) throw OutOfBaseError(outside.first());
    }
    return PartialInterpretation::checked(pos, neg);
}

inline TruthValue truth_of_literal(const PartialInterpretation& i, GroundLiteral lit) {
    TruthValue v = i.value(lit.atom);
    if (!lit.negated || v == TruthValue::undefined) return v;
    return v == TruthValue::true_ ? TruthValue::false_ : TruthValue::true_;
}

/// Three-valued conjunction; the empty body is true.
template <typename Literals>
TruthValue truth_of_body(const PartialInterpretation& i, const Literals& body) {
    bool all_true = true;
    for (const GroundLiteral& lit : body) {
        TruthValue v = truth_of_literal(i, lit);
        if (v == TruthValue::false_) return TruthValue::false_;
        if (v != TruthValue::true_) all_true = false;
    }
    return all_true ? TruthValue::true_ : TruthValue::undefined;
}

inline TruthValue truth_of_body(const PartialInterpretation& i, const GroundClause& c) {
    bool all_true = true;
    for (AtomId a : c.pos) {
        if (i.neg().contains(a)) return TruthValue::false_;
        if (!i.pos().contains(a)) all_true = false;
    }
    for (AtomId a : c.neg) {
        if (i.pos().contains(a)) return TruthValue::false_;
        if (!i.neg().contains(a)) all_true = false;
    }
    return all_true ? TruthValue::true_ : TruthValue::undefined;
}

/// body ⊆ I implies head ∈ I, for every ground clause.
inline bool is_model(const GroundProgram& g, const PartialInterpretation& i) {
    for (const auto& c : g.clauses()) {
        if (truth_of_body(i, c) == TruthValue::true_ && !i.pos().contains(c.head)) return false;
    }
    return true;
}

/// m ∪ ¬(base \ m).
inline PartialInterpretation total_extension(const TwoValuedInterpretation& m, const AtomSet& base) {
    return PartialInterpretation::checked(m, base - m);
}

inline bool knowledge_leq(const PartialInterpretation& i, const PartialInterpretation& j) {
    return i.pos().is_subset_of(j.pos()) && i.neg().is_subset_of(j.neg());
}

inline bool is_total(const PartialInterpretation& i, const AtomSet& base) { return i.decided() == base; }

inline bool is_total(const PartialInterpretation& i) { return i.undefined().empty(); }

}  // namespace lpsem
