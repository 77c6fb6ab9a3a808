#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lpsem/atom_set.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

/// Constant injected when a program mentions no constant symbol. The leading
/// underscore keeps it outside the surface grammar.
inline constexpr std::string_view kSyntheticConstant = "_c";

/// Ground atoms of a program, sorted by printed form. Shared between a program
/// and its reducts so atom ids stay comparable.
class AtomTable {
public:
    AtomTable() = default;
    explicit AtomTable(std::vector<Atom> atoms) {
        std::vector<std::pair<std::string, Atom>> named;
        named.reserve(atoms.size());
        for (auto& a : atoms) {
            if (!a.is_ground()) throw std::invalid_argument("atom table: non-ground atom " + to_string(a));
            named.emplace_back(to_string(a), std::move(a));
        }
        std::sort(named.begin(), named.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        named.erase(std::unique(named.begin(), named.end(),
                                [](const auto& x, const auto& y) { return x.first == y.first; }),
                    named.end());
        for (auto& [name, atom] : named) {
            index_.emplace(name, static_cast<AtomId>(atoms_.size()));
            names_.push_back(std::move(name));
            atoms_.push_back(std::move(atom));
        }
    }

    std::size_t size() const { return atoms_.size(); }
    const Atom& atom(AtomId id) const { return atoms_.at(id); }
    const std::string& name(AtomId id) const { return names_.at(id); }
    std::span<const Atom> atoms() const { return atoms_; }

    std::optional<AtomId> find(std::string_view printed) const {
        auto it = index_.find(std::string(printed));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<AtomId> find(const Atom& a) const { return find(to_string(a)); }

    AtomId id_of(std::string_view printed) const {
        if (auto id = find(printed)) return *id;
        throw std::out_of_range("atom not in Herbrand base: " + std::string(printed));
    }

private:
    std::vector<Atom> atoms_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> index_;
};

/// Ground clause over atom ids. Body atom lists are sorted and duplicate-free.
struct GroundClause {
    AtomId head = 0;
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;

    bool is_definite() const { return neg.empty(); }

    friend auto operator<=>(const GroundClause&, const GroundClause&) = default;
};

/// ground(P) together with its Herbrand base B_P.
class GroundProgram {
public:
    GroundProgram() : GroundProgram(std::make_shared<const AtomTable>(), {}) {}

    GroundProgram(std::shared_ptr<const AtomTable> table, std::vector<GroundClause> clauses)
        : table_(std::move(table)), clauses_(std::move(clauses)) {
        const auto n = table_->size();
        for (auto& c : clauses_) {
            canonicalize(c.pos);
            canonicalize(c.neg);
            bool ok = c.head < n;
            for (AtomId a : c.pos) ok = ok && a < n;
            for (AtomId a : c.neg) ok = ok && a < n;
            if (!ok) throw std::invalid_argument("ground clause refers to an atom outside the base");
        }
        std::sort(clauses_.begin(), clauses_.end());
        clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
        by_head_.resize(n);
        for (std::size_t i = 0; i < clauses_.size(); ++i) by_head_[clauses_[i].head].push_back(i);
    }

    /// Builds a program from ground source clauses; `extra_base` atoms join the
    /// base even if no clause mentions them.
    static GroundProgram from_clauses(const std::vector<Clause>& clauses, std::vector<Atom> extra_base = {}) {
        std::vector<Atom> atoms = std::move(extra_base);
        for (const auto& c : clauses) {
            atoms.push_back(c.head);
            atoms.insert(atoms.end(), c.pos_body.begin(), c.pos_body.end());
            atoms.insert(atoms.end(), c.neg_body.begin(), c.neg_body.end());
        }
        auto table = std::make_shared<const AtomTable>(std::move(atoms));
        std::vector<GroundClause> out;
        out.reserve(clauses.size());
        for (const auto& c : clauses) {
            GroundClause g;
            g.head = *table->find(c.head);
            for (const auto& a : c.pos_body) g.pos.push_back(*table->find(a));
            for (const auto& a : c.neg_body) g.neg.push_back(*table->find(a));
            out.push_back(std::move(g));
        }
        return GroundProgram(std::move(table), std::move(out));
    }

    /// Same base, different clauses (used for reducts).
    GroundProgram with_clauses(std::vector<GroundClause> clauses) const { return GroundProgram(table_, std::move(clauses)); }

    std::size_t size() const { return table_->size(); }
    const AtomTable& atoms() const { return *table_; }
    const std::shared_ptr<const AtomTable>& atom_table() const { return table_; }
    std::span<const GroundClause> clauses() const { return clauses_; }
    std::span<const std::size_t> clauses_for(AtomId head) const { return by_head_.at(head); }
    const GroundClause& clause(std::size_t i) const { return clauses_.at(i); }

    AtomSet base() const { return AtomSet::full(size()); }
    AtomSet empty_set() const { return AtomSet(size()); }

    bool is_definite() const {
        return std::all_of(clauses_.begin(), clauses_.end(), [](const GroundClause& c) { return c.is_definite(); });
    }

    std::string name(AtomId id) const { return table_->name(id); }
    AtomId id_of(std::string_view printed) const { return table_->id_of(printed); }

    Clause to_clause(const GroundClause& g) const {
        Clause c;
        c.head = table_->atom(g.head);
        for (AtomId a : g.pos) c.pos_body.push_back(table_->atom(a));
        for (AtomId a : g.neg) c.neg_body.push_back(table_->atom(a));
        return c;
    }

private:
    static void canonicalize(std::vector<AtomId>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    std::shared_ptr<const AtomTable> table_;
    std::vector<GroundClause> clauses_;
    std::vector<std::vector<std::size_t>> by_head_;
};

namespace detail {

inline void collect_variables(const Atom& a, std::vector<std::string>& out) {
    for (const auto& t : a.args)
        if (t.is_variable() && std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
}

inline Atom substitute(const Atom& a, const std::map<std::string, std::string>& theta) {
    Atom r{a.predicate, {}};
    r.args.reserve(a.args.size());
    for (const auto& t : a.args) r.args.push_back(t.is_variable() ? Term::constant(theta.at(t.name)) : t);
    return r;
}

inline void enumerate_tuples(std::size_t arity, const std::vector<std::string>& constants,
                             std::vector<std::string>& current,
                             const std::function<void(const std::vector<std::string>&)>& emit) {
    if (current.size() == arity) {
        emit(current);
        return;
    }
    for (const auto& c : constants) {
        current.push_back(c);
        enumerate_tuples(arity, constants, current, emit);
        current.pop_back();
    }
}

}  // namespace detail

/// Instantiates every clause with every substitution of its variables by
/// constants and builds the Herbrand base over the program's predicates.
inline GroundProgram ground(const SourceProgram& p) {
    std::set<std::string> constant_set = p.constants;
    std::set<std::pair<std::string, std::size_t>> predicates;
    auto note = [&](const Atom& a) {
        predicates.emplace(a.predicate, a.arity());
        for (const auto& t : a.args)
            if (!t.is_variable()) constant_set.insert(t.name);
    };
    for (const auto& c : p.clauses) {
        note(c.head);
        for (const auto& a : c.pos_body) note(a);
        for (const auto& a : c.neg_body) note(a);
    }
    if (constant_set.empty()) constant_set.insert(std::string(kSyntheticConstant));
    const std::vector<std::string> constants(constant_set.begin(), constant_set.end());

    std::vector<Atom> base;
    for (const auto& [pred, arity] : predicates) {
        std::vector<std::string> cur;
        detail::enumerate_tuples(arity, constants, cur, [&](const std::vector<std::string>& tuple) {
            Atom a{pred, {}};
            for (const auto& c : tuple) a.args.push_back(Term::constant(c));
            base.push_back(std::move(a));
        });
    }

    std::vector<Clause> instances;
    for (const auto& c : p.clauses) {
        std::vector<std::string> vars;
        detail::collect_variables(c.head, vars);
        for (const auto& a : c.pos_body) detail::collect_variables(a, vars);
        for (const auto& a : c.neg_body) detail::collect_variables(a, vars);
        std::vector<std::string> cur;
        detail::enumerate_tuples(vars.size(), constants, cur, [&](const std::vector<std::string>& values) {
            std::map<std::string, std::string> theta;
            for (std::size_t i = 0; i < vars.size(); ++i) theta[vars[i]] = values[i];
            Clause g;
            g.head = detail::substitute(c.head, theta);
            for (const auto& a : c.pos_body) g.pos_body.push_back(detail::substitute(a, theta));
            for (const auto& a : c.neg_body) g.neg_body.push_back(detail::substitute(a, theta));
            instances.push_back(std::move(g));
        });
    }
    return GroundProgram::from_clauses(instances, std::move(base));
}

inline GroundProgram ground_text(std::string_view text) { return ground(parse_program(text)); }

/// B_P, in lexicographic order.
inline std::vector<Atom> herbrand_base(const GroundProgram& g) {
    auto atoms = g.atoms().atoms();
    return {atoms.begin(), atoms.end()};
}

/// Views a ground program as a source program again (constants taken from
/// the base, so synthetic constants survive).
inline SourceProgram to_source(const GroundProgram& g) {
    SourceProgram p;
    for (const auto& c : g.clauses()) p.clauses.push_back(g.to_clause(c));
    for (const auto& a : g.atoms().atoms())
        for (const auto& t : a.args) p.constants.insert(t.name);
    return p;
}

}  // namespace lpsem
