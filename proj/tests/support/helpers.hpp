#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lpsem/generate.hpp"
#include "lpsem/ground.hpp"
#include "lpsem/interp.hpp"

namespace testing_support {

inline lpsem::GroundProgram random_program(std::uint64_t seed, std::size_t atoms, std::size_t clauses,
                                           double neg_prob = 0.5, bool stratified = false, std::size_t max_body = 3) {
    lpsem::GeneratorOptions opt;
    opt.atoms = atoms;
    opt.clauses = clauses;
    opt.neg_prob = neg_prob;
    opt.stratified = stratified;
    opt.max_body = max_body;
    return lpsem::ground(lpsem::generate_program(opt, seed));
}

inline lpsem::AtomSet random_subset(std::size_t n, std::mt19937_64& rng) {
    lpsem::AtomSet s(n);
    for (lpsem::AtomId a = 0; a < n; ++a)
        if (rng() & 1U) s.insert(a);
    return s;
}

/// Each atom independently true, false or undefined.
inline lpsem::PartialInterpretation random_partial(std::size_t n, std::mt19937_64& rng) {
    lpsem::AtomSet pos(n), neg(n);
    for (lpsem::AtomId a = 0; a < n; ++a) {
        switch (rng() % 3) {
            case 0: pos.insert(a); break;
            case 1: neg.insert(a); break;
            default: break;
        }
    }
    return lpsem::PartialInterpretation::checked(pos, neg);
}

/// Decides some of i's undefined atoms, giving j with i <= j.
inline lpsem::PartialInterpretation random_extension(const lpsem::PartialInterpretation& i, std::mt19937_64& rng) {
    auto pos = i.pos();
    auto neg = i.neg();
    for (auto a : i.undefined()) {
        switch (rng() % 3) {
            case 0: pos.insert(a); break;
            case 1: neg.insert(a); break;
            default: break;
        }
    }
    return lpsem::PartialInterpretation::checked(pos, neg);
}

inline lpsem::AtomSet random_superset(const lpsem::AtomSet& m, std::mt19937_64& rng) {
    auto out = m;
    for (lpsem::AtomId a = 0; a < m.universe(); ++a)
        if (rng() & 1U) out.insert(a);
    return out;
}

inline lpsem::AtomSet atoms(const lpsem::GroundProgram& g, const std::vector<std::string>& names) {
    lpsem::AtomSet s(g.size());
    for (const auto& n : names) s.insert(g.id_of(n));
    return s;
}

/// Partial interpretation from literal strings like "p" and "not q".
inline lpsem::PartialInterpretation interp(const lpsem::GroundProgram& g, const std::vector<std::string>& lits) {
    lpsem::AtomSet pos(g.size()), neg(g.size());
    for (const auto& l : lits) {
        if (l.rfind("not ", 0) == 0) {
            neg.insert(g.id_of(l.substr(4)));
        } else {
            pos.insert(g.id_of(l));
        }
    }
    return lpsem::PartialInterpretation::checked(pos, neg);
}

inline const char* kExample1 = "p :- p.\nq :- not p.\n";

}  // namespace testing_support
