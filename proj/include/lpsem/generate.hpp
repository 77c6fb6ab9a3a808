#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpsem/syntax.hpp"

namespace lpsem {

struct GeneratorOptions {
    std::size_t atoms = 4;
    std::size_t clauses = 6;
    std::size_t max_body = 3;
    double neg_prob = 0.5;
    /// Assign every atom a level; positive body atoms never sit above the head,
    /// negated ones always strictly below.
    bool stratified = false;
};

/// a, b, ..., z, then a26, a27, ...
inline std::string generated_atom_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "a" + std::to_string(i);
}

namespace detail {

// Draws built directly on mt19937_64 output, whose sequence is fixed by the
// standard, so programs are identical across standard libraries.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 rng_;
};

}  // namespace detail

/// Random propositional normal program; the same seed gives the same program.
inline SourceProgram generate_program(const GeneratorOptions& opt, std::uint64_t seed) {
    if (opt.atoms == 0) throw std::invalid_argument("generator: atom count must be positive");
    if (!(opt.neg_prob >= 0.0 && opt.neg_prob <= 1.0)) {
        throw std::invalid_argument("generator: negation probability must lie in [0,1]");
    }
    detail::Draw draw(seed);

    std::vector<std::size_t> level(opt.atoms, 0);
    if (opt.stratified) {
        for (auto& l : level) l = draw.below(opt.atoms);
    }
    auto atom = [](std::size_t i) { return Atom{generated_atom_name(i), {}}; };

    SourceProgram p;
    for (std::size_t k = 0; k < opt.clauses; ++k) {
        const std::size_t head = draw.below(opt.atoms);
        Clause c;
        c.head = atom(head);
        const std::size_t len = draw.below(opt.max_body + 1);
        for (std::size_t j = 0; j < len; ++j) {
            bool negative = draw.unit() < opt.neg_prob;
            std::size_t body = draw.below(opt.atoms);
            if (opt.stratified) {
                std::vector<std::size_t> allowed;
                for (std::size_t a = 0; a < opt.atoms; ++a)
                    if (negative ? level[a] < level[head] : level[a] <= level[head]) allowed.push_back(a);
                if (allowed.empty()) {
                    negative = false;
                    for (std::size_t a = 0; a < opt.atoms; ++a)
                        if (level[a] <= level[head]) allowed.push_back(a);
                }
                body = allowed[body % allowed.size()];
            }
            (negative ? c.neg_body : c.pos_body).push_back(atom(body));
        }
        p.clauses.push_back(std::move(c));
    }
    return p;
}

}  // namespace lpsem
