#pragma once

#include <cctype>
#include <compare>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpsem {

struct Term {
    enum class Kind { constant, variable };

    Kind kind = Kind::constant;
    std::string name;

    static Term constant(std::string n) { return {Kind::constant, std::move(n)}; }
    static Term variable(std::string n) { return {Kind::variable, std::move(n)}; }

    bool is_variable() const { return kind == Kind::variable; }

    friend auto operator<=>(const Term&, const Term&) = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    std::size_t arity() const { return args.size(); }
    bool is_ground() const {
        for (const auto& t : args)
            if (t.is_variable()) return false;
        return true;
    }

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// A ← A_1,...,A_n, not B_1,...,not B_m. Empty bodies are facts.
struct Clause {
    Atom head;
    std::vector<Atom> pos_body;
    std::vector<Atom> neg_body;

    bool is_fact() const { return pos_body.empty() && neg_body.empty(); }
    bool is_definite() const { return neg_body.empty(); }

    friend auto operator<=>(const Clause&, const Clause&) = default;
};

struct SourceProgram {
    std::vector<Clause> clauses;
    std::set<std::string> constants;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

inline std::string to_string(const Atom& a) {
    std::string s = a.predicate;
    if (!a.args.empty()) {
        s += '(';
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i) s += ',';
            s += a.args[i].name;
        }
        s += ')';
    }
    return s;
}

inline std::string to_string(const Clause& c) {
    std::string s = to_string(c.head);
    if (!c.is_fact()) {
        s += " :- ";
        bool first = true;
        for (const auto& a : c.pos_body) {
            if (!first) s += ", ";
            s += to_string(a);
            first = false;
        }
        for (const auto& a : c.neg_body) {
            if (!first) s += ", ";
            s += "not " + to_string(a);
            first = false;
        }
    }
    s += '.';
    return s;
}

inline std::string to_string(const SourceProgram& p) {
    std::string s;
    for (const auto& c : p.clauses) s += to_string(c) + '\n';
    return s;
}

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SourceProgram parse() {
        SourceProgram prog;
        skip_space();
        while (!at_end()) {
            prog.clauses.push_back(clause());
            skip_space();
        }
        for (const auto& c : prog.clauses) {
            collect_constants(c.head, prog.constants);
            for (const auto& a : c.pos_body) collect_constants(a, prog.constants);
            for (const auto& a : c.neg_body) collect_constants(a, prog.constants);
        }
        return prog;
    }

private:
    static void collect_constants(const Atom& a, std::set<std::string>& out) {
        for (const auto& t : a.args)
            if (!t.is_variable()) out.insert(t.name);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (!at_end()) {
            char c = peek();
            if (c == '%') {
                while (!at_end() && peek() != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    void expect(char c) {
        skip_space();
        if (peek() != c) {
            fail(std::string("expected '") + c + "'" + (at_end() ? " before end of input" : ""));
        }
        bump();
    }

    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string ident() {
        skip_space();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected identifier");
        std::size_t start = pos_;
        while (!at_end() && ident_char(peek())) bump();
        return std::string(text_.substr(start, pos_ - start));
    }

    static bool is_upper(const std::string& s) { return std::isupper(static_cast<unsigned char>(s[0])) != 0; }

    Atom atom() {
        skip_space();
        std::size_t line = line_, col = col_;
        std::string name = ident();
        if (is_upper(name)) throw ParseError("predicate must start with a lowercase letter", line, col);
        if (name == "not") throw ParseError("'not' is reserved", line, col);
        Atom a{std::move(name), {}};
        skip_space();
        if (peek() == '(') {
            bump();
            do {
                std::string t = ident();
                a.args.push_back(is_upper(t) ? Term::variable(std::move(t)) : Term::constant(std::move(t)));
                skip_space();
            } while (peek() == ',' && (bump(), true));
            expect(')');
        }
        return a;
    }

    void literal(Clause& c) {
        skip_space();
        // "not" followed by a separator introduces a negative literal
        if (text_.substr(pos_, 3) == "not" && (pos_ + 3 >= text_.size() || !ident_char(text_[pos_ + 3]))) {
            for (int i = 0; i < 3; ++i) bump();
            c.neg_body.push_back(atom());
        } else {
            c.pos_body.push_back(atom());
        }
    }

    Clause clause() {
        Clause c;
        c.head = atom();
        skip_space();
        if (peek() == ':') {
            bump();
            if (peek() != '-') fail("expected ':-'");
            bump();
            literal(c);
            skip_space();
            while (peek() == ',') {
                bump();
                literal(c);
                skip_space();
            }
        }
        expect('.');
        return c;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace detail

/// Parses the clause grammar
///   program := { clause "." }, clause := atom [":-" literal {"," literal}],
///   literal := ["not"] atom, atom := ident ["(" term {"," term} ")"].
/// Uppercase-initial terms are variables. '%' starts a line comment.
inline SourceProgram parse_program(std::string_view text) { return detail::Parser(text).parse(); }

}  // namespace lpsem
