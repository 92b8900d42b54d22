#include "likejudge/formula.hpp"

#include <cctype>
#include <utility>

namespace likejudge {

AtomTable::AtomTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_identifier(names_[i])) {
            throw DomainError("invalid atom name '" + names_[i] + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[j] == names_[i]) {
                throw DomainError("duplicate atom name '" + names_[i] + "'");
            }
        }
    }
}

int AtomTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

bool AtomTable::valid_identifier(std::string_view name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
        return false;
    }
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
            return false;
        }
    }
    return true;
}

Formula Formula::verum() {
    return Formula(std::make_shared<const Node>(Node{Kind::Verum, -1, {}, {}}));
}
Formula Formula::falsum() {
    return Formula(std::make_shared<const Node>(Node{Kind::Falsum, -1, {}, {}}));
}
Formula Formula::atom(int index) {
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, index, {}, {}}));
}
Formula Formula::negation(Formula f) {
    return Formula(
        std::make_shared<const Node>(Node{Kind::Not, -1, std::move(f.node_), {}}));
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::And, -1, std::move(lhs.node_), std::move(rhs.node_)}));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::Or, -1, std::move(lhs.node_), std::move(rhs.node_)}));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::Implies, -1, std::move(lhs.node_), std::move(rhs.node_)}));
}
Formula Formula::biconditional(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::Iff, -1, std::move(lhs.node_), std::move(rhs.node_)}));
}

bool Formula::operator==(const Formula& other) const {
    const Node* a = node_.get();
    const Node* b = other.node_.get();
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Kind::Verum:
        case Kind::Falsum:
            return true;
        case Kind::Atom:
            return a->atom == b->atom;
        case Kind::Not:
            return Formula(a->lhs) == Formula(b->lhs);
        default:
            return Formula(a->lhs) == Formula(b->lhs) &&
                   Formula(a->rhs) == Formula(b->rhs);
    }
}

namespace {

enum class TokKind { Ident, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {TokKind::End, "", start};
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                ++pos_;
            }
            std::string word(text_.substr(start, pos_ - start));
            if (word == "true") {
                current_ = {TokKind::True, word, start};
            } else if (word == "false") {
                current_ = {TokKind::False, word, start};
            } else {
                current_ = {TokKind::Ident, word, start};
            }
            return;
        }
        switch (c) {
            case '!': ++pos_; current_ = {TokKind::Not, "!", start}; return;
            case '&': ++pos_; current_ = {TokKind::And, "&", start}; return;
            case '|': ++pos_; current_ = {TokKind::Or, "|", start}; return;
            case '(': ++pos_; current_ = {TokKind::LParen, "(", start}; return;
            case ')': ++pos_; current_ = {TokKind::RParen, ")", start}; return;
            case '-':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                    pos_ += 2;
                    current_ = {TokKind::Implies, "->", start};
                    return;
                }
                throw ParseError("expected '->'", start);
            case '<':
                if (text_.substr(pos_, 3) == "<->") {
                    pos_ += 3;
                    current_ = {TokKind::Iff, "<->", start};
                    return;
                }
                throw ParseError("expected '<->'", start);
            default:
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{TokKind::End, "", 0};
};

class Parser {
public:
    Parser(std::string_view text, const AtomTable& atoms)
        : lexer_(text), atoms_(atoms) {}

    Formula parse() {
        Formula f = biconditional();
        const Token& t = lexer_.peek();
        if (t.kind != TokKind::End) {
            throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
        return f;
    }

private:
    // <-> is non-associative: a <-> b <-> c is rejected.
    Formula biconditional() {
        Formula lhs = implication();
        if (lexer_.peek().kind == TokKind::Iff) {
            lexer_.take();
            Formula rhs = implication();
            const Token& t = lexer_.peek();
            if (t.kind == TokKind::Iff) {
                throw ParseError("'<->' is non-associative; parenthesize", t.pos);
            }
            return Formula::biconditional(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Formula implication() {
        Formula lhs = disjunction();
        if (lexer_.peek().kind == TokKind::Implies) {
            lexer_.take();
            Formula rhs = implication();  // right-associative
            return Formula::implication(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (lexer_.peek().kind == TokKind::Or) {
            lexer_.take();
            f = Formula::disjunction(std::move(f), conjunction());
        }
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (lexer_.peek().kind == TokKind::And) {
            lexer_.take();
            f = Formula::conjunction(std::move(f), unary());
        }
        return f;
    }

    Formula unary() {
        const Token& t = lexer_.peek();
        switch (t.kind) {
            case TokKind::Not:
                lexer_.take();
                return Formula::negation(unary());
            case TokKind::True:
                lexer_.take();
                return Formula::verum();
            case TokKind::False:
                lexer_.take();
                return Formula::falsum();
            case TokKind::LParen: {
                lexer_.take();
                Formula f = biconditional();
                const Token& close = lexer_.peek();
                if (close.kind != TokKind::RParen) {
                    throw ParseError("expected ')'", close.pos);
                }
                lexer_.take();
                return f;
            }
            case TokKind::Ident: {
                Token id = lexer_.take();
                int index = atoms_.index_of(id.text);
                if (index < 0) throw UndeclaredAtomError(id.text, id.pos);
                return Formula::atom(index);
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    Lexer lexer_;
    const AtomTable& atoms_;
};

int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Iff: return 0;
        case Formula::Kind::Implies: return 1;
        case Formula::Kind::Or: return 2;
        case Formula::Kind::And: return 3;
        case Formula::Kind::Not: return 4;
        default: return 5;
    }
}

void print_rec(const Formula& f, const AtomTable& atoms, std::string& out);

void print_child(const Formula& child, const AtomTable& atoms, bool parens,
                 std::string& out) {
    if (parens) out += '(';
    print_rec(child, atoms, out);
    if (parens) out += ')';
}

void print_rec(const Formula& f, const AtomTable& atoms, std::string& out) {
    int p = precedence(f.kind());
    switch (f.kind()) {
        case Formula::Kind::Verum: out += "true"; return;
        case Formula::Kind::Falsum: out += "false"; return;
        case Formula::Kind::Atom: out += atoms.name(f.atom_index()); return;
        case Formula::Kind::Not:
            out += '!';
            print_child(f.child(), atoms, precedence(f.child().kind()) < p, out);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            // left-associative: equal precedence on the right needs parens
            print_child(f.lhs(), atoms, precedence(f.lhs().kind()) < p, out);
            out += f.kind() == Formula::Kind::And ? " & " : " | ";
            print_child(f.rhs(), atoms, precedence(f.rhs().kind()) <= p, out);
            return;
        }
        case Formula::Kind::Implies:
            // right-associative
            print_child(f.lhs(), atoms, precedence(f.lhs().kind()) <= p, out);
            out += " -> ";
            print_child(f.rhs(), atoms, precedence(f.rhs().kind()) < p, out);
            return;
        case Formula::Kind::Iff:
            // non-associative: nested <-> always parenthesized
            print_child(f.lhs(), atoms, precedence(f.lhs().kind()) <= p, out);
            out += " <-> ";
            print_child(f.rhs(), atoms, precedence(f.rhs().kind()) <= p, out);
            return;
    }
}

}  // namespace

Formula parse_formula(std::string_view text, const AtomTable& atoms) {
    return Parser(text, atoms).parse();
}

std::string pretty_print(const Formula& f, const AtomTable& atoms) {
    std::string out;
    print_rec(f, atoms, out);
    return out;
}

bool evaluate(const Formula& f, const World& w) {
    switch (f.kind()) {
        case Formula::Kind::Verum: return true;
        case Formula::Kind::Falsum: return false;
        case Formula::Kind::Atom: return w.value(f.atom_index());
        case Formula::Kind::Not: return !evaluate(f.child(), w);
        case Formula::Kind::And: return evaluate(f.lhs(), w) && evaluate(f.rhs(), w);
        case Formula::Kind::Or: return evaluate(f.lhs(), w) || evaluate(f.rhs(), w);
        case Formula::Kind::Implies:
            return !evaluate(f.lhs(), w) || evaluate(f.rhs(), w);
        case Formula::Kind::Iff:
            return evaluate(f.lhs(), w) == evaluate(f.rhs(), w);
    }
    return false;
}

std::vector<bool> truth_table(const Formula& f, int atom_count) {
    std::uint64_t count = std::uint64_t{1} << atom_count;
    std::vector<bool> table(count);
    for (std::uint64_t w = 0; w < count; ++w) {
        table[w] = evaluate(f, World(static_cast<std::uint32_t>(w), atom_count));
    }
    return table;
}

std::vector<World> models(const std::vector<Formula>& formulas, int atom_count,
                          int atom_limit) {
    if (atom_count > atom_limit) throw AtomLimitError(atom_count, atom_limit);
    std::uint64_t count = std::uint64_t{1} << atom_count;
    std::vector<World> result;
    for (std::uint64_t w = 0; w < count; ++w) {
        World world(static_cast<std::uint32_t>(w), atom_count);
        bool ok = true;
        for (const Formula& f : formulas) {
            if (!evaluate(f, world)) {
                ok = false;
                break;
            }
        }
        if (ok) result.push_back(world);
    }
    return result;
}

bool entails(const std::vector<Formula>& premises, const Formula& conclusion,
             int atom_count, int atom_limit) {
    std::vector<Formula> fs = premises;
    fs.push_back(Formula::negation(conclusion));
    return models(fs, atom_count, atom_limit).empty();
}

}  // namespace likejudge
