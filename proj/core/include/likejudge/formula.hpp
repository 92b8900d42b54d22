#ifndef LIKEJUDGE_FORMULA_HPP
#define LIKEJUDGE_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "likejudge/errors.hpp"

namespace likejudge {

// Declared propositional atoms with a stable total order (declaration index).
class AtomTable {
public:
    AtomTable() = default;
    explicit AtomTable(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int index) const { return names_.at(index); }
    const std::vector<std::string>& names() const { return names_; }
    // -1 when the name is not declared.
    int index_of(std::string_view name) const;

    static bool valid_identifier(std::string_view name);

private:
    std::vector<std::string> names_;
};

// Immutable propositional formula AST. Copies share nodes.
class Formula {
public:
    enum class Kind : std::uint8_t {
        Verum,
        Falsum,
        Atom,
        Not,
        And,
        Or,
        Implies,
        Iff,
    };

    static Formula verum();
    static Formula falsum();
    static Formula atom(int index);
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula biconditional(Formula lhs, Formula rhs);

    Kind kind() const { return node_->kind; }
    int atom_index() const { return node_->atom; }
    Formula child() const { return Formula(node_->lhs); }  // Not
    Formula lhs() const { return Formula(node_->lhs); }
    Formula rhs() const { return Formula(node_->rhs); }

    bool operator==(const Formula& other) const;  // structural equality
    bool operator!=(const Formula& other) const { return !(*this == other); }

private:
    struct Node {
        Kind kind;
        int atom = -1;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// A total truth assignment over an atom table, identified by its position in
// the canonical enumeration: binary counting with atom 0 as the most
// significant bit, so index 0 is the all-false world.
class World {
public:
    World(std::uint32_t index, int atom_count)
        : index_(index), atom_count_(atom_count) {}
    std::uint32_t index() const { return index_; }
    int atom_count() const { return atom_count_; }
    bool value(int atom) const {
        return (index_ >> (atom_count_ - 1 - atom)) & 1u;
    }

private:
    std::uint32_t index_;
    int atom_count_;
};

// ASCII grammar: identifiers, `!` `&` `|` `->` `<->`, parentheses,
// `true`/`false`. Precedence ! > & > | > -> > <->; `->` right-associative,
// `<->` non-associative (chains need parentheses).
Formula parse_formula(std::string_view text, const AtomTable& atoms);

// Minimal-parenthesis rendering; parse(pretty_print(f)) == f structurally.
std::string pretty_print(const Formula& f, const AtomTable& atoms);

bool evaluate(const Formula& f, const World& w);

// Satisfaction vector over the canonical world enumeration, size 2^atoms.
std::vector<bool> truth_table(const Formula& f, int atom_count);

// Worlds satisfying every formula, in increasing index order.
// models({}) is every world. Throws AtomLimitError past `atom_limit`.
std::vector<World> models(const std::vector<Formula>& formulas, int atom_count,
                          int atom_limit = kDefaultAtomLimit);

// True iff every model of `premises` satisfies `conclusion`.
bool entails(const std::vector<Formula>& premises, const Formula& conclusion,
             int atom_count, int atom_limit = kDefaultAtomLimit);

}  // namespace likejudge

#endif
