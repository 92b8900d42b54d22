#include <doctest.h>

#include "helpers.hpp"
#include "likejudge/formula.hpp"

using namespace likejudge;

namespace {

World world_of(int index, int atoms) {
    return World(static_cast<std::uint32_t>(index), atoms);
}

}  // namespace

TEST_CASE("parses the hotel constraint shape") {
    AtomTable atoms({"e", "x", "a", "s", "t", "h"});
    Formula f = parse_formula("(!e | x) <-> a", atoms);
    REQUIRE(f.kind() == Formula::Kind::Iff);
    CHECK(f.rhs() == Formula::atom(2));
    Formula lhs = f.lhs();
    REQUIRE(lhs.kind() == Formula::Kind::Or);
    CHECK(lhs.lhs() == Formula::negation(Formula::atom(0)));
    CHECK(lhs.rhs() == Formula::atom(1));
}

TEST_CASE("single atom and undeclared atom") {
    AtomTable atoms({"p"});
    CHECK(parse_formula("p", atoms) == Formula::atom(0));
    CHECK_THROWS_AS(parse_formula("p -> q", atoms), UndeclaredAtomError);
    try {
        parse_formula("p -> q", atoms);
    } catch (const UndeclaredAtomError& e) {
        CHECK(e.name() == "q");
        CHECK(e.position() == 5);
    }
}

TEST_CASE("grammar corners") {
    AtomTable atoms({"a", "b", "c"});
    // precedence: ! > & > | > -> > <->
    Formula f = parse_formula("!a & b | c -> a <-> b", atoms);
    CHECK(f.kind() == Formula::Kind::Iff);
    CHECK(f.lhs().kind() == Formula::Kind::Implies);
    CHECK(f.lhs().lhs().kind() == Formula::Kind::Or);
    // -> is right-associative
    Formula g = parse_formula("a -> b -> c", atoms);
    CHECK(g.rhs().kind() == Formula::Kind::Implies);
    // <-> chains need parentheses
    CHECK_THROWS_AS(parse_formula("a <-> b <-> c", atoms), ParseError);
    CHECK_NOTHROW(parse_formula("(a <-> b) <-> c", atoms));
    // verum/falsum literals
    CHECK(parse_formula("true", atoms) == Formula::verum());
    CHECK(parse_formula("a & false", atoms) ==
          Formula::conjunction(Formula::atom(0), Formula::falsum()));
    CHECK_THROWS_AS(parse_formula("a &", atoms), ParseError);
    CHECK_THROWS_AS(parse_formula("(a | b", atoms), ParseError);
    CHECK_THROWS_AS(parse_formula("a ? b", atoms), ParseError);
    CHECK_THROWS_AS(parse_formula("", atoms), ParseError);
}

TEST_CASE("evaluation is classical") {
    AtomTable pq({"p", "q"});
    Formula imp = parse_formula("p -> q", pq);
    CHECK_FALSE(evaluate(imp, world_of(0b10, 2)));
    CHECK(evaluate(imp, world_of(0b01, 2)));
    CHECK(evaluate(Formula::verum(), world_of(0, 2)));

    AtomTable hotel({"e", "x", "a"});
    Formula c = parse_formula("(!e | x) <-> a", hotel);
    // e=true, x=false, a=false: (!e|x) = false, a = false
    CHECK(evaluate(c, world_of(0b100, 3)));
    // e=true, x=false, a=true: false <-> true
    CHECK_FALSE(evaluate(c, world_of(0b101, 3)));
}

TEST_CASE("models enumerates the truth table in index order") {
    AtomTable pq({"p", "q"});
    std::vector<World> ms = models({parse_formula("p -> q", pq)}, 2);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0].index() == 0);  // 00
    CHECK(ms[1].index() == 1);  // 01
    CHECK(ms[2].index() == 3);  // 11

    AtomTable p({"p"});
    CHECK(models({parse_formula("p", p), parse_formula("!p", p)}, 1).empty());
    CHECK(models({}, 2).size() == 4);

    AtomTable hotel({"s", "t", "x", "e", "a", "h"});
    std::vector<Formula> gamma = {
        parse_formula("(!e | x) <-> a", hotel),
        parse_formula("((s | t) & a) <-> h", hotel),
    };
    CHECK_FALSE(models(gamma, 6).empty());
}

TEST_CASE("atom limit is enforced") {
    CHECK_THROWS_AS(models({}, 25), AtomLimitError);
    CHECK_NOTHROW(models({}, 10));
    CHECK_THROWS_AS(models({}, 11, 10), AtomLimitError);
}

TEST_CASE("entailment") {
    AtomTable pq({"p", "q"});
    Formula p = parse_formula("p", pq);
    Formula imp = parse_formula("p -> q", pq);
    Formula q = parse_formula("q", pq);
    CHECK(entails({p, imp}, q, 2));
    CHECK_FALSE(entails({}, p, 2));

    AtomTable hotel({"s", "t", "x", "e", "a", "h"});
    Formula na = parse_formula("!a", hotel);
    Formula c1 = parse_formula("(!e | x) <-> a", hotel);
    CHECK(entails({na, c1}, parse_formula("e", hotel), 6));
}

TEST_CASE("model count splits and entailment matches the model check") {
    AtomTable atoms({"a", "b", "c", "d", "e", "f"});
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Formula f = ljt::random_formula(atoms, rng);
        std::size_t pos = models({f}, 6).size();
        std::size_t neg = models({Formula::negation(f)}, 6).size();
        CHECK(pos + neg == 64);

        Formula g = ljt::random_formula(atoms, rng);
        bool lhs = entails({f}, g, 6);
        bool rhs = models({f, Formula::negation(g)}, 6).empty();
        CHECK(lhs == rhs);

        std::vector<World> ms = models({f}, 6);
        for (std::size_t i = 1; i < ms.size(); ++i) {
            CHECK(ms[i - 1].index() < ms[i].index());  // strictly increasing
        }
    }
}

TEST_CASE("pretty-print re-parses to the same tree") {
    AtomTable atoms({"p", "q", "r"});
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Formula f = ljt::random_formula(atoms, rng, 4);
        std::string text = pretty_print(f, atoms);
        CAPTURE(text);
        Formula reparsed = parse_formula(text, atoms);
        CHECK(reparsed == f);
    }
    CHECK(pretty_print(parse_formula("(!e|x)<->a", AtomTable({"e", "x", "a"})),
                       AtomTable({"e", "x", "a"})) == "!e | x <-> a");
}

TEST_CASE("atom table validation") {
    CHECK_THROWS_AS(AtomTable({"p", "p"}), DomainError);
    CHECK_THROWS_AS(AtomTable({"1p"}), DomainError);
    CHECK_THROWS_AS(AtomTable({""}), DomainError);
    AtomTable t({"p_1", "Q2"});
    CHECK(t.index_of("p_1") == 0);
    CHECK(t.index_of("missing") == -1);
}
