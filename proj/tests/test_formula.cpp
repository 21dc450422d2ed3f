#include <catch2/catch_amalgamated.hpp>

#include "qlsat/formula.hpp"

using namespace qlsat;

namespace {

const char* kSep1Text = "(p0 & (p1 | p2)) & ~((p0 & p1) | (p0 & p2))";

Formula sep1() {
    Formula p = Formula::atom(0), q = Formula::atom(1), r = Formula::atom(2);
    return Formula::conj(Formula::conj(p, Formula::disj(q, r)),
                         Formula::neg(Formula::disj(Formula::conj(p, q), Formula::conj(p, r))));
}

}  // namespace

TEST_CASE("parse: atoms and nesting", "[formula]") {
    CHECK(parse("p0") == Formula::atom(0));
    CHECK(parse("~~p3") == Formula::neg(Formula::neg(Formula::atom(3))));
    CHECK(parse("p17") == Formula::atom(17));
    CHECK(parse("  ( p0 )  ") == Formula::atom(0));
}

TEST_CASE("parse: the separator formula", "[formula]") {
    CHECK(parse(kSep1Text) == sep1());
}

TEST_CASE("parse: precedence and associativity", "[formula]") {
    // ~ binds tighter than &, & tighter than |; & and | left-associative.
    CHECK(parse("~p0 & p1") == Formula::conj(Formula::neg(Formula::atom(0)), Formula::atom(1)));
    CHECK(parse("p0 | p1 & p2") ==
          Formula::disj(Formula::atom(0), Formula::conj(Formula::atom(1), Formula::atom(2))));
    CHECK(parse("p0 & p1 & p2") ==
          Formula::conj(Formula::conj(Formula::atom(0), Formula::atom(1)), Formula::atom(2)));
    CHECK(parse("p0 | p1 | p2") ==
          Formula::disj(Formula::disj(Formula::atom(0), Formula::atom(1)), Formula::atom(2)));
    CHECK(parse("(p0 | p1) & p2") ==
          Formula::conj(Formula::disj(Formula::atom(0), Formula::atom(1)), Formula::atom(2)));
}

TEST_CASE("parse: errors carry byte offsets and expectations", "[formula]") {
    try {
        parse("p0 & ");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 5);
        CHECK_FALSE(e.expected.empty());
    }
    try {
        parse("p0 ) p1");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 3);
    }
    CHECK_THROWS_AS(parse(""), parse_error);
    CHECK_THROWS_AS(parse("q0"), parse_error);
    CHECK_THROWS_AS(parse("p"), parse_error);
    CHECK_THROWS_AS(parse("(p0"), parse_error);
    // Atom index overflow: 2^31 is one past the limit.
    CHECK_THROWS_AS(parse("p2147483648"), parse_error);
    CHECK(parse("p2147483647") == Formula::atom(2147483647));
}

TEST_CASE("print: canonical text", "[formula]") {
    CHECK(print(Formula::atom(0)) == "p0");
    CHECK(print(Formula::neg(Formula::atom(1))) == "~p1");
    CHECK(print(sep1()) == kSep1Text);
    CHECK(print(Formula::neg(Formula::neg(Formula::atom(3)))) == "~~p3");
    CHECK(print(parse("p0 & p1 & p2")) == "(p0 & p1) & p2");
}

TEST_CASE("print then parse is identity", "[formula]") {
    for (const char* text :
         {"p0", "~p1", "p0 & p1", "p0 | ~p1 & p2", kSep1Text, "~(p0 | p1)", "~~~p4"}) {
        Formula f = parse(text);
        CHECK(parse(print(f)) == f);
    }
}

TEST_CASE("atoms: sorted distinct leaf indices", "[formula]") {
    CHECK(atoms(sep1()) == std::vector<int>{0, 1, 2});
    CHECK(atoms(Formula::atom(5)) == std::vector<int>{5});
    CHECK(atoms(parse("(p1 & p1)")) == std::vector<int>{1});
    CHECK(atoms(parse("p3 | (p1 & ~p3)")) == std::vector<int>{1, 3});
}

TEST_CASE("subformula_at resolves paths", "[formula]") {
    Formula f = sep1();
    CHECK(subformula_at(f, {PathStep::Left, PathStep::Right}) == parse("p1 | p2"));
    CHECK(subformula_at(f, {}) == f);
    CHECK(subformula_at(f, {PathStep::Right, PathStep::Child, PathStep::Left}) ==
          parse("p0 & p1"));

    try {
        subformula_at(Formula::atom(0), {PathStep::Child});
        FAIL("expected invalid_path_error");
    } catch (const invalid_path_error& e) {
        CHECK(e.step_index == 0);
    }
    try {
        subformula_at(f, {PathStep::Left, PathStep::Left, PathStep::Child});
        FAIL("expected invalid_path_error");
    } catch (const invalid_path_error& e) {
        CHECK(e.step_index == 2);  // p0 has no child
    }
}

TEST_CASE("node path text round-trips", "[formula]") {
    NodePath p{PathStep::Right, PathStep::Child, PathStep::Left};
    CHECK(path_to_text(p) == "R.C.L");
    CHECK(path_from_text("R.C.L") == p);
    CHECK(path_to_text({}) == "-");
    CHECK(path_from_text("-").empty());
}

TEST_CASE("connective and node counts", "[formula]") {
    CHECK(sep1().connective_count() == 7);
    CHECK(sep1().node_count() == 14);
    CHECK(Formula::atom(0).connective_count() == 0);
}
