#include "doctest.h"
#include "qmk/quiver.hpp"

using namespace qmk;

namespace {

Quiver linear(long s) {
    Quiver q;
    for (long i = 1; i <= s; ++i) q.add_vertex({std::to_string(i), Label::of_residue(i)});
    for (long i = 1; i < s; ++i)
        q.add_arrow({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1), Label::of_name("a")});
    return q;
}

}  // namespace

TEST_CASE("quiver construction rejects bad data") {
    Quiver q = linear(2);
    CHECK_THROWS_AS(q.add_vertex({"1", Label::of_name("dup")}), Error);
    CHECK_THROWS_AS(q.add_arrow({"bad", "1", "9", Label::of_name("x")}), Error);
    CHECK_THROWS_AS(q.add_arrow({"a1", "1", "2", Label::of_name("x")}), Error);
    CHECK(q.arrows_between("1", "2").size() == 1);
    CHECK(q.arrows_from("2").empty());
}

TEST_CASE("paths compose right to left") {
    Quiver q = linear(3);
    Path a1{{"a1"}, ""}, a2{{"a2"}, ""};
    Path p = compose(q, a2, a1);  // apply a1 first
    CHECK(p.arrows == std::vector<std::string>{"a2", "a1"});
    CHECK(path_source(q, p) == "1");
    CHECK(path_target(q, p) == "3");
    CHECK(path_vertices(q, p) == std::vector<std::string>{"1", "2", "3"});
    CHECK_THROWS_AS(compose(q, a1, a2), CompositionError);

    Path e1 = Path::trivial("1");
    CHECK(compose(q, a1, e1) == a1);
    CHECK(compose(q, Path::trivial("2"), a1) == a1);
}

TEST_CASE("composition is associative where defined") {
    Quiver q = linear(4);
    Path a1{{"a1"}, ""}, a2{{"a2"}, ""}, a3{{"a3"}, ""};
    Path left = compose(q, a3, compose(q, a2, a1));
    Path right = compose(q, compose(q, a3, a2), a1);
    CHECK(left == right);
}

TEST_CASE("combos cancel and normalize") {
    Path p{{"a1"}, ""}, r{{"a2"}, ""};
    PathCombo c = make_combo({{p, Rat(2)}, {r, Rat(-2)}, {p, Rat(-2)}});
    CHECK(c.terms().size() == 1);
    CHECK(c.normalized().terms().begin()->second == 1);
    PathCombo z = make_combo({{p, Rat(1)}, {p, Rat(-1)}});
    CHECK(z.is_zero());
}

TEST_CASE("relation validation enforces parallel homogeneous combos") {
    Quiver q = linear(3);
    q.add_arrow({"b1", "1", "2", Label::of_name("b")});
    Path via_a{{"a1"}, ""}, via_b{{"b1"}, ""};
    CHECK(validate_relation(q, make_combo({{via_a, Rat(1)}, {via_b, Rat(-1)}})).ok);

    Path long_path{{"a2", "a1"}, ""};
    CHECK_FALSE(validate_relation(q, make_combo({{via_a, Rat(1)}, {long_path, Rat(1)}})).ok);
    Path a2{{"a2"}, ""};
    CHECK_FALSE(validate_relation(q, make_combo({{via_a, Rat(1)}, {a2, Rat(1)}})).ok);
    Path ghost{{"zz"}, ""};
    CHECK_FALSE(validate_relation(q, make_combo({{ghost, Rat(1)}})).ok);
    Path backwards{{"a1", "a2"}, ""};
    CHECK_FALSE(validate_relation(q, make_combo({{backwards, Rat(1)}})).ok);
    CHECK_THROWS_AS(require_valid_relation(q, PathCombo{}), RelationError);
}

TEST_CASE("identity witness always works") {
    Quiver q = linear(3);
    QuiverIsoWitness id;
    for (const auto& [v, _] : q.vertices()) id.vertex_map[v] = v;
    for (const auto& [a, _] : q.arrows()) id.arrow_map[a] = a;
    CHECK(quiver_equal_under(id, q, q));
}

TEST_CASE("arrow matching by multiplicity") {
    Quiver a = linear(2), b;
    b.add_vertex({"x", Label::of_name("x")});
    b.add_vertex({"y", Label::of_name("y")});
    b.add_arrow({"f", "x", "y", Label::of_name("f")});
    auto w = match_arrows_by_multiplicity(a, b, {{"1", "x"}, {"2", "y"}});
    REQUIRE(w.has_value());
    CHECK(w->arrow_map.at("a1") == "f");
    CHECK(quiver_equal_under(*w, a, b));
    CHECK_FALSE(match_arrows_by_multiplicity(a, b, {{"1", "y"}, {"2", "x"}}).has_value());
}

TEST_CASE("bound quiver validation") {
    BoundQuiver b;
    b.quiver = linear(2);
    b.nakayama = std::map<std::string, std::string>{{"1", "2"}, {"2", "2"}};
    CHECK_THROWS_AS(check_bound_quiver(b), Error);
    b.nakayama = std::map<std::string, std::string>{{"1", "2"}, {"2", "1"}};
    CHECK_NOTHROW(check_bound_quiver(b));
    b.translation = std::map<std::string, std::string>{{"2", "1"}};
    CHECK_NOTHROW(check_bound_quiver(b));
}

TEST_CASE("structured labels render and nest") {
    Label base = Label::of_tuple({1, 0});
    CHECK(base.str() == "(1,0)");
    CHECK(Label::leveled(base, 2).str() == "((1,0),2)");
    CHECK(Label::returning_at(base).str() == "b@(1,0)");
    CHECK(Label::connecting_at(base, 3).str() == "((1,0),3)_1");
    CHECK(Label::leveled(base, 2) == Label::leveled(Label::of_tuple({1, 0}), 2));
    CHECK(Label::leveled(base, 2) != Label::leveled(base, 3));
}
