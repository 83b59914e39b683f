#include <algorithm>
#include <set>

#include "doctest.h"
#include "qmk/mckay.hpp"
#include "qmk/path_algebra.hpp"

using namespace qmk;

namespace {

BoundQuiver exterior_two_vars() {
    BoundQuiver b;
    b.quiver.add_vertex({"*", Label::of_name("*")});
    b.quiver.add_arrow({"x", "*", "*", Label::of_name("x")});
    b.quiver.add_arrow({"y", "*", "*", Label::of_name("y")});
    Path xx{{"x", "x"}, ""}, yy{{"y", "y"}, ""}, xy{{"x", "y"}, ""}, yx{{"y", "x"}, ""};
    b.relations = {make_combo({{xx, Rat(1)}}), make_combo({{yy, Rat(1)}}),
                   make_combo({{xy, Rat(1)}, {yx, Rat(1)}})};
    return b;
}

// independent oracle: reduce a word over {x, y} to a signed square-free
// sorted monomial; the quotient dimension in degree d is the number of
// distinct surviving normal forms
std::optional<std::string> exterior_normal_form(std::string word) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] == word[i + 1]) return std::nullopt;
            if (word[i] > word[i + 1]) {
                std::swap(word[i], word[i + 1]);  // sign irrelevant for counting
                changed = true;
            }
        }
    }
    return word;
}

long exterior_oracle_dim(long d) {
    std::set<std::string> forms;
    for (long mask = 0; mask < (1L << d); ++mask) {
        std::string word;
        for (long i = 0; i < d; ++i) word += (mask >> i & 1) ? 'y' : 'x';
        auto nf = exterior_normal_form(word);
        if (nf) forms.insert(*nf);
    }
    return static_cast<long>(forms.size());
}

}  // namespace

TEST_CASE("path enumeration") {
    BoundQuiver b = exterior_two_vars();
    CHECK(paths_of_length(b.quiver, 0, "*", "*").size() == 1);
    CHECK(paths_of_length(b.quiver, 3, "*", "*").size() == 8);
    Quiver a2;
    a2.add_vertex({"1", Label::of_residue(1)});
    a2.add_vertex({"2", Label::of_residue(2)});
    a2.add_arrow({"a1", "1", "2", Label::of_name("a")});
    CHECK(paths_of_length(a2, 1, "1", "2").size() == 1);
    CHECK(paths_of_length(a2, 1, "2", "1").empty());
    CHECK(paths_of_length(a2, 2, "1", "2").empty());
}

TEST_CASE("echelon rank and membership") {
    Echelon e;
    CHECK(e.insert({Rat(1), Rat(2), Rat(0)}));
    CHECK(e.insert({Rat(0), Rat(1), Rat(1)}));
    CHECK_FALSE(e.insert({Rat(1), Rat(3), Rat(1)}));  // sum of the first two
    CHECK(e.rank() == 2);
    CHECK(e.contains({Rat(2), Rat(5), Rat(1)}));
    CHECK_FALSE(e.contains({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("exterior algebra dimensions match the rewriting oracle") {
    BoundQuiver b = exterior_two_vars();
    GradedDims d = quotient_dims(b, 4);
    for (long deg = 0; deg <= 4; ++deg) CHECK(d.total(deg) == exterior_oracle_dim(deg));
    CHECK(d.total(0) == 1);
    CHECK(d.total(1) == 2);
    CHECK(d.total(2) == 1);
    CHECK(d.total(3) == 0);
    CHECK(d.total_all() == 4);
}

TEST_CASE("normal form reduction") {
    BoundQuiver b = exterior_two_vars();
    Path xy{{"x", "y"}, ""}, yx{{"y", "x"}, ""}, xx{{"x", "x"}, ""};
    CHECK(normal_form(b, make_combo({{xy, Rat(1)}, {yx, Rat(1)}}), 2).is_zero());
    CHECK(normal_form(b, make_combo({{xx, Rat(1)}}), 2).is_zero());
    PathCombo r = normal_form(b, make_combo({{yx, Rat(1)}}), 2);
    CHECK_FALSE(r.is_zero());
    // yx = -xy in the quotient, so yx + xy reduces to zero but yx does not
    CHECK(normal_form(b, make_combo({{yx, Rat(1)}, {xy, Rat(1)}}), 2).is_zero());
}

TEST_CASE("dropping every vertex kills the whole quotient") {
    BoundQuiver b = exterior_two_vars();
    GradedDims d = quotient_dims(b, 2, {"*"});
    CHECK(d.total_all() == 0);
}

TEST_CASE("skew group algebra of Z_3 in SL_2 has dimensions 3, 6, 3") {
    AbelianMcKay am = abelian_bound_mckay({{3}, {{1}, {2}}});
    GradedDims d = quotient_dims(am.theta_side(), 3);
    CHECK(d.total(0) == 3);
    CHECK(d.total(1) == 6);
    CHECK(d.total(2) == 3);
    CHECK(d.total(3) == 0);
    CHECK(d.total_all() == 12);
}

TEST_CASE("quadratic orthogonality of the two relation sets") {
    AbelianMcKay am = abelian_bound_mckay({{2, 2}, {{1, 0}, {0, 1}}});
    OrthoReport rep = quadratic_orthocheck(am.quiver, am.rho, am.theta);
    CHECK(rep.ok);
    for (const auto& c : rep.cells) {
        CHECK(c.orthogonal);
        CHECK(c.complementary);
    }
    // rho against itself is not complementary
    CHECK_FALSE(quadratic_orthocheck(am.quiver, am.rho, am.rho).ok);
}

TEST_CASE("relation span equality is scalar and basis independent") {
    BoundQuiver b = exterior_two_vars();
    Path xy{{"x", "y"}, ""}, yx{{"y", "x"}, ""}, xx{{"x", "x"}, ""};
    std::vector<PathCombo> a = {make_combo({{xy, Rat(1)}, {yx, Rat(1)}}), make_combo({{xx, Rat(1)}})};
    std::vector<PathCombo> c = {make_combo({{xx, Rat(7)}}),
                                make_combo({{xy, Rat(-2)}, {yx, Rat(-2)}, {xx, Rat(3)}})};
    CHECK(relation_spans_equal(b.quiver, a, c, nullptr));
    std::vector<std::string> why;
    std::vector<PathCombo> d = {make_combo({{xy, Rat(1)}})};
    CHECK_FALSE(relation_spans_equal(b.quiver, a, d, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("stable translation quiver conditions for Z_3 in SL_2") {
    AbelianMcKay am = abelian_bound_mckay({{3}, {{1}, {2}}});
    BoundQuiver th = am.theta_side();
    StqReport ok = stable_translation_check(th, 2);
    CHECK(ok.ok);
    StqReport bad = stable_translation_check(th, 1);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.violations.empty());
}
