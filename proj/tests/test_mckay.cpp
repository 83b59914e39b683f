#include "doctest.h"
#include "qmk/mckay.hpp"
#include "qmk/path_algebra.hpp"

using namespace qmk;

TEST_CASE("character-theoretic McKay quiver of Z_3 with weights 1,2") {
    CharacterTable t = abelian_table({3});
    RepCharacter v = weights_character(t, {{1}, {2}});
    Quiver q = mckay_quiver(t, v);
    CHECK(q.vertices().size() == 3);
    CHECK(q.arrows().size() == 6);
    for (const auto& [id, _] : q.vertices()) {
        CHECK(q.arrows_from(id).size() == 2);
    }
    // arrows follow the weights: (k) -> (k+1) and (k) -> (k+2)
    CHECK(q.arrows_between("(0)", "(1)").size() == 1);
    CHECK(q.arrows_between("(0)", "(2)").size() == 1);
    CHECK(q.arrows_between("(0)", "(0)").empty());
}

TEST_CASE("repeated weights give parallel arrows") {
    CharacterTable t = abelian_table({2});
    RepCharacter v = weights_character(t, {{1}, {1}});
    Quiver q = mckay_quiver(t, v);
    CHECK(q.arrows_between("(0)", "(1)").size() == 2);
    CHECK(q.arrows_between("(1)", "(0)").size() == 2);
}

TEST_CASE("abelian construction matches the character computation") {
    for (auto spec : std::vector<AbelianMcKaySpec>{{{5}, {{1}, {2}}},
                                                   {{2, 3}, {{1, 0}, {0, 1}}},
                                                   {{4}, {{1}, {1}}},
                                                   {{2, 2}, {{1, 0}, {0, 1}, {1, 1}}}}) {
        AbelianMcKay am = abelian_bound_mckay(spec);
        CharacterTable t = abelian_table(spec.orders);
        Quiver byChar = mckay_quiver(t, weights_character(t, spec.weights));
        std::map<std::string, std::string> id;
        for (const auto& [v, _] : am.quiver.vertices()) id[v] = v;
        auto w = match_arrows_by_multiplicity(am.quiver, byChar, id);
        REQUIRE(w.has_value());
        CHECK(quiver_equal_under(*w, am.quiver, byChar));
    }
}

TEST_CASE("nakayama from the determinant equals the weight shift") {
    for (auto spec : std::vector<AbelianMcKaySpec>{{{3}, {{1}, {2}}}, {{2, 4}, {{1, 1}, {1, 2}}}}) {
        AbelianMcKay am = abelian_bound_mckay(spec);
        CharacterTable t = abelian_table(spec.orders);
        RepCharacter v = weights_character(t, spec.weights);
        auto nu = nakayama_from_det(t, *v.det);
        CHECK(nu == am.nu_vertices);
    }
}

TEST_CASE("relation counts for Z_2 x Z_2 acting by coordinate characters") {
    AbelianMcKay am = abelian_bound_mckay({{2, 2}, {{1, 0}, {0, 1}}});
    CHECK(am.quiver.vertices().size() == 4);
    CHECK(am.quiver.arrows().size() == 8);
    CHECK(am.rho.size() == 4);    // one commutation square per vertex
    CHECK(am.theta.size() == 12);  // 8 squares + 4 anticommutators
    for (const auto& r : am.rho) CHECK(validate_relation(am.quiver, r).ok);
    for (const auto& r : am.theta) CHECK(validate_relation(am.quiver, r).ok);
}

TEST_CASE("one-dimensional actions have no commutation relations") {
    AbelianMcKay am = abelian_bound_mckay({{4}, {{1}}});
    CHECK(am.rho.empty());
    CHECK(am.theta.size() == 4);  // squares only
    BoundQuiver th = am.theta_side();
    CHECK(th.loewy_length == 2);
    REQUIRE(th.nakayama.has_value());
    CHECK(th.nakayama->at("(0)") == "(3)");  // nu(i) = i - 1
}

TEST_CASE("rho and theta sides share the quiver and the nakayama data") {
    AbelianMcKay am = abelian_bound_mckay({{3}, {{1}, {2}}});
    BoundQuiver r = am.rho_side(), th = am.theta_side();
    CHECK(r.quiver == th.quiver);
    CHECK(r.nakayama == th.nakayama);
    CHECK(r.relations.size() == 3);
    CHECK(th.relations.size() == 9);
    // nu(i) = i - (1 + 2) = i, the SL case
    for (const auto& [v, w] : *r.nakayama) CHECK(v == w);
}
