#include "doctest.h"
#include "qmk/character.hpp"

using namespace qmk;

namespace {

// independent inner product: direct class-weighted sum, no library call
Rat oracle_inner(const CharacterTable& t, const std::vector<Cyclotomic>& phi, const std::vector<Cyclotomic>& psi) {
    Cyclotomic acc;
    for (size_t c = 0; c < t.classes.size(); ++c)
        acc = acc + Cyclotomic(Rat(t.classes[c].size)) * phi[c] * psi[c].conj();
    return acc.as_rational() / t.group_order;
}

}  // namespace

TEST_CASE("S_3 table is orthonormal") {
    CharacterTable t = s3_table();
    CHECK_NOTHROW(check_table(t));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            Rat expect = (i == j) ? 1 : 0;
            CHECK(inner_product(t, t.irreducibles[i].values, t.irreducibles[j].values) == expect);
            CHECK(oracle_inner(t, t.irreducibles[i].values, t.irreducibles[j].values) == expect);
        }
}

TEST_CASE("std (x) std over S_3 decomposes as triv + sign + std") {
    CharacterTable t = s3_table();
    RepCharacter std_rep{t.irreducibles[2].values, std::nullopt};
    auto mult = tensor_decompose(t, std_rep, t.irreducible_index("std"));
    CHECK(mult == std::vector<long>{1, 1, 1});
    // oracle: multiplicities by direct inner product of chi_std^2
    std::vector<Cyclotomic> sq;
    for (const auto& v : std_rep.values) sq.push_back(v * v);
    for (size_t j = 0; j < 3; ++j) CHECK(oracle_inner(t, sq, t.irreducibles[j].values) == Rat(mult[j]));
}

TEST_CASE("tensor with the trivial character is the identity") {
    CharacterTable t = s3_table();
    RepCharacter triv{t.irreducibles[0].values, std::nullopt};
    CHECK(tensor_decompose(t, triv, 0) == std::vector<long>{1, 0, 0});
    CHECK(tensor_decompose(t, triv, 2) == std::vector<long>{0, 0, 1});
}

TEST_CASE("abelian tables pass the exact checks") {
    for (auto orders : std::vector<std::vector<long>>{{2}, {5}, {2, 3}, {4, 4}}) {
        CharacterTable t = abelian_table(orders);
        CHECK_NOTHROW(check_table(t));
        long n = 1;
        for (long o : orders) n *= o;
        CHECK(t.group_order == n);
        CHECK(t.irreducibles.size() == static_cast<size_t>(n));
        CHECK(t.irreducibles[0].name == tuple_str(std::vector<long>(orders.size(), 0)));
    }
}

TEST_CASE("weight characters carry exact determinants") {
    CharacterTable t = abelian_table({5});
    RepCharacter v = weights_character(t, {{1}, {2}});
    CHECK(v.dimension() == 2);
    REQUIRE(v.det.has_value());
    // det = lambda_3, so its value on class g=1 is zeta_5^3
    long g1 = t.class_index("(1)");
    CHECK((*v.det)[g1] == Cyclotomic::root_of_unity(5, 3));
    CHECK(v.values[g1] == Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 2));
}

TEST_CASE("SL embedding appends the inverse determinant") {
    CharacterTable t = abelian_table({4});
    RepCharacter v = weights_character(t, {{1}});
    RepCharacter w = sl_embed(t, v);
    CHECK(w.dimension() == 2);
    REQUIRE(w.det.has_value());
    for (const auto& d : *w.det) CHECK(d == Cyclotomic(Rat(1)));
    long g1 = t.class_index("(1)");
    CHECK(w.values[g1] == Cyclotomic::root_of_unity(4, 1) + Cyclotomic::root_of_unity(4, 3));
}

TEST_CASE("product with a cyclic group") {
    CharacterTable t = abelian_table({3});
    RepCharacter v = weights_character(t, {{1}, {2}});
    ProductWithCyclic p = product_with_cyclic(t, v, 2);
    CHECK(p.table.group_order == 6);
    CHECK(p.table.irreducibles.size() == 6);
    CHECK_NOTHROW(check_table(p.table));
    CHECK(p.rep.dimension() == 3);
    REQUIRE(p.rep.det.has_value());
    // det of V'' on ((1), 1) is det_V(1) * zeta_2 ... the last coordinate contributes zeta_m
    long c = p.table.class_index(pair_name("(1)", 1));
    CHECK((*p.rep.det)[c] == Cyclotomic::root_of_unity(3, 0) * Cyclotomic::root_of_unity(2, 1));
    CHECK(p.rep.values[c] ==
          Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2) + Cyclotomic::root_of_unity(2, 1));
}

TEST_CASE("broken tables are rejected") {
    CharacterTable t = s3_table();
    t.irreducibles[2].values[0] = Cyclotomic(Rat(3));
    CHECK_THROWS_AS(check_table(t), TableError);
    CharacterTable t2 = s3_table();
    t2.classes[1].size = 2;
    CHECK_THROWS_AS(check_table(t2), TableError);
}
