#ifndef QMK_CHARACTER_HPP
#define QMK_CHARACTER_HPP

#include <optional>
#include <string>
#include <vector>

#include "qmk/cyclotomic.hpp"
#include "qmk/rational.hpp"

namespace qmk {

struct ConjClass {
    std::string name;
    long size = 1;
};

struct Irreducible {
    std::string name;
    std::vector<Cyclotomic> values;  // one per class
};

/// Character of a (not necessarily irreducible) representation, with the
/// determinant character alongside when known.  Determinant values are data,
/// not derived: they are unrecoverable from the trace for dim > 1.
struct RepCharacter {
    std::vector<Cyclotomic> values;
    std::optional<std::vector<Cyclotomic>> det;

    long dimension() const;  // value at the identity class (index 0)
};

struct CharacterTable {
    long group_order = 1;
    std::vector<ConjClass> classes;         // identity class first
    std::vector<Irreducible> irreducibles;  // trivial character first for generated tables
    std::optional<std::vector<Cyclotomic>> det_values;
    std::optional<std::vector<long>> abelian_orders;  // set by abelian_table

    long class_index(const std::string& name) const;
    long irreducible_index(const std::string& name) const;
};

/// (1/|G|) sum over classes of size * phi * conj(psi); throws TableError when
/// the exact value is not rational.
Rat inner_product(const CharacterTable& t, const std::vector<Cyclotomic>& phi, const std::vector<Cyclotomic>& psi);

/// Multiplicities (a_{i,1},...,a_{i,n}) of the irreducibles in V tensor S_i.
/// Throws TableError on a negative or non-integral multiplicity and when the
/// dimension count sum_j a_{i,j} dim S_j != dim V * dim S_i fails.
std::vector<long> tensor_decompose(const CharacterTable& t, const RepCharacter& chi_v, long i);

/// Exact orthonormality and dimension checks; throws TableError on failure.
void check_table(const CharacterTable& t);

/// Character table of Z_{r1} x ... x Z_{rt}; classes and irreducibles indexed
/// by residue tuples in mixed-radix order, named by the tuple.
CharacterTable abelian_table(const std::vector<long>& orders);

/// Diagonal action with the given weights on an abelian table: chi_V = sum of
/// lambda_w, det = lambda_{sum w}.
RepCharacter weights_character(const CharacterTable& t, const std::vector<std::vector<long>>& weights);

/// Character of V' = V + V_1 under g -> diag(g, det(g)^{-1}); det becomes 1.
RepCharacter sl_embed(const CharacterTable& t, const RepCharacter& chi_v);

struct ProductWithCyclic {
    CharacterTable table;
    RepCharacter rep;  // distinguished character of V'' on G x C_m, with det
};

/// Table of G x C_m with classes (c,k) named "(c,k)", irreducibles chi_i (x)
/// lambda_j named "(chi_i,j)".  chi_v must carry det values of V; the
/// distinguished character is chi_V(c) + det(c)^{-1} xi_m^k (the last
/// coordinate scaled by xi_m), with det value xi_m^k.
ProductWithCyclic product_with_cyclic(const CharacterTable& t, const RepCharacter& chi_v, long m);

std::string tuple_str(const std::vector<long>& t);
std::string pair_name(const std::string& base, long k);

/// Fixture: hand character table of S_3 (classes e, (12), (123)).
CharacterTable s3_table();

}  // namespace qmk

#endif
