#ifndef QMK_MCKAY_HPP
#define QMK_MCKAY_HPP

#include <map>
#include <string>
#include <vector>

#include "qmk/character.hpp"
#include "qmk/quiver.hpp"

namespace qmk {

/// Diagonal action of Z_{r1} x ... x Z_{rt} on V: one residue-tuple weight
/// per coordinate of V; repeated weights yield parallel arrows.
struct AbelianMcKaySpec {
    std::vector<long> orders;
    std::vector<std::vector<long>> weights;
};

/// Vertex per irreducible (id = irreducible name), a_{i,j} parallel arrows
/// i -> j from the tensor decomposition of V (x) S_i.
Quiver mckay_quiver(const CharacterTable& t, const RepCharacter& chi_v);

std::string abelian_vertex_id(const std::vector<long>& tuple);
/// Arrow alpha_j(i), 1-based coordinate j.
std::string abelian_arrow_id(long j, const std::vector<long>& tuple);

/// Bound McKay quiver of an abelian group with both relation sets and the
/// Nakayama data nu(i) = i - sum of weights.
struct AbelianMcKay {
    AbelianMcKaySpec spec;
    Quiver quiver;
    std::vector<PathCombo> rho;    // commutation relations of k[V]*G
    std::vector<PathCombo> theta;  // squares + anticommutation of /\V*G
    std::map<std::string, std::string> nu_vertices;
    std::map<std::string, std::string> nu_arrows;
    std::map<std::string, std::vector<long>> vertex_tuples;            // vertex id -> residue tuple
    std::map<std::string, std::pair<long, std::vector<long>>> arrow_data;  // arrow id -> (coordinate, source tuple)

    BoundQuiver rho_side() const;
    BoundQuiver theta_side() const;  // carries loewy_length = n+1
};

AbelianMcKay abelian_bound_mckay(const AbelianMcKaySpec& spec);

/// nu(i) = the unique j with chi_j = chi_i * det^{-1}; keyed by irreducible
/// name.  Throws TableError when no such j exists.
std::map<std::string, std::string> nakayama_from_det(const CharacterTable& t,
                                                     const std::vector<Cyclotomic>& det_values);

}  // namespace qmk

#endif
