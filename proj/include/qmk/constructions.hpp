#ifndef QMK_CONSTRUCTIONS_HPP
#define QMK_CONSTRUCTIONS_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qmk/quiver.hpp"

namespace qmk {

/// Sign of the twisting automorphism on arrows.
struct SignTwist {
    int eps = -1;  // +1 or -1
    explicit SignTwist(int e = -1) : eps(e) {
        if (e != 1 && e != -1) throw Error("twist sign must be +1 or -1");
    }
};

enum class TwistVariant { forward, reverse };
enum class RelationSide { rho, theta };

std::string returning_arrow_id(const std::string& vertex);
std::string cover_vertex_id(const std::string& base, long t);
std::string cover_arrow_id(const std::string& base_arrow, long t);
std::string cone_vertex_id(const std::string& base, long d);
std::string cone_first_arrow_id(const std::string& base_arrow, long d);
std::string cone_second_arrow_id(const std::string& base_vertex, long d);

/// Adds one returning arrow beta_i : i -> nu(i) per vertex.
Quiver returning_arrow_quiver(const BoundQuiver& b);

/// Bound quiver of the twisted trivial extension: returning arrows, their
/// squares, and the mixing relations in either presentation:
///   forward:  beta_j a - eps nu(a) beta_i          for a: i -> j
///   reverse:  a beta_{nu^{-1} i} - eps beta_{nu^{-1} j} nu^{-1}(a)
BoundQuiver twisted_trivial_extension(const BoundQuiver& b, SignTwist twist, TwistVariant variant);

/// (Q_{G'}, rho_{G'}): returning arrows with sign-free mixing relations and
/// no beta-squares.  Output nu is the identity (G' lands in SL).
BoundQuiver mckay_returning_arrows_rho(const BoundQuiver& rho_side);

/// (Q_{G'}, theta_{G'}): the reverse twisted trivial extension, plus Loewy
/// length bumped by one and nu set to the identity.
BoundQuiver mckay_returning_arrows_theta(const BoundQuiver& theta_side, SignTwist twist = SignTwist(-1));

struct CoverResult {
    BoundQuiver bq;
    long m = 1;
    std::map<std::string, std::pair<std::string, long>> vertex_origin;  // (i,t)
    std::map<std::string, std::pair<std::string, long>> arrow_origin;   // (alpha,t), including beta arrows
};

/// m-fold cyclic cover: vertices (i,t), level-preserving copies of the old
/// arrows and level-raising returning arrows (beta_i,t): (i,t) -> (nu i,t+1),
/// with the lifted relations of the chosen side.  nu~(i,t) = (i,t-1).
CoverResult cyclic_cover(const BoundQuiver& b, long m, RelationSide side, SignTwist twist = SignTwist(-1));

struct ConeArrowOrigin {
    bool second_type = false;
    std::string base;  // arrow id (first type) or vertex id (second type)
    long level = 0;
};

struct ConeResult {
    BoundQuiver bq;  // carries the lifted translation (x,d) -> (x,d+1)
    std::map<std::string, std::pair<std::string, long>> vertex_origin;
    std::map<std::string, ConeArrowOrigin> arrow_origin;
};

/// The cone construction: vertices (x,d) while tau^d x is defined, first-type copies
/// of the base arrows, second-type arrows (x,d) -> (tau x, d-1), lifted base
/// relations and mesh relations.  Terms whose vertices or arrows do not
/// exist are dropped, which can leave one-term (zero) relations.
ConeResult cone(const BoundQuiver& base);

/// Relation-span-aware equality: same quivers under the witness and the same
/// relation span per (source, target, length) cell.
bool bound_quiver_equal_under(const QuiverIsoWitness& w, const BoundQuiver& a, const BoundQuiver& b);

}  // namespace qmk

#endif
