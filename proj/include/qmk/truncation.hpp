#ifndef QMK_TRUNCATION_HPP
#define QMK_TRUNCATION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qmk/constructions.hpp"
#include "qmk/mckay.hpp"
#include "qmk/quiver.hpp"

namespace qmk {

/// Injective quiver morphism candidate omega = (omega_0, omega_1).
struct QuiverEmbedding {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> arrow_map;
};

/// Both embedding conditions: endpoint compatibility and injectivity.
bool validate_embedding(const QuiverEmbedding& w, const Quiver& sub, const Quiver& sup);

/// Component of a combo inside a full subquiver: keeps exactly the terms all
/// of whose path vertices lie in `image`.  May be zero.
PathCombo component(const PathCombo& a, const Quiver& q, const std::set<std::string>& image);

/// Components of every relation, zeros dropped and scalar duplicates merged.
std::vector<PathCombo> induced_relations(const std::vector<PathCombo>& rho, const Quiver& q,
                                         const std::set<std::string>& image);

/// A truncation sits inside a full subquiver: every arrow of `sup` joining
/// two image vertices must itself be an image arrow.
bool embedding_is_full(const QuiverEmbedding& w, const Quiver& sub, const Quiver& sup,
                       std::vector<std::string>* witnesses = nullptr);

struct TruncationReport {
    bool embedding_valid = false;
    bool image_full = false;
    bool relations_induced = false;
    bool translation_commutes = true;  // stays true when no translation data is checked
    std::vector<std::string> witnesses;
    bool verdict = false;
    std::string summary() const;
};

/// The image must be a full subquiver and omega(rho') must span, cell by
/// cell, the same subspaces as the components of rho inside the image.
TruncationReport is_truncation(const QuiverEmbedding& w, const BoundQuiver& sub, const BoundQuiver& sup);

/// is_truncation plus translation compatibility omega_0 tau = nu omega_0 on
/// the whole tau domain.
TruncationReport mckay_truncation_check(const QuiverEmbedding& w, const BoundQuiver& sub_with_tau,
                                        const BoundQuiver& mckay_with_nu);

/// Dimension check behind the quotient isomorphism: dims of kQ'/(rho') match
/// dims of kQ/(rho) with the complement vertices killed, over image cells up
/// to degree D.
bool complement_quotient_check(const QuiverEmbedding& w, const BoundQuiver& sub, const BoundQuiver& sup,
                               long max_degree, std::vector<std::string>* witnesses = nullptr);

struct PipelineError : Error {
    TruncationReport precondition;
    explicit PipelineError(TruncationReport rep)
        : Error("pipeline precondition failed:\n" + rep.summary()), precondition(std::move(rep)) {}
};

struct PipelineResult {
    long m = 1;
    AbelianMcKay base_mckay;
    TruncationReport base_report;
    ConeResult cone_result;
    CoverResult cover_result;
    QuiverEmbedding omega_tilde;
    TruncationReport cone_report;
    bool translation_compat = false;
    bool verdict = false;
};

/// End-to-end check that the cone of `base` is a truncation of the bound
/// McKay quiver of G x C_m: builds the cyclic cover and the lifted embedding
/// (x,d) -> (omega_0 x, -d) for the smallest m >= 1 + max tau-chain length
/// that verifies (levels wrap modulo m, so the smallest index with tau^m = 0
/// occasionally leaves a stray returning arrow between image vertices), and
/// checks truncation plus translation compatibility at cone level.  With an
/// explicit override the given m is used as-is.
PipelineResult main_theorem_pipeline(const BoundQuiver& base, const AbelianMcKaySpec& g, const QuiverEmbedding& w,
                                     std::optional<long> m_override = std::nullopt);

/// T^n_s: linear A_s with tau(i) = i-1 for n = 1, iterated cone for n > 1.
BoundQuiver t_algebra(long s, long n);

struct TAlgebraChain {
    BoundQuiver base;       // t_algebra(s, n)
    AbelianMcKaySpec spec;  // G_n inside GL(n)
    QuiverEmbedding omega;  // embedding into abelian_bound_mckay(spec)
    std::vector<long> ms;   // cover indices used at stages 1..n-1
};

/// Builds the induction data for T^n_s inside the McKay quiver of
/// Z_r x Z_{m_1} x ... x Z_{m_{n-1}}; requires r >= s+1.
TAlgebraChain t_algebra_chain(long s, long r, long n);

}  // namespace qmk

#endif
