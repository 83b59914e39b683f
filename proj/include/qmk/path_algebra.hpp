#ifndef QMK_PATH_ALGEBRA_HPP
#define QMK_PATH_ALGEBRA_HPP

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qmk/quiver.hpp"

namespace qmk {

/// All length-d paths i -> j, sorted lexicographically in arrow ids.
std::vector<Path> paths_of_length(const Quiver& q, long d, const std::string& i, const std::string& j);

/// Incremental exact row echelon over Q; pivot choice is the lowest column
/// index, so bases are reproducible.
class Echelon {
  public:
    /// Reduces row by the current basis and inserts the residue when nonzero.
    /// Returns true iff the rank grew.
    bool insert(std::vector<Rat> row);
    /// Residue of row after forward elimination; zero iff row is in the span.
    std::vector<Rat> reduce(std::vector<Rat> row) const;
    bool contains(const std::vector<Rat>& row) const;
    size_t rank() const { return rows_.size(); }

  private:
    std::map<size_t, std::vector<Rat>> rows_;  // pivot column -> row, pivot normalized to 1
};

struct GradedDims {
    // (source, target, degree) -> dim of e_target (kQ/I)_degree e_source
    std::map<std::tuple<std::string, std::string, long>, long> dims;
    long max_degree = 0;

    long at(const std::string& i, const std::string& j, long d) const;
    long total(long d) const;
    long total_all() const;
};

/// Graded dimensions of kQ/(relations (+ trivial paths of drop_vertices)) up
/// to degree D, computed degree by degree by exact elimination on the ideal
/// slice spanned by {p.r.q}.
GradedDims quotient_dims(const BoundQuiver& b, long max_degree, const std::set<std::string>& drop_vertices = {});

/// Residue of c modulo the ideal slice in its degree; zero combo iff c lies
/// in the ideal.  Throws when deg(c) > max_degree.
PathCombo normal_form(const BoundQuiver& b, const PathCombo& c, long max_degree,
                      const std::set<std::string>& drop_vertices = {});

struct OrthoCell {
    std::string source, target;
    long n_paths = 0;
    long rho_rank = 0, theta_rank = 0;
    bool orthogonal = true;
    bool complementary = true;
};

struct OrthoReport {
    bool ok = true;
    std::vector<OrthoCell> cells;
    std::string summary() const;
};

/// True iff rho and theta span exact orthogonal complements of each other in
/// every length-2 cell under the arrow-wise dual pairing.
OrthoReport quadratic_orthocheck(const Quiver& q, const std::vector<PathCombo>& rho,
                                 const std::vector<PathCombo>& theta);

struct StqReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::string summary() const;
};

/// Exact span comparison per (source, target, length) cell; relations are
/// only defined up to scalar and duplication, so span equality is the right
/// notion of relation-set equality.  Failing cells are described in
/// `witnesses` when given.
bool relation_spans_equal(const Quiver& q, const std::vector<PathCombo>& a, const std::vector<PathCombo>& b,
                          std::vector<std::string>* witnesses);

/// Stable-translation-quiver conditions for a graded self-injective bound
/// quiver of Loewy length l+1: nu is a permutation, maximal bound paths all
/// have length l, and the socle path from nu(i) lands exactly at i with a
/// one-dimensional socle.
StqReport stable_translation_check(const BoundQuiver& b, long l);

}  // namespace qmk

#endif
