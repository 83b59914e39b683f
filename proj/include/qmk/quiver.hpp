#ifndef QMK_QUIVER_HPP
#define QMK_QUIVER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qmk/label.hpp"
#include "qmk/rational.hpp"

namespace qmk {

struct Vertex {
    std::string id;
    Label label = Label::of_name("");
};

struct Arrow {
    std::string id;
    std::string source;
    std::string target;
    Label label = Label::of_name("");
};

/// Finite directed multigraph.  Vertices and arrows are keyed by id, kept in
/// sorted order so every traversal and serialization is deterministic.
class Quiver {
  public:
    void add_vertex(Vertex v);
    void add_arrow(Arrow a);

    bool has_vertex(const std::string& id) const { return vertices_.count(id) > 0; }
    bool has_arrow(const std::string& id) const { return arrows_.count(id) > 0; }
    const Vertex& vertex(const std::string& id) const;
    const Arrow& arrow(const std::string& id) const;

    const std::map<std::string, Vertex>& vertices() const { return vertices_; }
    const std::map<std::string, Arrow>& arrows() const { return arrows_; }

    /// Arrow ids leaving v, sorted.
    std::vector<std::string> arrows_from(const std::string& v) const;
    /// Arrow ids from s to t, sorted.
    std::vector<std::string> arrows_between(const std::string& s, const std::string& t) const;

    bool operator==(const Quiver& o) const;

  private:
    std::map<std::string, Vertex> vertices_;
    std::map<std::string, Arrow> arrows_;
};

/// Sequence of composable arrows, written left-to-right with the first
/// applied arrow last: a path p = a_l ... a_1 starts at the source of a_1.
/// A trivial path stores the vertex it sits at.
struct Path {
    std::vector<std::string> arrows;  // written order, arrows.back() applied first
    std::string at;                   // vertex id, used only when arrows is empty

    static Path trivial(const std::string& v) { return Path{{}, v}; }
    bool is_trivial() const { return arrows.empty(); }
    long length() const { return static_cast<long>(arrows.size()); }

    bool operator<(const Path& o) const;
    bool operator==(const Path& o) const { return arrows == o.arrows && (!arrows.empty() || at == o.at); }
};

std::string path_source(const Quiver& q, const Path& p);
std::string path_target(const Quiver& q, const Path& p);
/// Vertices visited in application order: source, then target of each arrow.
std::vector<std::string> path_vertices(const Quiver& q, const Path& p);
std::string path_str(const Path& p);

/// Composition p.q, applying q first.  Requires target(q) == source(p).
Path compose(const Quiver& q, const Path& p, const Path& r);

/// Rational linear combination of parallel equal-length paths.
class PathCombo {
  public:
    PathCombo() = default;
    void add(const Path& p, const Rat& c);
    const std::map<Path, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    PathCombo scaled(const Rat& c) const;
    /// Leading (smallest-path) coefficient made 1; identity for zero combos.
    PathCombo normalized() const;
    bool operator==(const PathCombo& o) const { return terms_ == o.terms_; }
    std::string str() const;

  private:
    std::map<Path, Rat> terms_;
};

PathCombo make_combo(std::initializer_list<std::pair<Path, Rat>> terms);

struct RelationReport {
    bool ok = true;
    std::string message;
    std::string source, target;
    long length = -1;
};

/// Checks parallelism, homogeneity and arrow existence of a combo within q.
RelationReport validate_relation(const Quiver& q, const PathCombo& c);
/// validate_relation, throwing RelationError on failure.
RelationReport require_valid_relation(const Quiver& q, const PathCombo& c);

/// Vertex and arrow bijection candidate between two quivers.
struct QuiverIsoWitness {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> arrow_map;
};

/// True iff the witness is a bijective quiver morphism A -> B.
bool quiver_equal_under(const QuiverIsoWitness& w, const Quiver& a, const Quiver& b);

/// Extends a vertex bijection to a full witness by pairing parallel arrows
/// in id order; empty when arrow multiplicities disagree.
std::optional<QuiverIsoWitness> match_arrows_by_multiplicity(const Quiver& a, const Quiver& b,
                                                             const std::map<std::string, std::string>& vertex_map);

struct BoundQuiver {
    Quiver quiver;
    std::vector<PathCombo> relations;
    std::optional<std::map<std::string, std::string>> nakayama;         // vertex permutation
    std::optional<std::map<std::string, std::string>> nakayama_arrows;  // arrow map covering nakayama
    std::optional<std::map<std::string, std::string>> translation;      // partial tau, non-projective vertices
    std::optional<long> loewy_length;
};

/// Validates all invariants of a bound quiver (relations, nu bijectivity and
/// compatibility, tau injectivity); throws on violation.
void check_bound_quiver(const BoundQuiver& b);

std::map<std::string, std::string> invert_map(const std::map<std::string, std::string>& m);

/// Pushes a combo through vertex/arrow maps (used by witnesses and quiver
/// embeddings).
PathCombo map_combo(const std::map<std::string, std::string>& vertex_map,
                    const std::map<std::string, std::string>& arrow_map, const PathCombo& c);

}  // namespace qmk

#endif
