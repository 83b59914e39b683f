#include "qmk/path_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace qmk {

namespace {

void extend_paths(const Quiver& q, const std::string& at, long remaining, std::vector<std::string>& stack,
                  const std::string& goal, std::vector<Path>& out) {
    if (remaining == 0) {
        if (at == goal) {
            Path p;
            p.arrows.assign(stack.rbegin(), stack.rend());  // written order, first applied last
            out.push_back(std::move(p));
        }
        return;
    }
    for (const auto& aid : q.arrows_from(at)) {
        stack.push_back(aid);
        extend_paths(q, q.arrow(aid).target, remaining - 1, stack, goal, out);
        stack.pop_back();
    }
}

struct CellBasis {
    std::vector<Path> paths;
    std::map<Path, size_t> index;
};

CellBasis make_cell(const Quiver& q, long d, const std::string& i, const std::string& j) {
    CellBasis c;
    c.paths = paths_of_length(q, d, i, j);
    for (size_t n = 0; n < c.paths.size(); ++n) c.index.emplace(c.paths[n], n);
    return c;
}

bool touches_dropped(const Quiver& q, const Path& p, const std::set<std::string>& drop) {
    if (drop.empty()) return false;
    for (const auto& v : path_vertices(q, p))
        if (drop.count(v)) return true;
    return false;
}

/// Engine computing ideal slices with path enumeration memoized per run.
class SliceEngine {
  public:
    SliceEngine(const BoundQuiver& b, const std::set<std::string>& drop) : b_(b), drop_(drop) {
        for (const auto& r : b.relations) {
            RelationReport rep = require_valid_relation(b.quiver, r);
            rels_.push_back({r, rep.source, rep.target, rep.length});
        }
    }

    const std::vector<Path>& paths(long d, const std::string& i, const std::string& j) {
        auto key = std::make_tuple(d, i, j);
        auto it = path_cache_.find(key);
        if (it != path_cache_.end()) return it->second;
        return path_cache_.emplace(key, paths_of_length(b_.quiver, d, i, j)).first->second;
    }

    std::vector<std::vector<Rat>> ideal_rows(long d, const std::string& i, const std::string& j,
                                             const CellBasis& cell) {
        std::vector<std::vector<Rat>> rows;
        // paths through dropped vertices are killed outright
        for (size_t n = 0; n < cell.paths.size(); ++n) {
            if (touches_dropped(b_.quiver, cell.paths[n], drop_)) {
                std::vector<Rat> row(cell.paths.size(), Rat(0));
                row[n] = 1;
                rows.push_back(std::move(row));
            }
        }
        for (const auto& rel : rels_) {
            if (rel.length > d) continue;
            for (long back = 0; back + rel.length <= d; ++back) {
                long front = d - rel.length - back;
                const auto& qs = paths(back, i, rel.source);
                const auto& ps = paths(front, rel.target, j);
                for (const auto& qp : qs) {
                    for (const auto& pp : ps) {
                        std::vector<Rat> row(cell.paths.size(), Rat(0));
                        for (const auto& [w, coeff] : rel.combo.terms()) {
                            Path full;
                            full.arrows.reserve(d);
                            full.arrows.insert(full.arrows.end(), pp.arrows.begin(), pp.arrows.end());
                            full.arrows.insert(full.arrows.end(), w.arrows.begin(), w.arrows.end());
                            full.arrows.insert(full.arrows.end(), qp.arrows.begin(), qp.arrows.end());
                            auto it = cell.index.find(full);
                            if (it == cell.index.end()) throw Error("internal: ideal element outside cell basis");
                            row[it->second] += coeff;
                        }
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
        return rows;
    }

  private:
    struct Rel {
        PathCombo combo;
        std::string source, target;
        long length;
    };
    const BoundQuiver& b_;
    std::set<std::string> drop_;
    std::vector<Rel> rels_;
    std::map<std::tuple<long, std::string, std::string>, std::vector<Path>> path_cache_;
};

}  // namespace

std::vector<Path> paths_of_length(const Quiver& q, long d, const std::string& i, const std::string& j) {
    if (d < 0) throw Error("negative path length");
    if (!q.has_vertex(i) || !q.has_vertex(j)) throw Error("paths_of_length: unknown endpoint");
    std::vector<Path> out;
    if (d == 0) {
        if (i == j) out.push_back(Path::trivial(i));
        return out;
    }
    std::vector<std::string> stack;
    extend_paths(q, i, d, stack, j, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool Echelon::insert(std::vector<Rat> row) {
    row = reduce(std::move(row));
    size_t pivot = row.size();
    for (size_t c = 0; c < row.size(); ++c) {
        if (row[c] != 0) {
            pivot = c;
            break;
        }
    }
    if (pivot == row.size()) return false;
    Rat inv = Rat(1) / row[pivot];
    for (auto& x : row) x *= inv;
    rows_.emplace(pivot, std::move(row));
    return true;
}

std::vector<Rat> Echelon::reduce(std::vector<Rat> row) const {
    for (const auto& [p, r] : rows_) {
        if (row[p] == 0) continue;
        Rat f = row[p];
        for (size_t c = p; c < row.size(); ++c) row[c] -= f * r[c];
    }
    return row;
}

bool Echelon::contains(const std::vector<Rat>& row) const {
    auto res = reduce(row);
    for (const auto& x : res)
        if (x != 0) return false;
    return true;
}

long GradedDims::at(const std::string& i, const std::string& j, long d) const {
    auto it = dims.find({i, j, d});
    return it == dims.end() ? 0 : it->second;
}

long GradedDims::total(long d) const {
    long t = 0;
    for (const auto& [k, v] : dims)
        if (std::get<2>(k) == d) t += v;
    return t;
}

long GradedDims::total_all() const {
    long t = 0;
    for (const auto& [k, v] : dims) t += v;
    return t;
}

GradedDims quotient_dims(const BoundQuiver& b, long max_degree, const std::set<std::string>& drop_vertices) {
    if (max_degree < 0) throw Error("negative degree bound");
    SliceEngine engine(b, drop_vertices);
    GradedDims out;
    out.max_degree = max_degree;
    for (long d = 0; d <= max_degree; ++d) {
        for (const auto& [i, vi] : b.quiver.vertices()) {
            for (const auto& [j, vj] : b.quiver.vertices()) {
                CellBasis cell = make_cell(b.quiver, d, i, j);
                if (cell.paths.empty()) continue;
                Echelon ech;
                for (auto& row : engine.ideal_rows(d, i, j, cell)) ech.insert(std::move(row));
                long dim = static_cast<long>(cell.paths.size()) - static_cast<long>(ech.rank());
                if (dim > 0) out.dims[{i, j, d}] = dim;
            }
        }
    }
    return out;
}

PathCombo normal_form(const BoundQuiver& b, const PathCombo& c, long max_degree,
                      const std::set<std::string>& drop_vertices) {
    RelationReport rep = require_valid_relation(b.quiver, c);
    if (rep.length > max_degree) throw Error("combo degree exceeds bound");
    SliceEngine engine(b, drop_vertices);
    CellBasis cell = make_cell(b.quiver, rep.length, rep.source, rep.target);
    Echelon ech;
    for (auto& row : engine.ideal_rows(rep.length, rep.source, rep.target, cell)) ech.insert(std::move(row));
    std::vector<Rat> vec(cell.paths.size(), Rat(0));
    for (const auto& [p, coeff] : c.terms()) vec[cell.index.at(p)] = coeff;
    auto res = ech.reduce(vec);
    PathCombo out;
    for (size_t n = 0; n < res.size(); ++n) out.add(cell.paths[n], res[n]);
    return out;
}

std::string OrthoReport::summary() const {
    std::ostringstream os;
    os << (ok ? "orthocheck: pass" : "orthocheck: FAIL");
    for (const auto& c : cells) {
        if (c.orthogonal && c.complementary) continue;
        os << "\n  cell " << c.source << " -> " << c.target << ": paths=" << c.n_paths << " rho=" << c.rho_rank
           << " theta=" << c.theta_rank << (c.orthogonal ? "" : " [not orthogonal]")
           << (c.complementary ? "" : " [not complementary]");
    }
    return os.str();
}

OrthoReport quadratic_orthocheck(const Quiver& q, const std::vector<PathCombo>& rho,
                                 const std::vector<PathCombo>& theta) {
    using CellKey = std::pair<std::string, std::string>;
    std::map<CellKey, std::vector<Path>> cell_paths;
    for (const auto& [a1, arr1] : q.arrows()) {
        for (const auto& a2 : q.arrows_from(arr1.target)) {
            Path p;
            p.arrows = {a2, a1};
            cell_paths[{arr1.source, q.arrow(a2).target}].push_back(std::move(p));
        }
    }
    for (auto& [k, ps] : cell_paths) std::sort(ps.begin(), ps.end());

    auto bucket = [&](const std::vector<PathCombo>& rels) {
        std::map<CellKey, std::vector<const PathCombo*>> out;
        for (const auto& r : rels) {
            RelationReport rep = require_valid_relation(q, r);
            if (rep.length != 2) throw RelationError("quadratic_orthocheck: relation of length " +
                                                     std::to_string(rep.length) + ": " + r.str());
            out[{rep.source, rep.target}].push_back(&r);
        }
        return out;
    };
    auto rho_cells = bucket(rho);
    auto theta_cells = bucket(theta);

    OrthoReport rep;
    for (const auto& [key, paths] : cell_paths) {
        OrthoCell cell;
        cell.source = key.first;
        cell.target = key.second;
        cell.n_paths = static_cast<long>(paths.size());
        std::map<Path, size_t> index;
        for (size_t n = 0; n < paths.size(); ++n) index.emplace(paths[n], n);
        auto vec_of = [&](const PathCombo& c) {
            std::vector<Rat> v(paths.size(), Rat(0));
            for (const auto& [p, coeff] : c.terms()) v[index.at(p)] = coeff;
            return v;
        };
        std::vector<std::vector<Rat>> rvecs, tvecs;
        if (auto it = rho_cells.find(key); it != rho_cells.end())
            for (const auto* c : it->second) rvecs.push_back(vec_of(*c));
        if (auto it = theta_cells.find(key); it != theta_cells.end())
            for (const auto* c : it->second) tvecs.push_back(vec_of(*c));
        Echelon re, te;
        for (auto v : rvecs) re.insert(std::move(v));
        for (auto v : tvecs) te.insert(std::move(v));
        cell.rho_rank = static_cast<long>(re.rank());
        cell.theta_rank = static_cast<long>(te.rank());
        for (const auto& rv : rvecs) {
            for (const auto& tv : tvecs) {
                Rat dot(0);
                for (size_t n = 0; n < rv.size(); ++n) dot += rv[n] * tv[n];
                if (dot != 0) cell.orthogonal = false;
            }
        }
        cell.complementary = (cell.rho_rank + cell.theta_rank == cell.n_paths);
        if (!cell.orthogonal || !cell.complementary) rep.ok = false;
        rep.cells.push_back(std::move(cell));
    }
    return rep;
}

bool relation_spans_equal(const Quiver& q, const std::vector<PathCombo>& a, const std::vector<PathCombo>& b,
                          std::vector<std::string>* witnesses) {
    using Key = std::tuple<std::string, std::string, long>;
    std::map<Key, std::vector<const PathCombo*>> acells, bcells;
    auto bucket = [&](const std::vector<PathCombo>& rels, std::map<Key, std::vector<const PathCombo*>>& out) {
        for (const auto& r : rels) {
            if (r.is_zero()) continue;
            RelationReport rep = require_valid_relation(q, r);
            out[{rep.source, rep.target, rep.length}].push_back(&r);
        }
    };
    bucket(a, acells);
    bucket(b, bcells);
    std::set<Key> keys;
    for (const auto& [k, v] : acells) keys.insert(k);
    for (const auto& [k, v] : bcells) keys.insert(k);
    bool ok = true;
    for (const auto& key : keys) {
        const auto& [src, tgt, len] = key;
        std::vector<Path> paths = paths_of_length(q, len, src, tgt);
        std::map<Path, size_t> index;
        for (size_t n = 0; n < paths.size(); ++n) index.emplace(paths[n], n);
        auto vec_of = [&](const PathCombo& c) {
            std::vector<Rat> v(paths.size(), Rat(0));
            for (const auto& [p, coeff] : c.terms()) v[index.at(p)] = coeff;
            return v;
        };
        Echelon ea, eb, eall;
        if (auto it = acells.find(key); it != acells.end())
            for (const auto* c : it->second) {
                ea.insert(vec_of(*c));
                eall.insert(vec_of(*c));
            }
        if (auto it = bcells.find(key); it != bcells.end())
            for (const auto* c : it->second) {
                eb.insert(vec_of(*c));
                eall.insert(vec_of(*c));
            }
        if (ea.rank() != eb.rank() || ea.rank() != eall.rank()) {
            ok = false;
            if (witnesses)
                witnesses->push_back("cell " + src + " -> " + tgt + " deg " + std::to_string(len) + ": ranks " +
                                     std::to_string(ea.rank()) + " vs " + std::to_string(eb.rank()) + " (join " +
                                     std::to_string(eall.rank()) + ")");
        }
    }
    return ok;
}

std::string StqReport::summary() const {
    std::ostringstream os;
    os << (ok ? "stable translation quiver: pass" : "stable translation quiver: FAIL");
    for (const auto& v : violations) os << "\n  " << v;
    return os.str();
}

StqReport stable_translation_check(const BoundQuiver& b, long l) {
    if (!b.nakayama) throw MissingDataError("stable_translation_check needs a Nakayama permutation");
    StqReport rep;
    const auto& nu = *b.nakayama;

    // (1) nu is a permutation
    std::set<std::string> img;
    bool perm = nu.size() == b.quiver.vertices().size();
    for (const auto& [v, w] : nu) {
        if (!b.quiver.has_vertex(v) || !b.quiver.has_vertex(w)) perm = false;
        img.insert(w);
    }
    if (img.size() != b.quiver.vertices().size()) perm = false;
    if (!perm) {
        rep.ok = false;
        rep.violations.push_back("(1) nu is not a vertex permutation");
    }

    GradedDims dims = quotient_dims(b, l + 1);

    // (2) maximal bound paths all have length l: nothing survives in degree
    // l+1 and every vertex supports a length-l bound path out of it.
    if (dims.total(l + 1) != 0) {
        rep.ok = false;
        rep.violations.push_back("(2) nonzero dimension in degree " + std::to_string(l + 1));
    }
    for (const auto& [i, v] : b.quiver.vertices()) {
        long outl = 0;
        for (const auto& [j, w] : b.quiver.vertices()) outl += dims.at(i, j, l);
        if (outl == 0) {
            rep.ok = false;
            rep.violations.push_back("(2) no bound path of length " + std::to_string(l) + " out of " + i);
        }
    }

    // (3)/(4) socle paths: from nu(i), degree-l paths land only at i, with a
    // one-dimensional span.
    if (perm) {
        for (const auto& [i, v] : b.quiver.vertices()) {
            const std::string& ni = nu.at(i);
            long d_ii = dims.at(ni, i, l);
            if (d_ii < 1) {
                rep.ok = false;
                rep.violations.push_back("(3) no maximal bound path from " + ni + " = nu(" + i + ") to " + i);
            }
            for (const auto& [j, w] : b.quiver.vertices()) {
                if (j == i) continue;
                if (dims.at(ni, j, l) != 0) {
                    rep.ok = false;
                    rep.violations.push_back("(3) bound path of length " + std::to_string(l) + " from nu(" + i +
                                             ") to " + j);
                }
            }
            if (d_ii > 1) {
                rep.ok = false;
                rep.violations.push_back("(4) socle from nu(" + i + ") to " + i + " has dimension " +
                                         std::to_string(d_ii));
            }
        }
    }
    return rep;
}

}  // namespace qmk
