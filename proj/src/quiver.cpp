#include "qmk/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace qmk {

void Quiver::add_vertex(Vertex v) {
    if (vertices_.count(v.id)) throw Error("duplicate vertex id '" + v.id + "'");
    vertices_.emplace(v.id, std::move(v));
}

void Quiver::add_arrow(Arrow a) {
    if (arrows_.count(a.id)) throw Error("duplicate arrow id '" + a.id + "'");
    if (!has_vertex(a.source)) throw Error("arrow '" + a.id + "' has unknown source '" + a.source + "'");
    if (!has_vertex(a.target)) throw Error("arrow '" + a.id + "' has unknown target '" + a.target + "'");
    arrows_.emplace(a.id, std::move(a));
}

const Vertex& Quiver::vertex(const std::string& id) const {
    auto it = vertices_.find(id);
    if (it == vertices_.end()) throw Error("unknown vertex '" + id + "'");
    return it->second;
}

const Arrow& Quiver::arrow(const std::string& id) const {
    auto it = arrows_.find(id);
    if (it == arrows_.end()) throw Error("unknown arrow '" + id + "'");
    return it->second;
}

std::vector<std::string> Quiver::arrows_from(const std::string& v) const {
    std::vector<std::string> out;
    for (const auto& [id, a] : arrows_)
        if (a.source == v) out.push_back(id);
    return out;
}

std::vector<std::string> Quiver::arrows_between(const std::string& s, const std::string& t) const {
    std::vector<std::string> out;
    for (const auto& [id, a] : arrows_)
        if (a.source == s && a.target == t) out.push_back(id);
    return out;
}

bool Quiver::operator==(const Quiver& o) const {
    if (vertices_.size() != o.vertices_.size() || arrows_.size() != o.arrows_.size()) return false;
    for (const auto& [id, v] : vertices_) {
        auto it = o.vertices_.find(id);
        if (it == o.vertices_.end() || !(it->second.label == v.label)) return false;
    }
    for (const auto& [id, a] : arrows_) {
        auto it = o.arrows_.find(id);
        if (it == o.arrows_.end()) return false;
        const Arrow& b = it->second;
        if (a.source != b.source || a.target != b.target || !(a.label == b.label)) return false;
    }
    return true;
}

bool Path::operator<(const Path& o) const {
    if (arrows != o.arrows) return arrows < o.arrows;
    if (arrows.empty()) return at < o.at;
    return false;
}

std::string path_source(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return p.at;
    return q.arrow(p.arrows.back()).source;
}

std::string path_target(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return p.at;
    return q.arrow(p.arrows.front()).target;
}

std::vector<std::string> path_vertices(const Quiver& q, const Path& p) {
    std::vector<std::string> out;
    if (p.is_trivial()) {
        out.push_back(p.at);
        return out;
    }
    out.push_back(path_source(q, p));
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) out.push_back(q.arrow(*it).target);
    return out;
}

std::string path_str(const Path& p) {
    if (p.is_trivial()) return "e(" + p.at + ")";
    std::ostringstream os;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) os << ".";
        os << p.arrows[i];
    }
    return os.str();
}

Path compose(const Quiver& q, const Path& p, const Path& r) {
    if (path_target(q, r) != path_source(q, p))
        throw CompositionError("paths not composable: target(" + path_str(r) + ") = " + path_target(q, r) +
                               " != source(" + path_str(p) + ") = " + path_source(q, p));
    if (p.is_trivial()) return r;
    if (r.is_trivial()) return p;
    Path out = p;
    out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
    out.at.clear();
    return out;
}

void PathCombo::add(const Path& p, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PathCombo PathCombo::scaled(const Rat& c) const {
    PathCombo out;
    if (c == 0) return out;
    for (const auto& [p, h] : terms_) out.terms_.emplace(p, h * c);
    return out;
}

PathCombo PathCombo::normalized() const {
    if (terms_.empty()) return *this;
    return scaled(Rat(1) / terms_.begin()->second);
}

std::string PathCombo::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << rat_str(c) << "*";
        os << path_str(p);
    }
    return os.str();
}

PathCombo make_combo(std::initializer_list<std::pair<Path, Rat>> terms) {
    PathCombo c;
    for (const auto& [p, h] : terms) c.add(p, h);
    return c;
}

RelationReport validate_relation(const Quiver& q, const PathCombo& c) {
    RelationReport rep;
    if (c.is_zero()) {
        rep.ok = false;
        rep.message = "zero combo";
        return rep;
    }
    bool first = true;
    for (const auto& [p, h] : c.terms()) {
        for (const auto& a : p.arrows) {
            if (!q.has_arrow(a)) {
                rep.ok = false;
                rep.message = "unknown arrow '" + a + "'";
                return rep;
            }
        }
        if (p.is_trivial() && !q.has_vertex(p.at)) {
            rep.ok = false;
            rep.message = "unknown vertex '" + p.at + "'";
            return rep;
        }
        // consecutive arrows must compose
        for (size_t i = 0; i + 1 < p.arrows.size(); ++i) {
            if (q.arrow(p.arrows[i]).source != q.arrow(p.arrows[i + 1]).target) {
                rep.ok = false;
                rep.message = "non-composable path " + path_str(p);
                return rep;
            }
        }
        std::string s = path_source(q, p), t = path_target(q, p);
        long len = p.length();
        if (first) {
            rep.source = s;
            rep.target = t;
            rep.length = len;
            first = false;
        } else if (s != rep.source || t != rep.target) {
            rep.ok = false;
            rep.message = "mixed endpoints in relation: " + c.str();
            return rep;
        } else if (len != rep.length) {
            rep.ok = false;
            rep.message = "mixed lengths in relation: " + c.str();
            return rep;
        }
    }
    return rep;
}

RelationReport require_valid_relation(const Quiver& q, const PathCombo& c) {
    RelationReport rep = validate_relation(q, c);
    if (!rep.ok) throw RelationError(rep.message);
    return rep;
}

bool quiver_equal_under(const QuiverIsoWitness& w, const Quiver& a, const Quiver& b) {
    if (w.vertex_map.size() != a.vertices().size() || a.vertices().size() != b.vertices().size()) return false;
    if (w.arrow_map.size() != a.arrows().size() || a.arrows().size() != b.arrows().size()) return false;
    std::set<std::string> vimg, aimg;
    for (const auto& [v, _] : a.vertices()) {
        auto it = w.vertex_map.find(v);
        if (it == w.vertex_map.end() || !b.has_vertex(it->second)) return false;
        vimg.insert(it->second);
    }
    if (vimg.size() != b.vertices().size()) return false;
    for (const auto& [id, arr] : a.arrows()) {
        auto it = w.arrow_map.find(id);
        if (it == w.arrow_map.end() || !b.has_arrow(it->second)) return false;
        const Arrow& im = b.arrow(it->second);
        if (im.source != w.vertex_map.at(arr.source) || im.target != w.vertex_map.at(arr.target)) return false;
        aimg.insert(it->second);
    }
    return aimg.size() == b.arrows().size();
}

std::optional<QuiverIsoWitness> match_arrows_by_multiplicity(const Quiver& a, const Quiver& b,
                                                             const std::map<std::string, std::string>& vertex_map) {
    if (a.vertices().size() != b.vertices().size() || a.arrows().size() != b.arrows().size()) return std::nullopt;
    QuiverIsoWitness w;
    w.vertex_map = vertex_map;
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> acells, bcells;
    for (const auto& [id, arr] : a.arrows()) acells[{arr.source, arr.target}].push_back(id);
    for (const auto& [id, arr] : b.arrows()) bcells[{arr.source, arr.target}].push_back(id);
    for (const auto& [cell, ids] : acells) {
        auto vit = vertex_map.find(cell.first);
        auto wit = vertex_map.find(cell.second);
        if (vit == vertex_map.end() || wit == vertex_map.end()) return std::nullopt;
        auto bit = bcells.find({vit->second, wit->second});
        if (bit == bcells.end() || bit->second.size() != ids.size()) return std::nullopt;
        for (size_t i = 0; i < ids.size(); ++i) w.arrow_map[ids[i]] = bit->second[i];
    }
    if (w.arrow_map.size() != a.arrows().size()) return std::nullopt;
    if (!quiver_equal_under(w, a, b)) return std::nullopt;
    return w;
}

std::map<std::string, std::string> invert_map(const std::map<std::string, std::string>& m) {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : m) {
        if (!out.emplace(v, k).second) throw Error("map is not injective at '" + v + "'");
    }
    return out;
}

PathCombo map_combo(const std::map<std::string, std::string>& vertex_map,
                    const std::map<std::string, std::string>& arrow_map, const PathCombo& c) {
    PathCombo out;
    for (const auto& [p, coeff] : c.terms()) {
        Path mp;
        if (p.is_trivial()) {
            mp = Path::trivial(vertex_map.at(p.at));
        } else {
            for (const auto& a : p.arrows) mp.arrows.push_back(arrow_map.at(a));
        }
        out.add(mp, coeff);
    }
    return out;
}

void check_bound_quiver(const BoundQuiver& b) {
    for (const auto& r : b.relations) require_valid_relation(b.quiver, r);
    if (b.nakayama) {
        const auto& nu = *b.nakayama;
        if (nu.size() != b.quiver.vertices().size()) throw Error("nakayama map not total on vertices");
        std::set<std::string> img;
        for (const auto& [v, w] : nu) {
            if (!b.quiver.has_vertex(v) || !b.quiver.has_vertex(w)) throw Error("nakayama references unknown vertex");
            img.insert(w);
        }
        if (img.size() != nu.size()) throw Error("nakayama map is not a bijection");
    }
    if (b.nakayama_arrows) {
        if (!b.nakayama) throw Error("nakayama arrow map without vertex map");
        for (const auto& [a, im] : *b.nakayama_arrows) {
            const Arrow& x = b.quiver.arrow(a);
            const Arrow& y = b.quiver.arrow(im);
            if (y.source != b.nakayama->at(x.source) || y.target != b.nakayama->at(x.target))
                throw Error("nakayama arrow map incompatible with vertex map at '" + a + "'");
        }
    }
    if (b.translation) {
        std::set<std::string> img;
        for (const auto& [v, w] : *b.translation) {
            if (!b.quiver.has_vertex(v) || !b.quiver.has_vertex(w)) throw Error("translation references unknown vertex");
            if (!img.insert(w).second) throw Error("translation is not injective");
        }
    }
}

}  // namespace qmk
