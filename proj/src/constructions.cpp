#include "qmk/constructions.hpp"

#include <algorithm>

#include "qmk/path_algebra.hpp"

namespace qmk {

std::string returning_arrow_id(const std::string& vertex) { return "b@" + vertex; }
std::string cover_vertex_id(const std::string& base, long t) { return "(" + base + "," + std::to_string(t) + ")"; }
std::string cover_arrow_id(const std::string& base_arrow, long t) {
    return "(" + base_arrow + "," + std::to_string(t) + ")";
}
std::string cone_vertex_id(const std::string& base, long d) { return "(" + base + "," + std::to_string(d) + ")"; }
std::string cone_first_arrow_id(const std::string& base_arrow, long d) {
    return "(" + base_arrow + "," + std::to_string(d) + ")";
}
std::string cone_second_arrow_id(const std::string& base_vertex, long d) {
    return "c@(" + base_vertex + "," + std::to_string(d) + ")";
}

Quiver returning_arrow_quiver(const BoundQuiver& b) {
    if (!b.nakayama) throw MissingDataError("returning_arrow_quiver needs a Nakayama permutation");
    Quiver q = b.quiver;
    for (const auto& [i, v] : b.quiver.vertices())
        q.add_arrow({returning_arrow_id(i), i, b.nakayama->at(i), Label::returning_at(v.label)});
    return q;
}

namespace {

Path p1(const std::string& a) { return Path{{a}, ""}; }
Path p2(const std::string& later, const std::string& first) { return Path{{later, first}, ""}; }

}  // namespace

BoundQuiver twisted_trivial_extension(const BoundQuiver& b, SignTwist twist, TwistVariant variant) {
    if (!b.nakayama || !b.nakayama_arrows)
        throw MissingDataError("twisted trivial extension needs nu on vertices and arrows");
    for (const auto& [a, arr] : b.quiver.arrows())
        if (!b.nakayama_arrows->count(a)) throw MissingDataError("nu undefined on arrow '" + a + "'");
    BoundQuiver out;
    out.quiver = returning_arrow_quiver(b);
    out.relations = b.relations;
    const auto& nu = *b.nakayama;
    const auto& nua = *b.nakayama_arrows;
    auto nu_inv = invert_map(nu);
    auto nua_inv = invert_map(nua);
    Rat eps(twist.eps);

    for (const auto& [i, v] : b.quiver.vertices()) {
        out.relations.push_back(make_combo({{p2(returning_arrow_id(nu.at(i)), returning_arrow_id(i)), Rat(1)}}));
    }
    for (const auto& [a, arr] : b.quiver.arrows()) {
        const std::string &i = arr.source, &j = arr.target;
        PathCombo r;
        if (variant == TwistVariant::forward) {
            r = make_combo({{p2(returning_arrow_id(j), a), Rat(1)},
                            {p2(nua.at(a), returning_arrow_id(i)), -eps}});
        } else {
            r = make_combo({{p2(a, returning_arrow_id(nu_inv.at(i))), Rat(1)},
                            {p2(returning_arrow_id(nu_inv.at(j)), nua_inv.at(a)), -eps}});
        }
        out.relations.push_back(std::move(r));
    }
    for (const auto& r : out.relations) require_valid_relation(out.quiver, r);
    if (b.loewy_length) out.loewy_length = *b.loewy_length + 1;
    return out;
}

BoundQuiver mckay_returning_arrows_rho(const BoundQuiver& rho_side) {
    if (!rho_side.nakayama || !rho_side.nakayama_arrows)
        throw MissingDataError("mckay_returning_arrows_rho needs nu on vertices and arrows");
    BoundQuiver out;
    out.quiver = returning_arrow_quiver(rho_side);
    out.relations = rho_side.relations;
    auto nu_inv = invert_map(*rho_side.nakayama);
    auto nua_inv = invert_map(*rho_side.nakayama_arrows);
    for (const auto& [a, arr] : rho_side.quiver.arrows()) {
        out.relations.push_back(make_combo({{p2(a, returning_arrow_id(nu_inv.at(arr.source))), Rat(1)},
                                            {p2(returning_arrow_id(nu_inv.at(arr.target)), nua_inv.at(a)), Rat(-1)}}));
    }
    for (const auto& r : out.relations) require_valid_relation(out.quiver, r);
    std::map<std::string, std::string> id;
    for (const auto& [i, v] : out.quiver.vertices()) id[i] = i;
    out.nakayama = id;
    return out;
}

BoundQuiver mckay_returning_arrows_theta(const BoundQuiver& theta_side, SignTwist twist) {
    BoundQuiver out = twisted_trivial_extension(theta_side, twist, TwistVariant::reverse);
    std::map<std::string, std::string> id;
    for (const auto& [i, v] : out.quiver.vertices()) id[i] = i;
    out.nakayama = id;
    out.nakayama_arrows.reset();
    return out;
}

CoverResult cyclic_cover(const BoundQuiver& b, long m, RelationSide side, SignTwist twist) {
    if (m < 1) throw Error("cover index must be >= 1");
    if (!b.nakayama || !b.nakayama_arrows) throw MissingDataError("cyclic_cover needs nu on vertices and arrows");
    const auto& nu = *b.nakayama;
    const auto& nua = *b.nakayama_arrows;
    auto nu_inv = invert_map(nu);
    auto nua_inv = invert_map(nua);
    auto lvl = [m](long t) { return ((t % m) + m) % m; };

    CoverResult res;
    res.m = m;
    Quiver& q = res.bq.quiver;
    for (const auto& [i, v] : b.quiver.vertices()) {
        for (long t = 0; t < m; ++t) {
            std::string id = cover_vertex_id(i, t);
            q.add_vertex({id, Label::leveled(v.label, t)});
            res.vertex_origin[id] = {i, t};
        }
    }
    auto beta_base = [](const std::string& i) { return returning_arrow_id(i); };
    for (const auto& [a, arr] : b.quiver.arrows()) {
        for (long t = 0; t < m; ++t) {
            std::string id = cover_arrow_id(a, t);
            q.add_arrow({id, cover_vertex_id(arr.source, t), cover_vertex_id(arr.target, t),
                         Label::leveled(arr.label, t)});
            res.arrow_origin[id] = {a, t};
        }
    }
    for (const auto& [i, v] : b.quiver.vertices()) {
        for (long t = 0; t < m; ++t) {
            std::string id = cover_arrow_id(beta_base(i), t);
            q.add_arrow({id, cover_vertex_id(i, t), cover_vertex_id(nu.at(i), lvl(t + 1)),
                         Label::leveled(Label::returning_at(v.label), t)});
            res.arrow_origin[id] = {beta_base(i), t};
        }
    }

    // lifted base relations (rho, t) for every t
    for (const auto& r : b.relations) {
        for (long t = 0; t < m; ++t) {
            PathCombo lifted;
            for (const auto& [p, c] : r.terms()) {
                Path lp;
                for (const auto& a : p.arrows) lp.arrows.push_back(cover_arrow_id(a, t));
                lifted.add(lp, c);
            }
            res.bq.relations.push_back(std::move(lifted));
        }
    }
    // beta squares (theta side only)
    if (side == RelationSide::theta) {
        for (const auto& [i, v] : b.quiver.vertices()) {
            for (long t = 0; t < m; ++t) {
                res.bq.relations.push_back(make_combo(
                    {{p2(cover_arrow_id(beta_base(nu.at(i)), lvl(t + 1)), cover_arrow_id(beta_base(i), t)), Rat(1)}}));
            }
        }
    }
    // mixing relations (alpha,t)(beta_{nu^{-1} i},t-1) - c (beta_{nu^{-1} j},t-1)(nu^{-1} alpha,t-1)
    Rat c2 = (side == RelationSide::theta) ? Rat(twist.eps) : Rat(1);
    for (const auto& [a, arr] : b.quiver.arrows()) {
        const std::string &i = arr.source, &j = arr.target;
        for (long t = 0; t < m; ++t) {
            long tm = lvl(t - 1);
            PathCombo r = make_combo(
                {{p2(cover_arrow_id(a, t), cover_arrow_id(beta_base(nu_inv.at(i)), tm)), Rat(1)},
                 {p2(cover_arrow_id(beta_base(nu_inv.at(j)), tm), cover_arrow_id(nua_inv.at(a), tm)), -c2}});
            res.bq.relations.push_back(std::move(r));
        }
    }
    for (const auto& r : res.bq.relations) require_valid_relation(q, r);

    std::map<std::string, std::string> nuv, nuarr;
    for (const auto& [i, v] : b.quiver.vertices())
        for (long t = 0; t < m; ++t) nuv[cover_vertex_id(i, t)] = cover_vertex_id(i, lvl(t - 1));
    for (const auto& [a, arr] : b.quiver.arrows())
        for (long t = 0; t < m; ++t) nuarr[cover_arrow_id(a, t)] = cover_arrow_id(a, lvl(t - 1));
    for (const auto& [i, v] : b.quiver.vertices())
        for (long t = 0; t < m; ++t) nuarr[cover_arrow_id(beta_base(i), t)] = cover_arrow_id(beta_base(i), lvl(t - 1));
    res.bq.nakayama = std::move(nuv);
    res.bq.nakayama_arrows = std::move(nuarr);
    if (side == RelationSide::theta && b.loewy_length) res.bq.loewy_length = *b.loewy_length + 1;
    return res;
}

ConeResult cone(const BoundQuiver& base) {
    if (!base.translation) throw MissingDataError("cone needs a translation");
    const auto& tau = *base.translation;

    // maximal number of tau applications per vertex
    std::map<std::string, long> depth;
    for (const auto& [x, v] : base.quiver.vertices()) {
        long d = 0;
        std::string cur = x;
        std::set<std::string> seen{x};
        while (tau.count(cur)) {
            cur = tau.at(cur);
            if (!seen.insert(cur).second) throw Error("translation has a cycle; cone would be infinite");
            ++d;
        }
        depth[x] = d;
    }
    auto tau_pow = [&](std::string x, long d) {
        for (long k = 0; k < d; ++k) x = tau.at(x);
        return x;
    };

    ConeResult res;
    Quiver& q = res.bq.quiver;
    for (const auto& [x, v] : base.quiver.vertices()) {
        for (long d = 0; d <= depth[x]; ++d) {
            std::string id = cone_vertex_id(x, d);
            q.add_vertex({id, Label::leveled(v.label, d)});
            res.vertex_origin[id] = {x, d};
        }
    }
    // first type
    for (const auto& [a, arr] : base.quiver.arrows()) {
        long dmax = std::min(depth[arr.source], depth[arr.target]);
        for (long d = 0; d <= dmax; ++d) {
            std::string id = cone_first_arrow_id(a, d);
            q.add_arrow({id, cone_vertex_id(arr.source, d), cone_vertex_id(arr.target, d),
                         Label::leveled(arr.label, d)});
            res.arrow_origin[id] = {false, a, d};
        }
    }
    // second type (x,d)_1 : (x,d) -> (tau x, d-1)
    for (const auto& [x, v] : base.quiver.vertices()) {
        for (long d = 1; d <= depth[x]; ++d) {
            std::string id = cone_second_arrow_id(x, d);
            q.add_arrow({id, cone_vertex_id(x, d), cone_vertex_id(tau.at(x), d - 1),
                         Label::connecting_at(v.label, d)});
            res.arrow_origin[id] = {true, x, d};
        }
    }

    // lifted base relations, term-wise component semantics
    long max_depth = 0;
    for (const auto& [x, d] : depth) max_depth = std::max(max_depth, d);
    for (const auto& r : base.relations) {
        for (long d = 0; d <= max_depth; ++d) {
            PathCombo lifted;
            for (const auto& [p, c] : r.terms()) {
                Path lp;
                bool alive = true;
                for (const auto& a : p.arrows) {
                    std::string id = cone_first_arrow_id(a, d);
                    if (!q.has_arrow(id)) {
                        alive = false;
                        break;
                    }
                    lp.arrows.push_back(id);
                }
                if (alive) lifted.add(lp, c);
            }
            if (!lifted.is_zero()) res.bq.relations.push_back(std::move(lifted));
        }
    }

    // mesh relations: (alpha,d-1)(x,d)_1 - (tau^- y,d)_1 (tau^- alpha,d)
    auto tau_inv = invert_map(tau);
    for (const auto& [x, v] : base.quiver.vertices()) {
        for (long d = 1; d <= depth[x]; ++d) {
            for (const auto& a : base.quiver.arrows_from(tau.at(x))) {
                const std::string& y = base.quiver.arrow(a).target;
                PathCombo r;
                std::string t1_arrow = cone_first_arrow_id(a, d - 1);
                if (q.has_arrow(t1_arrow)) r.add(p2(t1_arrow, cone_second_arrow_id(x, d)), Rat(1));
                if (tau_inv.count(y)) {
                    const std::string& ty = tau_inv.at(y);
                    auto cands = base.quiver.arrows_between(x, ty);
                    if (cands.size() > 1)
                        throw Error("ambiguous tau^- correspondence for arrow '" + a + "' (parallel arrows " + x +
                                    " -> " + ty + ")");
                    if (cands.size() == 1) {
                        std::string t2a = cone_first_arrow_id(cands[0], d);
                        std::string t2b = cone_second_arrow_id(ty, d);
                        if (q.has_arrow(t2a) && q.has_arrow(t2b)) r.add(p2(t2b, t2a), Rat(-1));
                    }
                }
                if (!r.is_zero()) res.bq.relations.push_back(std::move(r));
            }
        }
    }
    for (const auto& r : res.bq.relations) require_valid_relation(q, r);

    // tau_{n+1}(x,d) = (x,d+1) wherever that is a vertex
    std::map<std::string, std::string> t2;
    for (const auto& [x, v] : base.quiver.vertices())
        for (long d = 0; d < depth[x]; ++d) t2[cone_vertex_id(x, d)] = cone_vertex_id(x, d + 1);
    res.bq.translation = std::move(t2);
    return res;
}

bool bound_quiver_equal_under(const QuiverIsoWitness& w, const BoundQuiver& a, const BoundQuiver& b) {
    if (!quiver_equal_under(w, a.quiver, b.quiver)) return false;
    std::vector<PathCombo> mapped;
    for (const auto& r : a.relations) mapped.push_back(map_combo(w.vertex_map, w.arrow_map, r));
    return relation_spans_equal(b.quiver, mapped, b.relations, nullptr);
}

}  // namespace qmk
