#include "qmk/truncation.hpp"

#include <algorithm>
#include <sstream>

#include "qmk/path_algebra.hpp"

namespace qmk {

bool validate_embedding(const QuiverEmbedding& w, const Quiver& sub, const Quiver& sup) {
    if (w.vertex_map.size() != sub.vertices().size() || w.arrow_map.size() != sub.arrows().size()) return false;
    std::set<std::string> vimg, aimg;
    for (const auto& [v, _] : sub.vertices()) {
        auto it = w.vertex_map.find(v);
        if (it == w.vertex_map.end() || !sup.has_vertex(it->second)) return false;
        if (!vimg.insert(it->second).second) return false;  // (ii) injectivity
    }
    for (const auto& [a, arr] : sub.arrows()) {
        auto it = w.arrow_map.find(a);
        if (it == w.arrow_map.end() || !sup.has_arrow(it->second)) return false;
        if (!aimg.insert(it->second).second) return false;
        const Arrow& im = sup.arrow(it->second);
        // (i) endpoint compatibility
        if (im.source != w.vertex_map.at(arr.source) || im.target != w.vertex_map.at(arr.target)) return false;
    }
    return true;
}

PathCombo component(const PathCombo& a, const Quiver& q, const std::set<std::string>& image) {
    PathCombo out;
    for (const auto& [p, c] : a.terms()) {
        bool inside = true;
        for (const auto& v : path_vertices(q, p)) {
            if (!image.count(v)) {
                inside = false;
                break;
            }
        }
        if (inside) out.add(p, c);
    }
    return out;
}

std::vector<PathCombo> induced_relations(const std::vector<PathCombo>& rho, const Quiver& q,
                                         const std::set<std::string>& image) {
    std::vector<PathCombo> out;
    for (const auto& a : rho) {
        PathCombo c = component(a, q, image);
        if (c.is_zero()) continue;
        PathCombo norm = c.normalized();
        bool dup = false;
        for (const auto& prev : out) {
            if (prev.normalized() == norm) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(std::move(c));
    }
    return out;
}

bool embedding_is_full(const QuiverEmbedding& w, const Quiver& sub, const Quiver& sup,
                       std::vector<std::string>* witnesses) {
    std::set<std::string> vimg, aimg;
    for (const auto& [v, im] : w.vertex_map) vimg.insert(im);
    for (const auto& [a, im] : w.arrow_map) aimg.insert(im);
    bool ok = true;
    for (const auto& [id, a] : sup.arrows()) {
        if (vimg.count(a.source) && vimg.count(a.target) && !aimg.count(id)) {
            ok = false;
            if (witnesses)
                witnesses->push_back("arrow " + id + ": " + a.source + " -> " + a.target +
                                     " joins image vertices but is not an image arrow");
        }
    }
    return ok;
}

std::string TruncationReport::summary() const {
    std::ostringstream os;
    os << "truncation check: " << (verdict ? "pass" : "FAIL") << "\n  embedding: " << (embedding_valid ? "ok" : "bad")
       << "\n  image full: " << (image_full ? "ok" : "bad")
       << "\n  relations induced: " << (relations_induced ? "ok" : "bad")
       << "\n  translation commutes: " << (translation_commutes ? "ok" : "bad");
    for (const auto& w : witnesses) os << "\n  " << w;
    return os.str();
}

TruncationReport is_truncation(const QuiverEmbedding& w, const BoundQuiver& sub, const BoundQuiver& sup) {
    TruncationReport rep;
    rep.embedding_valid = validate_embedding(w, sub.quiver, sup.quiver);
    if (!rep.embedding_valid) {
        rep.witnesses.push_back("omega is not a quiver embedding");
        return rep;
    }
    rep.image_full = embedding_is_full(w, sub.quiver, sup.quiver, &rep.witnesses);
    std::set<std::string> image;
    for (const auto& [v, im] : w.vertex_map) image.insert(im);
    std::vector<PathCombo> mapped;
    for (const auto& r : sub.relations) mapped.push_back(map_combo(w.vertex_map, w.arrow_map, r));
    std::vector<PathCombo> induced = induced_relations(sup.relations, sup.quiver, image);
    rep.relations_induced = relation_spans_equal(sup.quiver, mapped, induced, &rep.witnesses);
    rep.verdict = rep.embedding_valid && rep.image_full && rep.relations_induced && rep.translation_commutes;
    return rep;
}

TruncationReport mckay_truncation_check(const QuiverEmbedding& w, const BoundQuiver& sub_with_tau,
                                        const BoundQuiver& mckay_with_nu) {
    TruncationReport rep = is_truncation(w, sub_with_tau, mckay_with_nu);
    if (!rep.embedding_valid) return rep;
    if (!sub_with_tau.translation) throw MissingDataError("mckay_truncation_check needs tau on the subquiver");
    if (!mckay_with_nu.nakayama) throw MissingDataError("mckay_truncation_check needs nu on the McKay quiver");
    const auto& tau = *sub_with_tau.translation;
    const auto& nu = *mckay_with_nu.nakayama;
    for (const auto& [x, tx] : tau) {
        const std::string& lhs = w.vertex_map.at(tx);
        const std::string& rhs = nu.at(w.vertex_map.at(x));
        if (lhs != rhs) {
            rep.translation_commutes = false;
            rep.witnesses.push_back("omega_0(tau " + x + ") = " + lhs + " != nu(omega_0 " + x + ") = " + rhs);
        }
    }
    rep.verdict = rep.embedding_valid && rep.image_full && rep.relations_induced && rep.translation_commutes;
    return rep;
}

bool complement_quotient_check(const QuiverEmbedding& w, const BoundQuiver& sub, const BoundQuiver& sup,
                               long max_degree, std::vector<std::string>* witnesses) {
    std::set<std::string> image, complement;
    for (const auto& [v, im] : w.vertex_map) image.insert(im);
    for (const auto& [v, _] : sup.quiver.vertices())
        if (!image.count(v)) complement.insert(v);
    GradedDims sub_dims = quotient_dims(sub, max_degree);
    GradedDims sup_dims = quotient_dims(sup, max_degree, complement);
    bool ok = true;
    for (const auto& [i, vi] : sub.quiver.vertices()) {
        for (const auto& [j, vj] : sub.quiver.vertices()) {
            for (long d = 0; d <= max_degree; ++d) {
                long a = sub_dims.at(i, j, d);
                long b = sup_dims.at(w.vertex_map.at(i), w.vertex_map.at(j), d);
                if (a != b) {
                    ok = false;
                    if (witnesses)
                        witnesses->push_back("dims mismatch at (" + i + "," + j + "," + std::to_string(d) + "): " +
                                             std::to_string(a) + " vs " + std::to_string(b));
                }
            }
        }
    }
    // nothing may survive outside the image
    for (const auto& [key, v] : sup_dims.dims) {
        if (!image.count(std::get<0>(key)) || !image.count(std::get<1>(key))) {
            ok = false;
            if (witnesses) witnesses->push_back("quotient by E keeps a class outside the image");
        }
    }
    return ok;
}

namespace {

long minimal_cover_index(const BoundQuiver& base) {
    long max_depth = 0;
    if (base.translation) {
        for (const auto& [x, v] : base.quiver.vertices()) {
            long d = 0;
            std::string cur = x;
            while (base.translation->count(cur)) {
                cur = base.translation->at(cur);
                ++d;
            }
            max_depth = std::max(max_depth, d);
        }
    }
    return max_depth + 1;
}

long mod_level(long t, long m) { return ((t % m) + m) % m; }

}  // namespace

PipelineResult main_theorem_pipeline(const BoundQuiver& base, const AbelianMcKaySpec& g, const QuiverEmbedding& w,
                                     std::optional<long> m_override) {
    if (!base.translation) throw MissingDataError("pipeline base needs a translation");
    PipelineResult res;
    res.base_mckay = abelian_bound_mckay(g);
    BoundQuiver mckay = res.base_mckay.rho_side();
    res.base_report = mckay_truncation_check(w, base, mckay);
    if (!res.base_report.verdict) throw PipelineError(res.base_report);

    long m_min = minimal_cover_index(base);
    if (m_override && *m_override < m_min)
        throw Error("cover index " + std::to_string(*m_override) + " is below the minimal valid choice " +
                    std::to_string(m_min));

    res.cone_result = cone(base);

    auto attempt = [&](long m) {
        res.m = m;
        res.cover_result = cyclic_cover(mckay, m, RelationSide::rho);

        // omega~: (x,d) -> (omega_0 x, -d), first type (a,d) -> (omega_1 a, -d),
        // second type (x,d)_1 -> (beta_{omega_0 x}, -d)
        res.omega_tilde = QuiverEmbedding{};
        for (const auto& [id, origin] : res.cone_result.vertex_origin)
            res.omega_tilde.vertex_map[id] = cover_vertex_id(w.vertex_map.at(origin.first), mod_level(-origin.second, m));
        for (const auto& [id, origin] : res.cone_result.arrow_origin) {
            long t = mod_level(-origin.level, m);
            if (origin.second_type) {
                res.omega_tilde.arrow_map[id] = cover_arrow_id(returning_arrow_id(w.vertex_map.at(origin.base)), t);
            } else {
                res.omega_tilde.arrow_map[id] = cover_arrow_id(w.arrow_map.at(origin.base), t);
            }
        }

        res.cone_report = mckay_truncation_check(res.omega_tilde, res.cone_result.bq, res.cover_result.bq);

        // explicit omega~_0 tau_{n+1} = nu~ omega~_0 on every non-projective vertex
        res.translation_compat = true;
        const auto& tau2 = *res.cone_result.bq.translation;
        const auto& nu2 = *res.cover_result.bq.nakayama;
        for (const auto& [x, tx] : tau2) {
            if (res.omega_tilde.vertex_map.at(tx) != nu2.at(res.omega_tilde.vertex_map.at(x))) {
                res.translation_compat = false;
                res.cone_report.witnesses.push_back("cone translation incompatible at " + x);
            }
        }
        res.verdict = res.cone_report.verdict && res.translation_compat;
    };

    if (m_override) {
        attempt(*m_override);
        return res;
    }
    // the minimal index with tau^m = 0 may wrap a returning arrow back into
    // the image; search upward for the smallest index that verifies
    long m_max = m_min + static_cast<long>(res.cone_result.bq.quiver.vertices().size()) + 1;
    for (long m = m_min; m <= m_max; ++m) {
        attempt(m);
        if (res.verdict) break;
    }
    return res;
}

BoundQuiver t_algebra(long s, long n) {
    if (s < 1 || n < 1) throw Error("t_algebra needs s >= 1, n >= 1");
    BoundQuiver b;
    for (long i = 1; i <= s; ++i) b.quiver.add_vertex({std::to_string(i), Label::of_residue(i)});
    for (long i = 1; i < s; ++i)
        b.quiver.add_arrow({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1),
                            Label::of_name("a" + std::to_string(i))});
    std::map<std::string, std::string> tau;
    for (long i = 2; i <= s; ++i) tau[std::to_string(i)] = std::to_string(i - 1);
    b.translation = std::move(tau);
    for (long k = 1; k < n; ++k) b = cone(b).bq;
    return b;
}

TAlgebraChain t_algebra_chain(long s, long r, long n) {
    if (r < s + 1) throw Error("group order must be at least s+1");
    TAlgebraChain chain;
    chain.base = t_algebra(s, 1);
    chain.spec = {{r}, {{1}}};
    std::map<std::string, std::vector<long>> vtuple;
    std::map<std::string, std::pair<long, std::vector<long>>> adata;
    for (long i = 1; i <= s; ++i) {
        std::vector<long> t{i % r};
        chain.omega.vertex_map[std::to_string(i)] = abelian_vertex_id(t);
        vtuple[std::to_string(i)] = t;
    }
    for (long i = 1; i < s; ++i) {
        std::vector<long> t{i % r};
        chain.omega.arrow_map["a" + std::to_string(i)] = abelian_arrow_id(1, t);
        adata["a" + std::to_string(i)] = {1, t};
    }

    for (long k = 1; k < n; ++k) {
        ConeResult cr = cone(chain.base);

        AbelianMcKaySpec next;
        QuiverEmbedding omega;
        std::map<std::string, std::vector<long>> nvt;
        std::map<std::string, std::pair<long, std::vector<long>>> nad;

        auto attempt = [&](long m) {
            // extend the group by C_m: pad old weights with 0, append the
            // SL-completing weight (-sum w, 1)
            next = AbelianMcKaySpec{};
            next.orders = chain.spec.orders;
            next.orders.push_back(m);
            std::vector<long> neg(chain.spec.orders.size(), 0);
            for (const auto& wt : chain.spec.weights) {
                std::vector<long> padded = wt;
                padded.push_back(0);
                next.weights.push_back(padded);
                for (size_t c = 0; c < neg.size(); ++c) neg[c] -= wt[c];
            }
            for (size_t c = 0; c < neg.size(); ++c) {
                neg[c] %= chain.spec.orders[c];
                if (neg[c] < 0) neg[c] += chain.spec.orders[c];
            }
            neg.push_back(1 % m);
            next.weights.push_back(neg);

            omega = QuiverEmbedding{};
            nvt.clear();
            nad.clear();
            for (const auto& [id, origin] : cr.vertex_origin) {
                std::vector<long> t = vtuple.at(origin.first);
                t.push_back(mod_level(-origin.second, m));
                omega.vertex_map[id] = abelian_vertex_id(t);
                nvt[id] = t;
            }
            long new_coord = static_cast<long>(next.weights.size());
            for (const auto& [id, origin] : cr.arrow_origin) {
                if (origin.second_type) {
                    std::vector<long> t = vtuple.at(origin.base);
                    t.push_back(mod_level(-origin.level, m));
                    omega.arrow_map[id] = abelian_arrow_id(new_coord, t);
                    nad[id] = {new_coord, t};
                } else {
                    auto [j, t0] = adata.at(origin.base);
                    std::vector<long> t = t0;
                    t.push_back(mod_level(-origin.level, m));
                    omega.arrow_map[id] = abelian_arrow_id(j, t);
                    nad[id] = {j, t};
                }
            }
            return mckay_truncation_check(omega, cr.bq, abelian_bound_mckay(next).rho_side()).verdict;
        };

        // smallest cover index for which the lifted embedding verifies
        long m_min = minimal_cover_index(chain.base);
        long m_max = m_min + static_cast<long>(cr.bq.quiver.vertices().size()) + 1;
        long m = m_min;
        while (!attempt(m) && m < m_max) ++m;
        chain.ms.push_back(m);
        chain.base = cr.bq;
        chain.spec = next;
        chain.omega = omega;
        vtuple = std::move(nvt);
        adata = std::move(nad);
    }
    return chain;
}

}  // namespace qmk
