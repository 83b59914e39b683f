#include "qmk/mckay.hpp"

#include <algorithm>

namespace qmk {

namespace {

std::vector<long> mod_tuple(std::vector<long> t, const std::vector<long>& orders) {
    for (size_t k = 0; k < t.size(); ++k) {
        t[k] %= orders[k];
        if (t[k] < 0) t[k] += orders[k];
    }
    return t;
}

std::vector<long> add_tuple(const std::vector<long>& a, const std::vector<long>& b, const std::vector<long>& orders) {
    std::vector<long> out(a.size());
    for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return mod_tuple(out, orders);
}

std::vector<std::vector<long>> all_tuples(const std::vector<long>& orders) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(orders.size(), 0);
    long total = 1;
    for (long r : orders) total *= r;
    for (long n = 0; n < total; ++n) {
        out.push_back(cur);
        for (long i = static_cast<long>(orders.size()) - 1; i >= 0; --i) {
            if (++cur[i] < orders[i]) break;
            cur[i] = 0;
        }
    }
    return out;
}

}  // namespace

Quiver mckay_quiver(const CharacterTable& t, const RepCharacter& chi_v) {
    Quiver q;
    for (const auto& irr : t.irreducibles) q.add_vertex({irr.name, Label::of_name(irr.name)});
    for (size_t i = 0; i < t.irreducibles.size(); ++i) {
        std::vector<long> a = tensor_decompose(t, chi_v, static_cast<long>(i));
        for (size_t j = 0; j < t.irreducibles.size(); ++j) {
            for (long n = 0; n < a[j]; ++n) {
                std::string id = t.irreducibles[i].name + ">" + t.irreducibles[j].name + "#" + std::to_string(n);
                q.add_arrow({id, t.irreducibles[i].name, t.irreducibles[j].name, Label::of_name(id)});
            }
        }
    }
    return q;
}

std::string abelian_vertex_id(const std::vector<long>& tuple) { return tuple_str(tuple); }

std::string abelian_arrow_id(long j, const std::vector<long>& tuple) {
    return "a" + std::to_string(j) + "@" + tuple_str(tuple);
}

AbelianMcKay abelian_bound_mckay(const AbelianMcKaySpec& spec) {
    if (spec.orders.empty()) throw Error("abelian spec needs at least one order");
    for (const auto& w : spec.weights)
        if (w.size() != spec.orders.size()) throw Error("weight arity does not match orders");
    AbelianMcKay m;
    m.spec = spec;
    const auto& orders = spec.orders;
    long n = static_cast<long>(spec.weights.size());
    auto tuples = all_tuples(orders);
    std::vector<std::vector<long>> ws;
    for (const auto& w : spec.weights) ws.push_back(mod_tuple(w, orders));

    for (const auto& i : tuples) {
        std::string id = abelian_vertex_id(i);
        m.quiver.add_vertex({id, Label::of_tuple(i)});
        m.vertex_tuples[id] = i;
    }
    for (const auto& i : tuples) {
        for (long j = 1; j <= n; ++j) {
            std::string id = abelian_arrow_id(j, i);
            std::string tgt = abelian_vertex_id(add_tuple(i, ws[j - 1], orders));
            m.quiver.add_arrow({id, abelian_vertex_id(i), tgt, Label::of_name(id)});
            m.arrow_data[id] = {j, i};
        }
    }

    // nu(i) = i - sum of weights; nu(alpha_j(i)) = alpha_j(nu i)
    std::vector<long> wsum(orders.size(), 0);
    for (const auto& w : ws)
        for (size_t k = 0; k < orders.size(); ++k) wsum[k] += w[k];
    for (const auto& i : tuples) {
        std::vector<long> ni(i.size());
        for (size_t k = 0; k < i.size(); ++k) ni[k] = i[k] - wsum[k];
        ni = mod_tuple(ni, orders);
        m.nu_vertices[abelian_vertex_id(i)] = abelian_vertex_id(ni);
        for (long j = 1; j <= n; ++j) m.nu_arrows[abelian_arrow_id(j, i)] = abelian_arrow_id(j, ni);
    }

    auto arrow_path = [&](long j, const std::vector<long>& at) {
        Path p;
        p.arrows = {abelian_arrow_id(j, at)};
        return p;
    };
    for (const auto& i : tuples) {
        for (long j = 1; j <= n; ++j) {
            // theta square: alpha_j(i + w_j) alpha_j(i)
            Path sq = arrow_path(j, add_tuple(i, ws[j - 1], orders));
            sq.arrows.push_back(abelian_arrow_id(j, i));
            m.theta.push_back(make_combo({{sq, Rat(1)}}));
            for (long l = j + 1; l <= n; ++l) {
                Path lj = arrow_path(l, add_tuple(i, ws[j - 1], orders));
                lj.arrows.push_back(abelian_arrow_id(j, i));
                Path jl = arrow_path(j, add_tuple(i, ws[l - 1], orders));
                jl.arrows.push_back(abelian_arrow_id(l, i));
                // commutation in rho, anticommutation in theta; the two may
                // collapse to the same path when weights repeat
                PathCombo comm = make_combo({{lj, Rat(1)}, {jl, Rat(-1)}});
                if (!comm.is_zero()) m.rho.push_back(comm);
                m.theta.push_back(make_combo({{lj, Rat(1)}, {jl, Rat(1)}}));
            }
        }
    }
    for (const auto& r : m.rho) require_valid_relation(m.quiver, r);
    for (const auto& r : m.theta) require_valid_relation(m.quiver, r);
    return m;
}

BoundQuiver AbelianMcKay::rho_side() const {
    BoundQuiver b;
    b.quiver = quiver;
    b.relations = rho;
    b.nakayama = nu_vertices;
    b.nakayama_arrows = nu_arrows;
    return b;
}

BoundQuiver AbelianMcKay::theta_side() const {
    BoundQuiver b;
    b.quiver = quiver;
    b.relations = theta;
    b.nakayama = nu_vertices;
    b.nakayama_arrows = nu_arrows;
    b.loewy_length = static_cast<long>(spec.weights.size()) + 1;
    return b;
}

std::map<std::string, std::string> nakayama_from_det(const CharacterTable& t,
                                                     const std::vector<Cyclotomic>& det_values) {
    if (det_values.size() != t.classes.size()) throw TableError("det_values length mismatch");
    std::map<std::string, std::string> nu;
    for (const auto& irr : t.irreducibles) {
        std::vector<Cyclotomic> shifted(t.classes.size());
        for (size_t c = 0; c < t.classes.size(); ++c) shifted[c] = irr.values[c] * det_values[c].conj();
        const Irreducible* found = nullptr;
        for (const auto& cand : t.irreducibles) {
            bool eq = true;
            for (size_t c = 0; c < t.classes.size() && eq; ++c) eq = (cand.values[c] == shifted[c]);
            if (eq) {
                found = &cand;
                break;
            }
        }
        if (!found) throw TableError("no irreducible equals chi * det^{-1} for '" + irr.name + "'");
        nu[irr.name] = found->name;
    }
    return nu;
}

}  // namespace qmk
