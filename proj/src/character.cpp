#include "qmk/character.hpp"

#include <sstream>

namespace qmk {

namespace {

std::vector<std::vector<long>> enumerate_tuples(const std::vector<long>& orders) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(orders.size(), 0);
    long total = 1;
    for (long r : orders) {
        if (r < 1) throw Error("abelian orders must be >= 1");
        total *= r;
    }
    for (long n = 0; n < total; ++n) {
        out.push_back(cur);
        // mixed-radix increment, last coordinate fastest
        for (long i = static_cast<long>(orders.size()) - 1; i >= 0; --i) {
            if (++cur[i] < orders[i]) break;
            cur[i] = 0;
        }
    }
    return out;
}

Cyclotomic abelian_char_value(const std::vector<long>& orders, const std::vector<long>& a, const std::vector<long>& g) {
    Cyclotomic v(Rat(1));
    for (size_t k = 0; k < orders.size(); ++k) v = v * Cyclotomic::root_of_unity(orders[k], a[k] * g[k]);
    return v;
}

}  // namespace

std::string tuple_str(const std::vector<long>& t) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i];
    }
    os << ")";
    return os.str();
}

std::string pair_name(const std::string& base, long k) { return "(" + base + "," + std::to_string(k) + ")"; }

long RepCharacter::dimension() const {
    if (values.empty()) throw TableError("empty character");
    Rat d = values[0].as_rational();
    if (boost::multiprecision::denominator(d) != 1 || d <= 0) throw TableError("character dimension is not a positive integer");
    return static_cast<long>(boost::multiprecision::numerator(d));
}

long CharacterTable::class_index(const std::string& name) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].name == name) return static_cast<long>(i);
    throw TableError("unknown class '" + name + "'");
}

long CharacterTable::irreducible_index(const std::string& name) const {
    for (size_t i = 0; i < irreducibles.size(); ++i)
        if (irreducibles[i].name == name) return static_cast<long>(i);
    throw TableError("unknown irreducible '" + name + "'");
}

Rat inner_product(const CharacterTable& t, const std::vector<Cyclotomic>& phi, const std::vector<Cyclotomic>& psi) {
    if (phi.size() != t.classes.size() || psi.size() != t.classes.size())
        throw TableError("character length does not match class count");
    Cyclotomic acc;
    for (size_t c = 0; c < t.classes.size(); ++c)
        acc = acc + Cyclotomic(Rat(t.classes[c].size)) * phi[c] * psi[c].conj();
    Cyclotomic scaled = Cyclotomic(Rat(1, t.group_order)) * acc;
    if (!scaled.is_rational()) throw TableError("inner product is not rational: " + scaled.str());
    return scaled.as_rational();
}

std::vector<long> tensor_decompose(const CharacterTable& t, const RepCharacter& chi_v, long i) {
    if (i < 0 || i >= static_cast<long>(t.irreducibles.size())) throw TableError("irreducible index out of range");
    std::vector<Cyclotomic> prod(t.classes.size());
    for (size_t c = 0; c < t.classes.size(); ++c) prod[c] = chi_v.values[c] * t.irreducibles[i].values[c];
    std::vector<long> out;
    Rat dim_check(0);
    for (size_t j = 0; j < t.irreducibles.size(); ++j) {
        Rat a = inner_product(t, prod, t.irreducibles[j].values);
        if (a < 0 || boost::multiprecision::denominator(a) != 1)
            throw TableError("multiplicity a_{" + std::to_string(i) + "," + std::to_string(j) + "} = " + rat_str(a) +
                             " is not a non-negative integer");
        long ai = static_cast<long>(boost::multiprecision::numerator(a));
        out.push_back(ai);
        dim_check += a * t.irreducibles[j].values[0].as_rational();
    }
    if (dim_check != chi_v.values[0].as_rational() * t.irreducibles[i].values[0].as_rational())
        throw TableError("tensor decomposition does not conserve dimension");
    return out;
}

void check_table(const CharacterTable& t) {
    long total = 0;
    for (const auto& c : t.classes) total += c.size;
    if (total != t.group_order) throw TableError("class sizes do not sum to group order");
    Rat dimsq(0);
    for (size_t i = 0; i < t.irreducibles.size(); ++i) {
        Rat d = t.irreducibles[i].values[0].as_rational();
        dimsq += d * d;
        for (size_t j = 0; j < t.irreducibles.size(); ++j) {
            Rat ip = inner_product(t, t.irreducibles[i].values, t.irreducibles[j].values);
            if (ip != Rat(i == j ? 1 : 0))
                throw TableError("row orthonormality fails at (" + t.irreducibles[i].name + ", " +
                                 t.irreducibles[j].name + "): " + rat_str(ip));
        }
    }
    if (dimsq != Rat(t.group_order)) throw TableError("sum of squared dimensions != group order");
    if (t.det_values) {
        if (t.det_values->size() != t.classes.size()) throw TableError("det_values length mismatch");
        for (const auto& d : *t.det_values) {
            // root of unity: d * conj(d) == 1 and some power is 1
            if ((d * d.conj()).as_rational() != 1) throw TableError("det value is not a root of unity");
        }
    }
}

CharacterTable abelian_table(const std::vector<long>& orders) {
    if (orders.empty()) throw TableError("abelian_table needs at least one order");
    CharacterTable t;
    auto tuples = enumerate_tuples(orders);
    t.group_order = static_cast<long>(tuples.size());
    for (const auto& g : tuples) t.classes.push_back({tuple_str(g), 1});
    for (const auto& a : tuples) {
        Irreducible irr;
        irr.name = tuple_str(a);
        for (const auto& g : tuples) irr.values.push_back(abelian_char_value(orders, a, g));
        t.irreducibles.push_back(std::move(irr));
    }
    t.abelian_orders = orders;
    return t;
}

RepCharacter weights_character(const CharacterTable& t, const std::vector<std::vector<long>>& weights) {
    if (!t.abelian_orders) throw TableError("weights_character needs an abelian table");
    const auto& orders = *t.abelian_orders;
    auto tuples = enumerate_tuples(orders);
    std::vector<long> wsum(orders.size(), 0);
    for (const auto& w : weights) {
        if (w.size() != orders.size()) throw TableError("weight arity does not match orders");
        for (size_t k = 0; k < orders.size(); ++k) wsum[k] = (wsum[k] + w[k]) % orders[k];
    }
    RepCharacter rep;
    rep.det = std::vector<Cyclotomic>{};
    for (const auto& g : tuples) {
        Cyclotomic v;
        for (const auto& w : weights) v = v + abelian_char_value(orders, w, g);
        rep.values.push_back(v);
        rep.det->push_back(abelian_char_value(orders, wsum, g));
    }
    return rep;
}

RepCharacter sl_embed(const CharacterTable& t, const RepCharacter& chi_v) {
    if (!chi_v.det) throw MissingDataError("sl_embed needs determinant values");
    if (chi_v.values.size() != t.classes.size()) throw TableError("character length mismatch");
    RepCharacter out;
    out.det = std::vector<Cyclotomic>{};
    for (size_t c = 0; c < t.classes.size(); ++c) {
        // det(c)^{-1} = conj(det(c)) for a root of unity
        out.values.push_back(chi_v.values[c] + (*chi_v.det)[c].conj());
        out.det->push_back(Cyclotomic(Rat(1)));
    }
    return out;
}

ProductWithCyclic product_with_cyclic(const CharacterTable& t, const RepCharacter& chi_v, long m) {
    if (m < 1) throw TableError("cyclic factor order must be >= 1");
    if (!chi_v.det) throw MissingDataError("product_with_cyclic needs determinant values of V");
    ProductWithCyclic out;
    CharacterTable& pt = out.table;
    pt.group_order = t.group_order * m;
    for (const auto& c : t.classes)
        for (long k = 0; k < m; ++k) pt.classes.push_back({pair_name(c.name, k), c.size});
    for (const auto& irr : t.irreducibles) {
        for (long j = 0; j < m; ++j) {
            Irreducible pirr;
            pirr.name = pair_name(irr.name, j);
            for (size_t c = 0; c < t.classes.size(); ++c)
                for (long k = 0; k < m; ++k) pirr.values.push_back(irr.values[c] * Cyclotomic::root_of_unity(m, j * k));
            pt.irreducibles.push_back(std::move(pirr));
        }
    }
    if (t.abelian_orders) {
        auto orders = *t.abelian_orders;
        orders.push_back(m);
        pt.abelian_orders = orders;
    }
    out.rep.det = std::vector<Cyclotomic>{};
    for (size_t c = 0; c < t.classes.size(); ++c) {
        for (long k = 0; k < m; ++k) {
            Cyclotomic xi = Cyclotomic::root_of_unity(m, k);
            out.rep.values.push_back(chi_v.values[c] + (*chi_v.det)[c].conj() * xi);
            out.rep.det->push_back(xi);
        }
    }
    pt.det_values = out.rep.det;
    return out;
}

CharacterTable s3_table() {
    CharacterTable t;
    t.group_order = 6;
    t.classes = {{"e", 1}, {"(12)", 3}, {"(123)", 2}};
    auto c = [](long v) { return Cyclotomic(Rat(v)); };
    t.irreducibles = {{"triv", {c(1), c(1), c(1)}}, {"sign", {c(1), c(-1), c(1)}}, {"std", {c(2), c(0), c(-1)}}};
    return t;
}

}  // namespace qmk
