#include "qmk/io.hpp"

#include <sstream>

namespace qmk {

Json label_to_json(const Label& l) {
    Json j;
    switch (l.kind()) {
        case Label::Kind::name:
            j["kind"] = "name";
            j["name"] = l.name();
            break;
        case Label::Kind::residue:
            j["kind"] = "residue";
            j["value"] = l.residue();
            break;
        case Label::Kind::tuple:
            j["kind"] = "tuple";
            j["value"] = l.tuple();
            break;
        case Label::Kind::level:
            j["kind"] = "level";
            j["base"] = label_to_json(l.base());
            j["t"] = l.level();
            break;
        case Label::Kind::returning:
            j["kind"] = "returning";
            j["vertex"] = label_to_json(l.base());
            break;
        case Label::Kind::connecting:
            j["kind"] = "connecting";
            j["vertex"] = label_to_json(l.base());
            j["d"] = l.level();
            break;
    }
    return j;
}

Label label_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "name") return Label::of_name(j.at("name").get<std::string>());
    if (kind == "residue") return Label::of_residue(j.at("value").get<long>());
    if (kind == "tuple") return Label::of_tuple(j.at("value").get<std::vector<long>>());
    if (kind == "level") return Label::leveled(label_from_json(j.at("base")), j.at("t").get<long>());
    if (kind == "returning") return Label::returning_at(label_from_json(j.at("vertex")));
    if (kind == "connecting") return Label::connecting_at(label_from_json(j.at("vertex")), j.at("d").get<long>());
    throw ParseError("unknown label kind '" + kind + "'");
}

Json relation_to_json(const PathCombo& c) {
    Json paths = Json::array();
    Json coeffs = Json::array();
    for (const auto& [p, h] : c.terms()) {
        if (p.is_trivial()) throw ParseError("trivial path in a relation is not representable");
        paths.push_back(p.arrows);
        coeffs.push_back(rat_str(h));
    }
    Json j;
    j["paths"] = std::move(paths);
    j["coefficients"] = std::move(coeffs);
    return j;
}

PathCombo relation_from_json(const Json& j) {
    const Json& paths = j.at("paths");
    const Json& coeffs = j.at("coefficients");
    if (paths.size() != coeffs.size()) throw ParseError("relation has mismatched paths/coefficients");
    PathCombo c;
    for (size_t i = 0; i < paths.size(); ++i) {
        Path p;
        p.arrows = paths[i].get<std::vector<std::string>>();
        c.add(p, rat_parse(coeffs[i].get<std::string>()));
    }
    return c;
}

namespace {

Json string_map_to_json(const std::map<std::string, std::string>& m) {
    Json j = Json::object();
    for (const auto& [k, v] : m) j[k] = v;
    return j;
}

std::map<std::string, std::string> string_map_from_json(const Json& j) {
    std::map<std::string, std::string> m;
    for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = it.value().get<std::string>();
    return m;
}

}  // namespace

Json bound_quiver_to_json(const BoundQuiver& b) {
    Json j;
    Json vs = Json::array();
    for (const auto& [id, v] : b.quiver.vertices()) {
        Json e;
        e["id"] = id;
        e["label"] = label_to_json(v.label);
        vs.push_back(std::move(e));
    }
    j["vertices"] = std::move(vs);
    Json as = Json::array();
    for (const auto& [id, a] : b.quiver.arrows()) {
        Json e;
        e["id"] = id;
        e["source"] = a.source;
        e["target"] = a.target;
        e["label"] = label_to_json(a.label);
        as.push_back(std::move(e));
    }
    j["arrows"] = std::move(as);
    Json rs = Json::array();
    for (const auto& r : b.relations) rs.push_back(relation_to_json(r));
    j["relations"] = std::move(rs);
    if (b.nakayama) j["nakayama"] = string_map_to_json(*b.nakayama);
    if (b.nakayama_arrows) j["nakayama_arrows"] = string_map_to_json(*b.nakayama_arrows);
    if (b.translation) j["translation"] = string_map_to_json(*b.translation);
    if (b.loewy_length) j["loewy_length"] = *b.loewy_length;
    return j;
}

BoundQuiver bound_quiver_from_json(const Json& j) {
    BoundQuiver b;
    for (const auto& e : j.at("vertices"))
        b.quiver.add_vertex({e.at("id").get<std::string>(), label_from_json(e.at("label"))});
    for (const auto& e : j.at("arrows"))
        b.quiver.add_arrow({e.at("id").get<std::string>(), e.at("source").get<std::string>(),
                            e.at("target").get<std::string>(), label_from_json(e.at("label"))});
    if (j.contains("relations"))
        for (const auto& e : j.at("relations")) b.relations.push_back(relation_from_json(e));
    if (j.contains("nakayama")) b.nakayama = string_map_from_json(j.at("nakayama"));
    if (j.contains("nakayama_arrows")) b.nakayama_arrows = string_map_from_json(j.at("nakayama_arrows"));
    if (j.contains("translation")) b.translation = string_map_from_json(j.at("translation"));
    if (j.contains("loewy_length")) b.loewy_length = j.at("loewy_length").get<long>();
    check_bound_quiver(b);
    return b;
}

std::string dump_bound_quiver(const BoundQuiver& b) { return bound_quiver_to_json(b).dump(2) + "\n"; }

BoundQuiver parse_bound_quiver(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad quiver document: ") + e.what());
    }
    try {
        return bound_quiver_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad quiver document: ") + e.what());
    }
}

Json graded_dims_to_json(const GradedDims& d) {
    Json j;
    j["max_degree"] = d.max_degree;
    Json cells = Json::array();
    for (const auto& [key, v] : d.dims) {
        if (v == 0) continue;
        Json e;
        e["source"] = std::get<0>(key);
        e["target"] = std::get<1>(key);
        e["degree"] = std::get<2>(key);
        e["dim"] = v;
        cells.push_back(std::move(e));
    }
    j["cells"] = std::move(cells);
    Json totals = Json::array();
    for (long deg = 0; deg <= d.max_degree; ++deg) totals.push_back(d.total(deg));
    j["totals"] = std::move(totals);
    j["total"] = d.total_all();
    return j;
}

Json table_to_json(const CharacterTable& t, const RepCharacter* rep) {
    Json j;
    j["group_order"] = t.group_order;
    Json cs = Json::array();
    for (const auto& c : t.classes) {
        Json e;
        e["name"] = c.name;
        e["size"] = c.size;
        cs.push_back(std::move(e));
    }
    j["classes"] = std::move(cs);
    Json irs = Json::array();
    for (const auto& ir : t.irreducibles) {
        Json e;
        e["name"] = ir.name;
        Json vals = Json::array();
        for (const auto& v : ir.values) vals.push_back(v.str());
        e["values"] = std::move(vals);
        irs.push_back(std::move(e));
    }
    j["irreducibles"] = std::move(irs);
    if (t.det_values) {
        Json vals = Json::array();
        for (const auto& v : *t.det_values) vals.push_back(v.str());
        j["det_values"] = std::move(vals);
    }
    if (t.abelian_orders) j["abelian_orders"] = *t.abelian_orders;
    if (rep) {
        Json r;
        Json vals = Json::array();
        for (const auto& v : rep->values) vals.push_back(v.str());
        r["values"] = std::move(vals);
        if (rep->det) {
            Json dv = Json::array();
            for (const auto& v : *rep->det) dv.push_back(v.str());
            r["det"] = std::move(dv);
        }
        j["rep_character"] = std::move(r);
    }
    return j;
}

CharacterTable table_from_json(const Json& j, std::optional<RepCharacter>* rep) {
    CharacterTable t;
    t.group_order = j.at("group_order").get<long>();
    for (const auto& e : j.at("classes")) t.classes.push_back({e.at("name").get<std::string>(), e.at("size").get<long>()});
    for (const auto& e : j.at("irreducibles")) {
        Irreducible ir;
        ir.name = e.at("name").get<std::string>();
        for (const auto& v : e.at("values")) ir.values.push_back(Cyclotomic::parse(v.get<std::string>()));
        t.irreducibles.push_back(std::move(ir));
    }
    if (j.contains("det_values")) {
        std::vector<Cyclotomic> dv;
        for (const auto& v : j.at("det_values")) dv.push_back(Cyclotomic::parse(v.get<std::string>()));
        t.det_values = std::move(dv);
    }
    if (j.contains("abelian_orders")) t.abelian_orders = j.at("abelian_orders").get<std::vector<long>>();
    if (rep) {
        rep->reset();
        if (j.contains("rep_character")) {
            RepCharacter r;
            for (const auto& v : j.at("rep_character").at("values")) r.values.push_back(Cyclotomic::parse(v.get<std::string>()));
            if (j.at("rep_character").contains("det")) {
                std::vector<Cyclotomic> dv;
                for (const auto& v : j.at("rep_character").at("det")) dv.push_back(Cyclotomic::parse(v.get<std::string>()));
                r.det = std::move(dv);
            }
            *rep = std::move(r);
        }
    }
    return t;
}

Json embedding_to_json(const QuiverEmbedding& w) {
    Json j;
    j["vertex_map"] = string_map_to_json(w.vertex_map);
    j["arrow_map"] = string_map_to_json(w.arrow_map);
    return j;
}

QuiverEmbedding embedding_from_json(const Json& j) {
    QuiverEmbedding w;
    w.vertex_map = string_map_from_json(j.at("vertex_map"));
    w.arrow_map = string_map_from_json(j.at("arrow_map"));
    return w;
}

Json truncation_report_to_json(const TruncationReport& r) {
    Json j;
    j["verdict"] = r.verdict;
    j["embedding_valid"] = r.embedding_valid;
    j["image_full"] = r.image_full;
    j["relations_induced"] = r.relations_induced;
    j["translation_commutes"] = r.translation_commutes;
    j["witnesses"] = r.witnesses;
    return j;
}

Json stq_report_to_json(const StqReport& r) {
    Json j;
    j["verdict"] = r.ok;
    j["violations"] = r.violations;
    return j;
}

Json ortho_report_to_json(const OrthoReport& r) {
    Json j;
    j["verdict"] = r.ok;
    Json cells = Json::array();
    for (const auto& c : r.cells) {
        Json e;
        e["source"] = c.source;
        e["target"] = c.target;
        e["paths"] = c.n_paths;
        e["rho_rank"] = c.rho_rank;
        e["theta_rank"] = c.theta_rank;
        e["orthogonal"] = c.orthogonal;
        e["complementary"] = c.complementary;
        cells.push_back(std::move(e));
    }
    j["cells"] = std::move(cells);
    return j;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string export_dot(const BoundQuiver& b) {
    std::ostringstream os;
    os << "// bound quiver: " << b.quiver.vertices().size() << " vertices, " << b.quiver.arrows().size()
       << " arrows, " << b.relations.size() << " relations\n";
    if (b.quiver.vertices().empty()) {
        os << "digraph { }\n";
        return os.str();
    }
    os << "digraph {\n";
    for (const auto& [id, v] : b.quiver.vertices())
        os << "  \"" << dot_escape(id) << "\" [label=\"" << dot_escape(v.label.str()) << "\"];\n";
    for (const auto& [id, a] : b.quiver.arrows()) {
        os << "  \"" << dot_escape(a.source) << "\" -> \"" << dot_escape(a.target) << "\" [label=\""
           << dot_escape(a.label.str()) << "\"";
        if (a.label.kind() == Label::Kind::returning) os << ", style=dashed";
        if (a.label.kind() == Label::Kind::connecting) os << ", style=dotted";
        if (a.label.kind() == Label::Kind::level && a.label.base().kind() == Label::Kind::returning)
            os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& r : b.relations) os << "  // relation: " << r.str() << "\n";
    os << "}\n";
    return os.str();
}

}  // namespace qmk
