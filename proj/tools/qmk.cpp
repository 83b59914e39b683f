// qmk: quiver constructions and checks over the JSON interchange format.
// Subcommands read a quiver document on stdin and write their result to
// stdout so they compose via pipes.  Exit codes: 0 success, 1 verification
// failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "qmk/constructions.hpp"
#include "qmk/io.hpp"
#include "qmk/mckay.hpp"
#include "qmk/path_algebra.hpp"
#include "qmk/truncation.hpp"

namespace {

using namespace qmk;

std::vector<long> parse_longs(const std::string& s, char sep) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        if (tok.empty()) throw ParseError("empty component in '" + s + "'");
        out.push_back(std::stol(tok));
    }
    if (out.empty()) throw ParseError("empty list '" + s + "'");
    return out;
}

// weights: comma-separated list of weights, components colon-separated
// ("1,2" is two 1-tuples, "1:0,0:1" is two 2-tuples)
std::vector<std::vector<long>> parse_weights(const std::string& s) {
    std::vector<std::vector<long>> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_longs(tok, ':'));
    if (out.empty()) throw ParseError("no weights in '" + s + "'");
    return out;
}

std::string read_stream(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(read_stream(f));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad document '" + path + "': " + e.what());
    }
}

Json read_stdin_json() {
    try {
        return Json::parse(read_stream(std::cin));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad document on stdin: ") + e.what());
    }
}

// McKay documents carry both relation sets: `relations` holds the
// commutation side and `theta_relations` the dual side.  Downstream
// subcommands select a side; documents with a single relation set pass
// through unchanged when no side is requested.
BoundQuiver select_side(const Json& doc, const std::string& side) {
    BoundQuiver b = bound_quiver_from_json(doc);
    if (side.empty() || side == "rho") return b;
    if (side != "theta") throw ParseError("side must be rho or theta");
    if (!doc.contains("theta_relations")) throw ParseError("document has no theta_relations");
    b.relations.clear();
    for (const auto& e : doc.at("theta_relations")) b.relations.push_back(relation_from_json(e));
    if (doc.contains("theta_loewy_length")) b.loewy_length = doc.at("theta_loewy_length").get<long>();
    check_bound_quiver(b);
    return b;
}

Json mckay_document(const AbelianMcKay& am) {
    Json doc = bound_quiver_to_json(am.rho_side());
    Json th = Json::array();
    for (const auto& r : am.theta) th.push_back(relation_to_json(r));
    doc["theta_relations"] = std::move(th);
    doc["theta_loewy_length"] = static_cast<long>(am.spec.weights.size()) + 1;
    return doc;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"bound quiver constructions and verifiers"};
    app.require_subcommand(1);

    std::string orders_s, weights_s, side, twist_variant = "reverse", format = "json", fixture;
    std::string sub_path, super_path, embedding_path;
    long m = 0, s = 0, n = 1, group_order = 0, loewy = 0, max_degree = 0;
    int eps = -1;
    bool check_translation = false;
    std::vector<std::string> drop_vertices;
    std::optional<long> m_override;

    auto* c_mckay = app.add_subcommand("mckay", "bound McKay quiver of an abelian group");
    c_mckay->add_option("--orders", orders_s, "cyclic orders, comma-separated")->required();
    c_mckay->add_option("--weights", weights_s, "action weights; components colon-separated")->required();

    auto* c_ret = app.add_subcommand("returning", "add returning arrows to a McKay document from stdin");
    c_ret->add_option("--side", side, "rho (default) or theta")->check(CLI::IsMember({"rho", "theta"}));
    c_ret->add_option("--eps", eps, "twist sign for the theta side (default -1)");

    auto* c_cover = app.add_subcommand("cover", "cyclic cover of a McKay document from stdin");
    c_cover->add_option("--m", m, "cover index")->required()->check(CLI::PositiveNumber);
    c_cover->add_option("--side", side, "rho (default) or theta")->check(CLI::IsMember({"rho", "theta"}));
    c_cover->add_option("--eps", eps, "twist sign for the theta side (default -1)");

    auto* c_cone = app.add_subcommand("cone", "cone of a translation document from stdin");

    auto* c_talg = app.add_subcommand("t-algebra", "iterated cone of the linear A_s quiver");
    c_talg->add_option("--s", s, "number of base vertices")->required()->check(CLI::PositiveNumber);
    c_talg->add_option("--n", n, "cone iterations + 1")->check(CLI::PositiveNumber);

    auto* c_trunc = app.add_subcommand("truncate-check", "verify that sub embeds as a truncation of super");
    c_trunc->add_option("--sub", sub_path, "subquiver document")->required();
    c_trunc->add_option("--super", super_path, "ambient quiver document")->required();
    c_trunc->add_option("--embedding", embedding_path, "vertex/arrow map document")->required();
    c_trunc->add_flag("--translation", check_translation, "also check tau/nu compatibility");

    auto* c_verify = app.add_subcommand("verify-main", "cone-vs-cover pipeline for T^n_s");
    c_verify->add_option("--s", s, "number of base vertices")->required()->check(CLI::PositiveNumber);
    c_verify->add_option("--n", n, "stage")->check(CLI::PositiveNumber);
    c_verify->add_option("--group-order", group_order, "order of the first cyclic factor (>= s+1)")->required();
    c_verify->add_option("--m", m_override, "cover index override");

    auto* c_dims = app.add_subcommand("dims", "graded dimensions of the quotient algebra");
    c_dims->add_option("--max-degree", max_degree, "top degree")->required()->check(CLI::NonNegativeNumber);
    c_dims->add_option("--drop-vertices", drop_vertices, "vertex ids to kill");
    c_dims->add_option("--side", side, "rho (default) or theta")->check(CLI::IsMember({"rho", "theta"}));

    auto* c_stq = app.add_subcommand("check-stq", "stable translation quiver conditions");
    c_stq->add_option("--loewy", loewy, "l with Loewy length l+1")->required()->check(CLI::PositiveNumber);
    c_stq->add_option("--side", side, "rho (default) or theta")->check(CLI::IsMember({"rho", "theta"}));

    auto* c_export = app.add_subcommand("export", "render a document from stdin");
    c_export->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    c_export->add_option("--fixture", fixture, "emit a character table instead: s3 or abelian");
    c_export->add_option("--orders", orders_s, "orders for the abelian fixture");
    c_export->add_option("--weights", weights_s, "optional weights for the abelian fixture");
    c_export->add_option("--side", side, "rho (default) or theta")->check(CLI::IsMember({"rho", "theta"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (c_mckay->parsed()) {
        AbelianMcKaySpec spec{parse_longs(orders_s, ','), parse_weights(weights_s)};
        emit(mckay_document(abelian_bound_mckay(spec)));
        return 0;
    }
    if (c_ret->parsed()) {
        Json doc = read_stdin_json();
        BoundQuiver out = (side == "theta") ? mckay_returning_arrows_theta(select_side(doc, "theta"), SignTwist(eps))
                                            : mckay_returning_arrows_rho(select_side(doc, "rho"));
        emit(bound_quiver_to_json(out));
        return 0;
    }
    if (c_cover->parsed()) {
        Json doc = read_stdin_json();
        RelationSide rs = (side == "theta") ? RelationSide::theta : RelationSide::rho;
        CoverResult cr = cyclic_cover(select_side(doc, side), m, rs, SignTwist(eps));
        emit(bound_quiver_to_json(cr.bq));
        return 0;
    }
    if (c_cone->parsed()) {
        emit(bound_quiver_to_json(cone(bound_quiver_from_json(read_stdin_json())).bq));
        return 0;
    }
    if (c_talg->parsed()) {
        emit(bound_quiver_to_json(t_algebra(s, n)));
        return 0;
    }
    if (c_trunc->parsed()) {
        BoundQuiver sub = bound_quiver_from_json(read_json_file(sub_path));
        BoundQuiver super = bound_quiver_from_json(read_json_file(super_path));
        QuiverEmbedding w = embedding_from_json(read_json_file(embedding_path));
        TruncationReport rep = check_translation ? mckay_truncation_check(w, sub, super) : is_truncation(w, sub, super);
        emit(truncation_report_to_json(rep));
        std::cerr << rep.summary() << "\n";
        return rep.verdict ? 0 : 1;
    }
    if (c_verify->parsed()) {
        TAlgebraChain chain = t_algebra_chain(s, group_order, n);
        PipelineResult res;
        try {
            res = main_theorem_pipeline(chain.base, chain.spec, chain.omega, m_override);
        } catch (const PipelineError& e) {
            std::cerr << e.what() << "\n";
            return 1;
        }
        Json j;
        j["m"] = res.m;
        j["base_report"] = truncation_report_to_json(res.base_report);
        j["cone_report"] = truncation_report_to_json(res.cone_report);
        j["translation_compat"] = res.translation_compat;
        j["verdict"] = res.verdict;
        emit(j);
        std::cerr << "verify-main: " << (res.verdict ? "pass" : "FAIL") << " (m = " << res.m << ")\n";
        return res.verdict ? 0 : 1;
    }
    if (c_dims->parsed()) {
        BoundQuiver b = select_side(read_stdin_json(), side);
        std::set<std::string> drop(drop_vertices.begin(), drop_vertices.end());
        emit(graded_dims_to_json(quotient_dims(b, max_degree, drop)));
        return 0;
    }
    if (c_stq->parsed()) {
        BoundQuiver b = select_side(read_stdin_json(), side);
        StqReport rep = stable_translation_check(b, loewy);
        emit(stq_report_to_json(rep));
        std::cerr << rep.summary() << "\n";
        return rep.ok ? 0 : 1;
    }
    if (c_export->parsed()) {
        if (!fixture.empty()) {
            if (fixture == "s3") {
                emit(table_to_json(s3_table()));
                return 0;
            }
            if (fixture == "abelian") {
                if (orders_s.empty()) throw ParseError("abelian fixture needs --orders");
                CharacterTable t = abelian_table(parse_longs(orders_s, ','));
                if (!weights_s.empty()) {
                    RepCharacter rep = weights_character(t, parse_weights(weights_s));
                    emit(table_to_json(t, &rep));
                } else {
                    emit(table_to_json(t));
                }
                return 0;
            }
            throw ParseError("unknown fixture '" + fixture + "'");
        }
        BoundQuiver b = select_side(read_stdin_json(), side);
        if (format == "dot") {
            std::cout << export_dot(b);
        } else {
            std::cout << dump_bound_quiver(b);
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qmk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qmk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
