#ifndef QMK_IO_HPP
#define QMK_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "qmk/character.hpp"
#include "qmk/path_algebra.hpp"
#include "qmk/quiver.hpp"
#include "qmk/truncation.hpp"

namespace qmk {

/// Key order is part of the interchange format, so documents are byte-stable.
using Json = nlohmann::ordered_json;

Json label_to_json(const Label& l);
Label label_from_json(const Json& j);

Json relation_to_json(const PathCombo& c);
PathCombo relation_from_json(const Json& j);

/// Interchange document: vertices, arrows (sorted by id), relations as
/// {paths, coefficients}, optional nakayama / nakayama_arrows / translation /
/// loewy_length.
Json bound_quiver_to_json(const BoundQuiver& b);
BoundQuiver bound_quiver_from_json(const Json& j);

std::string dump_bound_quiver(const BoundQuiver& b);
BoundQuiver parse_bound_quiver(const std::string& text);

Json graded_dims_to_json(const GradedDims& d);

Json table_to_json(const CharacterTable& t, const RepCharacter* rep = nullptr);
CharacterTable table_from_json(const Json& j, std::optional<RepCharacter>* rep = nullptr);

Json embedding_to_json(const QuiverEmbedding& w);
QuiverEmbedding embedding_from_json(const Json& j);

Json truncation_report_to_json(const TruncationReport& r);
Json stq_report_to_json(const StqReport& r);
Json ortho_report_to_json(const OrthoReport& r);

/// Deterministic DOT digraph; returning arrows dashed, connecting arrows
/// dotted, relations listed as trailing comments.
std::string export_dot(const BoundQuiver& b);

}  // namespace qmk

#endif
