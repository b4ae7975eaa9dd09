#pragma once

#include "torgit/desing.hpp"
#include "torgit/luna.hpp"
#include "torgit/quasimap.hpp"
#include "torgit/walls.hpp"

#include <json.hpp>

#include <set>
#include <string>

namespace torgit::json_io {

/// Insertion-ordered, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

// Indices are 1-based in JSON. Integers that fit in 64 bits are numbers, larger ones
// decimal strings; non-integral rationals are "p/q" strings. Every reader throws
// InputError on malformed data.

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);  // list of rows
Json support_to_json(Support s);
Json supports_to_json(const std::vector<Support>& list);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j, std::size_t cols_if_empty = 0);
/// 1-based index list; each index must be <= n.
Support support_from_json(const Json& j, std::size_t n);
std::vector<std::size_t> size_list_from_json(const Json& j);

/// {"rank", "weights": [[...] per coordinate], "norm_form", "finite_part": [{"perm", "aut"}]}.
/// norm_form defaults to the identity and finite_part to [].
Json to_json(const TorusAction& a);
TorusAction action_from_json(const Json& j);

/// {"coords": [...], "weights": [...]}; weights default to all 1.
Json to_json(const MonomialWeightedCenter& c);
MonomialWeightedCenter center_from_json(const Json& j, std::size_t n);

/// {"vertices": [{"genus", "in_dm", "degrees": {name: q}}], "edges": [[v, w, d]],
///  "legs": [[v, e]], "bundles": [...]}.
Json to_json(const TwistedCurveGraph& g);
TwistedCurveGraph graph_from_json(const Json& j);

/// {"ambient": "P1" | "twisted_conic", "components": [[m, ...], ...], "n"}.
Json to_json(const DivisorConfig& c);
DivisorConfig divisor_config_from_json(const Json& j);

/// {"orders": [...]}.
Json dvr_data_to_json(const std::vector<std::size_t>& orders);
std::vector<std::size_t> dvr_data_from_json(const Json& j);

Json to_json(const SignedSquare& v);  // {"sign", "square"}
Json to_json(const std::set<SignedSquare>& values);
Json to_json(const CombinedLinearization& c);
Json to_json(const WallArrangement& w);
Json to_json(const DiagonalizableGroup& g);
Json to_json(const EBPresentation& eb, const ScanOptions& opts = {});
Json to_json(const DesingTower& t);
Json to_json(const TowerReport& r);
Json to_json(const StabilityVerdict& v);
Json to_json(const DvrLift& d);
Json to_json(const CubicsCertificate& c);

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json load(const std::string& text_or_path);

}  // namespace torgit::json_io
