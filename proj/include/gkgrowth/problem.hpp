#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "gkgrowth/orbits.hpp"
#include "gkgrowth/segments.hpp"
#include "gkgrowth/sln.hpp"

namespace gkgrowth {

/// One problem instance: declared symbols, a multisegment over them, and
/// optional twist table and evaluation point.
struct ProblemFile {
    SymbolTable symbols;
    Multisegment multisegment;
    std::optional<TwistActionTable> twist;
    std::optional<std::pair<long, int>> eval;  // (q0, N)

    /// Largest declared validity threshold N0 among the explicit growth
    /// sources the multisegment uses.
    int used_threshold() const;
};

ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile load_problem(const std::string& path);

// JSON forms of the library types, round-trip safe.
nlohmann::json xlaurent_to_json(const XLaurent& g);
XLaurent xlaurent_from_json(const nlohmann::json& j);
nlohmann::json growth_source_to_json(const CuspidalGrowth& g);
CuspidalGrowth growth_source_from_json(const nlohmann::json& j, int symbol_size);
nlohmann::json expansion_to_json(const CharacterExpansion& ce);
CharacterExpansion expansion_from_json(const nlohmann::json& j);
nlohmann::json twist_table_to_json(const TwistActionTable& t);
TwistActionTable twist_table_from_json(const nlohmann::json& j, const SymbolTable& symbols);

}  // namespace gkgrowth
