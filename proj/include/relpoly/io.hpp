#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "relpoly/patterns.hpp"
#include "relpoly/relations.hpp"
#include "relpoly/repmod.hpp"
#include "relpoly/tiling.hpp"

namespace relpoly::io {

using Json = nlohmann::ordered_json;
using SymbolTable = std::map<std::string, Symbol, std::less<>>;

// Throws IoError.
std::string read_file(const std::filesystem::path& path);

// Relation files: a header `n <int>`, then one `i j -> r s` per line; `#`
// starts a comment. A text starting with '{' is read as the JSON mirror
// {"n": int, "relations": [[i,j,r,s], ...]}.
RelationSet parse_relations(std::string_view text);
RelationSet relations_from_json(const Json& j);
std::string format_relations(const RelationSet& c);
Json relations_to_json(const RelationSet& c);

// Pattern files: a header `n <int>`, n rows with row n first, then optional
// symbol lines `name = [lo, hi]` or `name = sqrt(q)`. Entries are `p/q`,
// decimals or `name[+p/q]`. A text starting with '{' is read as JSON:
// {"n": int, "entries": [...serialization order...], "symbols": {...}}.
Pattern parse_pattern(std::string_view text);
Pattern pattern_from_json(const Json& j, const SymbolTable& known = {});
std::string format_pattern(const Pattern& x);
Json pattern_to_json(const Pattern& x);

// Single-line form "2 1 0 | 1 0 | 0", rows top first.
Pattern parse_pattern_line(std::string_view text, const SymbolTable& symbols = {});
std::string format_pattern_line(const Pattern& x);

Entry parse_entry(std::string_view token, const SymbolTable& symbols);
Symbol parse_symbol_definition(std::string_view name, std::string_view definition);
SymbolTable symbols_of(const Pattern& x);

// "1,0,-1/2" (also accepts spaces).
std::vector<Rational> parse_rational_list(std::string_view text);

// {"terms": [{"pattern": "...", "coeff": "p/q"}, ...]}; patterns may also be
// given as JSON pattern objects.
LinComb lincomb_from_json(const Json& j, const SymbolTable& symbols = {});
Json lincomb_to_json(const LinComb& v);

Json tiling_report(const Tiling& tiling, const TilingMatrix& a, const KernelBasis& kernel, const FaceDims& dims);

Json vertex_to_json(VertexId v);

}  // namespace relpoly::io
