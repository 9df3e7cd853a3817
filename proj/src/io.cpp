#include "relpoly/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "relpoly/error.hpp"

namespace relpoly::io {

namespace {

[[noreturn]] void parse_error(const std::string& what, int line = 0) {
  throw Error(ErrorCode::ParseError, line > 0 ? "line " + std::to_string(line) + ": " + what : what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

struct Line {
  int number;
  std::string_view text;
};

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view() : text.substr(end + 1);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
  }
  return out;
}

int parse_int(std::string_view tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(std::string(tok), &used);
    if (used != tok.size()) parse_error("expected an integer, got '" + std::string(tok) + "'", line);
    return v;
  } catch (const std::logic_error&) {
    parse_error("expected an integer, got '" + std::string(tok) + "'", line);
  }
}

Rational parse_rational_token(std::string_view tok, int line = 0) {
  try {
    return parse_rational(tok);
  } catch (const Error& e) {
    parse_error(e.what(), line);
  }
}

int parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) parse_error("empty input");
  auto tok = split_ws(lines.front().text);
  if (tok.size() != 2 || tok[0] != "n") parse_error("expected header 'n <int>'", lines.front().number);
  int n = parse_int(tok[1], lines.front().number);
  if (n < 1) parse_error("n must be positive", lines.front().number);
  return n;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

bool looks_like_json(std::string_view text) {
  text = trim(text);
  return !text.empty() && text.front() == '{';
}

std::string rational_string(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  parse_error("expected a rational as a string or integer");
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RelationSet parse_relations(std::string_view text) {
  if (looks_like_json(text)) return relations_from_json(parse_json(text));
  auto lines = content_lines(text);
  const int n = parse_header(lines);
  std::vector<Relation> relations;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tok = split_ws(lines[i].text);
    if (tok.size() != 5 || tok[2] != "->") parse_error("expected 'i j -> r s'", lines[i].number);
    int line = lines[i].number;
    relations.push_back({{parse_int(tok[0], line), parse_int(tok[1], line)},
                         {parse_int(tok[3], line), parse_int(tok[4], line)}});
  }
  return RelationSet(n, std::move(relations));
}

RelationSet relations_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Relation> relations;
    for (const auto& r : j.at("relations")) {
      auto v = r.get<std::vector<int>>();
      if (v.size() != 4) parse_error("each relation is [i, j, r, s]");
      relations.push_back({{v[0], v[1]}, {v[2], v[3]}});
    }
    return RelationSet(n, std::move(relations));
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("bad relation JSON: ") + e.what());
  }
}

std::string format_relations(const RelationSet& c) {
  std::string out = "n " + std::to_string(c.n()) + "\n";
  for (const auto& r : c.relations())
    out += std::to_string(r.src.row) + " " + std::to_string(r.src.col) + " -> " + std::to_string(r.dst.row) + " " +
           std::to_string(r.dst.col) + "\n";
  return out;
}

Json relations_to_json(const RelationSet& c) {
  Json rel = Json::array();
  for (const auto& r : c.relations()) rel.push_back({r.src.row, r.src.col, r.dst.row, r.dst.col});
  return Json{{"n", c.n()}, {"relations", rel}};
}

Symbol parse_symbol_definition(std::string_view name, std::string_view definition) {
  definition = trim(definition);
  if (definition.starts_with("sqrt(") && definition.ends_with(")")) {
    Rational q = parse_rational_token(trim(definition.substr(5, definition.size() - 6)));
    if (q < 0) parse_error("sqrt of a negative number for symbol " + std::string(name));
    Integer num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t()))
      parse_error("sqrt(" + to_string(q) + ") is rational; write it as a number");
    return Symbol::sqrt(std::string(name), q);
  }
  if (definition.starts_with("[") && definition.ends_with("]")) {
    auto body = definition.substr(1, definition.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) parse_error("interval must be [lo, hi]");
    Rational lo = parse_rational_token(trim(body.substr(0, comma)));
    Rational hi = parse_rational_token(trim(body.substr(comma + 1)));
    if (lo > hi) parse_error("empty interval for symbol " + std::string(name));
    return Symbol{std::string(name), Interval{lo, hi}};
  }
  parse_error("symbol " + std::string(name) + " needs [lo, hi] or sqrt(q)");
}

Entry parse_entry(std::string_view token, const SymbolTable& symbols) {
  token = trim(token);
  if (token.empty()) parse_error("empty entry");
  const char first = token.front();
  if (std::isdigit(static_cast<unsigned char>(first)) || first == '-' || first == '+' || first == '.')
    return Entry(parse_rational_token(token));
  std::size_t end = 0;
  while (end < token.size() &&
         (std::isalnum(static_cast<unsigned char>(token[end])) || token[end] == '_'))
    ++end;
  std::string_view name = token.substr(0, end);
  auto it = symbols.find(name);
  if (it == symbols.end()) parse_error("unknown symbol '" + std::string(name) + "'");
  Rational offset = 0;
  if (end < token.size()) {
    if (token[end] != '+' && token[end] != '-') parse_error("bad labeled entry '" + std::string(token) + "'");
    offset = parse_rational_token(token.substr(end));
  }
  return Entry(it->second, offset);
}

SymbolTable symbols_of(const Pattern& x) {
  SymbolTable table;
  for (const Entry& e : x.entries())
    if (e.symbol()) table.emplace(e.symbol()->name, *e.symbol());
  return table;
}

namespace {

Pattern rows_to_pattern(const std::vector<std::vector<std::string>>& rows, const SymbolTable& symbols,
                        const std::vector<int>& line_numbers) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<Entry>> entries;
  for (int r = 0; r < n; ++r) {
    int line = line_numbers.empty() ? 0 : line_numbers[static_cast<std::size_t>(r)];
    if (static_cast<int>(rows[r].size()) != n - r)
      parse_error("row " + std::to_string(n - r) + " needs " + std::to_string(n - r) + " entries", line);
    std::vector<Entry> row;
    for (const auto& tok : rows[r]) {
      try {
        row.push_back(parse_entry(tok, symbols));
      } catch (const Error& e) {
        parse_error(e.what(), line);
      }
    }
    entries.push_back(std::move(row));
  }
  return Pattern::from_rows(entries);
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  if (looks_like_json(text)) return pattern_from_json(parse_json(text));
  auto lines = content_lines(text);
  const int n = parse_header(lines);
  SymbolTable symbols;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> numbers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (auto eq = lines[i].text.find('='); eq != std::string_view::npos) {
      auto name = trim(lines[i].text.substr(0, eq));
      try {
        symbols.insert_or_assign(std::string(name), parse_symbol_definition(name, lines[i].text.substr(eq + 1)));
      } catch (const Error& e) {
        parse_error(e.what(), lines[i].number);
      }
      continue;
    }
    rows.push_back(split_ws(lines[i].text));
    numbers.push_back(lines[i].number);
  }
  if (static_cast<int>(rows.size()) != n)
    parse_error("expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  return rows_to_pattern(rows, symbols, numbers);
}

Pattern parse_pattern_line(std::string_view text, const SymbolTable& symbols) {
  std::vector<std::vector<std::string>> rows;
  while (true) {
    auto bar = text.find('|');
    rows.push_back(split_ws(text.substr(0, bar)));
    if (bar == std::string_view::npos) break;
    text = text.substr(bar + 1);
  }
  return rows_to_pattern(rows, symbols, {});
}

std::string format_pattern_line(const Pattern& x) {
  std::string out;
  for (int k = x.n(); k >= 1; --k) {
    if (k != x.n()) out += " | ";
    bool first = true;
    for (const Entry& e : x.row(k)) {
      if (!first) out += ' ';
      out += e.to_string();
      first = false;
    }
  }
  return out;
}

std::string format_pattern(const Pattern& x) {
  std::string out = "n " + std::to_string(x.n()) + "\n";
  for (int k = x.n(); k >= 1; --k) {
    bool first = true;
    for (const Entry& e : x.row(k)) {
      if (!first) out += ' ';
      out += e.to_string();
      first = false;
    }
    out += '\n';
  }
  for (const auto& [name, s] : symbols_of(x))
    out += name + " = [" + to_string(s.enclosure.lo) + ", " + to_string(s.enclosure.hi) + "]\n";
  return out;
}

Pattern pattern_from_json(const Json& j, const SymbolTable& known) {
  try {
    SymbolTable symbols = known;
    if (j.contains("symbols")) {
      for (const auto& [name, def] : j.at("symbols").items()) {
        std::string text;
        if (def.is_array()) {
          if (def.size() != 2) parse_error("symbol interval must have two endpoints");
          text = "[" + rational_string(def[0]) + ", " + rational_string(def[1]) + "]";
        } else {
          text = def.get<std::string>();
        }
        symbols.insert_or_assign(name, parse_symbol_definition(name, text));
      }
    }
    const int n = j.at("n").get<int>();
    if (n < 1) parse_error("n must be positive");
    const auto& raw = j.at("entries");
    if (raw.size() != triangle_size(n))
      parse_error("expected " + std::to_string(triangle_size(n)) + " entries for n=" + std::to_string(n));
    std::vector<Entry> entries;
    for (const auto& e : raw) entries.push_back(parse_entry(rational_string(e), symbols));
    return Pattern(n, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("bad pattern JSON: ") + e.what());
  }
}

Json pattern_to_json(const Pattern& x) {
  Json entries = Json::array();
  for (const Entry& e : x.entries()) entries.push_back(e.to_string());
  Json out{{"n", x.n()}, {"entries", entries}};
  auto symbols = symbols_of(x);
  if (!symbols.empty()) {
    Json table = Json::object();
    for (const auto& [name, s] : symbols) table[name] = {to_string(s.enclosure.lo), to_string(s.enclosure.hi)};
    out["symbols"] = table;
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::string normalized(text);
  for (char& ch : normalized)
    if (ch == ',') ch = ' ';
  for (const auto& tok : split_ws(normalized)) out.push_back(parse_rational_token(tok));
  return out;
}

LinComb lincomb_from_json(const Json& j, const SymbolTable& symbols) {
  try {
    LinComb v;
    for (const auto& term : j.at("terms")) {
      const auto& p = term.at("pattern");
      Pattern m = p.is_string() ? parse_pattern_line(p.get<std::string>(), symbols) : pattern_from_json(p, symbols);
      Rational coeff = term.contains("coeff") ? parse_rational_token(rational_string(term.at("coeff"))) : Rational(1);
      v.add(m, coeff);
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("bad combination JSON: ") + e.what());
  }
}

Json lincomb_to_json(const LinComb& v) {
  Json terms = Json::array();
  for (const auto& [m, c] : v.terms()) terms.push_back({{"pattern", format_pattern_line(m)}, {"coeff", to_string(c)}});
  return Json{{"terms", terms}};
}

Json vertex_to_json(VertexId v) { return Json::array({v.row, v.col}); }

Json tiling_report(const Tiling& tiling, const TilingMatrix& a, const KernelBasis& kernel, const FaceDims& dims) {
  Json tiles = Json::array();
  for (const auto& tile : tiling.tiles) {
    Json vertices = Json::array();
    for (VertexId v : tile) vertices.push_back(vertex_to_json(v));
    tiles.push_back({{"vertices", vertices},
                     {"lambda1_free", is_lambda_free(tile, tiling.n, Lambda::Top)},
                     {"lambda2_free", is_lambda_free(tile, tiling.n, Lambda::TopBottom)}});
  }
  Json kernel_json = Json::array();
  for (const auto& vec : kernel.vectors) {
    Json row = Json::array();
    for (const auto& q : vec) row.push_back(to_string(q));
    kernel_json.push_back(row);
  }
  return Json{{"n", tiling.n},
              {"tiles", tiles},
              {"matrix", a.a},
              {"identity_fallback", a.identity_fallback},
              {"kernel", kernel_json},
              {"d", dims.d},
              {"s", dims.s},
              {"r", dims.r}};
}

}  // namespace relpoly::io
