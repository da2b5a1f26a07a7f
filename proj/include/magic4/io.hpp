#ifndef MAGIC4_IO_HPP
#define MAGIC4_IO_HPP

// Serialization of square documents.
//
// Text format: four lines of four whitespace-separated decimal integers;
// multiplicative squares carry a leading header line `primes: p1 p2 p3 p4`.
// Metadata rides in trailing comments (`# class: (C,C,D,D)`, `# orbit: N`)
// which the parser folds back into the document, so a re-parse yields an
// equal value. Catalogs separate documents with one blank line.
//
// JSON format: one object per document with keys kind/entries/primes/
// class/orbit; catalogs are newline-delimited. Unknown keys are ignored.
//
// CSV format: 16 entry columns row-major (r0c0..r3c3) plus a trailing
// class column; additive squares only, since a CSV row cannot carry a
// prime basis.

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "magic4/correspond.hpp"
#include "magic4/square.hpp"

namespace magic4 {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

inline Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected text, json or csv)");
}

struct SquareDocument {
  enum class Kind { additive, multiplicative };

  Kind kind = Kind::additive;
  std::array<std::int64_t, kCellCount> entries{};  // row-major
  std::optional<std::array<std::int64_t, 4>> primes;
  std::optional<std::string> class_label;
  std::optional<std::int64_t> orbit;

  friend bool operator==(const SquareDocument&, const SquareDocument&) = default;
};

inline SquareDocument make_additive_document(const Square& sq) {
  SquareDocument doc;
  doc.kind = SquareDocument::Kind::additive;
  for (int i = 0; i < kCellCount; ++i) doc.entries[i] = sq.entries()[i];
  return doc;
}

inline SquareDocument make_multiplicative_document(const MultSquare& m) {
  SquareDocument doc;
  doc.kind = SquareDocument::Kind::multiplicative;
  doc.entries = m.values();
  doc.primes = m.basis().primes();
  return doc;
}

inline Square to_square(const SquareDocument& doc) {
  if (doc.kind != SquareDocument::Kind::additive)
    throw std::invalid_argument("to_square: document is not additive");
  std::array<int, kCellCount> entries{};
  for (int i = 0; i < kCellCount; ++i) {
    if (doc.entries[i] < 0 || doc.entries[i] > INT32_MAX)
      throw std::invalid_argument("to_square: entry " + std::to_string(doc.entries[i]) +
                                  " out of range");
    entries[i] = static_cast<int>(doc.entries[i]);
  }
  return Square(entries);
}

inline PrimeBasis document_basis(const SquareDocument& doc) {
  if (!doc.primes)
    throw std::invalid_argument("document has no prime basis");
  return PrimeBasis(*doc.primes);
}

inline MultSquare to_mult_square(const SquareDocument& doc) {
  if (doc.kind != SquareDocument::Kind::multiplicative)
    throw std::invalid_argument("to_mult_square: document is not multiplicative");
  return parse_mult_square(doc.entries, document_basis(doc));
}

// Required metadata consistency; called by every parser.
inline void validate_document(const SquareDocument& doc) {
  if (doc.kind == SquareDocument::Kind::multiplicative) {
    document_basis(doc);  // throws on a missing or invalid basis
    for (auto v : doc.entries)
      if (v < 1)
        throw std::invalid_argument("multiplicative entries must be positive");
  } else {
    for (auto v : doc.entries)
      if (v < 0) throw std::invalid_argument("additive entries must be non-negative");
  }
}

// ---------------------------------------------------------------- text

inline std::string to_text(const SquareDocument& doc) {
  std::ostringstream out;
  if (doc.kind == SquareDocument::Kind::multiplicative && doc.primes) {
    out << "primes:";
    for (auto p : *doc.primes) out << ' ' << p;
    out << '\n';
  }
  for (int r = 0; r < kOrder; ++r) {
    for (int c = 0; c < kOrder; ++c) {
      if (c) out << ' ';
      out << doc.entries[kOrder * r + c];
    }
    out << '\n';
  }
  if (doc.class_label) out << "# class: " << *doc.class_label << '\n';
  if (doc.orbit) out << "# orbit: " << *doc.orbit << '\n';
  return out.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

inline std::int64_t parse_int(const std::string& tok) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw std::invalid_argument("expected an integer, got '" + tok + "'");
  return v;
}

// Consumes one document's lines (already split); empty vector = no document.
inline std::optional<SquareDocument> text_document_from_lines(
    const std::vector<std::string>& lines) {
  SquareDocument doc;
  int numeric_rows = 0;
  bool saw_anything = false;
  for (const auto& raw : lines) {
    auto line = trim(raw);
    if (line.empty()) continue;
    saw_anything = true;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.rfind("class:", 0) == 0)
        doc.class_label = std::string(trim(body.substr(6)));
      else if (body.rfind("orbit:", 0) == 0)
        doc.orbit = parse_int(std::string(trim(body.substr(6))));
      continue;  // other comments are ignored
    }
    if (line.rfind("primes:", 0) == 0) {
      auto tokens = split_ws(line.substr(7));
      if (tokens.size() != 4)
        throw std::invalid_argument("primes header must list exactly 4 primes");
      std::array<std::int64_t, 4> primes{};
      for (int i = 0; i < 4; ++i) primes[i] = parse_int(tokens[i]);
      doc.primes = primes;
      doc.kind = SquareDocument::Kind::multiplicative;
      continue;
    }
    auto tokens = split_ws(line);
    if (tokens.size() != 4)
      throw std::invalid_argument("expected 4 entries per row, got " +
                                  std::to_string(tokens.size()));
    if (numeric_rows == 4) throw std::invalid_argument("more than 4 rows in square");
    for (int c = 0; c < 4; ++c)
      doc.entries[kOrder * numeric_rows + c] = parse_int(tokens[c]);
    ++numeric_rows;
  }
  if (!saw_anything) return std::nullopt;
  if (numeric_rows != 4)
    throw std::invalid_argument("expected 4 rows, got " + std::to_string(numeric_rows));
  validate_document(doc);
  return doc;
}

}  // namespace detail

inline SquareDocument parse_text_document(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  auto doc = detail::text_document_from_lines(lines);
  if (!doc) throw std::invalid_argument("empty square document");
  return *doc;
}

// ---------------------------------------------------------------- json

inline nlohmann::json to_json(const SquareDocument& doc) {
  nlohmann::json j;
  j["kind"] = doc.kind == SquareDocument::Kind::additive ? "additive" : "multiplicative";
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < kOrder; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < kOrder; ++c) row.push_back(doc.entries[kOrder * r + c]);
    rows.push_back(row);
  }
  j["entries"] = rows;
  if (doc.primes) j["primes"] = *doc.primes;
  if (doc.class_label) j["class"] = *doc.class_label;
  if (doc.orbit) j["orbit"] = *doc.orbit;
  return j;
}

inline SquareDocument document_from_json(const nlohmann::json& j) {
  SquareDocument doc;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "additive")
    doc.kind = SquareDocument::Kind::additive;
  else if (kind == "multiplicative")
    doc.kind = SquareDocument::Kind::multiplicative;
  else
    throw std::invalid_argument("unknown document kind '" + kind + "'");
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != 4)
    throw std::invalid_argument("entries must be a 4x4 array");
  for (int r = 0; r < kOrder; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 4)
      throw std::invalid_argument("entries must be a 4x4 array");
    for (int c = 0; c < kOrder; ++c)
      doc.entries[kOrder * r + c] = rows[r][c].get<std::int64_t>();
  }
  if (j.contains("primes")) {
    const auto& ps = j.at("primes");
    if (!ps.is_array() || ps.size() != 4)
      throw std::invalid_argument("primes must list exactly 4 primes");
    std::array<std::int64_t, 4> primes{};
    for (int i = 0; i < 4; ++i) primes[i] = ps[i].get<std::int64_t>();
    doc.primes = primes;
  }
  if (j.contains("class")) doc.class_label = j.at("class").get<std::string>();
  if (j.contains("orbit")) doc.orbit = j.at("orbit").get<std::int64_t>();
  validate_document(doc);
  return doc;
}

inline SquareDocument parse_json_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(j);
}

// ----------------------------------------------------------------- csv

inline std::string csv_header() {
  std::string out;
  for (int r = 0; r < kOrder; ++r)
    for (int c = 0; c < kOrder; ++c) {
      if (r || c) out += ',';
      out += "r" + std::to_string(r) + "c" + std::to_string(c);
    }
  out += ",class";
  return out;
}

inline std::string to_csv_row(const SquareDocument& doc) {
  std::string out;
  for (int i = 0; i < kCellCount; ++i) {
    if (i) out += ',';
    out += std::to_string(doc.entries[i]);
  }
  out += ',';
  if (doc.class_label) out += '"' + *doc.class_label + '"';
  return out;
}

inline SquareDocument parse_csv_row(std::string_view row) {
  SquareDocument doc;
  std::string_view rest = row;
  for (int i = 0; i < kCellCount; ++i) {
    auto comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("csv row has fewer than 17 fields");
    doc.entries[i] = detail::parse_int(std::string(detail::trim(rest.substr(0, comma))));
    rest.remove_prefix(comma + 1);
  }
  auto cls = detail::trim(rest);
  if (cls.size() >= 2 && cls.front() == '"' && cls.back() == '"')
    cls = cls.substr(1, cls.size() - 2);
  if (!cls.empty()) doc.class_label = std::string(cls);
  validate_document(doc);
  return doc;
}

// ------------------------------------------------------------- catalogs

// Autodetects JSON ('{' first) vs text.
inline SquareDocument parse_document(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return parse_json_document(text.substr(first));
  return parse_text_document(text);
}

inline void write_catalog(std::ostream& out, const std::vector<SquareDocument>& docs,
                          Format format) {
  switch (format) {
    case Format::text: {
      bool first = true;
      for (const auto& doc : docs) {
        if (!first) out << '\n';
        out << to_text(doc);
        first = false;
      }
      break;
    }
    case Format::json:
      for (const auto& doc : docs) out << to_json(doc).dump() << '\n';
      break;
    case Format::csv:
      out << csv_header() << '\n';
      for (const auto& doc : docs) out << to_csv_row(doc) << '\n';
      break;
  }
}

inline std::vector<SquareDocument> read_catalog(std::istream& in, Format format) {
  std::vector<SquareDocument> docs;
  switch (format) {
    case Format::text: {
      std::vector<std::string> pending;
      std::string line;
      auto flush = [&] {
        auto doc = detail::text_document_from_lines(pending);
        if (doc) docs.push_back(*doc);
        pending.clear();
      };
      while (std::getline(in, line)) {
        if (detail::trim(line).empty())
          flush();
        else
          pending.push_back(line);
      }
      flush();
      break;
    }
    case Format::json: {
      std::string line;
      while (std::getline(in, line)) {
        auto trimmed = detail::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        docs.push_back(parse_json_document(trimmed));
      }
      break;
    }
    case Format::csv: {
      std::string line;
      bool first = true;
      while (std::getline(in, line)) {
        auto trimmed = detail::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        if (first && trimmed == csv_header()) {
          first = false;
          continue;
        }
        first = false;
        docs.push_back(parse_csv_row(trimmed));
      }
      break;
    }
  }
  return docs;
}

}  // namespace magic4

#endif  // MAGIC4_IO_HPP
