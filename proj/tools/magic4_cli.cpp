// magic4: enumeration, classification and construction of order-4
// additive and multiplicative magic squares.
//
// Subcommands: enumerate, classify, convert, construct, verify, census.
// Exit codes: 0 success, 1 validation failure, 2 I/O failure,
// 3 internal invariant violation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "magic4/magic4.hpp"

namespace {

using magic4::ClassLabel;
using magic4::Format;
using magic4::Square;
using magic4::SquareDocument;

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw magic4::io_error("cannot open '" + path + "' for reading");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

// Catalog to file: summary goes to stdout. Catalog to stdout: summary
// goes to stderr so the data stream stays clean.
struct CatalogSink {
  explicit CatalogSink(const std::string& path) : path_(path) {
    if (!path_.empty()) {
      file_.open(path_);
      if (!file_) throw magic4::io_error("cannot open '" + path_ + "' for writing");
    }
  }

  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  std::ostream& summary() { return path_.empty() ? std::cerr : std::cout; }

  void finish() {
    if (!path_.empty()) {
      file_.flush();
      if (!file_) throw magic4::io_error("failed writing '" + path_ + "'");
    }
  }

 private:
  std::string path_;
  std::ofstream file_;
};

void print_grid(std::ostream& out, const std::array<int, 16>& entries, int width) {
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (c) out << ' ';
      out.width(width);
      out << entries[4 * r + c];
    }
    out << '\n';
  }
}

std::string planes_summary(const magic4::Decomposition& d) {
  static constexpr int kWeights[4] = {8, 4, 2, 1};
  std::string out;
  for (int w = 0; w < 4; ++w) {
    if (w) out += ' ';
    out += std::to_string(kWeights[w]) + ":" + d.labels[w].to_string();
  }
  return out;
}

void print_decomposition(std::ostream& out, const magic4::Decomposition& d) {
  static constexpr int kWeights[4] = {8, 4, 2, 1};
  for (int w = 0; w < 4; ++w) {
    out << "weight " << kWeights[w] << ": form " << d.labels[w].to_string() << '\n';
    for (int r = 0; r < 4; ++r) {
      out << "  ";
      for (int c = 0; c < 4; ++c) {
        if (c) out << ' ';
        out << d.planes[w].at(r, c);
      }
      out << '\n';
    }
  }
}

std::optional<ClassLabel> class_of(const Square& sq) {
  if (!magic4::is_compatible(sq)) return std::nullopt;
  return magic4::classify(sq);
}

// ------------------------------------------------------------ enumerate

int cmd_enumerate(const std::string& filter, const std::string& representative,
                  const std::string& format_name, const std::string& output) {
  Format format = magic4::parse_format(format_name);
  auto enumeration = magic4::enumerate_normal_additive();

  std::vector<Square> squares;
  std::size_t total = 0;
  std::size_t orbits = 0;
  if (filter == "all") {
    squares = std::move(enumeration.squares);
    total = enumeration.total;
    orbits = enumeration.d8_orbit_count;
  } else {
    for (const auto& sq : enumeration.squares)
      if (magic4::is_compatible(sq)) squares.push_back(sq);
    auto census = magic4::count_compatible();
    total = census.total;
    orbits = census.d8_orbits;
  }

  bool canonical = representative == "d8-canonical";
  if (canonical) {
    std::vector<Square> reps;
    reps.reserve(squares.size());
    for (const auto& sq : squares) reps.push_back(magic4::canonical_d8(sq));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    squares = std::move(reps);
  }

  std::vector<SquareDocument> docs;
  docs.reserve(squares.size());
  for (std::size_t i = 0; i < squares.size(); ++i) {
    auto doc = magic4::make_additive_document(squares[i]);
    if (auto label = class_of(squares[i])) doc.class_label = label->to_string();
    if (canonical) doc.orbit = static_cast<std::int64_t>(i);
    docs.push_back(std::move(doc));
  }

  CatalogSink sink(output);
  magic4::write_catalog(sink.stream(), docs, format);
  sink.finish();
  sink.summary() << "# records=" << docs.size() << " total=" << total
                 << " d8_orbits=" << orbits << '\n';
  return 0;
}

// ------------------------------------------------------------- classify

int cmd_classify(const std::string& input) {
  SquareDocument doc = magic4::parse_document(read_input(input));

  Square additive;
  if (doc.kind == SquareDocument::Kind::multiplicative) {
    auto mult = magic4::to_mult_square(doc);  // factors entries over the basis
    std::cout << "kind: multiplicative\nprimes:";
    for (auto p : mult.basis().primes()) std::cout << ' ' << p;
    std::cout << '\n';
    auto report = magic4::check_multiplicative(mult);
    if (!report.is_magic) {
      std::cout << "multiplicative: not magic (line products differ)\n";
    } else {
      std::cout << "multiplicative: magic (constant "
                << magic4::constant_to_string(*report.constant) << "), "
                << (report.is_normal ? "normal" : "non-normal") << '\n';
    }
    additive = magic4::apply_f(mult);
    std::cout << "additive image:\n";
    print_grid(std::cout, additive.entries(), 2);
  } else {
    std::cout << "kind: additive\n";
    additive = magic4::to_square(doc);
  }

  auto report = magic4::check_additive(additive);
  if (!report.is_magic) {
    auto sums = magic4::line_sums(additive);
    for (int i = 1; i < magic4::kLineCount; ++i) {
      if (sums[i] != sums[0]) {
        std::cout << "additive: not magic (" << magic4::line_name(0) << " sums to "
                  << sums[0] << " but " << magic4::line_name(i) << " sums to "
                  << sums[i] << ")\n";
        break;
      }
    }
    return 1;
  }
  if (!report.is_normal) {
    std::cout << "additive: magic, non-normal (constant " << *report.constant
              << "; entries are not exactly 0..15)\n";
    return 1;
  }
  std::cout << "additive: magic, normal (constant " << *report.constant << ")\n";

  if (auto violation = magic4::first_bit_violation(additive)) {
    std::cout << "compatible: no (" << magic4::line_name(violation->line_index)
              << ", bit position " << violation->bit_position << " (weight "
              << (8 >> violation->bit_position) << ") occurs " << violation->count
              << " times, expected 2)\n";
    return 1;
  }
  std::cout << "compatible: yes\n";

  auto decomposition = magic4::decompose(additive);
  std::cout << "class: " << magic4::classify(additive).to_string() << '\n';
  std::cout << "decomposition (8*F1 + 4*F2 + 2*F3 + F4):\n";
  print_decomposition(std::cout, decomposition);
  return 0;
}

// -------------------------------------------------------------- convert

int cmd_convert(const std::string& direction, const std::string& input,
                const std::vector<std::int64_t>& primes_flag,
                const std::string& format_name, const std::string& output) {
  Format format = magic4::parse_format(format_name);
  SquareDocument doc = magic4::parse_document(read_input(input));

  SquareDocument converted;
  if (direction == "to-additive") {
    if (doc.kind != SquareDocument::Kind::multiplicative)
      throw std::invalid_argument("convert to-additive expects a multiplicative square");
    converted = magic4::make_additive_document(magic4::apply_f(magic4::to_mult_square(doc)));
  } else {
    if (doc.kind != SquareDocument::Kind::additive)
      throw std::invalid_argument("convert to-multiplicative expects an additive square");
    std::optional<magic4::PrimeBasis> basis;
    if (!primes_flag.empty()) {
      std::array<std::int64_t, 4> primes{};
      std::copy(primes_flag.begin(), primes_flag.end(), primes.begin());
      basis.emplace(primes);
    } else if (doc.primes) {
      basis.emplace(*doc.primes);
    } else {
      throw std::invalid_argument("convert to-multiplicative needs --primes p1,p2,p3,p4");
    }
    converted = magic4::make_multiplicative_document(
        magic4::f_inverse(magic4::to_square(doc), *basis));
  }

  if (format == Format::csv && converted.kind == SquareDocument::Kind::multiplicative)
    throw std::invalid_argument(
        "csv cannot carry a prime basis; use text or json for multiplicative output");

  CatalogSink sink(output);
  magic4::write_catalog(sink.stream(), {converted}, format);
  sink.finish();
  return 0;
}

// ------------------------------------------------------------ construct

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(indices[i], indices[j]);
  }
  indices.resize(k);
  std::sort(indices.begin(), indices.end());
  return indices;
}

int cmd_construct(const std::string& class_text, const std::string& count_text,
                  std::uint64_t seed, const std::string& format_name,
                  const std::string& output) {
  Format format = magic4::parse_format(format_name);
  ClassLabel label = ClassLabel::parse(class_text);

  const auto& admissible = magic4::admissible_classes();
  if (std::find(admissible.begin(), admissible.end(), label) == admissible.end()) {
    std::string known;
    for (const auto& cls : admissible) {
      if (!known.empty()) known += ", ";
      known += cls.to_string();
    }
    throw std::invalid_argument("class " + label.to_string() +
                                " yields no normal squares; admissible classes are " +
                                known);
  }

  auto squares = magic4::squares_in_class(label);
  std::size_t count = squares.size();
  if (count_text != "all") {
    std::int64_t requested = 0;
    try {
      std::size_t pos = 0;
      requested = std::stoll(count_text, &pos);
      if (pos != count_text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("--count expects a positive integer or 'all'");
    }
    if (requested < 1)
      throw std::invalid_argument("--count expects a positive integer or 'all'");
    if (static_cast<std::size_t>(requested) > squares.size())
      throw std::invalid_argument("class " + label.to_string() + " has only " +
                                  std::to_string(squares.size()) + " squares");
    count = static_cast<std::size_t>(requested);
  }

  std::vector<std::size_t> chosen;
  if (count == squares.size()) {
    chosen.resize(count);
    std::iota(chosen.begin(), chosen.end(), std::size_t{0});
  } else {
    chosen = sample_indices(squares.size(), count, seed);
  }

  CatalogSink sink(output);
  std::ostream& out = sink.stream();
  if (format == Format::csv) out << magic4::csv_header() << '\n';
  bool first = true;
  for (std::size_t index : chosen) {
    const Square& sq = squares[index];
    auto decomposition = magic4::decompose(sq);
    auto doc = magic4::make_additive_document(sq);
    doc.class_label = label.to_string();
    switch (format) {
      case Format::text:
        if (!first) out << '\n';
        out << magic4::to_text(doc);
        out << "# planes: " << planes_summary(decomposition) << '\n';
        break;
      case Format::json: {
        auto j = magic4::to_json(doc);
        auto planes = nlohmann::json::array();
        for (const auto& l : decomposition.labels) planes.push_back(l.to_string());
        j["planes"] = planes;
        out << j.dump() << '\n';
        break;
      }
      case Format::csv:
        out << magic4::to_csv_row(doc) << '\n';
        break;
    }
    first = false;
  }
  sink.finish();
  sink.summary() << "# records=" << chosen.size() << " class=" << label.to_string()
                 << " class_total=" << squares.size() << '\n';
  return 0;
}

// --------------------------------------------------------------- verify

int cmd_verify() {
  auto results = magic4::run_verification();
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
              << '\n';
    if (r.passed) ++passed;
  }
  std::cout << passed << "/" << results.size() << " checks passed\n";
  return passed == results.size() ? 0 : 1;
}

// --------------------------------------------------------------- census

int cmd_census(const std::string& format_name, const std::string& output) {
  Format format = magic4::parse_format(format_name);
  auto census = magic4::class_census();
  std::size_t total = 0;
  for (const auto& [label, count] : census) total += count;

  CatalogSink sink(output);
  std::ostream& out = sink.stream();
  switch (format) {
    case Format::text:
      out << "class       count\n";
      for (const auto& [label, count] : census)
        out << label.to_string() << "   " << count << '\n';
      out << "total       " << total << '\n';
      break;
    case Format::json: {
      nlohmann::json j;
      auto classes = nlohmann::json::array();
      for (const auto& [label, count] : census)
        classes.push_back({{"class", label.to_string()}, {"count", count}});
      j["classes"] = classes;
      j["total"] = total;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "class,count\n";
      for (const auto& [label, count] : census)
        out << '"' << label.to_string() << "\"," << count << '\n';
      out << "# total=" << total << '\n';
      break;
  }
  sink.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-4 additive and multiplicative magic squares: enumerate, "
               "convert, classify, construct and verify"};
  app.require_subcommand(1);

  std::string filter = "all";
  std::string representative = "full";
  std::string format = "text";
  std::string output;
  std::string input = "-";
  std::string direction;
  std::string class_text;
  std::string count_text = "all";
  std::uint64_t seed = 0;
  std::vector<std::int64_t> primes_flag;

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "Enumerate normal additive magic squares of order 4");
  enumerate_cmd->add_option("--filter", filter, "all or compatible")
      ->check(CLI::IsMember({"all", "compatible"}));
  enumerate_cmd
      ->add_option("--representative", representative,
                   "full (every square) or d8-canonical (one per D8 orbit)")
      ->check(CLI::IsMember({"full", "d8-canonical"}));
  enumerate_cmd->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  enumerate_cmd->add_option("--output", output, "catalog file (default stdout)");

  auto* classify_cmd = app.add_subcommand(
      "classify", "Report magic/normal/compatible status, class and decomposition");
  classify_cmd->add_option("input", input, "square document (file, or '-' for stdin)");

  auto* convert_cmd =
      app.add_subcommand("convert", "Convert between additive and multiplicative squares");
  convert_cmd->add_option("direction", direction, "to-additive or to-multiplicative")
      ->required()
      ->check(CLI::IsMember({"to-additive", "to-multiplicative"}));
  convert_cmd->add_option("input", input, "square document (file, or '-' for stdin)");
  convert_cmd->add_option("--primes", primes_flag, "four primes, e.g. 2,3,5,67")
      ->delimiter(',')
      ->expected(4);
  convert_cmd->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  convert_cmd->add_option("--output", output, "output file (default stdout)");

  auto* construct_cmd =
      app.add_subcommand("construct", "Emit normal additive squares of a given class");
  construct_cmd->add_option("--class", class_text, "class label, e.g. \"(A,C,D,E)\"")
      ->required();
  construct_cmd->add_option("--count", count_text, "how many squares (default all)");
  construct_cmd->add_option("--seed", seed, "sampling seed (default 0)");
  construct_cmd->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  construct_cmd->add_option("--output", output, "catalog file (default stdout)");

  auto* verify_cmd = app.add_subcommand(
      "verify", "Re-run every count and structural check; fail on any mismatch");

  auto* census_cmd =
      app.add_subcommand("census", "Class census of the 4224 compatible squares");
  census_cmd->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  census_cmd->add_option("--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(filter, representative, format, output);
    if (*classify_cmd) return cmd_classify(input);
    if (*convert_cmd) return cmd_convert(direction, input, primes_flag, format, output);
    if (*construct_cmd) return cmd_construct(class_text, count_text, seed, format, output);
    if (*verify_cmd) return cmd_verify();
    if (*census_cmd) return cmd_census(format, output);
  } catch (const magic4::internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const magic4::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
