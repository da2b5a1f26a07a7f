#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "golden_squares.hpp"
#include "magic4/io.hpp"

using namespace magic4;

namespace {

SquareDocument doc2010() {
  SquareDocument doc;
  doc.kind = SquareDocument::Kind::multiplicative;
  doc.entries = golden::mult2010_values;
  doc.primes = golden::primes2010;
  return doc;
}

SquareDocument doc_image() {
  auto doc = make_additive_document(golden::img2010);
  doc.class_label = "(C,C,D,D)";
  doc.orbit = 12;
  return doc;
}

}  // namespace

TEST_CASE("text round trip") {
  auto mult = doc2010();
  CHECK(parse_text_document(to_text(mult)) == mult);

  auto add = doc_image();
  std::string text = to_text(add);
  CHECK(text.find("primes:") == std::string::npos);
  CHECK(text.find("# class: (C,C,D,D)") != std::string::npos);
  CHECK(text.find("# orbit: 12") != std::string::npos);
  CHECK(parse_text_document(text) == add);
}

TEST_CASE("text parser accepts the plain grid layout") {
  auto doc = parse_text_document(
      "primes: 2 3 5 67\n"
      "2010 5 67 6\n"
      "3 134 10 1005\n"
      "2 201 15 670\n"
      "335 30 402 1\n");
  CHECK(doc == doc2010());
  CHECK(to_square(make_additive_document(apply_f(to_mult_square(doc)))) ==
        golden::img2010);
}

TEST_CASE("text parser diagnostics") {
  CHECK_THROWS_AS(parse_text_document(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_text_document("1 2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_text_document("1 2 3 4\n5 6 7 8\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_text_document("1 2 3 x\n1 2 3 4\n1 2 3 4\n1 2 3 4\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_text_document("primes: 2 3 5\n1 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 1\n"),
                  std::invalid_argument);
  // five rows
  CHECK_THROWS_AS(
      parse_text_document("1 2 3 4\n1 2 3 4\n1 2 3 4\n1 2 3 4\n1 2 3 4\n"),
      std::invalid_argument);
  // multiplicative entries must be positive
  CHECK_THROWS_AS(
      parse_text_document("primes: 2 3 5 7\n0 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 1\n"),
      std::invalid_argument);
}

TEST_CASE("json round trip") {
  auto mult = doc2010();
  CHECK(parse_json_document(to_json(mult).dump()) == mult);

  auto add = doc_image();
  auto j = to_json(add);
  CHECK(j["kind"] == "additive");
  CHECK(j["entries"][0][0] == 15);
  CHECK(j["class"] == "(C,C,D,D)");
  CHECK(parse_json_document(j.dump()) == add);

  // unknown keys are ignored
  j["planes"] = {"D2", "C2", "C3", "D3"};
  CHECK(parse_json_document(j.dump()) == add);
}

TEST_CASE("json parser diagnostics") {
  CHECK_THROWS_AS(parse_json_document("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json_document(R"({"kind":"other","entries":[[0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_json_document(R"({"kind":"additive","entries":[[0,1],[2,3]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_json_document(
          R"({"kind":"multiplicative","entries":[[1,1,1,1],[1,1,1,1],[1,1,1,1],[1,1,1,1]]})"),
      std::invalid_argument);  // missing primes
}

TEST_CASE("csv round trip for additive documents") {
  auto add = doc_image();
  add.orbit.reset();  // csv carries entries and class only
  std::string row = to_csv_row(add);
  CHECK(row.find("\"(C,C,D,D)\"") != std::string::npos);
  CHECK(parse_csv_row(row) == add);

  auto plain = make_additive_document(golden::first_enumerated);
  CHECK(parse_csv_row(to_csv_row(plain)) == plain);
  CHECK(csv_header() ==
        "r0c0,r0c1,r0c2,r0c3,r1c0,r1c1,r1c2,r1c3,r2c0,r2c1,r2c2,r2c3,r3c0,r3c1,r3c2,r3c3,class");
  CHECK_THROWS_AS(parse_csv_row("1,2,3"), std::invalid_argument);
}

TEST_CASE("autodetecting parser") {
  CHECK(parse_document(to_text(doc2010())) == doc2010());
  CHECK(parse_document(to_json(doc2010()).dump()) == doc2010());
  CHECK(parse_document("  \n" + to_json(doc_image()).dump()) == doc_image());
}

TEST_CASE("catalog round trips") {
  std::vector<SquareDocument> docs = {doc_image(), make_additive_document(golden::es1_additive)};

  for (Format format : {Format::text, Format::json}) {
    std::ostringstream out;
    write_catalog(out, docs, format);
    std::istringstream in(out.str());
    CHECK(read_catalog(in, format) == docs);
  }

  // csv drops the orbit id but keeps entries and class
  std::ostringstream out;
  write_catalog(out, docs, Format::csv);
  std::istringstream in(out.str());
  auto parsed = read_catalog(in, Format::csv);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].entries == docs[0].entries);
  CHECK(parsed[0].class_label == docs[0].class_label);
}

TEST_CASE("format names") {
  CHECK(parse_format("text") == Format::text);
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("constant rendering") {
  CHECK(constant_to_string(0) == "0");
  CHECK(constant_to_string(4040100) == "4040100");
  unsigned __int128 max = ~static_cast<unsigned __int128>(0);
  CHECK(constant_to_string(max) == "340282366920938463463374607431768211455");
}
