#include <doctest.h>

#include <random>

#include "acn/dsl.hpp"
#include "oracles.hpp"

using namespace acn;

namespace {

const char* kStageD = R"(# four-stage figure, final stage
food: f1 f2
stimulus: s

reaction R1: f1 + f2 -> d1 cat s, d2
reaction R2: d1 -> d2 cat f2     # f2 catalyses
reaction R3: d1 + d2 -> d3 cat f1
)";

ParseError parse_failure(std::string_view text) {
  try {
    parse_system(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("stage D document parses to the fixture") {
  const auto doc = parse_document(kStageD);
  CHECK(doc.system == figure_system(FigureStage::D));
  CHECK(doc.element_lines.at("f1") == 2);
  CHECK(doc.element_lines.at("d1") == 5);
  CHECK(doc.reaction_lines.at("R3") == 7);
  CHECK(doc.lines.size() == 7);
}

TEST_CASE("whitespace is optional around operators") {
  const auto sys = parse_system("food:f1 f2\nstimulus:s\nreaction R1:f1+f2->d1 cat s\n");
  CHECK(sys == figure_system(FigureStage::A));
}

TEST_CASE("parse errors carry line and column") {
  SUBCASE("empty foodset") {
    auto e = parse_failure("food:\nreaction R1: a -> b cat a\n");
    CHECK(e.line() == 1);
    CHECK(e.detail() == "empty foodset");
  }
  SUBCASE("missing food line") {
    auto e = parse_failure("stimulus: s\n");
    CHECK(e.detail() == "empty foodset");
  }
  SUBCASE("undeclared element") {
    auto e = parse_failure("food: f1\nreaction R1: f1 -> d1 cat q7\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 27);
    CHECK(std::string(e.what()).find("q7") != std::string::npos);
    CHECK(std::string(e.what()).find("R1") != std::string::npos);
  }
  SUBCASE("duplicate element") {
    auto e = parse_failure("food: f1 f2\nstimulus: f2\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 11);
  }
  SUBCASE("duplicate reaction") {
    auto e = parse_failure("food: a\nreaction R: a -> b cat a\nreaction R: a -> c cat a\n");
    CHECK(e.line() == 3);
  }
  SUBCASE("syntax") {
    CHECK(parse_failure("food: a\nreaction R a -> b\n").line() == 2);
    CHECK(parse_failure("food: a\nreaction R: a b\n").detail() == "expected '->' or '+'");
    CHECK(parse_failure("food: a\nreaction R: a -> b cat\n").detail() == "expected catalyst id");
    CHECK(parse_failure("food: a\nreaction R: a -> b cat a b\n").detail() ==
          "unexpected trailing input");
    CHECK(parse_failure("food: a$\n").column() == 8);
    CHECK(parse_failure("food: a\nfood: b\n").line() == 2);
    CHECK(parse_failure("foo: a\n").line() == 1);
  }
  SUBCASE("validation failures map to the reaction line") {
    auto e = parse_failure("food: a b\nstimulus: s\n\nreaction R: s + a -> c cat b\n");
    CHECK(e.line() == 4);
    e = parse_failure("food: a b\nreaction R: a -> b cat a\n");
    CHECK(e.line() == 2);
  }
}

TEST_CASE("serialize_system canonical text") {
  CHECK(serialize_system(figure_system(FigureStage::A)) ==
        "food: f1 f2\nstimulus: s\nreaction R1: f1 + f2 -> d1 cat s\n");
  CHECK(serialize_system(figure_system(FigureStage::D)) ==
        "food: f1 f2\n"
        "stimulus: s\n"
        "reaction R1: f1 + f2 -> d1 cat d2, s\n"
        "reaction R2: d1 -> d2 cat f2\n"
        "reaction R3: d1 + d2 -> d3 cat f1\n");

  auto reordered = figure_system(FigureStage::D);
  std::swap(reordered.reactions[0], reordered.reactions[2]);
  CHECK(serialize_system(reordered) == serialize_system(figure_system(FigureStage::D)));

  ReactionSystem odd;
  odd.elements = {{"f", ElementKind::Food}, {"d", ElementKind::Derived},
                  {"lonely", ElementKind::Derived}, {"cat", ElementKind::Derived}};
  odd.reactions.push_back({"R", {"f"}, {"d", "cat"}, {}});
  const auto text = serialize_system(odd);
  CHECK(text == "food: f\nderived: lonely\nreaction R: f -> cat + d\n");
  CHECK(parse_system(text) == odd);
}

TEST_CASE("parse and serialize round-trip on fixtures and random systems") {
  for (auto stage : {FigureStage::A, FigureStage::B, FigureStage::C, FigureStage::D}) {
    const auto sys = figure_system(stage);
    const auto text = serialize_system(sys);
    CHECK(structurally_equal(parse_system(text), sys));
    CHECK(serialize_system(parse_system(text)) == text);
  }
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto sys = oracle::random_small_system(rng);
    const auto text = serialize_system(sys);
    CHECK(structurally_equal(parse_system(text), sys));
    CHECK(serialize_system(parse_system(text)) == text);
  }
}
