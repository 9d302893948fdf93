#include <gtest/gtest.h>

#include "ssg/errors.hpp"
#include "ssg/presentation.hpp"
#include "support.hpp"

namespace ssg {
namespace {

TEST(Presentation, ParsesGrigorchuk) {
  const auto p = parse_presentation(test::read_text(test::data_path("grigorchuk.ssg")));
  const auto& a = p.automaton;
  EXPECT_EQ(a.alphabet_size(), 2u);
  EXPECT_EQ(a.state_count(), 5u);
  EXPECT_TRUE(p.identity_declared);
  EXPECT_FALSE(p.requests_closure());
  EXPECT_EQ(a.name(a.identity()), "e");
  const StateId b = *a.find("b");
  EXPECT_EQ(a.output(b, Letter{1}), Letter{1});
  EXPECT_EQ(a.name(a.restriction(b, Letter{1})), "c");
  EXPECT_EQ(a.name(a.restriction(b, Letter{0})), "a");
}

TEST(Presentation, TrivialNucleus) {
  const auto a = test::load("trivial.ssg");
  EXPECT_EQ(a.state_count(), 1u);
  EXPECT_EQ(a.identity(), StateId{0});
}

TEST(Presentation, InfersIdentity) {
  const auto p = parse_presentation(
      "alphabet x y\n"
      "state t : x -> y . 1 , y -> x . 1\n"
      "state 1 : x -> x . 1 , y -> y . 1\n");
  EXPECT_FALSE(p.identity_declared);
  EXPECT_EQ(p.automaton.name(p.automaton.identity()), "1");
  EXPECT_EQ(p.automaton.format_word(Word{Letter{0}, Letter{1}}), "xy");
}

TEST(Presentation, MultiCharacterTokensAreSpaced) {
  const auto a = parse_presentation(
                     "alphabet aa bb\n"
                     "state e : aa -> aa . e , bb -> bb . e\n")
                     .automaton;
  EXPECT_EQ(a.format_word(Word{Letter{0}, Letter{1}}), "aa bb");
}

TEST(Presentation, GeneratorsLine) {
  const auto p = parse_presentation(test::read_text(test::data_path("grigorchuk-generators.ssg")));
  ASSERT_TRUE(p.requests_closure());
  ASSERT_EQ(p.generators.size(), 4u);
  EXPECT_EQ(p.automaton.name(p.generators[0]), "a");
}

TEST(Presentation, RejectsNonPermutation) {
  EXPECT_THROW(parse_presentation("alphabet 0 1\n"
                                  "state e : 0 -> 0 . e , 1 -> 1 . e\n"
                                  "state b : 0 -> 0 . e , 1 -> 0 . e\n"),
               NotAPermutation);
}

TEST(Presentation, RejectsDanglingRestriction) {
  EXPECT_THROW(parse_presentation("alphabet 0 1\n"
                                  "state e : 0 -> 0 . e , 1 -> 1 . q\n"),
               DanglingRestriction);
}

TEST(Presentation, RejectsBadIdentity) {
  EXPECT_THROW(parse_presentation("alphabet 0 1\n"
                                  "identity a\n"
                                  "state e : 0 -> 0 . e , 1 -> 1 . e\n"
                                  "state a : 0 -> 1 . e , 1 -> 0 . e\n"),
               NoIdentity);
  EXPECT_THROW(parse_presentation("alphabet 0 1\n"
                                  "state a : 0 -> 1 . a , 1 -> 0 . a\n"),
               NoIdentity);
  EXPECT_THROW(parse_presentation("alphabet 0 1\n"
                                  "identity z\n"
                                  "state e : 0 -> 0 . e , 1 -> 1 . e\n"),
               NoIdentity);
}

TEST(Presentation, RejectsBisimilarDuplicates) {
  // b and c both act as the transposition on the first letter only.
  EXPECT_THROW(parse_presentation("alphabet 0 1\n"
                                  "state e : 0 -> 0 . e , 1 -> 1 . e\n"
                                  "state b : 0 -> 1 . e , 1 -> 0 . e\n"
                                  "state c : 0 -> 1 . e , 1 -> 0 . e\n"),
               DuplicateBisimilarStates);
  // p = (p, e) is the identity in disguise.
  EXPECT_THROW(parse_presentation("alphabet 0 1\n"
                                  "state e : 0 -> 0 . e , 1 -> 1 . e\n"
                                  "state p : 0 -> 0 . p , 1 -> 1 . e\n"),
               DuplicateBisimilarStates);
}

TEST(Presentation, RejectsSingleLetterAlphabet) {
  EXPECT_THROW(parse_presentation("alphabet 0\nstate e : 0 -> 0 . e\n"), ValidationError);
}

TEST(Presentation, SyntaxErrorsCarryLocation) {
  try {
    parse_presentation(test::read_text(test::data_path("malformed.ssg")));
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 31u);
  }
  EXPECT_THROW(parse_presentation("alphabet 0 1\nbogus e\n"), SyntaxError);
  EXPECT_THROW(parse_presentation("alphabet 0 1\nstate e : 0 -> 0 . e\n"), ValidationError);
  EXPECT_THROW(parse_presentation("alphabet 0 0\nstate e : 0 -> 0 . e , 0 -> 0 . e\n"),
               ValidationError);
  EXPECT_THROW(parse_presentation("state e : 0 -> 0 . e , 1 -> 1 . e\n"), ValidationError);
}

TEST(Presentation, CommentsAndBlankLinesIgnored) {
  const auto a = parse_presentation(
                     "# header\n\n"
                     "alphabet 0 1   # two letters\n"
                     "state e : 0 -> 0 . e , 1 -> 1 . e\n")
                     .automaton;
  EXPECT_EQ(a.state_count(), 1u);
}

TEST(Presentation, SerializeRoundTrips) {
  for (const auto& file : test::bundled_nuclei()) {
    const auto p = parse_presentation(test::read_text(test::data_path(file)));
    const std::string text = serialize(p);
    const auto q = parse_presentation(text);
    EXPECT_EQ(serialize(q), text) << file;
    EXPECT_EQ(q.automaton.state_count(), p.automaton.state_count());
  }
  const auto g = parse_presentation(test::read_text(test::data_path("grigorchuk-generators.ssg")));
  const auto again = parse_presentation(serialize(g));
  EXPECT_EQ(again.generators, g.generators);
}

TEST(Presentation, SerializeFormat) {
  const auto a = test::load("grigorchuk.ssg");
  const std::string text = serialize(a);
  EXPECT_NE(text.find("alphabet 0 1\n"), std::string::npos);
  EXPECT_NE(text.find("identity e\n"), std::string::npos);
  EXPECT_NE(text.find("state b : 0 -> 0 . a , 1 -> 1 . c\n"), std::string::npos);
}

}  // namespace
}  // namespace ssg
