#include <gtest/gtest.h>

#include <random>

#include "ssg/bisimulation.hpp"
#include "support.hpp"

namespace ssg {
namespace {

FormalProduct prod(const NucleusAutomaton& a, std::initializer_list<const char*> names) {
  FormalProduct p;
  for (const char* n : names) p.factors.push_back({*a.find(n), false});
  return p;
}

TEST(Bisimulation, KleinFourRelations) {
  const auto a = test::load("grigorchuk.ssg");
  EXPECT_TRUE(bisimilar(a, prod(a, {"b", "c"}), prod(a, {"d"})));
  EXPECT_TRUE(bisimilar(a, prod(a, {"b"}), prod(a, {"b"})));
  EXPECT_FALSE(bisimilar(a, prod(a, {"a"}), prod(a, {"e"})));
  EXPECT_TRUE(bisimilar(a, prod(a, {"a", "a"}), FormalProduct{}));
  EXPECT_TRUE(bisimilar(a, FormalProduct::inverse_of(*a.find("b")), prod(a, {"b"})));
  EXPECT_FALSE(bisimilar(a, prod(a, {"a", "b"}), prod(a, {"b", "a"})));
}

TEST(Bisimulation, IdentifyInNucleus) {
  const auto a = test::load("grigorchuk.ssg");
  EXPECT_EQ(identify_in_nucleus(a, prod(a, {"c", "d"})), a.find("b"));
  EXPECT_EQ(identify_in_nucleus(a, prod(a, {"e", "c"})), a.find("c"));
  EXPECT_EQ(identify_in_nucleus(a, prod(a, {"a", "b"})), std::nullopt);
  const auto m = test::load("adding-machine.ssg");
  EXPECT_EQ(identify_in_nucleus(m, FormalProduct::inverse_of(*m.find("a"))), m.find("a^-1"));
  EXPECT_EQ(identify_in_nucleus(m, prod(m, {"a", "a^-1"})), m.identity());
}

// Reference: direct comparison on all words of length 8.
TEST(Bisimulation, AgreesWithBruteForce) {
  std::mt19937 rng(2024);
  for (const auto& file : test::bundled_nuclei()) {
    const auto a = test::load(file);
    int equal = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const FormalProduct p = test::random_product(rng, a, 4);
      // Half of the pairs are built to be equal by reassociating an inverse.
      FormalProduct q = test::random_product(rng, a, 4);
      if (trial % 2 == 0) {
        const FormalProduct r = test::random_product(rng, a, 2);
        q = r * r.inverse() * p;
      }
      const bool expect = test::oracle::agree_up_to(a, p, q, a.alphabet_size() == 2 ? 8 : 6);
      equal += expect;
      ASSERT_EQ(bisimilar(a, p, q), expect) << file;
    }
    EXPECT_GE(equal, 75) << file;
  }
}

}  // namespace
}  // namespace ssg
