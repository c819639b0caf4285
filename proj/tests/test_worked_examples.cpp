#include <gtest/gtest.h>

#include "bicircle/errors.hpp"
#include "bicircle/worked_examples.hpp"

using namespace bicircle;

TEST(Examples, NamesRoundTrip) {
  for (ExampleName e : {ExampleName::deg11, ExampleName::contractive_toeplitz, ExampleName::blocked_extension})
    EXPECT_EQ(parse_example_name(to_string(e)), e);
  EXPECT_THROW(parse_example_name("nope"), InvalidArgument);
}

TEST(Examples, Deg11FixedPoints) {
  const SweepResult r = fixed_sweep(ExampleName::deg11);
  ASSERT_EQ(r.points.size(), 3u);
  EXPECT_TRUE(r.points[0].closed_form_admissible);
  EXPECT_TRUE(r.points[1].closed_form_admissible);
  EXPECT_FALSE(r.points[2].closed_form_admissible);
  EXPECT_EQ(r.disagreements(), 0);
}

TEST(Examples, FixedSweepsAgree) {
  for (ExampleName e : {ExampleName::contractive_toeplitz, ExampleName::blocked_extension}) {
    const SweepResult r = fixed_sweep(e);
    EXPECT_FALSE(r.points.empty());
    EXPECT_EQ(r.disagreements(), 0) << to_string(e);
    bool some_in = false;
    bool some_out = false;
    for (const SweepPoint& p : r.points) (p.closed_form_admissible ? some_in : some_out) = true;
    EXPECT_TRUE(some_in && some_out) << to_string(e);
  }
}

TEST(Examples, BlockedFixedValues) {
  // u11 = 0.6: the threshold on |u(-1,1)| is 0.8.
  const SweepPoint in = evaluate_example(ExampleName::blocked_extension,
                                         {{{1, 1}, 0.6}, {{-1, 1}, 0.3}, {{-1, 2}, 0.2}});
  EXPECT_TRUE(in.closed_form_admissible);
  EXPECT_TRUE(in.algorithmic_admissible);
  EXPECT_LT(in.value_error, 1e-12);
  const SweepPoint out = evaluate_example(ExampleName::blocked_extension,
                                          {{{1, 1}, 0.6}, {{-1, 1}, 0.7}, {{-1, 2}, 0.6}});
  EXPECT_FALSE(out.closed_form_admissible);
  EXPECT_FALSE(out.algorithmic_admissible);
}

TEST(Examples, RandomSweepsAgree) {
  for (ExampleName e : {ExampleName::deg11, ExampleName::contractive_toeplitz, ExampleName::blocked_extension}) {
    const SweepResult r = run_sweep(e, 300);
    EXPECT_EQ(static_cast<int>(r.points.size()), 300);
    EXPECT_EQ(r.disagreements(), 0) << to_string(e);
    int admissible = 0;
    for (const SweepPoint& p : r.points) {
      admissible += p.closed_form_admissible;
      EXPECT_GT(p.boundary_distance, kBoundaryBand);
    }
    EXPECT_GT(admissible, 0) << to_string(e);
    EXPECT_LT(admissible, 300) << to_string(e);
    if (e == ExampleName::blocked_extension) EXPECT_LT(r.max_value_error(), 1e-10);
  }
}

TEST(Examples, SweepIsDeterministic) {
  const SweepResult a = run_sweep(ExampleName::contractive_toeplitz, 50, 7);
  const SweepResult b = run_sweep(ExampleName::contractive_toeplitz, 50, 7);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (size_t k = 0; k < a.points.size(); ++k) EXPECT_EQ(a.points[k].closed_form, b.points[k].closed_form);
}
