#include <gtest/gtest.h>

#include "fibraid/braid_word.hpp"
#include "fibraid/weave.hpp"

using namespace fibraid;

TEST(Weave, MobileStrandTakingPartInEveryCrossing) {
  const auto c = classify_weave(parse("s1 s2^2 s1^-1", 3), 1);
  ASSERT_TRUE(c);
  EXPECT_EQ(c.weave->mobile, 1);
  EXPECT_EQ(c.weave->end_pos, 1);
  EXPECT_EQ(c.weave->strand_at, (std::vector<int>{1, 2, 3}));
}

TEST(Weave, RejectsCrossingWithoutTheMobileStrand) {
  const auto c = classify_weave(parse("s1^2 s2", 3), 1);
  ASSERT_FALSE(c);
  EXPECT_EQ(c.rejection->crossing, 1u);
}

TEST(Weave, EndPositionTracksOddExponents) {
  EXPECT_EQ(weave_end_position(parse("s1 s2", 3), 1), 3);
  EXPECT_EQ(weave_end_position(parse("s1^3 s2^-1", 3), 1), 3);
  EXPECT_EQ(weave_end_position(parse("s2^2 s1", 3), 2), 1);
  EXPECT_FALSE(weave_end_position(parse("s2", 3), 1).has_value());
  EXPECT_EQ(weave_end_position(BraidWord{3, {}}, 2), 2);
}

TEST(Weave, TargetsValidateShape) {
  EXPECT_THROW(make_target(2.0 * Matrix::Identity(3, 3), TargetMode::Full, true, "x"),
               std::invalid_argument);
  EXPECT_THROW(make_target(Matrix::Identity(3, 3), TargetMode::QubitBlockOnly, true, "x"),
               std::invalid_argument);
  const GateTarget t = make_target(Matrix::Identity(2, 2), TargetMode::QubitBlockOnly, true, "id");
  Matrix u = Matrix::Identity(3, 3);
  u(2, 2) = -1.0;  // |NC> is ignored in block mode
  EXPECT_LT(target_distance(u, t), 1e-15);
}
