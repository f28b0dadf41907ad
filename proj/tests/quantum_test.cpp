#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oracle.hpp"
#include "tetra/fixtures.hpp"
#include "tetra/quantum.hpp"

namespace {

using tetra::Mat3;
using tetra::Param;
using tetra::PermOp64;
using tetra::PermOp8;
using tetra::Rational;
using tetra::WeightedOp8;

Mat3 m(const char* s) { return Mat3::parse(s); }

PermOp8 perm8(std::array<std::uint8_t, 8> map) { return PermOp8(map); }

TEST(StateIndex, EncodeDecodeRoundTrip) {
  for (std::size_t s = 0; s < 8; ++s) EXPECT_EQ(tetra::encode_state<8>(tetra::decode_state<8>(s)), s);
  for (std::size_t s = 0; s < 64; ++s) EXPECT_EQ(tetra::encode_state<64>(tetra::decode_state<64>(s)), s);
  EXPECT_EQ(tetra::encode_state<8>({true, false, false}), 4u);
  EXPECT_EQ(tetra::encode_state<8>({false, true, true}), 3u);
}

TEST(PermOp, RejectsNonBijection) {
  EXPECT_THROW(perm8({0, 0, 2, 3, 4, 5, 6, 7}), std::invalid_argument);
  EXPECT_THROW(perm8({0, 1, 2, 3, 4, 5, 6, 8}), std::invalid_argument);
}

TEST(PermOp, Serialization) {
  EXPECT_EQ(PermOp8::identity().to_string(), "0,1,2,3,4,5,6,7");
}

TEST(Quantize, Examples) {
  EXPECT_EQ(tetra::quantize(Mat3::identity()), PermOp8::identity());
  // Exchanges coordinates 1 and 2: 100 <-> 010, 101 <-> 011.
  EXPECT_EQ(tetra::quantize(m("010/100/001")), perm8({0, 1, 4, 5, 2, 3, 6, 7}));
  // (x1, x2, x3) -> (x1, x2, x2 + x3): 010 <-> 011, 110 <-> 111.
  EXPECT_EQ(tetra::quantize(m("100/011/001")), perm8({0, 1, 3, 2, 4, 5, 7, 6}));
}

TEST(Quantize, RejectsSingular) {
  EXPECT_THROW(tetra::quantize(m("110/110/001")), tetra::NotInvertible);
  EXPECT_THROW(tetra::quantize6(tetra::Mat6()), tetra::NotInvertible);
}

TEST(Quantize, MatchesOracle) {
  for (Mat3 r : tetra::enumerate_gl3()) {
    const auto want = oracle::quantize<3>(oracle::m3(r.to_string()));
    const PermOp8 got = tetra::quantize(r);
    for (std::size_t x = 0; x < 8; ++x) ASSERT_EQ(static_cast<int>(got(x)), want[x]);
  }
}

TEST(Quantize, HomomorphismOnRandomPairs) {
  const auto& gl = tetra::enumerate_gl3();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    const Mat3 a = gl[rng() % 168], b = gl[rng() % 168];
    ASSERT_EQ(tetra::quantize(a * b), tetra::compose(tetra::quantize(a), tetra::quantize(b)));
  }
}

TEST(Compose, Basics) {
  const PermOp8 p = tetra::quantize(m("011/001/110"));
  EXPECT_EQ(tetra::compose(p, PermOp8::identity()), p);
  EXPECT_EQ(tetra::compose(PermOp8::identity(), p), p);
  EXPECT_TRUE(tetra::compose(p, p.inverse()).is_identity());
  EXPECT_TRUE(tetra::compose(p.inverse(), p).is_identity());
  // Apply-first-then semantics.
  const PermOp8 a = perm8({1, 0, 2, 3, 4, 5, 6, 7}), b = perm8({0, 2, 1, 3, 4, 5, 6, 7});
  EXPECT_EQ(tetra::compose(a, b)(0), 2u);
}

TEST(Lift, Identity) {
  for (const auto& s : tetra::kCanonicalSlots) EXPECT_TRUE(tetra::lift(PermOp8::identity(), s).is_identity());
}

TEST(Lift, ContiguousSlotActsOnLeadingBits) {
  const PermOp8 p = tetra::quantize(m("011/001/110"));
  const PermOp64 l = tetra::lift(p, tetra::kSlot123);
  for (std::size_t x = 0; x < 8; ++x) EXPECT_EQ(l(x << 3), p(x) << 3);
  for (std::size_t s = 0; s < 64; ++s) EXPECT_EQ(l(s) & 7u, s & 7u);
}

TEST(Lift, AgreesWithEmbeddingExhaustively) {
  for (Mat3 r : tetra::enumerate_gl3())
    for (const auto& s : tetra::kCanonicalSlots) {
      const PermOp64 lifted = tetra::lift(tetra::quantize(r), s);
      ASSERT_EQ(lifted, tetra::quantize6(tetra::embed(r, s))) << r.to_string() << " slot " << s.to_string();
      const auto naive = oracle::quantize<6>(oracle::embed(oracle::m3(r.to_string()), s.labels()));
      for (std::size_t x = 0; x < 64; ++x) ASSERT_EQ(static_cast<int>(lifted(x)), naive[x]);
    }
}

TEST(Lift, NonCanonicalSlot) {
  const Mat3 r = m("011/001/110");
  const tetra::Slot s(2, 3, 5);
  EXPECT_EQ(tetra::lift(tetra::quantize(r), s), tetra::quantize6(tetra::embed(r, s)));
}

TEST(CheckQuantumPure, Examples) {
  const auto& t = tetra::fixtures::sixtuple_example(1).tuple;
  const PermOp8 q4 = tetra::quantize(t.r4);
  EXPECT_TRUE(tetra::check_quantum_pure(tetra::quantize(t.r1), tetra::quantize(t.r2), tetra::quantize(t.r3), q4, q4));
  const PermOp8 id = PermOp8::identity();
  EXPECT_TRUE(tetra::check_quantum_pure(id, id, id, id, id));

  const auto& ex5 = tetra::fixtures::modified_example(5);
  const auto [r4, q4m] = ex5.pairs.front();
  EXPECT_TRUE(tetra::check_quantum_pure(tetra::quantize(ex5.r1), tetra::quantize(ex5.r2), tetra::quantize(ex5.r3),
                                        tetra::quantize(r4), tetra::quantize(q4m)));
  // The plain relation fails for either member of a modified pair.
  EXPECT_FALSE(tetra::check_quantum_pure(tetra::quantize(ex5.r1), tetra::quantize(ex5.r2), tetra::quantize(ex5.r3),
                                         tetra::quantize(r4), tetra::quantize(r4)));
}

TEST(CheckQuantumPure, FailsOnBrokenQuadruple) {
  const auto& t = tetra::fixtures::sixtuple_example(1).tuple;
  const PermOp8 bad = tetra::quantize(m("110/010/001"));
  EXPECT_FALSE(tetra::check_quantum_pure(tetra::quantize(t.r1), tetra::quantize(t.r2), tetra::quantize(t.r3), bad, bad));
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -2), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_LT(Rational(-1, 2), Rational(0));
  EXPECT_EQ(Rational(3, 6).to_string(), "1/2");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(CheckQuantumWeighted, Example1Families) {
  const auto& t = tetra::fixtures::sixtuple_example(1).tuple;
  const PermOp8 q1 = tetra::quantize(t.r1), q2 = tetra::quantize(t.r2);
  const WeightedOp8 w3{{Param::alpha, tetra::quantize(t.r3)}, {Param::beta, tetra::quantize(t.s3)}};
  const WeightedOp8 w4{{Param::lambda, tetra::quantize(t.r4)}, {Param::mu, tetra::quantize(t.s4)}};
  EXPECT_TRUE(tetra::check_quantum_weighted(q1, q2, w3, w4));
  EXPECT_TRUE(tetra::weighted_identity_at(q1, q2, w3, w4, {Rational(7), Rational(-3, 2), Rational(0), Rational(11)}));
}

TEST(CheckQuantumWeighted, SingleTermsReduceToPureCheck) {
  const auto& t = tetra::fixtures::sixtuple_example(1).tuple;
  const PermOp8 q1 = tetra::quantize(t.r1), q2 = tetra::quantize(t.r2), q3 = tetra::quantize(t.r3),
                q4 = tetra::quantize(t.r4);
  EXPECT_TRUE(tetra::check_quantum_weighted(q1, q2, WeightedOp8::single(q3), WeightedOp8::single(q4)));
  const PermOp8 bad = tetra::quantize(m("110/010/001"));
  EXPECT_FALSE(tetra::check_quantum_weighted(q1, q2, WeightedOp8::single(q3), WeightedOp8::single(bad)));
}

TEST(CheckQuantumWeighted, SumOfModifiedPair) {
  const auto& ex5 = tetra::fixtures::modified_example(5);
  const auto [r4, q4] = ex5.pairs.front();
  const PermOp8 q1 = tetra::quantize(ex5.r1), q2 = tetra::quantize(ex5.r2), q3 = tetra::quantize(ex5.r3);
  const WeightedOp8 t{{Rational(1), tetra::quantize(r4)}, {Rational(1), tetra::quantize(q4)}};
  EXPECT_TRUE(tetra::check_quantum_weighted(q1, q2, WeightedOp8::single(q3), t));
  // With independent symbols the two terms no longer cancel.
  const WeightedOp8 split{{Param::lambda, tetra::quantize(r4)}, {Param::mu, tetra::quantize(q4)}};
  EXPECT_FALSE(tetra::weighted_identity_symbolic(q1, q2, WeightedOp8::single(q3), split));
  // Unequal numeric weights break the sum as well.
  const WeightedOp8 skew{{Rational(1), tetra::quantize(r4)}, {Rational(2), tetra::quantize(q4)}};
  EXPECT_FALSE(tetra::check_quantum_weighted(q1, q2, WeightedOp8::single(q3), skew));
}

TEST(CheckQuantumWeighted, BilinearDecompositionMatchesNumericOnExamples) {
  for (const auto& ex : tetra::fixtures::sixtuple_examples()) {
    const auto& t = ex.tuple;
    const PermOp8 q1 = tetra::quantize(t.r1), q2 = tetra::quantize(t.r2);
    const PermOp8 r3 = tetra::quantize(t.r3), s3 = tetra::quantize(t.s3), r4 = tetra::quantize(t.r4),
                  s4 = tetra::quantize(t.s4);
    const WeightedOp8 w3{{Param::alpha, r3}, {Param::beta, s3}};
    const WeightedOp8 w4{{Param::lambda, r4}, {Param::mu, s4}};
    const bool conj = tetra::check_quantum_pure(q1, q2, r3, r4, r4) && tetra::check_quantum_pure(q1, q2, r3, s4, s4) &&
                      tetra::check_quantum_pure(q1, q2, s3, r4, r4) && tetra::check_quantum_pure(q1, q2, s3, s4, s4);
    EXPECT_EQ(tetra::weighted_identity_symbolic(q1, q2, w3, w4), conj) << "example " << ex.number;
    EXPECT_TRUE(tetra::weighted_identity_at(q1, q2, w3, w4, tetra::kCrossCheckPoint)) << "example " << ex.number;
  }
}

TEST(VertexCount, Examples) {
  const auto& t1 = tetra::fixtures::sixtuple_example(1).tuple;
  EXPECT_EQ(tetra::vertex_count(WeightedOp8{{Param::alpha, tetra::quantize(t1.r3)}, {Param::beta, tetra::quantize(t1.s3)}}),
            14u);
  EXPECT_EQ(tetra::vertex_count(WeightedOp8::single(tetra::quantize(t1.r3))), 8u);
  const auto& t2 = tetra::fixtures::sixtuple_example(2).tuple;
  EXPECT_EQ(tetra::vertex_count(WeightedOp8{{Param::lambda, tetra::quantize(t2.r4)}, {Param::mu, tetra::quantize(t2.s4)}}),
            12u);
}

TEST(VertexCount, TwoTermFormulaAndRange) {
  const auto& gl = tetra::enumerate_gl3();
  std::map<std::size_t, std::size_t> seen;
  for (std::size_t a = 0; a < gl.size(); ++a)
    for (std::size_t b = 0; b < gl.size(); ++b) {
      if (a == b) continue;
      const PermOp8 p = tetra::quantize(gl[a]), q = tetra::quantize(gl[b]);
      std::size_t agree = 0;
      for (std::size_t x = 0; x < 8; ++x) agree += p(x) == q(x);
      const std::size_t v = tetra::vertex_count(WeightedOp8{{Param::alpha, p}, {Param::beta, q}});
      ASSERT_EQ(v, 16 - agree);
      // Distinct linear maps agree exactly on ker(a - b): 1, 2 or 4 states.
      ASSERT_TRUE(v == 12 || v == 14 || v == 15) << v;
      ++seen[v];
    }
  EXPECT_GT(seen[12], 0u);
  EXPECT_GT(seen[14], 0u);
  EXPECT_GT(seen[15], 0u);
}

TEST(SumEntries, IdentityPair) {
  const auto h = tetra::entry_histogram(tetra::sum_entries(Mat3::identity(), Mat3::identity()));
  EXPECT_EQ(h.at(2), 8u);
  EXPECT_EQ(h.at(0), 56u);
  EXPECT_EQ(h.count(1), 0u);
}

TEST(SumEntries, Example5Pair) {
  const auto& ex5 = tetra::fixtures::modified_example(5);
  const auto [r4, q4] = ex5.pairs.front();
  const auto entries = tetra::sum_entries(r4, q4);
  EXPECT_TRUE(std::all_of(entries.begin(), entries.end(), [](int e) { return e >= 0 && e <= 2; }));

  // Oracle: enumerate the 8 states and count coincidences of the two maps.
  const auto a = oracle::quantize<3>(oracle::m3(r4.to_string()));
  const auto b = oracle::quantize<3>(oracle::m3(q4.to_string()));
  std::size_t coincide = 0;
  for (std::size_t x = 0; x < 8; ++x) coincide += a[x] == b[x];
  ASSERT_EQ(coincide, 4u);

  const auto h = tetra::entry_histogram(entries);
  EXPECT_EQ(h.at(2), 4u);
  EXPECT_EQ(h.at(1), 8u);
  EXPECT_EQ(h.at(0), 52u);
  EXPECT_THROW(tetra::sum_entries(m("110/110/001"), r4), tetra::NotInvertible);
}

TEST(Nonnegativity, PositiveCoefficientsGiveNonnegativeEntries) {
  std::mt19937_64 rng(5);
  for (const auto& ex : tetra::fixtures::sixtuple_examples()) {
    const auto& t = ex.tuple;
    const WeightedOp8 w3{{Param::alpha, tetra::quantize(t.r3)}, {Param::beta, tetra::quantize(t.s3)}};
    const WeightedOp8 w4{{Param::lambda, tetra::quantize(t.r4)}, {Param::mu, tetra::quantize(t.s4)}};
    for (int trial = 0; trial < 50; ++trial) {
      const tetra::ParamValues v{Rational(1 + static_cast<std::int64_t>(rng() % 97), 1 + static_cast<std::int64_t>(rng() % 13)),
                                 Rational(1 + static_cast<std::int64_t>(rng() % 97), 1 + static_cast<std::int64_t>(rng() % 13)),
                                 Rational(1 + static_cast<std::int64_t>(rng() % 97), 1 + static_cast<std::int64_t>(rng() % 13)),
                                 Rational(1 + static_cast<std::int64_t>(rng() % 97), 1 + static_cast<std::int64_t>(rng() % 13))};
      EXPECT_TRUE(tetra::DenseMatrix<8>::from(w3, v).nonnegative());
      EXPECT_TRUE(tetra::DenseMatrix<8>::from(w4, v).nonnegative());
    }
  }
  const WeightedOp8 neg{{Rational(-1), PermOp8::identity()}};
  EXPECT_FALSE(tetra::DenseMatrix<8>::from(neg, {}).nonnegative());
}

TEST(WeightedOp, EntryIsSumOfMatchingCoefficients) {
  const PermOp8 p = tetra::quantize(m("010/100/001"));
  const WeightedOp8 w{{Rational(3), PermOp8::identity()}, {Rational(5), p}};
  const auto d = tetra::DenseMatrix<8>::from(w, {});
  EXPECT_EQ(d(0, 0), Rational(8));  // both fix state 0
  EXPECT_EQ(d(4, 4), Rational(3));
  EXPECT_EQ(d(4, 2), Rational(5));
  EXPECT_EQ(d(4, 0), Rational(0));
  EXPECT_EQ(w.to_string(), "3*[0,1,2,3,4,5,6,7] + 5*[0,1,4,5,2,3,6,7]");
}

}  // namespace
