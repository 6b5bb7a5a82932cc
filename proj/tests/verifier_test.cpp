#include "obstrukt/verifier.hpp"

#include <random>

#include "gtest/gtest.h"
#include "naive_ring.hpp"
#include "obstrukt/json_io.hpp"
#include "obstrukt/word_syntax.hpp"

namespace obstrukt {
namespace {

SurfaceLabel random_label(std::mt19937_64& rng, std::int64_t box) {
  std::uniform_int_distribution<std::int64_t> d(-box, box);
  const std::int64_t a = d(rng);
  return SurfaceLabel(a, d(rng));
}

AugVector label_gap(const SurfaceLabel& a, const SurfaceLabel& b) {
  return AugVector::from(a.sigma()) - AugVector::from(b.sigma());
}

TEST(PsiTest, LabelDifference) {
  EXPECT_EQ(psi(label_difference(SurfaceLabel(g1), SurfaceLabel(e))), AugVector(1, 0, 0, 0));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    auto s1 = random_label(rng, 4);
    auto s2 = random_label(rng, 4);
    EXPECT_EQ(psi(label_difference(s1, s2, 1)), label_gap(s1, s2));
  }
}

TEST(PsiTest, VanishesOnEveryMoveKind) {
  std::mt19937_64 rng(32);
  for (MoveKind kind : kAllMoveKinds) {
    for (int i = 0; i < 200; ++i) {
      const Move m = random_move(rng, kind, 3, 2);
      EXPECT_TRUE(psi(delta(m, random_label(rng, 3), 2)).is_zero()) << format_move(m);
    }
  }
}

TEST(PsiTest, RejectsUnreachableClasses) {
  EXPECT_THROW(psi(ObstructionClass({}, {}, RingElement(g1))), PsiNotApplicable);
  EXPECT_THROW(psi(ObstructionClass(RingElement(g1), {}, {})), PsiNotApplicable);
  // g and stab are not constrained.
  EXPECT_NO_THROW(psi(ObstructionClass({}, RingElement(g1), {})));
}

ObstructionClass random_reachable(std::mt19937_64& rng, std::size_t n_stab, SurfaceLabel* s1_out = nullptr,
                                  SurfaceLabel* s2_out = nullptr) {
  const SurfaceLabel s1 = random_label(rng, 2);
  const SurfaceLabel s2 = random_label(rng, 2);
  const MoveWord w = random_word(rng, 6, 2, n_stab);
  if (s1_out) *s1_out = s1;
  if (s2_out) *s2_out = s2;
  return evaluate_obstruction(s1, s2, w, n_stab);
}

TEST(PsiTest, SoundOnReachableClasses) {
  std::mt19937_64 rng(33);
  int nonzero_psi = 0;
  for (int i = 0; i < 10000; ++i) {
    SurfaceLabel s1, s2;
    const ObstructionClass c = random_reachable(rng, i % 2 == 0 ? 0 : 2, &s1, &s2);
    const AugVector p = psi(c);
    EXPECT_EQ(p, label_gap(s1, s2));
    if (!p.is_zero()) {
      ++nonzero_psi;
      EXPECT_FALSE(is_zero(c));
    }
  }
  EXPECT_GT(nonzero_psi, 9000);
}

TEST(PsiTest, TranslationInvariantOnReachableClasses) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 500; ++i) {
    const ObstructionClass c = random_reachable(rng, 1);
    const GroupElement h = testing::random_element(rng, 3);
    EXPECT_EQ(psi(scalar_mul(h, c)), psi(c));
  }
}

TEST(DecideTest, Examples) {
  Verdict v = decide_obstruction(SurfaceLabel(g1), SurfaceLabel(e), {});
  EXPECT_TRUE(v.nonvanishing);
  EXPECT_EQ(v.psi_value, AugVector(1, 0, 0, 0));

  const SurfaceLabel s(2, -1);
  v = decide_obstruction(s, s, {});
  EXPECT_FALSE(v.nonvanishing);
  EXPECT_EQ(v.psi_value, AugVector());

  const MoveWord eta{EtaSpin{1, e, g1}};
  const ObstructionClass o = evaluate_obstruction(SurfaceLabel(g1), SurfaceLabel(e), eta);
  EXPECT_EQ(o, ObstructionClass(RingElement(e) - g1.inverse(), {}, {}));
  v = decide_obstruction(SurfaceLabel(g1), SurfaceLabel(e), eta);
  EXPECT_TRUE(v.nonvanishing);
  EXPECT_EQ(v.psi_value, AugVector(1, 0, 0, 0));
  EXPECT_EQ(v.witness.word_length, 1u);
  EXPECT_EQ(v.witness.word_digest, word_digest(eta));
  EXPECT_EQ(v.witness.word_digest.size(), 16u);
}

TEST(DecideTest, EqualLabelsCanVanishWithMoves) {
  const SurfaceLabel s(1, 1);
  const GroupElement a(1, 0, 0, 0);
  const GroupElement b(0, 0, 1, 0);
  // eta(a, b) followed by eta(b, a) cancels.
  Verdict v = decide_obstruction(s, s, {EtaSpin{1, a, b}, EtaSpin{2, b, a}});
  EXPECT_FALSE(v.nonvanishing);
}

TEST(DecideTest, NegateFlipsWordContribution) {
  const SurfaceLabel s1(1, 0);
  const SurfaceLabel s2(0, 0);
  const MoveWord w{EtaSpin{1, e, g1}, XiSpin{2}};
  const ObstructionClass plus = evaluate_obstruction(s1, s2, w, 0, true);
  const ObstructionClass minus = evaluate_obstruction(s1, s2, w, 0, false);
  EXPECT_EQ(plus + minus, label_difference(s1, s2) + label_difference(s1, s2));
  EXPECT_NE(plus, minus);
  EXPECT_EQ(decide_obstruction(s1, s2, w, 0, true).psi_value, AugVector(1, 0, 0, 0));
}

TEST(DecideTest, NonvanishingForEveryWordWhenLabelsDiffer) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 2000; ++i) {
    const SurfaceLabel s1 = random_label(rng, 2);
    const SurfaceLabel s2 = random_label(rng, 2);
    if (s1 == s2) continue;
    const std::size_t n = i % 3;
    const Verdict v = decide_obstruction(s1, s2, random_word(rng, 6, 3, n), n);
    EXPECT_TRUE(v.nonvanishing);
    EXPECT_EQ(v.psi_value, label_gap(s1, s2));
  }
}

TEST(InvarianceTest, Examples) {
  InvarianceConfig config;
  config.samples = 1000;
  config.box = 3;
  InvarianceReport report = check_move_invariance(config);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.moves_checked, 6000u);

  config.samples = 1;
  config.box = 0;
  report = check_move_invariance(config);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.moves_checked, 6u);
}

TEST(InvarianceTest, DetectsCorruptedXiDelta) {
  // Sign flip on the e-coefficient of the xi delta: g + g^-1 + 2e.
  DeltaFunction corrupted = [](const Move& m, const SurfaceLabel& sigma, std::size_t n) {
    ObstructionClass d = delta(m, sigma, n);
    if (kind_of(m) != MoveKind::Xi) return d;
    return ObstructionClass(d.d() + 4 * RingElement(e), d.g(), d.r(), d.stab());
  };
  InvarianceConfig config;
  config.samples = 20;
  const InvarianceReport report = check_move_invariance(config, corrupted);
  ASSERT_EQ(report.failures.size(), 20u);
  for (const auto& f : report.failures) EXPECT_EQ(kind_of(f.move), MoveKind::Xi);
}

TEST(InvarianceTest, DetectsDeltaBreakingPsi) {
  // A d-component in J but outside J^2 on eta, without matching r.
  DeltaFunction corrupted = [](const Move& m, const SurfaceLabel& sigma, std::size_t n) {
    ObstructionClass d = delta(m, sigma, n);
    if (kind_of(m) != MoveKind::Eta) return d;
    return ObstructionClass(d.d(), d.g(), RingElement(), d.stab());
  };
  InvarianceConfig config;
  config.samples = 50;
  const InvarianceReport report = check_move_invariance(config, corrupted);
  EXPECT_FALSE(report.ok());
  for (const auto& f : report.failures) EXPECT_EQ(kind_of(f.move), MoveKind::Eta);
}

TEST(BruteForceTest, DistinctLabelsLengthTwo) {
  SearchConfig config;
  config.max_word_len = 2;
  config.box = 1;
  const SearchReport report = brute_force_search(SurfaceLabel(g1), SurfaceLabel(e), config);
  EXPECT_EQ(report.vanishing_count, 0u);
  EXPECT_TRUE(report.vanishing_words.empty());
  EXPECT_EQ(report.moves_enumerated, 2u + 4u * 81 * 81 + 5u * 81);
  EXPECT_GT(report.alphabet_size, 13000u);
}

TEST(BruteForceTest, EqualLabelsFindEmptyWord) {
  SearchConfig config;
  config.max_word_len = 0;
  config.box = 0;
  const SurfaceLabel s(1, -1);
  const SearchReport report = brute_force_search(s, s, config);
  EXPECT_EQ(report.vanishing_count, 1u);
  ASSERT_EQ(report.vanishing_words.size(), 1u);
  EXPECT_TRUE(report.vanishing_words[0].empty());
}

TEST(BruteForceTest, ReportedWordsReallyVanish) {
  SearchConfig config;
  config.max_word_len = 2;
  config.box = 1;
  config.n_stab = 1;
  config.max_recorded = 50;
  const SurfaceLabel s(0, 1);
  const SearchReport report = brute_force_search(s, s, config);
  EXPECT_GT(report.vanishing_count, 1u);
  ASSERT_EQ(report.vanishing_words.size(), 50u);
  EXPECT_TRUE(report.vanishing_words[0].empty());
  for (const auto& w : report.vanishing_words) {
    const ObstructionClass o = evaluate_obstruction(s, s, w, 1);
    EXPECT_TRUE(is_zero(o)) << format_word(w);
    EXPECT_TRUE(psi(o).is_zero());
  }
}

TEST(BruteForceTest, DistinctLabelsLengthThree) {
  SearchConfig config;
  config.max_word_len = 3;
  config.box = 1;
  config.max_evaluations = 1'000'000'000;
  const SearchReport report = brute_force_search(SurfaceLabel(g1 * g2), SurfaceLabel(g2), config);
  EXPECT_EQ(report.vanishing_count, 0u);
  EXPECT_GT(report.evaluations, 80'000'000u);
}

TEST(BruteForceTest, BudgetExceededIsReported) {
  SearchConfig config;
  config.max_word_len = 3;
  config.box = 1;
  config.max_evaluations = 1'000'000;
  try {
    brute_force_search(SurfaceLabel(g1), SurfaceLabel(e), config);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& ex) {
    EXPECT_GT(ex.required(), ex.limit());
    EXPECT_EQ(ex.limit(), 1'000'000u);
  }
  config.box = 50;
  EXPECT_THROW(brute_force_search(SurfaceLabel(g1), SurfaceLabel(e), config), BudgetExceeded);
  config.max_word_len = kMaxSearchWordLength + 1;
  EXPECT_THROW(brute_force_search(SurfaceLabel(g1), SurfaceLabel(e), config), std::invalid_argument);
}

TEST(BruteForceTest, ThreadCountDoesNotChangeReport) {
  SearchConfig config;
  config.max_word_len = 2;
  config.box = 1;
  config.max_recorded = 20;
  const SurfaceLabel s(0, 0);
  config.threads = 1;
  const Json one = to_json(brute_force_search(s, s, config));
  config.threads = 4;
  const Json four = to_json(brute_force_search(s, s, config));
  EXPECT_EQ(one.dump(), four.dump());
}

TEST(BruteForceTest, EnvironmentCap) {
  setenv("OBSTRUKT_MAX_ENUM", "12345", 1);
  EXPECT_EQ(max_enumeration_from_env(), 12345u);
  setenv("OBSTRUKT_MAX_ENUM", "junk", 1);
  EXPECT_EQ(max_enumeration_from_env(), kDefaultMaxEnumeration);
  unsetenv("OBSTRUKT_MAX_ENUM");
  EXPECT_EQ(max_enumeration_from_env(), kDefaultMaxEnumeration);
}

TEST(CertifyTest, UnstabilizedBox) {
  CertifyConfig config;
  config.label_box = 1;
  config.word_len = 2;
  config.param_box = 1;
  config.n_stab = 0;
  config.words_per_pair = 50;
  const CertifyReport report = certify_theorem(config);
  EXPECT_EQ(report.records.size(), 72u);
  EXPECT_TRUE(report.all_certified());
  EXPECT_TRUE(report.records[0].oracle_checked);
  EXPECT_TRUE(report.records[1].oracle_checked);
  EXPECT_FALSE(report.records[2].oracle_checked);
}

TEST(CertifyTest, StabilizedBox) {
  CertifyConfig config;
  config.label_box = 1;
  config.word_len = 2;
  config.param_box = 1;
  config.n_stab = 3;
  config.words_per_pair = 50;
  config.oracle_pairs = 1;
  const CertifyReport report = certify_theorem(config);
  EXPECT_EQ(report.records.size(), 72u);
  EXPECT_TRUE(report.all_certified());
}

TEST(CertifyTest, EmptyBoxIsVacuous) {
  CertifyConfig config;
  config.label_box = 0;
  config.word_len = 5;
  config.n_stab = 2;
  const CertifyReport report = certify_theorem(config);
  EXPECT_TRUE(report.vacuous());
  EXPECT_TRUE(report.all_certified());
}

TEST(CertifyTest, BundleIndependentOfThreads) {
  CertifyConfig config;
  config.label_box = 1;
  config.word_len = 3;
  config.words_per_pair = 20;
  config.oracle_pairs = 0;
  config.threads = 1;
  const std::string a = certificate_bundle(certify_theorem(config));
  config.threads = 3;
  const std::string b = certificate_bundle(certify_theorem(config));
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace obstrukt
