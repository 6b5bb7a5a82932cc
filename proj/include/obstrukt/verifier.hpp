#ifndef OBSTRUKT_VERIFIER_HPP
#define OBSTRUKT_VERIFIER_HPP

// Non-vanishing certificates for the obstruction between two surface labels.
//
// psi(d, g, r, stab) = F(d) - N(r) vanishes on every move delta and equals
// exponents(sigma1) - exponents(sigma2) on the label difference, so the
// obstruction label_difference(sigma1, sigma2) - (sum of deltas) is nonzero
// for every word as soon as sigma1 != sigma2. The brute-force search checks
// the same claim by exhaustive enumeration without using psi.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "obstrukt/group_ring.hpp"
#include "obstrukt/moves.hpp"
#include "obstrukt/obstruction.hpp"

namespace obstrukt {

class PsiNotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// F(d) - N(r). Throws PsiNotApplicable unless d and r both have augmentation 0.
AugVector psi(const ObstructionClass& c);

struct VerdictWitness {
  SurfaceLabel sigma1;
  SurfaceLabel sigma2;
  std::size_t word_length = 0;
  // FNV-1a of the canonical word text, 16 hex digits.
  std::string word_digest;
};

struct Verdict {
  bool nonvanishing = false;
  AugVector psi_value;
  VerdictWitness witness;
};

// Hash used for word digests.
std::string word_digest(const MoveWord& w);

// o = label_difference(sigma1, sigma2) - sum of deltas of w at sigma2. With
// negate, the summed delta enters with the opposite sign.
ObstructionClass evaluate_obstruction(const SurfaceLabel& sigma1, const SurfaceLabel& sigma2,
                                      const MoveWord& w, std::size_t n_stab = 0,
                                      bool negate = false);

Verdict decide_obstruction(const SurfaceLabel& sigma1, const SurfaceLabel& sigma2, const MoveWord& w,
                           std::size_t n_stab = 0, bool negate = false);

// ---------------------------------------------------------------------------
// Move invariance

using DeltaFunction = std::function<ObstructionClass(const Move&, const SurfaceLabel&, std::size_t)>;

struct InvarianceConfig {
  std::size_t samples = 1000;  // per move kind
  std::int64_t box = 3;
  std::size_t n_stab = 1;  // stabilizations used for DeltaSpin draws
  std::uint64_t seed = 0x5eed;
};

struct InvarianceFailure {
  Move move;
  SurfaceLabel sigma;
  std::string reason;
};

struct InvarianceReport {
  std::size_t moves_checked = 0;
  std::vector<InvarianceFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Draws `samples` random moves of every kind (and a random label per draw)
// and checks psi(delta) = 0 and validate(delta) = ok. `delta_fn` replaces
// the move deltas, for mutation testing.
InvarianceReport check_move_invariance(const InvarianceConfig& config,
                                       const DeltaFunction& delta_fn = {});

// ---------------------------------------------------------------------------
// Exhaustive search

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t limit);
  std::uint64_t required() const { return required_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

inline constexpr std::uint64_t kDefaultMaxEnumeration = 10'000'000;
inline constexpr std::size_t kMaxSearchWordLength = 6;

// OBSTRUKT_MAX_ENUM when set to a positive integer, else the default.
std::uint64_t max_enumeration_from_env();

struct SearchConfig {
  std::size_t max_word_len = 2;
  std::int64_t box = 1;
  std::size_t n_stab = 0;
  std::uint64_t max_evaluations = kDefaultMaxEnumeration;
  std::size_t max_recorded = 64;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SearchReport {
  SurfaceLabel sigma1;
  SurfaceLabel sigma2;
  std::size_t max_word_len = 0;
  std::int64_t box = 0;
  std::uint64_t moves_enumerated = 0;  // all parameter choices in the box
  std::uint64_t alphabet_size = 0;     // distinct nonzero deltas
  std::uint64_t evaluations = 0;       // delta evaluations plus word lookups
  std::uint64_t words_covered = 0;     // multisets of distinct deltas, saturating
  std::uint64_t vanishing_count = 0;
  // Up to max_recorded vanishing words, shortest first then by alphabet order.
  std::vector<MoveWord> vanishing_words;
};

// Enumerates every multiset of at most max_word_len moves with parameters in
// [-box, box]^4 and records those whose obstruction vanishes. Throws
// BudgetExceeded before enumerating when the work exceeds max_evaluations,
// and std::invalid_argument when max_word_len > kMaxSearchWordLength.
SearchReport brute_force_search(const SurfaceLabel& sigma1, const SurfaceLabel& sigma2,
                                const SearchConfig& config);

// ---------------------------------------------------------------------------
// Certification over a label box

struct CertifyConfig {
  std::int64_t label_box = 1;
  std::size_t word_len = 2;
  std::int64_t param_box = 1;
  std::size_t n_stab = 0;
  std::size_t words_per_pair = 200;
  std::size_t oracle_pairs = 2;  // leading pairs also checked by brute force
  std::uint64_t max_evaluations = kDefaultMaxEnumeration;
  std::uint64_t seed = 0x5eed;
  unsigned threads = 0;
};

struct CertificateRecord {
  SurfaceLabel sigma1;
  SurfaceLabel sigma2;
  AugVector psi;
  std::uint64_t words_checked = 0;
  bool vanishing_found = false;
  bool psi_matches_target = true;
  bool oracle_checked = false;
};

struct CertifyReport {
  std::vector<CertificateRecord> records;
  bool vacuous() const { return records.empty(); }
  bool all_certified() const;
};

// Random words of length <= word_len, every move kind (DeltaSpin when
// n_stab > 0), parameters in [-param_box, param_box]^4. Records come out in
// canonical (sigma1, sigma2) order and do not depend on the thread count.
CertifyReport certify_theorem(const CertifyConfig& config);

// A random word as drawn by certify_theorem.
MoveWord random_word(std::mt19937_64& rng, std::size_t max_len, std::int64_t box, std::size_t n_stab);

// All labels with exponents in [-box, box]^2, ascending.
std::vector<SurfaceLabel> labels_in_box(std::int64_t box);

}  // namespace obstrukt

#endif  // OBSTRUKT_VERIFIER_HPP
