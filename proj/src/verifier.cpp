#include "obstrukt/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <iterator>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <utility>

#include "obstrukt/word_syntax.hpp"

namespace obstrukt {

AugVector psi(const ObstructionClass& c) {
  if (augmentation(c.d()) != 0) throw PsiNotApplicable("psi: d-component is not in J");
  if (augmentation(c.r()) != 0) throw PsiNotApplicable("psi: r-component has nonzero augmentation");
  return F_map(c.d()) - weight_N(c.r());
}

std::string word_digest(const MoveWord& w) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : format_word(w)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

ObstructionClass evaluate_obstruction(const SurfaceLabel& sigma1, const SurfaceLabel& sigma2,
                                      const MoveWord& w, std::size_t n_stab, bool negate) {
  ObstructionClass moved = apply_word(w, sigma2, ObstructionClass(n_stab));
  ObstructionClass target = label_difference(sigma1, sigma2, n_stab);
  return negate ? target + moved : target - moved;
}

Verdict decide_obstruction(const SurfaceLabel& sigma1, const SurfaceLabel& sigma2, const MoveWord& w,
                           std::size_t n_stab, bool negate) {
  const ObstructionClass o = evaluate_obstruction(sigma1, sigma2, w, n_stab, negate);
  Verdict v;
  v.psi_value = psi(o);
  v.nonvanishing = !is_zero(o);
  v.witness = {sigma1, sigma2, w.size(), word_digest(w)};
  return v;
}

// ---------------------------------------------------------------------------
// Move invariance

InvarianceReport check_move_invariance(const InvarianceConfig& config,
                                       const DeltaFunction& delta_fn) {
  InvarianceReport report;
  std::mt19937_64 rng(config.seed);
  const std::size_t n_stab = std::max<std::size_t>(config.n_stab, 1);
  std::uniform_int_distribution<std::int64_t> coord(-config.box, config.box);
  for (MoveKind kind : kAllMoveKinds) {
    for (std::size_t i = 0; i < config.samples; ++i) {
      const Move m = random_move(rng, kind, config.box, n_stab);
      const std::int64_t a = coord(rng);
      const SurfaceLabel sigma(a, coord(rng));
      const ObstructionClass d = delta_fn ? delta_fn(m, sigma, n_stab) : delta(m, sigma, n_stab);
      ++report.moves_checked;
      if (auto violation = validate(d, n_stab)) {
        report.failures.push_back({m, sigma, violation->message});
        continue;
      }
      try {
        if (AugVector p = psi(d); !p.is_zero()) {
          std::ostringstream os;
          os << "psi(delta) = " << p << ", expected 0";
          report.failures.push_back({m, sigma, os.str()});
        }
      } catch (const PsiNotApplicable& ex) {
        report.failures.push_back({m, sigma, ex.what()});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Exhaustive search

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t limit)
    : std::runtime_error("enumeration needs " + std::to_string(required) +
                         " evaluations, limit is " + std::to_string(limit)),
      required_(required),
      limit_(limit) {}

std::uint64_t max_enumeration_from_env() {
  const char* raw = std::getenv("OBSTRUKT_MAX_ENUM");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxEnumeration;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return kDefaultMaxEnumeration;
  return v;
}

namespace {

// Obstruction classes flattened to sorted (slot, exponents, coefficient)
// entries with 64-bit coefficients. Slot 0, 1, 2 are d, g, r; slots 3 + 2k
// and 4 + 2k are the k-th stabilization pair. Independent of RingElement.
struct FlatEntry {
  std::uint32_t slot;
  GroupElement::Exponents exps;
  std::int64_t coef;

  bool key_less(const FlatEntry& o) const {
    return slot != o.slot ? slot < o.slot : exps < o.exps;
  }
  bool operator==(const FlatEntry&) const = default;
};

using FlatClass = std::vector<FlatEntry>;

void append_flat(FlatClass& out, std::uint32_t slot, const RingElement& x) {
  for (const auto& t : x.terms()) {
    if (!t.coef.fits_slong_p()) throw std::overflow_error("coefficient exceeds search range");
    out.push_back({slot, t.elem.exponents(), t.coef.get_si()});
  }
}

FlatClass flatten(const ObstructionClass& c) {
  FlatClass out;
  append_flat(out, 0, c.d());
  append_flat(out, 1, c.g());
  append_flat(out, 2, c.r());
  for (std::size_t k = 0; k < c.n_stab(); ++k) {
    append_flat(out, static_cast<std::uint32_t>(3 + 2 * k), c.stab()[k].s);
    append_flat(out, static_cast<std::uint32_t>(4 + 2 * k), c.stab()[k].t);
  }
  return out;  // RingElement terms are already sorted within each slot
}

// a + sign * b
FlatClass combine(const FlatClass& a, const FlatClass& b, int sign) {
  FlatClass out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  auto signed_coef = [sign](std::int64_t c) {
    if (sign > 0) return c;
    if (c == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("search overflow");
    return -c;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key_less(b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key_less(a[i])) {
      out.push_back({b[j].slot, b[j].exps, signed_coef(b[j].coef)});
      ++j;
    } else {
      std::int64_t c;
      if (__builtin_add_overflow(a[i].coef, signed_coef(b[j].coef), &c))
        throw std::overflow_error("search overflow");
      if (c != 0) out.push_back({a[i].slot, a[i].exps, c});
      ++i;
      ++j;
    }
  }
  return out;
}

struct FlatHash {
  std::size_t operator()(const FlatClass& f) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (const auto& x : f) {
      mix(x.slot);
      for (auto v : x.exps) mix(static_cast<std::uint64_t>(v));
      mix(static_cast<std::uint64_t>(x.coef));
    }
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t saturate(const Integer& x) {
  if (x > Integer(std::to_string(std::numeric_limits<std::uint64_t>::max())))
    return std::numeric_limits<std::uint64_t>::max();
  return std::stoull(x.get_str());
}

// C(n + k - 1, k): multisets of size k from n items.
Integer multisets(std::uint64_t n, std::size_t k) {
  Integer r;
  if (n == 0) return k == 0 ? Integer(1) : Integer(0);
  mpz_bin_uiui(r.get_mpz_t(), n + k - 1, k);
  return r;
}

std::vector<GroupElement> box_elements(std::int64_t box) {
  std::vector<GroupElement> out;
  for (std::int64_t a = -box; a <= box; ++a)
    for (std::int64_t b = -box; b <= box; ++b)
      for (std::int64_t c = -box; c <= box; ++c)
        for (std::int64_t d = -box; d <= box; ++d) out.emplace_back(a, b, c, d);
  return out;
}

// Moves with all parameters among m group elements.
Integer move_count(const Integer& mm, std::size_t n_stab) {
  Integer sq = mm * mm;
  return 2 + 2 * sq + 2 * sq + 4 * mm + mm + Integer(std::to_string(n_stab)) * 2 * sq;
}

template <class Fn>
void for_each_move(const std::vector<GroupElement>& elems, std::size_t n_stab, Fn&& fn) {
  for (int u = 1; u <= 2; ++u) fn(Move(XiSpin{u}));
  for (int u = 1; u <= 2; ++u)
    for (const auto& p : elems)
      for (const auto& q : elems) fn(Move(EtaSpin{u, p, q}));
  for (int u = 1; u <= 2; ++u)
    for (const auto& p : elems)
      for (const auto& q : elems) fn(Move(RhoSpin{u, p, q}));
  for (int u = 1; u <= 2; ++u)
    for (int v = 1; v <= 2; ++v)
      for (const auto& b : elems) fn(Move(TauSpin{u, v, b}));
  for (const auto& t : elems) fn(Move(BasepointLoop{t}));
  for (std::size_t k = 1; k <= n_stab; ++k)
    for (int side = 1; side <= 2; ++side)
      for (const auto& p : elems)
        for (const auto& q : elems)
          fn(Move(DeltaSpin{static_cast<std::int64_t>(k), side, p, q}));
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(i) for i in [0, n) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct Found {
  std::vector<std::size_t> indices;  // nondecreasing alphabet indices
  bool operator<(const Found& o) const {
    return indices.size() != o.indices.size() ? indices.size() < o.indices.size()
                                              : indices < o.indices;
  }
};

class Searcher {
 public:
  Searcher(const std::vector<FlatClass>& alphabet,
           const std::unordered_map<FlatClass, std::size_t, FlatHash>& index, std::size_t max_recorded)
      : alphabet_(alphabet), index_(index), max_recorded_(max_recorded) {}

  // Every multiset whose first element is `first` and whose size is `size`,
  // given need = target - alphabet[first].
  void run(std::size_t first, std::size_t size, const FlatClass& need) {
    prefix_.assign(1, first);
    extend(size, need);
  }

  std::uint64_t lookups = 0;
  std::uint64_t found_count = 0;
  std::vector<Found> found;

 private:
  void extend(std::size_t size, const FlatClass& need) {
    const std::size_t last = prefix_.back();
    if (prefix_.size() + 1 == size) {
      ++lookups;
      auto it = index_.find(need);
      if (it != index_.end() && it->second >= last) record(it->second);
      return;
    }
    for (std::size_t i = last; i < alphabet_.size(); ++i) {
      prefix_.push_back(i);
      extend(size, combine(need, alphabet_[i], -1));
      prefix_.pop_back();
    }
  }

  void record(std::size_t tail) {
    ++found_count;
    Found f{prefix_};
    f.indices.push_back(tail);
    // Keep only the smallest max_recorded candidates.
    found.push_back(std::move(f));
    if (found.size() > 4 * max_recorded_ + 64) {
      std::sort(found.begin(), found.end());
      found.resize(max_recorded_);
    }
  }

  const std::vector<FlatClass>& alphabet_;
  const std::unordered_map<FlatClass, std::size_t, FlatHash>& index_;
  std::size_t max_recorded_;
  std::vector<std::size_t> prefix_;
};

}  // namespace

SearchReport brute_force_search(const SurfaceLabel& sigma1, const SurfaceLabel& sigma2,
                                const SearchConfig& config) {
  if (config.max_word_len > kMaxSearchWordLength)
    throw std::invalid_argument("max word length " + std::to_string(config.max_word_len) +
                                " exceeds the limit " + std::to_string(kMaxSearchWordLength));
  if (config.box < 0) throw std::invalid_argument("parameter box radius must be non-negative");

  SearchReport report;
  report.sigma1 = sigma1;
  report.sigma2 = sigma2;
  report.max_word_len = config.max_word_len;
  report.box = config.box;

  Integer side = 2 * Integer(std::to_string(config.box)) + 1;
  Integer per_box = side * side * side * side;
  const Integer n_moves = move_count(per_box, config.n_stab);
  const Integer limit(std::to_string(config.max_evaluations));
  if (n_moves > limit) throw BudgetExceeded(saturate(n_moves), config.max_evaluations);
  const auto elems = box_elements(config.box);

  // Alphabet of distinct nonzero deltas, in first-appearance order.
  std::vector<FlatClass> alphabet;
  std::vector<Move> representative;
  std::unordered_map<FlatClass, std::size_t, FlatHash> index;
  for_each_move(elems, config.n_stab, [&](const Move& m) {
    ++report.moves_enumerated;
    FlatClass f = flatten(delta(m, sigma2, config.n_stab));
    if (f.empty()) return;
    if (index.try_emplace(f, alphabet.size()).second) {
      alphabet.push_back(std::move(f));
      representative.push_back(m);
    }
  });
  report.alphabet_size = alphabet.size();
  report.evaluations = report.moves_enumerated;

  Integer lookups_needed = 0;
  Integer covered = 0;
  for (std::size_t k = 0; k <= config.max_word_len; ++k) {
    covered += multisets(alphabet.size(), k);
    if (k >= 1) lookups_needed += multisets(alphabet.size(), k - 1);
  }
  report.words_covered = saturate(covered);
  if (n_moves + lookups_needed > limit)
    throw BudgetExceeded(saturate(n_moves + lookups_needed), config.max_evaluations);

  const FlatClass target = flatten(label_difference(sigma1, sigma2, config.n_stab));
  std::vector<Found> found;

  ++report.evaluations;
  if (target.empty()) {
    ++report.vanishing_count;
    found.push_back({});
  }
  if (config.max_word_len >= 1) {
    ++report.evaluations;
    if (auto it = index.find(target); it != index.end()) {
      ++report.vanishing_count;
      found.push_back({{it->second}});
    }
  }

  for (std::size_t size = 2; size <= config.max_word_len; ++size) {
    const unsigned threads = resolve_threads(config.threads);
    // One Searcher per first index keeps the merge independent of scheduling.
    std::vector<Searcher> per_first(alphabet.size(), Searcher(alphabet, index, config.max_recorded));
    parallel_for(alphabet.size(), threads, [&](std::size_t first) {
      per_first[first].run(first, size, combine(target, alphabet[first], -1));
    });
    for (auto& s : per_first) {
      report.evaluations += s.lookups;
      report.vanishing_count += s.found_count;
      std::move(s.found.begin(), s.found.end(), std::back_inserter(found));
      if (found.size() > 4 * config.max_recorded + 64) {
        std::sort(found.begin(), found.end());
        found.resize(config.max_recorded);
      }
    }
  }

  std::sort(found.begin(), found.end());
  if (found.size() > config.max_recorded) found.resize(config.max_recorded);
  for (const auto& f : found) {
    MoveWord w;
    for (auto i : f.indices) w.push_back(representative[i]);
    report.vanishing_words.push_back(std::move(w));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Certification

std::vector<SurfaceLabel> labels_in_box(std::int64_t box) {
  std::vector<SurfaceLabel> out;
  for (std::int64_t a = -box; a <= box; ++a)
    for (std::int64_t b = -box; b <= box; ++b) out.emplace_back(a, b);
  return out;
}

MoveWord random_word(std::mt19937_64& rng, std::size_t max_len, std::int64_t box, std::size_t n_stab) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  const std::size_t n_kinds = n_stab > 0 ? 6 : 5;
  std::uniform_int_distribution<std::size_t> kind(0, n_kinds - 1);
  MoveWord w(len(rng));
  for (auto& m : w) m = random_move(rng, kAllMoveKinds[kind(rng)], box, n_stab);
  return w;
}

bool CertifyReport::all_certified() const {
  return std::all_of(records.begin(), records.end(), [](const CertificateRecord& r) {
    return !r.vanishing_found && r.psi_matches_target && !r.psi.is_zero();
  });
}

CertifyReport certify_theorem(const CertifyConfig& config) {
  const auto labels = labels_in_box(config.label_box);
  std::vector<std::pair<SurfaceLabel, SurfaceLabel>> pairs;
  for (const auto& a : labels)
    for (const auto& b : labels)
      if (a != b) pairs.emplace_back(a, b);

  CertifyReport report;
  report.records.resize(pairs.size());
  parallel_for(pairs.size(), resolve_threads(config.threads), [&](std::size_t i) {
    const auto& [s1, s2] = pairs[i];
    std::seed_seq seq{config.seed,
                      static_cast<std::uint64_t>(s1.sigma()[0]), static_cast<std::uint64_t>(s1.sigma()[1]),
                      static_cast<std::uint64_t>(s2.sigma()[0]), static_cast<std::uint64_t>(s2.sigma()[1])};
    std::mt19937_64 rng(seq);
    const AugVector expected = AugVector::from(s1.sigma()) - AugVector::from(s2.sigma());

    CertificateRecord rec;
    rec.sigma1 = s1;
    rec.sigma2 = s2;
    rec.psi = psi(label_difference(s1, s2, config.n_stab));
    rec.psi_matches_target = rec.psi == expected;
    for (std::size_t k = 0; k < config.words_per_pair; ++k) {
      const MoveWord w = random_word(rng, config.word_len, config.param_box, config.n_stab);
      const Verdict v = decide_obstruction(s1, s2, w, config.n_stab);
      ++rec.words_checked;
      if (!v.nonvanishing) rec.vanishing_found = true;
      if (v.psi_value != expected) rec.psi_matches_target = false;
    }
    if (i < config.oracle_pairs) {
      SearchConfig sc;
      sc.max_word_len = std::min<std::size_t>(config.word_len, 2);
      sc.box = std::min<std::int64_t>(config.param_box, 1);
      sc.n_stab = config.n_stab;
      sc.max_evaluations = config.max_evaluations;
      sc.threads = 1;
      const SearchReport sr = brute_force_search(s1, s2, sc);
      rec.words_checked += sr.words_covered;
      if (sr.vanishing_count > 0) rec.vanishing_found = true;
      rec.oracle_checked = true;
    }
    report.records[i] = std::move(rec);
  });
  return report;
}

}  // namespace obstrukt
