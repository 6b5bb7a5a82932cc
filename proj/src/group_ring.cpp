#include "obstrukt/group_ring.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>
#include <utility>

namespace obstrukt {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("group exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("group exponent overflow");
  return r;
}

bool term_less(const Term& a, const Term& b) { return a.elem < b.elem; }

// Sorts, merges equal group elements and drops zero coefficients.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].elem == acc.elem; ++j) acc.coef += terms[j].coef;
    if (acc.coef != 0) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists, b scaled by sign.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->elem < ib->elem)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->elem < ia->elem) {
      out.push_back({ib->elem, sign > 0 ? ib->coef : Integer(-ib->coef)});
      ++ib;
    } else {
      Integer c = sign > 0 ? Integer(ia->coef + ib->coef) : Integer(ia->coef - ib->coef);
      if (c != 0) out.push_back({ia->elem, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::operator*(const GroupElement& other) const {
  GroupElement r;
  for (std::size_t i = 0; i < kRank; ++i) r.exps_[i] = checked_add(exps_[i], other.exps_[i]);
  return r;
}

GroupElement GroupElement::inverse() const {
  GroupElement r;
  for (std::size_t i = 0; i < kRank; ++i) {
    if (exps_[i] == std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("group exponent overflow");
    r.exps_[i] = -exps_[i];
  }
  return r;
}

GroupElement GroupElement::pow(std::int64_t k) const {
  GroupElement r;
  for (std::size_t i = 0; i < kRank; ++i) r.exps_[i] = checked_mul(exps_[i], k);
  return r;
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  return os << '(' << g[0] << ',' << g[1] << ',' << g[2] << ',' << g[3] << ')';
}

std::size_t hash_value(const GroupElement& g) {
  std::size_t seed = 0;
  for (auto x : g.exponents()) hash_combine(seed, std::hash<std::int64_t>{}(x));
  return seed;
}

// ---------------------------------------------------------------------------
// AugVector

AugVector AugVector::from(const GroupElement& g) {
  AugVector a;
  for (std::size_t i = 0; i < kRank; ++i) a.v[i] = Integer(std::to_string(g[i]));
  return a;
}

bool AugVector::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

AugVector& AugVector::operator+=(const AugVector& o) {
  for (std::size_t i = 0; i < kRank; ++i) v[i] += o.v[i];
  return *this;
}

AugVector& AugVector::operator-=(const AugVector& o) {
  for (std::size_t i = 0; i < kRank; ++i) v[i] -= o.v[i];
  return *this;
}

AugVector operator*(const Integer& k, const AugVector& a) {
  AugVector r;
  for (std::size_t i = 0; i < kRank; ++i) r.v[i] = k * a.v[i];
  return r;
}

std::ostream& operator<<(std::ostream& os, const AugVector& a) {
  return os << '[' << a.v[0] << ',' << a.v[1] << ',' << a.v[2] << ',' << a.v[3] << ']';
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(const GroupElement& g) : terms_{Term{g, 1}} {}

RingElement::RingElement(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(terms_); }

RingElement::RingElement(std::initializer_list<Term> terms) : terms_(terms) { normalize(terms_); }

Integer RingElement::coefficient(const GroupElement& g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{g, 0}, term_less);
  return (it != terms_.end() && it->elem == g) ? it->coef : Integer(0);
}

RingElement& RingElement::operator+=(const RingElement& o) {
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  *this = *this * o;
  return *this;
}

RingElement& RingElement::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= k;
  }
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) prod.push_back({x.elem * y.elem, x.coef * y.coef});
  return RingElement(std::move(prod));
}

RingElement RingElement::translated(const GroupElement& h) const {
  // Translation preserves the lexicographic order, so no resort is needed.
  RingElement r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({h * t.elem, t.coef});
  return r;
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) {
  if (x.is_zero()) return os << '0';
  bool first = true;
  for (const auto& t : x.terms()) {
    if (t.coef < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    Integer mag = abs(t.coef);
    if (mag != 1) os << mag << '*';
    os << t.elem;
    first = false;
  }
  return os;
}

std::size_t hash_value(const RingElement& x) {
  std::size_t seed = x.size();
  for (const auto& t : x.terms()) {
    hash_combine(seed, hash_value(t.elem));
    hash_combine(seed, std::hash<std::string>{}(t.coef.get_str(16)));
  }
  return seed;
}

// ---------------------------------------------------------------------------
// J and J^2

NotInJ::NotInJ(Integer augmentation)
    : std::domain_error("element is not in the augmentation ideal (augmentation " +
                        augmentation.get_str() + ")"),
      augmentation_(std::move(augmentation)) {}

namespace {
std::string describe(const AugVector& w) {
  std::ostringstream os;
  os << "element is in J but not in J^2 (F = " << w << ")";
  return os.str();
}
}  // namespace

NotInJ2::NotInJ2(AugVector witness) : std::domain_error(describe(witness)), witness_(std::move(witness)) {}

RingElement involute(const RingElement& a) {
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.push_back({t.elem.inverse(), t.coef});
  return RingElement(std::move(terms));
}

Integer augmentation(const RingElement& a) {
  Integer s = 0;
  for (const auto& t : a.terms()) s += t.coef;
  return s;
}

AugVector weight_N(const RingElement& a) {
  AugVector w;
  Integer exp;
  for (const auto& t : a.terms()) {
    for (std::size_t i = 0; i < kRank; ++i) {
      if (t.elem[i] == 0) continue;
      mpz_set_si(exp.get_mpz_t(), t.elem[i]);
      w.v[i] += t.coef * exp;
    }
  }
  return w;
}

AugVector F_map(const RingElement& a) {
  Integer aug = augmentation(a);
  if (aug != 0) throw NotInJ(std::move(aug));
  return weight_N(a);
}

bool is_in_J2(const RingElement& a) { return augmentation(a) == 0 && weight_N(a).is_zero(); }

GroupElement reduce_mod_J2(const RingElement& a) {
  AugVector f = F_map(a);
  GroupElement::Exponents exps{};
  for (std::size_t i = 0; i < kRank; ++i) {
    if (!f.v[i].fits_slong_p()) throw std::overflow_error("F value exceeds the exponent range");
    exps[i] = f.v[i].get_si();
  }
  return GroupElement(exps);
}

RingElement J2Generator::expand() const {
  RingElement x = (RingElement(p) - e) * (RingElement(q) - e);
  return coef * x.translated(h);
}

RingElement expand(const J2Decomposition& terms) {
  RingElement sum;
  for (const auto& t : terms) sum += t.expand();
  return sum;
}

namespace {

// Collects J^2 generators keyed by (h, p, q) with p >= q.
class GeneratorAccumulator {
 public:
  void add(const Integer& coef, GroupElement p, GroupElement q) {
    if (coef == 0 || p.is_identity() || q.is_identity()) return;
    if (p < q) std::swap(p, q);
    acc_[{e, p, q}] += coef;
  }

  J2Decomposition finish() const {
    J2Decomposition out;
    for (const auto& [key, coef] : acc_) {
      if (coef == 0) continue;
      const auto& [h, p, q] = key;
      out.push_back({coef, h, p, q});
    }
    return out;
  }

 private:
  std::map<std::tuple<GroupElement, GroupElement, GroupElement>, Integer> acc_;
};

// Appends scale * T(g, m), where g^m - e = m (g - e) + sum T(g, m).
void power_correction(const GroupElement& g, std::int64_t m, const Integer& scale,
                      GeneratorAccumulator& acc) {
  if (m == 0 || m == 1) return;
  if (m < 0) {
    // g^m - e = -(g^-m - e) - (g^m - e)(g^-m - e)
    if (m == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("exponent overflow");
    power_correction(g, -m, -scale, acc);
    acc.add(-scale, g.pow(m), g.pow(-m));
    return;
  }
  if (m % 2 == 0) {
    // g^2k - e = 2 (g^k - e) + (g^k - e)^2
    const std::int64_t k = m / 2;
    power_correction(g, k, Integer(2 * scale), acc);
    acc.add(scale, g.pow(k), g.pow(k));
    return;
  }
  // g^(2k+1) - e = (g^2k - e) + (g - e) + (g^2k - e)(g - e)
  power_correction(g, m - 1, scale, acc);
  acc.add(scale, g.pow(m - 1), g);
}

}  // namespace

J2Decomposition express_in_J2(const RingElement& a) {
  AugVector f = F_map(a);
  if (!f.is_zero()) throw NotInJ2(std::move(f));

  // With sum c = 0, a = sum c (h - e). Each h - e is split along the axes:
  //   h - e = sum_i (g_i^{a_i} - e) + sum_{i>=1} (p_{i-1} - e)(g_i^{a_i} - e)
  // with prefix products p_i, and each power reduced to a_i (g_i - e) plus
  // J^2 corrections. The linear parts sum to F(a) = 0 and cancel.
  GeneratorAccumulator acc;
  for (const auto& t : a.terms()) {
    GroupElement prefix = e;
    for (std::size_t i = 0; i < kRank; ++i) {
      const std::int64_t m = t.elem[i];
      if (m == 0) continue;
      const GroupElement step = GroupElement::basis(i).pow(m);
      power_correction(GroupElement::basis(i), m, t.coef, acc);
      acc.add(t.coef, prefix, step);
      prefix = prefix * step;
    }
  }
  return acc.finish();
}

}  // namespace obstrukt
