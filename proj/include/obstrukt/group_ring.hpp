#ifndef OBSTRUKT_GROUP_RING_HPP
#define OBSTRUKT_GROUP_RING_HPP

// Exact arithmetic in the integral group ring Z[Z^4], its augmentation ideal J
// and membership in J^2.
//
// Group elements are written additively as exponent vectors; the group
// operation is coordinatewise addition. Ring elements are finite sparse sums
// of group elements with arbitrary-precision coefficients, kept in canonical
// (ascending lexicographic) order with no zero coefficients.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace obstrukt {

using Integer = mpz_class;

inline constexpr std::size_t kRank = 4;

class GroupElement {
 public:
  using Exponents = std::array<std::int64_t, kRank>;

  constexpr GroupElement() = default;
  constexpr explicit GroupElement(const Exponents& exps) : exps_(exps) {}
  constexpr GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
      : exps_{a, b, c, d} {}

  static constexpr GroupElement identity() { return {}; }
  // Basis element e_{i+1}.
  static constexpr GroupElement basis(std::size_t i) {
    GroupElement g;
    g.exps_[i] = 1;
    return g;
  }

  const Exponents& exponents() const { return exps_; }
  std::int64_t operator[](std::size_t i) const { return exps_[i]; }
  bool is_identity() const { return *this == GroupElement{}; }

  // Throws std::overflow_error if an exponent leaves the int64 range.
  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;
  GroupElement pow(std::int64_t k) const;

  friend constexpr bool operator==(const GroupElement&, const GroupElement&) = default;
  friend constexpr auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  Exponents exps_{};
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

// The distinguished directions g1 = e1, g2 = e2 spanning pi_1 of the base surface.
inline constexpr GroupElement g1{1, 0, 0, 0};
inline constexpr GroupElement g2{0, 1, 0, 0};
inline constexpr GroupElement e{0, 0, 0, 0};

// A plain vector in Z^4 (values of F and of the weight map).
struct AugVector {
  std::array<Integer, kRank> v;

  AugVector() : v{0, 0, 0, 0} {}
  AugVector(long a, long b, long c, long d) : v{a, b, c, d} {}
  static AugVector from(const GroupElement& g);

  bool is_zero() const;
  AugVector& operator+=(const AugVector& o);
  AugVector& operator-=(const AugVector& o);
  friend AugVector operator+(AugVector a, const AugVector& b) { return a += b; }
  friend AugVector operator-(AugVector a, const AugVector& b) { return a -= b; }
  friend AugVector operator*(const Integer& k, const AugVector& a);
  friend bool operator==(const AugVector& a, const AugVector& b) { return a.v == b.v; }
};

std::ostream& operator<<(std::ostream& os, const AugVector& a);

struct Term {
  GroupElement elem;
  Integer coef;

  friend bool operator==(const Term& a, const Term& b) {
    return a.elem == b.elem && a.coef == b.coef;
  }
};

class RingElement {
 public:
  RingElement() = default;
  // The element 1*g.
  RingElement(const GroupElement& g);  // NOLINT(google-explicit-constructor)
  // Arbitrary term list; duplicates are merged and zeros dropped.
  explicit RingElement(std::vector<Term> terms);
  RingElement(std::initializer_list<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of g (zero when absent).
  Integer coefficient(const GroupElement& g) const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  RingElement& operator*=(const Integer& k);
  RingElement operator-() const;

  bool operator==(const RingElement& o) const { return terms_ == o.terms_; }

  // Left translation of every term by h.
  RingElement translated(const GroupElement& h) const;

 private:
  std::vector<Term> terms_;
};

// Free so that group elements convert implicitly: g1 - e, (g1 - e) * (g2 - e).
inline RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
inline RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
RingElement operator*(const RingElement& a, const RingElement& b);
inline RingElement operator*(const Integer& k, RingElement a) { return a *= k; }
inline RingElement operator*(long k, RingElement a) { return a *= Integer(k); }

std::ostream& operator<<(std::ostream& os, const RingElement& x);
std::size_t hash_value(const GroupElement& g);
std::size_t hash_value(const RingElement& x);

// Raised by operations whose argument must lie in J.
class NotInJ : public std::domain_error {
 public:
  explicit NotInJ(Integer augmentation);
  const Integer& augmentation() const { return augmentation_; }

 private:
  Integer augmentation_;
};

// Raised by express_in_J2 when the argument is in J but not in J^2.
class NotInJ2 : public std::domain_error {
 public:
  explicit NotInJ2(AugVector witness);
  // F of the rejected element, nonzero.
  const AugVector& witness() const { return witness_; }

 private:
  AugVector witness_;
};

// g -> g^{-1} extended linearly.
RingElement involute(const RingElement& a);

// Sum of coefficients.
Integer augmentation(const RingElement& a);

// sum c_i h_i  ->  sum c_i * exponents(h_i), on all of Z[Z^4].
AugVector weight_N(const RingElement& a);

// The map J -> Z^4, (h - e) -> exponents(h). Throws NotInJ off J.
AugVector F_map(const RingElement& a);

// For a in J, a lies in J^2 iff F(a) = 0; elements outside J are never in J^2.
bool is_in_J2(const RingElement& a);

// Normal form in J/J^2: the g with a = (g - e) mod J^2. Throws NotInJ, and
// std::overflow_error if F(a) does not fit the exponent range.
GroupElement reduce_mod_J2(const RingElement& a);

// One generator c * h * (p - e) * (q - e) of J^2.
struct J2Generator {
  Integer coef;
  GroupElement h;
  GroupElement p;
  GroupElement q;

  RingElement expand() const;
  friend bool operator==(const J2Generator&, const J2Generator&) = default;
};

using J2Decomposition = std::vector<J2Generator>;

// Writes a as a sum of J^2 generators. The result is canonical: generators
// are merged, zero ones dropped, p >= q lexicographically, sorted ascending
// by (h, p, q). Throws NotInJ when a is outside J and NotInJ2 when F(a) != 0.
J2Decomposition express_in_J2(const RingElement& a);

RingElement expand(const J2Decomposition& terms);

}  // namespace obstrukt

template <>
struct std::hash<obstrukt::GroupElement> {
  std::size_t operator()(const obstrukt::GroupElement& g) const { return obstrukt::hash_value(g); }
};

template <>
struct std::hash<obstrukt::RingElement> {
  std::size_t operator()(const obstrukt::RingElement& x) const { return obstrukt::hash_value(x); }
};

#endif  // OBSTRUKT_GROUP_RING_HPP
