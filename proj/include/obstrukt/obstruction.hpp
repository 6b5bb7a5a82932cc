#ifndef OBSTRUKT_OBSTRUCTION_HPP
#define OBSTRUKT_OBSTRUCTION_HPP

// Obstruction classes in J (+) Z[pi]^2, optionally extended by one pair of
// Z[pi] coordinates per external stabilization.
//
// The three main components are the equivariant pairings of a disk class with
// D_0, G and R. Differences of disk classes, tubing with the spheres m_u, R, G
// and the effect of every generator move are all expressed as elements here.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "obstrukt/group_ring.hpp"

namespace obstrukt {

struct StabPair {
  RingElement s;
  RingElement t;

  bool operator==(const StabPair&) const = default;
};

// A pi_1 label of the base surface: exponents 3 and 4 must vanish.
class SurfaceLabel {
 public:
  SurfaceLabel() = default;
  // Throws std::invalid_argument if sigma has nonzero e3 or e4 exponent.
  explicit SurfaceLabel(const GroupElement& sigma);
  SurfaceLabel(std::int64_t a, std::int64_t b) : sigma_(a, b, 0, 0) {}

  static bool is_valid(const GroupElement& sigma) { return sigma[2] == 0 && sigma[3] == 0; }

  const GroupElement& sigma() const { return sigma_; }
  bool operator==(const SurfaceLabel&) const = default;
  auto operator<=>(const SurfaceLabel&) const = default;

 private:
  GroupElement sigma_;
};

class ObstructionClass {
 public:
  // The zero class with n stabilization pairs.
  explicit ObstructionClass(std::size_t n_stab = 0);
  ObstructionClass(RingElement d, RingElement g, RingElement r, std::vector<StabPair> stab = {});

  const RingElement& d() const { return d_; }
  const RingElement& g() const { return g_; }
  const RingElement& r() const { return r_; }
  const std::vector<StabPair>& stab() const { return stab_; }
  std::size_t n_stab() const { return stab_.size(); }

  // Binary operations require equal stabilization counts (std::invalid_argument).
  ObstructionClass& operator+=(const ObstructionClass& o);
  ObstructionClass& operator-=(const ObstructionClass& o);
  ObstructionClass operator-() const;
  friend ObstructionClass operator+(ObstructionClass a, const ObstructionClass& b) { return a += b; }
  friend ObstructionClass operator-(ObstructionClass a, const ObstructionClass& b) { return a -= b; }

  bool operator==(const ObstructionClass&) const = default;

 private:
  RingElement d_;
  RingElement g_;
  RingElement r_;
  std::vector<StabPair> stab_;
};

std::ostream& operator<<(std::ostream& os, const ObstructionClass& c);

// [D_{sigma1}] - [D_{sigma2}] = (0, 0, sigma2 - sigma1).
ObstructionClass label_difference(const SurfaceLabel& sigma1, const SurfaceLabel& sigma2,
                                  std::size_t n_stab = 0);

// Tubing into a meridian m_u along paths gamma+ and gamma-: adds (gamma+ - gamma-, 0, 0).
ObstructionClass tube_meridian(const ObstructionClass& c, const GroupElement& gamma_plus,
                               const GroupElement& gamma_minus);
// Tubing into R: adds (0, gamma', 0).
ObstructionClass tube_R(const ObstructionClass& c, const GroupElement& gamma_prime);
// Tubing into G: adds (0, 0, gamma).
ObstructionClass tube_G(const ObstructionClass& c, const GroupElement& gamma);

// Left translation of every component by h.
ObstructionClass scalar_mul(const GroupElement& h, const ObstructionClass& c);

bool is_zero(const ObstructionClass& c);

struct Violation {
  enum class Kind { NotInJ, StabCountMismatch };
  Kind kind;
  std::string message;
};

// Checks that d lies in J and, when given, that the stab list has the
// expected length.
std::optional<Violation> validate(const ObstructionClass& c,
                                  std::optional<std::size_t> expected_n_stab = std::nullopt);

}  // namespace obstrukt

#endif  // OBSTRUKT_OBSTRUCTION_HPP
