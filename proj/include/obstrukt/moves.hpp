#ifndef OBSTRUKT_MOVES_HPP
#define OBSTRUKT_MOVES_HPP

// Generator moves of the embedding loop group and their exact effect on the
// disk class [D_sigma]. Every move is represented only by its delta
// e(m)[D_sigma] - [D_sigma]; deltas commute, so words act by summation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "obstrukt/group_ring.hpp"
#include "obstrukt/obstruction.hpp"

namespace obstrukt {

// Arc indices u, v are metadata in {1, 2}; no delta depends on them.
struct XiSpin {
  int u = 1;
  bool operator==(const XiSpin&) const = default;
};

struct EtaSpin {
  int u = 1;
  GroupElement lambda_plus;
  GroupElement lambda_minus;
  bool operator==(const EtaSpin&) const = default;
};

struct RhoSpin {
  int u = 1;
  GroupElement gamma_plus;
  GroupElement gamma_minus;
  bool operator==(const RhoSpin&) const = default;
};

// The quadruple g_{--}, g_{+-}, g_{-+}, g_{++} is generated by base = g_{--}:
// g_{+-} = base g1, g_{-+} = base g2, g_{++} = base g1 g2.
struct TauSpin {
  int u = 1;
  int v = 2;
  GroupElement base;

  GroupElement g_mm() const { return base; }
  GroupElement g_pm() const { return base * g1; }
  GroupElement g_mp() const { return base * g2; }
  GroupElement g_pp() const { return base * g1 * g2; }

  // Accepts an explicit quadruple; throws std::invalid_argument unless it
  // has the form above.
  static TauSpin from_quadruple(int u, int v, const GroupElement& g_pp, const GroupElement& g_pm,
                                const GroupElement& g_mp, const GroupElement& g_mm);

  bool operator==(const TauSpin&) const = default;
};

// Basepoint loop theta' with Res(theta') = theta_bar.
struct BasepointLoop {
  GroupElement theta_bar;
  bool operator==(const BasepointLoop&) const = default;
};

// Spinning of an arc around the sphere S^2 x * (side 1) or * x S^2 (side 2)
// of the k-th stabilization, k in 1..n.
struct DeltaSpin {
  std::int64_t k = 1;
  int side = 1;
  GroupElement mu_plus;
  GroupElement mu_minus;
  bool operator==(const DeltaSpin&) const = default;
};

using Move = std::variant<XiSpin, EtaSpin, RhoSpin, TauSpin, BasepointLoop, DeltaSpin>;
using MoveWord = std::vector<Move>;

enum class MoveKind { Xi, Eta, Rho, Tau, Theta, Delta };
inline constexpr MoveKind kAllMoveKinds[] = {MoveKind::Xi,  MoveKind::Eta,   MoveKind::Rho,
                                             MoveKind::Tau, MoveKind::Theta, MoveKind::Delta};

MoveKind kind_of(const Move& m);
// "xi", "eta", "rho", "tau", "theta", "delta".
std::string kind_name(MoveKind kind);

// k_g = (base (g1 - e)(g2 - e)) - involute(base (g1 - e)(g2 - e)).
RingElement tau_kg(const GroupElement& base);

// e(m)[D_sigma] - [D_sigma] in the class group with n_stab stabilizations.
// Throws std::out_of_range for a DeltaSpin that does not fit n_stab.
ObstructionClass delta(const Move& m, const SurfaceLabel& sigma, std::size_t n_stab = 0);

// c + sum of the deltas of w. The sum is order independent.
ObstructionClass apply_word(const MoveWord& w, const SurfaceLabel& sigma, const ObstructionClass& c);

struct MoveViolation {
  enum class Kind { ArcIndexOutOfRange, StabIndexOutOfRange, SideOutOfRange };
  Kind kind;
  std::string message;
};

std::optional<MoveViolation> validate_move(const Move& m, std::size_t n_stab);

// A uniformly random move of the given kind with every exponent drawn from
// [-box, box]. DeltaSpin draws require n_stab >= 1.
Move random_move(std::mt19937_64& rng, MoveKind kind, std::int64_t box, std::size_t n_stab);
GroupElement random_group_element(std::mt19937_64& rng, std::int64_t box);

}  // namespace obstrukt

#endif  // OBSTRUKT_MOVES_HPP
