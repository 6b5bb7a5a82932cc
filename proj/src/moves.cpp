#include "obstrukt/moves.hpp"

#include <stdexcept>
#include <utility>

namespace obstrukt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool valid_arc(int u) { return u == 1 || u == 2; }

}  // namespace

TauSpin TauSpin::from_quadruple(int u, int v, const GroupElement& g_pp, const GroupElement& g_pm,
                                const GroupElement& g_mp, const GroupElement& g_mm) {
  TauSpin t{u, v, g_mm};
  if (t.g_pm() != g_pm || t.g_mp() != g_mp || t.g_pp() != g_pp)
    throw std::invalid_argument(
        "tau quadruple must satisfy g+- = g-- g1, g-+ = g-- g2, g++ = g-- g1 g2");
  return t;
}

MoveKind kind_of(const Move& m) { return static_cast<MoveKind>(m.index()); }

std::string kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::Xi: return "xi";
    case MoveKind::Eta: return "eta";
    case MoveKind::Rho: return "rho";
    case MoveKind::Tau: return "tau";
    case MoveKind::Theta: return "theta";
    case MoveKind::Delta: return "delta";
  }
  return "?";
}

RingElement tau_kg(const GroupElement& base) {
  const TauSpin t{1, 2, base};
  RingElement first = (RingElement(t.g_pp()) - t.g_pm()) - (RingElement(t.g_mp()) - t.g_mm());
  RingElement second = (RingElement(t.g_pp().inverse()) - t.g_pm().inverse()) -
                       (RingElement(t.g_mp().inverse()) - t.g_mm().inverse());
  return first - second;
}

ObstructionClass delta(const Move& m, const SurfaceLabel& sigma, std::size_t n_stab) {
  auto zero_stab = [n_stab] { return std::vector<StabPair>(n_stab); };
  return std::visit(
      overloaded{
          [&](const XiSpin& xi) {
            const GroupElement g = xi.u == 1 ? g1 : g2;
            return ObstructionClass(RingElement(g) + g.inverse() - 2 * RingElement(e), {}, {},
                                    zero_stab());
          },
          [&](const EtaSpin& eta) {
            return ObstructionClass(
                RingElement(eta.lambda_minus.inverse()) - eta.lambda_plus.inverse(), {},
                RingElement(eta.lambda_plus) - eta.lambda_minus, zero_stab());
          },
          [&](const RhoSpin& rho) {
            RingElement d = (RingElement(sigma.sigma()) - e) *
                            (RingElement(rho.gamma_plus.inverse()) - rho.gamma_minus.inverse());
            return ObstructionClass(std::move(d), RingElement(rho.gamma_plus) - rho.gamma_minus, {},
                                    zero_stab());
          },
          [&](const TauSpin& tau) {
            return ObstructionClass(tau_kg(tau.base), {}, {}, zero_stab());
          },
          [&](const BasepointLoop& theta) {
            return ObstructionClass({}, RingElement(e) - theta.theta_bar, {}, zero_stab());
          },
          [&](const DeltaSpin& ds) {
            if (ds.k < 1 || static_cast<std::size_t>(ds.k) > n_stab)
              throw std::out_of_range("delta move refers to stabilization " + std::to_string(ds.k) +
                                      " of " + std::to_string(n_stab));
            auto stab = zero_stab();
            RingElement mu = RingElement(ds.mu_plus) - ds.mu_minus;
            auto& pair = stab[static_cast<std::size_t>(ds.k - 1)];
            (ds.side == 1 ? pair.s : pair.t) = std::move(mu);
            return ObstructionClass({}, {}, {}, std::move(stab));
          },
      },
      m);
}

ObstructionClass apply_word(const MoveWord& w, const SurfaceLabel& sigma, const ObstructionClass& c) {
  ObstructionClass out = c;
  for (const auto& m : w) out += delta(m, sigma, c.n_stab());
  return out;
}

std::optional<MoveViolation> validate_move(const Move& m, std::size_t n_stab) {
  using K = MoveViolation::Kind;
  auto arc = [](int u) -> std::optional<MoveViolation> {
    if (valid_arc(u)) return std::nullopt;
    return MoveViolation{K::ArcIndexOutOfRange, "arc index " + std::to_string(u) + " not in {1,2}"};
  };
  return std::visit(
      overloaded{
          [&](const XiSpin& x) { return arc(x.u); },
          [&](const EtaSpin& x) { return arc(x.u); },
          [&](const RhoSpin& x) { return arc(x.u); },
          [&](const TauSpin& x) {
            auto v = arc(x.u);
            return v ? v : arc(x.v);
          },
          [&](const BasepointLoop&) -> std::optional<MoveViolation> { return std::nullopt; },
          [&](const DeltaSpin& x) -> std::optional<MoveViolation> {
            if (x.k < 1 || static_cast<std::size_t>(x.k) > n_stab)
              return MoveViolation{K::StabIndexOutOfRange,
                                   "stabilization index " + std::to_string(x.k) + " not in 1.." +
                                       std::to_string(n_stab)};
            if (x.side != 1 && x.side != 2)
              return MoveViolation{K::SideOutOfRange,
                                   "sphere side " + std::to_string(x.side) + " not in {1,2}"};
            return std::nullopt;
          },
      },
      m);
}

GroupElement random_group_element(std::mt19937_64& rng, std::int64_t box) {
  std::uniform_int_distribution<std::int64_t> dist(-box, box);
  GroupElement::Exponents exps{};
  for (auto& x : exps) x = dist(rng);
  return GroupElement(exps);
}

Move random_move(std::mt19937_64& rng, MoveKind kind, std::int64_t box, std::size_t n_stab) {
  std::uniform_int_distribution<int> arc(1, 2);
  switch (kind) {
    case MoveKind::Xi: return XiSpin{arc(rng)};
    case MoveKind::Eta: {
      int u = arc(rng);
      auto lp = random_group_element(rng, box);
      return EtaSpin{u, lp, random_group_element(rng, box)};
    }
    case MoveKind::Rho: {
      int u = arc(rng);
      auto gp = random_group_element(rng, box);
      return RhoSpin{u, gp, random_group_element(rng, box)};
    }
    case MoveKind::Tau: {
      int u = arc(rng);
      int v = arc(rng);
      return TauSpin{u, v, random_group_element(rng, box)};
    }
    case MoveKind::Theta: return BasepointLoop{random_group_element(rng, box)};
    case MoveKind::Delta: {
      if (n_stab == 0) throw std::invalid_argument("delta moves need at least one stabilization");
      std::uniform_int_distribution<std::int64_t> k(1, static_cast<std::int64_t>(n_stab));
      auto kk = k(rng);
      int side = arc(rng);
      auto mp = random_group_element(rng, box);
      return DeltaSpin{kk, side, mp, random_group_element(rng, box)};
    }
  }
  throw std::invalid_argument("unknown move kind");
}

}  // namespace obstrukt
