#include "obstrukt/obstruction.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace obstrukt {

SurfaceLabel::SurfaceLabel(const GroupElement& sigma) : sigma_(sigma) {
  if (!is_valid(sigma))
    throw std::invalid_argument("surface label must lie in the span of g1, g2");
}

ObstructionClass::ObstructionClass(std::size_t n_stab) : stab_(n_stab) {}

ObstructionClass::ObstructionClass(RingElement d, RingElement g, RingElement r,
                                   std::vector<StabPair> stab)
    : d_(std::move(d)), g_(std::move(g)), r_(std::move(r)), stab_(std::move(stab)) {}

namespace {
void require_same_shape(const ObstructionClass& a, const ObstructionClass& b) {
  if (a.n_stab() != b.n_stab())
    throw std::invalid_argument("obstruction classes have different stabilization counts");
}
}  // namespace

ObstructionClass& ObstructionClass::operator+=(const ObstructionClass& o) {
  require_same_shape(*this, o);
  d_ += o.d_;
  g_ += o.g_;
  r_ += o.r_;
  for (std::size_t k = 0; k < stab_.size(); ++k) {
    stab_[k].s += o.stab_[k].s;
    stab_[k].t += o.stab_[k].t;
  }
  return *this;
}

ObstructionClass& ObstructionClass::operator-=(const ObstructionClass& o) {
  require_same_shape(*this, o);
  d_ -= o.d_;
  g_ -= o.g_;
  r_ -= o.r_;
  for (std::size_t k = 0; k < stab_.size(); ++k) {
    stab_[k].s -= o.stab_[k].s;
    stab_[k].t -= o.stab_[k].t;
  }
  return *this;
}

ObstructionClass ObstructionClass::operator-() const {
  ObstructionClass r(n_stab());
  r -= *this;
  return r;
}

std::ostream& operator<<(std::ostream& os, const ObstructionClass& c) {
  os << '(' << c.d() << "; " << c.g() << "; " << c.r();
  for (const auto& p : c.stab()) os << "; [" << p.s << "; " << p.t << ']';
  return os << ')';
}

ObstructionClass label_difference(const SurfaceLabel& sigma1, const SurfaceLabel& sigma2,
                                  std::size_t n_stab) {
  ObstructionClass c(n_stab);
  return tube_G(c, sigma2.sigma()) - tube_G(c, sigma1.sigma());
}

ObstructionClass tube_meridian(const ObstructionClass& c, const GroupElement& gamma_plus,
                               const GroupElement& gamma_minus) {
  return c + ObstructionClass(RingElement(gamma_plus) - gamma_minus, {}, {},
                              std::vector<StabPair>(c.n_stab()));
}

ObstructionClass tube_R(const ObstructionClass& c, const GroupElement& gamma_prime) {
  return c + ObstructionClass({}, gamma_prime, {}, std::vector<StabPair>(c.n_stab()));
}

ObstructionClass tube_G(const ObstructionClass& c, const GroupElement& gamma) {
  return c + ObstructionClass({}, {}, gamma, std::vector<StabPair>(c.n_stab()));
}

ObstructionClass scalar_mul(const GroupElement& h, const ObstructionClass& c) {
  std::vector<StabPair> stab;
  stab.reserve(c.n_stab());
  for (const auto& p : c.stab()) stab.push_back({p.s.translated(h), p.t.translated(h)});
  return {c.d().translated(h), c.g().translated(h), c.r().translated(h), std::move(stab)};
}

bool is_zero(const ObstructionClass& c) {
  if (!c.d().is_zero() || !c.g().is_zero() || !c.r().is_zero()) return false;
  for (const auto& p : c.stab())
    if (!p.s.is_zero() || !p.t.is_zero()) return false;
  return true;
}

std::optional<Violation> validate(const ObstructionClass& c,
                                  std::optional<std::size_t> expected_n_stab) {
  if (Integer aug = augmentation(c.d()); aug != 0)
    return Violation{Violation::Kind::NotInJ,
                     "d-component has augmentation " + aug.get_str() + ", expected 0"};
  if (expected_n_stab && *expected_n_stab != c.n_stab())
    return Violation{Violation::Kind::StabCountMismatch,
                     "expected " + std::to_string(*expected_n_stab) + " stabilization pairs, found " +
                         std::to_string(c.n_stab())};
  return std::nullopt;
}

}  // namespace obstrukt
