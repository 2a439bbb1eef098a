#include "hoso/periodic.hpp"

#include <numeric>
#include <stdexcept>

#include "hoso/conjugacy.hpp"

namespace hoso {

std::optional<PeriodicInfo> periodicity(const Presentation& pres, const GarsideElement& x) {
  auto [rep, c] = send_to_sss(pres, x);
  (void)c;
  if (rep.is_delta_power()) {
    PeriodicInfo info;
    info.p = 1;
    info.q = rep.delta_exp();
    return info;
  }
  if (rep.canonical_length() != 1) return std::nullopt;
  const Simple s = rep.canonical().front();
  const Factor& f = pres.factor(s.factor());
  const long long k = rep.delta_exp();
  const long long len = s.len();
  const long long shifted = len + k * f.delta_len;  // total index shift of conjugation by rep
  if (shifted % f.atoms != 0) return std::nullopt;
  const long long v = shifted / f.atoms;
  const long long d = std::gcd((long long)f.delta_len, len);
  PeriodicInfo info;
  info.p = f.delta_len / d;
  info.q = f.atoms * v / d;
  info.factor = s.factor();
  if (std::gcd(info.p, info.q < 0 ? -info.q : info.q) != 1)
    throw std::logic_error("periodicity exponents failed to reduce");
  return info;
}

CenterInfo center(const Presentation& pres) {
  CenterInfo info;
  if (pres.circular()) {
    const Factor& f = pres.factor(0);
    info.whole_group =
        f.atoms == 1 || f.delta_len == 1 || (f.atoms == 2 && f.delta_len == 2);
    info.generator =
        GarsideElement::delta_power(f.atoms / std::gcd(f.atoms, f.delta_len));
    return info;
  }
  long long exp = 1;
  for (int j = 0; j < pres.factor_count(); ++j) {
    const Factor& f = pres.factor(j);
    exp = std::lcm(exp, (long long)(f.atoms / std::gcd(f.atoms, f.delta_len)));
  }
  info.generator = GarsideElement::delta_power(exp);
  return info;
}

std::vector<GarsideElement> irreducible_periodic_classes(const Presentation& pres) {
  std::vector<GarsideElement> reps;
  auto add_unique = [&](const GarsideElement& g) {
    for (const GarsideElement& have : reps)
      if (are_conjugate(pres, have, g)) return;
    reps.push_back(g);
  };
  for (int j = 0; j < pres.factor_count(); ++j) {
    const Factor& f = pres.factor(j);
    // s(0, m) as an element: the product of all atoms of the factor once.
    Word cycle;
    for (int i = 0; i < f.atoms; ++i) cycle.push_back({false, j, i, 1});
    GarsideElement full_cycle = normalize_positive(pres, cycle);
    GarsideElement delta = GarsideElement::delta_power(1);
    const bool m_divides_l = f.delta_len % f.atoms == 0;
    const bool l_divides_m = f.atoms % f.delta_len == 0;
    if (m_divides_l || !l_divides_m) {
      add_unique(full_cycle);
      add_unique(inverse(pres, full_cycle));
    }
    if (l_divides_m || !m_divides_l) {
      add_unique(delta);
      add_unique(inverse(pres, delta));
    }
  }
  return reps;
}

bool periodic_conjugate(const Presentation& pres, const GarsideElement& x,
                        const GarsideElement& y) {
  auto px = periodicity(pres, x);
  auto py = periodicity(pres, y);
  if (!px || !py) throw std::invalid_argument("periodic_conjugate needs periodic inputs");
  if (!(px->p == py->p && px->q == py->q)) return false;
  if (pres.circular()) return true;
  // Same reduced exponents: either both reduce to the same pure D power, or
  // both carry a witness simple and conjugacy needs a shared factor.
  if (!px->factor.has_value() && !py->factor.has_value()) return true;
  if (px->factor.has_value() != py->factor.has_value())
    throw std::logic_error("equal reduced exponents with mismatched witness shapes");
  return *px->factor == *py->factor;
}

}  // namespace hoso
