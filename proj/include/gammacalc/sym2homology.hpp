#pragma once

#include "gammacalc/abgroup.hpp"

namespace gammacalc {

// An abelian group with an order-2 automorphism: the coefficient module for
// homology of the two-element group.
struct InvolutiveModule {
  FgAbGroup carrier;
  GroupHom sigma;

  InvolutiveModule(FgAbGroup c, GroupHom s)
      : carrier(std::move(c)), sigma(std::move(s)) {
    if (sigma.dom() != carrier || sigma.cod() != carrier)
      throw std::invalid_argument("involution must be an endomorphism of the carrier");
    if (!(compose(sigma, sigma) == GroupHom::identity(carrier)))
      throw std::invalid_argument("sigma does not square to the identity");
  }
};

// H_0: carrier / (sigma - id)
inline Quotient coinvariants(const InvolutiveModule& m) {
  return cokernel(m.sigma - GroupHom::identity(m.carrier));
}

// fixed points: ker(sigma - id)
inline Subgroup invariants(const InvolutiveModule& m) {
  return kernel(m.sigma - GroupHom::identity(m.carrier));
}

// H_1 = ker(sigma - id) / im(id + sigma), the invariants modulo the norm.
inline FgAbGroup h1(const InvolutiveModule& m) {
  Subgroup inv = invariants(m);
  GroupHom norm = GroupHom::identity(m.carrier) + m.sigma;
  // express each norm generator inside the invariant subgroup
  IntMatrix lift_target = inv.incl.matrix().hstack(detail::relation_columns(m.carrier));
  std::size_t k = m.carrier.ngens();
  IntMatrix coeffs(inv.group.ngens(), k);
  for (std::size_t j = 0; j < k; ++j) {
    auto c = solve(lift_target, norm.matrix().col(j));
    if (!c) throw std::logic_error("norm image not contained in invariants");
    for (std::size_t i = 0; i < inv.group.ngens(); ++i) coeffs.at(i, j) = (*c)[i];
  }
  return cokernel(GroupHom(FgAbGroup::free_group(k), inv.group, coeffs)).group;
}

}  // namespace gammacalc
