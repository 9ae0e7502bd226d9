#pragma once

#include "gammacalc/functors.hpp"
#include "gammacalc/sym2homology.hpp"

#include <array>
#include <chrono>

namespace gammacalc {

// A candidate exact sequence: arrow i goes from node i to node i+1. The zero
// flags assert injectivity of the first arrow / surjectivity of the last.
struct SequenceSpec {
  std::vector<FgAbGroup> nodes;
  std::vector<GroupHom> arrows;
  bool leading_zero = false;
  bool trailing_zero = false;
};

struct NodeReport {
  std::vector<Int> kernel_invariants;
  std::vector<Int> image_invariants;
  bool exact = true;
  // ambient-group coordinates of generators witnessing a ker/im mismatch
  std::vector<std::vector<Int>> witnesses;
};

struct ExactnessReport {
  std::vector<NodeReport> nodes;
  bool overall = true;
};

inline ExactnessReport check_exactness(const SequenceSpec& s) {
  if (s.arrows.size() + 1 != s.nodes.size())
    throw std::invalid_argument("sequence needs one arrow less than nodes");
  for (std::size_t i = 0; i < s.arrows.size(); ++i)
    if (s.arrows[i].dom() != s.nodes[i] || s.arrows[i].cod() != s.nodes[i + 1])
      throw std::invalid_argument("sequence arrows are not composable");

  ExactnessReport rep;
  rep.nodes.resize(s.nodes.size());
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    NodeReport& nr = rep.nodes[i];
    bool has_in = i > 0, has_out = i + 1 < s.nodes.size();
    if (!has_out && s.trailing_zero) {
      // surjectivity of the incoming arrow
      Subgroup im = image(s.arrows[i - 1]);
      nr.image_invariants = im.group.invariants();
      nr.kernel_invariants = s.nodes[i].invariants();
      for (std::size_t t = 0; t < s.nodes[i].ngens(); ++t) {
        GroupElement gen = GroupElement::generator(s.nodes[i], t);
        if (!subgroup_contains(im, gen)) {
          nr.exact = false;
          nr.witnesses.push_back(gen.coords());
        }
      }
    } else if (!has_in && s.leading_zero) {
      Subgroup ker = kernel(s.arrows[0]);
      nr.kernel_invariants = ker.group.invariants();
      if (!ker.group.is_trivial()) {
        nr.exact = false;
        for (std::size_t t = 0; t < ker.group.ngens(); ++t)
          nr.witnesses.push_back(
              ker.incl(GroupElement::generator(ker.group, t)).coords());
      }
    } else if (has_in && has_out) {
      Subgroup ker = kernel(s.arrows[i]);
      Subgroup im = image(s.arrows[i - 1]);
      nr.kernel_invariants = ker.group.invariants();
      nr.image_invariants = im.group.invariants();
      for (std::size_t t = 0; t < ker.group.ngens(); ++t) {
        GroupElement gen = ker.incl(GroupElement::generator(ker.group, t));
        if (!subgroup_contains(im, gen)) {
          nr.exact = false;
          nr.witnesses.push_back(gen.coords());
        }
      }
      for (std::size_t t = 0; t < im.group.ngens(); ++t) {
        GroupElement gen = im.incl(GroupElement::generator(im.group, t));
        if (!subgroup_contains(ker, gen)) {
          nr.exact = false;
          nr.witnesses.push_back(gen.coords());
        }
      }
    }
    rep.overall = rep.overall && nr.exact;
  }
  return rep;
}

// The (exact1) sequence 0 -> (A⊗A)_{Ω2} -> Γ(A) -> A/2 -> 0, with the first
// arrow induced by the pairing on the swap-coinvariants.
struct Exact1Report {
  ExactnessReport seq;
  bool pairing_kernel_generated = true;  // ker[ , ] = <a⊗b - b⊗a>
  bool ok() const { return seq.overall && pairing_kernel_generated; }
};

inline Exact1Report exact1_suite(const GammaValue& g) {
  GroupHom omega = tensor_swap(g.taa);
  InvolutiveModule mod(g.taa.group, omega);
  Quotient co = coinvariants(mod);
  // induced map on coinvariants: lift each generator through the projection
  IntMatrix lift_target =
      co.proj.matrix().hstack(detail::relation_columns(co.group));
  IntMatrix induced(g.group.ngens(), co.group.ngens());
  for (std::size_t j = 0; j < co.group.ngens(); ++j) {
    std::vector<Int> e(co.group.ngens());
    e[j] = 1;
    auto lift = solve(lift_target, e);
    if (!lift) throw std::logic_error("coinvariant projection not surjective");
    std::vector<Int> x(lift->begin(), lift->begin() + g.taa.group.ngens());
    induced.set_col(j, g.pairing.matrix() * x);
  }
  GroupHom first(co.group, g.group, std::move(induced));

  Exact1Report rep;
  rep.seq = check_exactness(SequenceSpec{
      {co.group, g.group, g.mod2q.group}, {first, g.phi}, true, true});

  // the kernel of the pairing on A⊗A is generated by the a⊗b - b⊗a
  Subgroup ker_pairing = kernel(g.pairing);
  Subgroup antisym = image(omega - GroupHom::identity(g.taa.group));
  for (std::size_t t = 0; t < ker_pairing.group.ngens(); ++t)
    if (!subgroup_contains(antisym,
                           ker_pairing.incl(GroupElement::generator(ker_pairing.group, t))))
      rep.pairing_kernel_generated = false;
  for (std::size_t t = 0; t < antisym.group.ngens(); ++t)
    if (!subgroup_contains(ker_pairing,
                           antisym.incl(GroupElement::generator(antisym.group, t))))
      rep.pairing_kernel_generated = false;
  return rep;
}

// The main verification: the four-term sequence
//   0 -> H_1(Σ2^ε, Tor(2∞A, 2∞A)) -> Γ(A) -Ψ-> A⊗A -> H_2(A) -> 0.
struct TheoremH4Report {
  std::vector<Int> gamma_invariants;
  std::vector<Int> tensor_invariants;
  std::vector<Int> h2_invariants;        // Λ²A
  std::vector<Int> kernel_invariants;    // ker Ψ
  std::vector<Int> h1_term_invariants;   // H_1(Σ2^ε, Tor(2∞A, 2∞A))
  ExactnessReport tail;                  // Γ -> A⊗A -> Λ² -> 0
  bool kernel_isomorphic = false;
  bool kernel_in_pairing_image = false;
  bool oracle_checked = false;
  bool oracle_ok = true;
  bool ok() const {
    return tail.overall && kernel_isomorphic && kernel_in_pairing_image && oracle_ok;
  }
};

inline TheoremH4Report theorem_h4_suite(const FgAbGroup& a,
                                        bool presentation_crosscheck = false,
                                        std::uint64_t cap = kDefaultEnumCap) {
  TheoremH4Report rep;
  GammaValue g = gamma_structural(a);
  rep.gamma_invariants = g.group.invariants();
  rep.tensor_invariants = g.taa.group.invariants();

  ExteriorSquare l2 = exterior_square(g.taa);
  rep.h2_invariants = l2.group.invariants();
  rep.tail = check_exactness(SequenceSpec{
      {g.group, g.taa.group, l2.group}, {g.psi, l2.proj}, false, true});

  Subgroup ker_psi = kernel(g.psi);
  rep.kernel_invariants = ker_psi.group.invariants();

  FgAbGroup two_part = p_primary_part(a, 2).group;
  TorValue t2 = tor(two_part, two_part);
  rep.h1_term_invariants =
      h1(InvolutiveModule(t2.group, tor_swap(t2))).invariants();
  rep.kernel_isomorphic = rep.kernel_invariants == rep.h1_term_invariants;

  Subgroup pairing_im = image(g.pairing);
  rep.kernel_in_pairing_image = true;
  for (std::size_t t = 0; t < ker_psi.group.ngens(); ++t)
    if (!subgroup_contains(pairing_im,
                           ker_psi.incl(GroupElement::generator(ker_psi.group, t))))
      rep.kernel_in_pairing_image = false;

  if (presentation_crosscheck && a.is_finite()) {
    rep.oracle_checked = true;
    GammaValue p = gamma_presentation(a, cap);
    rep.oracle_ok = compare_gamma(p, g, cap).ok();
  }
  return rep;
}

// The corollary: the kernel term recomputed as H_1(Σ2, 2∞A ⊗ 2∞A), plus the
// stabilization of the 2^n-torsion approximations.
struct CorollaryReport {
  std::vector<Int> kernel_via_tor;
  std::vector<Int> kernel_via_tensor;
  bool match = false;
  std::size_t stabilization_n = 0;  // smallest n with 2^n-torsion = 2-part
  std::vector<std::vector<Int>> h1_by_n;
  bool stabilized = false;
  bool ok() const { return match && stabilized; }
};

inline CorollaryReport corollary_suite(const FgAbGroup& a) {
  CorollaryReport rep;
  FgAbGroup two_part = p_primary_part(a, 2).group;
  TorValue t2 = tor(two_part, two_part);
  rep.kernel_via_tor =
      h1(InvolutiveModule(t2.group, tor_swap(t2))).invariants();

  BifunctorValue tp = tensor(two_part, two_part);
  rep.kernel_via_tensor =
      h1(InvolutiveModule(tp.group, tensor_swap(tp))).invariants();
  rep.match = rep.kernel_via_tor == rep.kernel_via_tensor;

  Int pw = 1;
  for (std::size_t n = 0;; ++n) {
    FgAbGroup tn = n_torsion(a, pw).group;
    BifunctorValue tt = tensor(tn, tn);
    rep.h1_by_n.push_back(
        h1(InvolutiveModule(tt.group, tensor_swap(tt))).invariants());
    if (tn == two_part) {
      rep.stabilization_n = n;
      rep.stabilized = rep.h1_by_n.back() == rep.kernel_via_tensor;
      // one step beyond the exponent: nothing moves
      FgAbGroup beyond = n_torsion(a, pw * 2).group;
      if (beyond != two_part) rep.stabilized = false;
      break;
    }
    pw *= 2;
  }
  return rep;
}

// Degrees 0..3 of H_*(A, Z) via iterated Künneth over the invariant factors.
struct GradedHomology {
  std::array<FgAbGroup, 4> h;
};

inline GradedHomology kunneth_homology(const FgAbGroup& a) {
  auto concat = [](const FgAbGroup& x, const FgAbGroup& y) {
    std::vector<Int> orders;
    for (const Int& d : x.invariants()) orders.push_back(d);
    for (const Int& d : y.invariants()) orders.push_back(d);
    return group_of_orders(orders);
  };
  std::array<FgAbGroup, 4> cur = {FgAbGroup::cyclic(0), FgAbGroup::trivial(),
                                  FgAbGroup::trivial(), FgAbGroup::trivial()};
  for (const Int& d : a.invariants()) {
    // H_*(Z/d) = (Z, Z/d, 0, Z/d); H_*(Z) = (Z, Z, 0, 0)
    std::array<FgAbGroup, 4> nxt;
    std::array<FgAbGroup, 4> factor = {
        FgAbGroup::cyclic(0), FgAbGroup::cyclic(d == 0 ? Int(0) : d),
        FgAbGroup::trivial(), d == 0 ? FgAbGroup::trivial() : FgAbGroup::cyclic(d)};
    for (std::size_t n = 0; n < 4; ++n) {
      FgAbGroup acc;
      for (std::size_t i = 0; i <= n; ++i)
        acc = concat(acc, tensor(cur[i], factor[n - i]).group);
      for (std::size_t i = 0; i + 1 <= n; ++i)
        acc = concat(acc, tor(cur[i], factor[n - 1 - i]).group);
      nxt[n] = acc;
    }
    cur = nxt;
  }
  return GradedHomology{cur};
}

// |H_3(A)| = |Λ³A| · |Tor(A,A)^{Σ2^ε}| for finite A.
inline bool h3a_order_check(const FgAbGroup& a) {
  if (!a.is_finite())
    throw std::invalid_argument("h3a_order_check requires a finite group");
  GradedHomology h = kunneth_homology(a);
  TorValue t = tor(a, a);
  Subgroup fixed = invariants(InvolutiveModule(t.group, tor_swap(t)));
  return h.h[3].order() == exterior_cube(a).order() * fixed.group.order();
}

// ---------------------------------------------------------------------------
// batch verification over isomorphism classes
// ---------------------------------------------------------------------------

namespace detail {

inline void partitions_rec(unsigned rest, unsigned maxpart,
                           std::vector<unsigned>& cur,
                           std::vector<std::vector<unsigned>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rest - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace detail

// Every isomorphism class of abelian group of order n, in invariant-factor
// form.
inline std::vector<FgAbGroup> abelian_groups_of_order(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("order must be positive");
  std::vector<std::pair<Int, unsigned>> fact;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      unsigned e = 0;
      while (m % p == 0) { m /= p; ++e; }
      fact.emplace_back(p, e);
    }
  if (m > 1) fact.emplace_back(m, 1);

  std::vector<std::vector<std::vector<Int>>> per_prime;  // prime-power lists, desc
  for (auto& [p, e] : fact) {
    std::vector<std::vector<Int>> lists;
    for (const auto& part : detail::partitions(e)) {
      std::vector<Int> powers;
      for (unsigned x : part) {
        Int q = 1;
        for (unsigned t = 0; t < x; ++t) q *= p;
        powers.push_back(q);  // descending since partitions are
      }
      lists.push_back(powers);
    }
    per_prime.push_back(lists);
  }

  std::vector<FgAbGroup> out;
  std::vector<std::size_t> pick(per_prime.size(), 0);
  while (true) {
    std::size_t depth = 0;
    for (std::size_t i = 0; i < per_prime.size(); ++i)
      depth = std::max(depth, per_prime[i][pick[i]].size());
    std::vector<Int> inv;
    for (std::size_t j = 0; j < depth; ++j) {
      Int d = 1;
      for (std::size_t i = 0; i < per_prime.size(); ++i) {
        const auto& l = per_prime[i][pick[i]];
        if (j < l.size()) d *= l[j];
      }
      inv.push_back(d);  // descending chain, largest first
    }
    std::reverse(inv.begin(), inv.end());
    out.push_back(FgAbGroup(std::move(inv)));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
    if (per_prime.empty()) break;
  }
  return out;
}

inline std::vector<FgAbGroup> abelian_groups_up_to(std::uint64_t max_order) {
  std::vector<FgAbGroup> out;
  for (std::uint64_t n = 1; n <= max_order; ++n)
    for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
  return out;
}

struct GroupVerdict {
  FgAbGroup group;
  TheoremH4Report h4;
  CorollaryReport corollary;
  Exact1Report exact1;
  bool h3a = false;
  bool h2_matches_kunneth = false;
  double millis = 0.0;
  bool pass() const {
    return h4.ok() && corollary.ok() && exact1.ok() && h3a && h2_matches_kunneth;
  }
};

struct BatchReport {
  std::vector<GroupVerdict> results;
  bool all_pass = true;
};

inline BatchReport batch_verify(std::uint64_t max_order,
                                std::uint64_t cap = kDefaultEnumCap) {
  if (max_order > cap) throw SizeCapError(cap);
  BatchReport rep;
  for (const FgAbGroup& g : abelian_groups_up_to(max_order)) {
    auto start = std::chrono::steady_clock::now();
    GroupVerdict v;
    v.group = g;
    v.h4 = theorem_h4_suite(g);
    v.corollary = corollary_suite(g);
    v.exact1 = exact1_suite(gamma_structural(g));
    v.h3a = h3a_order_check(g);
    v.h2_matches_kunneth =
        kunneth_homology(g).h[2].invariants() == v.h4.h2_invariants;
    v.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    rep.all_pass = rep.all_pass && v.pass();
    rep.results.push_back(std::move(v));
  }
  return rep;
}

}  // namespace gammacalc
