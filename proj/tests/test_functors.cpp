#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammacalc/functors.hpp"

#include <random>

using namespace gammacalc;

namespace {

// Independent oracle for |Z/a ⊗ Z/b|: count residues c mod lcm(a,b) killed by
// both a and b. Avoids gcd arithmetic on purpose.
std::size_t cyclic_tensor_order(std::uint64_t a, std::uint64_t b) {
  std::uint64_t l = std::lcm(a, b);
  std::size_t count = 0;
  for (std::uint64_t c = 0; c < l; ++c)
    if (a * c % l == 0 && b * c % l == 0) ++count;
  return count;
}

GroupElement random_element(const FgAbGroup& g, std::mt19937_64& rng) {
  std::vector<Int> c(g.ngens());
  for (auto& x : c) x = Int(rng() % 16);
  return GroupElement(g, std::move(c));
}

std::vector<FgAbGroup> sample_groups() {
  return {FgAbGroup::trivial(),
          FgAbGroup::cyclic(2),
          FgAbGroup::cyclic(3),
          FgAbGroup::cyclic(4),
          FgAbGroup::cyclic(12),
          FgAbGroup({Int(2), Int(2)}),
          FgAbGroup({Int(2), Int(4)}),
          FgAbGroup({Int(3), Int(9)}),
          FgAbGroup({Int(2), Int(2), Int(8)})};
}

}  // namespace

TEST_CASE("tensor of cyclic groups matches the annihilator-counting oracle") {
  for (std::uint64_t a : {2, 3, 4, 6, 8, 9, 12})
    for (std::uint64_t b : {2, 3, 4, 6, 8, 9, 12}) {
      BifunctorValue t = tensor(FgAbGroup::cyclic(a), FgAbGroup::cyclic(b));
      CHECK(t.group.order() == cyclic_tensor_order(a, b));
    }
}

TEST_CASE("tensor known values") {
  CHECK(tensor(FgAbGroup::cyclic(4), FgAbGroup::cyclic(6)).group.invariants() ==
        std::vector<Int>{2});
  CHECK(tensor(FgAbGroup::free_group(1), FgAbGroup::cyclic(5)).group.invariants() ==
        std::vector<Int>{5});
  CHECK(tensor(FgAbGroup::free_group(2), FgAbGroup::free_group(2)).group.invariants() ==
        std::vector<Int>(4, 0));
  FgAbGroup g({Int(2), Int(4)});
  CHECK(tensor(g, g).group.invariants() == std::vector<Int>{2, 2, 2, 4});
  CHECK(tensor(FgAbGroup::trivial(), g).group.is_trivial());
}

TEST_CASE("pure tensors are bilinear") {
  std::mt19937_64 rng(31);
  FgAbGroup a({Int(2), Int(8)}), b({Int(4), Int(0)});
  BifunctorValue t = tensor(a, b);
  for (int trial = 0; trial < 25; ++trial) {
    GroupElement x = random_element(a, rng), x2 = random_element(a, rng);
    GroupElement y = random_element(b, rng), y2 = random_element(b, rng);
    CHECK(t.pure(x + x2, y) == t.pure(x, y) + t.pure(x2, y));
    CHECK(t.pure(x, y + y2) == t.pure(x, y) + t.pure(x, y2));
    CHECK(t.pure(x * 3, y) == t.pure(x, y * 3));
  }
}

TEST_CASE("tensor_hom is functorial") {
  FgAbGroup a({Int(2), Int(4)}), b = FgAbGroup::cyclic(8);
  BifunctorValue taa = tensor(a, a), tbb = tensor(b, b), tab = tensor(a, b);
  GroupHom f(a, b, IntMatrix::from_rows({{4, 2}}));
  GroupHom idb = GroupHom::identity(b), ida = GroupHom::identity(a);
  CHECK(tensor_hom(ida, ida, taa, taa) == GroupHom::identity(taa.group));
  GroupHom step1 = tensor_hom(ida, f, taa, tab);
  GroupHom step2 = tensor_hom(f, idb, tab, tbb);
  GroupHom both = tensor_hom(f, f, taa, tbb);
  CHECK(compose(step2, step1) == both);
  // zero map induces zero
  CHECK(tensor_hom(GroupHom::zero(a, b), idb, tab, tbb).is_zero());
}

TEST_CASE("tensor swap is an involution swapping pure tensors") {
  std::mt19937_64 rng(47);
  for (const FgAbGroup& a : sample_groups()) {
    BifunctorValue t = tensor(a, a);
    GroupHom s = tensor_swap(t);
    CHECK(compose(s, s) == GroupHom::identity(t.group));
    for (int trial = 0; trial < 10; ++trial) {
      GroupElement x = random_element(a, rng), y = random_element(a, rng);
      CHECK(s(t.pure(x, y)) == t.pure(y, x));
    }
  }
}

TEST_CASE("exterior square and cube") {
  CHECK(exterior_square(FgAbGroup::cyclic(12)).group.is_trivial());
  CHECK(exterior_square(FgAbGroup({Int(2), Int(4)})).group.invariants() ==
        std::vector<Int>{2});
  CHECK(exterior_square(FgAbGroup::free_group(3)).group.invariants() ==
        std::vector<Int>(3, 0));
  CHECK(exterior_square(FgAbGroup({Int(2), Int(2), Int(2)})).group.invariants() ==
        std::vector<Int>{2, 2, 2});
  CHECK(exterior_cube(FgAbGroup({Int(2), Int(4)})).is_trivial());
  CHECK(exterior_cube(FgAbGroup({Int(2), Int(4), Int(8)})).invariants() ==
        std::vector<Int>{2});
  CHECK(exterior_cube(FgAbGroup::free_group(3)).invariants() == std::vector<Int>{0});
  CHECK(exterior_cube(FgAbGroup::free_group(4)).invariants() == std::vector<Int>(4, 0));
}

TEST_CASE("exterior square projection is onto with the expected kernel order") {
  FgAbGroup a({Int(2), Int(2), Int(4)});
  BifunctorValue t = tensor(a, a);
  ExteriorSquare l2 = exterior_square(t);
  CHECK(cokernel(l2.proj).group.is_trivial());
  CHECK(kernel(l2.proj).group.order() * l2.group.order() == t.group.order());
  // all symmetric tensors die
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    GroupElement x = random_element(a, rng);
    CHECK(l2.proj(t.pure(x, x)).is_zero());
  }
}

TEST_CASE("tor known values and the gcd oracle") {
  for (std::uint64_t a : {2, 3, 4, 6, 9, 12})
    for (std::uint64_t b : {2, 3, 4, 6, 9, 12})
      CHECK(tor(FgAbGroup::cyclic(a), FgAbGroup::cyclic(b)).group.order() ==
            std::gcd(a, b));
  CHECK(tor(FgAbGroup::free_group(2), FgAbGroup::cyclic(6)).group.is_trivial());
  CHECK(tor(FgAbGroup::cyclic(6), FgAbGroup::free_group(1)).group.is_trivial());
  CHECK(tor(FgAbGroup({Int(2), Int(4)}), FgAbGroup({Int(2), Int(4)})).group.invariants() ==
        std::vector<Int>{2, 2, 2, 4});
}

TEST_CASE("tor agrees with tensor of the torsion parts") {
  std::vector<FgAbGroup> pool = sample_groups();
  pool.push_back(FgAbGroup({Int(2), Int(6), Int(0)}));
  pool.push_back(FgAbGroup({Int(4), Int(0), Int(0)}));
  for (const FgAbGroup& a : pool)
    for (const FgAbGroup& b : pool) {
      std::vector<Int> ta, tb;
      for (const Int& d : a.invariants()) if (d != 0) ta.push_back(d);
      for (const Int& d : b.invariants()) if (d != 0) tb.push_back(d);
      CHECK(tor(a, b).group ==
            tensor(FgAbGroup(ta), FgAbGroup(tb)).group);
    }
}

TEST_CASE("tau generates Tor of a cyclic group and is bilinear") {
  std::mt19937_64 rng(11);
  for (std::uint64_t n : {2, 3, 4, 8, 9}) {
    FgAbGroup a = FgAbGroup::cyclic(n);
    TorValue t = tor(a, a);
    GroupElement g1 = GroupElement::generator(a, 0);
    GroupElement gen = tau(t, g1, g1, n);
    // the image of tau_n on generators generates the cyclic Tor
    Subgroup s = subgroup_from_generators(
        t.group, [&] {
          IntMatrix m(t.group.ngens(), 1);
          m.set_col(0, gen.coords());
          return m;
        }());
    CHECK(s.group == t.group);
    for (int trial = 0; trial < 10; ++trial) {
      Int u = rng() % n, v = rng() % n, w = rng() % n;
      CHECK(tau(t, g1 * (u + v), g1 * w, n) ==
            tau(t, g1 * u, g1 * w, n) + tau(t, g1 * v, g1 * w, n));
      CHECK(tau(t, g1 * u, g1 * (v + w), n) ==
            tau(t, g1 * u, g1 * v, n) + tau(t, g1 * u, g1 * w, n));
    }
  }
}

TEST_CASE("tau rejects arguments that are not n-torsion") {
  FgAbGroup a = FgAbGroup::cyclic(4);
  TorValue t = tor(a, a);
  GroupElement g1 = GroupElement::generator(a, 0);
  CHECK_THROWS_AS(tau(t, g1, g1, 2), std::invalid_argument);
  CHECK_NOTHROW(tau(t, g1 * 2, g1 * 2, 2));
}

TEST_CASE("tau restriction: scaling into the smaller torsion level") {
  // n = m s with a killed by n, b killed by s: tau_n(a, b) = tau_s(m a, b)
  for (std::uint64_t n : {4, 8, 12}) {
    FgAbGroup a = FgAbGroup::cyclic(n);
    TorValue t = tor(a, a);
    GroupElement g1 = GroupElement::generator(a, 0);
    for (std::uint64_t s = 2; s < n; ++s) {
      if (n % s != 0) continue;
      std::uint64_t m = n / s;
      GroupElement b = g1 * m;  // s-torsion
      CHECK(tau(t, g1, b, n) == tau(t, g1 * m, b, s));
      CHECK(tau(t, b, g1, n) == tau(t, b, g1 * m, s));
    }
  }
}

TEST_CASE("tor swap squares to the identity and fixes cyclic Tor pointwise") {
  for (const FgAbGroup& a : sample_groups()) {
    TorValue t = tor(a, a);
    GroupHom s = tor_swap(t);
    CHECK(compose(s, s) == GroupHom::identity(t.group));
  }
  // on Tor(Z/n, Z/n) the involution must be the identity
  for (std::uint64_t n : {2, 3, 4, 8, 16, 9})
    CHECK(tor_swap(tor(FgAbGroup::cyclic(n), FgAbGroup::cyclic(n))) ==
          GroupHom::identity(tor(FgAbGroup::cyclic(n), FgAbGroup::cyclic(n)).group));
}

TEST_CASE("tor swap intertwines tau with the argument flip") {
  std::mt19937_64 rng(13);
  for (const FgAbGroup& a : {FgAbGroup::cyclic(4), FgAbGroup({Int(2), Int(4)}),
                             FgAbGroup({Int(2), Int(2), Int(8)})}) {
    TorValue t = tor(a, a);
    GroupHom s = tor_swap(t);
    Int n = a.exponent();
    for (int trial = 0; trial < 15; ++trial) {
      GroupElement x = random_element(a, rng), y = random_element(a, rng);
      CHECK(s(tau(t, x, y, n)) == tau(t, y, x, n));
    }
  }
}

TEST_CASE("norm chain map equals id plus the involution") {
  for (const FgAbGroup& a : sample_groups()) {
    TorValue t = tor(a, a);
    CHECK(norm_chain_map(t) == GroupHom::identity(t.group) + tor_swap(t));
  }
}

TEST_CASE("sigma_involutions bundles consistent data") {
  FgAbGroup a({Int(2), Int(4)});
  Involutions iv = sigma_involutions(a);
  CHECK(iv.sigma0 == tensor_swap(iv.taa));
  CHECK(iv.sigma_eps == tor_swap(iv.toraa));
  CHECK(iv.taa.group == tensor(a, a).group);
  CHECK(iv.toraa.group == tor(a, a).group);
}

TEST_CASE("structural gamma on known groups") {
  CHECK(gamma_structural(FgAbGroup::cyclic(2)).group.invariants() == std::vector<Int>{4});
  CHECK(gamma_structural(FgAbGroup::cyclic(3)).group.invariants() == std::vector<Int>{3});
  CHECK(gamma_structural(FgAbGroup::cyclic(4)).group.invariants() == std::vector<Int>{8});
  CHECK(gamma_structural(FgAbGroup::cyclic(5)).group.invariants() == std::vector<Int>{5});
  CHECK(gamma_structural(FgAbGroup::free_group(1)).group.invariants() == std::vector<Int>{0});
  CHECK(gamma_structural(FgAbGroup::free_group(2)).group.invariants() ==
        std::vector<Int>(3, 0));
  CHECK(gamma_structural(FgAbGroup({Int(2), Int(2)})).group.invariants() ==
        std::vector<Int>{2, 4, 4});
  CHECK(gamma_structural(FgAbGroup::trivial()).group.is_trivial());
}

TEST_CASE("gamma is quadratic and interacts correctly with psi, phi, pairing") {
  std::mt19937_64 rng(2718);
  for (const FgAbGroup& a :
       {FgAbGroup::cyclic(4), FgAbGroup({Int(2), Int(4)}), FgAbGroup({Int(3), Int(3)})}) {
    GammaValue g = gamma_structural(a);
    CHECK(quadratic_check(a, [&](const GroupElement& x) { return g.gamma(x); }));
    for (int trial = 0; trial < 20; ++trial) {
      GroupElement x = random_element(a, rng), y = random_element(a, rng);
      // gamma(nx) = n^2 gamma(x)
      Int n = rng() % 6;
      CHECK(g.gamma(x * n) == g.gamma(x) * (n * n));
      // pairing is the cross effect
      CHECK(g.pair(x, y) == g.gamma(x + y) - g.gamma(x) - g.gamma(y));
      CHECK(g.pair(x, y) == g.pair(y, x));
      // psi gamma(x) = x (x) x, phi gamma(x) = x mod 2
      CHECK(g.psi(g.gamma(x)) == g.taa.pure(x, x));
      CHECK(g.phi(g.gamma(x)) == g.mod2q.proj(x));
      // phi kills the pairing image
      CHECK(g.phi(g.pair(x, y)).is_zero());
      // psi on the pairing symmetrizes
      CHECK(g.psi(g.pair(x, y)) == g.taa.pure(x, y) + g.taa.pure(y, x));
    }
  }
}

TEST_CASE("pairing after psi is multiplication by two, and back") {
  for (const FgAbGroup& a : sample_groups()) {
    GammaValue g = gamma_structural(a);
    CHECK(compose(g.pairing, g.psi) == GroupHom::multiplication(g.group, 2));
    CHECK(compose(g.psi, g.pairing) ==
          GroupHom::identity(g.taa.group) + tensor_swap(g.taa));
  }
}

TEST_CASE("presentation gamma matches the structural construction") {
  for (const FgAbGroup& a :
       {FgAbGroup::trivial(), FgAbGroup::cyclic(2), FgAbGroup::cyclic(3),
        FgAbGroup::cyclic(4), FgAbGroup::cyclic(6), FgAbGroup({Int(2), Int(2)}),
        FgAbGroup({Int(2), Int(4)}), FgAbGroup({Int(3), Int(3)}),
        FgAbGroup({Int(2), Int(2), Int(2)})}) {
    GammaValue p = gamma_presentation(a);
    GammaValue s = gamma_structural(a);
    GammaComparison cmp = compare_gamma(p, s);
    CHECK(cmp.groups_match);
    CHECK(cmp.iso);
    CHECK(cmp.gamma_commutes);
    CHECK(cmp.psi_commutes);
    CHECK(cmp.phi_commutes);
    CHECK(cmp.pairing_commutes);
  }
}

TEST_CASE("gamma order identity") {
  // |Gamma(A)| = |A (x) A| / |antisymmetric part| * |A/2|, i.e. the order of
  // the swap-coinvariants times |A/2|
  for (const FgAbGroup& a : sample_groups()) {
    if (!a.is_finite()) continue;
    GammaValue g = gamma_structural(a);
    GroupHom omega = tensor_swap(g.taa);
    Quotient co = cokernel(omega - GroupHom::identity(g.taa.group));
    CHECK(g.group.order() == co.group.order() * g.mod2q.group.order());
  }
}

TEST_CASE("quadratic_check rejects non-quadratic maps") {
  FgAbGroup a = FgAbGroup::cyclic(5);
  // x -> x^3 is odd, so f(-x) != f(x)
  CHECK(!quadratic_check(a, [&](const GroupElement& x) {
    return GroupElement(a, {x.coords()[0] * x.coords()[0] * x.coords()[0]});
  }));
  CHECK(quadratic_check(a, [&](const GroupElement& x) {
    return GroupElement(a, {x.coords()[0] * x.coords()[0]});
  }));
}

TEST_CASE("universal factorization recovers psi from the square map") {
  for (const FgAbGroup& a :
       {FgAbGroup::cyclic(4), FgAbGroup({Int(2), Int(4)}), FgAbGroup({Int(2), Int(2)})}) {
    GammaValue g = gamma_structural(a);
    GroupHom h = universal_factorization(
        g, g.taa.group, [&](const GroupElement& x) { return g.taa.pure(x, x); });
    CHECK(h == g.psi);
    // and the identity from gamma itself
    GroupHom h2 = universal_factorization(
        g, g.group, [&](const GroupElement& x) { return g.gamma(x); });
    CHECK(h2 == GroupHom::identity(g.group));
  }
}

TEST_CASE("universal factorization rejects non-quadratic input") {
  FgAbGroup a = FgAbGroup::cyclic(5);
  GammaValue g = gamma_structural(a);
  CHECK_THROWS_AS(universal_factorization(g, a,
                                          [&](const GroupElement& x) {
                                            return GroupElement(
                                                a, {x.coords()[0] * x.coords()[0] *
                                                    x.coords()[0]});
                                          }),
                  std::invalid_argument);
}
