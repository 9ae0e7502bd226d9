#pragma once

#include "gammacalc/intlin.hpp"

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>

namespace gammacalc {

inline constexpr std::uint64_t kDefaultEnumCap = 4096;

struct InfiniteEnumerationError : std::runtime_error {
  InfiniteEnumerationError()
      : std::runtime_error("cannot enumerate an infinite group") {}
};

struct SizeCapError : std::runtime_error {
  std::uint64_t cap;
  explicit SizeCapError(std::uint64_t c)
      : std::runtime_error("group order exceeds enumeration cap " + std::to_string(c)),
        cap(c) {}
};

// A finitely generated abelian group in canonical invariant-factor form:
// each entry is 0 (an infinite cyclic factor) or >= 2, nonzero entries form a
// divisibility chain, zeros trail.
class FgAbGroup {
 public:
  FgAbGroup() = default;

  explicit FgAbGroup(std::vector<Int> invariants) : inv_(std::move(invariants)) {
    bool seen_zero = false;
    for (std::size_t i = 0; i < inv_.size(); ++i) {
      const Int& d = inv_[i];
      if (d < 0 || d == 1) throw std::invalid_argument("invariant factors must be 0 or >= 2");
      if (d == 0) {
        seen_zero = true;
      } else {
        if (seen_zero) throw std::invalid_argument("zero invariants must trail");
        if (i > 0 && inv_[i - 1] != 0 && d % inv_[i - 1] != 0)
          throw std::invalid_argument("invariant factors must form a divisibility chain");
      }
    }
  }

  static FgAbGroup trivial() { return FgAbGroup(); }

  static FgAbGroup cyclic(const Int& n) {
    if (n == 1) return trivial();
    return FgAbGroup(std::vector<Int>{n});
  }

  static FgAbGroup free_group(std::size_t rank) {
    return FgAbGroup(std::vector<Int>(rank, 0));
  }

  const std::vector<Int>& invariants() const { return inv_; }
  std::size_t ngens() const { return inv_.size(); }
  bool is_trivial() const { return inv_.empty(); }

  bool is_finite() const {
    for (const Int& d : inv_) if (d == 0) return false;
    return true;
  }

  // order of the torsion-free quotient
  std::size_t free_rank() const {
    std::size_t r = 0;
    for (const Int& d : inv_) if (d == 0) ++r;
    return r;
  }

  Int order() const {  // throws on infinite groups
    Int o = 1;
    for (const Int& d : inv_) {
      if (d == 0) throw InfiniteEnumerationError();
      o *= d;
    }
    return o;
  }

  Int exponent() const {  // 0 for infinite groups, 1 for the trivial group
    if (!is_finite()) return 0;
    return inv_.empty() ? Int(1) : inv_.back();
  }

  Int reduce_coord(std::size_t i, const Int& x) const {
    const Int& d = inv_[i];
    if (d == 0) return x;
    Int r = x % d;
    if (r < 0) r += d;
    return r;
  }

  bool operator==(const FgAbGroup& o) const { return inv_ == o.inv_; }
  bool operator!=(const FgAbGroup& o) const { return inv_ != o.inv_; }

  std::string str() const {
    if (inv_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < inv_.size(); ++i) {
      if (i) os << " + ";
      if (inv_[i] == 0) os << "Z";
      else os << "Z/" << inv_[i];
    }
    return os.str();
  }

 private:
  std::vector<Int> inv_;
};

// An element in reduced coordinates over the parent's generators.
class GroupElement {
 public:
  GroupElement(FgAbGroup parent, std::vector<Int> coords)
      : parent_(std::move(parent)), coords_(std::move(coords)) {
    if (coords_.size() != parent_.ngens())
      throw std::invalid_argument("element coordinate count mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i)
      coords_[i] = parent_.reduce_coord(i, coords_[i]);
  }

  static GroupElement zero(const FgAbGroup& g) {
    return GroupElement(g, std::vector<Int>(g.ngens()));
  }

  static GroupElement generator(const FgAbGroup& g, std::size_t i) {
    std::vector<Int> c(g.ngens());
    c[i] = 1;
    return GroupElement(g, std::move(c));
  }

  const FgAbGroup& parent() const { return parent_; }
  const std::vector<Int>& coords() const { return coords_; }

  bool is_zero() const {
    for (const Int& c : coords_) if (c != 0) return false;
    return true;
  }

  GroupElement operator+(const GroupElement& o) const {
    require_same_parent(o);
    std::vector<Int> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return GroupElement(parent_, std::move(c));
  }

  GroupElement operator-(const GroupElement& o) const {
    require_same_parent(o);
    std::vector<Int> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return GroupElement(parent_, std::move(c));
  }

  GroupElement operator-() const {
    std::vector<Int> c(coords_);
    for (Int& x : c) x = -x;
    return GroupElement(parent_, std::move(c));
  }

  GroupElement operator*(const Int& n) const {
    std::vector<Int> c(coords_);
    for (Int& x : c) x *= n;
    return GroupElement(parent_, std::move(c));
  }

  bool operator==(const GroupElement& o) const {
    return parent_ == o.parent_ && coords_ == o.coords_;
  }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }

 private:
  void require_same_parent(const GroupElement& o) const {
    if (parent_ != o.parent_) throw std::invalid_argument("elements of different groups");
  }

  FgAbGroup parent_;
  std::vector<Int> coords_;
};

inline GroupElement operator*(const Int& n, const GroupElement& e) { return e * n; }

// A homomorphism as an integer matrix: columns are images of dom generators in
// cod coordinates. Well-definedness is validated on construction.
class GroupHom {
 public:
  GroupHom() : mat_(0, 0) {}

  GroupHom(FgAbGroup dom, FgAbGroup cod, IntMatrix mat)
      : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(mat)) {
    if (mat_.rows() != cod_.ngens() || mat_.cols() != dom_.ngens())
      throw std::invalid_argument("hom matrix shape mismatch");
    for (std::size_t i = 0; i < mat_.rows(); ++i)
      for (std::size_t j = 0; j < mat_.cols(); ++j)
        mat_.at(i, j) = cod_.reduce_coord(i, mat_.at(i, j));
    for (std::size_t j = 0; j < dom_.ngens(); ++j) {
      const Int& d = dom_.invariants()[j];
      if (d == 0) continue;
      for (std::size_t i = 0; i < cod_.ngens(); ++i) {
        const Int& e = cod_.invariants()[i];
        Int v = d * mat_.at(i, j);
        bool ok = (e == 0) ? (v == 0) : (v % e == 0);
        if (!ok) throw std::invalid_argument("hom not well-defined on generator");
      }
    }
  }

  static GroupHom identity(const FgAbGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.ngens()));
  }

  static GroupHom zero(const FgAbGroup& dom, const FgAbGroup& cod) {
    return GroupHom(dom, cod, IntMatrix(cod.ngens(), dom.ngens()));
  }

  static GroupHom multiplication(const FgAbGroup& g, const Int& n) {
    IntMatrix m(g.ngens(), g.ngens());
    for (std::size_t i = 0; i < g.ngens(); ++i) m.at(i, i) = n;
    return GroupHom(g, g, std::move(m));
  }

  const FgAbGroup& dom() const { return dom_; }
  const FgAbGroup& cod() const { return cod_; }
  const IntMatrix& matrix() const { return mat_; }

  GroupElement apply(const GroupElement& x) const {
    if (x.parent() != dom_) throw std::invalid_argument("element not in hom domain");
    return GroupElement(cod_, mat_ * x.coords());
  }

  GroupElement operator()(const GroupElement& x) const { return apply(x); }

  bool is_zero() const { return mat_.is_zero(); }

  bool operator==(const GroupHom& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && mat_ == o.mat_;
  }

  GroupHom operator+(const GroupHom& o) const {
    require_parallel(o);
    return GroupHom(dom_, cod_, mat_ + o.mat_);
  }

  GroupHom operator-(const GroupHom& o) const {
    require_parallel(o);
    return GroupHom(dom_, cod_, mat_ - o.mat_);
  }

 private:
  void require_parallel(const GroupHom& o) const {
    if (dom_ != o.dom_ || cod_ != o.cod_)
      throw std::invalid_argument("homs are not parallel");
  }

  FgAbGroup dom_, cod_;
  IntMatrix mat_;
};

// g after f
inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.cod() != g.dom()) throw std::invalid_argument("homs are not composable");
  return GroupHom(f.dom(), g.cod(), g.matrix() * f.matrix());
}

// Generators-and-relations description: rows of `relations` are relators over
// `gens` free generators.
struct Presentation {
  std::size_t gens = 0;
  IntMatrix relations;  // rows x gens
};

struct Canonicalization {
  FgAbGroup group;
  IntMatrix forward;   // group.ngens x gens: coordinates of each free generator
  IntMatrix backward;  // gens x group.ngens: a section of forward
};

inline Canonicalization canonicalize(const Presentation& p) {
  if (p.relations.cols() != p.gens && p.relations.rows() != 0)
    throw std::invalid_argument("presentation relation width mismatch");
  std::size_t g = p.gens;
  IntMatrix basis = row_lattice_basis(
      p.relations.rows() ? p.relations : IntMatrix(0, g));
  SmithDecomposition s = smith_normal_form(basis);
  std::size_t rk = s.rank();

  std::vector<Int> invariants;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < rk; ++i)
    if (s.diag[i] >= 2) {
      invariants.push_back(s.diag[i]);
      kept.push_back(i);
    }
  for (std::size_t i = rk; i < g; ++i) {
    invariants.push_back(0);
    kept.push_back(i);
  }

  Canonicalization out;
  out.group = FgAbGroup(std::move(invariants));
  std::size_t k = kept.size();
  // x (row) maps to x * right; keep the non-unit coordinates
  out.forward = IntMatrix(k, g);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t j = 0; j < g; ++j)
      out.forward.at(t, j) = out.group.reduce_coord(t, s.right.at(j, kept[t]));
  out.backward = IntMatrix(g, k);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t t = 0; t < k; ++t)
      out.backward.at(j, t) = s.right_inv.at(kept[t], j);
  return out;
}

struct Subgroup {
  FgAbGroup group;
  GroupHom incl;  // injective, into the ambient group
};

struct Quotient {
  FgAbGroup group;
  GroupHom proj;  // surjective, from the ambient group
};

namespace detail {

// columns of diag(d_i) for the finite invariants: the relation lattice of g
inline IntMatrix relation_columns(const FgAbGroup& g) {
  std::vector<std::size_t> fin;
  for (std::size_t i = 0; i < g.ngens(); ++i)
    if (g.invariants()[i] != 0) fin.push_back(i);
  IntMatrix m(g.ngens(), fin.size());
  for (std::size_t j = 0; j < fin.size(); ++j)
    m.at(fin[j], j) = g.invariants()[fin[j]];
  return m;
}

}  // namespace detail

// The subgroup of `ambient` generated by the columns of gens_cols.
inline Subgroup subgroup_from_generators(const FgAbGroup& ambient,
                                         const IntMatrix& gens_cols) {
  if (gens_cols.rows() != ambient.ngens())
    throw std::invalid_argument("generator columns have wrong height");
  std::size_t k = gens_cols.cols();
  IntMatrix rel_amb = detail::relation_columns(ambient);
  // relations: c with  gens_cols * c  in the ambient relation lattice
  IntMatrix ker = kernel_basis(gens_cols.hstack(rel_amb));
  IntMatrix rels(ker.cols(), k);
  for (std::size_t j = 0; j < ker.cols(); ++j)
    for (std::size_t i = 0; i < k; ++i) rels.at(j, i) = ker.at(i, j);
  Canonicalization c = canonicalize(Presentation{k, std::move(rels)});
  IntMatrix incl_mat = gens_cols * c.backward;
  return Subgroup{c.group, GroupHom(c.group, ambient, std::move(incl_mat))};
}

inline bool subgroup_contains(const Subgroup& s, const GroupElement& x) {
  if (x.parent() != s.incl.cod()) throw std::invalid_argument("element not in ambient group");
  IntMatrix m = s.incl.matrix().hstack(detail::relation_columns(x.parent()));
  return solve(m, x.coords()).has_value();
}

inline Subgroup kernel(const GroupHom& f) {
  IntMatrix m = f.matrix().hstack(detail::relation_columns(f.cod()));
  IntMatrix ker = kernel_basis(m);
  IntMatrix gens(f.dom().ngens(), ker.cols());
  for (std::size_t j = 0; j < ker.cols(); ++j)
    for (std::size_t i = 0; i < f.dom().ngens(); ++i)
      gens.at(i, j) = ker.at(i, j);
  return subgroup_from_generators(f.dom(), gens);
}

inline Subgroup image(const GroupHom& f) {
  return subgroup_from_generators(f.cod(), f.matrix());
}

inline Quotient cokernel(const GroupHom& f) {
  const FgAbGroup& cod = f.cod();
  std::size_t g = cod.ngens();
  IntMatrix relcols = detail::relation_columns(cod);
  IntMatrix rels(relcols.cols() + f.dom().ngens(), g);
  for (std::size_t j = 0; j < relcols.cols(); ++j)
    for (std::size_t i = 0; i < g; ++i) rels.at(j, i) = relcols.at(i, j);
  for (std::size_t j = 0; j < f.dom().ngens(); ++j)
    for (std::size_t i = 0; i < g; ++i)
      rels.at(relcols.cols() + j, i) = f.matrix().at(i, j);
  Canonicalization c = canonicalize(Presentation{g, std::move(rels)});
  return Quotient{c.group, GroupHom(cod, c.group, c.forward)};
}

struct DirectSum {
  FgAbGroup group;
  GroupHom inj_left, inj_right;    // biproduct injections
  GroupHom proj_left, proj_right;  // biproduct projections
};

inline DirectSum direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  std::size_t ma = a.ngens(), mb = b.ngens();
  std::vector<Int> orders;
  orders.reserve(ma + mb);
  for (const Int& d : a.invariants()) orders.push_back(d);
  for (const Int& d : b.invariants()) orders.push_back(d);
  IntMatrix rels(ma + mb, ma + mb);
  for (std::size_t i = 0; i < orders.size(); ++i) rels.at(i, i) = orders[i];
  Canonicalization c = canonicalize(Presentation{ma + mb, std::move(rels)});

  auto embed = [&](std::size_t offset, std::size_t n) {
    IntMatrix e(ma + mb, n);
    for (std::size_t j = 0; j < n; ++j) e.at(offset + j, j) = 1;
    return e;
  };
  auto split = [&](std::size_t offset, std::size_t n, const FgAbGroup& part) {
    IntMatrix p(n, c.group.ngens());
    for (std::size_t t = 0; t < c.group.ngens(); ++t)
      for (std::size_t j = 0; j < n; ++j)
        p.at(j, t) = part.reduce_coord(j, c.backward.at(offset + j, t));
    return p;
  };

  DirectSum out{
      c.group,
      GroupHom(a, c.group, c.forward * embed(0, ma)),
      GroupHom(b, c.group, c.forward * embed(ma, mb)),
      GroupHom(c.group, a, split(0, ma, a)),
      GroupHom(c.group, b, split(ma, mb, b)),
  };
  return out;
}

// Canonical group with the given cyclic orders (0 meaning Z, 1 meaning trivial).
inline FgAbGroup group_of_orders(const std::vector<Int>& orders) {
  IntMatrix rels(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rels.at(i, i) = orders[i];
  return canonicalize(Presentation{orders.size(), std::move(rels)}).group;
}

inline Subgroup n_torsion(const FgAbGroup& a, const Int& n) {
  if (n < 1) throw std::invalid_argument("n_torsion requires n >= 1");
  return kernel(GroupHom::multiplication(a, n));
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline Subgroup p_primary_part(const FgAbGroup& a, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("p_primary_part requires a prime");
  std::vector<std::size_t> idx;
  std::vector<Int> cogens;
  for (std::size_t i = 0; i < a.ngens(); ++i) {
    Int d = a.invariants()[i];
    if (d == 0) continue;
    Int q = 1;
    while (d % p == 0) { d /= p; q *= p; }
    if (q > 1) { idx.push_back(i); cogens.push_back(d); }
  }
  IntMatrix gens(a.ngens(), idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) gens.at(idx[j], j) = cogens[j];
  return subgroup_from_generators(a, gens);
}

inline Quotient mod2(const FgAbGroup& a) {
  return cokernel(GroupHom::multiplication(a, 2));
}

inline std::vector<GroupElement> enumerate(const FgAbGroup& a,
                                           std::uint64_t cap = kDefaultEnumCap) {
  if (!a.is_finite()) throw InfiniteEnumerationError();
  Int order = a.order();
  if (order > cap) throw SizeCapError(cap);
  std::size_t n = order.convert_to<std::size_t>();
  std::vector<GroupElement> out;
  out.reserve(n);
  std::vector<Int> c(a.ngens());
  for (std::size_t t = 0; t < n; ++t) {
    out.emplace_back(a, c);
    for (std::size_t i = a.ngens(); i-- > 0;) {
      c[i] += 1;
      if (c[i] < a.invariants()[i]) break;
      c[i] = 0;
    }
  }
  return out;
}

// index of a reduced element in enumerate() order (mixed radix, last coordinate
// fastest)
inline std::size_t element_index(const GroupElement& x) {
  const FgAbGroup& g = x.parent();
  if (!g.is_finite()) throw InfiniteEnumerationError();
  Int idx = 0;
  for (std::size_t i = 0; i < g.ngens(); ++i)
    idx = idx * g.invariants()[i] + x.coords()[i];
  return idx.convert_to<std::size_t>();
}

}  // namespace gammacalc
