#ifndef BASISKIT_REPRESENTATION_HPP
#define BASISKIT_REPRESENTATION_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "basiskit/carrier.hpp"
#include "basiskit/errors.hpp"
#include "basiskit/group.hpp"
#include "basiskit/matrix_group.hpp"

namespace basiskit {

enum class Side { left, right };
enum class Variance { covariant, contravariant, both, neither };

constexpr std::string_view to_string(Side s) noexcept { return s == Side::left ? "left" : "right"; }
constexpr Side opposite(Side s) noexcept { return s == Side::left ? Side::right : Side::left; }

constexpr std::string_view to_string(Variance v) noexcept {
  switch (v) {
    case Variance::covariant: return "covariant";
    case Variance::contravariant: return "contravariant";
    case Variance::both: return "both";
    case Variance::neither: return "neither";
  }
  return "?";
}

inline constexpr std::size_t kExhaustiveBudget = 1000000;
inline constexpr std::size_t kDefaultSamples = 1000;
inline constexpr std::uint64_t kDefaultSeed = 42;

// How universally quantified laws are certified. Automatic mode enumerates
// everything while the number of checked cases stays within `budget`, and
// otherwise draws `samples` seeded random cases.
struct SamplePolicy {
  enum class Mode { automatic, exhaustive, sampled };
  Mode mode = Mode::automatic;
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = kExhaustiveBudget;
};

/// Outcome of a law check. The counterexample lists labels of the first
/// violating case in enumeration order.
struct Verdict {
  std::string check;
  bool passed = true;
  std::string mode = "exhaustive";
  std::size_t checked = 0;
  std::vector<std::string> counterexample;
  double max_residual = 0.0;
  double mean_residual = 0.0;
};

template <EnumerableGroup G, Carrier C>
class Representation {
 public:
  using group_type = G;
  using carrier_type = C;
  using element_type = typename G::element_type;
  using point_type = typename C::point_type;
  using Action = std::function<point_type(const element_type&, const point_type&)>;

  // The action is written u' = f(g)u for left-side and u' = u f(g) for
  // right-side representations; `action(g, u)` returns u' either way.
  Representation(std::shared_ptr<const G> group, C carrier, Side side, Action action, std::string name = {})
      : group_(std::move(group)), carrier_(std::move(carrier)), side_(side), action_(std::move(action)),
        name_(std::move(name)) {
    const element_type e = group_->identity();
    for (const auto& u : carrier_.probes()) {
      if (!carrier_.equal(action_(e, u), u)) {
        throw Error(ErrorKind::NotHomomorphism, "assigned transformation of the identity moves " + carrier_.label(u));
      }
    }
  }

  [[nodiscard]] const G& group() const noexcept { return *group_; }
  [[nodiscard]] const std::shared_ptr<const G>& group_ptr() const noexcept { return group_; }
  [[nodiscard]] const C& carrier() const noexcept { return carrier_; }
  [[nodiscard]] Side side() const noexcept { return side_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const Action& action() const noexcept { return action_; }

  [[nodiscard]] point_type apply(const element_type& g, const point_type& u) const {
    if (g.owner != group_->id()) throw Error(ErrorKind::MixedGroups, "element does not belong to the group");
    if (!carrier_.contains(u)) throw Error(ErrorKind::CarrierMismatch, "point is not in the carrier");
    return action_(g, u);
  }

 private:
  std::shared_ptr<const G> group_;
  C carrier_;
  Side side_;
  Action action_;
  std::string name_;
};

namespace detail {

template <Carrier C>
double point_distance(const C& carrier, const typename C::point_type& a, const typename C::point_type& b) {
  if constexpr (requires { carrier.distance(a, b); }) {
    return carrier.distance(a, b);
  } else {
    return carrier.equal(a, b) ? 0.0 : 1.0;
  }
}

inline std::string sampled_mode(const SamplePolicy& p) {
  return "sampled(seed=" + std::to_string(p.seed) + ",k=" + std::to_string(p.samples) + ")";
}

inline bool use_exhaustive(const SamplePolicy& p, std::size_t work) {
  switch (p.mode) {
    case SamplePolicy::Mode::exhaustive: return true;
    case SamplePolicy::Mode::sampled: return false;
    case SamplePolicy::Mode::automatic: return work <= p.budget;
  }
  return true;
}

// Runs `body(i, j, k)` over an index cube exhaustively or on seeded samples,
// stopping at the first failing case. `body` returns nullopt on success or the
// residual it saw; residual statistics are accumulated either way.
template <class Body>
void sweep3(Verdict& v, const SamplePolicy& policy, std::size_t ni, std::size_t nj, std::size_t nk, Body&& body) {
  double sum = 0.0;
  auto visit = [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto [ok, residual] = body(i, j, k);
    ++v.checked;
    sum += residual;
    v.max_residual = std::max(v.max_residual, residual);
    return ok;
  };
  if (ni == 0 || nj == 0 || nk == 0) return;
  if (use_exhaustive(policy, ni * nj * nk)) {
    v.mode = "exhaustive";
    for (std::size_t i = 0; i < ni; ++i)
      for (std::size_t j = 0; j < nj; ++j)
        for (std::size_t k = 0; k < nk; ++k)
          if (!visit(i, j, k)) {
            v.passed = false;
            v.mean_residual = sum / static_cast<double>(v.checked);
            return;
          }
  } else {
    v.mode = sampled_mode(policy);
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<std::size_t> di(0, ni - 1), dj(0, nj - 1), dk(0, nk - 1);
    for (std::size_t s = 0; s < policy.samples; ++s) {
      const std::size_t i = di(rng);
      const std::size_t j = dj(rng);
      const std::size_t k = dk(rng);
      if (!visit(i, j, k)) {
        v.passed = false;
        break;
      }
    }
  }
  if (v.checked) v.mean_residual = sum / static_cast<double>(v.checked);
}

}  // namespace detail

// Points over which laws are checked: every point of a finite carrier, the
// probe set otherwise.
template <EnumerableGroup G, Carrier C>
std::vector<typename C::point_type> check_points(const Representation<G, C>& rep) {
  if constexpr (FiniteCarrierType<C>) {
    return rep.carrier().points();
  } else {
    return rep.carrier().probes();
  }
}

/// f(e) = delta and the composition law of `side` (the representation's own side by default):
/// left f(ab)u = f(a)(f(b)u), right u f(ab) = (u f(a)) f(b).
template <EnumerableGroup G, Carrier C>
Verdict check_axioms(const Representation<G, C>& rep, SamplePolicy policy = {}, std::optional<Side> side = std::nullopt) {
  const Side law = side.value_or(rep.side());
  Verdict v;
  v.check = std::string(to_string(law)) + "-side representation law";
  const auto& g = rep.group();
  const auto elems = g.elements();
  const auto pts = check_points(rep);
  const auto& carrier = rep.carrier();

  for (const auto& u : pts) {
    const auto image = rep.apply(g.identity(), u);
    ++v.checked;
    if (!carrier.equal(image, u)) {
      v.passed = false;
      v.counterexample = {g.label(g.identity()), carrier.label(u)};
      v.check += " (identity)";
      return v;
    }
  }

  detail::sweep3(v, policy, elems.size(), elems.size(), pts.size(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto& a = elems[i];
    const auto& b = elems[j];
    const auto& u = pts[k];
    const auto lhs = rep.apply(g.compose(a, b), u);
    const auto rhs = law == Side::left ? rep.apply(a, rep.apply(b, u)) : rep.apply(b, rep.apply(a, u));
    const bool ok = carrier.equal(lhs, rhs);
    if (!ok) v.counterexample = {g.label(a), g.label(b), carrier.label(u)};
    return std::pair{ok, detail::point_distance(carrier, lhs, rhs)};
  });
  return v;
}

/// Which transformation product makes the assignment a (anti)homomorphism.
enum class Product {
  // (t1 t2)u = t1(t2 u), with t(u) meaning the action on u for either side.
  composition,
  // left: (t1 t2)u = t1(t2 u); right: u(t1 t2) = (u t1) t2.
  side_natural,
};

struct VarianceVerdict {
  Variance variance = Variance::neither;
  std::string mode = "exhaustive";
  std::size_t checked_pairs = 0;
  // First pair breaking f(ab) = f(a)f(b), resp. f(ba) = f(a)f(b).
  std::vector<std::string> homomorphism_witness;
  std::vector<std::string> antihomomorphism_witness;
};

template <EnumerableGroup G, Carrier C>
VarianceVerdict check_variance(const Representation<G, C>& rep, Product product = Product::composition,
                               SamplePolicy policy = {}) {
  VarianceVerdict out;
  const auto& g = rep.group();
  const auto elems = g.elements();
  const auto probes = rep.carrier().probes();
  const auto& carrier = rep.carrier();
  const bool reversed = product == Product::side_natural && rep.side() == Side::right;

  // (f(x) * f(y)) u under the chosen product.
  auto product_apply = [&](const auto& x, const auto& y, const auto& u) {
    return reversed ? rep.apply(y, rep.apply(x, u)) : rep.apply(x, rep.apply(y, u));
  };
  auto same = [&](const auto& lhs_elem, const auto& x, const auto& y) {
    for (const auto& u : probes) {
      if (!carrier.equal(rep.apply(lhs_elem, u), product_apply(x, y, u))) return false;
    }
    return true;
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t n = elems.size();
  if (detail::use_exhaustive(policy, n * n * probes.size())) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
  } else {
    out.mode = detail::sampled_mode(policy);
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    for (std::size_t s = 0; s < policy.samples; ++s) pairs.emplace_back(d(rng), d(rng));
  }

  bool hom = true;
  bool anti = true;
  for (const auto& [i, j] : pairs) {
    const auto& a = elems[i];
    const auto& b = elems[j];
    ++out.checked_pairs;
    if (hom && !same(g.compose(a, b), a, b)) {
      hom = false;
      out.homomorphism_witness = {g.label(a), g.label(b)};
    }
    if (anti && !same(g.compose(b, a), a, b)) {
      anti = false;
      out.antihomomorphism_witness = {g.label(a), g.label(b)};
    }
    if (!hom && !anti) break;
  }
  out.variance = hom && anti ? Variance::both : hom ? Variance::covariant : anti ? Variance::contravariant : Variance::neither;
  return out;
}

/// f(g^{-1}) = f(g)^{-1}: both composites fix every probe point.
template <EnumerableGroup G, Carrier C>
Verdict inverse_law_check(const Representation<G, C>& rep) {
  Verdict v;
  v.check = "inverse law f(g^-1) = f(g)^-1";
  const auto& g = rep.group();
  const auto& carrier = rep.carrier();
  const auto probes = carrier.probes();
  double sum = 0.0;
  for (const auto& a : g.elements()) {
    const auto ainv = g.inverse(a);
    for (const auto& u : probes) {
      const auto there_back = rep.apply(ainv, rep.apply(a, u));
      const auto back_there = rep.apply(a, rep.apply(ainv, u));
      const double r = std::max(detail::point_distance(carrier, there_back, u), detail::point_distance(carrier, back_there, u));
      ++v.checked;
      sum += r;
      v.max_residual = std::max(v.max_residual, r);
      if (!carrier.equal(there_back, u) || !carrier.equal(back_there, u)) {
        v.passed = false;
        v.counterexample = {g.label(a), carrier.label(u)};
        v.mean_residual = sum / static_cast<double>(v.checked);
        return v;
      }
    }
  }
  if (v.checked) v.mean_residual = sum / static_cast<double>(v.checked);
  return v;
}

// Extensional equality of f(a) and f(b) on the probe set.
template <EnumerableGroup G, Carrier C>
bool same_transformation(const Representation<G, C>& rep, const typename G::element_type& a,
                         const typename G::element_type& b) {
  for (const auto& u : rep.carrier().probes()) {
    if (!rep.carrier().equal(rep.apply(a, u), rep.apply(b, u))) return false;
  }
  return true;
}

template <EnumerableGroup G, Carrier C>
bool is_identity_transformation(const Representation<G, C>& rep, const typename G::element_type& a) {
  for (const auto& u : rep.carrier().probes()) {
    if (!rep.carrier().equal(rep.apply(a, u), u)) return false;
  }
  return true;
}

// Matrix of a linear transformation on a coordinate carrier: M with
// f(g)u = M u (column layout) or u M (row layout).
template <EnumerableGroup G, Scalar T>
Matrix<T> linear_matrix(const Representation<G, CoordinateCarrier<T>>& rep, const typename G::element_type& g) {
  const std::size_t n = rep.carrier().dim;
  Matrix<T> m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto image = rep.apply(g, kronecker_delta<T>(n, k));
    for (std::size_t i = 0; i < n; ++i) {
      if (rep.carrier().layout == Layout::column) {
        m(i, k) = image[i];
      } else {
        m(k, i) = image[i];
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// L(a)b = ab on the group itself.
template <EnumerableGroup G>
Representation<G, GroupCarrier<G>> left_shift(std::shared_ptr<const G> group) {
  GroupCarrier<G> carrier{group};
  const G* g = group.get();
  return {std::move(group), std::move(carrier), Side::left,
          [g](const auto& a, const auto& b) { return g->compose(a, b); }, "left shift"};
}

/// R(a)b = ba on the group itself; a right-side representation.
template <EnumerableGroup G>
Representation<G, GroupCarrier<G>> right_shift(std::shared_ptr<const G> group) {
  GroupCarrier<G> carrier{group};
  const G* g = group.get();
  return {std::move(group), std::move(carrier), Side::right,
          [g](const auto& a, const auto& b) { return g->compose(b, a); }, "right shift"};
}

template <EnumerableGroup G, Carrier C>
Representation<G, C> trivial_representation(std::shared_ptr<const G> group, C carrier, Side side = Side::left) {
  return {std::move(group), std::move(carrier), side, [](const auto&, const auto& u) { return u; }, "trivial"};
}

// Finite group acting on {0..m-1}; table[g][u] is the image of u under g.
inline Representation<FiniteGroup, FiniteCarrier> permutation_representation(
    std::shared_ptr<const FiniteGroup> group, std::size_t points, std::vector<std::vector<std::size_t>> table,
    Side side = Side::left) {
  if (table.size() != group->order()) {
    throw Error(ErrorKind::DimensionMismatch, "permutation table needs one row per group element");
  }
  for (const auto& row : table) {
    if (row.size() != points) throw Error(ErrorKind::DimensionMismatch, "permutation row has wrong length");
    std::vector<bool> hit(points, false);
    for (const auto x : row) {
      if (x >= points || hit[x]) throw Error(ErrorKind::NotInvertible, "permutation row is not a bijection");
      hit[x] = true;
    }
  }
  auto shared = std::make_shared<const std::vector<std::vector<std::size_t>>>(std::move(table));
  return {std::move(group), FiniteCarrier{points}, side,
          [shared](const FiniteGroup::Element& g, std::size_t u) { return (*shared)[g.index][u]; },
          "permutation table"};
}

enum class LinearMode { direct, inverse, transpose, inverse_transpose };

constexpr std::string_view to_string(LinearMode m) noexcept {
  switch (m) {
    case LinearMode::direct: return "direct";
    case LinearMode::inverse: return "inverse";
    case LinearMode::transpose: return "transpose";
    case LinearMode::inverse_transpose: return "inverse-transpose";
  }
  return "?";
}

/// Matrix group acting linearly on coordinates: column layout u' = M u,
/// row layout u' = u M, where M is g, g^-1, g^T or g^-T.
template <Scalar T>
Representation<MatrixGroup<T>, CoordinateCarrier<T>> linear_representation(std::shared_ptr<const MatrixGroup<T>> group,
                                                                          Layout layout, Side side,
                                                                          LinearMode mode = LinearMode::direct) {
  CoordinateCarrier<T> carrier{group->dim(), layout, group->tolerance()};
  const double tol = group->tolerance();
  auto matrix_of = [mode, tol](const Matrix<T>& g) {
    switch (mode) {
      case LinearMode::direct: return g;
      case LinearMode::inverse: return inverse(g, tol);
      case LinearMode::transpose: return g.transpose();
      case LinearMode::inverse_transpose: return inverse(g, tol).transpose();
    }
    return g;
  };
  return {std::move(group), carrier, side,
          [layout, matrix_of](const typename MatrixGroup<T>::Element& g, const Vector<T>& u) {
            const Matrix<T> m = matrix_of(g.matrix);
            return layout == Layout::column ? apply_column(m, u) : apply_row(u, m);
          },
          "linear (" + std::string(to_string(mode)) + ", " + std::string(to_string(layout)) + ")"};
}

/// Affine group acting on points A' = P A + R. With composition "a then b"
/// this satisfies the right-side law.
template <Scalar T>
Representation<AffineGroup<T>, CoordinateCarrier<T>> affine_point_representation(
    std::shared_ptr<const AffineGroup<T>> group) {
  CoordinateCarrier<T> carrier{group->dim(), Layout::column, group->tolerance()};
  return {std::move(group), carrier, Side::right,
          [](const typename AffineGroup<T>::Element& g, const Vector<T>& u) { return affine_apply(g.transform, u); },
          "affine points"};
}

/// h(a) = f(a^-1). Inversion swaps homomorphisms and antihomomorphisms, so the
/// result satisfies the opposite-side law and has the opposite variance.
template <EnumerableGroup G, Carrier C>
Representation<G, C> contragredient(const Representation<G, C>& rep, SamplePolicy policy = {}) {
  const VarianceVerdict vv = check_variance(rep, Product::composition, policy);
  if (vv.variance == Variance::neither) {
    throw Error(ErrorKind::NotCovariant, "assignment is neither a homomorphism nor an antihomomorphism");
  }
  auto group = rep.group_ptr();
  const G* g = group.get();
  auto action = rep.action();
  return {group, rep.carrier(), opposite(rep.side()),
          [g, action](const auto& a, const auto& u) { return action(g->inverse(a), u); },
          "contragredient(" + rep.name() + ")"};
}

/// f1 (x) f2 acting componentwise on M1 x M2.
template <EnumerableGroup G, Carrier C1, Carrier C2>
Representation<G, ProductCarrier<C1, C2>> direct_product(const Representation<G, C1>& rep1,
                                                         const Representation<G, C2>& rep2) {
  if (rep1.group().id() != rep2.group().id()) {
    throw Error(ErrorKind::GroupMismatch, "direct product needs representations of the same group");
  }
  if (rep1.side() != rep2.side()) throw Error(ErrorKind::SideMismatch, "direct product needs equal sides");
  auto a1 = rep1.action();
  auto a2 = rep2.action();
  return {rep1.group_ptr(), ProductCarrier<C1, C2>{rep1.carrier(), rep2.carrier()}, rep1.side(),
          [a1, a2](const auto& g, const auto& u) { return std::pair{a1(g, u.first), a2(g, u.second)}; },
          rep1.name() + " x " + rep2.name()};
}

// ---------------------------------------------------------------------------
// Orbits
// ---------------------------------------------------------------------------

template <class Point, class Element>
struct Orbit {
  Point base;
  std::vector<Point> points;
  std::vector<Element> witnesses;  // points[i] = f(witnesses[i]) base
};

template <EnumerableGroup G, Carrier C>
Orbit<typename C::point_type, typename G::element_type> orbit(const Representation<G, C>& rep,
                                                              const typename C::point_type& v,
                                                              std::size_t cap = kDefaultEnumerationCap) {
  const auto elems = rep.group().elements();
  if (elems.size() > cap) {
    throw Error(ErrorKind::EnumerationCapExceeded, "group has " + std::to_string(elems.size()) +
                                                       " elements, cap is " + std::to_string(cap));
  }
  Orbit<typename C::point_type, typename G::element_type> out{v, {}, {}};
  const auto& carrier = rep.carrier();
  std::vector<bool> seen;
  if constexpr (FiniteCarrierType<C>) seen.assign(carrier.size(), false);
  for (const auto& g : elems) {
    auto w = rep.apply(g, v);
    bool fresh = true;
    if constexpr (FiniteCarrierType<C>) {
      const std::size_t idx = carrier.index_of(w);
      fresh = !seen[idx];
      seen[idx] = true;
    } else {
      fresh = std::none_of(out.points.begin(), out.points.end(), [&](const auto& p) { return carrier.equal(p, w); });
    }
    if (fresh) {
      out.points.push_back(std::move(w));
      out.witnesses.push_back(g);
    }
  }
  return out;
}

template <class Point, class Element>
bool orbit_contains(const Orbit<Point, Element>& o, const Point& p, const auto& carrier) {
  return std::any_of(o.points.begin(), o.points.end(), [&](const Point& q) { return carrier.equal(p, q); });
}

struct OrbitPartition {
  Verdict verdict;
  std::vector<std::vector<std::size_t>> classes;  // point indices, each sorted
};

/// v in O(u) implies O(v) = O(u), and orbits partition the carrier.
template <EnumerableGroup G, FiniteCarrierType C>
OrbitPartition orbit_well_defined_check(const Representation<G, C>& rep) {
  OrbitPartition out;
  out.verdict.check = "orbit well-definedness and partition";
  const auto& carrier = rep.carrier();
  const auto pts = carrier.points();
  std::vector<std::vector<std::size_t>> orbit_of(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (const auto& p : orbit(rep, pts[i]).points) orbit_of[i].push_back(carrier.index_of(p));
    std::sort(orbit_of[i].begin(), orbit_of[i].end());
  }
  for (std::size_t i = 0; i < pts.size() && out.verdict.passed; ++i) {
    for (const std::size_t j : orbit_of[i]) {
      ++out.verdict.checked;
      if (orbit_of[j] != orbit_of[i]) {
        out.verdict.passed = false;
        out.verdict.counterexample = {carrier.label(pts[i]), carrier.label(pts[j])};
        break;
      }
    }
  }
  std::vector<bool> covered(pts.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (covered[i]) continue;
    out.classes.push_back(orbit_of[i]);
    for (const std::size_t j : orbit_of[i]) {
      if (covered[j] && out.verdict.passed) {
        out.verdict.passed = false;
        out.verdict.counterexample = {"overlapping orbits at", carrier.label(pts[j])};
      }
      covered[j] = true;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernel, transitivity, classification
// ---------------------------------------------------------------------------

template <class Element>
struct Kernel {
  std::vector<Element> elements;
  bool contains_identity = false;
  bool closed = false;  // under compose and inverse
};

template <EnumerableGroup G, Carrier C>
Kernel<typename G::element_type> kernel_of_inefficiency(const Representation<G, C>& rep) {
  const auto& g = rep.group();
  Kernel<typename G::element_type> k;
  for (const auto& a : g.elements()) {
    if (is_identity_transformation(rep, a)) k.elements.push_back(a);
  }
  auto member = [&](const auto& x) {
    return std::any_of(k.elements.begin(), k.elements.end(), [&](const auto& y) { return g.equal(x, y); });
  };
  k.contains_identity = member(g.identity());
  k.closed = true;
  for (const auto& a : k.elements) {
    if (!member(g.inverse(a))) k.closed = false;
    for (const auto& b : k.elements) {
      if (!member(g.compose(a, b))) k.closed = false;
    }
  }
  return k;
}

struct ClassificationReport {
  Verdict axioms;
  VarianceVerdict variance;
  std::vector<std::string> kernel;
  bool kernel_is_subgroup = false;
  bool effective = false;
  bool transitive = false;
  std::vector<std::string> unreachable_pair;
  bool single_transitive = false;
  // Independent computation: every ordered pair (u, v) has exactly one g with v = f(g)u.
  bool unique_transport = false;
  std::vector<std::string> transport_witness;  // u, v, number of solutions
  bool iff_agrees = false;
  std::string mode = "exhaustive";
};

template <EnumerableGroup G, Carrier C>
ClassificationReport classify(const Representation<G, C>& rep, SamplePolicy policy = {}) {
  ClassificationReport r;
  const auto& g = rep.group();
  const auto& carrier = rep.carrier();
  r.axioms = check_axioms(rep, policy);
  r.variance = check_variance(rep, Product::composition, policy);

  const auto k = kernel_of_inefficiency(rep);
  for (const auto& a : k.elements) r.kernel.push_back(g.label(a));
  r.kernel_is_subgroup = k.contains_identity && k.closed;
  r.effective = k.elements.size() == 1 && g.equal(k.elements.front(), g.identity());

  const auto elems = g.elements();
  std::vector<typename C::point_type> pts;
  if constexpr (FiniteCarrierType<C>) {
    pts = carrier.points();
  } else {
    pts = carrier.probes();
    r.mode = "probe points";
  }

  r.transitive = true;
  r.unique_transport = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<typename C::point_type> images;
    images.reserve(elems.size());
    for (const auto& a : elems) images.push_back(rep.apply(a, pts[i]));
    for (std::size_t j = 0; j < pts.size(); ++j) {
      std::size_t count = 0;
      for (const auto& w : images) count += carrier.equal(w, pts[j]) ? 1 : 0;
      if (count == 0 && r.transitive) {
        r.transitive = false;
        r.unreachable_pair = {carrier.label(pts[i]), carrier.label(pts[j])};
      }
      if (count != 1 && r.unique_transport) {
        r.unique_transport = false;
        r.transport_witness = {carrier.label(pts[i]), carrier.label(pts[j]), std::to_string(count)};
      }
    }
  }
  r.single_transitive = r.transitive && r.effective;
  r.iff_agrees = r.single_transitive == r.unique_transport;
  return r;
}

/// The unique g with v = f(g)u.
template <EnumerableGroup G, Carrier C>
typename G::element_type solve_transport(const Representation<G, C>& rep, const typename C::point_type& u,
                                         const typename C::point_type& v) {
  if constexpr (FiniteCarrierType<C>) {
    const auto report = classify(rep, SamplePolicy{});
    if (!report.unique_transport) {
      throw Error(ErrorKind::NotSingleTransitive, "representation is not single transitive");
    }
  }
  std::vector<typename G::element_type> found;
  for (const auto& a : rep.group().elements()) {
    if (rep.carrier().equal(rep.apply(a, u), v)) found.push_back(a);
  }
  if (found.empty()) throw Error(ErrorKind::NoSolution, "no group element maps the first point to the second");
  if (found.size() > 1) throw Error(ErrorKind::NotSingleTransitive, "transport is not unique");
  return found.front();
}

/// L(a)R(b) = R(b)L(a): a(cb) = (ac)b over all triples.
template <EnumerableGroup G>
Verdict shifts_commute_check(const G& g) {
  Verdict v;
  v.check = "left and right shifts commute";
  const auto elems = g.elements();
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) {
        ++v.checked;
        if (!g.equal(g.compose(a, g.compose(c, b)), g.compose(g.compose(a, c), b))) {
          v.passed = false;
          v.counterexample = {g.label(a), g.label(b), g.label(c)};
          return v;
        }
      }
  return v;
}

template <EnumerableGroup G, Carrier C>
struct Twin {
  Representation<G, C> rep;
  typename C::point_type origin;
};

/// Given a single transitive f and an origin v0, identify w with the g_w such
/// that w = f(g_w) v0 and act by the opposite-side shift in these coordinates.
template <EnumerableGroup G, FiniteCarrierType C>
Twin<G, C> twin_representation(const Representation<G, C>& rep, std::optional<typename C::point_type> origin = std::nullopt) {
  const auto report = classify(rep, SamplePolicy{});
  if (!report.unique_transport || !report.single_transitive) {
    throw Error(ErrorKind::NotSingleTransitive, "twin representation needs a single transitive representation");
  }
  const auto& carrier = rep.carrier();
  const auto pts = carrier.points();
  const auto v0 = origin.value_or(pts.front());
  using E = typename G::element_type;
  auto coords = std::make_shared<std::vector<E>>(pts.size(), rep.group().identity());
  for (const auto& a : rep.group().elements()) (*coords)[carrier.index_of(rep.apply(a, v0))] = a;

  auto group = rep.group_ptr();
  const G* g = group.get();
  auto action = rep.action();
  const Side side = rep.side();
  auto h = [g, action, coords, carrier, v0, side](const E& a, const typename C::point_type& w) {
    const E& gw = (*coords)[carrier.index_of(w)];
    return side == Side::left ? action(g->compose(gw, a), v0) : action(g->compose(a, gw), v0);
  };
  return {Representation<G, C>(group, carrier, opposite(side), h, "twin(" + rep.name() + ")"), v0};
}

/// h(a) f(b) = f(b) h(a) on every (a, b, point).
template <EnumerableGroup G, Carrier C>
Verdict commuting_check(const Representation<G, C>& f, const Representation<G, C>& h) {
  Verdict v;
  v.check = "twin commutes with original";
  const auto& g = f.group();
  const auto elems = g.elements();
  const auto pts = check_points(f);
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& w : pts) {
        ++v.checked;
        if (!f.carrier().equal(h.apply(a, f.apply(b, w)), f.apply(b, h.apply(a, w)))) {
          v.passed = false;
          v.counterexample = {g.label(a), g.label(b), f.carrier().label(w)};
          return v;
        }
      }
  return v;
}

template <class Element>
struct NoncommutingWitness {
  Element a, b;
  Element v0, w0;  // w0 = b v0
  Element w;       // b a v0
  Element conjugate;  // b a b^-1
  bool conjugation_formula_holds = false;  // w = (b a b^-1) w0
  bool differs_from_shift = false;         // (b a b^-1) w0 != a w0
};

/// First pair with L(a)L(b) != L(b)L(a), evaluated at v0 = e, or none for
/// abelian groups.
template <EnumerableGroup G>
std::optional<NoncommutingWitness<typename G::element_type>> same_side_noncommuting_witness(const G& g) {
  const auto elems = g.elements();
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      if (g.equal(g.compose(a, b), g.compose(b, a))) continue;
      NoncommutingWitness<typename G::element_type> w{a, b, g.identity(), g.identity(), g.identity(), g.identity()};
      w.w0 = g.compose(b, w.v0);
      w.w = g.compose(b, g.compose(a, w.v0));
      w.conjugate = g.compose(g.compose(b, a), g.inverse(b));
      w.conjugation_formula_holds = g.equal(w.w, g.compose(w.conjugate, w.w0));
      w.differs_from_shift = !g.equal(g.compose(w.conjugate, w.w0), g.compose(a, w.w0));
      return w;
    }
  }
  return std::nullopt;
}

/// Same action re-expressed on {0..n-1} through the carrier's indexing, with
/// the original point labels kept as names.
template <FiniteCarrierType C>
Representation<FiniteGroup, FiniteCarrier> tabulate(const Representation<FiniteGroup, C>& rep) {
  const auto& carrier = rep.carrier();
  const auto pts = carrier.points();
  auto names = std::make_shared<std::vector<std::string>>();
  for (const auto& p : pts) names->push_back(carrier.label(p));
  auto table = std::make_shared<std::vector<std::vector<std::size_t>>>();
  for (const auto& g : rep.group().elements()) {
    std::vector<std::size_t> row;
    row.reserve(pts.size());
    for (const auto& p : pts) row.push_back(carrier.index_of(rep.apply(g, p)));
    table->push_back(std::move(row));
  }
  return {rep.group_ptr(), FiniteCarrier{pts.size(), std::move(names)}, rep.side(),
          [table](const FiniteGroup::Element& g, std::size_t u) { return (*table)[g.index][u]; }, rep.name()};
}

}  // namespace basiskit

#endif  // BASISKIT_REPRESENTATION_HPP
