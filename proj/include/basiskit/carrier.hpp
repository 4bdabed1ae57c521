#ifndef BASISKIT_CARRIER_HPP
#define BASISKIT_CARRIER_HPP

#include <concepts>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "basiskit/errors.hpp"
#include "basiskit/group.hpp"
#include "basiskit/matrix.hpp"

namespace basiskit {

enum class Layout { row, column };

constexpr std::string_view to_string(Layout l) noexcept { return l == Layout::row ? "row" : "column"; }

// A carrier exposes "probe" points: a set on which two transformations of the
// kind it admits agree iff they are equal. Finite carriers probe every point;
// coordinate carriers probe the zero vector and the Kronecker vectors.
template <class C>
concept Carrier = requires(const C& c, const typename C::point_type& p) {
  typename C::point_type;
  { c.probes() } -> std::convertible_to<std::vector<typename C::point_type>>;
  { c.contains(p) } -> std::same_as<bool>;
  { c.equal(p, p) } -> std::same_as<bool>;
  { c.label(p) } -> std::convertible_to<std::string>;
};

template <class C>
concept FiniteCarrierType = Carrier<C> && requires(const C& c, const typename C::point_type& p) {
  { c.points() } -> std::convertible_to<std::vector<typename C::point_type>>;
  { c.index_of(p) } -> std::same_as<std::size_t>;
  { c.size() } -> std::same_as<std::size_t>;
};

/// The indexed set {0, ..., size-1}.
struct FiniteCarrier {
  using point_type = std::size_t;

  std::size_t count = 0;
  std::shared_ptr<const std::vector<std::string>> names{};  // optional point labels

  [[nodiscard]] std::size_t size() const noexcept { return count; }
  [[nodiscard]] std::vector<std::size_t> points() const {
    std::vector<std::size_t> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = i;
    return out;
  }
  [[nodiscard]] std::vector<std::size_t> probes() const { return points(); }
  [[nodiscard]] bool contains(std::size_t p) const noexcept { return p < count; }
  [[nodiscard]] bool equal(std::size_t a, std::size_t b) const noexcept { return a == b; }
  [[nodiscard]] std::size_t index_of(std::size_t p) const noexcept { return p; }
  [[nodiscard]] std::string label(std::size_t p) const {
    return names && p < names->size() ? (*names)[p] : std::to_string(p);
  }
};

/// Coordinate space F^n with a row or column layout.
template <Scalar T>
struct CoordinateCarrier {
  using point_type = Vector<T>;

  std::size_t dim = 0;
  Layout layout = Layout::column;
  double tol = kDefaultTolerance;

  [[nodiscard]] std::vector<Vector<T>> probes() const {
    std::vector<Vector<T>> out;
    out.push_back(Vector<T>(dim, scalar_traits<T>::zero()));
    for (std::size_t k = 0; k < dim; ++k) out.push_back(kronecker_delta<T>(dim, k));
    return out;
  }
  [[nodiscard]] bool contains(const Vector<T>& p) const noexcept { return p.size() == dim; }
  [[nodiscard]] bool equal(const Vector<T>& a, const Vector<T>& b) const { return vector_equal(a, b, tol); }
  [[nodiscard]] double distance(const Vector<T>& a, const Vector<T>& b) const { return vector_max_abs_diff(a, b); }
  [[nodiscard]] std::string label(const Vector<T>& p) const { return to_string(p); }
};

/// The group itself, elements as points.
template <EnumerableGroup G>
struct GroupCarrier {
  using point_type = typename G::element_type;

  std::shared_ptr<const G> group;

  [[nodiscard]] std::size_t size() const { return group->elements().size(); }
  [[nodiscard]] std::vector<point_type> points() const { return group->elements(); }
  [[nodiscard]] std::vector<point_type> probes() const { return points(); }
  [[nodiscard]] bool contains(const point_type& p) const { return p.owner == group->id(); }
  [[nodiscard]] bool equal(const point_type& a, const point_type& b) const { return group->equal(a, b); }
  [[nodiscard]] std::string label(const point_type& p) const { return group->label(p); }
  [[nodiscard]] std::size_t index_of(const point_type& p) const {
    if constexpr (requires { p.index; }) {
      return p.index;
    } else {
      const auto all = points();
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (group->equal(all[i], p)) return i;
      }
      throw Error(ErrorKind::CarrierMismatch, "point is not a stored group element");
    }
  }
};

/// Cartesian product M1 x M2.
template <Carrier C1, Carrier C2>
struct ProductCarrier {
  using point_type = std::pair<typename C1::point_type, typename C2::point_type>;

  C1 first;
  C2 second;

  // Componentwise maps are determined by their components, so cycling both
  // probe lists in lockstep covers every probe of each factor.
  [[nodiscard]] std::vector<point_type> probes() const {
    const auto p1 = first.probes();
    const auto p2 = second.probes();
    std::vector<point_type> out;
    const std::size_t n = std::max(p1.size(), p2.size());
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(p1[i % p1.size()], p2[i % p2.size()]);
    return out;
  }
  [[nodiscard]] bool contains(const point_type& p) const { return first.contains(p.first) && second.contains(p.second); }
  [[nodiscard]] bool equal(const point_type& a, const point_type& b) const {
    return first.equal(a.first, b.first) && second.equal(a.second, b.second);
  }
  [[nodiscard]] std::string label(const point_type& p) const {
    return "(" + first.label(p.first) + "," + second.label(p.second) + ")";
  }

  [[nodiscard]] std::size_t size() const
    requires FiniteCarrierType<C1> && FiniteCarrierType<C2>
  {
    return first.size() * second.size();
  }
  [[nodiscard]] std::vector<point_type> points() const
    requires FiniteCarrierType<C1> && FiniteCarrierType<C2>
  {
    std::vector<point_type> out;
    for (const auto& a : first.points())
      for (const auto& b : second.points()) out.emplace_back(a, b);
    return out;
  }
  [[nodiscard]] std::size_t index_of(const point_type& p) const
    requires FiniteCarrierType<C1> && FiniteCarrierType<C2>
  {
    return first.index_of(p.first) * second.size() + second.index_of(p.second);
  }
};

static_assert(FiniteCarrierType<FiniteCarrier>);
static_assert(FiniteCarrierType<ProductCarrier<FiniteCarrier, FiniteCarrier>>);
static_assert(!FiniteCarrierType<CoordinateCarrier<Rational>>);

}  // namespace basiskit

#endif  // BASISKIT_CARRIER_HPP
