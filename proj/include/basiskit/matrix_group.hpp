#ifndef BASISKIT_MATRIX_GROUP_HPP
#define BASISKIT_MATRIX_GROUP_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "basiskit/errors.hpp"
#include "basiskit/finite_group.hpp"
#include "basiskit/group.hpp"
#include "basiskit/matrix.hpp"

namespace basiskit {

inline constexpr std::size_t kDefaultEnumerationCap = 100000;

enum class Family { GL, SL, SO };

constexpr std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::SO: return "SO";
  }
  return "?";
}

// Metric signature (p, q): p positive and q negative diagonal entries.
struct Signature {
  std::size_t p = 0;
  std::size_t q = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

template <Scalar T>
Matrix<T> metric(Signature sig) {
  Vector<T> d;
  for (std::size_t i = 0; i < sig.p; ++i) d.push_back(scalar_traits<T>::one());
  for (std::size_t i = 0; i < sig.q; ++i) d.push_back(-scalar_traits<T>::one());
  return Matrix<T>::diagonal(d);
}

struct Membership {
  bool member = false;
  double residual = 0.0;
};

// Family predicate on a bare matrix. The residual is the max-norm of
// M^T eta M - eta (also folding in |det - 1|) for SO families, |det - 1| for
// SL and 0 / |det| for GL.
template <Scalar T>
Membership family_membership(Family family, std::size_t dim, Signature sig, const Matrix<T>& m,
                             double tol = kDefaultTolerance) {
  if (m.rows() != dim || m.cols() != dim) {
    throw Error(ErrorKind::DimensionMismatch, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                                                  " matrix, got " + std::to_string(m.rows()) + "x" +
                                                  std::to_string(m.cols()));
  }
  const T det = determinant(m);
  switch (family) {
    case Family::GL: {
      const bool ok = !scalar_is_zero(det, tol);
      return {ok, ok ? 0.0 : scalar_traits<T>::magnitude(det)};
    }
    case Family::SL: {
      const double r = scalar_traits<T>::magnitude(det - scalar_traits<T>::one());
      return {scalar_equal(det, scalar_traits<T>::one(), tol), r};
    }
    case Family::SO: {
      const Matrix<T> eta = metric<T>(sig);
      const Matrix<T> gram = m.transpose() * eta * m;
      const double orth = gram.max_abs_diff(eta);
      const double det_gap = scalar_traits<T>::magnitude(det - scalar_traits<T>::one());
      const bool ok = gram.equals(eta, tol) && scalar_equal(det, scalar_traits<T>::one(), tol);
      return {ok, std::max(orth, det_gap)};
    }
  }
  return {};
}

namespace detail {

// Ordering key for deduplicating generated elements. Exact matrices compare
// literally; float matrices are bucketed on a 1e-6 grid (far coarser than
// accumulated rounding, far finer than distinct fixture elements).
template <Scalar T>
auto closure_key(const Matrix<T>& m) {
  if constexpr (scalar_traits<T>::exact) {
    return m;
  } else {
    std::vector<std::int64_t> key;
    key.reserve(m.data().size());
    for (const double x : m.data()) key.push_back(static_cast<std::int64_t>(std::llround(x * 1e6)));
    return key;
  }
}

}  // namespace detail

/// Matrix group GL/SL/SO(p,q) with an explicit finite store of elements.
template <Scalar T>
class MatrixGroup {
 public:
  struct Element {
    GroupId owner = 0;
    Matrix<T> matrix;
  };
  using element_type = Element;
  using scalar_type = T;

  // Every stored element is checked against the family predicate; the
  // identity is prepended when the list does not contain it.
  static MatrixGroup from_elements(Family family, std::size_t dim, Signature sig, std::vector<Matrix<T>> elements,
                                   double tol = kDefaultTolerance) {
    MatrixGroup g(family, dim, normalize_signature(family, dim, sig), tol);
    const Matrix<T> id = Matrix<T>::identity(dim);
    bool has_identity = false;
    for (const auto& m : elements) {
      const Membership mem = g.membership(m);
      if (!mem.member) {
        throw Error(ErrorKind::NotClosed, "stored element " + to_string(m) + " fails the " +
                                              std::string(to_string(family)) + " predicate (residual " +
                                              std::to_string(mem.residual) + ")");
      }
      has_identity = has_identity || m.equals(id, tol);
    }
    if (!has_identity) elements.insert(elements.begin(), id);
    g.elements_ = std::move(elements);
    return g;
  }

  // Breadth-first closure of the generators; more than `cap` elements is an error.
  static MatrixGroup from_generators(Family family, std::size_t dim, Signature sig,
                                     const std::vector<Matrix<T>>& generators,
                                     std::size_t cap = kDefaultEnumerationCap, double tol = kDefaultTolerance) {
    MatrixGroup g(family, dim, normalize_signature(family, dim, sig), tol);
    for (const auto& m : generators) {
      const Membership mem = g.membership(m);
      if (!mem.member) {
        throw Error(ErrorKind::NotClosed, "generator " + to_string(m) + " fails the family predicate");
      }
    }
    using Key = decltype(detail::closure_key(std::declval<Matrix<T>>()));
    std::set<Key> seen;
    std::deque<Matrix<T>> queue;
    const Matrix<T> id = Matrix<T>::identity(dim);
    seen.insert(detail::closure_key(id));
    queue.push_back(id);
    g.elements_.push_back(id);
    while (!queue.empty()) {
      const Matrix<T> x = std::move(queue.front());
      queue.pop_front();
      for (const auto& gen : generators) {
        Matrix<T> y = x * gen;
        if (seen.insert(detail::closure_key(y)).second) {
          if (g.elements_.size() >= cap) {
            throw Error(ErrorKind::EnumerationCapExceeded,
                        "generated group exceeds the cap of " + std::to_string(cap) + " elements (reached " +
                            std::to_string(g.elements_.size() + 1) + ")");
          }
          g.elements_.push_back(y);
          queue.push_back(std::move(y));
        }
      }
    }
    return g;
  }

  [[nodiscard]] GroupId id() const noexcept { return id_; }
  [[nodiscard]] Family family() const noexcept { return family_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] Signature signature() const noexcept { return signature_; }
  [[nodiscard]] double tolerance() const noexcept { return tol_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] const std::vector<Matrix<T>>& stored() const noexcept { return elements_; }

  [[nodiscard]] Membership membership(const Matrix<T>& m) const {
    return family_membership(family_, dim_, signature_, m, tol_);
  }

  // Wraps a matrix as an element of this group after checking the predicate.
  [[nodiscard]] Element element(const Matrix<T>& m) const {
    const Membership mem = membership(m);
    if (!mem.member) {
      throw Error(ErrorKind::NotInOrbit, to_string(m) + " is not in " + std::string(to_string(family_)) +
                                             " (residual " + std::to_string(mem.residual) + ")");
    }
    return {id_, m};
  }

  [[nodiscard]] std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(elements_.size());
    for (const auto& m : elements_) out.push_back({id_, m});
    return out;
  }

  [[nodiscard]] Element identity() const { return {id_, Matrix<T>::identity(dim_)}; }

  [[nodiscard]] Element compose(const Element& a, const Element& b) const {
    require_same_group(a.owner, id_, "compose");
    require_same_group(b.owner, id_, "compose");
    return {id_, a.matrix * b.matrix};
  }

  [[nodiscard]] Element inverse(const Element& a) const {
    require_same_group(a.owner, id_, "inverse");
    return {id_, basiskit::inverse(a.matrix, tol_)};
  }

  [[nodiscard]] bool equal(const Element& a, const Element& b) const { return a.matrix.equals(b.matrix, tol_); }

  [[nodiscard]] std::string label(const Element& a) const { return to_string(a.matrix); }

  // Index of a matrix in the store, if present.
  [[nodiscard]] std::optional<std::size_t> index_of(const Matrix<T>& m) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].equals(m, tol_)) return i;
    }
    return std::nullopt;
  }

  // Cayley table of the stored list; NotClosed when a product leaves the list.
  [[nodiscard]] FiniteGroup cayley() const {
    const std::size_t n = elements_.size();
    if (n > kMaxFiniteOrder) throw Error(ErrorKind::EnumerationCapExceeded, "store too large for a Cayley table");
    CayleyTable table(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
      names.push_back(to_string(elements_[a]));
      for (std::size_t b = 0; b < n; ++b) {
        const auto idx = index_of(elements_[a] * elements_[b]);
        if (!idx) throw Error(ErrorKind::NotClosed, "stored elements are not closed under multiplication");
        table[a][b] = *idx;
      }
    }
    return FiniteGroup::from_table(std::move(table), std::move(names));
  }

 private:
  MatrixGroup(Family family, std::size_t dim, Signature sig, double tol)
      : id_(next_group_id()), family_(family), dim_(dim), signature_(sig), tol_(tol) {}

  static Signature normalize_signature(Family family, std::size_t dim, Signature sig) {
    if (family != Family::SO) return {dim, 0};
    if (sig.p + sig.q == 0) return {dim, 0};
    if (sig.p + sig.q != dim) throw Error(ErrorKind::DimensionMismatch, "signature does not match dimension");
    return sig;
  }

  GroupId id_;
  Family family_;
  std::size_t dim_;
  Signature signature_;
  double tol_;
  std::vector<Matrix<T>> elements_;
};

static_assert(EnumerableGroup<MatrixGroup<Rational>>);
static_assert(EnumerableGroup<MatrixGroup<double>>);

/// Point map A'^i = P^i_j A^j + R^i with det P != 0.
template <Scalar T>
struct AffineTransform {
  Matrix<T> P;
  Vector<T> R;

  static AffineTransform identity(std::size_t n) {
    return {Matrix<T>::identity(n), Vector<T>(n, scalar_traits<T>::zero())};
  }

  static AffineTransform translation(Vector<T> r) {
    return {Matrix<T>::identity(r.size()), std::move(r)};
  }

  [[nodiscard]] std::size_t dim() const noexcept { return R.size(); }

  [[nodiscard]] bool equals(const AffineTransform& o, double tol = kDefaultTolerance) const {
    return P.equals(o.P, tol) && vector_equal(R, o.R, tol);
  }
};

template <Scalar T>
void validate_affine(const AffineTransform<T>& t, double tol = kDefaultTolerance) {
  if (!t.P.square() || t.P.rows() != t.R.size()) {
    throw Error(ErrorKind::DimensionMismatch, "affine transform: P and R sizes disagree");
  }
  if (!is_invertible(t.P, tol)) throw Error(ErrorKind::Singular, "affine transform: det P = 0");
}

template <Scalar T>
Vector<T> affine_apply(const AffineTransform<T>& t, const Vector<T>& point) {
  if (point.size() != t.dim()) throw Error(ErrorKind::DimensionMismatch, "affine_apply: point dimension");
  Vector<T> out = apply_column(t.P, point);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += t.R[i];
  return out;
}

// "Apply first, then second": (P2 P1, P2 R1 + R2).
template <Scalar T>
AffineTransform<T> affine_then(const AffineTransform<T>& first, const AffineTransform<T>& second) {
  if (first.dim() != second.dim()) throw Error(ErrorKind::DimensionMismatch, "affine compose: dimensions");
  AffineTransform<T> out{second.P * first.P, apply_column(second.P, first.R)};
  for (std::size_t i = 0; i < out.R.size(); ++i) out.R[i] += second.R[i];
  return out;
}

template <Scalar T>
AffineTransform<T> affine_inverse(const AffineTransform<T>& t, double tol = kDefaultTolerance) {
  Matrix<T> pinv = inverse(t.P, tol);
  Vector<T> r = apply_column(pinv, t.R);
  for (auto& x : r) x = -x;
  return {std::move(pinv), std::move(r)};
}

template <Scalar T>
std::string to_string(const AffineTransform<T>& t) {
  return "{P=" + to_string(t.P) + ",R=" + to_string(t.R) + "}";
}

/// Affine transformation group with an explicit element store.
/// compose(a, b) means "apply a, then b".
template <Scalar T>
class AffineGroup {
 public:
  struct Element {
    GroupId owner = 0;
    AffineTransform<T> transform;
  };
  using element_type = Element;
  using scalar_type = T;

  static AffineGroup from_elements(std::size_t dim, std::vector<AffineTransform<T>> elements,
                                   double tol = kDefaultTolerance) {
    AffineGroup g(dim, tol);
    const auto id = AffineTransform<T>::identity(dim);
    bool has_identity = false;
    for (const auto& t : elements) {
      if (t.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "affine element dimension");
      validate_affine(t, tol);
      has_identity = has_identity || t.equals(id, tol);
    }
    if (!has_identity) elements.insert(elements.begin(), id);
    g.elements_ = std::move(elements);
    return g;
  }

  [[nodiscard]] GroupId id() const noexcept { return id_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] double tolerance() const noexcept { return tol_; }
  [[nodiscard]] const std::vector<AffineTransform<T>>& stored() const noexcept { return elements_; }

  [[nodiscard]] Membership membership(const AffineTransform<T>& t) const {
    if (t.dim() != dim_ || t.P.rows() != dim_ || t.P.cols() != dim_) {
      throw Error(ErrorKind::DimensionMismatch, "affine membership: dimension");
    }
    const T det = determinant(t.P);
    const bool ok = !scalar_is_zero(det, tol_);
    return {ok, ok ? 0.0 : scalar_traits<T>::magnitude(det)};
  }

  [[nodiscard]] Element element(const AffineTransform<T>& t) const {
    if (!membership(t).member) throw Error(ErrorKind::Singular, "affine part is not invertible");
    return {id_, t};
  }

  [[nodiscard]] std::vector<Element> elements() const {
    std::vector<Element> out;
    for (const auto& t : elements_) out.push_back({id_, t});
    return out;
  }

  [[nodiscard]] Element identity() const { return {id_, AffineTransform<T>::identity(dim_)}; }

  [[nodiscard]] Element compose(const Element& a, const Element& b) const {
    require_same_group(a.owner, id_, "compose");
    require_same_group(b.owner, id_, "compose");
    return {id_, affine_then(a.transform, b.transform)};
  }

  [[nodiscard]] Element inverse(const Element& a) const {
    require_same_group(a.owner, id_, "inverse");
    return {id_, affine_inverse(a.transform, tol_)};
  }

  [[nodiscard]] bool equal(const Element& a, const Element& b) const { return a.transform.equals(b.transform, tol_); }

  [[nodiscard]] std::string label(const Element& a) const { return to_string(a.transform); }

 private:
  AffineGroup(std::size_t dim, double tol) : id_(next_group_id()), dim_(dim), tol_(tol) {}

  GroupId id_;
  std::size_t dim_;
  double tol_;
  std::vector<AffineTransform<T>> elements_;
};

static_assert(EnumerableGroup<AffineGroup<Rational>>);

// Free-standing membership check for a matrix group.
template <Scalar T>
Membership membership_check(const MatrixGroup<T>& g, const Matrix<T>& m) {
  return g.membership(m);
}

template <Scalar T>
Membership membership_check(const AffineGroup<T>& g, const AffineTransform<T>& t) {
  return g.membership(t);
}

}  // namespace basiskit

#endif  // BASISKIT_MATRIX_GROUP_HPP
