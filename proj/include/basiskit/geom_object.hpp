#ifndef BASISKIT_GEOM_OBJECT_HPP
#define BASISKIT_GEOM_OBJECT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "basiskit/basis.hpp"
#include "basiskit/errors.hpp"
#include "basiskit/matrix.hpp"
#include "basiskit/matrix_group.hpp"
#include "basiskit/representation.hpp"

namespace basiskit {

enum class FunctorTag { identity, fundamental, dual, tensor_power, direct_sum, table };

constexpr std::string_view to_string(FunctorTag t) noexcept {
  switch (t) {
    case FunctorTag::identity: return "identity";
    case FunctorTag::fundamental: return "fundamental";
    case FunctorTag::dual: return "dual";
    case FunctorTag::tensor_power: return "tensor_power";
    case FunctorTag::direct_sum: return "direct_sum";
    case FunctorTag::table: return "table";
  }
  return "?";
}

/// A homomorphism a -> A(a) from n x n grids to m x m grids. Built from a
/// closed set of constructors, or from an explicit table checked on load.
template <Scalar T>
class TypeAFunctor {
 public:
  using TableEntry = std::pair<Matrix<T>, Matrix<T>>;

  static TypeAFunctor identity(std::size_t n) { return TypeAFunctor(FunctorTag::identity, n); }
  static TypeAFunctor fundamental(std::size_t n) { return TypeAFunctor(FunctorTag::fundamental, n); }
  static TypeAFunctor dual(std::size_t n) { return TypeAFunctor(FunctorTag::dual, n); }

  static TypeAFunctor tensor_power(std::size_t n, std::size_t k) {
    if (k == 0) throw Error(ErrorKind::DimensionMismatch, "tensor power needs k >= 1");
    TypeAFunctor f(FunctorTag::tensor_power, n);
    f.k_ = k;
    return f;
  }

  static TypeAFunctor direct_sum(std::vector<TypeAFunctor> parts) {
    if (parts.empty()) throw Error(ErrorKind::DimensionMismatch, "direct sum of nothing");
    TypeAFunctor f(FunctorTag::direct_sum, parts.front().base_dim());
    for (const auto& p : parts) {
      if (p.base_dim() != f.n_) throw Error(ErrorKind::DimensionMismatch, "direct sum parts act on different dimensions");
    }
    f.parts_ = std::move(parts);
    return f;
  }

  /// Images of every element of a closed group; A(e) = I and A(ab) = A(a)A(b)
  /// are verified on all stored pairs.
  static TypeAFunctor from_table(const MatrixGroup<T>& group, std::vector<Matrix<T>> images) {
    const auto elements = group.elements();
    if (images.size() != elements.size()) throw Error(ErrorKind::DimensionMismatch, "one image per group element");
    const std::size_t m = images.front().rows();
    for (const auto& img : images) {
      if (img.rows() != m || img.cols() != m) throw Error(ErrorKind::DimensionMismatch, "images must be m x m");
    }
    TypeAFunctor f(FunctorTag::table, group.dim());
    f.tol_ = group.tolerance();
    for (std::size_t i = 0; i < elements.size(); ++i) f.table_.emplace_back(elements[i].matrix, images[i]);
    const Matrix<T> id = Matrix<T>::identity(m);
    if (!f.eval(Matrix<T>::identity(group.dim())).equals(id, f.tol_)) {
      throw Error(ErrorKind::NotHomomorphism, "identity is not mapped to the identity grid");
    }
    for (const auto& a : elements) {
      for (const auto& b : elements) {
        const Matrix<T> lhs = f.eval(group.compose(a, b).matrix);
        if (!lhs.equals(f.eval(a.matrix) * f.eval(b.matrix), f.tol_)) {
          throw Error(ErrorKind::NotHomomorphism,
                      "A(ab) != A(a)A(b) at a = " + to_string(a.matrix) + ", b = " + to_string(b.matrix));
        }
      }
    }
    return f;
  }

  [[nodiscard]] FunctorTag tag() const noexcept { return tag_; }
  [[nodiscard]] std::size_t base_dim() const noexcept { return n_; }
  [[nodiscard]] std::size_t power() const noexcept { return k_; }
  [[nodiscard]] const std::vector<TypeAFunctor>& parts() const noexcept { return parts_; }
  [[nodiscard]] const std::vector<TableEntry>& table() const noexcept { return table_; }

  [[nodiscard]] std::size_t dim() const {
    switch (tag_) {
      case FunctorTag::identity: return 1;
      case FunctorTag::fundamental:
      case FunctorTag::dual: return n_;
      case FunctorTag::tensor_power: {
        std::size_t m = 1;
        for (std::size_t i = 0; i < k_; ++i) m *= n_;
        return m;
      }
      case FunctorTag::direct_sum: {
        std::size_t m = 0;
        for (const auto& p : parts_) m += p.dim();
        return m;
      }
      case FunctorTag::table: return table_.front().second.rows();
    }
    return 0;
  }

  [[nodiscard]] Matrix<T> eval(const Matrix<T>& a, double tol = kDefaultTolerance) const {
    if (a.rows() != n_ || a.cols() != n_) throw Error(ErrorKind::GroupMismatch, "element size does not match the functor");
    if (!is_invertible(a, tol)) throw Error(ErrorKind::Singular, "functor argument is singular");
    switch (tag_) {
      case FunctorTag::identity: return Matrix<T>::identity(1);
      case FunctorTag::fundamental: return a;
      case FunctorTag::dual: return inverse(a, tol).transpose();
      case FunctorTag::tensor_power: {
        Matrix<T> out = a;
        for (std::size_t i = 1; i < k_; ++i) out = kronecker(out, a);
        return out;
      }
      case FunctorTag::direct_sum: {
        std::vector<Matrix<T>> blocks;
        for (const auto& p : parts_) blocks.push_back(p.eval(a, tol));
        return block_diagonal(blocks);
      }
      case FunctorTag::table:
        for (const auto& [key, image] : table_) {
          if (key.equals(a, tol_)) return image;
        }
        throw Error(ErrorKind::GroupMismatch, "element " + to_string(a) + " is not in the functor's table");
    }
    return a;
  }

  [[nodiscard]] std::string describe() const {
    switch (tag_) {
      case FunctorTag::tensor_power: return "tensor_power(" + std::to_string(k_) + ")";
      case FunctorTag::direct_sum: {
        std::string s = "direct_sum(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + parts_[i].describe();
        return s + ")";
      }
      default: return std::string(to_string(tag_));
    }
  }

  /// Structural equality ("same type").
  friend bool operator==(const TypeAFunctor& x, const TypeAFunctor& y) {
    if (x.tag_ != y.tag_ || x.n_ != y.n_ || x.k_ != y.k_ || x.parts_ != y.parts_) return false;
    if (x.table_.size() != y.table_.size()) return false;
    for (std::size_t i = 0; i < x.table_.size(); ++i) {
      if (!(x.table_[i].first == y.table_[i].first) || !(x.table_[i].second == y.table_[i].second)) return false;
    }
    return true;
  }

 private:
  TypeAFunctor(FunctorTag tag, std::size_t n) : tag_(tag), n_(n) {}

  FunctorTag tag_;
  std::size_t n_;
  std::size_t k_ = 1;
  std::vector<TypeAFunctor> parts_;
  std::vector<TableEntry> table_;
  double tol_ = kDefaultTolerance;
};

template <Scalar T>
Matrix<T> functor_eval(const TypeAFunctor<T>& f, const Matrix<T>& a, double tol = kDefaultTolerance) {
  return f.eval(a, tol);
}

/// Coordinates w^alpha relative to the basis E_alpha of W, paired with the
/// basis of V they were taken in.
template <Scalar T>
class GeometricalObject {
 public:
  static GeometricalObject make(TypeAFunctor<T> functor, Vector<T> coords, Basis<T> anchor,
                                std::optional<Matrix<T>> w_basis = std::nullopt, double tol = kDefaultTolerance) {
    const std::size_t m = functor.dim();
    if (coords.size() != m) throw Error(ErrorKind::DimensionMismatch, "coords must have the functor's dimension");
    if (anchor.dim() != functor.base_dim()) throw Error(ErrorKind::DimensionMismatch, "anchor dimension");
    Matrix<T> e = w_basis ? std::move(*w_basis) : Matrix<T>::identity(m);
    if (e.rows() != m || e.cols() != m) throw Error(ErrorKind::DimensionMismatch, "W basis must be m x m");
    if (!is_invertible(e, tol)) throw Error(ErrorKind::DegenerateBasis, "W basis is degenerate");
    return GeometricalObject(std::move(functor), std::move(coords), std::move(anchor), std::move(e));
  }

  [[nodiscard]] const TypeAFunctor<T>& functor() const noexcept { return functor_; }
  [[nodiscard]] const Vector<T>& coords() const noexcept { return coords_; }
  [[nodiscard]] const Basis<T>& anchor() const noexcept { return anchor_; }
  [[nodiscard]] const Matrix<T>& w_basis() const noexcept { return w_basis_; }

  [[nodiscard]] GeometricalObject with(Vector<T> coords, Basis<T> anchor, Matrix<T> w_basis) const {
    return GeometricalObject(functor_, std::move(coords), std::move(anchor), std::move(w_basis));
  }

  [[nodiscard]] bool equals(const GeometricalObject& o, double tol = kDefaultTolerance) const {
    return functor_ == o.functor_ && vector_equal(coords_, o.coords_, tol) && anchor_.equals(o.anchor_, tol) &&
           w_basis_.equals(o.w_basis_, tol);
  }

 private:
  GeometricalObject(TypeAFunctor<T> functor, Vector<T> coords, Basis<T> anchor, Matrix<T> w_basis)
      : functor_(std::move(functor)), coords_(std::move(coords)), anchor_(std::move(anchor)), w_basis_(std::move(w_basis)) {}

  TypeAFunctor<T> functor_;
  Vector<T> coords_;
  Basis<T> anchor_;
  Matrix<T> w_basis_;
};

/// a together with A(a) and A(a^-1), for applying one element to many objects.
template <Scalar T>
struct PreparedTransform {
  Matrix<T> a;
  Matrix<T> image;
  Matrix<T> image_of_inverse;
};

template <Scalar T>
PreparedTransform<T> prepare_transform(const TypeAFunctor<T>& f, const Matrix<T>& a, double tol = kDefaultTolerance) {
  if (a.rows() != f.base_dim()) throw Error(ErrorKind::GroupMismatch, "element size does not match the functor");
  return {a, f.eval(a, tol), f.eval(inverse(a, tol), tol)};
}

/// w' = w A(a^-1), anchor -> passive_transform(anchor, a), E' = A(a) E.
template <Scalar T>
GeometricalObject<T> transform_object(const GeometricalObject<T>& obj, const PreparedTransform<T>& p,
                                      double tol = kDefaultTolerance) {
  if (p.a.rows() != obj.anchor().dim()) throw Error(ErrorKind::GroupMismatch, "element does not act on the anchor space");
  return obj.with(apply_row(obj.coords(), p.image_of_inverse), passive_transform(obj.anchor(), p.a, tol),
                  p.image * obj.w_basis());
}

template <Scalar T>
GeometricalObject<T> transform_object(const GeometricalObject<T>& obj, const Matrix<T>& a, double tol = kDefaultTolerance) {
  return transform_object(obj, prepare_transform(obj.functor(), a, tol), tol);
}

/// w^alpha E_alpha.
template <Scalar T>
Vector<T> representative(const GeometricalObject<T>& obj) {
  return apply_row(obj.coords(), obj.w_basis());
}

struct InvarianceResult {
  bool invariant = false;
  double residual = 0.0;
};

template <Scalar T>
InvarianceResult invariance_check(const GeometricalObject<T>& obj, const PreparedTransform<T>& p,
                                  double tol = kDefaultTolerance) {
  const Vector<T> before = representative(obj);
  const Vector<T> after = representative(transform_object(obj, p, tol));
  return {vector_equal(before, after, tol), vector_max_abs_diff(before, after)};
}

template <Scalar T>
InvarianceResult invariance_check(const GeometricalObject<T>& obj, const Matrix<T>& a, double tol = kDefaultTolerance) {
  return invariance_check(obj, prepare_transform(obj.functor(), a, tol), tol);
}

template <Scalar T>
struct ObjectOrbitPoint {
  Vector<T> coords;
  Matrix<T> w_basis;
  Basis<T> anchor;

  [[nodiscard]] bool equals(const ObjectOrbitPoint& o, double tol) const {
    return vector_equal(coords, o.coords, tol) && w_basis.equals(o.w_basis, tol) && anchor.equals(o.anchor, tol);
  }
};

template <Scalar T>
std::vector<ObjectOrbitPoint<T>> object_orbit(const GeometricalObject<T>& obj, const std::vector<Matrix<T>>& elements,
                                              std::size_t cap = kDefaultEnumerationCap, double tol = kDefaultTolerance) {
  if (elements.size() > cap) {
    throw Error(ErrorKind::EnumerationCapExceeded, std::to_string(elements.size()) + " elements exceed cap " + std::to_string(cap));
  }
  std::vector<ObjectOrbitPoint<T>> out;
  out.reserve(elements.size());
  for (const auto& a : elements) {
    const auto moved = transform_object(obj, a, tol);
    out.push_back({moved.coords(), moved.w_basis(), moved.anchor()});
  }
  return out;
}

template <Scalar T>
bool same_orbit_set(const std::vector<ObjectOrbitPoint<T>>& x, const std::vector<ObjectOrbitPoint<T>>& y,
                    double tol = kDefaultTolerance) {
  auto covered = [tol](const auto& from, const auto& into) {
    for (const auto& p : from) {
      bool found = false;
      for (const auto& q : into) {
        if (p.equals(q, tol)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  return covered(x, y) && covered(y, x);
}

/// Re-anchors at every orbit point in turn and compares the re-enumerated set.
template <Scalar T>
Verdict object_orbit_well_defined_check(const GeometricalObject<T>& obj, const std::vector<Matrix<T>>& elements,
                                        double tol = kDefaultTolerance) {
  Verdict v;
  v.check = "object orbit well defined";
  const auto base = object_orbit(obj, elements, kDefaultEnumerationCap, tol);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto moved = obj.with(base[i].coords, base[i].anchor, base[i].w_basis);
    ++v.checked;
    if (!same_orbit_set(base, object_orbit(moved, elements, kDefaultEnumerationCap, tol), tol)) {
      v.passed = false;
      v.counterexample = {to_string(elements[i])};
      break;
    }
  }
  return v;
}

template <Scalar T>
void require_compatible(const GeometricalObject<T>& x, const GeometricalObject<T>& y, double tol) {
  if (!(x.functor() == y.functor())) {
    throw Error(ErrorKind::TypeMismatch, x.functor().describe() + " vs " + y.functor().describe());
  }
  if (!x.anchor().equals(y.anchor(), tol) || !x.w_basis().equals(y.w_basis(), tol)) {
    throw Error(ErrorKind::AnchorMismatch, "objects are expressed in different bases; rebase one first");
  }
}

template <Scalar T>
GeometricalObject<T> add(const GeometricalObject<T>& x, const GeometricalObject<T>& y, double tol = kDefaultTolerance) {
  require_compatible(x, y, tol);
  Vector<T> w = x.coords();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += y.coords()[i];
  return x.with(std::move(w), x.anchor(), x.w_basis());
}

template <Scalar T>
GeometricalObject<T> scale(const GeometricalObject<T>& x, const T& k) {
  Vector<T> w = x.coords();
  for (auto& c : w) c *= k;
  return x.with(std::move(w), x.anchor(), x.w_basis());
}

template <Scalar T>
GeometricalObject<T> zero_like(const GeometricalObject<T>& x) {
  return scale(x, scalar_traits<T>::zero());
}

/// Re-expresses `obj` relative to `target` through the passive change of basis.
template <Scalar T>
GeometricalObject<T> rebase(const GeometricalObject<T>& obj, const Basis<T>& target, double tol = kDefaultTolerance) {
  return transform_object(obj, change_of_basis(obj.anchor(), target, tol), tol);
}

/// Field axioms on the samples plus linearity of transform_object under each
/// element of `elements`.
template <Scalar T>
Verdict vector_space_axioms_check(const std::vector<GeometricalObject<T>>& samples, const std::vector<T>& scalars,
                                  const std::vector<Matrix<T>>& elements, double tol = kDefaultTolerance) {
  Verdict v;
  v.check = "object vector space axioms";
  if (samples.size() < 3) throw Error(ErrorKind::DimensionMismatch, "need at least three sample objects");
  double sum = 0.0;
  auto expect = [&](const GeometricalObject<T>& lhs, const GeometricalObject<T>& rhs, const std::string& law) {
    ++v.checked;
    const double r = vector_max_abs_diff(lhs.coords(), rhs.coords());
    sum += r;
    v.max_residual = std::max(v.max_residual, r);
    if (!lhs.equals(rhs, tol) && v.passed) {
      v.passed = false;
      v.counterexample = {law, to_string(lhs.coords()), to_string(rhs.coords())};
    }
  };
  const T one = scalar_traits<T>::one();
  const auto zero = zero_like(samples.front());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& x = samples[i];
    const auto& y = samples[(i + 1) % samples.size()];
    const auto& z = samples[(i + 2) % samples.size()];
    expect(add(x, y, tol), add(y, x, tol), "commutativity");
    expect(add(add(x, y, tol), z, tol), add(x, add(y, z, tol), tol), "associativity");
    expect(add(x, zero, tol), x, "zero");
    expect(add(x, scale(x, -one), tol), zero, "negation");
    expect(scale(x, one), x, "unit scalar");
    for (const auto& k : scalars) {
      expect(scale(add(x, y, tol), k), add(scale(x, k), scale(y, k), tol), "scale over add");
      for (const auto& l : scalars) {
        expect(scale(x, k + l), add(scale(x, k), scale(x, l), tol), "add over scale");
        expect(scale(scale(x, l), k), scale(x, k * l), "scale associativity");
      }
    }
    for (const auto& a : elements) {
      const auto p = prepare_transform(x.functor(), a, tol);
      expect(transform_object(add(x, y, tol), p, tol), add(transform_object(x, p, tol), transform_object(y, p, tol), tol),
             "transform additive");
      for (const auto& k : scalars) {
        expect(transform_object(scale(x, k), p, tol), scale(transform_object(x, p, tol), k), "transform homogeneous");
      }
    }
  }
  if (v.checked) v.mean_residual = sum / static_cast<double>(v.checked);
  return v;
}

}  // namespace basiskit

#endif  // BASISKIT_GEOM_OBJECT_HPP
