#ifndef BASISKIT_BASIS_HPP
#define BASISKIT_BASIS_HPP

#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "basiskit/errors.hpp"
#include "basiskit/matrix.hpp"
#include "basiskit/matrix_group.hpp"
#include "basiskit/representation.hpp"

namespace basiskit {

enum class SpaceKind { central_affine, affine, euclid, pseudo_euclid };

constexpr std::string_view to_string(SpaceKind k) noexcept {
  switch (k) {
    case SpaceKind::central_affine: return "central_affine";
    case SpaceKind::affine: return "affine";
    case SpaceKind::euclid: return "euclid";
    case SpaceKind::pseudo_euclid: return "pseudo_euclid";
  }
  return "?";
}

struct VectorSpace {
  SpaceKind kind = SpaceKind::central_affine;
  std::size_t dim = 0;
  Signature signature{};  // meaningful for euclid / pseudo_euclid

  static VectorSpace make(SpaceKind kind, std::size_t dim, Signature sig = {}) {
    VectorSpace s{kind, dim, sig};
    switch (kind) {
      case SpaceKind::euclid:
        if (sig.p + sig.q == 0) s.signature = {dim, 0};
        if (s.signature.q != 0 || s.signature.p != dim) {
          throw Error(ErrorKind::DimensionMismatch, "euclid space needs signature (n, 0)");
        }
        break;
      case SpaceKind::pseudo_euclid:
        if (sig.p + sig.q != dim || sig.q == 0) {
          throw Error(ErrorKind::DimensionMismatch, "pseudo-euclid space needs p + q = n and q >= 1");
        }
        break;
      default:
        s.signature = {dim, 0};
        break;
    }
    return s;
  }

  [[nodiscard]] bool metric() const noexcept { return kind == SpaceKind::euclid || kind == SpaceKind::pseudo_euclid; }

  friend bool operator==(const VectorSpace&, const VectorSpace&) = default;
};

/// Ordered independent vectors, stored as rows: row k holds e_k in the
/// ambient reference frame. Affine bases also carry their origin.
template <Scalar T>
class Basis {
 public:
  static Basis make(VectorSpace space, Matrix<T> vectors, std::optional<Vector<T>> origin = std::nullopt,
                    double tol = kDefaultTolerance) {
    if (vectors.rows() != space.dim || vectors.cols() != space.dim) {
      throw Error(ErrorKind::DimensionMismatch, "a basis of an n-dimensional space needs n vectors of length n");
    }
    if (space.kind == SpaceKind::affine) {
      if (!origin) origin = Vector<T>(space.dim, scalar_traits<T>::zero());
      if (origin->size() != space.dim) throw Error(ErrorKind::DimensionMismatch, "origin dimension");
    } else if (origin) {
      throw Error(ErrorKind::DimensionMismatch, "only affine bases carry an origin");
    }
    if (scalar_is_zero(determinant(vectors), tol)) {
      throw Error(ErrorKind::DegenerateBasis, "basis vectors are linearly dependent");
    }
    return Basis(space, std::move(vectors), std::move(origin));
  }

  static Basis make(VectorSpace space, const std::vector<Vector<T>>& rows, std::optional<Vector<T>> origin = std::nullopt,
                    double tol = kDefaultTolerance) {
    return make(space, Matrix<T>::from_rows(rows), std::move(origin), tol);
  }

  static Basis standard(VectorSpace space) {
    std::optional<Vector<T>> origin;
    if (space.kind == SpaceKind::affine) origin = Vector<T>(space.dim, scalar_traits<T>::zero());
    return Basis(space, Matrix<T>::identity(space.dim), std::move(origin));
  }

  [[nodiscard]] const VectorSpace& space() const noexcept { return space_; }
  [[nodiscard]] std::size_t dim() const noexcept { return space_.dim; }
  [[nodiscard]] const Matrix<T>& vectors() const noexcept { return vectors_; }
  [[nodiscard]] Vector<T> vector(std::size_t k) const { return vectors_.row_vector(k); }
  [[nodiscard]] const std::optional<Vector<T>>& origin() const noexcept { return origin_; }

  [[nodiscard]] bool equals(const Basis& o, double tol = kDefaultTolerance) const {
    if (!(space_ == o.space_) || !vectors_.equals(o.vectors_, tol)) return false;
    if (origin_.has_value() != o.origin_.has_value()) return false;
    return !origin_ || vector_equal(*origin_, *o.origin_, tol);
  }

  [[nodiscard]] double max_abs_diff(const Basis& o) const {
    double d = vectors_.max_abs_diff(o.vectors_);
    if (origin_ && o.origin_) d = std::max(d, vector_max_abs_diff(*origin_, *o.origin_));
    return d;
  }

 private:
  Basis(VectorSpace space, Matrix<T> vectors, std::optional<Vector<T>> origin)
      : space_(space), vectors_(std::move(vectors)), origin_(std::move(origin)) {}

  VectorSpace space_;
  Matrix<T> vectors_;
  std::optional<Vector<T>> origin_;
};

template <Scalar T>
std::string to_string(const Basis<T>& b) {
  std::string out;
  if (b.origin()) out += "O = " + to_string(*b.origin()) + "\n";
  for (std::size_t k = 0; k < b.dim(); ++k) out += "e" + std::to_string(k + 1) + " = " + to_string(b.vector(k)) + "\n";
  return out;
}

/// Active transformation by a linear map: each vector (and the origin) goes
/// to g v with v read as a column. Coordinates of vectors are unchanged.
template <Scalar T>
Basis<T> active_transform(const Basis<T>& b, const Matrix<T>& g, double tol = kDefaultTolerance) {
  if (g.rows() != b.dim() || g.cols() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "active transform size");
  if (!is_invertible(g, tol)) throw Error(ErrorKind::Singular, "active transform is singular");
  std::optional<Vector<T>> origin;
  if (b.origin()) origin = apply_column(g, *b.origin());
  return Basis<T>::make(b.space(), b.vectors() * g.transpose(), std::move(origin), tol);
}

/// Active affine transformation: vectors go to P e_k, the origin to P O + R.
template <Scalar T>
Basis<T> active_transform(const Basis<T>& b, const AffineTransform<T>& t, double tol = kDefaultTolerance) {
  if (b.space().kind != SpaceKind::affine) {
    throw Error(ErrorKind::GroupSpaceMismatch, "affine transformations act on affine bases only");
  }
  validate_affine(t, tol);
  if (t.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "active transform size");
  return Basis<T>::make(b.space(), b.vectors() * t.P.transpose(), affine_apply(t, *b.origin()), tol);
}

/// Passive transformation e'_j = a^i_j e_i. With a^i_j stored at (j, i) the
/// new vector rows are A * E. The origin is not touched.
template <Scalar T>
Basis<T> passive_transform(const Basis<T>& b, const Matrix<T>& a, double tol = kDefaultTolerance) {
  if (a.rows() != b.dim() || a.cols() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "passive transform size");
  if (!is_invertible(a, tol)) throw Error(ErrorKind::Singular, "passive transform is singular");
  return Basis<T>::make(b.space(), a * b.vectors(), b.origin(), tol);
}

/// Row k holds the coordinates of e_k relative to `ref`.
template <Scalar T>
Matrix<T> standard_coordinates(const Basis<T>& b, const Basis<T>& ref, double tol = kDefaultTolerance) {
  if (b.dim() != ref.dim()) throw Error(ErrorKind::DimensionMismatch, "bases of different dimensions");
  if (!is_invertible(ref.vectors(), tol)) throw Error(ErrorKind::DegenerateReference, "reference basis is degenerate");
  return solve_right(ref.vectors(), b.vectors(), tol);
}

/// The a with b2 = passive_transform(b1, a), i.e. A = E2 E1^-1.
template <Scalar T>
Matrix<T> change_of_basis(const Basis<T>& b1, const Basis<T>& b2, double tol = kDefaultTolerance) {
  if (!(b1.space() == b2.space())) throw Error(ErrorKind::NotInOrbit, "bases live in different spaces");
  if (b1.origin() && !vector_equal(*b1.origin(), *b2.origin(), tol)) {
    throw Error(ErrorKind::NotInOrbit, "passive transformations keep the origin; origins differ");
  }
  Matrix<T> a = solve_right(b1.vectors(), b2.vectors(), tol);
  if (!passive_transform(b1, a, tol).equals(b2, tol)) {
    throw Error(ErrorKind::NoSolution, "reconstruction of the target basis failed");
  }
  return a;
}

/// Solves v = v^i e_i (row vector of coefficients).
template <Scalar T>
Vector<T> vector_coordinates(const Vector<T>& v, const Basis<T>& b, double tol = kDefaultTolerance) {
  if (v.size() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "vector dimension");
  if (!is_invertible(b.vectors(), tol)) throw Error(ErrorKind::DegenerateBasis, "basis is degenerate");
  return apply_row(v, inverse(b.vectors(), tol));
}

template <Scalar T>
Vector<T> reconstruct(const Basis<T>& b, const Vector<T>& coords) {
  return apply_row(coords, b.vectors());
}

// Coordinates of an affine point: those of the vector from the origin.
template <Scalar T>
Vector<T> point_coordinates(const Vector<T>& point, const Basis<T>& b, double tol = kDefaultTolerance) {
  Vector<T> v = point;
  if (b.origin()) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= (*b.origin())[i];
  }
  return vector_coordinates(v, b, tol);
}

/// v'^i = v^j (a^-1)^i_j: coordinates relative to passive_transform(b, a).
template <Scalar T>
Vector<T> coordinate_transformation(const Vector<T>& coords, const Matrix<T>& a, double tol = kDefaultTolerance) {
  return apply_row(coords, inverse(a, tol));
}

/// Composition law of the coordinate representation (a, then b equals ba once)
/// over all stored pairs and sample vectors, and effectiveness: only the
/// identity fixes every Kronecker vector.
template <Scalar T>
Verdict coordinate_representation_check(const std::vector<Matrix<T>>& elements, const std::vector<Vector<T>>& samples,
                                        double tol = kDefaultTolerance) {
  Verdict v;
  v.check = "coordinate representation";
  if (elements.empty()) return v;
  const std::size_t n = elements.front().rows();
  double sum = 0.0;
  std::vector<Matrix<T>> inv;
  inv.reserve(elements.size());
  for (const auto& a : elements) inv.push_back(inverse(a, tol));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const Matrix<T> ba_inv = inverse(elements[j] * elements[i], tol);
      for (const auto& c : samples) {
        const Vector<T> two_step = apply_row(apply_row(c, inv[i]), inv[j]);
        const Vector<T> once = apply_row(c, ba_inv);
        const double r = vector_max_abs_diff(two_step, once);
        ++v.checked;
        sum += r;
        v.max_residual = std::max(v.max_residual, r);
        if (!vector_equal(two_step, once, tol) && v.passed) {
          v.passed = false;
          v.counterexample = {to_string(elements[i]), to_string(elements[j]), to_string(c)};
        }
      }
    }
  }
  const Matrix<T> id = Matrix<T>::identity(n);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    bool fixes_all = true;
    for (std::size_t k = 0; k < n && fixes_all; ++k) {
      const Vector<T> d = kronecker_delta<T>(n, k);
      fixes_all = vector_equal(apply_row(d, inv[i]), d, tol);
    }
    ++v.checked;
    if (fixes_all != elements[i].equals(id, tol) && v.passed) {
      v.passed = false;
      v.counterexample = {"effectiveness", to_string(elements[i])};
    }
  }
  if (v.checked) v.mean_residual = sum / static_cast<double>(v.checked);
  return v;
}

/// <e_i, e_j>_eta for the rows of `vectors`.
template <Scalar T>
Matrix<T> gram_matrix(const Matrix<T>& vectors, Signature sig) {
  return vectors * metric<T>(sig) * vectors.transpose();
}

struct GBasisReport {
  bool g_basis = false;
  double residual = 0.0;
  std::string detail;
};

/// Independence for GL, unit volume for SL, eta-orthonormality (signs
/// matching the signature) for SO.
template <Scalar T>
GBasisReport is_g_basis(const Basis<T>& b, Family family, double tol = kDefaultTolerance) {
  GBasisReport r;
  const T det = determinant(b.vectors());
  switch (family) {
    case Family::GL:
      r.g_basis = !scalar_is_zero(det, tol);
      r.detail = r.g_basis ? "independent" : "dependent vectors";
      return r;
    case Family::SL:
      r.residual = scalar_traits<T>::magnitude(det - scalar_traits<T>::one());
      r.g_basis = scalar_equal(det, scalar_traits<T>::one(), tol);
      r.detail = "det = " + scalar_traits<T>::to_string(det);
      return r;
    case Family::SO: {
      const Signature sig = b.space().signature;
      const Matrix<T> gram = gram_matrix(b.vectors(), sig);
      std::size_t plus = 0;
      std::size_t minus = 0;
      bool ok = true;
      for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
          if (i == j) {
            const double dp = scalar_traits<T>::magnitude(gram(i, i) - scalar_traits<T>::one());
            const double dm = scalar_traits<T>::magnitude(gram(i, i) + scalar_traits<T>::one());
            r.residual = std::max(r.residual, std::min(dp, dm));
            if (scalar_equal(gram(i, i), scalar_traits<T>::one(), tol)) {
              ++plus;
            } else if (scalar_equal(gram(i, i), -scalar_traits<T>::one(), tol)) {
              ++minus;
            } else {
              ok = false;
            }
          } else {
            r.residual = std::max(r.residual, scalar_traits<T>::magnitude(gram(i, j)));
            if (!scalar_is_zero(gram(i, j), tol)) ok = false;
          }
        }
      }
      r.g_basis = ok && plus == sig.p && minus == sig.q;
      r.detail = ok ? "signs (+" + std::to_string(plus) + ", -" + std::to_string(minus) + ")" : "not orthonormal";
      return r;
    }
  }
  return r;
}

struct GramSchmidtResult {
  Basis<double> basis;
  std::vector<int> signs;  // sign of <e_k, e_k>
  double gram_residual = 0.0;  // max |<e_i,e_j> - signs_i delta_ij|
};

/// Orthonormalizes in input order against the diagonal metric of `space`,
/// normalizing by sqrt|<v,v>|. Each projection is applied twice.
inline GramSchmidtResult gram_schmidt(const std::vector<Vector<double>>& inputs, VectorSpace space,
                                      double tol = kDefaultTolerance) {
  const std::size_t n = space.dim;
  if (inputs.size() != n) throw Error(ErrorKind::DimensionMismatch, "need exactly n input vectors");
  for (const auto& x : inputs) {
    if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "input vector dimension");
  }
  const Signature sig = space.metric() ? space.signature : Signature{n, 0};
  std::vector<double> eta(n, 1.0);
  for (std::size_t i = sig.p; i < n; ++i) eta[i] = -1.0;
  auto inner = [&](const Vector<double>& u, const Vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += eta[i] * u[i] * v[i];
    return s;
  };
  auto sup = [](const Vector<double>& v) {
    double m = 0.0;
    for (const double x : v) m = std::max(m, std::fabs(x));
    return m;
  };

  std::vector<Vector<double>> out;
  std::vector<int> signs;
  for (std::size_t k = 0; k < n; ++k) {
    Vector<double> v = inputs[k];
    const double scale = std::max(1.0, sup(inputs[k]));
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < out.size(); ++j) {
        const double c = inner(v, out[j]) / static_cast<double>(signs[j]);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * out[j][i];
      }
    }
    if (sup(v) <= tol * scale) {
      throw Error(ErrorKind::DependentInput, "input " + std::to_string(k + 1) + " lies in the span of the previous ones");
    }
    const double norm2 = inner(v, v);
    double euclid2 = 0.0;
    for (const double x : v) euclid2 += x * x;
    if (std::fabs(norm2) <= tol * euclid2) {
      throw Error(ErrorKind::NullVector, "input " + std::to_string(k + 1) + " projects to a null vector");
    }
    const double len = std::sqrt(std::fabs(norm2));
    for (auto& x : v) x /= len;
    out.push_back(std::move(v));
    signs.push_back(norm2 > 0 ? 1 : -1);
  }

  const Matrix<double> e = Matrix<double>::from_rows(out);
  const Matrix<double> gram = gram_matrix(e, sig);
  Vector<double> diag;
  for (const int s : signs) diag.push_back(static_cast<double>(s));
  const double residual = gram.max_abs_diff(Matrix<double>::diagonal(diag));
  return {Basis<double>::make(space, e, std::nullopt, tol), std::move(signs), residual};
}

/// Orbit of a reference basis under a matrix group acting passively.
template <Scalar T>
class BasisManifold {
 public:
  BasisManifold(Basis<T> reference, std::shared_ptr<const MatrixGroup<T>> group)
      : reference_(std::move(reference)), group_(std::move(group)) {
    if (group_->dim() != reference_.dim()) throw Error(ErrorKind::GroupSpaceMismatch, "group and space dimensions differ");
    const bool metric_space = reference_.space().metric();
    if (metric_space != (group_->family() == Family::SO)) {
      throw Error(ErrorKind::GroupSpaceMismatch, "SO families act on (pseudo-)Euclid spaces, GL/SL on affine ones");
    }
    if (metric_space && !(group_->signature() == reference_.space().signature)) {
      throw Error(ErrorKind::GroupSpaceMismatch, "group signature differs from the space signature");
    }
  }

  [[nodiscard]] const Basis<T>& reference() const noexcept { return reference_; }
  [[nodiscard]] const MatrixGroup<T>& group() const noexcept { return *group_; }
  [[nodiscard]] const std::shared_ptr<const MatrixGroup<T>>& group_ptr() const noexcept { return group_; }
  [[nodiscard]] double tolerance() const noexcept { return group_->tolerance(); }

  [[nodiscard]] Basis<T> active(const Basis<T>& b, const typename MatrixGroup<T>::Element& g) const {
    require_member(g);
    return active_transform(b, g.matrix, tolerance());
  }

  [[nodiscard]] Basis<T> passive(const Basis<T>& b, const typename MatrixGroup<T>::Element& a) const {
    require_member(a);
    return passive_transform(b, a.matrix, tolerance());
  }

  /// The unique element a with b2 = L(a) b1; NotInOrbit when it leaves the family.
  [[nodiscard]] typename MatrixGroup<T>::Element change(const Basis<T>& b1, const Basis<T>& b2) const {
    const Matrix<T> a = change_of_basis(b1, b2, tolerance());
    return group_->element(a);
  }

  [[nodiscard]] GBasisReport g_basis(const Basis<T>& b) const { return is_g_basis(b, group_->family(), tolerance()); }

  [[nodiscard]] Matrix<T> standard_coordinates_of(const Basis<T>& b) const {
    return standard_coordinates(b, reference_, tolerance());
  }

 private:
  void require_member(const typename MatrixGroup<T>::Element& g) const {
    if (g.owner != group_->id()) throw Error(ErrorKind::GroupSpaceMismatch, "element is not from the manifold's group");
  }

  Basis<T> reference_;
  std::shared_ptr<const MatrixGroup<T>> group_;
};

/// Bases as points; the only probe is the reference basis, which determines
/// any passive or active transformation by single transitivity.
template <Scalar T>
struct BasisCarrier {
  using point_type = Basis<T>;

  Basis<T> reference;
  double tol = kDefaultTolerance;

  [[nodiscard]] std::vector<Basis<T>> probes() const { return {reference}; }
  [[nodiscard]] bool contains(const Basis<T>& b) const { return b.space() == reference.space(); }
  [[nodiscard]] bool equal(const Basis<T>& a, const Basis<T>& b) const { return a.equals(b, tol); }
  [[nodiscard]] double distance(const Basis<T>& a, const Basis<T>& b) const { return a.max_abs_diff(b); }
  [[nodiscard]] std::string label(const Basis<T>& b) const { return to_string(b.vectors()); }
};

template <Scalar T>
Representation<MatrixGroup<T>, BasisCarrier<T>> passive_representation(const BasisManifold<T>& m) {
  const double tol = m.tolerance();
  return {m.group_ptr(), BasisCarrier<T>{m.reference(), tol}, Side::left,
          [tol](const typename MatrixGroup<T>::Element& a, const Basis<T>& b) { return passive_transform(b, a.matrix, tol); },
          "passive"};
}

template <Scalar T>
Representation<MatrixGroup<T>, BasisCarrier<T>> active_representation(const BasisManifold<T>& m) {
  const double tol = m.tolerance();
  return {m.group_ptr(), BasisCarrier<T>{m.reference(), tol}, Side::left,
          [tol](const typename MatrixGroup<T>::Element& g, const Basis<T>& b) { return active_transform(b, g.matrix, tol); },
          "active"};
}

}  // namespace basiskit

#endif  // BASISKIT_BASIS_HPP
