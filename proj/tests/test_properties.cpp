#include <gtest/gtest.h>

#include <memory>
#include <set>

#include "basiskit/basiskit.hpp"

using namespace basiskit;
using R = Rational;

namespace {

const SamplePolicy kAll{SamplePolicy::Mode::exhaustive};

std::shared_ptr<const FiniteGroup> share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

std::vector<std::pair<std::string, std::vector<Matrix<R>>>> exact_matrix_fixtures() {
  return {{"S3 permutation matrices", fixtures::s3_permutation_matrices<R>().stored()},
          {"Z2 as +-I", fixtures::z2_plus_minus_identity<R>().stored()},
          {"signed permutations", fixtures::signed_permutations2<R>().stored()}};
}

// det = 1 by construction: a product of shears.
Matrix<R> random_unimodular(Rng& rng, std::size_t n) {
  Matrix<R> m = Matrix<R>::identity(n);
  for (int step = 0; step < 4; ++step) {
    const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    Matrix<R> e = Matrix<R>::identity(n);
    e(i, j) = random_rational(rng, 3, 2);
    m = m * e;
  }
  return m;
}

}  // namespace

// group_core -----------------------------------------------------------------

TEST(GroupLaws, FixtureTablesSatisfyTheAxiomsExhaustively) {
  for (const auto& [name, g] : fixtures::all_finite()) {
    const std::size_t n = g.order();
    const std::size_t e = g.identity_index();
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_EQ(g.mul(e, a), a) << name;
      EXPECT_EQ(g.mul(a, e), a) << name;
      EXPECT_EQ(g.mul(a, g.inv(a)), e) << name;
      EXPECT_EQ(g.mul(g.inv(a), a), e) << name;
      EXPECT_EQ(g.inv(g.inv(a)), a) << name;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c))) << name;
    }
  }
}

TEST(GroupLaws, DoubleInverseOfMatrixElements) {
  for (const auto& [name, mats] : exact_matrix_fixtures()) {
    const auto g = MatrixGroup<R>::from_elements(Family::GL, mats.front().rows(), {}, mats);
    for (const auto& a : g.elements()) EXPECT_TRUE(g.equal(g.inverse(g.inverse(a)), a)) << name;
  }
}

TEST(GroupLaws, AffineCompositionIsAssociative) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    auto random_affine = [&] { return AffineTransform<R>{random_invertible<R>(rng, n), random_vector<R>(rng, n)}; };
    const auto t1 = random_affine();
    const auto t2 = random_affine();
    const auto t3 = random_affine();
    const auto lhs = affine_then(affine_then(t1, t2), t3);
    const auto rhs = affine_then(t1, affine_then(t2, t3));
    EXPECT_EQ(lhs.P, rhs.P);
    EXPECT_EQ(lhs.R, rhs.R);
  }
}

TEST(GroupLaws, MembershipIsClosedOnFixtures) {
  const auto so2 = fixtures::so2_rotations(12);
  for (const auto& a : so2.elements()) {
    EXPECT_TRUE(so2.membership(so2.inverse(a).matrix).member);
    for (const auto& b : so2.elements()) EXPECT_TRUE(so2.membership(so2.compose(a, b).matrix).member);
  }
  for (const auto& [name, mats] : exact_matrix_fixtures()) {
    for (const Family family : {Family::GL}) {
      const auto g = MatrixGroup<R>::from_elements(family, mats.front().rows(), {}, mats);
      for (const auto& a : g.elements()) {
        EXPECT_TRUE(g.membership(g.inverse(a).matrix).member) << name;
        for (const auto& b : g.elements()) {
          const auto ab = g.compose(a, b);
          EXPECT_TRUE(g.membership(ab.matrix).member) << name;
          EXPECT_TRUE(g.index_of(ab.matrix).has_value()) << name;
        }
      }
    }
  }
  const auto so3 = MatrixGroup<R>::from_generators(
      Family::SO, 3, {3, 0}, {Matrix<R>{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}, Matrix<R>{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}});
  EXPECT_EQ(so3.size(), 24u);
  for (const auto& a : so3.elements())
    for (const auto& b : so3.elements()) EXPECT_TRUE(so3.membership(so3.compose(a, b).matrix).member);
}

// representation -------------------------------------------------------------

TEST(RepresentationLaws, ShiftsOnEveryFixture) {
  for (auto& [name, group] : fixtures::all_finite()) {
    const auto g = share(std::move(group));
    const auto l = left_shift(g);
    const auto r = right_shift(g);
    const auto lv = check_axioms(l, kAll, Side::left);
    const auto rv = check_axioms(r, kAll, Side::right);
    EXPECT_TRUE(lv.passed) << name;
    EXPECT_TRUE(rv.passed) << name;
    EXPECT_EQ(lv.checked, g->order() + g->order() * g->order() * g->order()) << name;
    for (const auto& u : g->elements()) {
      EXPECT_TRUE(g->equal(l.apply(g->identity(), u), u));
      EXPECT_TRUE(g->equal(r.apply(g->identity(), u), u));
    }
    EXPECT_TRUE(shifts_commute_check(*g).passed) << name;
  }
}

TEST(RepresentationLaws, DerivedRepresentationsOnEveryFixture) {
  for (auto& [name, group] : fixtures::all_finite()) {
    const auto g = share(std::move(group));
    const auto l = tabulate(left_shift(g));
    const auto r = tabulate(right_shift(g));
    const auto h = contragredient(l);
    const std::vector<std::pair<std::string, Representation<FiniteGroup, FiniteCarrier>>> reps = {
        {"left", l}, {"right", r}, {"contragredient", h}, {"twin", twin_representation(l).rep},
        {"trivial", trivial_representation(g, FiniteCarrier{3})}};
    for (const auto& [what, rep] : reps) {
      const std::string label = name + " " + what;
      ASSERT_TRUE(check_axioms(rep, kAll).passed) << label;
      EXPECT_TRUE(inverse_law_check(rep).passed) << label;

      const auto part = orbit_well_defined_check(rep);
      EXPECT_TRUE(part.verdict.passed) << label;
      std::set<std::size_t> seen;
      std::size_t total = 0;
      for (const auto& cls : part.classes) {
        total += cls.size();
        seen.insert(cls.begin(), cls.end());
      }
      EXPECT_EQ(total, rep.carrier().size()) << label;
      EXPECT_EQ(seen.size(), rep.carrier().size()) << label;

      const auto k = kernel_of_inefficiency(rep);
      EXPECT_TRUE(k.contains_identity) << label;
      EXPECT_TRUE(k.closed) << label;

      // Unique transport computed here by brute force, independently of classify.
      bool unique = true;
      for (std::size_t u = 0; u < rep.carrier().size(); ++u)
        for (std::size_t v = 0; v < rep.carrier().size(); ++v) {
          std::size_t hits = 0;
          for (const auto& a : g->elements()) hits += rep.apply(a, u) == v ? 1 : 0;
          unique = unique && hits == 1;
        }
      const auto c = classify(rep);
      EXPECT_EQ(c.unique_transport, unique) << label;
      EXPECT_EQ(c.single_transitive, c.transitive && c.effective) << label;
      EXPECT_EQ(c.effective, c.kernel.size() == 1) << label;
      EXPECT_TRUE(c.iff_agrees) << label;
    }
    const auto vl = check_variance(l).variance;
    const auto vh = check_variance(h).variance;
    if (g->abelian()) {
      EXPECT_EQ(vl, Variance::both) << name;
      EXPECT_EQ(vh, Variance::both) << name;
    } else {
      EXPECT_EQ(vl, Variance::covariant) << name;
      EXPECT_EQ(vh, Variance::contravariant) << name;
    }
    EXPECT_TRUE(check_axioms(direct_product(l, l), kAll).passed) << name;
    EXPECT_TRUE(check_axioms(direct_product(r, r), kAll).passed) << name;
    EXPECT_TRUE(check_axioms(direct_product(l, contragredient(r)), kAll).passed) << name;
    const auto twin = twin_representation(l);
    EXPECT_TRUE(commuting_check(l, twin.rep).passed) << name;
    const auto tc = classify(twin.rep);
    EXPECT_TRUE(tc.single_transitive && tc.unique_transport) << name;
  }
}

// basis_manifold -------------------------------------------------------------

TEST(BasisLaws, ChangeOfBasisIsUniqueAndExact) {
  Rng rng(21);
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const auto space = VectorSpace::make(SpaceKind::central_affine, n);
    const auto b1 = Basis<R>::make(space, random_invertible<R>(rng, n));
    const auto b2 = Basis<R>::make(space, random_invertible<R>(rng, n));
    const Matrix<R> a = change_of_basis(b1, b2);
    EXPECT_TRUE(passive_transform(b1, a).equals(b2, 0.0));
    Matrix<R> perturbed = a;
    const auto r = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
    const auto c = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
    perturbed(r, c) = perturbed(r, c) + R(1, 7);
    if (is_invertible(perturbed)) EXPECT_FALSE(passive_transform(b1, perturbed).equals(b2, 0.0));
    EXPECT_EQ(standard_coordinates(passive_transform(b1, a), b1), a);
  }
}

TEST(BasisLaws, ActiveAndPassiveCommute) {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const auto space = VectorSpace::make(i % 2 ? SpaceKind::affine : SpaceKind::central_affine, n);
    std::optional<Vector<R>> origin;
    if (i % 2) origin = random_vector<R>(rng, n);
    const auto b = Basis<R>::make(space, random_invertible<R>(rng, n), origin);
    const auto g = random_invertible<R>(rng, n);
    const auto a = random_invertible<R>(rng, n);
    EXPECT_TRUE(active_transform(passive_transform(b, a), g).equals(passive_transform(active_transform(b, g), a), 0.0));
  }
}

TEST(BasisLaws, ActiveTransformPreservesVectorCoordinates) {
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const auto space = VectorSpace::make(SpaceKind::central_affine, n);
    const auto b = Basis<R>::make(space, random_invertible<R>(rng, n));
    const Vector<R> v = random_vector<R>(rng, n);
    for (const Matrix<R>& g : {random_invertible<R>(rng, n), random_unimodular(rng, n)}) {
      EXPECT_EQ(vector_coordinates(apply_column(g, v), active_transform(b, g)), vector_coordinates(v, b));
    }
  }
  const auto euclid = VectorSpace::make(SpaceKind::euclid, 2);
  for (int i = 0; i < 1000; ++i) {
    const auto b = Basis<double>::make(euclid, random_invertible<double>(rng, 2));
    const Vector<double> v = random_vector<double>(rng, 2);
    const auto g = fixtures::rotation2(uniform_real(rng, 0.0, 6.3));
    EXPECT_LE(vector_max_abs_diff(vector_coordinates(apply_column(g, v), active_transform(b, g)), vector_coordinates(v, b)),
              1e-9);
  }
}

TEST(BasisLaws, CoordinateTransformationComposesContravariantly) {
  Rng rng(24);
  for (const auto& [name, mats] : exact_matrix_fixtures()) {
    std::vector<Vector<R>> samples;
    for (int i = 0; i < 3; ++i) samples.push_back(random_vector<R>(rng, mats.front().rows()));
    EXPECT_TRUE(coordinate_representation_check(mats, samples, 0.0).passed) << name;
  }
  for (int i = 0; i < 100; ++i) {
    const auto a = random_invertible<R>(rng, 3);
    const auto b = random_invertible<R>(rng, 3);
    const auto v = random_vector<R>(rng, 3);
    EXPECT_EQ(coordinate_transformation(coordinate_transformation(v, a), b), coordinate_transformation(v, b * a));
  }
}

TEST(BasisLaws, GramSchmidtIsOrthonormalAndInTheOrthogonalGroup) {
  Rng rng(25);
  int null_inputs = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
    const bool pseudo = i % 2 == 1;
    const auto space = pseudo ? VectorSpace::make(SpaceKind::pseudo_euclid, n, {n - 1, 1})
                              : VectorSpace::make(SpaceKind::euclid, n);
    const Matrix<double> in = random_invertible<double>(rng, n);
    std::optional<GramSchmidtResult> result;
    try {
      result.emplace(gram_schmidt(in.row_list(), space));
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NullVector);
      ++null_inputs;
      continue;
    }
    const auto& gs = *result;
    EXPECT_LE(gs.gram_residual, 1e-9);
    EXPECT_EQ(std::count(gs.signs.begin(), gs.signs.end(), -1), static_cast<long>(space.signature.q));
    // Each output vector lies in the span of the inputs seen so far: the
    // change-of-basis grid from inputs to outputs is lower triangular.
    const Matrix<double> grid = solve_right(in, gs.basis.vectors());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) EXPECT_NEAR(grid(r, c), 0.0, 1e-9);
    if (!pseudo) {
      const auto ref = Basis<double>::standard(space);
      const Matrix<double> a = change_of_basis(ref, gs.basis);
      const auto o = MatrixGroup<double>::from_elements(Family::SO, n, {n, 0}, {});
      const double det = determinant(a);
      EXPECT_NEAR(std::fabs(det), 1.0, 1e-9);
      if (det > 0) {
        const auto m = o.membership(a);
        EXPECT_TRUE(m.member);
        EXPECT_LE(m.residual, 1e-9);
      } else {
        // Orthogonal with determinant -1: flipping one vector lands in SO(n).
        Matrix<double> flipped = a;
        for (std::size_t c = 0; c < n; ++c) flipped(0, c) = -flipped(0, c);
        EXPECT_TRUE(o.membership(flipped).member);
      }
    }
  }
  EXPECT_LT(null_inputs, 20);
}

// geom_object ----------------------------------------------------------------

namespace {

std::vector<TypeAFunctor<R>> functors_for(std::size_t n) {
  using F = TypeAFunctor<R>;
  return {F::identity(n), F::fundamental(n), F::dual(n), F::tensor_power(n, 2),
          F::direct_sum({F::fundamental(n), F::dual(n), F::identity(n)})};
}

}  // namespace

TEST(ObjectLaws, FunctorsAreHomomorphisms) {
  for (const auto& [name, mats] : exact_matrix_fixtures()) {
    for (const auto& f : functors_for(mats.front().rows())) {
      for (const auto& a : mats)
        for (const auto& b : mats) EXPECT_EQ(f.eval(a * b), f.eval(a) * f.eval(b)) << name << " " << f.describe();
    }
  }
}

TEST(ObjectLaws, InvarianceForEveryFunctorAndFixtureElement) {
  Rng rng(31);
  for (const auto& [name, mats] : exact_matrix_fixtures()) {
    const std::size_t n = mats.front().rows();
    const auto anchor = Basis<R>::make(VectorSpace::make(SpaceKind::central_affine, n), random_invertible<R>(rng, n));
    for (const auto& f : functors_for(n)) {
      std::vector<PreparedTransform<R>> prepared;
      for (const auto& a : mats) prepared.push_back(prepare_transform(f, a));
      for (int i = 0; i < 100; ++i) {
        const auto obj = GeometricalObject<R>::make(f, random_vector<R>(rng, f.dim()), anchor);
        for (const auto& p : prepared) EXPECT_EQ(representative(transform_object(obj, p)), representative(obj));
      }
    }
  }
}

TEST(ObjectLaws, TransformComposesAndIsLinear) {
  Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const auto anchor = Basis<R>::make(VectorSpace::make(SpaceKind::central_affine, n), random_invertible<R>(rng, n));
    const auto fs = functors_for(n);
    const auto& f = fs[static_cast<std::size_t>(i) % fs.size()];
    const auto x = GeometricalObject<R>::make(f, random_vector<R>(rng, f.dim()), anchor);
    const auto y = GeometricalObject<R>::make(f, random_vector<R>(rng, f.dim()), anchor);
    const auto a = random_invertible<R>(rng, n);
    const auto b = random_invertible<R>(rng, n);
    EXPECT_TRUE(transform_object(transform_object(x, a), b).equals(transform_object(x, b * a), 0.0));
    EXPECT_TRUE(transform_object(add(x, y), a).equals(add(transform_object(x, a), transform_object(y, a)), 0.0));
    const R k = random_rational(rng);
    EXPECT_TRUE(transform_object(scale(x, k), a).equals(scale(transform_object(x, a), k), 0.0));
    if (f.tag() == FunctorTag::fundamental) {
      EXPECT_EQ(transform_object(x, a).coords(), coordinate_transformation(x.coords(), a));
    }
  }
}

TEST(ObjectLaws, OrbitIsAnchorIndependentOnEveryFixture) {
  Rng rng(33);
  for (const auto& [name, mats] : exact_matrix_fixtures()) {
    const std::size_t n = mats.front().rows();
    const auto anchor = Basis<R>::make(VectorSpace::make(SpaceKind::central_affine, n), random_invertible<R>(rng, n));
    for (const auto& f : functors_for(n)) {
      const auto obj = GeometricalObject<R>::make(f, random_vector<R>(rng, f.dim()), anchor);
      EXPECT_TRUE(object_orbit_well_defined_check(obj, mats, 0.0).passed) << name << " " << f.describe();
    }
  }
}
