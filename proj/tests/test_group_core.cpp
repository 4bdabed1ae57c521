#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "basiskit/basiskit.hpp"

using namespace basiskit;
using R = Rational;

namespace {

// Hand-rolled product of small integer matrices, independent of Matrix<T>.
std::vector<std::vector<int>> naive_mul(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  std::vector<std::vector<int>> c(a.size(), std::vector<int>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix<R> to_matrix(const std::vector<std::vector<int>>& a) {
  Matrix<R> m(a.size(), a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) m(i, j) = R(a[i][j]);
  return m;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
  EXPECT_EQ(R(2, -4).str(), "-1/2");
  EXPECT_EQ(R::parse("6/4").str(), "3/2");
  EXPECT_EQ(R::parse("-10/5").str(), "-2");
  EXPECT_EQ(R::parse("0/7").str(), "0");
  EXPECT_EQ(R(1, 3) + R(1, 6), R(1, 2));
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_EQ(kind_of([] { (void)R::parse("1/0"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { (void)R::parse("abc"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { (void)(R(1) / R(0)); }), ErrorKind::Singular);
}

TEST(Compose, CyclicAdditionAndIdentity) {
  const auto z3 = fixtures::cyclic(3);
  EXPECT_EQ(z3.compose(z3.element(1), z3.element(2)).index, 0u);
  for (const auto& g : z3.elements()) EXPECT_TRUE(z3.equal(z3.compose(z3.identity(), g), g));
}

TEST(Compose, PermutationMatricesDoNotCommute) {
  const std::vector<std::vector<int>> swap12 = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  const std::vector<std::vector<int>> cycle = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const auto group = fixtures::s3_permutation_matrices<R>();
  const auto s = group.element(to_matrix(swap12));
  const auto c = group.element(to_matrix(cycle));
  EXPECT_EQ(group.compose(s, c).matrix, to_matrix(naive_mul(swap12, cycle)));
  EXPECT_EQ(group.compose(c, s).matrix, to_matrix(naive_mul(cycle, swap12)));
  EXPECT_FALSE(group.equal(group.compose(s, c), group.compose(c, s)));
}

TEST(Compose, MixedGroupsRejected) {
  const auto a = fixtures::cyclic(3);
  const auto b = fixtures::cyclic(3);
  EXPECT_EQ(kind_of([&] { (void)a.compose(a.element(1), b.element(1)); }), ErrorKind::MixedGroups);
  const auto m1 = fixtures::z2_plus_minus_identity<R>();
  const auto m2 = fixtures::z2_plus_minus_identity<R>();
  EXPECT_EQ(kind_of([&] { (void)m1.compose(m1.identity(), m2.identity()); }), ErrorKind::MixedGroups);
}

TEST(Inverse, CyclicAndIdentity) {
  const auto z3 = fixtures::cyclic(3);
  EXPECT_EQ(z3.inverse(z3.element(1)).index, 2u);
  EXPECT_TRUE(z3.equal(z3.inverse(z3.identity()), z3.identity()));
}

TEST(Inverse, ExactTwoByTwo) {
  // Adjugate over determinant: [[d, -b], [-c, a]] / (ad - bc).
  const Matrix<R> a{{1, 2}, {3, 4}};
  const R det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const Matrix<R> oracle{{a(1, 1) / det, -a(0, 1) / det}, {-a(1, 0) / det, a(0, 0) / det}};
  const Matrix<R> expected{{-2, 1}, {R(3, 2), R(-1, 2)}};
  EXPECT_EQ(oracle, expected);
  EXPECT_EQ(inverse(a), expected);
  EXPECT_EQ(a * inverse(a), Matrix<R>::identity(2));
  EXPECT_EQ(kind_of([] { (void)inverse(Matrix<R>{{1, 2}, {2, 4}}); }), ErrorKind::Singular);
}

TEST(CayleyTable, ValidTwoElementTable) {
  const auto g = FiniteGroup::from_table({{0, 1}, {1, 0}});
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.identity_index(), 0u);
}

TEST(CayleyTable, RepeatedRowEntryIsNotInvertible) {
  const auto report = check_cayley_table({{0, 1}, {1, 1}});
  ASSERT_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.kind == ErrorKind::NotInvertible) {
      found = true;
      EXPECT_NE(v.detail.find("row 1 repeats 1"), std::string::npos) << v.detail;
      break;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(kind_of([] { (void)FiniteGroup::from_table({{0, 1}, {1, 1}}); }), ErrorKind::NotInvertible);
}

TEST(CayleyTable, OtherViolations) {
  EXPECT_EQ(kind_of([] { (void)FiniteGroup::from_table({{0, 2}, {1, 0}}); }), ErrorKind::NotClosed);
  EXPECT_EQ(kind_of([] { (void)FiniteGroup::from_table({{1, 0}, {0, 0}}); }), ErrorKind::NoIdentity);
  // Latin square with identity 0 that is not associative.
  const CayleyTable loop = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  const auto report = check_cayley_table(loop);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().kind, ErrorKind::NotAssociative);
  EXPECT_EQ(report.violations.front().witness.size(), 3u);
}

TEST(CayleyTable, SymmetricGroupFromPermutationComposition) {
  // Independent construction: enumerate all permutations of 3 points.
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  CayleyTable table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<std::size_t> ab(3);
      for (std::size_t x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
      table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  const auto g = FiniteGroup::from_table(table);
  EXPECT_EQ(g.identity_index(), 0u);
  EXPECT_FALSE(g.abelian());
}

TEST(Membership, SpecialOrthogonal) {
  const auto so2 = MatrixGroup<R>::from_elements(Family::SO, 2, {2, 0}, {});
  const auto quarter = so2.membership(Matrix<R>{{0, -1}, {1, 0}});
  EXPECT_TRUE(quarter.member);
  EXPECT_EQ(quarter.residual, 0.0);
  EXPECT_FALSE(so2.membership(Matrix<R>{{1, 1}, {0, 1}}).member);
  EXPECT_FALSE(so2.membership(Matrix<R>{{1, 0}, {0, -1}}).member);  // reflection: det -1
}

TEST(Membership, LorentzBoost) {
  const auto so11 = MatrixGroup<double>::from_elements(Family::SO, 2, {1, 1}, {});
  const Matrix<double> boost{{std::cosh(1.0), std::sinh(1.0)}, {std::sinh(1.0), std::cosh(1.0)}};
  // M^T eta M by hand for eta = diag(1, -1).
  const double c = std::cosh(1.0);
  const double s = std::sinh(1.0);
  EXPECT_NEAR(c * c - s * s, 1.0, 1e-12);
  const auto m = so11.membership(boost);
  EXPECT_TRUE(m.member);
  EXPECT_LE(m.residual, 1e-9);
  EXPECT_FALSE(so11.membership(fixtures::rotation2(0.3)).member);
}

TEST(Membership, DimensionMismatch) {
  const auto gl2 = MatrixGroup<R>::from_elements(Family::GL, 2, {}, {});
  EXPECT_EQ(kind_of([&] { (void)gl2.membership(Matrix<R>::identity(3)); }), ErrorKind::DimensionMismatch);
}

TEST(Affine, ApplyExamples) {
  using A = AffineTransform<R>;
  EXPECT_EQ(affine_apply(A::translation({1, 0}), Vector<R>{0, 0}), (Vector<R>{1, 0}));
  EXPECT_EQ(affine_apply(A{Matrix<R>{{2, 0}, {0, 2}}, {0, 0}}, Vector<R>{1, 3}), (Vector<R>{2, 6}));
  // P.A + R componentwise: (0*1 - 1*0 + 1, 1*1 + 0*0 + 1).
  EXPECT_EQ(affine_apply(A{Matrix<R>{{0, -1}, {1, 0}}, {1, 1}}, Vector<R>{1, 0}), (Vector<R>{1, 2}));
  EXPECT_EQ(kind_of([] { (void)affine_apply(A::translation({1, 0}), Vector<R>{1, 2, 3}); }), ErrorKind::DimensionMismatch);
}

TEST(Affine, CompositionIsApplyFirstThenSecond) {
  using A = AffineTransform<R>;
  const A t1{Matrix<R>{{1, 2}, {0, 1}}, {1, -1}};
  const A t2{Matrix<R>{{0, 1}, {1, 0}}, {R(1, 2), 3}};
  const Vector<R> x{5, 7};
  EXPECT_EQ(affine_apply(affine_then(t1, t2), x), affine_apply(t2, affine_apply(t1, x)));
  const auto g = AffineGroup<R>::from_elements(2, {t1, t2});
  const auto e1 = g.element(t1);
  EXPECT_TRUE(g.equal(g.compose(e1, g.inverse(e1)), g.identity()));
}

TEST(MatrixGroup, GeneratorClosureAndCap) {
  const auto sp = fixtures::signed_permutations2<R>();
  EXPECT_EQ(sp.size(), 8u);
  const auto cap = [] {
    (void)MatrixGroup<R>::from_generators(Family::GL, 2, {}, {Matrix<R>{{1, 1}, {0, 1}}}, 50);
  };
  EXPECT_EQ(kind_of(cap), ErrorKind::EnumerationCapExceeded);
  try {
    cap();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("51"), std::string::npos) << e.what();
  }
}

TEST(MatrixGroup, IdentityIsPrependedAndStoredElementsValidated) {
  const auto g = MatrixGroup<R>::from_elements(Family::SL, 2, {}, {Matrix<R>{{1, 1}, {0, 1}}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.stored().front(), Matrix<R>::identity(2));
  EXPECT_EQ(kind_of([] { (void)MatrixGroup<R>::from_elements(Family::SL, 2, {}, {Matrix<R>{{2, 0}, {0, 1}}}); }),
            ErrorKind::NotClosed);
}

TEST(Matrix, ConventionLowerIndexIsRow) {
  // a^i_j at (j, i): the coefficients of e'_j sit on row j.
  Matrix<R> a(2, 2);
  a(0, 1) = R(5);  // a^2_1
  EXPECT_EQ(a.row_vector(0), (Vector<R>{0, 5}));
  EXPECT_EQ(to_string(Matrix<R>{{R(1, 2), 0}, {0, 1}}), "[[1/2,0],[0,1]]");
}
