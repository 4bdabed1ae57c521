#include <gtest/gtest.h>

#include "basiskit/basiskit.hpp"

using namespace basiskit;
using namespace basiskit::io;
using R = Rational;

namespace {

std::string message_of(const std::function<void()>& f, ErrorKind expected = ErrorKind::ParseError) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), expected) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "expected an error";
  return {};
}

template <class T>
std::shared_ptr<const T> group_as(const GroupHandle<R>& h) {
  return std::get<std::shared_ptr<const T>>(h);
}

}  // namespace

TEST(Scalars, ExactAndApprox) {
  EXPECT_EQ(scalar_from_json<R>(json("6/8"), "/x"), R(3, 4));
  EXPECT_EQ(scalar_from_json<R>(json(5), "/x"), R(5));
  EXPECT_EQ(scalar_to_json(R(-3, 4)), json("-3/4"));
  EXPECT_DOUBLE_EQ(scalar_from_json<double>(json(0.25), "/x"), 0.25);
  EXPECT_DOUBLE_EQ(scalar_from_json<double>(json("1/4"), "/x"), 0.25);
  EXPECT_NE(message_of([] { (void)scalar_from_json<R>(json(0.5), "/x"); }).find("/x"), std::string::npos);
  (void)message_of([] { (void)scalar_from_json<R>(json("1/0"), "/x"); });
}

TEST(Parse, SyntaxErrorsCarryLineAndColumn) {
  const std::string msg = message_of([] { (void)parse_text("{\n  \"a\": [1, 2,\n  ]\n}", "doc.json"); });
  EXPECT_NE(msg.find("doc.json:3:"), std::string::npos) << msg;
}

TEST(Groups, MalformedTableReportsRowAndColumn) {
  const json j = parse_text(R"({"kind": "finite", "table": [[0, 1], [7, 0]]})");
  const std::string msg = message_of([&] { (void)group_from_json<R>(j, "/group"); });
  EXPECT_NE(msg.find("row 1, column 0"), std::string::npos) << msg;
  const json ragged = parse_text(R"({"kind": "finite", "table": [[0, 1], [1]]})");
  EXPECT_NE(message_of([&] { (void)group_from_json<R>(ragged, "/group"); }).find("row 1"), std::string::npos);
}

TEST(Groups, FiniteRoundTrip) {
  const auto s3 = fixtures::symmetric3();
  const auto back = group_as<FiniteGroup>(group_from_json<R>(group_to_json(s3), "/group"));
  ASSERT_EQ(back->order(), s3.order());
  for (std::size_t a = 0; a < 6; ++a) {
    EXPECT_EQ(back->label(back->element(a)), s3.label(s3.element(a)));
    for (std::size_t b = 0; b < 6; ++b) EXPECT_EQ(back->mul(a, b), s3.mul(a, b));
  }
}

TEST(Groups, MatrixAndAffineRoundTrip) {
  const auto g = fixtures::gl2_sample();
  const auto back = group_as<MatrixGroup<R>>(group_from_json<R>(group_to_json(g), "/group"));
  EXPECT_EQ(back->stored(), g.stored());
  EXPECT_EQ(back->family(), g.family());

  using A = AffineTransform<R>;
  const auto aff = AffineGroup<R>::from_elements(2, {A{Matrix<R>{{1, 2}, {0, 1}}, {R(1, 3), -1}}});
  const auto aback = group_as<AffineGroup<R>>(group_from_json<R>(group_to_json(aff), "/group"));
  ASSERT_EQ(aback->elements().size(), aff.elements().size());
  for (std::size_t i = 0; i < aff.elements().size(); ++i) {
    EXPECT_TRUE(aback->elements()[i].transform.equals(aff.elements()[i].transform, 0.0));
  }
}

TEST(Groups, FixturesAndGenerators) {
  EXPECT_EQ(group_as<FiniteGroup>(group_from_json<R>(json("Q8"), "/group"))->order(), 8u);
  EXPECT_EQ(group_as<FiniteGroup>(group_from_json<R>(json("Z5"), "/group"))->order(), 5u);
  EXPECT_EQ(group_as<MatrixGroup<R>>(group_from_json<R>(json("signed-perm2"), "/group"))->size(), 8u);
  (void)message_of([] { (void)group_from_json<R>(json("nope"), "/group"); });

  const json runaway = parse_text(R"({"kind": "matrix", "family": "GL", "dim": 2, "generators": [[[1, 1], [0, 1]]]})");
  (void)message_of([&] { (void)group_from_json<R>(runaway, "/group", LoadOptions{kDefaultTolerance, 100}); },
                   ErrorKind::EnumerationCapExceeded);
}

TEST(Groups, ExactModeRejectsIrrationalFixtures) {
  EXPECT_NO_THROW((void)group_from_json<double>(json("SO2-12"), "/group"));
  EXPECT_THROW((void)group_from_json<R>(json("SO2-12"), "/group"), Error);
}

TEST(Representations, ShiftDescriptorWithClaims) {
  const json j = parse_text(R"({
    "group": "S3",
    "carrier": {"kind": "self"},
    "side": "left",
    "assign": {"kind": "shift-left"},
    "claims": {"representation": true, "variance": "covariant", "single_transitive": true}
  })");
  const auto d = representation_from_json<R>(j);
  const auto& rep = std::get<FiniteRep>(d.rep);
  EXPECT_EQ(rep.carrier().size(), 6u);
  EXPECT_TRUE(check_axioms(rep).passed);
  ASSERT_TRUE(d.claims.variance.has_value());
  EXPECT_EQ(*d.claims.variance, "covariant");
}

TEST(Representations, PermutationTableIsValidated) {
  const json j = parse_text(R"({
    "group": "Z2",
    "carrier": {"kind": "finite", "size": 3},
    "assign": {"kind": "permutation-table", "table": [[0, 1, 2], [1, 0, 3]]}
  })");
  const std::string msg = message_of([&] { (void)representation_from_json<R>(j); });
  EXPECT_NE(msg.find("row 1, column 2"), std::string::npos) << msg;
}

TEST(Representations, LinearOnCoordinates) {
  const json j = parse_text(R"({
    "group": {"kind": "matrix", "family": "GL", "dim": 2, "elements": [[[2, 0], [0, 3]]]},
    "carrier": {"kind": "coords", "dim": 2, "layout": "column"},
    "side": "left",
    "assign": {"kind": "linear"}
  })");
  const auto d = representation_from_json<R>(j);
  const auto& rep = std::get<LinearRep<R>>(d.rep);
  const auto g = rep.group().element(Matrix<R>{{2, 0}, {0, 3}});
  EXPECT_EQ(rep.apply(g, Vector<R>{1, 1}), (Vector<R>{2, 3}));
}

TEST(Bases, RoundTrip) {
  const auto b = Basis<R>::make(VectorSpace::make(SpaceKind::affine, 2), Matrix<R>{{1, R(1, 2)}, {0, 3}},
                                Vector<R>{R(-1, 3), 2});
  const auto back = basis_from_json<R>(basis_to_json(b), "/basis");
  EXPECT_TRUE(back.equals(b, 0.0));
  EXPECT_EQ(back.space(), b.space());
  EXPECT_EQ(*back.origin(), *b.origin());

  const auto bare = basis_from_json<R>(parse_text("[[1, 2], [3, 4]]"), "/basis");
  EXPECT_EQ(bare.vectors(), (Matrix<R>{{1, 2}, {3, 4}}));
  (void)message_of([] { (void)basis_from_json<R>(parse_text("[[1, 2], [2, 4]]"), "/basis"); },
                   ErrorKind::DegenerateBasis);
}

TEST(Objects, RoundTrip) {
  using F = TypeAFunctor<R>;
  const auto anchor = Basis<R>::make(VectorSpace::make(SpaceKind::central_affine, 2), Matrix<R>{{1, 1}, {0, 1}});
  const auto f = F::direct_sum({F::fundamental(2), F::tensor_power(2, 2), F::identity(2)});
  Vector<R> coords;
  for (int i = 0; i < 7; ++i) coords.push_back(R(i, 3));
  const auto obj = GeometricalObject<R>::make(f, coords, anchor);
  const auto back = object_from_json<R>(object_to_json(obj), "/object");
  EXPECT_TRUE(back.functor() == obj.functor());
  EXPECT_TRUE(back.equals(obj, 0.0));
}

TEST(Objects, TableFunctorRoundTrip) {
  const json j = parse_text(R"({
    "functor": {"tag": "table", "elements": [[[1, 0], [0, 1]], [[-1, 0], [0, -1]]], "images": [[[1]], [[-1]]]},
    "coords": ["2/3"],
    "anchor": [[1, 0], [0, 1]]
  })");
  const auto obj = object_from_json<R>(j, "/object");
  EXPECT_EQ(obj.functor().dim(), 1u);
  const auto back = object_from_json<R>(object_to_json(obj), "/object");
  EXPECT_TRUE(back.functor() == obj.functor());
  EXPECT_EQ(transform_object(obj, Matrix<R>{{-1, 0}, {0, -1}}).coords(), (Vector<R>{R(-2, 3)}));
}

TEST(Report, JsonIsSchemaTaggedAndStable) {
  RunReport r;
  r.command = "demo";
  r.add_flag("first", true);
  r.add_flag("second", false, {"a", "b"});
  r.wall_ms = 12.5;
  const json j = parse_text(r.json_text());
  EXPECT_EQ(j["schema"], "basiskit/1");
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 2u);
  EXPECT_FALSE(j.contains("wall_ms"));
  r.wall_ms = 99.0;
  EXPECT_EQ(r.json_text(), parse_text(r.json_text()).dump(2) + "\n");
  EXPECT_NE(r.text().find("result: FAIL (1/2 checks)"), std::string::npos);
}
