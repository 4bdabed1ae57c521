#ifndef BASISKIT_SELFTEST_HPP
#define BASISKIT_SELFTEST_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "basiskit/basis.hpp"
#include "basiskit/fixtures.hpp"
#include "basiskit/geom_object.hpp"
#include "basiskit/random.hpp"
#include "basiskit/report.hpp"
#include "basiskit/representation.hpp"

namespace basiskit {

struct SelftestOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  double tol = kDefaultTolerance;
};

namespace detail {

inline Verdict labelled(Verdict v, std::string name) {
  v.check = std::move(name);
  return v;
}

inline std::shared_ptr<const FiniteGroup> share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// Small finite actions beyond the shifts.
inline std::vector<std::pair<std::string, Representation<FiniteGroup, FiniteCarrier>>> sample_actions() {
  std::vector<std::pair<std::string, Representation<FiniteGroup, FiniteCarrier>>> out;
  const auto z2 = share(fixtures::cyclic(2));
  const auto z3 = share(fixtures::cyclic(3));
  const auto z6 = share(fixtures::cyclic(6));
  out.emplace_back("Z2 on 3 points", permutation_representation(z2, 3, {{0, 1, 2}, {1, 0, 2}}));
  std::vector<std::vector<std::size_t>> mod3;
  for (std::size_t g = 0; g < 6; ++g) mod3.push_back({g % 3, (1 + g) % 3, (2 + g) % 3});
  out.emplace_back("Z6 on 3 points", permutation_representation(z6, 3, mod3));
  out.emplace_back("Z3 trivial on 2 points", trivial_representation(z3, FiniteCarrier{2}));
  out.emplace_back("Z6 shift x Z6 on 3 points", tabulate(direct_product(tabulate(left_shift(z6)), out[1].second)));
  out.emplace_back("contragredient of Z6 on 3 points", contragredient(out[1].second));
  return out;
}

}  // namespace detail

/// The full fixture suite: group actions, twins, basis manifolds and objects.
/// Deterministic for a fixed seed.
inline RunReport run_selftest(const SelftestOptions& opt = {}) {
  RunReport report;
  report.command = "selftest";
  report.backend = "exact+approx";
  report.tolerance = opt.tol;
  report.seed = opt.seed;
  report.samples = opt.samples;
  const SamplePolicy exhaustive{SamplePolicy::Mode::exhaustive};

  // Finite groups and their regular representations.
  for (auto& [name, group] : fixtures::all_finite()) {
    const auto g = detail::share(std::move(group));
    const auto l = left_shift(g);
    const auto r = right_shift(g);
    report.add(detail::labelled(check_axioms(l, exhaustive, Side::left), name + " left shift: left-side law"));
    report.add(detail::labelled(check_axioms(r, exhaustive, Side::right), name + " right shift: right-side law"));
    report.add(detail::labelled(inverse_law_check(l), name + " left shift: inverse law"));
    report.add(detail::labelled(inverse_law_check(r), name + " right shift: inverse law"));
    report.add(detail::labelled(shifts_commute_check(*g), name + " shifts commute"));
    report.add(detail::labelled(orbit_well_defined_check(l).verdict, name + " left shift: orbits partition"));
    const auto c = classify(l);
    report.add_flag(name + " left shift: single transitive, unique transport",
                    c.single_transitive && c.unique_transport && c.iff_agrees, c.transport_witness);
  }

  for (const auto& [name, rep] : detail::sample_actions()) {
    report.add(detail::labelled(check_axioms(rep, exhaustive), name + ": representation law"));
    report.add(detail::labelled(inverse_law_check(rep), name + ": inverse law"));
    report.add(detail::labelled(orbit_well_defined_check(rep).verdict, name + ": orbits partition"));
    const auto c = classify(rep);
    report.add_flag(name + ": single transitivity agrees with unique transport", c.iff_agrees, c.transport_witness);
  }

  {
    const auto s3 = detail::share(fixtures::symmetric3());
    const auto natural = permutation_representation(s3, 3, fixtures::s3_permutations());
    const auto c = classify(natural);
    report.add_flag("S3 on 3 points: transitive and effective with non-unique transport",
                    c.transitive && c.effective && !c.unique_transport, c.transport_witness);
  }

  // Twin representations.
  for (auto g : {detail::share(fixtures::symmetric3()), detail::share(fixtures::dihedral4())}) {
    const std::string name = g->order() == 6 ? "S3" : "D4";
    const auto f = tabulate(left_shift(g));
    const auto twin = twin_representation(f);
    report.add(detail::labelled(commuting_check(f, twin.rep), name + " twin commutes with left shift"));
    const auto c = classify(twin.rep);
    report.add_flag(name + " twin is single transitive", c.single_transitive && c.unique_transport);
  }
  {
    const auto s3 = fixtures::symmetric3();
    const auto w = same_side_noncommuting_witness(s3);
    report.add_flag("S3 same-side shifts: conjugation witness", w && w->conjugation_formula_holds && w->differs_from_shift);
  }

  Rng rng(opt.seed);
  const std::size_t pairs = std::min<std::size_t>(opt.samples, 100);

  // Basis manifolds of GL(n, Q).
  {
    Verdict v;
    v.check = "GL(n) bases: change of basis reconstructs the target";
    for (std::size_t i = 0; i < pairs; ++i) {
      const std::size_t n = 2 + i % 3;
      const auto space = VectorSpace::make(SpaceKind::central_affine, n);
      const auto b1 = Basis<Rational>::make(space, random_invertible<Rational>(rng, n));
      const auto b2 = Basis<Rational>::make(space, random_invertible<Rational>(rng, n));
      const auto a = change_of_basis(b1, b2);
      ++v.checked;
      const bool ok = passive_transform(b1, a).equals(b2, 0.0) &&
                      standard_coordinates(b2, Basis<Rational>::standard(space)) == b2.vectors();
      if (!ok && v.passed) {
        v.passed = false;
        v.counterexample = {to_string(b1.vectors()), to_string(b2.vectors())};
      }
    }
    report.add(std::move(v));
  }
  {
    std::vector<Matrix<Rational>> elements;
    for (std::size_t i = 0; i < 10; ++i) elements.push_back(random_invertible<Rational>(rng, 3));
    std::vector<Vector<Rational>> vectors;
    for (std::size_t i = 0; i < 3; ++i) vectors.push_back(random_vector<Rational>(rng, 3));
    report.add(detail::labelled(coordinate_representation_check(elements, vectors, 0.0),
                                "coordinate representation, GL(3, Q)"));
    const auto so2 = fixtures::so2_rotations(12);
    report.add(detail::labelled(coordinate_representation_check(so2.stored(), {{1.0, 0.0}, {0.3, -2.0}}, opt.tol),
                                "coordinate representation, SO(2) rotations"));
  }

  // Gram-Schmidt.
  {
    Verdict v;
    v.check = "Gram-Schmidt: Gram matrix equals the metric";
    double sum = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
      const std::size_t n = 2 + i % 4;
      const auto space = VectorSpace::make(SpaceKind::euclid, n);
      const Matrix<double> in = random_invertible<double>(rng, n);
      const auto gs = gram_schmidt(in.row_list(), space, opt.tol);
      ++v.checked;
      sum += gs.gram_residual;
      v.max_residual = std::max(v.max_residual, gs.gram_residual);
      if (gs.gram_residual > opt.tol && v.passed) {
        v.passed = false;
        v.counterexample = {to_string(in)};
      }
    }
    v.mean_residual = sum / static_cast<double>(std::max<std::size_t>(v.checked, 1));
    report.add(std::move(v));

    bool raised = false;
    try {
      gram_schmidt({{1.0, 1.0}, {0.0, 1.0}}, VectorSpace::make(SpaceKind::pseudo_euclid, 2, {1, 1}), opt.tol);
    } catch (const Error& e) {
      raised = e.kind() == ErrorKind::NullVector;
    }
    report.add_flag("Gram-Schmidt: null vector is rejected", raised);
  }

  // Geometrical objects.
  {
    const auto perm = fixtures::s3_permutation_matrices<Rational>();
    const std::size_t n = perm.dim();
    const auto space = VectorSpace::make(SpaceKind::central_affine, n);
    const auto anchor = Basis<Rational>::make(space, random_invertible<Rational>(rng, n));
    using F = TypeAFunctor<Rational>;
    const std::vector<F> functors = {F::identity(n), F::fundamental(n), F::dual(n), F::tensor_power(n, 2),
                                     F::direct_sum({F::fundamental(n), F::dual(n)})};
    const std::size_t objects = std::max<std::size_t>(opt.samples / 10, 3);
    for (const auto& f : functors) {
      Verdict v;
      v.check = "invariance principle: " + f.describe();
      std::vector<PreparedTransform<Rational>> prepared;
      for (const auto& a : perm.stored()) prepared.push_back(prepare_transform(f, a));
      for (std::size_t i = 0; i < objects; ++i) {
        const auto obj = GeometricalObject<Rational>::make(f, random_vector<Rational>(rng, f.dim()), anchor);
        for (const auto& p : prepared) {
          ++v.checked;
          if (!invariance_check(obj, p, 0.0).invariant && v.passed) {
            v.passed = false;
            v.counterexample = {to_string(obj.coords()), to_string(p.a)};
          }
        }
      }
      report.add(std::move(v));
    }

    std::vector<GeometricalObject<Rational>> samples;
    for (std::size_t i = 0; i < 4; ++i) {
      samples.push_back(GeometricalObject<Rational>::make(F::fundamental(n), random_vector<Rational>(rng, n), anchor));
    }
    report.add(detail::labelled(
        vector_space_axioms_check(samples, {Rational(3, 2), Rational(-2), Rational(0)}, perm.stored(), 0.0),
        "object algebra: vector space axioms and linearity"));
    report.add(detail::labelled(
        object_orbit_well_defined_check(samples.front(), perm.stored(), 0.0), "object orbit is anchor independent"));

    const auto so2 = fixtures::so2_rotations(12);
    const auto euclid = Basis<double>::standard(VectorSpace::make(SpaceKind::euclid, 2));
    Verdict v;
    v.check = "invariance principle: SO(2) rotations, float";
    for (std::size_t i = 0; i < objects; ++i) {
      const auto obj = GeometricalObject<double>::make(TypeAFunctor<double>::tensor_power(2, 2),
                                                       random_vector<double>(rng, 4), euclid);
      for (const auto& a : so2.stored()) {
        const auto r = invariance_check(obj, a, opt.tol);
        ++v.checked;
        v.max_residual = std::max(v.max_residual, r.residual);
        if (!r.invariant && v.passed) {
          v.passed = false;
          v.counterexample = {to_string(obj.coords()), to_string(a)};
        }
      }
    }
    report.add(std::move(v));
  }

  report.data = io::json{{"checks", report.checks.size()}};
  return report;
}

}  // namespace basiskit

#endif  // BASISKIT_SELFTEST_HPP
