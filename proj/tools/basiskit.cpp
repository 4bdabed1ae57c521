#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "basiskit/basiskit.hpp"

namespace {

using namespace basiskit;
using io::json;

struct Flags {
  std::string input;
  bool exact = true;
  bool approx = false;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  std::string report = "text";
  std::size_t cap = kDefaultEnumerationCap;
  std::string point;
  std::string element;
  std::string action;
};

// Errors raised while reading inputs are input errors (exit 2), except a
// runaway enumeration, which is a failed check (exit 1).
struct InputError {
  Error error;
};

template <class F>
auto load(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EnumerationCapExceeded) throw;
    throw InputError{e};
  } catch (const std::exception& e) {
    throw InputError{Error(ErrorKind::ParseError, e.what())};
  }
}

SamplePolicy policy_of(const Flags& f) {
  SamplePolicy p;
  p.samples = f.samples;
  p.seed = f.seed;
  return p;
}

io::LoadOptions load_options(const Flags& f) { return {f.tolerance, f.cap}; }

json input_json(const Flags& f) {
  return load([&] {
    if (f.input.empty()) throw Error(ErrorKind::ParseError, "--input is required");
    if (f.input == "-") {
      std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
      return io::parse_text(text, "<stdin>");
    }
    return io::load_file(f.input);
  });
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

// ---------------------------------------------------------------------------
// repcheck
// ---------------------------------------------------------------------------

template <EnumerableGroup G, Carrier C>
void repcheck(const Representation<G, C>& rep, const io::Claims& claims, const Flags& f, RunReport& report) {
  const ClassificationReport c = classify(rep, policy_of(f));
  const std::size_t order = rep.group().elements().size();
  const std::string kernel = c.kernel.size() == order ? "all of G"
                             : c.kernel.size() == 1   ? "trivial"
                                                      : "{" + join(c.kernel) + "}";
  report.lines.push_back("representation: " + yes_no(c.axioms.passed) +
                         "; variance: " + std::string(to_string(c.variance.variance)) +
                         "; single transitive: " + yes_no(c.single_transitive));
  report.lines.push_back("effective: " + yes_no(c.effective) + "; kernel: " + kernel);
  report.lines.push_back("side: " + std::string(to_string(rep.side())) + "; transitive: " + yes_no(c.transitive) +
                         "; unique transport: " + yes_no(c.unique_transport) + " (" + c.mode + ")");
  if (!c.iff_agrees) {
    report.lines.push_back("note: transitive and effective, but transport between some pair is not unique (" +
                           join(c.transport_witness) + " solutions)");
  }
  if (!c.axioms.passed) report.lines.push_back("axiom counterexample: " + join(c.axioms.counterexample));

  Verdict inv = inverse_law_check(rep);

  const bool claims_representation = claims.representation.value_or(true);
  if (claims_representation) {
    Verdict axioms = c.axioms;
    report.add(std::move(axioms));
    if (c.axioms.passed) report.add(std::move(inv));
  } else {
    report.add_flag("claim: not a representation", !c.axioms.passed, {"axioms hold"});
  }
  if (claims.variance) {
    const std::string actual(to_string(c.variance.variance));
    report.add_flag("claim: variance " + *claims.variance, actual == *claims.variance, {"actual " + actual});
  }
  auto flag_claim = [&](const std::optional<bool>& claim, const std::string& name, bool actual) {
    if (claim) report.add_flag("claim: " + name + " " + yes_no(*claim), *claim == actual, {"actual " + yes_no(actual)});
  };
  flag_claim(claims.effective, "effective", c.effective);
  flag_claim(claims.transitive, "transitive", c.transitive);
  flag_claim(claims.single_transitive, "single transitive", c.single_transitive);
  if (claims.kernel) {
    const bool matches = (*claims.kernel == "all" && c.kernel.size() == order) ||
                         (*claims.kernel == "trivial" && c.kernel.size() == 1) || *claims.kernel == kernel;
    report.add_flag("claim: kernel " + *claims.kernel, matches, {"actual " + kernel});
  }

  report.data = json{{"representation", c.axioms.passed},
                     {"side", std::string(to_string(rep.side()))},
                     {"variance", std::string(to_string(c.variance.variance))},
                     {"variance_mode", c.variance.mode},
                     {"homomorphism_witness", c.variance.homomorphism_witness},
                     {"antihomomorphism_witness", c.variance.antihomomorphism_witness},
                     {"kernel", c.kernel},
                     {"kernel_is_subgroup", c.kernel_is_subgroup},
                     {"effective", c.effective},
                     {"transitive", c.transitive},
                     {"unreachable_pair", c.unreachable_pair},
                     {"single_transitive", c.single_transitive},
                     {"unique_transport", c.unique_transport},
                     {"transport_witness", c.transport_witness},
                     {"single_transitive_matches_unique_transport", c.iff_agrees},
                     {"classification_mode", c.mode}};
}

template <Scalar T>
void cmd_repcheck(const Flags& f, RunReport& report) {
  const json j = input_json(f);
  auto desc = load([&] { return io::representation_from_json<T>(j, load_options(f)); });
  std::visit([&](const auto& rep) { repcheck(rep, desc.claims, f, report); }, desc.rep);
}

// ---------------------------------------------------------------------------
// orbit
// ---------------------------------------------------------------------------

template <Scalar T, EnumerableGroup G, Carrier C>
void orbit_of(const Representation<G, C>& rep, const Flags& f, RunReport& report) {
  const auto& carrier = rep.carrier();
  using Point = typename C::point_type;
  Point base{};
  load([&] {
    if constexpr (std::is_same_v<Point, std::size_t>) {
      const std::string p = f.point.empty() ? "0" : f.point;
      bool found = false;
      for (const auto& q : carrier.points()) {
        if (carrier.label(q) == p) {
          base = q;
          found = true;
          break;
        }
      }
      if (!found) {
        std::size_t pos = 0;
        const auto idx = std::stoul(p, &pos);
        if (pos != p.size() || idx >= carrier.size()) throw Error(ErrorKind::ParseError, "--point: unknown point " + p);
        base = idx;
      }
    } else {
      if (f.point.empty()) throw Error(ErrorKind::ParseError, "--point is required for coordinate spaces");
      base = io::vector_from_json<T>(io::parse_text(f.point, "--point"), "--point", carrier.dim);
    }
    return 0;
  });

  const auto o = orbit(rep, base, f.cap);
  report.lines.push_back("orbit of " + carrier.label(base) + ": " + std::to_string(o.points.size()) + " points");
  json pts = json::array();
  for (std::size_t i = 0; i < o.points.size(); ++i) {
    const std::string label = carrier.label(o.points[i]);
    const std::string witness = rep.group().label(o.witnesses[i]);
    report.lines.push_back("  " + label + "  <- " + witness);
    pts.push_back(json{{"point", label}, {"witness", witness}});
  }
  report.data["orbit"] = pts;
  if constexpr (FiniteCarrierType<C>) {
    const auto part = orbit_well_defined_check(rep);
    std::string line = "partition:";
    json classes = json::array();
    for (const auto& cls : part.classes) {
      std::vector<std::string> labels;
      for (const auto& p : cls) labels.push_back(carrier.label(p));
      line += " {" + join(labels, ",") + "}";
      classes.push_back(labels);
    }
    report.lines.push_back(line);
    report.data["partition"] = classes;
    report.add(part.verdict);
  }
}

template <Scalar T>
void object_orbit_cmd(const json& j, const Flags& f, RunReport& report) {
  const auto opt = load_options(f);
  auto [obj, group] = load([&] {
    auto o = io::object_from_json<T>(j, "", opt);
    auto g = io::group_from_json<T>(io::field(j, "group", ""), "/group", opt);
    const auto* mg = std::get_if<std::shared_ptr<const MatrixGroup<T>>>(&g);
    if (!mg) throw Error(ErrorKind::ParseError, "/group: object orbits need a matrix group");
    return std::pair{o, *mg};
  });
  const auto points = object_orbit(obj, group->stored(), f.cap, f.tolerance);
  json out = json::array();
  report.lines.push_back("object orbit: " + std::to_string(points.size()) + " points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    report.lines.push_back("  " + to_string(group->stored()[i]) + " -> w = " + to_string(points[i].coords));
    out.push_back(json{{"element", io::matrix_to_json(group->stored()[i])},
                       {"coords", io::vector_to_json(points[i].coords)},
                       {"w_basis", io::matrix_to_json(points[i].w_basis)},
                       {"anchor", io::basis_to_json(points[i].anchor)}});
  }
  report.data["object_orbit"] = out;
  report.add(object_orbit_well_defined_check(obj, group->stored(), f.tolerance));
}

template <Scalar T>
void cmd_orbit(const Flags& f, RunReport& report) {
  const json j = input_json(f);
  if (io::optional_field(j, "functor")) return object_orbit_cmd<T>(j, f, report);
  auto desc = load([&] { return io::representation_from_json<T>(j, load_options(f)); });
  std::visit([&](const auto& rep) { orbit_of<T>(rep, f, report); }, desc.rep);
}

// ---------------------------------------------------------------------------
// basis
// ---------------------------------------------------------------------------

template <Scalar T>
void basis_transform(const json& j, const Flags& f, RunReport& report) {
  const auto opt = load_options(f);
  const double tol = f.tolerance;
  const auto b = load([&] { return io::basis_from_json<T>(io::field(j, "basis", ""), "/basis", opt); });
  const std::string mode = load([&] { return io::string_field(j, "mode", "", "passive"); });
  const json& el = load([&]() -> const json& { return io::field(j, "element", ""); });
  const bool affine = el.is_object();
  const auto t = load([&] {
    return affine ? io::affine_from_json<T>(el, "/element", b.dim())
                  : AffineTransform<T>{io::matrix_from_json<T>(el, "/element", b.dim()), Vector<T>(b.dim(), scalar_traits<T>::zero())};
  });
  std::optional<Vector<T>> v;
  if (const json* vj = io::optional_field(j, "vector")) v = load([&] { return io::vector_from_json<T>(*vj, "/vector", b.dim()); });

  Basis<T> out = b;
  if (mode == "active") {
    out = affine ? active_transform(b, t, tol) : active_transform(b, t.P, tol);
  } else if (mode == "passive") {
    if (affine) throw InputError{Error(ErrorKind::ParseError, "/element: passive transformations are linear")};
    out = passive_transform(b, t.P, tol);
  } else {
    throw InputError{Error(ErrorKind::ParseError, "/mode: expected active or passive")};
  }
  report.lines.push_back(mode + " transform of");
  report.lines.push_back(to_string(b));
  report.lines.push_back("result");
  report.lines.push_back(to_string(out));
  report.data["basis"] = io::basis_to_json(out);

  if (v) {
    const Vector<T> before = vector_coordinates(*v, b, tol);
    Verdict check;
    check.checked = 1;
    if (mode == "active") {
      const Vector<T> moved = apply_column(t.P, *v);
      const Vector<T> after = vector_coordinates(moved, out, tol);
      check.check = "active transform keeps vector coordinates";
      check.passed = vector_equal(before, after, tol);
      check.max_residual = check.mean_residual = vector_max_abs_diff(before, after);
      report.data["coordinates"] = json{{"before", io::vector_to_json(before)}, {"after", io::vector_to_json(after)}};
    } else {
      const Vector<T> after = vector_coordinates(*v, out, tol);
      const Vector<T> predicted = coordinate_transformation(before, t.P, tol);
      check.check = "passive transform changes coordinates by a^-1";
      check.passed = vector_equal(after, predicted, tol);
      check.max_residual = check.mean_residual = vector_max_abs_diff(after, predicted);
      report.data["coordinates"] = json{{"before", io::vector_to_json(before)}, {"after", io::vector_to_json(after)}};
    }
    report.lines.push_back("vector " + to_string(*v) + ": coordinates " + to_string(before) + " -> " +
                           report.data["coordinates"]["after"].dump());
    report.add(std::move(check));
  }
}

template <Scalar T>
void basis_change(const json& j, const Flags& f, RunReport& report) {
  const auto opt = load_options(f);
  const auto b1 = load([&] { return io::basis_from_json<T>(io::field(j, "basis", ""), "/basis", opt); });
  const auto b2 = load([&] { return io::basis_from_json<T>(io::field(j, "target", ""), "/target", opt); });
  const Family family = load([&] { return io::family_from_string(io::string_field(j, "family", "", "GL"), "/family"); });
  const Matrix<T> a = change_of_basis(b1, b2, f.tolerance);
  const Membership m = family_membership(family, b1.dim(), b1.space().signature, a, f.tolerance);
  if (!m.member) {
    throw Error(ErrorKind::NotInOrbit, to_string(a) + " is not in " + std::string(to_string(family)) +
                                           " (residual " + std::to_string(m.residual) + ")");
  }
  Verdict v;
  v.check = "passive_transform(basis, a) reproduces the target";
  v.checked = 1;
  const Basis<T> rebuilt = passive_transform(b1, a, f.tolerance);
  v.passed = rebuilt.equals(b2, f.tolerance);
  v.max_residual = v.mean_residual = rebuilt.max_abs_diff(b2);
  report.lines.push_back("a = " + to_string(a));
  report.data["element"] = io::matrix_to_json(a);
  report.add(std::move(v));
}

void basis_gram_schmidt(const json& j, const Flags& f, RunReport& report) {
  const auto [inputs, space] = load([&] {
    const Matrix<double> in = io::matrix_from_json<double>(io::field(j, "vectors", ""), "/vectors");
    return std::pair{in.row_list(), io::space_from_json(io::optional_field(j, "space"), in.rows(), "/space")};
  });
  const auto gs = gram_schmidt(inputs, space, f.tolerance);
  report.backend = "approx";
  std::vector<std::string> signs;
  for (const int s : gs.signs) signs.push_back(s > 0 ? "+" : "-");
  report.lines.push_back("orthonormal basis");
  report.lines.push_back(to_string(gs.basis));
  report.lines.push_back("signs: " + join(signs, " "));
  report.data["basis"] = io::basis_to_json(gs.basis);
  report.data["signs"] = gs.signs;
  Verdict v;
  v.check = "Gram matrix equals diag(signs)";
  v.checked = 1;
  v.passed = gs.gram_residual <= f.tolerance;
  v.max_residual = v.mean_residual = gs.gram_residual;
  report.add(std::move(v));
  if (space.metric()) {
    const auto g = is_g_basis(gs.basis, Family::SO, f.tolerance);
    report.add_flag("result is an SO(p,q)-basis: " + g.detail, g.g_basis, {g.detail});
  }
}

template <Scalar T>
void basis_standard(const json& j, const Flags& f, RunReport& report) {
  const auto opt = load_options(f);
  const auto b = load([&] { return io::basis_from_json<T>(io::field(j, "basis", ""), "/basis", opt); });
  const auto ref = load([&] {
    const json* r = io::optional_field(j, "reference");
    return r ? io::basis_from_json<T>(*r, "/reference", opt) : Basis<T>::standard(b.space());
  });
  const Matrix<T> c = standard_coordinates(b, ref, f.tolerance);
  report.lines.push_back("standard coordinates = " + to_string(c));
  report.data["coordinates"] = io::matrix_to_json(c);
  Verdict v;
  v.check = "coordinates times reference reproduce the basis";
  v.checked = 1;
  v.passed = (c * ref.vectors()).equals(b.vectors(), f.tolerance);
  v.max_residual = v.mean_residual = (c * ref.vectors()).max_abs_diff(b.vectors());
  report.add(std::move(v));
}

template <Scalar T>
void cmd_basis(const Flags& f, RunReport& report) {
  const json j = input_json(f);
  if (f.action == "transform") return basis_transform<T>(j, f, report);
  if (f.action == "change") return basis_change<T>(j, f, report);
  if (f.action == "gram-schmidt") return basis_gram_schmidt(j, f, report);
  if (f.action == "standard-coords") return basis_standard<T>(j, f, report);
  throw InputError{Error(ErrorKind::ParseError, "basis action must be transform, change, gram-schmidt or standard-coords")};
}

// ---------------------------------------------------------------------------
// object
// ---------------------------------------------------------------------------

template <Scalar T>
void cmd_object(const Flags& f, RunReport& report) {
  const json j = input_json(f);
  const auto opt = load_options(f);
  const json& body = io::optional_field(j, "object") ? j["object"] : j;
  const auto obj = load([&] { return io::object_from_json<T>(body, io::optional_field(j, "object") ? "/object" : "", opt); });
  const Matrix<T> a = load([&] {
    if (!f.element.empty()) return io::matrix_from_json<T>(io::parse_text(f.element, "--element"), "--element", obj.anchor().dim());
    if (const json* e = io::optional_field(j, "element")) return io::matrix_from_json<T>(*e, "/element", obj.anchor().dim());
    return Matrix<T>::identity(obj.anchor().dim());
  });

  const auto moved = transform_object(obj, a, f.tolerance);
  const Vector<T> before = representative(obj);
  const Vector<T> after = representative(moved);
  report.lines.push_back("functor: " + obj.functor().describe() + "; element " + to_string(a));
  report.lines.push_back("coords " + to_string(obj.coords()) + " -> " + to_string(moved.coords()));
  report.lines.push_back("representative before " + to_string(before) + ", after " + to_string(after));
  report.data["object"] = io::object_to_json(moved);
  report.data["representative_before"] = io::vector_to_json(before);
  report.data["representative_after"] = io::vector_to_json(after);

  Verdict v;
  v.check = "invariance principle";
  v.checked = 1;
  v.passed = vector_equal(before, after, f.tolerance);
  v.max_residual = v.mean_residual = vector_max_abs_diff(before, after);
  report.lines.push_back("invariance residual: " + std::to_string(v.max_residual));
  report.data["residual"] = v.max_residual;
  report.add(std::move(v));

  if (const json* other = io::optional_field(j, "add")) {
    const auto y = load([&] { return io::object_from_json<T>(*other, "/add", opt); });
    const auto sum = add(obj, y, f.tolerance);
    report.lines.push_back("sum coords " + to_string(sum.coords()));
    report.data["sum"] = io::object_to_json(sum);
  }
  if (const json* k = io::optional_field(j, "scale")) {
    const T factor = load([&] { return io::scalar_from_json<T>(*k, "/scale"); });
    const auto scaled = scale(obj, factor);
    report.lines.push_back("scaled coords " + to_string(scaled.coords()));
    report.data["scaled"] = io::object_to_json(scaled);
  }
}

// ---------------------------------------------------------------------------

template <Scalar T>
void dispatch(const std::string& command, const Flags& f, RunReport& report) {
  if (command == "repcheck") return cmd_repcheck<T>(f, report);
  if (command == "orbit") return cmd_orbit<T>(f, report);
  if (command == "basis") return cmd_basis<T>(f, report);
  if (command == "object") return cmd_object<T>(f, report);
  report = run_selftest({f.seed, f.samples, f.tolerance});
}

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--input", f.input, "JSON descriptor file ('-' for stdin)");
  auto* exact = app->add_flag("--exact", f.exact, "exact rational arithmetic (default)");
  auto* approx = app->add_flag("--approx", f.approx, "floating point arithmetic");
  exact->excludes(approx);
  app->add_option("--tolerance", f.tolerance, "float comparison tolerance")->capture_default_str();
  app->add_option("--seed", f.seed, "seed for sampled checks")->capture_default_str();
  app->add_option("--samples", f.samples, "number of sampled cases")->capture_default_str();
  app->add_option("--report", f.report, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app->add_option("--cap", f.cap, "enumeration cap")->capture_default_str();
}

std::string echo(int argc, char** argv) {
  std::string out = "basiskit";
  for (int i = 1; i < argc; ++i) out += std::string(" ") + argv[i];
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"basiskit: group representations, basis manifolds and geometrical objects"};
  app.require_subcommand(1);
  Flags f;
  auto* repcheck = app.add_subcommand("repcheck", "verify and classify a representation");
  auto* orbit = app.add_subcommand("orbit", "enumerate an orbit and the orbit partition");
  auto* basis = app.add_subcommand("basis", "basis manifold operations");
  auto* object = app.add_subcommand("object", "transform a geometrical object");
  auto* selftest = app.add_subcommand("selftest", "run the fixture suite");
  for (auto* sub : {repcheck, orbit, basis, object, selftest}) add_common(sub, f);
  orbit->add_option("--point", f.point, "point label, index, or JSON coordinate array");
  basis->add_option("action", f.action, "transform | change | gram-schmidt | standard-coords")->required();
  object->add_option("--element", f.element, "group element as a JSON matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  RunReport report;
  report.command = echo(argc, argv);
  report.backend = f.approx ? "approx" : "exact";
  report.tolerance = f.tolerance;
  report.seed = f.seed;
  report.samples = f.samples;

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  std::optional<Error> error;
  try {
    if (f.approx) {
      dispatch<double>(command, f, report);
    } else {
      dispatch<Rational>(command, f, report);
    }
    report.command = echo(argc, argv);
    code = report.passed() ? 0 : 1;
  } catch (const InputError& e) {
    error = e.error;
    code = 2;
  } catch (const Error& e) {
    error = e;
    code = 1;
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (error) {
    report.data["error"] = io::json{{"kind", std::string(to_string(error->kind()))}, {"message", error->what()}};
    report.add_flag(std::string(to_string(error->kind())), false, {error->what()});
    report.lines.push_back(std::string("error: ") + error->what());
  }
  if (f.report == "json") {
    std::cout << report.json_text();
  } else {
    std::cout << report.text();
    if (error) std::cerr << "error: " << error->what() << "\n";
  }
  return code;
}
