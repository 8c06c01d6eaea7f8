#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kac/analysis.hpp"
#include "kac/builders.hpp"
#include "kac/compare.hpp"

using nlohmann::ordered_json;
using namespace kac;

namespace {

constexpr uint64_t kSeed = 0x5EED;

// A spec argument is either a path to a spec file or a builtin name.
std::string read_source(const std::string& arg, bool* is_file) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + arg);
    std::ostringstream os;
    os << in.rdbuf();
    *is_file = true;
    return os.str();
  }
  *is_file = false;
  return arg;
}

HopfAlgebra load_unchecked(const std::string& arg, const Tolerance& tol) {
  bool is_file = false;
  std::string text = read_source(arg, &is_file);
  if (is_file) return parse_spec_unchecked(text, tol);
  return builtin_hopf(arg);
}

HopfAlgebra load_checked(const std::string& arg, const Tolerance& tol) {
  bool is_file = false;
  std::string text = read_source(arg, &is_file);
  if (is_file) return parse_spec(text, tol);
  return builtin_hopf(arg);  // builtins are validated by their tests
}

void write_output(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + out_path);
  out << payload;
}

std::string dump(const ordered_json& j, bool pretty) {
  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

ordered_json report_json(const Report& r) {
  ordered_json a = ordered_json::array();
  for (const auto& it : r.items)
    a.push_back({{"name", it.name}, {"residual", it.residual}, {"pass", it.pass}});
  return a;
}

std::string rational_str(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

ordered_json fusion_json(const FusionTensor& N) {
  ordered_json t = ordered_json::array();
  for (int i = 0; i < N.k; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < N.k; ++j) {
      ordered_json cell = ordered_json::array();
      for (int l = 0; l < N.k; ++l) cell.push_back(N.at(i, j, l));
      row.push_back(cell);
    }
    t.push_back(row);
  }
  return t;
}

Vec random_positive(const Algebra& A, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(A.n);
  for (int i = 0; i < A.n; ++i) v[i] = cx(g(rng), g(rng));
  return A.multiply(A.star_of(v), v);
}

int cmd_builtin(const std::string& name, const std::string& out) {
  HopfAlgebra H = builtin_hopf(name);
  write_output(emit_spec(H), out);
  return 0;
}

int cmd_check(const std::string& arg, const Tolerance& tol, bool pretty,
              const std::string& out) {
  HopfAlgebra H = load_unchecked(arg, tol);
  Report alg = validate_algebra(H.algebra, tol, &H.hopf.haar);
  Report hopf = check_hopf_axioms(H, tol);
  Report haar = check_haar(H, tol);
  bool pass = alg.pass() && hopf.pass() && haar.pass();
  ordered_json j;
  j["name"] = H.name();
  j["dimension"] = H.dim();
  j["pass"] = pass;
  j["algebra"] = report_json(alg);
  j["hopf"] = report_json(hopf);
  j["haar"] = report_json(haar);
  write_output(dump(j, pretty), out);
  return pass ? 0 : 1;
}

int cmd_semiring(const std::string& arg, const Tolerance& tol, bool pretty,
                 const std::string& out) {
  HopfAlgebra H = load_checked(arg, tol);
  SemiringSignature S = signature(H, tol);
  ordered_json j;
  j["name"] = H.name();
  j["blocks"] = S.d;
  ordered_json w = ordered_json::array();
  for (const auto& r : S.weights) w.push_back(rational_str(r));
  j["weights"] = w;
  j["unit"] = S.unit;
  j["fusion"] = fusion_json(S.N);
  j["commutative"] = is_commutative_semiring(S.N);
  j["k0"] = {{"rank", S.k},
             {"unit", S.unit},
             {"description",
              "free abelian group Z^" + std::to_string(S.k) +
                  " with the fusion product"}};
  write_output(dump(j, pretty), out);
  return 0;
}

int cmd_verify(const std::string& arg, const Tolerance& tol, bool pretty,
               const std::string& out) {
  HopfAlgebra H = load_checked(arg, tol);
  const Algebra& A = H.algebra;
  const int n = A.n;
  const double thresh = 1e2 * tol.rank_tol;
  Report rep;

  GnsSpace G = gns(H, tol);
  MultUnitary U = multiplicative_unitary(H, G, tol);
  const int n2 = n * n;
  rep.add("v_unitary",
          (U.V.adjoint() * U.V - Mat::Identity(n2, n2)).cwiseAbs().maxCoeff(),
          thresh);
  rep.add("v_equals_t_inverse", U.vt_residual, thresh);
  rep.add("twisted_linearity", twisted_linearity_residual(H, G, U), thresh);

  std::mt19937_64 rng(kSeed);
  std::normal_distribution<double> gauss;
  auto random_vec = [&]() {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = cx(gauss(rng), gauss(rng));
    return v;
  };

  double four_res = 0.0, haar_res = 0.0;
  Mat F = fourier_matrix(H);
  for (int t = 0; t < 200; ++t) {
    Vec a = random_vec(), b = random_vec();
    Vec ab = convolve(a, b, H);
    Vec Fa = F * a, Fb = F * b, Fab = F * ab;
    // Product of F(a) and F(b) in the dual algebra.
    Vec prod = Vec::Zero(n);
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          prod[l] += Fa[i] * Fb[k] * H.hopf.c(n, l, i, k);
    four_res = std::max(four_res, (Fab - prod).cwiseAbs().maxCoeff());
    cx lhs = H.haar_of(ab);
    haar_res = std::max(haar_res,
                        std::abs(lhs - H.haar_of(a) * H.haar_of(b)));
  }
  rep.add("fourier_multiplicative", four_res, thresh);
  rep.add("haar_multiplicative", haar_res, thresh);

  double fit_res = 0.0;
  double scale = 0.0;
  bool scale_set = false;
  for (int t = 0; t < 50; ++t) {
    Vec p = random_positive(A, rng), q = random_positive(A, rng);
    BoxConvolveReport bc = verify_box_convolve(p, q, H, G, U, tol);
    fit_res = std::max(fit_res, bc.residual);
    if (!scale_set) {
      scale = bc.scale;
      scale_set = true;
    } else {
      fit_res = std::max(fit_res, std::abs(bc.scale - scale) /
                                      std::max(1.0, std::abs(scale)));
    }
  }
  rep.add("partial_trace_scale_fit", fit_res, thresh);

  // Cross-route: the unitary route and the fusion route give the same class.
  const Blocks& B = H.blocks(tol);
  FusionTensor N = fusion_tensor(H, tol);
  long cross = 0;
  for (int i = 0; i < B.k; ++i)
    for (int j = 0; j < B.k; ++j) {
      MultVec via_u = box_class_via_unitary(B.z[i], B.z[j], H, G, U, tol);
      MultVec via_f = box(class_of(B.z[i], H, tol), class_of(B.z[j], H, tol), N);
      for (int l = 0; l < B.k; ++l) cross += std::labs(via_u[l] - via_f[l]);
    }
  rep.add("box_cross_route", (double)cross, 0.5);

  ordered_json j;
  j["name"] = H.name();
  j["pass"] = rep.pass();
  j["scale"] = scale;
  j["checks"] = report_json(rep);
  write_output(dump(j, pretty), out);
  return rep.pass() ? 0 : 1;
}

int cmd_compare(const std::string& a, const std::string& b,
                const Tolerance& tol, bool ignore_weights, bool pretty,
                const std::string& out) {
  HopfAlgebra HA = load_checked(a, tol);
  HopfAlgebra HB = load_checked(b, tol);
  SemiringSignature SA = signature(HA, tol);
  SemiringSignature SB = signature(HB, tol);
  CompareResult R = compare_semirings(SA, SB, !ignore_weights);
  ordered_json j;
  j["a"] = HA.name();
  j["b"] = HB.name();
  j["verdict"] = R.verdict;
  j["iso_certificate"] = R.iso ? ordered_json(R.iso_perm) : ordered_json();
  j["anti_certificate"] = R.anti ? ordered_json(R.anti_perm) : ordered_json();
  if (R.iso || R.anti)
    j["note"] =
        "verdict compares fusion data (blocks, weights, unit, fusion rules) "
        "only; non-isomorphic algebras can share this data";
  write_output(dump(j, pretty), out);
  return R.verdict == "distinct" ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quantum group Cuntz semiring toolkit"};
  app.require_subcommand(1);

  double tol_value = 1e-8;
  bool pretty = false;
  std::string out_path;
  app.add_option("--tol", tol_value, "numerical tolerance")
      ->check(CLI::PositiveNumber);
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  std::string name, spec_a, spec_b;
  bool ignore_weights = false;

  auto* c_builtin = app.add_subcommand("builtin", "emit a built-in spec");
  c_builtin->add_option("name", name, "builtin name")->required();

  auto* c_check = app.add_subcommand("check", "validate a spec");
  c_check->add_option("spec", spec_a, "spec file or builtin name")->required();

  auto* c_semiring =
      app.add_subcommand("semiring", "Cuntz semiring and K0 tables");
  c_semiring->add_option("spec", spec_a, "spec file or builtin name")
      ->required();

  auto* c_verify = app.add_subcommand("verify", "analysis-route verifications");
  c_verify->add_option("spec", spec_a, "spec file or builtin name")->required();

  auto* c_compare = app.add_subcommand("compare", "compare two semirings");
  c_compare->add_option("a", spec_a, "first spec")->required();
  c_compare->add_option("b", spec_b, "second spec")->required();
  c_compare->add_flag("--ignore-weights", ignore_weights,
                      "match blocks by dimension only");

  for (CLI::App* s : {c_builtin, c_check, c_semiring, c_verify, c_compare})
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Tolerance tol;
  tol.rank_tol = tol_value;

  try {
    if (c_builtin->parsed()) return cmd_builtin(name, out_path);
    if (c_check->parsed()) return cmd_check(spec_a, tol, pretty, out_path);
    if (c_semiring->parsed()) return cmd_semiring(spec_a, tol, pretty, out_path);
    if (c_verify->parsed()) return cmd_verify(spec_a, tol, pretty, out_path);
    if (c_compare->parsed())
      return cmd_compare(spec_a, spec_b, tol, ignore_weights, pretty, out_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
