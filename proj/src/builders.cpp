#include "kac/builders.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace kac {

using ordered_json = nlohmann::ordered_json;

int CayleyTable::inverse(int g) const {
  for (int h = 0; h < order; ++h)
    if (mul(g, h) == identity) return h;
  throw InputError("CayleyTable '" + name + "': element " + std::to_string(g) +
                   " has no inverse");
}

void CayleyTable::validate() const {
  if (order <= 0 || (int)table.size() != order * order)
    throw InputError("CayleyTable '" + name + "': bad table size");
  if (identity < 0 || identity >= order)
    throw InputError("CayleyTable '" + name + "': bad identity index");
  for (int g = 0; g < order; ++g) {
    if (mul(identity, g) != g || mul(g, identity) != g)
      throw InputError("CayleyTable '" + name + "': identity law fails");
    std::vector<bool> row(order, false), col(order, false);
    for (int h = 0; h < order; ++h) {
      int gh = mul(g, h), hg = mul(h, g);
      if (gh < 0 || gh >= order || hg < 0 || hg >= order)
        throw InputError("CayleyTable '" + name + "': index out of range");
      if (row[gh] || col[hg])
        throw InputError("CayleyTable '" + name + "': not a Latin square");
      row[gh] = col[hg] = true;
    }
  }
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (int k = 0; k < order; ++k)
        if (mul(mul(g, h), k) != mul(g, mul(h, k)))
          throw InputError("CayleyTable '" + name + "': not associative");
}

CayleyTable cyclic_group(int order) {
  if (order <= 0) throw InputError("cyclic_group: order must be positive");
  CayleyTable G;
  G.name = "Z" + std::to_string(order);
  G.order = order;
  G.identity = 0;
  G.table.resize(order * order);
  for (int g = 0; g < order; ++g) {
    G.labels.push_back(g == 0 ? "e" : "g" + std::to_string(g));
    for (int h = 0; h < order; ++h) G.table[g * order + h] = (g + h) % order;
  }
  return G;
}

CayleyTable direct_product(const CayleyTable& G, const CayleyTable& H) {
  CayleyTable P;
  P.name = G.name + "x" + H.name;
  P.order = G.order * H.order;
  P.identity = G.identity * H.order + H.identity;
  P.table.resize(P.order * P.order);
  for (int g1 = 0; g1 < G.order; ++g1)
    for (int h1 = 0; h1 < H.order; ++h1) {
      P.labels.push_back("(" + G.labels[g1] + "," + H.labels[h1] + ")");
      for (int g2 = 0; g2 < G.order; ++g2)
        for (int h2 = 0; h2 < H.order; ++h2) {
          int a = g1 * H.order + h1, b = g2 * H.order + h2;
          P.table[a * P.order + b] =
              G.mul(g1, g2) * H.order + H.mul(h1, h2);
        }
    }
  return P;
}

CayleyTable symmetric_group_s3() {
  // r^i s^j with r = (123), s = (12); s r = r^2 s.
  CayleyTable G;
  G.name = "S3";
  G.order = 6;
  G.identity = 0;
  G.table.resize(36);
  auto idx = [](int i, int j) { return i + 3 * j; };
  G.labels = {"e", "r", "r2", "s", "rs", "r2s"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i s^j)(r^i2 s^j2) = r^{i + (-1)^j i2} s^{j+j2}
          int ii = ((i + (j ? -i2 : i2)) % 3 + 3) % 3;
          G.table[idx(i, j) * 6 + idx(i2, j2)] = idx(ii, (j + j2) % 2);
        }
  return G;
}

CayleyTable dihedral_group_d4() {
  CayleyTable G;
  G.name = "D4";
  G.order = 8;
  G.identity = 0;
  G.table.resize(64);
  auto idx = [](int i, int j) { return i + 4 * j; };
  G.labels = {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int ii = ((i + (j ? -i2 : i2)) % 4 + 4) % 4;
          G.table[idx(i, j) * 8 + idx(i2, j2)] = idx(ii, (j + j2) % 2);
        }
  return G;
}

CayleyTable quaternion_group_q8() {
  // 0..7 = 1, -1, i, -i, j, -j, k, -k
  CayleyTable G;
  G.name = "Q8";
  G.order = 8;
  G.identity = 0;
  G.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // base units 0=1,1=i,2=j,3=k with signs
  auto pack = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
  auto unit_of = [](int g) { return g / 2; };
  auto sign_of = [](int g) { return g % 2 ? -1 : 1; };
  // quaternion unit multiplication: (unit, unit) -> (unit, sign)
  static const int utab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int stab[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  G.table.resize(64);
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h) {
      int u = utab[unit_of(g)][unit_of(h)];
      int s = stab[unit_of(g)][unit_of(h)] * sign_of(g) * sign_of(h);
      G.table[g * 8 + h] = pack(u, s);
    }
  return G;
}

CayleyTable builtin_group(const std::string& name) {
  if (name == "Z2") return cyclic_group(2);
  if (name == "Z3") return cyclic_group(3);
  if (name == "Z4") return cyclic_group(4);
  if (name == "Z2xZ2") {
    CayleyTable G = direct_product(cyclic_group(2), cyclic_group(2));
    G.name = "Z2xZ2";
    return G;
  }
  if (name == "S3") return symmetric_group_s3();
  if (name == "D4") return dihedral_group_d4();
  if (name == "Q8") return quaternion_group_q8();
  throw InputError("unknown group '" + name + "'");
}

namespace {

double canon(double v) { return v == 0.0 ? 0.0 : v; }

void normalize_zeros(Algebra& A, HopfData& D) {
  auto fixv = [](Vec& v) {
    for (int i = 0; i < v.size(); ++i)
      v[i] = cx(canon(v[i].real()), canon(v[i].imag()));
  };
  auto fixm = [](Mat& M) {
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j)
        M(i, j) = cx(canon(M(i, j).real()), canon(M(i, j).imag()));
  };
  auto fixt = [](std::vector<cx>& t) {
    for (auto& v : t) v = cx(canon(v.real()), canon(v.imag()));
  };
  fixt(A.mult);
  fixv(A.unit);
  fixm(A.star);
  fixt(D.coproduct);
  fixv(D.counit);
  fixm(D.antipode);
  fixv(D.haar);
}

HopfAlgebra make_hopf(Algebra A, HopfData D) {
  normalize_zeros(A, D);
  return HopfAlgebra(std::move(A), std::move(D));
}

}  // namespace

HopfAlgebra group_algebra(const CayleyTable& G) {
  G.validate();
  const int n = G.order;
  Algebra A;
  A.name = "group:" + G.name;
  A.n = n;
  for (int g = 0; g < n; ++g) A.basis_labels.push_back("d_" + G.labels[g]);
  A.mult.assign(n * n * n, cx(0));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) A.mult[(g * n + h) * n + G.mul(g, h)] = 1.0;
  A.unit = Vec::Zero(n);
  A.unit[G.identity] = 1.0;
  A.star = Mat::Zero(n, n);
  for (int g = 0; g < n; ++g) A.star(G.inverse(g), g) = 1.0;

  HopfData D;
  D.coproduct.assign(n * n * n, cx(0));
  for (int g = 0; g < n; ++g) D.coproduct[(g * n + g) * n + g] = 1.0;
  D.counit = Vec::Ones(n);
  D.antipode = Mat::Zero(n, n);
  for (int g = 0; g < n; ++g) D.antipode(G.inverse(g), g) = 1.0;
  D.haar = Vec::Zero(n);
  D.haar[G.identity] = 1.0;
  return make_hopf(std::move(A), std::move(D));
}

HopfAlgebra function_algebra(const CayleyTable& G) {
  G.validate();
  const int n = G.order;
  Algebra A;
  A.name = "fun:" + G.name;
  A.n = n;
  for (int g = 0; g < n; ++g) A.basis_labels.push_back("ev_" + G.labels[g]);
  A.mult.assign(n * n * n, cx(0));
  for (int g = 0; g < n; ++g) A.mult[(g * n + g) * n + g] = 1.0;
  A.unit = Vec::Ones(n);
  A.star = Mat::Identity(n, n);

  HopfData D;
  D.coproduct.assign(n * n * n, cx(0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      D.coproduct[(G.mul(x, y) * n + x) * n + y] = 1.0;
  D.counit = Vec::Zero(n);
  D.counit[G.identity] = 1.0;
  D.antipode = Mat::Zero(n, n);
  for (int g = 0; g < n; ++g) D.antipode(G.inverse(g), g) = 1.0;
  D.haar = Vec::Constant(n, 1.0 / n);
  return make_hopf(std::move(A), std::move(D));
}

HopfAlgebra kac_paljutkin8() {
  // Generators x, y, z with x^2 = y^2 = 1, xy = yx,
  //   z^2 = (1 + x + y - xy)/2,  zx = yz,  zy = xz,
  //   Delta(x) = x(x)x, Delta(y) = y(x)y,
  //   Delta(z) = (1(x)1 + 1(x)x + y(x)1 - y(x)x)/2 (z(x)z).
  // Basis monomials x^i y^j z^e, indexed a + 4e with a = i + 2j.
  const int n = 8;
  auto phi = [](int a) { return ((a & 1) << 1) | ((a >> 1) & 1); };  // x<->y
  const double u[4] = {0.5, 0.5, 0.5, -0.5};  // z^2 in the x^i y^j basis

  Algebra A;
  A.name = "kp8";
  A.n = n;
  A.basis_labels = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};
  A.mult.assign(n * n * n, cx(0));
  for (int a = 0; a < 4; ++a)
    for (int e = 0; e < 2; ++e)
      for (int b = 0; b < 4; ++b)
        for (int f = 0; f < 2; ++f) {
          const int i = a + 4 * e, j = b + 4 * f;
          const int g = a ^ (e ? phi(b) : b);  // move z past b
          if (e + f < 2) {
            A.mult[(i * n + j) * n + (g + 4 * (e + f))] = 1.0;
          } else {
            for (int c = 0; c < 4; ++c)
              A.mult[(i * n + j) * n + (g ^ c)] = u[c];
          }
        }
  A.unit = Vec::Zero(n);
  A.unit[0] = 1.0;
  // x, y self-adjoint; z^* = z^{-1} = z^2 z = u z, so (a z)^* = u phi(a) z.
  A.star = Mat::Zero(n, n);
  for (int a = 0; a < 4; ++a) {
    A.star(a, a) = 1.0;
    for (int c = 0; c < 4; ++c) A.star((phi(a) ^ c) + 4, a + 4) = u[c];
  }

  HopfData D;
  D.coproduct.assign(n * n * n, cx(0));
  auto cp = [&](int i, int j, int k) -> cx& {
    return D.coproduct[(i * n + j) * n + k];
  };
  for (int a = 0; a < 4; ++a) {
    cp(a, a, a) = 1.0;  // x^i y^j is group-like
    const int i = a + 4;
    cp(i, a + 4, a + 4) = 0.5;
    cp(i, a + 4, (a ^ 1) + 4) = 0.5;
    cp(i, (a ^ 2) + 4, a + 4) = 0.5;
    cp(i, (a ^ 2) + 4, (a ^ 1) + 4) = -0.5;
  }
  D.counit = Vec::Ones(n);
  // S fixes x, y, z; as an antihomomorphism S(a z) = phi(a) z.
  D.antipode = Mat::Zero(n, n);
  for (int a = 0; a < 4; ++a) {
    D.antipode(a, a) = 1.0;
    D.antipode(phi(a) + 4, a + 4) = 1.0;
  }
  // Haar state: coefficient of the identity monomial.
  D.haar = Vec::Zero(n);
  D.haar[0] = 1.0;
  return make_hopf(std::move(A), std::move(D));
}

HopfAlgebra builtin_hopf(const std::string& name) {
  if (name == "kp8") return kac_paljutkin8();
  auto starts = [&](const char* p) {
    return name.rfind(p, 0) == 0;
  };
  if (starts("group:")) return group_algebra(builtin_group(name.substr(6)));
  if (starts("fun:")) return function_algebra(builtin_group(name.substr(4)));
  if (starts("dual:")) return dual_hopf(builtin_hopf(name.substr(5)));
  if (starts("cop:")) return co_opposite(builtin_hopf(name.substr(4)));
  throw InputError("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_hopf_names() {
  std::vector<std::string> out;
  const char* groups[] = {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"};
  for (const char* g : groups) out.push_back(std::string("group:") + g);
  for (const char* g : groups) out.push_back(std::string("fun:") + g);
  out.push_back("kp8");
  return out;
}

namespace {

ordered_json complex_json(cx v) {
  return ordered_json::array({canon(v.real()), canon(v.imag())});
}

ordered_json vector_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(complex_json(v[i]));
  return a;
}

ordered_json matrix_json(const Mat& M) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < M.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(complex_json(M(i, j)));
    a.push_back(row);
  }
  return a;
}

ordered_json sparse_tensor_json(const std::vector<cx>& t, int n) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        cx v = t[(i * n + j) * n + k];
        if (v == cx(0)) continue;
        a.push_back(ordered_json::array(
            {i, j, k, canon(v.real()), canon(v.imag())}));
      }
  return a;
}

cx complex_from(const ordered_json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("spec: " + what + ": expected [re, im]");
  return cx(j[0].get<double>(), j[1].get<double>());
}

Vec vector_from(const ordered_json& j, int n, const std::string& what) {
  if (!j.is_array() || (int)j.size() != n)
    throw InputError("spec: " + what + ": expected array of length " +
                     std::to_string(n));
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = complex_from(j[i], what);
  return v;
}

Mat matrix_from(const ordered_json& j, int n, const std::string& what) {
  if (!j.is_array() || (int)j.size() != n)
    throw InputError("spec: " + what + ": expected " + std::to_string(n) +
                     " rows");
  Mat M(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || (int)j[i].size() != n)
      throw InputError("spec: " + what + ": row " + std::to_string(i) +
                       " must have " + std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k) M(i, k) = complex_from(j[i][k], what);
  }
  return M;
}

std::vector<cx> sparse_tensor_from(const ordered_json& j, int n,
                                   const std::string& what) {
  if (!j.is_array()) throw InputError("spec: " + what + ": expected array");
  std::vector<cx> t(n * n * n, cx(0));
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 5)
      throw InputError("spec: " + what + ": entries must be [i,j,k,re,im]");
    int i = entry[0].get<int>(), jj = entry[1].get<int>(),
        k = entry[2].get<int>();
    if (i < 0 || i >= n || jj < 0 || jj >= n || k < 0 || k >= n)
      throw InputError("spec: " + what + ": index out of range");
    t[(i * n + jj) * n + k] =
        cx(entry[3].get<double>(), entry[4].get<double>());
  }
  return t;
}

}  // namespace

std::string emit_spec(const HopfAlgebra& H) {
  const Algebra& A = H.algebra;
  const int n = A.n;
  ordered_json j;
  j["name"] = A.name;
  j["dimension"] = n;
  j["basis_labels"] = A.basis_labels;
  j["mult"] = sparse_tensor_json(A.mult, n);
  j["unit"] = vector_json(A.unit);
  j["star"] = matrix_json(A.star);
  j["coproduct"] = sparse_tensor_json(H.hopf.coproduct, n);
  j["counit"] = vector_json(H.hopf.counit);
  j["antipode"] = matrix_json(H.hopf.antipode);
  j["haar"] = vector_json(H.hopf.haar);
  return j.dump(2) + "\n";
}

HopfAlgebra parse_spec_unchecked(const std::string& text, const Tolerance& tol) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("spec: JSON syntax error: ") + e.what());
  }
  if (!j.is_object()) throw InputError("spec: top-level value must be an object");
  for (const char* key : {"name", "dimension", "basis_labels", "mult", "unit",
                          "star", "coproduct", "counit", "antipode", "haar"})
    if (!j.contains(key))
      throw InputError(std::string("spec: missing key '") + key + "'");

  Algebra A;
  if (!j["name"].is_string()) throw InputError("spec: 'name' must be a string");
  A.name = j["name"].get<std::string>();
  if (!j["dimension"].is_number_integer() || j["dimension"].get<int>() <= 0)
    throw InputError("spec: 'dimension' must be a positive integer");
  const int n = j["dimension"].get<int>();
  A.n = n;
  if (!j["basis_labels"].is_array() || (int)j["basis_labels"].size() != n)
    throw InputError("spec: 'basis_labels' must list " + std::to_string(n) +
                     " strings");
  for (const auto& l : j["basis_labels"])
    A.basis_labels.push_back(l.get<std::string>());
  A.mult = sparse_tensor_from(j["mult"], n, "mult");
  A.unit = vector_from(j["unit"], n, "unit");
  A.star = matrix_from(j["star"], n, "star");

  HopfData D;
  D.coproduct = sparse_tensor_from(j["coproduct"], n, "coproduct");
  D.counit = vector_from(j["counit"], n, "counit");
  D.antipode = matrix_from(j["antipode"], n, "antipode");
  D.haar = vector_from(j["haar"], n, "haar");

  return HopfAlgebra(std::move(A), std::move(D), tol);
}

HopfAlgebra parse_spec(const std::string& text, const Tolerance& tol) {
  HopfAlgebra H = parse_spec_unchecked(text, tol);
  Report alg = validate_algebra(H.algebra, tol, &H.hopf.haar);
  Report hopf = check_hopf_axioms(H, tol);
  Report haar = check_haar(H, tol);
  auto collect = [](const Report& r, std::ostringstream& os) {
    for (const auto& it : r.items)
      if (!it.pass) os << " " << it.name << "(residual " << it.residual << ")";
  };
  if (!alg.pass() || !hopf.pass() || !haar.pass()) {
    std::ostringstream os;
    os << "spec '" << H.name() << "': axiom failures:";
    collect(alg, os);
    collect(hopf, os);
    collect(haar, os);
    throw ConstructionError(os.str());
  }
  return H;
}

}  // namespace kac
