#include <doctest.h>

#include "kac/builders.hpp"

using namespace kac;

TEST_CASE("cayley table validation catches bad tables") {
  CayleyTable G = cyclic_group(3);
  CHECK_NOTHROW(G.validate());
  CayleyTable broken = G;
  broken.table[1 * 3 + 1] = 1;  // 1*1 = 1 breaks the Latin square property
  CHECK_THROWS_AS(broken.validate(), InputError);
}

TEST_CASE("direct product builds Z2xZ2") {
  CayleyTable G = builtin_group("Z2xZ2");
  CHECK(G.order == 4);
  for (int g = 0; g < 4; ++g) CHECK(G.mul(g, g) == G.identity);
}

TEST_CASE("builtin groups have the right orders and centers") {
  CHECK(builtin_group("S3").order == 6);
  CHECK(builtin_group("D4").order == 8);
  CHECK(builtin_group("Q8").order == 8);
  // |Z(D4)| = |Z(Q8)| = 2, |Z(S3)| = 1.
  auto center_size = [](const CayleyTable& G) {
    int c = 0;
    for (int g = 0; g < G.order; ++g) {
      bool central = true;
      for (int h = 0; h < G.order; ++h)
        if (G.mul(g, h) != G.mul(h, g)) central = false;
      c += central;
    }
    return c;
  };
  CHECK(center_size(builtin_group("S3")) == 1);
  CHECK(center_size(builtin_group("D4")) == 2);
  CHECK(center_size(builtin_group("Q8")) == 2);
}

TEST_CASE("kp8 satisfies its defining relations") {
  HopfAlgebra H = builtin_hopf("kp8");
  const Algebra& A = H.algebra;
  auto e = [&](int i) { return Vec(Vec::Unit(8, i)); };
  // Basis order: 1, x, y, xy, z, xz, yz, xyz.
  Vec x = e(1), y = e(2), xy = e(3), z = e(4);
  CHECK((A.multiply(x, x) - e(0)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((A.multiply(y, y) - e(0)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((A.multiply(x, y) - A.multiply(y, x)).cwiseAbs().maxCoeff() < 1e-12);
  Vec z2 = 0.5 * (e(0) + x + y - xy);
  CHECK((A.multiply(z, z) - z2).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((A.multiply(z, x) - A.multiply(y, z)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((A.multiply(z, y) - A.multiply(x, z)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("emit/parse round trip is byte identical") {
  for (const auto& name : builtin_hopf_names()) {
    CAPTURE(name);
    std::string text = emit_spec(builtin_hopf(name));
    HopfAlgebra H = parse_spec(text);
    CHECK(emit_spec(H) == text);
  }
}

TEST_CASE("emitted specs are deterministic") {
  CHECK(emit_spec(builtin_hopf("kp8")) == emit_spec(builtin_hopf("kp8")));
}

namespace {

// Replace the (array) value of a top-level key in an emitted spec document.
std::string replace_key(const std::string& text, const std::string& key,
                        const std::string& value) {
  auto pos = text.find("\"" + key + "\"");
  REQUIRE(pos != std::string::npos);
  auto open = text.find('[', pos);
  int depth = 0;
  size_t end = open;
  for (; end < text.size(); ++end) {
    if (text[end] == '[') ++depth;
    if (text[end] == ']' && --depth == 0) break;
  }
  return text.substr(0, open) + value + text.substr(end + 1);
}

}  // namespace

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_spec("{not json"), InputError);
  CHECK_THROWS_AS(parse_spec("[]"), InputError);
  CHECK_THROWS_AS(parse_spec("{\"name\":\"a\"}"), InputError);
  // Right shape, wrong algebra: mult tensor all zero.
  std::string text = emit_spec(builtin_hopf("group:Z2"));
  CHECK_THROWS_AS(parse_spec(replace_key(text, "mult", "[]")),
                  ConstructionError);
}

TEST_CASE("parse names the failing axiom") {
  std::string text = emit_spec(builtin_hopf("group:Z2"));
  // Perturb the Haar vector: [1,0] -> [0.9,0.1] keeps normalization but
  // breaks invariance.
  std::string broken =
      replace_key(text, "haar", "[[0.9, 0.0], [0.1, 0.0]]");
  try {
    parse_spec(broken);
    CHECK(false);
  } catch (const ConstructionError& e) {
    CHECK(std::string(e.what()).find("haar_invariance") != std::string::npos);
  }
}

TEST_CASE("unknown builtin names are input errors") {
  CHECK_THROWS_AS(builtin_hopf("group:Z5"), InputError);
  CHECK_THROWS_AS(builtin_hopf("nope"), InputError);
}
