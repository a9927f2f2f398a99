#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "superfit/poly.hpp"

using namespace superfit;

namespace {

RingPtr mixedRing(long p = 0) {
  return RingSpec::make({"x", "y"}, {"a", "b", "c"}, p);
}

SuperPoly randomPoly(const RingPtr& ring, std::mt19937& rng, int maxTerms) {
  std::uniform_int_distribution<int> termCount(0, maxTerms);
  std::uniform_int_distribution<int> expDist(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> coeff(-4, 4);
  SuperPoly f(ring);
  int terms = termCount(rng);
  for (int t = 0; t < terms; ++t) {
    SuperMonomial m = SuperMonomial::unit(*ring);
    for (auto& e : m.even) e = expDist(rng);
    for (int o = 0; o < ring->oddCount(); ++o)
      if (coin(rng)) m.odd.push_back(o);
    f.addTerm(m, Scalar::of(coeff(rng), ring->characteristic));
  }
  return f;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
  Scalar half = Scalar::rational(mpq_class(1, 2));
  CHECK((half + half).isOne());
  CHECK((half * Scalar::of(2, 0)).isOne());
  CHECK(half.str() == "1/2");
  CHECK(Scalar::parse("-3/6", 0) == Scalar::rational(mpq_class(-1, 2)));

  Scalar f = Scalar::of(3, 5);
  CHECK((f * f.inverse()).isOne());
  CHECK(Scalar::of(-1, 5) == Scalar::of(4, 5));
  CHECK(Scalar::parse("2/3", 5) == Scalar::of(4, 5));
  CHECK_THROWS(Scalar::zero(5).inverse());
  CHECK_THROWS(half + f);

  CHECK(isPrime(2));
  CHECK(isPrime(97));
  CHECK(!isPrime(1));
  CHECK(!isPrime(91));
}

TEST_CASE("monomial multiplication signs") {
  auto ring = mixedRing();
  SuperPoly a = SuperPoly::variable(ring, "a");
  SuperPoly b = SuperPoly::variable(ring, "b");
  SuperPoly x = SuperPoly::variable(ring, "x");

  CHECK((a * b).str() == "a*b");
  CHECK((b * a).str() == "-a*b");
  CHECK((a * a).isZero());
  CHECK((x * x * (x * b)).str() == "x^3*b");
  CHECK((b * x) == (x * b));
}

TEST_CASE("difference of squares with an odd term") {
  auto ring = mixedRing();
  SuperPoly x = SuperPoly::variable(ring, "x");
  SuperPoly a = SuperPoly::variable(ring, "a");
  CHECK((x + a) * (x - a) == x * x);
  CHECK((x + a) * (x + a) == x * x + (x * a).scaled(Scalar::of(2, 0)));
}

TEST_CASE("product identity and zero") {
  auto ring = mixedRing();
  std::mt19937 rng(7);
  SuperPoly one = SuperPoly::constant(ring, 1);
  for (int i = 0; i < 10; ++i) {
    SuperPoly f = randomPoly(ring, rng, 5);
    CHECK(f * one == f);
    CHECK((f * SuperPoly::zero(ring)).isZero());
  }
}

TEST_CASE("associativity and supercommutativity, Q and F5") {
  for (long p : {0L, 5L}) {
    auto ring = mixedRing(p);
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
      SuperPoly f = randomPoly(ring, rng, 4);
      SuperPoly g = randomPoly(ring, rng, 4);
      SuperPoly h = randomPoly(ring, rng, 4);
      CHECK((f * g) * h == f * (g * h));
      CHECK((f + g) * h == f * h + g * h);
    }
    // supercommutativity on homogeneous elements
    SuperPoly a = SuperPoly::variable(ring, "a");
    SuperPoly b = SuperPoly::variable(ring, "b");
    SuperPoly x = SuperPoly::variable(ring, "x");
    SuperPoly oddElem = a + b.scaled(Scalar::of(2, p));
    SuperPoly evenElem = x * x + a * b;
    CHECK(oddElem * evenElem == evenElem * oddElem);
    CHECK(oddElem * oddElem == -(oddElem * oddElem));
    CHECK((oddElem * oddElem).isZero());  // odd degree-1 squares vanish
  }
}

TEST_CASE("characteristic 2 is commutative") {
  auto ring = mixedRing(2);
  std::mt19937 rng(13);
  for (int i = 0; i < 20; ++i) {
    SuperPoly f = randomPoly(ring, rng, 4);
    SuperPoly g = randomPoly(ring, rng, 4);
    CHECK(f * g == g * f);
  }
}

TEST_CASE("degree additivity on monomials") {
  auto ring = mixedRing();
  std::mt19937 rng(17);
  for (int i = 0; i < 30; ++i) {
    SuperPoly f = randomPoly(ring, rng, 1);
    SuperPoly g = randomPoly(ring, rng, 1);
    if (f.isZero() || g.isZero() || (f * g).isZero()) continue;
    CHECK((f * g).degree() == f.degree() + g.degree());
  }
}

TEST_CASE("canonical order") {
  auto ring = RingSpec::make({"x1", "x2"}, {}, 0);
  SuperMonomial x1x2 = SuperMonomial::unit(*ring);
  x1x2.even = {1, 1};
  SuperMonomial x1sq = SuperMonomial::unit(*ring);
  x1sq.even = {2, 0};
  CanonicalMonoLess less;
  CHECK(less(x1x2, x1sq));  // x1^2 > x1*x2 in degrevlex
  SuperMonomial deg3 = SuperMonomial::unit(*ring);
  deg3.even = {1, 2};
  CHECK(less(x1sq, deg3));
  CHECK(!less(x1sq, x1sq));
}

TEST_CASE("parity and homogeneity") {
  auto ring = mixedRing();
  SuperPoly f = SuperPoly::parse(ring, "x*a + b");
  CHECK(f.parity() == 1);
  CHECK(!f.isDegreeHomogeneous());
  SuperPoly g = SuperPoly::parse(ring, "x*a + x*b");
  CHECK(g.isDegreeHomogeneous());
  SuperPoly mixed = SuperPoly::parse(ring, "x + a");
  CHECK(!mixed.parity().has_value());
  CHECK(SuperPoly::zero(ring).parity() == 0);
}

TEST_CASE("text format round-trips") {
  auto ring = mixedRing();
  for (const char* text :
       {"0", "1", "-1", "x^2 - 2*x*a + 1/2", "a*b*c", "x*y + y^2",
        "3/7*x^2*y*a*c - b"}) {
    SuperPoly f = SuperPoly::parse(ring, text);
    CHECK(SuperPoly::parse(ring, f.str()) == f);
  }
  SuperPoly f = SuperPoly::parse(ring, "x^2 + 2*x*a");
  CHECK(f.str() == "x^2 + 2*x*a");
  CHECK(SuperPoly::parse(ring, "x - x").isZero());
  CHECK_THROWS(SuperPoly::parse(ring, "q + 1"));
}

TEST_CASE("json round-trips") {
  auto ring = mixedRing();
  SuperPoly f = SuperPoly::parse(ring, "x^2*y - 1/3*a*b + c");
  nlohmann::json j = f.toJson();
  CHECK(SuperPoly::fromJson(ring, j) == f);
  CHECK(SuperPoly::fromJson(ring, SuperPoly::zero(ring).toJson()).isZero());
}

TEST_CASE("degenerate rings") {
  auto noVars = RingSpec::make({}, {}, 0);
  CHECK(SuperPoly::constant(noVars, 3).degree() == 0);
  auto onlyOdd = RingSpec::make({}, {"e1", "e2"}, 0);
  SuperPoly top = SuperPoly::parse(onlyOdd, "e1*e2");
  CHECK((top * top).isZero());
  CHECK(monomialsOfDegree(*onlyOdd, 3).empty());
  CHECK(monomialsOfDegree(*onlyOdd, 2).size() == 1);
}

TEST_CASE("ring mismatch rejected") {
  auto r1 = mixedRing();
  auto r2 = RingSpec::make({"z"}, {}, 0);
  SuperPoly f = SuperPoly::variable(r1, "x");
  SuperPoly g = SuperPoly::variable(r2, "z");
  CHECK_THROWS(f * g);
  CHECK_THROWS(f + g);
}
