#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "superfit/groebner.hpp"
#include "superfit/linalg.hpp"

using namespace superfit;

namespace {

Ideal parseIdeal(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<SuperPoly> polys;
  for (const char* g : gens) polys.push_back(SuperPoly::parse(ring, g));
  return Ideal(ring, std::move(polys));
}

// Brute-force K-dimension of the degree-d piece of the ideal: span of all
// monomial multiples of the generators.
int dimensionOracle(const Ideal& I, int d) {
  SpanBasis<SuperMonomial, CanonicalMonoLess> span;
  for (const auto& g : I.generators()) {
    if (g.isZero()) continue;
    int dm = d - g.degree();
    if (dm < 0) continue;
    for (const auto& m : monomialsOfDegree(*I.ring(), dm)) {
      SuperPoly f = g.mulMonoLeft(m, Scalar::one(I.ring()->characteristic));
      if (f.isZero()) continue;
      span.add({f.terms().begin(), f.terms().end()});
    }
  }
  return span.dimension();
}

RingPtr example3Ring(long p = 0) {
  return RingSpec::make({"x", "y"}, {"a", "b"}, p);
}

}  // namespace

TEST_CASE("already a basis stays put") {
  auto ring = RingSpec::make({"x", "y"}, {}, 0);
  auto I = parseIdeal(ring, {"x^2", "x*y"});
  CHECK(I.gb().generators.size() == 2);
  CHECK(I.contains(SuperPoly::parse(ring, "x^2*y")));
  CHECK(!I.contains(SuperPoly::parse(ring, "y^2")));
}

TEST_CASE("odd principal ideal") {
  auto ring = RingSpec::make({}, {"a", "b"}, 0);
  auto I = parseIdeal(ring, {"a*b"});
  CHECK(I.gb().generators.size() == 1);
  // a*b*a = 0 so membership of the zero product is automatic
  SuperPoly prod = SuperPoly::parse(ring, "a*b") * SuperPoly::parse(ring, "a");
  CHECK(prod.isZero());
}

TEST_CASE("Example 3 annihilator membership") {
  auto ring = example3Ring();
  auto ann = parseIdeal(
      ring, {"a*x*y", "b*x*y", "x^2*y - x*a*b", "x*y^2 + y*a*b"});
  CHECK(ann.contains(SuperPoly::parse(ring, "x^2*y^2 + x*y*a*b")));
  CHECK(ann.contains(SuperPoly::parse(ring, "x^2*y^2 - x*y*a*b")));
  // the "+" companion of the degree-3 x-side generator is not in the ideal
  CHECK(!ann.contains(SuperPoly::parse(ring, "x^2*y + x*a*b")));
  CHECK(!ann.contains(SuperPoly::parse(ring, "x*y - a*b")));
  CHECK(normalForm(SuperPoly::zero(ring), ann.gb()).isZero());
}

TEST_CASE("normal form is linear") {
  auto ring = example3Ring();
  auto I = parseIdeal(ring, {"x*y - a*b", "x*a"});
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    SuperPoly f(ring), g(ring);
    for (const auto& m : monomialsOfDegree(*ring, 2))
      f.addTerm(m, Scalar::of(coeff(rng), 0));
    for (const auto& m : monomialsOfDegree(*ring, 2))
      g.addTerm(m, Scalar::of(coeff(rng), 0));
    Scalar c = Scalar::of(coeff(rng), 0);
    CHECK(normalForm(f + g, I.gb()) ==
          normalForm(f, I.gb()) + normalForm(g, I.gb()));
    CHECK(normalForm(f.scaled(c), I.gb()) == normalForm(f, I.gb()).scaled(c));
  }
}

TEST_CASE("membership independent of generating set") {
  auto ring = example3Ring();
  auto I = parseIdeal(ring, {"x*y - a*b", "x*a"});
  // same ideal, redundant and transformed generators
  auto J = parseIdeal(ring, {"x*a", "x^2*a - x*y*a",
                             "x*y^2 - y*a*b", "x*y - a*b"});
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    SuperPoly f(ring);
    int deg = 1 + trial % 3;
    for (const auto& m : monomialsOfDegree(*ring, deg))
      f.addTerm(m, Scalar::of(coeff(rng), 0));
    CHECK(normalForm(f, I.gb()) == normalForm(f, J.gb()));
  }
}

TEST_CASE("mixed parity input rejected") {
  auto ring = example3Ring();
  CHECK_THROWS(parseIdeal(ring, {"x + a"}).gb());
}

TEST_CASE("degree dimension oracle") {
  auto ring = example3Ring();
  std::vector<Ideal> ideals = {
      parseIdeal(ring, {"x*y - a*b", "x*a"}),
      parseIdeal(ring, {"a*x*y", "b*x*y", "x^2*y - x*a*b", "x*y^2 + y*a*b"}),
      parseIdeal(ring, {"a*b"}),
      parseIdeal(ring, {"x^2 + a*b", "y^2"}),
  };
  for (const auto& I : ideals)
    for (int d = 0; d <= 4; ++d)
      CHECK(idealDimensionInDegree(I, d) == dimensionOracle(I, d));
  // positive characteristic
  auto ring5 = example3Ring(5);
  auto I5 = parseIdeal(ring5, {"x*y - a*b", "x*a", "y*b"});
  for (int d = 0; d <= 4; ++d)
    CHECK(idealDimensionInDegree(I5, d) == dimensionOracle(I5, d));
}

TEST_CASE("purely odd ring terminates") {
  auto ring = RingSpec::make({}, {"e1", "e2", "e3", "e4"}, 0);
  auto I = parseIdeal(ring, {"e1*e2 + e3*e4", "e1*e3"});
  CHECK(I.gb().generators.size() >= 2);
  CHECK(I.contains(SuperPoly::parse(ring, "e1*e2*e4")));
  for (int d = 0; d <= 4; ++d)
    CHECK(idealDimensionInDegree(I, d) == dimensionOracle(I, d));
}

TEST_CASE("intersection") {
  auto ring = RingSpec::make({"x", "y"}, {}, 0);
  auto I = parseIdeal(ring, {"x"});
  auto J = parseIdeal(ring, {"y"});
  CHECK(idealEqual(idealIntersect(I, J), parseIdeal(ring, {"x*y"})));
  CHECK(idealEqual(idealIntersect(I, I), I));

  auto oring = RingSpec::make({}, {"a", "b"}, 0);
  auto A = parseIdeal(oring, {"a"});
  auto B = parseIdeal(oring, {"b"});
  Ideal AB = idealIntersect(A, B);
  CHECK(idealEqual(AB, parseIdeal(oring, {"a*b"})));
  for (int d = 0; d <= 3; ++d)
    CHECK(idealDimensionInDegree(AB, d) == dimensionOracle(AB, d));
}

TEST_CASE("colon") {
  auto ring = RingSpec::make({"x", "y"}, {}, 0);
  auto I = parseIdeal(ring, {"x*y"});
  CHECK(idealEqual(idealColon(I, SuperPoly::parse(ring, "x")),
                   parseIdeal(ring, {"y"})));
  CHECK(idealEqual(idealColon(I, SuperPoly::constant(ring, 1)), I));
  CHECK(idealColon(I, SuperPoly::zero(ring)).isUnit());

  auto oring = RingSpec::make({}, {"a", "b"}, 0);
  auto J = parseIdeal(oring, {"a*b"});
  Ideal Q = idealColon(J, SuperPoly::parse(oring, "a"));
  CHECK(Q.contains(SuperPoly::parse(oring, "b")));
  CHECK(Q.contains(SuperPoly::parse(oring, "a")));  // a*a = 0 in a*b trivially
}

TEST_CASE("elimination") {
  auto ring = RingSpec::make({"t", "x", "y"}, {"a"}, 0);
  auto I = parseIdeal(ring, {"t*x", "y - t*y"});
  // eliminating t from (t*x, (1-t)*y) leaves (x*y); note the generators here
  // are not degree homogeneous, only Z/2 homogeneous
  Ideal E = eliminateVars(I, {0});
  CHECK(E.contains(SuperPoly::parse(ring, "x*y")));
  for (const auto& g : E.generators())
    for (const auto& [m, c] : g.terms()) CHECK(m.even[0] == 0);

  auto J = parseIdeal(ring, {"x*y", "x^2"});
  CHECK(idealEqual(eliminateVars(J, {3}), J));  // odd var not involved
  CHECK(idealEqual(eliminateVars(J, {}), J));
}

TEST_CASE("ideal equality under shuffles") {
  auto ring = example3Ring();
  auto I = parseIdeal(ring, {"x*a", "x*y - a*b"});
  auto J = parseIdeal(ring, {"x*y - a*b", "x*a"});
  CHECK(idealEqual(I, J));
  CHECK(idealContains(I, J));
  CHECK(!idealEqual(I, parseIdeal(ring, {"x*a"})));
}

TEST_CASE("minimal generators") {
  auto ring = RingSpec::make({"x", "y"}, {}, 0);
  auto I = parseIdeal(ring, {"x^2", "x*y", "x^2*y", "x^3 + x^2*y"});
  auto mins = minimalGenerators(I);
  CHECK(mins.size() == 2);

  auto U = Ideal(ring, {SuperPoly::constant(ring, 2)});
  CHECK(minimalGenerators(U).size() == 1);
  CHECK(U.isUnit());
}

TEST_CASE("unit and zero ideals") {
  auto ring = example3Ring();
  CHECK(Ideal::zero(ring).isZero());
  CHECK(Ideal::unit(ring).isUnit());
  CHECK(Ideal::unit(ring).contains(SuperPoly::parse(ring, "a*b + x")));
  CHECK(!Ideal::zero(ring).contains(SuperPoly::parse(ring, "x")));
}
