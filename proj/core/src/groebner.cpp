#include "superfit/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "superfit/linalg.hpp"

namespace superfit {

const std::pair<const SuperMonomial, Scalar>& leadingTermUnder(
    const SuperPoly& f, const TermOrder& order) {
  if (f.isZero()) throw std::logic_error("leading term of zero");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return *best;
}

namespace {

// f -= (c / (sign * lc_g)) * q * g  where q * LM(g) = sign * target
void reduceStep(SuperPoly& f, const SuperMonomial& target, const Scalar& c,
                const SuperPoly& g, const std::pair<const SuperMonomial, Scalar>& ltg) {
  SuperMonomial q = monoQuotient(target, ltg.first);
  auto sq = monoMul(q, ltg.first);
  Scalar factor = c / ltg.second;
  if (sq->first < 0) factor = -factor;
  f -= g.mulMonoLeft(q, factor);
}

SuperPoly reduceFull(SuperPoly f, const std::vector<SuperPoly>& basis,
                     const TermOrder& order) {
  SuperPoly remainder(f.ring());
  while (!f.isZero()) {
    const auto& lt = leadingTermUnder(f, order);
    bool reduced = false;
    for (const auto& g : basis) {
      const auto& ltg = leadingTermUnder(g, order);
      if (monoDivides(ltg.first, lt.first)) {
        reduceStep(f, lt.first, lt.second, g, ltg);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.addTerm(lt.first, lt.second);
      SuperPoly t = SuperPoly::term(f.ring(), lt.first, lt.second);
      f -= t;
    }
  }
  return remainder;
}

}  // namespace

SuperPoly normalForm(SuperPoly f, const GroebnerBasis& gb) {
  requireSameRing(f.ring(), gb.ring);
  return reduceFull(std::move(f), gb.generators, gb.order);
}

namespace {

struct Pair {
  int i, j;       // j == -1: odd self-pair on variable oddVar
  int oddVar;
  int lcmDegree;
};

SuperPoly sPoly(const SuperPoly& f, const SuperPoly& g, const TermOrder& order) {
  const auto& ltf = leadingTermUnder(f, order);
  const auto& ltg = leadingTermUnder(g, order);
  SuperMonomial L = monoLcm(ltf.first, ltg.first);
  SuperMonomial qf = monoQuotient(L, ltf.first);
  SuperMonomial qg = monoQuotient(L, ltg.first);
  auto sf = monoMul(qf, ltf.first);
  auto sg = monoMul(qg, ltg.first);
  Scalar cf = ltf.second.inverse();
  if (sf->first < 0) cf = -cf;
  Scalar cg = ltg.second.inverse();
  if (sg->first < 0) cg = -cg;
  return f.mulMonoLeft(qf, cf) - g.mulMonoLeft(qg, cg);
}

void enqueuePairs(std::vector<Pair>& queue, const std::vector<SuperPoly>& basis,
                  int newIndex, const TermOrder& order) {
  const auto& ltNew = leadingTermUnder(basis[newIndex], order);
  for (int i = 0; i < newIndex; ++i) {
    const auto& lti = leadingTermUnder(basis[i], order);
    // product criterion, safe only when both leading monomials are even
    if (lti.first.odd.empty() && ltNew.first.odd.empty()) {
      bool coprime = true;
      for (size_t k = 0; k < lti.first.even.size(); ++k)
        if (lti.first.even[k] > 0 && ltNew.first.even[k] > 0) {
          coprime = false;
          break;
        }
      if (coprime) continue;
    }
    int deg = monoLcm(lti.first, ltNew.first).degree();
    queue.push_back(Pair{i, newIndex, -1, deg});
  }
  for (int v : ltNew.first.odd)
    queue.push_back(Pair{newIndex, -1, v, ltNew.first.degree() + 1});
}

std::vector<SuperPoly> interreduce(std::vector<SuperPoly> basis,
                                   const TermOrder& order, const RingPtr& ring) {
  // drop generators whose leading monomial is divisible by another's
  for (size_t i = 0; i < basis.size();) {
    bool redundant = false;
    const auto& lti = leadingTermUnder(basis[i], order);
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || basis[j].isZero()) continue;
      const auto& ltj = leadingTermUnder(basis[j], order);
      if (monoDivides(ltj.first, lti.first) &&
          !(j > i && ltj.first == lti.first)) {
        redundant = true;
        break;
      }
    }
    if (redundant)
      basis.erase(basis.begin() + i);
    else
      ++i;
  }
  // tail-reduce each against the others
  for (size_t i = 0; i < basis.size(); ++i) {
    GroebnerBasis others{ring, order, {}};
    for (size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.generators.push_back(basis[j]);
    basis[i] = normalForm(basis[i], others);
    basis[i] = basis[i].scaled(leadingTermUnder(basis[i], order).second.inverse());
  }
  std::sort(basis.begin(), basis.end(),
            [&order](const SuperPoly& a, const SuperPoly& b) {
              return order.less(leadingTermUnder(a, order).first,
                                leadingTermUnder(b, order).first);
            });
  return basis;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<SuperPoly>& gens,
                         const TermOrder& order, RingPtr ring) {
  for (const auto& g : gens) {
    requireSameRing(g.ring(), ring);
    if (!g.isZ2Homogeneous())
      throw std::invalid_argument("buchberger: inhomogeneous generator");
  }
  GroebnerBasis gb{ring, order, {}};
  std::vector<SuperPoly> basis;
  std::vector<Pair> queue;
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    basis.push_back(g);
    enqueuePairs(queue, basis, (int)basis.size() - 1, order);
  }
  while (!queue.empty()) {
    // normal (degree-first) selection
    auto it = std::min_element(queue.begin(), queue.end(),
                               [](const Pair& a, const Pair& b) {
                                 return a.lcmDegree < b.lcmDegree;
                               });
    Pair p = *it;
    queue.erase(it);
    SuperPoly s(ring);
    if (p.j >= 0) {
      s = sPoly(basis[p.i], basis[p.j], order);
    } else {
      s = SuperPoly::variable(ring, true, p.oddVar) * basis[p.i];
    }
    gb.generators = basis;
    SuperPoly r = normalForm(std::move(s), gb);
    if (!r.isZero()) {
      basis.push_back(r.scaled(leadingTermUnder(r, order).second.inverse()));
      enqueuePairs(queue, basis, (int)basis.size() - 1, order);
    }
  }
  gb.generators = interreduce(std::move(basis), order, ring);
  return gb;
}

Ideal::Ideal(RingPtr ring, std::vector<SuperPoly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const auto& g : gens_) requireSameRing(g.ring(), ring_);
  // drop zero generators
  gens_.erase(std::remove_if(gens_.begin(), gens_.end(),
                             [](const SuperPoly& f) { return f.isZero(); }),
              gens_.end());
}

Ideal Ideal::unit(RingPtr ring) {
  SuperPoly one = SuperPoly::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

const GroebnerBasis& Ideal::gb() const {
  if (!gb_) gb_ = buchberger(gens_, TermOrder::degrevlex(*ring_), ring_);
  return *gb_;
}

bool Ideal::contains(const SuperPoly& f) const {
  return normalForm(f, gb()).isZero();
}

bool Ideal::isZero() const { return gb().generators.empty(); }

bool Ideal::isUnit() const {
  const auto& g = gb().generators;
  return g.size() == 1 && g[0].degree() == 0;
}

namespace {

std::string freshVarName(const RingSpec& ring, const std::string& base) {
  std::string name = base;
  int k = 0;
  while (ring.lookup(name)) name = base + std::to_string(k++);
  return name;
}

// monomial-wise transport between rings whose variable sets are related by
// name; every variable of f must exist in the target
SuperPoly renameIntoRing(const SuperPoly& f, const RingPtr& src,
                         const RingPtr& dst) {
  SuperPoly out(dst);
  for (const auto& [m, c] : f.terms()) {
    SuperMonomial nm = SuperMonomial::unit(*dst);
    for (size_t i = 0; i < m.even.size(); ++i) {
      if (m.even[i] == 0) continue;
      auto v = dst->lookup(src->evenNames[i]);
      if (!v || v->first) throw std::invalid_argument("variable not in ring");
      nm.even[v->second] = m.even[i];
    }
    int sign = 1;
    for (int idx : m.odd) {
      auto v = dst->lookup(src->oddNames[idx]);
      if (!v || !v->first) throw std::invalid_argument("variable not in ring");
      SuperMonomial vm = SuperMonomial::unit(*dst);
      vm.odd.push_back(v->second);
      auto prod = monoMul(nm, vm);
      if (!prod) throw std::logic_error("odd collision in rename");
      sign *= prod->first;
      nm = prod->second;
    }
    Scalar nc = c;
    if (sign < 0) nc = -nc;
    out.addTerm(nm, nc);
  }
  return out;
}

}  // namespace

Ideal idealIntersect(const Ideal& I, const Ideal& J) {
  requireSameRing(I.ring(), J.ring());
  RingPtr ring = I.ring();
  if (I.generators().empty() || J.generators().empty())
    return Ideal::zero(ring);
  std::string tname = freshVarName(*ring, "t@");
  RingPtr ext = ring->withEvenVarAppended(tname);
  SuperPoly t = SuperPoly::variable(ext, tname);
  SuperPoly oneMinusT = SuperPoly::constant(ext, 1) - t;
  std::vector<SuperPoly> gens;
  for (const auto& f : I.generators())
    gens.push_back(t * renameIntoRing(f, ring, ext));
  for (const auto& g : J.generators())
    gens.push_back(oneMinusT * renameIntoRing(g, ring, ext));
  int tPos = ext->evenCount() - 1;  // concatenated position of t
  TermOrder elim = TermOrder::elimination(*ext, {tPos});
  GroebnerBasis gb = buchberger(gens, elim, ext);
  std::vector<SuperPoly> result;
  for (const auto& g : gb.generators) {
    bool usesT = false;
    for (const auto& [m, c] : g.terms())
      if (m.even[tPos] > 0) {
        usesT = true;
        break;
      }
    if (!usesT) result.push_back(renameIntoRing(g, ext, ring));
  }
  return Ideal(ring, canonicalizeGenerators(std::move(result)));
}

bool idealContains(const Ideal& I, const Ideal& J) {
  requireSameRing(I.ring(), J.ring());
  for (const auto& g : J.generators())
    if (!I.contains(g)) return false;
  return true;
}

bool idealEqual(const Ideal& I, const Ideal& J) {
  return idealContains(I, J) && idealContains(J, I);
}

Ideal eliminateVars(const Ideal& I, const std::vector<int>& positions) {
  if (positions.empty()) return I;
  TermOrder elim = TermOrder::elimination(*I.ring(), positions);
  GroebnerBasis gb = buchberger(I.generators(), elim, I.ring());
  std::set<int> elimSet(positions.begin(), positions.end());
  int evenCount = I.ring()->evenCount();
  std::vector<SuperPoly> result;
  for (const auto& g : gb.generators) {
    bool uses = false;
    for (const auto& [m, c] : g.terms()) {
      for (int pos : positions) {
        int e = pos < evenCount
                    ? m.even[pos]
                    : (std::binary_search(m.odd.begin(), m.odd.end(),
                                          pos - evenCount)
                           ? 1
                           : 0);
        if (e > 0) {
          uses = true;
          break;
        }
      }
      if (uses) break;
    }
    if (!uses) result.push_back(g);
  }
  return Ideal(I.ring(), canonicalizeGenerators(std::move(result)));
}

std::vector<SuperPoly> minimalGenerators(const Ideal& I) {
  RingPtr ring = I.ring();
  const auto& gens = I.generators();
  if (gens.empty()) return {};
  int maxDeg = 0;
  for (const auto& g : gens) {
    if (!g.isDegreeHomogeneous())
      throw std::invalid_argument("minimalGenerators: inhomogeneous ideal");
    maxDeg = std::max(maxDeg, g.degree());
  }
  std::vector<SuperPoly> minimal;
  // K-basis of the previous graded piece I_{d-1}
  std::vector<SuperPoly> prevBasis;
  for (int d = 0; d <= maxDeg; ++d) {
    SpanBasis<SuperMonomial, CanonicalMonoLess> span;
    // (variables) * I_{d-1}
    for (const auto& h : prevBasis) {
      for (int i = 0; i < ring->evenCount(); ++i)
        span.add((SuperPoly::variable(ring, false, i) * h).terms());
      for (int i = 0; i < ring->oddCount(); ++i)
        span.add((SuperPoly::variable(ring, true, i) * h).terms());
    }
    for (const auto& g : gens)
      if (g.degree() == d && span.add(g.terms())) minimal.push_back(g);
    prevBasis.clear();
    for (const auto& [pivot, row] : span.rows()) {
      SuperPoly f(ring);
      for (const auto& [m, c] : row) f.addTerm(m, c);
      prevBasis.push_back(std::move(f));
    }
    if (d == 0 && !minimal.empty()) break;  // unit ideal
  }
  return canonicalizeGenerators(std::move(minimal));
}

int idealDimensionInDegree(const Ideal& I, int d) {
  const auto& gb = I.gb();
  auto monos = monomialsOfDegree(*I.ring(), d);
  int standard = 0;
  for (const auto& m : monos) {
    bool divisible = false;
    for (const auto& g : gb.generators)
      if (monoDivides(leadingTermUnder(g, gb.order).first, m)) {
        divisible = true;
        break;
      }
    if (!divisible) ++standard;
  }
  return (int)monos.size() - standard;
}

std::vector<SuperPoly> canonicalizeGenerators(std::vector<SuperPoly> gens) {
  for (auto& g : gens)
    if (!g.isZero()) g = g.monic();
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const SuperPoly& f) { return f.isZero(); }),
             gens.end());
  std::sort(gens.begin(), gens.end(),
            [](const SuperPoly& a, const SuperPoly& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              CanonicalMonoLess less;
              auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
              for (; ia != a.terms().rend() && ib != b.terms().rend();
                   ++ia, ++ib) {
                if (less(ia->first, ib->first)) return true;
                if (less(ib->first, ia->first)) return false;
              }
              return ia == a.terms().rend() && ib != b.terms().rend();
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace superfit
