#include "superfit/module.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "superfit/linalg.hpp"

#include <nlohmann/json.hpp>

namespace superfit {

nlohmann::json GradedFreeModule::toJson() const {
  return nlohmann::json{
      {"rank_even", rankEven}, {"rank_odd", rankOdd}, {"twists", twists}};
}

GradedFreeModule GradedFreeModule::fromJson(const nlohmann::json& j) {
  GradedFreeModule m;
  m.rankEven = j.at("rank_even").get<int>();
  m.rankOdd = j.at("rank_odd").get<int>();
  m.twists = j.at("twists").get<std::vector<int>>();
  if ((int)m.twists.size() != m.rank())
    throw std::invalid_argument("twists size does not match rank");
  return m;
}

GradedMatrix GradedMatrix::zero(RingPtr ring, GradedFreeModule target,
                                GradedFreeModule source) {
  GradedMatrix m;
  m.ring = std::move(ring);
  m.target = std::move(target);
  m.source = std::move(source);
  m.entries.assign(m.target.rank(),
                   std::vector<SuperPoly>(m.source.rank(),
                                          SuperPoly::zero(m.ring)));
  return m;
}

std::vector<SuperPoly> GradedMatrix::column(int s) const {
  std::vector<SuperPoly> col;
  col.reserve(entries.size());
  for (const auto& row : entries) col.push_back(row[s]);
  return col;
}

void GradedMatrix::validate() const {
  if ((int)entries.size() != target.rank())
    throw std::invalid_argument("matrix row count does not match target");
  if ((int)target.twists.size() != target.rank() ||
      (int)source.twists.size() != source.rank())
    throw std::invalid_argument("twists size does not match rank");
  for (int t = 0; t < target.rank(); ++t) {
    if ((int)entries[t].size() != source.rank())
      throw std::invalid_argument("matrix column count does not match source");
    for (int s = 0; s < source.rank(); ++s) {
      const SuperPoly& f = entries[t][s];
      if (f.isZero()) continue;
      requireSameRing(f.ring(), ring);
      if (!f.isDegreeHomogeneous() ||
          f.degree() != source.twists[s] - target.twists[t])
        throw std::invalid_argument("entry degree violates grading");
      auto par = f.parity();
      if (!par || *par != (target.parityOf(t) + source.parityOf(s)) % 2)
        throw std::invalid_argument("entry parity violates grading");
    }
  }
}

nlohmann::json GradedMatrix::toJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& f : row) r.push_back(f.str());
    rows.push_back(std::move(r));
  }
  return nlohmann::json{{"target", target.toJson()},
                        {"source", source.toJson()},
                        {"entries", std::move(rows)}};
}

GradedMatrix GradedMatrix::fromJson(RingPtr ring, const nlohmann::json& j) {
  GradedMatrix m;
  m.ring = std::move(ring);
  m.target = GradedFreeModule::fromJson(j.at("target"));
  m.source = GradedFreeModule::fromJson(j.at("source"));
  for (const auto& row : j.at("entries")) {
    std::vector<SuperPoly> r;
    for (const auto& cell : row)
      r.push_back(SuperPoly::parse(m.ring, cell.get<std::string>()));
    m.entries.push_back(std::move(r));
  }
  m.validate();
  return m;
}

bool modIsZero(const ModVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const SuperPoly& f) { return f.isZero(); });
}

ModVec modZero(const RingPtr& ring, int rank) {
  return ModVec(rank, SuperPoly::zero(ring));
}

ModVec modUnitVector(const RingPtr& ring, int rank, int pos) {
  ModVec v = modZero(ring, rank);
  v[pos] = SuperPoly::constant(ring, 1);
  return v;
}

ModVec modSub(ModVec a, const ModVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

ModVec modMulMonoLeft(const ModVec& v, const SuperMonomial& m,
                      const Scalar& c) {
  ModVec out;
  out.reserve(v.size());
  for (const auto& f : v) out.push_back(f.mulMonoLeft(m, c));
  return out;
}

int modDegree(const ModVec& v, const std::vector<int>& twists) {
  int deg = -1;
  for (size_t pos = 0; pos < v.size(); ++pos) {
    for (const auto& [m, c] : v[pos].terms()) {
      int d = m.degree() + twists[pos];
      if (deg == -1)
        deg = d;
      else if (d != deg)
        throw std::invalid_argument("module element is not homogeneous");
    }
  }
  return deg;
}

std::pair<int, std::pair<const SuperMonomial, Scalar>> modLeadingTerm(
    const ModVec& v) {
  for (size_t pos = 0; pos < v.size(); ++pos)
    if (!v[pos].isZero()) return {(int)pos, v[pos].leadingTerm()};
  throw std::invalid_argument("leading term of zero module element");
}

namespace {

Scalar signScalar(int sign, long p) { return Scalar::of(sign, p); }

// f -= (c / lc(g)) * q * g where q = key/LM(g); kills the (pos, key) term.
void modReduceStep(ModVec& f, int pos, const SuperMonomial& key,
                   const Scalar& c, const ModVec& g) {
  auto [gpos, glt] = modLeadingTerm(g);
  (void)gpos;
  SuperMonomial q = monoQuotient(key, glt.first);
  auto sm = monoMul(q, glt.first);
  long p = c.characteristic();
  Scalar factor = c / (glt.second * signScalar(sm->first, p));
  f = modSub(std::move(f), modMulMonoLeft(g, q, factor));
}

ModVec modNormalFormAgainst(ModVec f, const std::vector<ModVec>& basis,
                            int rank, const RingPtr& ring) {
  ModVec rem = modZero(ring, rank);
  while (!modIsZero(f)) {
    auto [pos, lt] = modLeadingTerm(f);
    bool reduced = false;
    for (const auto& g : basis) {
      auto [gpos, glt] = modLeadingTerm(g);
      if (gpos == pos && monoDivides(glt.first, lt.first)) {
        modReduceStep(f, pos, lt.first, lt.second, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem[pos].addTerm(lt.first, lt.second);
      f[pos] -= SuperPoly::term(ring, lt.first, lt.second);
    }
  }
  return rem;
}

struct ModPair {
  int i, j;     // j == -1: odd self-pair oddVar * element i
  int oddVar;   // only for self-pairs
  int degree;   // of the pair's lcm; used for selection
};

void enqueueModPairs(std::deque<ModPair>& queue,
                     const std::vector<ModVec>& basis, int newIndex) {
  auto [posN, ltN] = modLeadingTerm(basis[newIndex]);
  for (int i = 0; i < newIndex; ++i) {
    auto [posI, ltI] = modLeadingTerm(basis[i]);
    if (posI != posN) continue;
    queue.push_back(
        {i, newIndex, -1, monoLcm(ltI.first, ltN.first).degree()});
  }
  for (int32_t o : ltN.first.odd)
    queue.push_back({newIndex, -1, o, ltN.first.degree() + 1});
}

std::vector<ModVec> interreduceModule(std::vector<ModVec> basis, int rank,
                                      const RingPtr& ring) {
  // drop elements whose leading term another element's leading term divides
  std::vector<char> keep(basis.size(), 1);
  for (size_t i = 0; i < basis.size(); ++i) {
    auto [posI, ltI] = modLeadingTerm(basis[i]);
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      auto [posJ, ltJ] = modLeadingTerm(basis[j]);
      if (posJ != posI || !monoDivides(ltJ.first, ltI.first)) continue;
      if (ltJ.first == ltI.first && j > i) continue;  // keep the earlier one
      keep[i] = 0;
      break;
    }
  }
  std::vector<ModVec> kept;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) kept.push_back(std::move(basis[i]));
  // tail-reduce each against the others and normalize
  std::vector<ModVec> out;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<ModVec> others;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    ModVec r = modNormalFormAgainst(kept[i], others, rank, ring);
    if (modIsZero(r)) continue;
    Scalar lc = modLeadingTerm(r).second.second;
    for (auto& f : r) f = f.scaled(lc.inverse());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const ModVec& a, const ModVec& b) {
    auto [pa, la] = modLeadingTerm(a);
    auto [pb, lb] = modLeadingTerm(b);
    return ModKeyLess{}(ModKey{pa, la.first}, ModKey{pb, lb.first});
  });
  return out;
}

}  // namespace

ModuleGB moduleGroebner(RingPtr ring, int rank,
                        const std::vector<ModVec>& gens) {
  long p = ring->characteristic;
  std::vector<ModVec> basis;
  std::deque<ModPair> queue;
  auto addElement = [&](ModVec v) {
    v = modNormalFormAgainst(std::move(v), basis, rank, ring);
    if (modIsZero(v)) return;
    Scalar lc = modLeadingTerm(v).second.second;
    for (auto& f : v) f = f.scaled(lc.inverse());
    basis.push_back(std::move(v));
    enqueueModPairs(queue, basis, (int)basis.size() - 1);
  };
  for (const auto& g : gens) {
    if ((int)g.size() != rank)
      throw std::invalid_argument("module generator has wrong rank");
    for (const auto& f : g) requireSameRing(f.ring(), ring);
    if (!modIsZero(g)) addElement(g);
  }
  while (!queue.empty()) {
    auto best = std::min_element(
        queue.begin(), queue.end(),
        [](const ModPair& a, const ModPair& b) { return a.degree < b.degree; });
    ModPair pr = *best;
    queue.erase(best);
    if (pr.j == -1) {
      SuperMonomial v = SuperMonomial::unit(*ring);
      v.odd.push_back(pr.oddVar);
      addElement(modMulMonoLeft(basis[pr.i], v, Scalar::one(p)));
      continue;
    }
    auto [posI, ltI] = modLeadingTerm(basis[pr.i]);
    auto [posJ, ltJ] = modLeadingTerm(basis[pr.j]);
    SuperMonomial lcm = monoLcm(ltI.first, ltJ.first);
    SuperMonomial qi = monoQuotient(lcm, ltI.first);
    SuperMonomial qj = monoQuotient(lcm, ltJ.first);
    auto si = monoMul(qi, ltI.first);
    auto sj = monoMul(qj, ltJ.first);
    if (!si || !sj) continue;  // a quotient kills the leading monomial
    ModVec a = modMulMonoLeft(
        basis[pr.i], qi, (ltI.second * signScalar(si->first, p)).inverse());
    ModVec b = modMulMonoLeft(
        basis[pr.j], qj, (ltJ.second * signScalar(sj->first, p)).inverse());
    addElement(modSub(std::move(a), b));
  }
  ModuleGB gb;
  gb.ring = ring;
  gb.rank = rank;
  gb.elements = interreduceModule(std::move(basis), rank, ring);
  return gb;
}

ModVec moduleNormalForm(ModVec v, const ModuleGB& gb) {
  if ((int)v.size() != gb.rank)
    throw std::invalid_argument("module element has wrong rank");
  return modNormalFormAgainst(std::move(v), gb.elements, gb.rank, gb.ring);
}

std::vector<ModVec> syzygies(RingPtr ring, int rank,
                             const std::vector<ModVec>& gens) {
  int k = (int)gens.size();
  std::vector<ModVec> augmented;
  augmented.reserve(k);
  for (int i = 0; i < k; ++i) {
    ModVec a = modZero(ring, rank + k);
    for (int t = 0; t < rank; ++t) a[t] = gens[i][t];
    a[rank + i] = SuperPoly::constant(ring, 1);
    augmented.push_back(std::move(a));
  }
  ModuleGB gb = moduleGroebner(ring, rank + k, augmented);
  std::vector<ModVec> syz;
  for (const auto& e : gb.elements) {
    bool trailing = true;
    for (int t = 0; t < rank; ++t)
      if (!e[t].isZero()) {
        trailing = false;
        break;
      }
    if (!trailing) continue;
    syz.emplace_back(e.begin() + rank, e.end());
  }
  return syz;
}

Ideal annihilator(const GradedMatrix& phi) {
  phi.validate();
  int r = phi.target.rank();
  if (r == 0) return Ideal::unit(phi.ring);
  std::optional<Ideal> ann;
  for (int k = 0; k < r; ++k) {
    std::vector<ModVec> gens;
    gens.push_back(modUnitVector(phi.ring, r, k));
    for (int s = 0; s < phi.source.rank(); ++s)
      gens.push_back(phi.column(s));
    std::vector<SuperPoly> colonGens;
    for (const auto& syz : syzygies(phi.ring, r, gens))
      if (!syz[0].isZero()) colonGens.push_back(syz[0]);
    Ideal colon(phi.ring, canonicalizeGenerators(std::move(colonGens)));
    ann = ann ? idealIntersect(*ann, colon) : std::move(colon);
  }
  return *ann;
}

int annihilatorOracleDimension(const GradedMatrix& phi, int d) {
  phi.validate();
  const RingPtr& ring = phi.ring;
  long p = ring->characteristic;
  int r = phi.target.rank();
  auto mons = monomialsOfDegree(*ring, d);
  if (r == 0) return (int)mons.size();
  if (mons.empty()) return 0;
  using Span = SpanBasis<ModKey, ModKeyLess>;
  // Degree slice of im(phi) depends on k only through the module degree
  // d + twist(k); cache the spans by that degree.
  std::map<int, Span> spans;
  auto sliceSpan = [&](int moduleDegree) -> const Span& {
    auto it = spans.find(moduleDegree);
    if (it != spans.end()) return it->second;
    Span span;
    for (int s = 0; s < phi.source.rank(); ++s) {
      int dm = moduleDegree - phi.source.twists[s];
      if (dm < 0) continue;
      for (const auto& m : monomialsOfDegree(*ring, dm)) {
        Span::Vec vec;
        for (int t = 0; t < r; ++t) {
          SuperPoly f = phi.at(t, s).mulMonoLeft(m, Scalar::one(p));
          for (const auto& [mono, c] : f.terms())
            vec.emplace(ModKey{t, mono}, c);
        }
        span.add(std::move(vec));
      }
    }
    return spans.emplace(moduleDegree, std::move(span)).first->second;
  };
  // Columns: candidate degree-d monomials. Rows: residual keys of
  // mon * e_k modulo the image slice, stacked over k. The annihilator piece
  // is the kernel of this constraint matrix.
  struct RowKeyLess {
    bool operator()(const std::pair<int, ModKey>& a,
                    const std::pair<int, ModKey>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return ModKeyLess{}(a.second, b.second);
    }
  };
  std::map<std::pair<int, ModKey>, int, RowKeyLess> rowIndex;
  std::vector<std::map<std::pair<int, ModKey>, Scalar, RowKeyLess>> columns(
      mons.size());
  for (size_t c = 0; c < mons.size(); ++c) {
    for (int k = 0; k < r; ++k) {
      const Span& span = sliceSpan(d + phi.target.twists[k]);
      Span::Vec v;
      v.emplace(ModKey{k, mons[c]}, Scalar::one(p));
      for (const auto& [key, coeff] : span.reduce(std::move(v))) {
        auto rk = std::make_pair(k, key);
        rowIndex.emplace(rk, (int)rowIndex.size());
        columns[c].emplace(std::move(rk), coeff);
      }
    }
  }
  DenseMatrix mat((int)rowIndex.size(), (int)mons.size(), p);
  for (size_t c = 0; c < mons.size(); ++c)
    for (const auto& [rk, coeff] : columns[c])
      mat.at(rowIndex.at(rk), (int)c) = coeff;
  return (int)mons.size() - mat.rank();
}

long freeModuleDimensionInDegree(const RingPtr& ring,
                                 const GradedFreeModule& mod, int j) {
  long dim = 0;
  for (int t = 0; t < mod.rank(); ++t)
    dim += (long)monomialsOfDegree(*ring, j - mod.twists[t]).size();
  return dim;
}

long matrixRankInDegree(const GradedMatrix& phi, int j) {
  const RingPtr& ring = phi.ring;
  long p = ring->characteristic;
  struct RowKeyLess {
    bool operator()(const ModKey& a, const ModKey& b) const {
      return ModKeyLess{}(a, b);
    }
  };
  std::vector<std::map<ModKey, Scalar, RowKeyLess>> cols;
  for (int s = 0; s < phi.source.rank(); ++s) {
    for (const auto& m : monomialsOfDegree(*ring, j - phi.source.twists[s])) {
      std::map<ModKey, Scalar, RowKeyLess> col;
      for (int t = 0; t < phi.target.rank(); ++t) {
        SuperPoly f = phi.at(t, s).mulMonoLeft(m, Scalar::one(p));
        for (const auto& [mono, c] : f.terms()) col.emplace(ModKey{t, mono}, c);
      }
      if (!col.empty()) cols.push_back(std::move(col));
    }
  }
  std::map<ModKey, int, RowKeyLess> rowIndex;
  for (const auto& col : cols)
    for (const auto& [key, c] : col) rowIndex.emplace(key, (int)rowIndex.size());
  DenseMatrix mat((int)rowIndex.size(), (int)cols.size(), p);
  for (size_t s = 0; s < cols.size(); ++s)
    for (const auto& [key, c] : cols[s]) mat.at(rowIndex.at(key), (int)s) = c;
  return mat.rank();
}

long cokerDimensionInDegree(const GradedMatrix& phi, int j) {
  return freeModuleDimensionInDegree(phi.ring, phi.target, j) -
         matrixRankInDegree(phi, j);
}

ModVec applyMatrix(const GradedMatrix& phi, const ModVec& v) {
  if ((int)v.size() != phi.source.rank())
    throw std::invalid_argument("applyMatrix rank mismatch");
  ModVec out = modZero(phi.ring, phi.target.rank());
  for (int s = 0; s < phi.source.rank(); ++s) {
    if (v[s].isZero()) continue;
    for (int t = 0; t < phi.target.rank(); ++t) out[t] += v[s] * phi.at(t, s);
  }
  return out;
}

GradedMatrix minimalize(GradedMatrix phi) {
  phi.validate();
  for (;;) {
    int ut = -1, us = -1;
    for (int t = 0; t < phi.target.rank() && ut < 0; ++t)
      for (int s = 0; s < phi.source.rank(); ++s)
        if (!phi.at(t, s).isZero() && phi.at(t, s).degree() == 0) {
          ut = t;
          us = s;
          break;
        }
    if (ut < 0) return phi;
    Scalar cinv = phi.at(ut, us).terms().begin()->second.inverse();
    for (int j = 0; j < phi.source.rank(); ++j) {
      if (j == us || phi.at(ut, j).isZero()) continue;
      SuperPoly g = phi.at(ut, j).scaled(cinv);
      for (int t = 0; t < phi.target.rank(); ++t)
        phi.at(t, j) -= g * phi.at(t, us);
    }
    // Row ut is now zero away from column us; drop the pivot row and column.
    phi.entries.erase(phi.entries.begin() + ut);
    for (auto& row : phi.entries) row.erase(row.begin() + us);
    if (ut < phi.target.rankEven)
      --phi.target.rankEven;
    else
      --phi.target.rankOdd;
    phi.target.twists.erase(phi.target.twists.begin() + ut);
    if (us < phi.source.rankEven)
      --phi.source.rankEven;
    else
      --phi.source.rankOdd;
    phi.source.twists.erase(phi.source.twists.begin() + us);
  }
}

std::vector<int> minimalGeneratorIndices(const RingPtr& ring,
                                         const std::vector<int>& twists,
                                         const std::vector<ModVec>& gens) {
  using Span = SpanBasis<ModKey, ModKeyLess>;
  auto toVec = [](const ModVec& v) {
    Span::Vec out;
    for (size_t pos = 0; pos < v.size(); ++pos)
      for (const auto& [m, c] : v[pos].terms())
        out.emplace(ModKey{(int)pos, m}, c);
    return out;
  };
  int dmin = 0, dmax = -1;
  std::map<int, std::vector<int>> byDegree;
  for (size_t i = 0; i < gens.size(); ++i) {
    int d = modDegree(gens[i], twists);
    if (d < 0) continue;
    byDegree[d].push_back((int)i);
  }
  if (byDegree.empty()) return {};
  dmin = byDegree.begin()->first;
  dmax = byDegree.rbegin()->first;
  std::vector<int> minimal;
  std::vector<ModVec> prevBasis;
  for (int d = dmin; d <= dmax; ++d) {
    Span span;
    for (const auto& b : prevBasis) {
      for (int i = 0; i < ring->evenCount(); ++i) {
        SuperMonomial v = SuperMonomial::unit(*ring);
        v.even[i] = 1;
        span.add(toVec(modMulMonoLeft(b, v, Scalar::one(ring->characteristic))));
      }
      for (int i = 0; i < ring->oddCount(); ++i) {
        SuperMonomial v = SuperMonomial::unit(*ring);
        v.odd.push_back(i);
        span.add(toVec(modMulMonoLeft(b, v, Scalar::one(ring->characteristic))));
      }
    }
    auto it = byDegree.find(d);
    if (it != byDegree.end())
      for (int idx : it->second)
        if (span.add(toVec(gens[idx]))) minimal.push_back(idx);
    prevBasis.clear();
    size_t rank = twists.size();
    for (const auto& [pivot, row] : span.rows()) {
      ModVec v = modZero(ring, (int)rank);
      for (const auto& [key, c] : row) v[key.pos].addTerm(key.mono, c);
      prevBasis.push_back(std::move(v));
    }
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

Ideal idealColon(const Ideal& I, const SuperPoly& f) {
  requireSameRing(I.ring(), f.ring());
  if (f.isZero()) return Ideal::unit(I.ring());
  std::vector<ModVec> gens;
  gens.push_back({f});
  for (const auto& g : I.generators()) gens.push_back({g});
  std::vector<SuperPoly> out;
  for (const auto& syz : syzygies(I.ring(), 1, gens))
    if (!syz[0].isZero()) out.push_back(syz[0]);
  return Ideal(I.ring(), canonicalizeGenerators(std::move(out)));
}

}  // namespace superfit
