#include "superfit/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace superfit {

std::pair<long, long> BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? std::pair<long, long>{0, 0} : it->second;
}

void BettiTable::add(int i, int j, long evenRank, long oddRank) {
  if (evenRank == 0 && oddRank == 0) return;
  auto& cell = entries[{i, j}];
  cell.first += evenRank;
  cell.second += oddRank;
}

std::string BettiTable::text() const {
  int jLo = 0, jHi = 0;
  for (const auto& [key, cell] : entries) {
    jLo = std::min(jLo, key.second);
    jHi = std::max(jHi, key.second);
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"j\\i"};
  for (int i = 0; i <= iMax; ++i) head.push_back(std::to_string(i));
  grid.push_back(head);
  for (int j = jLo; j <= jHi; ++j) {
    std::vector<std::string> row{std::to_string(j)};
    for (int i = 0; i <= iMax; ++i) {
      auto [ev, od] = at(i, j);
      row.push_back(ev == 0 && od == 0
                        ? "."
                        : std::to_string(ev) + "|" + std::to_string(od));
    }
    grid.push_back(row);
  }
  std::vector<size_t> width(grid[0].size(), 0);
  for (const auto& row : grid)
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : grid) {
    for (size_t c = 0; c < row.size(); ++c) {
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
      out << (c + 1 == row.size() ? "\n" : "  ");
    }
  }
  if (truncated) out << "(truncated at degree " << jMax << ")\n";
  return out.str();
}

nlohmann::json BettiTable::toJson() const {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [key, cell] : entries)
    cells.push_back({{"i", key.first},
                     {"j", key.second},
                     {"even", cell.first},
                     {"odd", cell.second}});
  return nlohmann::json{{"i_max", iMax},
                        {"j_max", jMax},
                        {"truncated", truncated},
                        {"entries", std::move(cells)}};
}

namespace {

int elementParity(const ModVec& v, const GradedFreeModule& ambient) {
  for (size_t pos = 0; pos < v.size(); ++pos)
    if (!v[pos].isZero()) {
      auto par = v[pos].parity();
      if (!par) throw std::invalid_argument("mixed-parity syzygy");
      return (*par + ambient.parityOf((int)pos)) % 2;
    }
  return 0;
}

void recordModule(BettiTable& table, int i, const GradedFreeModule& mod) {
  for (int t = 0; t < mod.rank(); ++t)
    table.add(i, mod.twists[t], mod.parityOf(t) ? 0 : 1,
              mod.parityOf(t) ? 1 : 0);
}

}  // namespace

Resolution resolveComplex(const GradedMatrix& phi, int iMax, int jMax) {
  Resolution res;
  res.betti.iMax = iMax;
  res.betti.jMax = jMax;
  GradedMatrix cur = minimalize(phi);
  recordModule(res.betti, 0, cur.target);
  if (iMax >= 1) recordModule(res.betti, 1, cur.source);
  res.differentials.push_back(cur);
  for (int i = 2; i <= iMax; ++i) {
    std::vector<ModVec> cols;
    for (int s = 0; s < cur.source.rank(); ++s) cols.push_back(cur.column(s));
    std::vector<ModVec> syz =
        syzygies(cur.ring, cur.target.rank(), cols);
    std::vector<int> chosen =
        minimalGeneratorIndices(cur.ring, cur.source.twists, syz);
    struct Gen {
      ModVec v;
      int degree;
      int parity;
    };
    std::vector<Gen> gens;
    for (int idx : chosen) {
      int deg = modDegree(syz[idx], cur.source.twists);
      if (deg > jMax) {
        res.betti.truncated = true;
        continue;
      }
      gens.push_back({syz[idx], deg, elementParity(syz[idx], cur.source)});
    }
    if (gens.empty()) break;
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Gen& a, const Gen& b) {
                       if (a.parity != b.parity) return a.parity < b.parity;
                       return a.degree < b.degree;
                     });
    GradedFreeModule next;
    for (const auto& g : gens) {
      (g.parity ? next.rankOdd : next.rankEven) += 1;
      next.twists.push_back(g.degree);
    }
    GradedMatrix di = GradedMatrix::zero(cur.ring, cur.source, next);
    for (size_t s = 0; s < gens.size(); ++s)
      for (int t = 0; t < cur.source.rank(); ++t)
        di.at(t, (int)s) = gens[s].v[t];
    di.validate();
    recordModule(res.betti, i, next);
    res.differentials.push_back(di);
    cur = di;
  }
  return res;
}

BettiTable resolve(const GradedMatrix& phi, int iMax, int jMax) {
  return resolveComplex(phi, iMax, jMax).betti;
}

namespace {

long binom(long nn, long kk) {
  if (kk < 0 || kk > nn) return 0;
  long r = 1;
  for (long i = 0; i < kk; ++i) r = r * (nn - i) / (i + 1);
  return r;
}

// Strip trailing zeros; nullopt if the parts are not weakly decreasing.
std::optional<Partition> asPartition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return std::nullopt;
    if (i > 0 && parts[i] > parts[i - 1]) return std::nullopt;
  }
  return parts;
}

std::vector<int> conjectureShape(int d, int e, const Partition& first,
                                 int middle, const Partition& second) {
  std::vector<int> parts;
  for (int k = 0; k < e; ++k)
    parts.push_back(d + 1 + (k < (int)first.size() ? first[k] : 0));
  parts.push_back(middle);
  Partition conj = conjugate(second);
  parts.insert(parts.end(), conj.begin(), conj.end());
  return parts;
}

}  // namespace

ConjecturePrediction predictConjecture41(int d, int e, int m, int n,
                                         int iMax) {
  ConjecturePrediction pred;
  pred.table.iMax = iMax;
  pred.provenance = nlohmann::json::array();
  pred.table.add(0, 0, d, e);
  if (iMax >= 1) pred.table.add(1, 1, m, n);
  int L = partitionWeight(lambdaDE(d, e));
  pred.table.jMax = iMax - 1 + L;
  for (int i = 2; i <= iMax; ++i) {
    int j = i - 1 + L;
    if (e == 0) {
      // the conjecture's shapes degenerate at e = 0; the resolution is the
      // classical Buchsbaum-Rim complex
      long rank = binom(m, d + i - 1) * binom(d + i - 3, i - 2);
      pred.table.add(i, j, rank, 0);
      pred.provenance.push_back(
          {{"i", i}, {"rule", "buchsbaum-rim"}, {"rank", rank}});
      continue;
    }
    for (int wa = 0; wa <= i - 2; ++wa)
      for (const auto& alpha : partitionsOf(wa, e))
        for (const auto& beta : partitionsOf(i - 2 - wa, e)) {
          auto lamShape = conjectureShape(d, e, beta, e, alpha);
          auto thetaShape = conjectureShape(d, e, alpha, e + 1, beta);
          auto lam = asPartition(lamShape);
          auto theta = asPartition(thetaShape);
          nlohmann::json rec{{"i", i},
                             {"alpha", alpha},
                             {"beta", beta},
                             {"theta_shape", thetaShape},
                             {"lambda_shape", lamShape}};
          if (!lam || !theta) {
            rec["excluded"] = "non-partition shape";
            pred.provenance.push_back(std::move(rec));
            continue;
          }
          auto [evV, odV] = hookSchurDimByParity(*theta, m, n);
          auto [evU, odU] = hookSchurDimByParity(*lam, d, e);
          long evenRank = evV * evU + odV * odU;
          long oddRank = evV * odU + odV * evU;
          rec["dim_theta_V"] = evV + odV;
          rec["dim_lambda_U"] = evU + odU;
          pred.provenance.push_back(std::move(rec));
          pred.table.add(i, j, evenRank, oddRank);
        }
  }
  return pred;
}

nlohmann::json compareBetti(const BettiTable& actual,
                            const BettiTable& predicted) {
  int iMax = std::min(actual.iMax, predicted.iMax);
  int jMax = std::min(actual.jMax, predicted.jMax);
  nlohmann::json diffs = nlohmann::json::array();
  nlohmann::json perDegree = nlohmann::json::array();
  bool allTotals = true, allParities = true;
  for (int i = 0; i <= iMax; ++i) {
    bool totals = true, parities = true;
    for (int j = 0; j <= jMax; ++j) {
      auto [ae, ao] = actual.at(i, j);
      auto [pe, po] = predicted.at(i, j);
      if (ae == pe && ao == po) continue;
      parities = false;
      if (ae + ao != pe + po) totals = false;
      diffs.push_back({{"i", i},
                       {"j", j},
                       {"actual", {ae, ao}},
                       {"predicted", {pe, po}}});
    }
    perDegree.push_back({{"i", i},
                         {"totals_match", totals},
                         {"parities_match", parities}});
    allTotals = allTotals && totals;
    allParities = allParities && parities;
  }
  return nlohmann::json{{"i_max", iMax},
                        {"j_max", jMax},
                        {"totals_match", allTotals},
                        {"parities_match", allParities},
                        {"per_degree", perDegree},
                        {"diffs", diffs}};
}

}  // namespace superfit
