#include "superfit/ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superfit {

RingPtr RingSpec::make(std::vector<std::string> even,
                       std::vector<std::string> odd, long characteristic) {
  auto spec = std::make_shared<RingSpec>();
  spec->evenNames = std::move(even);
  spec->oddNames = std::move(odd);
  spec->characteristic = characteristic;
  for (int i = 0; i < spec->evenCount(); ++i)
    if (!spec->index_.emplace(spec->evenNames[i], std::make_pair(false, i))
             .second)
      throw std::invalid_argument("duplicate variable name");
  for (int i = 0; i < spec->oddCount(); ++i)
    if (!spec->index_.emplace(spec->oddNames[i], std::make_pair(true, i))
             .second)
      throw std::invalid_argument("duplicate variable name");
  return spec;
}

std::optional<std::pair<bool, int>> RingSpec::lookup(
    const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RingPtr RingSpec::withEvenVarAppended(const std::string& name) const {
  auto even = evenNames;
  even.push_back(name);
  return make(std::move(even), oddNames, characteristic);
}

bool RingSpec::sameAs(const RingSpec& o) const {
  return characteristic == o.characteristic && evenNames == o.evenNames &&
         oddNames == o.oddNames;
}

int SuperMonomial::degree() const {
  return std::accumulate(even.begin(), even.end(), 0) + (int)odd.size();
}

bool SuperMonomial::isUnit() const {
  if (!odd.empty()) return false;
  return std::all_of(even.begin(), even.end(), [](int e) { return e == 0; });
}

std::optional<std::pair<int, SuperMonomial>> monoMul(const SuperMonomial& a,
                                                     const SuperMonomial& b) {
  SuperMonomial p;
  p.even.resize(a.even.size());
  for (size_t i = 0; i < a.even.size(); ++i) p.even[i] = a.even[i] + b.even[i];
  // Merge odd sets; each element of b crossing a later element of a costs
  // one transposition. A shared index kills the product.
  p.odd.reserve(a.odd.size() + b.odd.size());
  size_t i = 0, j = 0;
  long crossings = 0;
  while (i < a.odd.size() && j < b.odd.size()) {
    if (a.odd[i] == b.odd[j]) return std::nullopt;
    if (a.odd[i] < b.odd[j]) {
      p.odd.push_back(a.odd[i++]);
    } else {
      crossings += (long)(a.odd.size() - i);
      p.odd.push_back(b.odd[j++]);
    }
  }
  while (i < a.odd.size()) p.odd.push_back(a.odd[i++]);
  while (j < b.odd.size()) p.odd.push_back(b.odd[j++]);
  return std::make_pair(crossings % 2 == 0 ? 1 : -1, std::move(p));
}

bool monoDivides(const SuperMonomial& d, const SuperMonomial& m) {
  for (size_t i = 0; i < d.even.size(); ++i)
    if (d.even[i] > m.even[i]) return false;
  return std::includes(m.odd.begin(), m.odd.end(), d.odd.begin(),
                       d.odd.end());
}

SuperMonomial monoQuotient(const SuperMonomial& m, const SuperMonomial& d) {
  SuperMonomial q;
  q.even.resize(m.even.size());
  for (size_t i = 0; i < m.even.size(); ++i) q.even[i] = m.even[i] - d.even[i];
  std::set_difference(m.odd.begin(), m.odd.end(), d.odd.begin(), d.odd.end(),
                      std::back_inserter(q.odd));
  return q;
}

SuperMonomial monoLcm(const SuperMonomial& a, const SuperMonomial& b) {
  SuperMonomial l;
  l.even.resize(a.even.size());
  for (size_t i = 0; i < a.even.size(); ++i)
    l.even[i] = std::max(a.even[i], b.even[i]);
  std::set_union(a.odd.begin(), a.odd.end(), b.odd.begin(), b.odd.end(),
                 std::back_inserter(l.odd));
  return l;
}

namespace {

inline int exponentAt(const SuperMonomial& m, int pos, int evenCount) {
  if (pos < evenCount) return m.even[pos];
  return std::binary_search(m.odd.begin(), m.odd.end(), pos - evenCount) ? 1
                                                                         : 0;
}

// degrevlex within one block of concatenated positions
int compareBlock(const SuperMonomial& a, const SuperMonomial& b,
                 const std::vector<int>& block, int evenCount) {
  int da = 0, db = 0;
  for (int pos : block) {
    da += exponentAt(a, pos, evenCount);
    db += exponentAt(b, pos, evenCount);
  }
  if (da != db) return da < db ? -1 : 1;
  for (auto it = block.rbegin(); it != block.rend(); ++it) {
    int ea = exponentAt(a, *it, evenCount);
    int eb = exponentAt(b, *it, evenCount);
    if (ea != eb) return ea > eb ? -1 : 1;  // smaller trailing exp is greater
  }
  return 0;
}

}  // namespace

TermOrder TermOrder::degrevlex(const RingSpec& ring) {
  TermOrder o;
  o.evenCount_ = ring.evenCount();
  std::vector<int> all(ring.varCount());
  std::iota(all.begin(), all.end(), 0);
  o.blocks_.push_back(std::move(all));
  return o;
}

TermOrder TermOrder::elimination(const RingSpec& ring,
                                 const std::vector<int>& eliminated) {
  TermOrder o;
  o.evenCount_ = ring.evenCount();
  std::vector<char> inFirst(ring.varCount(), 0);
  for (int pos : eliminated) inFirst.at(pos) = 1;
  std::vector<int> first, rest;
  for (int pos = 0; pos < ring.varCount(); ++pos)
    (inFirst[pos] ? first : rest).push_back(pos);
  o.blocks_.push_back(std::move(first));
  o.blocks_.push_back(std::move(rest));
  return o;
}

int TermOrder::compare(const SuperMonomial& a, const SuperMonomial& b) const {
  for (const auto& block : blocks_) {
    int c = compareBlock(a, b, block, evenCount_);
    if (c != 0) return c;
  }
  return 0;
}

bool CanonicalMonoLess::operator()(const SuperMonomial& a,
                                   const SuperMonomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Scan the concatenated exponent vector from the last position backwards
  // (odd block in reverse, then even block in reverse); at the first
  // difference the monomial with the larger exponent is the smaller one.
  {
    auto ia = a.odd.rbegin(), ib = b.odd.rbegin();
    while (ia != a.odd.rend() && ib != b.odd.rend()) {
      if (*ia != *ib) {
        // The one still holding the larger (later) index has a nonzero
        // exponent at a later position, so it is smaller in revlex.
        return *ia > *ib;
      }
      ++ia;
      ++ib;
    }
    if (ia != a.odd.rend()) return true;   // a has extra later odd factor
    if (ib != b.odd.rend()) return false;
  }
  for (size_t i = a.even.size(); i-- > 0;) {
    if (a.even[i] != b.even[i]) return a.even[i] > b.even[i];
  }
  return false;
}

namespace {

void enumerateEven(const RingSpec& ring, int pos, int remaining,
                   SuperMonomial& cur, std::vector<SuperMonomial>& out) {
  if (pos == ring.evenCount()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.even[pos] = e;
    enumerateEven(ring, pos + 1, remaining - e, cur, out);
  }
  cur.even[pos] = 0;
}

void enumerateOdd(const RingSpec& ring, int from, int remaining, int evenDeg,
                  SuperMonomial& cur, std::vector<SuperMonomial>& out) {
  if (remaining == 0) {
    enumerateEven(ring, 0, evenDeg, cur, out);
    return;
  }
  for (int i = from; i <= ring.oddCount() - remaining; ++i) {
    cur.odd.push_back(i);
    enumerateOdd(ring, i + 1, remaining - 1, evenDeg, cur, out);
    cur.odd.pop_back();
  }
}

}  // namespace

std::vector<SuperMonomial> monomialsOfDegree(const RingSpec& ring, int d) {
  std::vector<SuperMonomial> out;
  if (d < 0) return out;
  if (ring.evenCount() == 0 && d > ring.oddCount()) return out;
  SuperMonomial cur = SuperMonomial::unit(ring);
  for (int oddCount = 0; oddCount <= std::min(d, ring.oddCount());
       ++oddCount) {
    if (ring.evenCount() == 0 && oddCount != d) continue;
    enumerateOdd(ring, 0, oddCount, d - oddCount, cur, out);
  }
  std::sort(out.begin(), out.end(), CanonicalMonoLess{});
  return out;
}

}  // namespace superfit
