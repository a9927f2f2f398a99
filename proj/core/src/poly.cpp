#include "superfit/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace superfit {

SuperPoly SuperPoly::constant(RingPtr ring, const Scalar& c) {
  SuperPoly f(ring);
  if (!c.isZero()) f.terms_.emplace(SuperMonomial::unit(*ring), c);
  return f;
}

SuperPoly SuperPoly::constant(RingPtr ring, long c) {
  long p = ring->characteristic;
  return constant(std::move(ring), Scalar::of(c, p));
}

SuperPoly SuperPoly::variable(RingPtr ring, bool odd, int index) {
  SuperMonomial m = SuperMonomial::unit(*ring);
  if (odd)
    m.odd.push_back(index);
  else
    m.even[index] = 1;
  Scalar one = Scalar::one(ring->characteristic);
  return term(std::move(ring), std::move(m), std::move(one));
}

SuperPoly SuperPoly::variable(RingPtr ring, const std::string& name) {
  auto v = ring->lookup(name);
  if (!v) throw std::invalid_argument("unknown variable: " + name);
  return variable(std::move(ring), v->first, v->second);
}

SuperPoly SuperPoly::term(RingPtr ring, SuperMonomial m, Scalar c) {
  SuperPoly f(std::move(ring));
  if (!c.isZero()) f.terms_.emplace(std::move(m), std::move(c));
  return f;
}

int SuperPoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();  // canonical order refines degree
}

std::optional<int> SuperPoly::parity() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return std::nullopt;
  return p;
}

bool SuperPoly::isDegreeHomogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

void SuperPoly::addTerm(const SuperMonomial& m, const Scalar& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly f(ring_);
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
  return f;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  requireSameRing(ring_, o.ring_);
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  requireSameRing(ring_, o.ring_);
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

SuperPoly operator*(const SuperPoly& f, const SuperPoly& g) {
  requireSameRing(f.ring(), g.ring());
  SuperPoly h(f.ring());
  for (const auto& [ma, ca] : f.terms())
    for (const auto& [mb, cb] : g.terms()) {
      auto prod = monoMul(ma, mb);
      if (!prod) continue;
      Scalar c = ca * cb;
      if (prod->first < 0) c = -c;
      h.addTerm(prod->second, c);
    }
  return h;
}

SuperPoly SuperPoly::scaled(const Scalar& c) const {
  SuperPoly f(ring_);
  if (c.isZero()) return f;
  for (const auto& [m, coef] : terms_) f.terms_.emplace(m, coef * c);
  return f;
}

SuperPoly SuperPoly::mulMonoLeft(const SuperMonomial& m, const Scalar& c) const {
  SuperPoly f(ring_);
  if (c.isZero()) return f;
  for (const auto& [mm, coef] : terms_) {
    auto prod = monoMul(m, mm);
    if (!prod) continue;
    Scalar nc = coef * c;
    if (prod->first < 0) nc = -nc;
    f.addTerm(prod->second, nc);
  }
  return f;
}

bool SuperPoly::operator==(const SuperPoly& o) const {
  return terms_ == o.terms_;
}

const std::pair<const SuperMonomial, Scalar>& SuperPoly::leadingTerm() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return *terms_.rbegin();
}

SuperPoly SuperPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leadingTerm().second.inverse());
}

std::string SuperPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // print in descending canonical order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    first = false;
    std::vector<std::string> factors;
    for (size_t i = 0; i < m.even.size(); ++i) {
      if (m.even[i] == 0) continue;
      std::string f = ring_->evenNames[i];
      if (m.even[i] > 1) f += "^" + std::to_string(m.even[i]);
      factors.push_back(std::move(f));
    }
    for (int idx : m.odd) factors.push_back(ring_->oddNames[idx]);
    if (factors.empty()) {
      out << cs;
    } else {
      if (cs != "1") out << cs << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out << "*";
        out << factors[i];
      }
    }
  }
  return out.str();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  void skipWs() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  char peek() {
    skipWs();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skipWs();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit((unsigned char)s[pos]) || s[pos] == '/'))
      ++pos;
    if (start == pos) throw std::invalid_argument("expected number");
    return s.substr(start, pos - start);
  }
  std::string name() {
    skipWs();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) ||
                              s[pos] == '_' || s[pos] == '\''))
      ++pos;
    if (start == pos) throw std::invalid_argument("expected variable name");
    return s.substr(start, pos - start);
  }
};

}  // namespace

SuperPoly SuperPoly::parse(RingPtr ring, const std::string& text) {
  Lexer lex{text};
  long p = ring->characteristic;
  SuperPoly result(ring);
  bool firstTerm = true;
  while (true) {
    int sign = 1;
    char c = lex.peek();
    if (c == '\0') {
      if (firstTerm) throw std::invalid_argument("empty polynomial");
      break;
    }
    if (c == '+' || c == '-') {
      lex.eat(c);
      sign = c == '-' ? -1 : 1;
    } else if (!firstTerm) {
      throw std::invalid_argument("expected + or - between terms");
    }
    firstTerm = false;
    SuperPoly term = constant(ring, Scalar::of(sign, p));
    bool firstFactor = true;
    do {
      char f = lex.peek();
      if (std::isdigit((unsigned char)f)) {
        term = term * constant(ring, Scalar::parse(lex.number(), p));
      } else if (std::isalpha((unsigned char)f) || f == '_') {
        SuperPoly var = variable(ring, lex.name());
        int exp = 1;
        if (lex.eat('^')) exp = std::stoi(lex.number());
        for (int i = 0; i < exp; ++i) term = term * var;
      } else if (firstFactor) {
        throw std::invalid_argument("expected term");
      }
      firstFactor = false;
    } while (lex.eat('*'));
    result += term;
  }
  return result;
}

nlohmann::json SuperPoly::toJson() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    terms.push_back({{"coeff", it->second.str()},
                     {"even_exp", it->first.even},
                     {"odd_set", it->first.odd}});
  }
  return terms;
}

SuperPoly SuperPoly::fromJson(RingPtr ring, const nlohmann::json& j) {
  SuperPoly f(ring);
  for (const auto& t : j) {
    SuperMonomial m;
    m.even = t.at("even_exp").get<std::vector<int32_t>>();
    m.odd = t.at("odd_set").get<std::vector<int32_t>>();
    if ((int)m.even.size() != ring->evenCount())
      throw std::invalid_argument("even_exp size mismatch");
    f.addTerm(m, Scalar::parse(t.at("coeff").get<std::string>(),
                               ring->characteristic));
  }
  return f;
}

}  // namespace superfit
