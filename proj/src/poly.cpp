#include "higauge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace higauge {

int Poly::Mono::total_degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

Poly Poly::constant(Rat c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(Mono{}, std::move(c));
  return p;
}

Poly Poly::var(int coord) {
  if (coord < 0 || coord >= kMaxCoord) throw std::runtime_error("coordinate index out of range");
  Mono m;
  m.e[coord] = 1;
  return monomial(m, Rat(1));
}

Poly Poly::param_t() {
  Mono m;
  m.e[kT] = 1;
  return monomial(m, Rat(1));
}

Poly Poly::param_s() {
  Mono m;
  m.e[kS] = 1;
  return monomial(m, Rat(1));
}

Poly Poly::monomial(Mono m, Rat c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Mono{});
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::runtime_error("polynomial is not constant");
  return terms_[0].second;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[var]));
  return d;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t w = 0;
  for (size_t i = 0; i < terms_.size();) {
    Mono m = terms_[i].first;
    Rat c = std::move(terms_[i].second);
    for (++i; i < terms_.size() && terms_[i].first == m; ++i) c += terms_[i].second;
    if (c != 0) terms_[w++] = {m, std::move(c)};
  }
  terms_.resize(w);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly();
  std::map<Poly::Mono, Rat> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Mono m;
      for (int v = 0; v < Poly::kMaxVars; ++v) {
        int e = ma.e[v] + mb.e[v];
        if (e > 255) throw std::runtime_error("monomial exponent overflow");
        m.e[v] = static_cast<uint8_t>(e);
      }
      auto it = acc.find(m);
      if (it == acc.end()) acc.emplace(m, ca * cb);
      else it->second += ca * cb;
    }
  }
  Poly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& [m, co] : r.terms_) co *= c;
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Mono n = m;
    n.e[var] -= 1;
    r.terms_.emplace_back(n, c * static_cast<long>(m.e[var]));
  }
  r.normalize();
  return r;
}

Poly Poly::integrate01(int param) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    long k = n.e[param];
    n.e[param] = 0;
    r.terms_.emplace_back(n, c / Rat(k + 1));
  }
  r.normalize();
  return r;
}

Poly Poly::substituted(int var, const Rat& value) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    int k = n.e[var];
    n.e[var] = 0;
    Rat f = c;
    for (int i = 0; i < k; ++i) f *= value;
    if (f != 0) r.terms_.emplace_back(n, std::move(f));
  }
  r.normalize();
  return r;
}

Rat Poly::eval(std::span<const Rat> point) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    if (m.e[kT] || m.e[kS]) throw std::runtime_error("eval: homotopy parameter not eliminated");
    Rat v = c;
    for (int i = 0; i < kMaxCoord; ++i) {
      if (m.e[i] == 0) continue;
      if (i >= static_cast<int>(point.size()))
        throw std::runtime_error("eval: point dimension too small");
      for (int k = 0; k < m.e[i]; ++k) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

double Poly::max_coeff_abs() const {
  double m = 0.0;
  for (const auto& [mo, c] : terms_) m = std::max(m, std::fabs(to_double(c)));
  return m;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string factors;
    for (int v = 0; v < kMaxVars; ++v) {
      if (!m.e[v]) continue;
      if (!factors.empty()) factors += "*";
      if (v == kT) factors += "t";
      else if (v == kS) factors += "s";
      else factors += "x" + std::to_string(v + 1);
      if (m.e[v] > 1) factors += "^" + std::to_string(static_cast<int>(m.e[v]));
    }
    if (factors.empty()) os << to_string(a);
    else if (a == 1) os << factors;
    else os << to_string(a) << "*" << factors;
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }

  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("polynomial parse error at position " + std::to_string(i) + ": " + what);
  }

  Poly expr() {
    Poly r = eat('-') ? -term() : term();
    for (;;) {
      skip();
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }

  Poly term() {
    Poly r = factor();
    while (eat('*')) r *= factor();
    return r;
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) fail("exponent expected");
      int e = std::stoi(s.substr(i, j - i));
      i = j;
      Poly r = Poly::constant(Rat(1));
      for (int k = 0; k < e; ++k) r *= base;
      return r;
    }
    return base;
  }

  Poly atom() {
    skip();
    if (i >= s.size()) fail("unexpected end");
    if (eat('(')) {
      Poly r = expr();
      if (!eat(')')) fail("')' expected");
      return r;
    }
    if (eat('-')) return -atom();
    char c = s[i];
    if (c == 't' && !next_is_digit()) { ++i; return Poly::param_t(); }
    if (c == 's' && !next_is_digit()) { ++i; return Poly::param_s(); }
    if (c == 'x') {
      ++i;
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) fail("coordinate index expected after 'x'");
      int k = std::stoi(s.substr(i, j - i));
      i = j;
      if (k < 1 || k > Poly::kMaxCoord) fail("coordinate index out of range");
      return Poly::var(k - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      std::string num = s.substr(i, j - i);
      i = j;
      if (eat('/')) {
        skip();
        size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) fail("denominator expected");
        num += "/" + s.substr(i, k - i);
        i = k;
      }
      return Poly::constant(parse_rat(num));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  bool next_is_digit() const {
    return i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]));
  }
};

}  // namespace

Poly Poly::parse(const std::string& text) {
  Parser p(text);
  Poly r = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace higauge
