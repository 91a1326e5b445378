#include "twistkit/symbolic/polynomial.hpp"

#include <algorithm>

#include "twistkit/symbolic/error.hpp"
#include "twistkit/symbolic/expression.hpp"

namespace twistkit {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(const Atom& a, unsigned exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(a, exponent);
    m.degree_ = exponent;
  }
  return m;
}

unsigned Monomial::degree_in(const Atom& a) const {
  for (const auto& [atom, e] : factors_) {
    auto c = atom <=> a;
    if (c == 0) return e;
    if (c > 0) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.is_one()) return *this;
  if (is_one()) return other;
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    auto c = i->first <=> j->first;
    if (c < 0) {
      out.factors_.push_back(*i++);
    } else if (c > 0) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, factors_.end());
  out.factors_.insert(out.factors_.end(), j, other.factors_.end());
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto j = other.factors_.begin();
  for (const auto& [atom, e] : factors_) {
    while (j != other.factors_.end() && j->first < atom) ++j;
    if (j == other.factors_.end() || !(j->first == atom) || j->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  auto i = factors_.begin();
  for (const auto& [atom, e] : other.factors_) {
    while (i != factors_.end() && i->first < atom) ++i;
    unsigned sub = (i != factors_.end() && i->first == atom) ? i->second : 0;
    if (e > sub) out.factors_.emplace_back(atom, e - sub);
  }
  out.degree_ = other.degree_ - degree_;
  return out;
}

Monomial Monomial::without(const Atom& a) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first == a) continue;
    out.factors_.push_back(f);
    out.degree_ += f.second;
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto j = b.factors_.begin();
  for (const auto& [atom, e] : a.factors_) {
    while (j != b.factors_.end() && j->first < atom) ++j;
    if (j != b.factors_.end() && j->first == atom) {
      unsigned m = std::min(e, j->second);
      out.factors_.emplace_back(atom, m);
      out.degree_ += m;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    auto c = i->first <=> j->first;
    if (c < 0) return std::strong_ordering::greater;
    if (c > 0) return std::strong_ordering::less;
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  if (i != a.factors_.end()) return std::strong_ordering::greater;
  if (j != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.push_back({Monomial(), Rational(value)});
}

Polynomial::Polynomial(const Rational& value) {
  if (value != 0) terms_.push_back({Monomial(), value});
}

Polynomial::Polynomial(const Atom& a) { terms_.push_back({Monomial::of(a), Rational(1)}); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.push_back({m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return (a.mono <=> b.mono) > 0; });
  Polynomial out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coef += t.coef;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coef == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coef == 0) out.terms_.pop_back();
  return out;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "polynomial is not constant");
  return terms_.front().coef;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Polynomial::degree_in(const Atom& a) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(a));
  return d;
}

std::set<Atom> Polynomial::atoms() const {
  std::set<Atom> out;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) out.insert(f.first);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

namespace {

template <bool Subtract>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    auto c = i->mono <=> j->mono;
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({j->mono, Subtract ? Rational(-j->coef) : j->coef});
      ++j;
    } else {
      Rational s = Subtract ? Rational(i->coef - j->coef) : Rational(i->coef + j->coef);
      if (s != 0) out.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.push_back({j->mono, Subtract ? Rational(-j->coef) : j->coef});
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms<false>(terms_, o.terms_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms<true>(terms_, o.terms_);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.size() == 1 && a.terms_[0].mono.is_one()) return b.scaled(a.terms_[0].coef);
  if (b.size() == 1 && b.terms_[0].mono.is_one()) return a.scaled(b.terms_[0].coef);
  if (b.size() == 1) return a.times(b.terms_[0].mono).scaled(b.terms_[0].coef);
  if (a.size() == 1) return b.times(a.terms_[0].mono).scaled(a.terms_[0].coef);
  std::vector<Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) raw.push_back({s.mono * t.mono, s.coef * t.coef});
  return Polynomial::from_terms(std::move(raw));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial();
  if (c == 1) return *this;
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coef *= c;
  return out;
}

Polynomial Polynomial::times(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial out = *this;
  for (auto& t : out.terms_) t.mono = t.mono * m;
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return Polynomial();
  if (d.is_constant()) return scaled(Rational(1) / d.terms_[0].coef);
  if (d.total_degree() > total_degree()) return std::nullopt;
  for (const auto& [atom, e] : d.leading().mono.factors())
    if (degree_in(atom) < e) return std::nullopt;
  std::vector<Term> quotient;
  Polynomial r = *this;
  const Term& lead = d.leading();
  while (!r.is_zero()) {
    const Term& lt = r.leading();
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    Monomial m = lead.mono.quotient_of(lt.mono);
    Rational c = lt.coef / lead.coef;
    r -= d.times(m).scaled(c);
    quotient.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(std::move(quotient));
}

std::pair<std::vector<Polynomial>, Polynomial> Polynomial::reduce_by(
    const std::vector<Polynomial>& divisors) const {
  std::vector<std::vector<Term>> quotients(divisors.size());
  std::vector<Term> remainder;
  Polynomial p = *this;
  while (!p.is_zero()) {
    const Term lt = p.leading();
    bool divided = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      const auto& d = divisors[k];
      if (d.is_zero()) continue;
      if (!d.leading().mono.divides(lt.mono)) continue;
      Monomial m = d.leading().mono.quotient_of(lt.mono);
      Rational c = lt.coef / d.leading().coef;
      p -= d.times(m).scaled(c);
      quotients[k].push_back({std::move(m), std::move(c)});
      divided = true;
      break;
    }
    if (!divided) {
      remainder.push_back(lt);
      p -= Polynomial(lt.mono, lt.coef);
    }
  }
  std::vector<Polynomial> qs;
  qs.reserve(quotients.size());
  for (auto& q : quotients) qs.push_back(Polynomial::from_terms(std::move(q)));
  return {std::move(qs), Polynomial::from_terms(std::move(remainder))};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational& lc = terms_.front().coef;
  if (lc == 1) return *this;
  return scaled(Rational(1) / lc);
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().mono;
  for (std::size_t k = 1; k < terms_.size() && !g.is_one(); ++k) g = Monomial::gcd(g, terms_[k].mono);
  return g;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial out = *this;
  for (auto& t : out.terms_) t.mono = m.quotient_of(t.mono);
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(const Atom& a) const {
  std::vector<std::vector<Term>> buckets(degree_in(a) + 1);
  for (const auto& t : terms_) buckets[t.mono.degree_in(a)].push_back({t.mono.without(a), t.coef});
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& coeffs, const Atom& a) {
  std::vector<Term> raw;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial m = Monomial::of(a, static_cast<unsigned>(k));
    for (const auto& t : coeffs[k].terms()) raw.push_back({t.mono * m, t.coef});
  }
  return Polynomial::from_terms(std::move(raw));
}

Polynomial Polynomial::partial(const Atom& a) const {
  std::vector<Term> raw;
  for (const auto& t : terms_) {
    unsigned e = t.mono.degree_in(a);
    if (e == 0) continue;
    Monomial m = t.mono.without(a) * Monomial::of(a, e - 1);
    raw.push_back({std::move(m), t.coef * e});
  }
  return Polynomial::from_terms(std::move(raw));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].coef != b.terms_[k].coef) return false;
    if (!(a.terms_[k].mono == b.terms_[k].mono)) return false;
  }
  return true;
}

std::strong_ordering compare(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = a.terms_[k].mono <=> b.terms_[k].mono; c != 0) return c;
    int s = cmp(a.terms_[k].coef, b.terms_[k].coef);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

// --------------------------------------------------------------------- GCD

namespace {

using UPoly = std::vector<Polynomial>;  // index = degree in the main atom

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

long degree(const UPoly& u) { return static_cast<long>(u.size()) - 1; }

Polynomial exact(const Polynomial& p, const Polynomial& d) {
  auto q = p.divide_exact(d);
  if (!q) throw Error(ErrorKind::InvalidArgument, "internal: inexact polynomial division in gcd");
  return *q;
}

UPoly prem(UPoly r, const UPoly& b) {
  const long db = degree(b);
  const Polynomial& lcb = b.back();
  long e = degree(r) - db + 1;
  while (!r.empty() && degree(r) >= db) {
    Polynomial lcr = r.back();
    long shift = degree(r) - db;
    for (auto& c : r) c = c * lcb;
    for (long j = 0; j <= db; ++j) r[j + shift] -= lcr * b[j];
    trim(r);
    --e;
  }
  if (e > 0) {
    Polynomial f = lcb.pow(static_cast<unsigned>(e));
    for (auto& c : r) c = c * f;
  }
  return r;
}

Polynomial content_of(const UPoly& u) {
  Polynomial g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

UPoly divide_all(const UPoly& u, const Polynomial& d) {
  UPoly out;
  out.reserve(u.size());
  for (const auto& c : u) out.push_back(exact(c, d));
  return out;
}

// gcd of two polynomials primitive in the main atom, both of positive degree.
UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  Polynomial g(1);
  Polynomial h(1);
  while (true) {
    long d = degree(a) - degree(b);
    UPoly r = prem(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) return UPoly{Polynomial(1)};
    a = std::move(b);
    Polynomial divisor = g * h.pow(static_cast<unsigned>(d));
    b = divide_all(r, divisor);
    g = a.back();
    if (d == 1) {
      h = g;
    } else if (d > 1) {
      h = exact(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
    }
  }
  return divide_all(b, content_of(b));
}

bool plausible_divisor(const Polynomial& d, const Polynomial& p) {
  if (d.total_degree() > p.total_degree() || d.size() > p.size() * 4 + 4) return false;
  return d.leading().mono.divides(p.leading().mono);
}

Polynomial gcd_core(const Polynomial& a0, const Polynomial& b0) {
  if (a0.is_constant() || b0.is_constant()) return Polynomial(1);
  Polynomial a = a0.monic();
  Polynomial b = b0.monic();
  if (a == b) return a;
  if (plausible_divisor(b, a) && a.divide_exact(b)) return b;
  if (plausible_divisor(a, b) && b.divide_exact(a)) return a;

  auto atoms_a = a.atoms();
  auto atoms_b = b.atoms();
  for (const auto& v : atoms_a)
    if (!atoms_b.contains(v)) return gcd(content_in(a, v), b);
  for (const auto& v : atoms_b)
    if (!atoms_a.contains(v)) return gcd(a, content_in(b, v));

  const Atom* main = nullptr;
  unsigned best = 0;
  for (const auto& v : atoms_a) {
    unsigned score = std::max(a.degree_in(v), b.degree_in(v));
    if (main == nullptr || score < best) {
      main = &v;
      best = score;
    }
  }
  Atom v = *main;
  UPoly ua = a.coefficients_in(v);
  UPoly ub = b.coefficients_in(v);
  Polynomial ca = content_of(ua);
  Polynomial cb = content_of(ub);
  Polynomial c = gcd(ca, cb);
  UPoly g = subresultant_gcd(divide_all(ua, ca), divide_all(ub, cb));
  return (Polynomial::from_coefficients(g, v) * c).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  Monomial mg = Monomial::gcd(ma, mb);
  Polynomial g = gcd_core(a.divide_monomial(ma), b.divide_monomial(mb));
  return g.times(mg).monic();
}

Polynomial content_in(const Polynomial& p, const Atom& a) { return content_of(p.coefficients_in(a)); }

// -------------------------------------------------------------- squarefree

namespace {

using Factors = std::vector<std::pair<Polynomial, unsigned>>;

void add_factor(Factors& out, const Polynomial& f, unsigned k) {
  if (f.is_constant()) return;
  for (auto& [g, m] : out) {
    if (m == k) {
      g = (g * f).monic();
      return;
    }
  }
  out.emplace_back(f.monic(), k);
}

// Yun's algorithm in the main atom v; f is primitive in v with positive degree.
void yun(const Polynomial& f, const Atom& v, Factors& out) {
  Polynomial fp = f.partial(v);
  Polynomial a0 = gcd(f, fp);
  Polynomial b = exact(f, a0);
  Polynomial c = exact(fp, a0);
  Polynomial d = c - b.partial(v);
  unsigned i = 1;
  while (!b.is_constant()) {
    Polynomial a = gcd(b, d);
    add_factor(out, a, i);
    b = exact(b, a);
    c = exact(d, a);
    d = c - b.partial(v);
    ++i;
  }
}

void squarefree_rec(const Polynomial& p, Factors& out) {
  if (p.is_constant()) return;
  Monomial m = p.monomial_content();
  for (const auto& [atom, e] : m.factors()) add_factor(out, Polynomial(atom), e);
  Polynomial rest = p.divide_monomial(m);
  if (rest.is_constant()) return;
  Atom v = *rest.atoms().begin();
  Polynomial c = content_in(rest, v);
  Polynomial pp = exact(rest, c).monic();
  yun(pp, v, out);
  squarefree_rec(c, out);
}

}  // namespace

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p) {
  Factors out;
  squarefree_rec(p, out);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

}  // namespace twistkit
