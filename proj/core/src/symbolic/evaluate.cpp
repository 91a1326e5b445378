#include "twistkit/symbolic/evaluate.hpp"

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

namespace {

Rational eval_poly(const Polynomial& p, const Assignment& values) {
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coef;
    for (const auto& [atom, e] : t.mono.factors()) {
      auto it = values.find(atom);
      if (it == values.end()) throw Error(ErrorKind::InvalidArgument, "evaluation point misses an atom");
      for (unsigned k = 0; k < e; ++k) v *= it->second;
    }
    total += v;
  }
  return total;
}

}  // namespace

std::optional<Rational> evaluate(const Expression& e, const Assignment& values) {
  Rational d = eval_poly(e.den(), values);
  if (d == 0) return std::nullopt;
  return eval_poly(e.num(), values) / d;
}

Rational Sampler::draw() {
  std::uniform_int_distribution<long> num(-10000, 10000);
  std::uniform_int_distribution<long> den(1, 10000);
  Rational r(num(engine_), den(engine_));
  r.canonicalize();
  return r;
}

Assignment Sampler::sample(const std::set<Atom>& atoms) {
  Assignment out;
  for (const auto& a : atoms) out.emplace(a, draw());
  return out;
}

Rational random_eval(const Expression& e, const Assignment& values, unsigned retries, Sampler& sampler) {
  if (auto v = evaluate(e, values)) return *v;
  auto atoms = e.atoms();
  for (unsigned k = 0; k < retries; ++k)
    if (auto v = evaluate(e, sampler.sample(atoms))) return *v;
  throw Error(ErrorKind::PoleAtAllSamples, "denominator vanished at every sample");
}

bool agree_at_random_points(const Expression& a, const Expression& b, unsigned points, Sampler& sampler) {
  auto atoms = a.atoms();
  auto more = b.atoms();
  atoms.insert(more.begin(), more.end());
  unsigned checked = 0;
  for (unsigned attempt = 0; checked < points && attempt < 4 * points + 10; ++attempt) {
    auto values = sampler.sample(atoms);
    auto va = evaluate(a, values);
    auto vb = evaluate(b, values);
    if (!va || !vb) continue;
    if (*va != *vb) return false;
    ++checked;
  }
  if (checked < points) throw Error(ErrorKind::PoleAtAllSamples, "too many poles while comparing");
  return true;
}

bool is_zero_confirmed(const Expression& e, Sampler& sampler, unsigned points) {
  if (!e.is_zero()) return false;
  if (!e.has_transcendental()) return true;
  return agree_at_random_points(e, Expression(), points, sampler);
}

}  // namespace twistkit
