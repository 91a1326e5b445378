#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "twistkit/symbolic/expression.hpp"

namespace twistkit {

using Assignment = std::map<Atom, Rational>;

/// Exact value of e with every top-level atom replaced by its assigned value;
/// transcendental atoms count as independent unknowns. nullopt at a pole.
/// Throws InvalidArgument if an atom is unassigned.
std::optional<Rational> evaluate(const Expression& e, const Assignment& values);

/// Deterministic source of random rationals num/den with num in [-10^4, 10^4]
/// and den in [1, 10^4].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 20240601) : engine_(seed) {}

  Rational draw();
  Assignment sample(const std::set<Atom>& atoms);

 private:
  std::mt19937_64 engine_;
};

/// Evaluates at `values`; on a pole, resamples all atoms up to `retries` times.
/// Throws PoleAtAllSamples when every attempt hits a pole.
Rational random_eval(const Expression& e, const Assignment& values, unsigned retries, Sampler& sampler);

/// True iff a and b agree at `points` random samples (poles skipped).
bool agree_at_random_points(const Expression& a, const Expression& b, unsigned points, Sampler& sampler);

/// Structural zero test, confirmed by random evaluation when transcendental
/// atoms are present.
bool is_zero_confirmed(const Expression& e, Sampler& sampler, unsigned points = 30);

}  // namespace twistkit
