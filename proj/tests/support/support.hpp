#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "twistkit/frontend/parser.hpp"
#include "twistkit/jet/matrix_one_form.hpp"
#include "twistkit/jet/vector_field.hpp"
#include "twistkit/symbolic/evaluate.hpp"

namespace twistkit {

/// Readable gtest diagnostics.
void PrintTo(const Expression& e, std::ostream* os);
void PrintTo(const Matrix& m, std::ostream* os);
void PrintTo(const ProlongedField& Y, std::ostream* os);

}  // namespace twistkit

namespace twistkit::testing {

/// Seed of every oracle comparison in the suites.
inline constexpr std::uint64_t kOracleSeed = 20240601;
inline constexpr unsigned kOraclePoints = 30;

/// Small random instances for property suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return range(0, 1) == 1; }
  /// Nonzero p/q with |p| <= 5, 1 <= q <= 3.
  Rational coefficient();
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v.at(static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1)));
  }

 private:
  std::mt19937_64 engine_;
};

Expression random_polynomial(Rng& rng, const std::vector<Atom>& atoms, unsigned max_degree, unsigned max_terms);
/// num/den with den = polynomial + nonzero constant, so never identically zero.
Expression random_rational(Rng& rng, const std::vector<Atom>& atoms, unsigned max_degree, unsigned max_terms);

/// Order-zero coordinates of the space: x^i, u^a, w^b.
std::vector<Atom> base_atoms(const JetSpace& space);
/// All u-jets of order <= k together with x^i.
std::vector<Atom> jet_atoms(const JetSpace& space, unsigned k);

/// Lie-point field with polynomial coefficients in (x, u).
VectorField random_point_field(Rng& rng, const JetSpace& space, unsigned max_degree, bool vertical);
/// mu with polynomial entries in (x, u) and, optionally, first-order jets.
MatrixOneForm random_mu(Rng& rng, const JetSpace& space, unsigned max_degree, bool with_jets);
/// L * U with unit diagonals and polynomial entries in (x, u): det = 1.
Matrix random_unimodular(Rng& rng, std::size_t q, const std::vector<Atom>& atoms, unsigned max_degree);

/// Exact canonical equality confirmed at kOraclePoints random rational points.
bool oracle_agrees(const Expression& a, const Expression& b, std::uint64_t seed = kOracleSeed);

/// Declarations with the default names for (p, q, r).
Declarations default_declarations(std::size_t p, std::size_t q, std::size_t r);
/// Parses with `decl`, adding constants and functions first.
Expression expr(const std::string& text, const Declarations& decl);

/// One example value that needs an independent oracle. `run` returns
/// an empty string on success and a diagnostic otherwise.
struct DerivedCase {
  std::string id;
  std::function<std::string()> run;
};

const std::vector<DerivedCase>& derived_cases();

}  // namespace twistkit::testing
