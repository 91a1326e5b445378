#include "support.hpp"

namespace twistkit {

namespace {
const Symbols& print_symbols() {
  static const Symbols s = Symbols::defaults(2, 2, 2);
  return s;
}
}  // namespace

void PrintTo(const Expression& e, std::ostream* os) { *os << to_string(e, print_symbols()); }

void PrintTo(const Matrix& m, std::ostream* os) {
  *os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    *os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) *os << (j ? ", " : "") << to_string(m(i, j), print_symbols());
    *os << "]";
  }
  *os << "]";
}

void PrintTo(const ProlongedField& Y, std::ostream* os) {
  *os << "order " << Y.order << ";";
  for (const auto& x : Y.xi) *os << " xi=" << to_string(x, print_symbols());
  for (const auto& [k, v] : Y.psi) {
    *os << " psi" << k.first << "[";
    for (unsigned c : k.second.counts()) *os << c;
    *os << "]=" << to_string(v, print_symbols());
  }
  for (const auto& [k, v] : Y.chi) *os << " chi" << k.first << "=" << to_string(v, print_symbols());
}

}  // namespace twistkit

namespace twistkit::testing {

Rational Rng::coefficient() {
  long p = 0;
  while (p == 0) p = range(-5, 5);
  Rational r(p, range(1, 3));
  r.canonicalize();
  return r;
}

Expression random_polynomial(Rng& rng, const std::vector<Atom>& atoms, unsigned max_degree, unsigned max_terms) {
  Expression out;
  const long terms = rng.range(1, max_terms);
  for (long k = 0; k < terms; ++k) {
    Expression t(rng.coefficient());
    const long deg = rng.range(0, max_degree);
    for (long d = 0; d < deg; ++d) t *= Expression(rng.pick(atoms));
    out += t;
  }
  return out;
}

Expression random_rational(Rng& rng, const std::vector<Atom>& atoms, unsigned max_degree, unsigned max_terms) {
  Expression num = random_polynomial(rng, atoms, max_degree, max_terms);
  Expression den = random_polynomial(rng, atoms, max_degree, max_terms);
  if (auto c = den.constant_value(); c && *c == 0) den = Expression(1);
  den += Expression(rng.coefficient());
  if (den.is_zero()) den = Expression(1);
  return num / den;
}

std::vector<Atom> base_atoms(const JetSpace& s) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < s.p(); ++i) out.push_back(s.x(i));
  for (std::size_t a = 0; a < s.q(); ++a) out.push_back(s.u(a));
  for (std::size_t b = 0; b < s.r(); ++b) out.push_back(s.w(b));
  return out;
}

std::vector<Atom> jet_atoms(const JetSpace& s, unsigned k) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < s.p(); ++i) out.push_back(s.x(i));
  for (const auto& J : s.indices_up_to(k))
    for (std::size_t a = 0; a < s.q(); ++a) out.push_back(s.u(a, J));
  return out;
}

namespace {

std::vector<Atom> point_atoms(const JetSpace& s) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < s.p(); ++i) out.push_back(s.x(i));
  for (std::size_t a = 0; a < s.q(); ++a) out.push_back(s.u(a));
  return out;
}

}  // namespace

VectorField random_point_field(Rng& rng, const JetSpace& s, unsigned max_degree, bool vertical) {
  VectorField X = VectorField::zero(s);
  auto atoms = point_atoms(s);
  if (!vertical)
    for (auto& xi : X.xi)
      if (rng.coin()) xi = random_polynomial(rng, atoms, max_degree, 2);
  for (auto& phi : X.phi) phi = random_polynomial(rng, atoms, max_degree, 3);
  return X;
}

MatrixOneForm random_mu(Rng& rng, const JetSpace& s, unsigned max_degree, bool with_jets) {
  auto atoms = with_jets ? jet_atoms(s, 1) : point_atoms(s);
  MatrixOneForm mu;
  for (std::size_t i = 0; i < s.p(); ++i) {
    Matrix L(s.q(), s.q());
    for (std::size_t a = 0; a < s.q(); ++a)
      for (std::size_t b = 0; b < s.q(); ++b)
        if (rng.range(0, 2) > 0) L(a, b) = random_polynomial(rng, atoms, max_degree, 2);
    mu.lambdas.push_back(std::move(L));
  }
  return mu;
}

Matrix random_unimodular(Rng& rng, std::size_t q, const std::vector<Atom>& atoms, unsigned max_degree) {
  Matrix L = Matrix::identity(q), U = Matrix::identity(q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      L(i, j) = random_polynomial(rng, atoms, max_degree, 2);
      U(j, i) = random_polynomial(rng, atoms, max_degree, 2);
    }
  return L * U;
}

bool oracle_agrees(const Expression& a, const Expression& b, std::uint64_t seed) {
  Sampler sampler(seed);
  return agree_at_random_points(a, b, kOraclePoints, sampler);
}

Declarations default_declarations(std::size_t p, std::size_t q, std::size_t r) {
  Declarations d;
  auto s = Symbols::defaults(p, q, r);
  for (const auto& n : s.independents) d.declare_independent(n);
  for (const auto& n : s.dependents) d.declare_dependent(n);
  for (const auto& n : s.auxiliaries) d.declare_auxiliary(n);
  return d;
}

Expression expr(const std::string& text, const Declarations& decl) { return parse_expression(text, decl); }

}  // namespace twistkit::testing
