#include "twistkit/jet/jet_space.hpp"

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

JetSpace::JetSpace(std::size_t p, std::size_t q, std::size_t r, unsigned n) : p_(p), q_(q), r_(r), n_(n) {
  if (p < 1 || q < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "jet space needs p >= 1, q >= 1, n >= 1");
}

Atom JetSpace::x(std::size_t i) const {
  if (i >= p_) throw Error(ErrorKind::DimensionMismatch, "independent variable index out of range");
  return Atom::independent(i);
}

Atom JetSpace::u(std::size_t a, const MultiIndex& J) const {
  if (a >= q_ || J.dims() != p_) throw Error(ErrorKind::DimensionMismatch, "dependent variable out of range");
  Atom out = Atom::jet(a, J);
  check(out);
  return out;
}

Atom JetSpace::w(std::size_t b, const MultiIndex& J) const {
  if (b >= r_ || J.dims() != p_) throw Error(ErrorKind::DimensionMismatch, "auxiliary variable out of range");
  Atom out = Atom::aux(b, J);
  check(out);
  return out;
}

std::vector<MultiIndex> JetSpace::indices_up_to(unsigned max_order) const {
  std::vector<MultiIndex> out;
  for (unsigned k = 0; k <= max_order; ++k) {
    auto level = MultiIndex::of_order(p_, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

void JetSpace::check(const Atom& a) const {
  if ((a.kind() == AtomKind::Jet || a.kind() == AtomKind::AuxJet) && a.order() > cap())
    throw Error(ErrorKind::TruncationExceeded,
                "jet of order " + std::to_string(a.order()) + " exceeds cap " + std::to_string(cap()));
}

Derivation total_derivation(std::size_t i, const JetSpace& space) {
  return Derivation([i, space](const Atom& a) -> std::optional<Expression> {
    switch (a.kind()) {
      case AtomKind::Independent:
        return Expression(a.index() == i ? 1 : 0);
      case AtomKind::Jet:
      case AtomKind::AuxJet: {
        Atom next = a.bumped(i);
        space.check(next);
        return Expression(next);
      }
      default:
        return std::nullopt;
    }
  });
}

Expression total_derivative(const Expression& e, std::size_t i, const JetSpace& space) {
  return total_derivation(i, space)(e);
}

}  // namespace twistkit
