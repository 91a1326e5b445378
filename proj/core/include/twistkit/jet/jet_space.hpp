#pragma once

#include <cstddef>
#include <vector>

#include "twistkit/symbolic/derivation.hpp"
#include "twistkit/symbolic/expression.hpp"

namespace twistkit {

/// p independent, q dependent and r auxiliary variables on J^n. Jet atoms up
/// to order n + 1 are admitted so that total derivatives close.
class JetSpace {
 public:
  JetSpace(std::size_t p, std::size_t q, std::size_t r, unsigned n);

  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return q_; }
  std::size_t r() const noexcept { return r_; }
  unsigned n() const noexcept { return n_; }
  unsigned cap() const noexcept { return n_ + 1; }

  JetSpace with_order(unsigned n) const { return JetSpace(p_, q_, r_, n); }

  MultiIndex zero() const { return MultiIndex(p_); }
  MultiIndex unit(std::size_t i) const { return zero().bumped(i); }

  Atom x(std::size_t i) const;
  Atom u(std::size_t a) const { return u(a, zero()); }
  Atom u(std::size_t a, const MultiIndex& J) const;
  Atom w(std::size_t b) const { return w(b, zero()); }
  Atom w(std::size_t b, const MultiIndex& J) const;

  /// All multi-indices with |J| <= max_order, by order then first direction.
  std::vector<MultiIndex> indices_up_to(unsigned max_order) const;

  /// Throws TruncationExceeded when a jet atom exceeds the cap.
  void check(const Atom& a) const;

 private:
  std::size_t p_, q_, r_;
  unsigned n_;
};

/// D_i on the space: d/dx^i plus the shift of every u- and w-jet.
Derivation total_derivation(std::size_t i, const JetSpace& space);
Expression total_derivative(const Expression& e, std::size_t i, const JetSpace& space);

}  // namespace twistkit
