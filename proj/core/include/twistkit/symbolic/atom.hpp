#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "twistkit/symbolic/multi_index.hpp"

namespace twistkit {

class Expression;

/// Declaration order of the kinds is the canonical atom order.
enum class AtomKind : unsigned char {
  Independent,  // x^i
  Jet,          // u^a_J
  AuxJet,       // w^b_J
  Constant,     // m, eta, ...
  Function,     // opaque g(x), derivatives g^{(K)}(args)
  Power,        // base^(constant-linear exponent)
  Exp,          // exp(arg)
};

/// Generator of the differential field. Atoms are immutable and cheap to copy.
class Atom {
 public:
  static Atom independent(std::size_t i);
  static Atom jet(std::size_t a, MultiIndex J);
  static Atom aux(std::size_t b, MultiIndex J);
  static Atom constant(std::string name);
  /// `args` must be coordinate atoms of order zero; `K` counts derivatives per argument.
  static Atom function(std::string name, std::vector<Atom> args, MultiIndex K);
  /// Raw constructors; callers are expected to have canonicalized the payload.
  /// Use twistkit::exp / twistkit::power for canonical results.
  static Atom exp_raw(const Expression& arg);
  static Atom power_raw(const Expression& base, const Expression& exponent);

  AtomKind kind() const noexcept;
  /// Variable index for Independent / Jet / AuxJet.
  std::size_t index() const noexcept;
  /// J for jets, K for opaque-function derivatives.
  const MultiIndex& multi() const noexcept;
  const std::string& name() const noexcept;
  const std::vector<Atom>& args() const noexcept;
  /// exp argument or power base.
  const Expression& payload() const;
  const Expression& exponent() const;

  bool is_coordinate() const noexcept {
    auto k = kind();
    return k == AtomKind::Independent || k == AtomKind::Jet || k == AtomKind::AuxJet;
  }
  bool is_transcendental() const noexcept {
    auto k = kind();
    return k == AtomKind::Function || k == AtomKind::Power || k == AtomKind::Exp;
  }
  /// Jet order for coordinates (0 for x^i), 0 otherwise.
  unsigned order() const noexcept;

  /// Same opaque function with derivative count of argument k bumped.
  Atom function_derivative(std::size_t k) const;
  /// Same jet/aux variable with one more derivative in direction i.
  Atom bumped(std::size_t i) const;

  friend bool operator==(const Atom& a, const Atom& b);
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

  struct Data;

 private:
  explicit Atom(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

}  // namespace twistkit
