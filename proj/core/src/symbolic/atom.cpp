#include "twistkit/symbolic/atom.hpp"

#include "twistkit/symbolic/error.hpp"
#include "twistkit/symbolic/expression.hpp"

namespace twistkit {

struct Atom::Data {
  AtomKind kind{};
  std::size_t index = 0;
  MultiIndex multi;
  std::string name;
  std::vector<Atom> args;
  std::shared_ptr<const Expression> payload;
  std::shared_ptr<const Expression> exponent;
};

Atom Atom::independent(std::size_t i) {
  auto d = std::make_shared<Data>();
  d->kind = AtomKind::Independent;
  d->index = i;
  return Atom(std::move(d));
}

Atom Atom::jet(std::size_t a, MultiIndex J) {
  auto d = std::make_shared<Data>();
  d->kind = AtomKind::Jet;
  d->index = a;
  d->multi = std::move(J);
  return Atom(std::move(d));
}

Atom Atom::aux(std::size_t b, MultiIndex J) {
  auto d = std::make_shared<Data>();
  d->kind = AtomKind::AuxJet;
  d->index = b;
  d->multi = std::move(J);
  return Atom(std::move(d));
}

Atom Atom::constant(std::string name) {
  auto d = std::make_shared<Data>();
  d->kind = AtomKind::Constant;
  d->name = std::move(name);
  return Atom(std::move(d));
}

Atom Atom::function(std::string name, std::vector<Atom> args, MultiIndex K) {
  if (K.dims() != args.size())
    throw Error(ErrorKind::ArityError, "derivative counts do not match arguments of " + name);
  for (const auto& a : args) {
    if (!a.is_coordinate() || a.order() != 0)
      throw Error(ErrorKind::InvalidArgument,
                  "opaque function " + name + " takes order-zero coordinates only");
  }
  auto d = std::make_shared<Data>();
  d->kind = AtomKind::Function;
  d->name = std::move(name);
  d->args = std::move(args);
  d->multi = std::move(K);
  return Atom(std::move(d));
}

Atom Atom::exp_raw(const Expression& arg) {
  auto d = std::make_shared<Data>();
  d->kind = AtomKind::Exp;
  d->payload = std::make_shared<const Expression>(arg);
  return Atom(std::move(d));
}

Atom Atom::power_raw(const Expression& base, const Expression& exponent) {
  auto d = std::make_shared<Data>();
  d->kind = AtomKind::Power;
  d->payload = std::make_shared<const Expression>(base);
  d->exponent = std::make_shared<const Expression>(exponent);
  return Atom(std::move(d));
}

AtomKind Atom::kind() const noexcept { return d_->kind; }
std::size_t Atom::index() const noexcept { return d_->index; }
const MultiIndex& Atom::multi() const noexcept { return d_->multi; }
const std::string& Atom::name() const noexcept { return d_->name; }
const std::vector<Atom>& Atom::args() const noexcept { return d_->args; }

const Expression& Atom::payload() const {
  if (!d_->payload) throw Error(ErrorKind::InvalidArgument, "atom has no payload");
  return *d_->payload;
}

const Expression& Atom::exponent() const {
  if (!d_->exponent) throw Error(ErrorKind::InvalidArgument, "atom has no exponent");
  return *d_->exponent;
}

unsigned Atom::order() const noexcept {
  if (d_->kind == AtomKind::Jet || d_->kind == AtomKind::AuxJet) return d_->multi.order();
  return 0;
}

Atom Atom::function_derivative(std::size_t k) const {
  return Atom::function(d_->name, d_->args, d_->multi.bumped(k));
}

Atom Atom::bumped(std::size_t i) const {
  if (d_->kind == AtomKind::Jet) return Atom::jet(d_->index, d_->multi.bumped(i));
  if (d_->kind == AtomKind::AuxJet) return Atom::aux(d_->index, d_->multi.bumped(i));
  throw Error(ErrorKind::InvalidArgument, "only jet coordinates can be bumped");
}

namespace {

// Lower order first; within one order, more derivatives in earlier directions
// come first (u_x before u_t).
std::strong_ordering compare_multi(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  if (auto c = a.dims() <=> b.dims(); c != 0) return c;
  for (std::size_t i = 0; i < a.dims(); ++i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

bool operator==(const Atom& a, const Atom& b) {
  if (a.d_ == b.d_) return true;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (a.d_ == b.d_) return std::strong_ordering::equal;
  const auto& x = *a.d_;
  const auto& y = *b.d_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case AtomKind::Independent:
      return x.index <=> y.index;
    case AtomKind::Jet:
    case AtomKind::AuxJet:
      if (auto c = x.index <=> y.index; c != 0) return c;
      return compare_multi(x.multi, y.multi);
    case AtomKind::Constant:
      return x.name <=> y.name;
    case AtomKind::Function: {
      if (auto c = x.name <=> y.name; c != 0) return c;
      if (auto c = x.args.size() <=> y.args.size(); c != 0) return c;
      for (std::size_t i = 0; i < x.args.size(); ++i)
        if (auto c = x.args[i] <=> y.args[i]; c != 0) return c;
      return compare_multi(x.multi, y.multi);
    }
    case AtomKind::Power:
      if (auto c = compare(*x.payload, *y.payload); c != 0) return c;
      return compare(*x.exponent, *y.exponent);
    case AtomKind::Exp:
      return compare(*x.payload, *y.payload);
  }
  return std::strong_ordering::equal;
}

}  // namespace twistkit
