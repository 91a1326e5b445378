#include "twistkit/forms/diff_form.hpp"

#include <algorithm>

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

DiffForm DiffForm::function(const Expression& f) {
  DiffForm out(0);
  out.add({}, f);
  return out;
}

DiffForm DiffForm::differential_of(const Atom& coordinate) {
  if (!coordinate.is_coordinate()) throw Error(ErrorKind::InvalidArgument, "differential of a non-coordinate");
  DiffForm out(1);
  out.add({coordinate}, Expression(1));
  return out;
}

Expression DiffForm::coefficient(const Basis& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Expression() : it->second;
}

void DiffForm::add(Basis b, const Expression& c) {
  if (b.size() != degree_) throw Error(ErrorKind::DimensionMismatch, "basis form of the wrong degree");
  if (c.is_zero()) return;
  bool odd = false;
  for (std::size_t i = 1; i < b.size(); ++i)
    for (std::size_t j = i; j > 0 && b[j] < b[j - 1]; --j) {
      std::swap(b[j], b[j - 1]);
      odd = !odd;
    }
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i] == b[i - 1]) return;
  auto it = terms_.find(b);
  Expression value = odd ? -c : c;
  if (it == terms_.end()) {
    terms_.emplace(std::move(b), std::move(value));
    return;
  }
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffForm DiffForm::operator-() const {
  DiffForm out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (o.degree_ != degree_) throw Error(ErrorKind::DimensionMismatch, "adding forms of different degree");
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) { return *this += -o; }

DiffForm operator*(const Expression& s, const DiffForm& a) {
  return a.map([&s](const Expression& c) { return s * c; });
}

DiffForm DiffForm::map(const std::function<Expression(const Expression&)>& f) const {
  DiffForm out(degree_);
  for (const auto& [b, c] : terms_) out.add(b, f(c));
  return out;
}

bool operator==(const DiffForm& a, const DiffForm& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  DiffForm out(a.degree() + b.degree());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      DiffForm::Basis joined = ba;
      joined.insert(joined.end(), bb.begin(), bb.end());
      out.add(std::move(joined), ca * cb);
    }
  return out;
}

DiffForm exterior_d(const DiffForm& a) {
  DiffForm out(a.degree() + 1);
  for (const auto& [b, c] : a.terms()) {
    for (const auto& coord : c.coordinates()) {
      Expression dc = partial(c, coord);
      if (dc.is_zero()) continue;
      DiffForm::Basis joined{coord};
      joined.insert(joined.end(), b.begin(), b.end());
      out.add(std::move(joined), dc);
    }
  }
  return out;
}

DiffForm interior(const CoordinateField& Y, const DiffForm& a) {
  if (a.degree() == 0) return DiffForm(0);
  DiffForm out(a.degree() - 1);
  for (const auto& [b, c] : a.terms()) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Expression y = Y.at(b[j]);
      if (y.is_zero()) continue;
      DiffForm::Basis rest = b;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      out.add(std::move(rest), j % 2 == 0 ? y * c : -(y * c));
    }
  }
  return out;
}

DiffForm lie_derivative(const CoordinateField& Y, const DiffForm& a) {
  DiffForm out = exterior_d(interior(Y, a));
  out += interior(Y, exterior_d(a));
  return out;
}

DiffForm contact_form(std::size_t a, const MultiIndex& J, const JetSpace& space) {
  if (J.order() >= space.n())
    throw Error(ErrorKind::OrderTooHigh, "contact forms need |J| < n");
  DiffForm out(1);
  out.add({space.u(a, J)}, Expression(1));
  for (std::size_t i = 0; i < space.p(); ++i) out.add({space.x(i)}, -Expression(space.u(a, J.bumped(i))));
  return out;
}

namespace {

bool rewritable(const Atom& c, const JetSpace& space) {
  return (c.kind() == AtomKind::Jet || c.kind() == AtomKind::AuxJet) && c.order() < space.cap();
}

}  // namespace

bool is_in_contact_ideal(const DiffForm& w, const JetSpace& space) {
  if (w.degree() > 2) throw Error(ErrorKind::UnsupportedDegree, "contact ideal membership is decided for degree <= 2");
  if (w.is_zero()) return true;
  if (w.degree() == 0) return false;
  // Expand in the basis {theta_K, dx^i}; theta_K reuses the atom u_K. A term
  // survives the test only if none of its factors is a theta.
  DiffForm horizontal(w.degree());
  for (const auto& [b, c] : w.terms()) {
    std::vector<std::vector<std::pair<Atom, Expression>>> choices;
    for (const auto& coord : b) {
      std::vector<std::pair<Atom, Expression>> non_contact;
      if (rewritable(coord, space)) {
        for (std::size_t i = 0; i < space.p(); ++i)
          non_contact.emplace_back(space.x(i), Expression(coord.bumped(i)));
      } else {
        non_contact.emplace_back(coord, Expression(1));
      }
      choices.push_back(std::move(non_contact));
    }
    // Products over the non-contact parts of each factor.
    std::vector<std::pair<DiffForm::Basis, Expression>> acc{{{}, c}};
    for (const auto& options : choices) {
      std::vector<std::pair<DiffForm::Basis, Expression>> next;
      for (const auto& [basis, coef] : acc)
        for (const auto& [atom, factor] : options) {
          auto nb = basis;
          nb.push_back(atom);
          next.emplace_back(std::move(nb), coef * factor);
        }
      acc = std::move(next);
    }
    for (auto& [basis, coef] : acc) horizontal.add(std::move(basis), coef);
  }
  return horizontal.is_zero();
}

}  // namespace twistkit
