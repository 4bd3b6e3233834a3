#include "qheis/element.hpp"

#include <sstream>
#include <stdexcept>

namespace qheis {

std::string Monomial::to_string() const {
  if (is_identity()) return "I";
  auto power = [](const char* sym, long e) {
    return e == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(e);
  };
  std::string c = k > 0 ? power("C", k) : "";
  if (d == 0) return c;
  if (d < 0) return c.empty() ? power("A", -d) : c + "*" + power("A", -d);
  return c.empty() ? power("B", d) : power("B", d) + "*" + c;
}

void require_same_context(const Element& x, const Element& y) {
  if (x.context() != y.context())
    throw ContextMismatch("element context mismatch: " + x.context().describe() + " vs " +
                          y.context().describe());
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(*ctx_) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& coeff) {
  if (coeff.context() != *ctx_) throw ContextMismatch("term coefficient from a different context");
  if (m.k < 0) throw std::invalid_argument("monomial with negative C-exponent");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  require_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.context() != *ctx_) throw ContextMismatch("scaling by a scalar from a different context");
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Element Element::operator-() const {
  Element out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Element& a, const Element& b) {
  require_same_context(a, b);
  return a.terms_ == b.terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_one()) {
      os << m.to_string();
    } else {
      os << "(" << c.to_string() << ")";
      if (!m.is_identity()) os << "*" << m.to_string();
    }
  }
  return os.str();
}

nlohmann::json Element::to_json() const {
  nlohmann::json j;
  j["mode"] = ctx_->is_torsion() ? "torsion" : "generic";
  if (ctx_->is_torsion()) j["p"] = ctx_->order();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) terms.push_back({{"k", m.k}, {"d", m.d}, {"coeff", c.to_json()}});
  j["terms"] = std::move(terms);
  return j;
}

Element Element::from_json(const nlohmann::json& j) {
  const auto mode = j.at("mode").get<std::string>();
  const ScalarContext* ctx = nullptr;
  if (mode == "generic")
    ctx = &ScalarContext::generic();
  else if (mode == "torsion")
    ctx = &ScalarContext::torsion(j.at("p").get<int>());
  else
    throw std::invalid_argument("unknown scalar mode '" + mode + "'");
  Element out(*ctx);
  for (const auto& t : j.at("terms")) {
    Monomial m{t.at("k").get<long>(), t.at("d").get<long>()};
    if (out.contains(m)) throw std::invalid_argument("duplicate monomial " + m.to_string());
    Scalar c = Scalar::from_json(*ctx, t.at("coeff"));
    if (c.is_zero()) throw std::invalid_argument("zero coefficient on " + m.to_string());
    out.add_term(m, c);
  }
  return out;
}

std::map<long, Element> graded_components(const Element& x) {
  std::map<long, Element> out;
  for (const auto& [m, c] : x.terms())
    out.try_emplace(m.grade(), x.context()).first->second.add_term(m, c);
  return out;
}

bool is_homogeneous(const Element& x, long g) {
  for (const auto& [m, c] : x.terms())
    if (m.grade() != g) return false;
  return true;
}

}  // namespace qheis
