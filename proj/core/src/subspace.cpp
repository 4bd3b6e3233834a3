#include "qheis/subspace.hpp"

namespace qheis {

std::vector<Monomial> Window::monomials() const {
  std::vector<Monomial> out;
  for (long d = -dmax; d <= dmax; ++d)
    for (long k = 0; k <= kmax; ++k) {
      Monomial m{k, d};
      if (contains(m)) out.push_back(m);
    }
  return out;
}

Element Window::project(const Element& x) const {
  Element out(x.context());
  for (const auto& [m, c] : x.terms())
    if (contains(m)) out.add_term(m, c);
  return out;
}

nlohmann::json Window::to_json() const { return {{"kmax", kmax}, {"dmax", dmax}, {"dmin", dmin}}; }

Element RowEchelon::reduce(const Element& v) const {
  Element r = v;
  for (const auto& [pivot, row] : rows_) {
    if (!r.contains(pivot)) continue;
    r -= r.coefficient(pivot) * row;
  }
  return r;
}

bool RowEchelon::insert(const Element& v) {
  if (v.context() != *ctx_) throw ContextMismatch("row reduction context mismatch");
  Element r = reduce(v);
  if (r.is_zero()) return false;
  const Monomial pivot = r.terms().begin()->first;
  r *= r.terms().begin()->second.inverse();
  for (auto& [p, row] : rows_)
    if (row.contains(pivot)) row -= row.coefficient(pivot) * r;
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<Element> RowEchelon::rows() const {
  std::vector<Element> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<Monomial> RowEchelon::pivots() const {
  std::vector<Monomial> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

bool SubspaceBasis::contains_monomial(const Monomial& m) const {
  if (rows.empty()) return false;
  RowEchelon re(rows.front().context());
  for (const auto& r : rows) re.insert(r);
  return re.contains(Element(rows.front().context(), m));
}

nlohmann::json SubspaceBasis::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) rows_json.push_back(r.to_json());
  return {{"window", window.to_json()}, {"dimension", rows.size()}, {"rows", std::move(rows_json)}};
}

}  // namespace qheis
