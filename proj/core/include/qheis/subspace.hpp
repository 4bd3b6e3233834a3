#pragma once

// Exact row reduction of Elements viewed as sparse coordinate vectors over
// the monomial basis.

#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "qheis/element.hpp"

namespace qheis {

// Monomials with k <= kmax and dmin <= |d| <= dmax.
struct Window {
  long kmax = 0;
  long dmax = 0;
  long dmin = 0;

  bool contains(const Monomial& m) const {
    const long a = m.d < 0 ? -m.d : m.d;
    return m.k <= kmax && a <= dmax && a >= dmin;
  }
  std::vector<Monomial> monomials() const;
  Element project(const Element& x) const;
  nlohmann::json to_json() const;
};

// Reduced row echelon form. Each row has coefficient 1 at its pivot (its
// first monomial in canonical order) and 0 at every other row's pivot.
class RowEchelon {
 public:
  explicit RowEchelon(const ScalarContext& ctx) : ctx_(&ctx) {}

  // Remainder of v after eliminating all pivots.
  Element reduce(const Element& v) const;
  // Inserts v; returns false if it was already in the span.
  bool insert(const Element& v);
  bool contains(const Element& v) const { return reduce(v).is_zero(); }

  std::size_t dimension() const { return rows_.size(); }
  std::vector<Element> rows() const;
  std::vector<Monomial> pivots() const;

 private:
  const ScalarContext* ctx_;
  std::map<Monomial, Element> rows_;
};

struct SubspaceBasis {
  Window window;
  std::vector<Element> rows;

  std::size_t dimension() const { return rows.size(); }
  bool contains_monomial(const Monomial& m) const;
  nlohmann::json to_json() const;
};

}  // namespace qheis
