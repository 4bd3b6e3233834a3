#pragma once

// Breadth-first bracket closure of {A, B}.
//
// Layer n holds new directions produced by brackets [x, y] with x from layer
// i and y from layer n - i. Each layer is reduced modulo everything found so
// far, which leaves the total span unchanged. Elements are kept unprojected
// while the closure grows; only the reported basis is cut to the window.

#include <vector>

#include "qheis/subspace.hpp"

namespace qheis {

struct ClosureOptions {
  // Worker threads for evaluating one layer's brackets. Results are
  // assembled in a fixed order, so output does not depend on this.
  unsigned threads = 1;
};

struct ClosureResult {
  int depth = 0;
  std::vector<std::vector<Element>> layers;  // layers[n-1] = new directions at bracket length n
  SubspaceBasis basis;                       // span of all layers, projected to the window

  std::vector<Element> generated() const;
};

ClosureResult lie_closure(const ScalarContext& ctx, int depth, const Window& window,
                          const ClosureOptions& options = {});

}  // namespace qheis
