#include "qheis/closure.hpp"

#include <future>
#include <stdexcept>
#include <utility>

#include "qheis/algebra.hpp"

namespace qheis {

std::vector<Element> ClosureResult::generated() const {
  std::vector<Element> out;
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

namespace {

std::vector<Element> evaluate_brackets(const std::vector<std::pair<const Element*, const Element*>>& pairs,
                                       unsigned threads) {
  std::vector<Element> out;
  out.reserve(pairs.size());
  if (threads <= 1 || pairs.size() < 2) {
    for (const auto& [x, y] : pairs) out.push_back(commutator(*x, *y));
    return out;
  }
  std::vector<std::future<std::vector<Element>>> jobs;
  const std::size_t chunk = (pairs.size() + threads - 1) / threads;
  for (std::size_t start = 0; start < pairs.size(); start += chunk) {
    const std::size_t stop = std::min(pairs.size(), start + chunk);
    jobs.push_back(std::async(std::launch::async, [&pairs, start, stop] {
      std::vector<Element> part;
      for (std::size_t i = start; i < stop; ++i) part.push_back(commutator(*pairs[i].first, *pairs[i].second));
      return part;
    }));
  }
  for (auto& j : jobs) {
    auto part = j.get();
    for (auto& e : part) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

ClosureResult lie_closure(const ScalarContext& ctx, int depth, const Window& window,
                          const ClosureOptions& options) {
  if (depth < 1) throw std::invalid_argument("lie_closure: depth must be at least 1");
  ClosureResult result;
  result.depth = depth;
  RowEchelon span(ctx);

  std::vector<Element> first{Element::gen_a(ctx), Element::gen_b(ctx)};
  for (const auto& g : first) span.insert(g);
  result.layers.push_back(std::move(first));

  for (int n = 2; n <= depth; ++n) {
    std::vector<std::pair<const Element*, const Element*>> pairs;
    for (int i = 1; 2 * i <= n; ++i) {
      const auto& left = result.layers[i - 1];
      const auto& right = result.layers[n - i - 1];
      for (std::size_t a = 0; a < left.size(); ++a)
        for (std::size_t b = (i == n - i ? a + 1 : 0); b < right.size(); ++b)
          pairs.emplace_back(&left[a], &right[b]);
    }
    std::vector<Element> layer;
    for (auto& v : evaluate_brackets(pairs, options.threads)) {
      Element r = span.reduce(v);
      if (r.is_zero()) continue;
      span.insert(r);
      layer.push_back(std::move(r));
    }
    result.layers.push_back(std::move(layer));
  }

  RowEchelon projected(ctx);
  for (const auto& layer : result.layers)
    for (const auto& e : layer) projected.insert(window.project(e));
  result.basis = SubspaceBasis{window, projected.rows()};
  return result;
}

}  // namespace qheis
