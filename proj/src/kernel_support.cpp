#include "kernel_support.hpp"

#include <algorithm>

namespace lpa::detail {

PathTable::PathTable(const Graph& g, int max_len, std::size_t cap) {
  const auto n = g.vertex_count();
  by_length_.resize(1);
  for (VertexIndex v = 0; v < n; ++v) by_length_[0].push_back(trivial_path(v));
  std::size_t total = n;
  for (int l = 1; l <= max_len; ++l) {
    std::vector<Path> next;
    for (const auto& p : by_length_[l - 1]) {
      for (auto e : g.algebra_out_edges(path_range(g, p))) {
        Path q{p.source, p.edges};
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    if (total + next.size() > cap) {
      truncated_ = true;
      break;
    }
    total += next.size();
    std::sort(next.begin(), next.end());
    by_length_.push_back(std::move(next));
  }
  by_range_.resize(by_length_.size());
  for (std::size_t l = 0; l < by_length_.size(); ++l) {
    by_range_[l].resize(n);
    for (const auto& p : by_length_[l]) by_range_[l][path_range(g, p)].push_back(p);
  }
}

std::vector<Candidate> level_candidates(const Graph& g, const PathTable& table, int level, std::size_t limit) {
  std::vector<Candidate> out;
  if (level > table.max_len()) return out;
  for (int total = level; total <= 2 * level; ++total) {
    // |mu| is either level or total - level.
    std::vector<const Path*> mus;
    for (const auto& p : table.of_length(level)) mus.push_back(&p);
    if (total - level != level) {
      for (const auto& p : table.of_length(total - level)) mus.push_back(&p);
    }
    std::sort(mus.begin(), mus.end(), [](const Path* a, const Path* b) { return *a < *b; });
    for (const auto* mu : mus) {
      const int nu_len = total - static_cast<int>(mu->length());
      for (const auto& nu : table.ending_at(nu_len, path_range(g, *mu))) {
        if (out.size() == limit) return out;
        out.push_back({mu, &nu});
      }
    }
  }
  return out;
}

}  // namespace lpa::detail
