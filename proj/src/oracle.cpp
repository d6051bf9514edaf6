#include "hamlift/oracle.hpp"

#include <deque>
#include <stdexcept>

namespace hamlift {
namespace {

class Searcher {
 public:
  Searcher(const Graph& g, long long budget, bool want_cycle)
      : g_(g),
        budget_(budget),
        want_cycle_(want_cycle),
        visited_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  // Exhausts the space of paths/cycles starting at `root`; returns true on a
  // hit, with the sequence in path_. exceeded_ flags a budget stop.
  bool search_from(int root) {
    std::fill(visited_.begin(), visited_.end(), 0);
    visited_[static_cast<std::size_t>(root)] = 1;
    path_ = {root};
    anchor_ = root;
    return extend();
  }

  bool exceeded() const { return exceeded_; }
  long long expansions() const { return expansions_; }
  const std::vector<int>& path() const { return path_; }

 private:
  bool extend() {
    if (exceeded_) return false;
    if (++expansions_ > budget_) {
      exceeded_ = true;
      return false;
    }
    int cur = path_.back();
    if (static_cast<int>(path_.size()) == g_.vertex_count())
      return want_cycle_ ? g_.has_edge(cur, anchor_) : true;
    if (!viable(cur)) return false;
    for (int w : g_.neighbors(cur)) {
      if (visited_[static_cast<std::size_t>(w)]) continue;
      visited_[static_cast<std::size_t>(w)] = 1;
      path_.push_back(w);
      if (extend()) return true;
      path_.pop_back();
      visited_[static_cast<std::size_t>(w)] = 0;
      if (exceeded_) return false;
    }
    return false;
  }

  // Sound pruning only: a branch is cut just when no completion can exist.
  bool viable(int cur) {
    const int n = g_.vertex_count();
    int remaining = 0;
    for (int v = 0; v < n; ++v)
      if (!visited_[static_cast<std::size_t>(v)]) ++remaining;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{cur};
    seen[static_cast<std::size_t>(cur)] = 1;
    int reached = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g_.neighbors(v)) {
        if (seen[static_cast<std::size_t>(w)] || visited_[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
    if (reached != remaining) return false;
    int tight = 0;  // unvisited vertices with at most one free incidence
    bool anchor_open = !want_cycle_;
    for (int v = 0; v < n; ++v) {
      if (visited_[static_cast<std::size_t>(v)]) continue;
      int avail = 0;
      for (int w : g_.neighbors(v)) {
        if (w == cur || !visited_[static_cast<std::size_t>(w)]) ++avail;
        if (want_cycle_ && w == anchor_) {
          ++avail;
          anchor_open = true;
        }
      }
      if (want_cycle_) {
        if (avail < 2) return false;
      } else {
        if (avail == 0) return false;
        if (avail == 1 && ++tight > 1) return false;
      }
    }
    return anchor_open;
  }

  const Graph& g_;
  long long budget_;
  bool want_cycle_;
  std::vector<char> visited_;
  std::vector<int> path_;
  int anchor_ = 0;
  long long expansions_ = 0;
  bool exceeded_ = false;
};

}  // namespace

OracleResult find_hamilton_cycle(const Graph& g, long long budget) {
  if (g.vertex_count() < 3) return {OracleStatus::none_exists, {}, 0};
  Searcher s(g, budget, true);
  if (s.search_from(0)) return {OracleStatus::found, s.path(), s.expansions()};
  return {s.exceeded() ? OracleStatus::budget_exceeded : OracleStatus::none_exists,
          {},
          s.expansions()};
}

OracleResult find_hamilton_path(const Graph& g, long long budget) {
  Searcher s(g, budget, false);
  long long total = 0;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (s.search_from(start))
      return {OracleStatus::found, s.path(), s.expansions()};
    total = s.expansions();
    if (s.exceeded()) return {OracleStatus::budget_exceeded, {}, total};
  }
  return {OracleStatus::none_exists, {}, total};
}

}  // namespace hamlift
