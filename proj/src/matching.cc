#include "hopdom/matching.h"

#include <algorithm>
#include <string>

#include "hopdom/error.h"

namespace hopdom {

std::string_view MatchingClassName(MatchingClass c) {
  switch (c) {
    case MatchingClass::kPerfect: return "perfect";
    case MatchingClass::kNearPerfect: return "near_perfect";
    case MatchingClass::kNeither: return "neither";
  }
  return "?";
}

MatchingClass ClassifyMatching(int n, int size) {
  if (2 * size == n) return MatchingClass::kPerfect;
  if (2 * size == n - 1) return MatchingClass::kNearPerfect;
  return MatchingClass::kNeither;
}

namespace {

constexpr int kNone = -1;

// Edmonds' algorithm with explicit blossom bases, O(V^3).
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.order()),
        mate_(n_, kNone),
        parent_(n_),
        base_(n_),
        in_tree_(n_),
        in_blossom_(n_) {}

  std::vector<int> Run() {
    // Greedy start; augmentation makes it maximum.
    for (Vertex u = 0; u < n_; ++u) {
      if (mate_[u] != kNone) continue;
      for (Vertex v : g_.neighbors(u)) {
        if (mate_[v] == kNone) {
          mate_[u] = v;
          mate_[v] = u;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != kNone) continue;
      Vertex end = FindAugmentingPath(root);
      while (end != kNone) {
        const Vertex prev = parent_[end];
        const Vertex next = mate_[prev];
        mate_[end] = prev;
        mate_[prev] = end;
        end = next;
      }
    }
    return mate_;
  }

 private:
  Vertex LowestCommonBase(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkPath(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex FindAugmentingPath(Vertex root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    queue_.clear();
    queue_.push_back(root);
    in_tree_[root] = 1;
    for (size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          // odd cycle: contract the blossom
          const Vertex b = LowestCommonBase(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          MarkPath(v, b, to);
          MarkPath(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue_.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          in_tree_[mate_[to]] = 1;
          queue_.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<Vertex> queue_;
};

std::vector<Edge> PairsFromMates(const Graph& g, const std::vector<int>& mate) {
  std::vector<Edge> pairs;
  std::vector<char> used(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    const Vertex v = mate[u];
    if (v == kNone || v < u) continue;
    if (mate[v] != u || !g.adjacent(u, v) || used[u] || used[v]) {
      throw Error(ErrorCode::kInternal, "matching failed consistency check");
    }
    used[u] = used[v] = 1;
    pairs.emplace_back(u, v);
  }
  return pairs;
}

}  // namespace

MatchingResult MaxMatching(const Graph& g) {
  MatchingResult result;
  result.pairs = PairsFromMates(g, Blossom(g).Run());
  result.size = static_cast<int>(result.pairs.size());
  result.classification = ClassifyMatching(g.order(), result.size);
  return result;
}

HopMatchingResult HopMatching(const Graph& g) {
  const MatchingResult m = MaxMatching(Dist2Graph(g));
  HopMatchingResult result;
  for (auto [u, v] : m.pairs) {
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    Vertex middle = kNone;
    // both lists are sorted; first common element is the lowest index
    auto it = std::find_first_of(nu.begin(), nu.end(), nv.begin(), nv.end());
    if (it != nu.end()) middle = *it;
    if (middle == kNone || g.adjacent(u, v)) {
      throw Error(ErrorCode::kInternal, "hop pair without a two-edge path");
    }
    result.paths.push_back({u, middle, v});
  }
  result.size = m.size;
  result.classification = m.classification;
  return result;
}

}  // namespace hopdom
