// Copyright 2026 The substoch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "substoch/completion.hpp"

#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace substoch {

namespace {

// Edmonds-Karp with rational capacities. The number of augmentations is
// bounded combinatorially, so exactness does not threaten termination.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  /// Returns the index of the forward arc within adj_[from].
  int add_arc(int from, int to, Rational capacity) {
    adj_[from].push_back({to, std::move(capacity), static_cast<int>(adj_[to].size())});
    adj_[to].push_back({from, Rational(0), static_cast<int>(adj_[from].size()) - 1});
    return static_cast<int>(adj_[from].size()) - 1;
  }

  Rational max_flow(int source, int sink) {
    Rational total(0);
    while (true) {
      std::vector<std::pair<int, int>> parent(adj_.size(), {-1, -1});
      std::deque<int> queue{source};
      parent[source] = {source, -1};
      while (!queue.empty() && parent[sink].first == -1) {
        int v = queue.front();
        queue.pop_front();
        for (size_t e = 0; e < adj_[v].size(); ++e) {
          const Arc& arc = adj_[v][e];
          if (parent[arc.to].first == -1 && sgn(arc.capacity) > 0) {
            parent[arc.to] = {v, static_cast<int>(e)};
            queue.push_back(arc.to);
          }
        }
      }
      if (parent[sink].first == -1) break;

      Rational bottleneck(-1);
      for (int v = sink; v != source;) {
        auto [u, e] = parent[v];
        if (bottleneck < 0 || adj_[u][e].capacity < bottleneck) bottleneck = adj_[u][e].capacity;
        v = u;
      }
      for (int v = sink; v != source;) {
        auto [u, e] = parent[v];
        Arc& arc = adj_[u][e];
        arc.capacity -= bottleneck;
        adj_[arc.to][arc.rev].capacity += bottleneck;
        v = u;
      }
      total += bottleneck;
    }
    return total;
  }

  /// Flow pushed through the arc added as the `index`-th outgoing arc of
  /// `from`; equals the reverse arc's residual capacity.
  Rational flow_on(int from, int index) const {
    const Arc& arc = adj_[from][index];
    return adj_[arc.to][arc.rev].capacity;
  }

 private:
  struct Arc {
    int to;
    Rational capacity;
    int rev;
  };
  std::vector<std::vector<Arc>> adj_;
};

}  // namespace

std::optional<SubstochMatrix> sub_defect_witness(const SubstochMatrix& a, int k) {
  int n = a.order();
  if (k < 0 || k > n) {
    throw std::invalid_argument("completion order k must lie in [0, n]");
  }
  int big = n + k;

  // Nodes: source, rows of the completion, columns, sink. Arcs connect
  // rows to columns only across the three free blocks; the given block
  // is fixed, so original rows reach only slack columns.
  int source = 0;
  auto row_node = [&](int i) { return 1 + i; };
  auto col_node = [&](int j) { return 1 + big + j; };
  int sink = 1 + 2 * big;
  FlowNetwork net(sink + 1);

  Rational required(0);
  for (int i = 0; i < big; ++i) {
    Rational supply = i < n ? Rational(1) - a.row_sum(i) : Rational(1);
    required += supply;
    if (sgn(supply) > 0) net.add_arc(source, row_node(i), supply);
  }
  for (int j = 0; j < big; ++j) {
    Rational demand = j < n ? Rational(1) - a.col_sum(j) : Rational(1);
    if (sgn(demand) > 0) net.add_arc(col_node(j), sink, demand);
  }

  // Remember arc indices so entry values can be read back after the run.
  std::vector<std::vector<std::pair<int, int>>> cell_arc(big);
  for (int i = 0; i < big; ++i) {
    for (int j = 0; j < big; ++j) {
      if (i < n && j < n) continue;
      cell_arc[i].emplace_back(j, net.add_arc(row_node(i), col_node(j), Rational(1)));
    }
  }

  if (net.max_flow(source, sink) != required) return std::nullopt;

  Grid g(big, std::vector<Rational>(big, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g[i][j] = a.at(i, j);
  }
  for (int i = 0; i < big; ++i) {
    for (const auto& [j, index] : cell_arc[i]) {
      g[i][j] = net.flow_on(row_node(i), index);
    }
  }

  SubstochMatrix completion{std::move(g)};
  for (int i = 0; i < big; ++i) {
    if (completion.row_sum(i) != 1 || completion.col_sum(i) != 1) {
      throw std::logic_error("completion is not doubly stochastic");
    }
  }
  return completion;
}

}  // namespace substoch
