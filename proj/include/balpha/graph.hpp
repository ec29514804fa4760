#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "balpha/errors.hpp"

namespace balpha {

// Simple undirected graph on vertices {0..n-1}: no loops, no multi-edges.
// Immutable after construction; build through the factories below.
class Graph {
 public:
  static Graph from_edge_list(int n, std::vector<std::pair<int, int>> edge_list) {
    return Graph(n, std::move(edge_list));
  }

  static Graph complete(int n) {
    require_size(n >= 1, "complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
  }

  // Left part {0..a-1}, right part {a..a+b-1}.
  static Graph complete_bipartite(int a, int b) {
    require_size(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
  }

  // Consecutive vertex blocks, one per part; edges join distinct blocks.
  static Graph complete_multipartite(const std::vector<int>& parts) {
    require_size(!parts.empty(), "multipartite graph needs at least one part");
    int n = 0;
    for (int p : parts) {
      require_size(p >= 1, "every part must have size >= 1");
      n += p;
    }
    std::vector<int> block(n);
    int v = 0;
    for (std::size_t b = 0; b < parts.size(); ++b)
      for (int t = 0; t < parts[b]; ++t) block[v++] = static_cast<int>(b);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (block[i] != block[j]) e.emplace_back(i, j);
    return Graph(n, std::move(e));
  }

  static Graph cycle(int n) {
    require_size(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
  }

  static Graph path(int n) {
    require_size(n >= 1, "path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
  }

  // K_{1,leaves}: hub 0 joined to each of `leaves` leaves.
  static Graph star(int leaves) {
    require_size(leaves >= 1, "star needs at least one leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
  }

  // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
  static Graph petersen() {
    std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    for (int i = 0; i < 5; ++i) e.emplace_back(i, i + 5);
    for (int i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 2) % 5);
    return Graph(10, std::move(e));
  }

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }

  bool adjacent(int i, int j) const {
    return adj_[static_cast<std::size_t>(i) * n_ + j] != 0;
  }

  int degree(int v) const { return deg_[v]; }

  // Lexicographically sorted, each pair with first < second.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    out.reserve(deg_[v]);
    for (int u = 0; u < n_; ++u)
      if (adjacent(v, u)) out.push_back(u);
    return out;
  }

 private:
  Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    require_size(n >= 1, "graph needs at least one vertex");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    deg_.assign(n, 0);
    for (auto& [i, j] : edge_list) {
      if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (i == j) throw std::invalid_argument("loops are not allowed");
      if (i > j) std::swap(i, j);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    for (auto [i, j] : edges_) {
      adj_[static_cast<std::size_t>(i) * n_ + j] = 1;
      adj_[static_cast<std::size_t>(j) * n_ + i] = 1;
      ++deg_[i];
      ++deg_[j];
    }
  }

  static void require_size(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<int> deg_;
  std::vector<std::pair<int, int>> edges_;
};

struct DegreeProfile {
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) p.degrees[v] = g.degree(v);
  auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *lo;
  p.max_degree = *hi;
  return p;
}

inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u)
      if (g.adjacent(v, u) && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == n;
}

// Two-coloring by BFS; empty when some component has an odd cycle.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> queue = {s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int u = 0; u < n; ++u) {
        if (!g.adjacent(v, u)) continue;
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline bool is_regular(const Graph& g) {
  auto p = degree_profile(g);
  return p.min_degree == p.max_degree;
}

// Vertices are the edges of g in lexicographic order; two are adjacent when
// the underlying edges share an endpoint.
inline Graph line_graph(const Graph& g) {
  const auto& e = g.edges();
  const int m = static_cast<int>(e.size());
  if (m == 0) throw std::invalid_argument("line graph needs at least one edge");
  std::vector<std::pair<int, int>> le;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      bool share = e[a].first == e[b].first || e[a].first == e[b].second ||
                   e[a].second == e[b].first || e[a].second == e[b].second;
      if (share) le.emplace_back(a, b);
    }
  return Graph::from_edge_list(m, std::move(le));
}

// Dense integer matrix for the exact incidence-identity checks.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

inline IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("incompatible shapes");
  IntMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

inline IntMatrix transpose(const IntMatrix& x) {
  IntMatrix out(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

inline IntMatrix add(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("incompatible shapes");
  IntMatrix out = x;
  for (std::size_t t = 0; t < out.a.size(); ++t) out.a[t] += y.a[t];
  return out;
}

inline IntMatrix scale(const IntMatrix& x, long long s) {
  IntMatrix out = x;
  for (auto& v : out.a) v *= s;
  return out;
}

inline IntMatrix adjacency_int(const Graph& g) {
  const int n = g.vertex_count();
  IntMatrix m(n, n);
  for (auto [i, j] : g.edges()) {
    m.at(i, j) = 1;
    m.at(j, i) = 1;
  }
  return m;
}

// n x m vertex-edge incidence matrix; column order matches Graph::edges().
inline IntMatrix incidence_matrix(const Graph& g) {
  const int n = g.vertex_count();
  const int m = static_cast<int>(g.edges().size());
  IntMatrix out(n, m);
  for (int e = 0; e < m; ++e) {
    out.at(g.edges()[e].first, e) = 1;
    out.at(g.edges()[e].second, e) = 1;
  }
  return out;
}

// --- graph6 text format ------------------------------------------------------
//
// Header byte(s) encode n (n+63 for n <= 62, '~' + 3 six-bit chars up to
// 258047, '~~' + 6 six-bit chars beyond); then the upper triangle in column
// order (j = 1..n-1, i = 0..j-1), packed MSB-first into six-bit chars, each
// offset by 63, zero-padded to a whole char.

inline std::string encode_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else if (n <= (1LL << 36) - 1) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw std::invalid_argument("graph too large for graph6");
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(const std::string& text) {
  std::string s = text;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s.erase(0, header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.pop_back();
  if (s.empty()) throw ParseError("graph6: empty input");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("graph6: character out of range");

  std::size_t pos = 0;
  long long n = 0;
  auto take = [&]() -> long long {
    if (pos >= s.size()) throw ParseError("graph6: truncated size header");
    return s[pos++] - 63;
  };
  long long c0 = take();
  if (c0 < 63) {
    n = c0;
  } else {
    long long c1 = take();
    if (c1 < 63) {
      n = (c1 << 12) | (take() << 6) | take();
    } else {
      n = 0;
      for (int t = 0; t < 6; ++t) n = (n << 6) | take();
    }
  }
  if (n < 1) throw ParseError("graph6: graph must have at least one vertex");

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != need) throw ParseError("graph6: body length mismatch");

  std::vector<std::pair<int, int>> edges;
  long long bit_index = 0;
  for (std::size_t t = pos; t < s.size(); ++t) {
    int chunk = s[t] - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      int bit = (chunk >> b) & 1;
      if (bit_index >= bits) {
        if (bit != 0) throw ParseError("graph6: nonzero padding bits");
        continue;
      }
      if (bit) {
        // Invert column-order index -> (i, j).
        long long r = bit_index;
        int j = 1;
        while (r >= j) {
          r -= j;
          ++j;
        }
        edges.emplace_back(static_cast<int>(r), j);
      }
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), std::move(edges));
}

// --- edge-list text format ---------------------------------------------------
//
// First data line "n m", then m lines "i j"; '#' starts a comment.

inline Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> data;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) data.push_back(line);
  }
  if (data.empty()) throw ParseError("edge list: empty input");

  std::istringstream head(data[0]);
  long long n = 0, m = 0;
  if (!(head >> n >> m)) throw ParseError("edge list: bad header line");
  std::string extra;
  if (head >> extra) throw ParseError("edge list: bad header line");
  if (n < 1 || m < 0) throw ParseError("edge list: bad sizes");

  std::vector<std::pair<int, int>> edges;
  for (std::size_t t = 1; t < data.size(); ++t) {
    std::istringstream row(data[t]);
    long long i, j;
    if (!(row >> i >> j)) throw ParseError("edge list: bad edge line");
    if (row >> extra) throw ParseError("edge list: bad edge line");
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw ParseError("edge list: endpoint out of range");
    if (i == j) throw ParseError("edge list: loops are not allowed");
    edges.emplace_back(static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j)));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParseError("edge list: duplicate edge");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("edge list: edge count does not match header");
  return Graph::from_edge_list(static_cast<int>(n), std::move(edges));
}

inline std::string encode_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
  return out.str();
}

}  // namespace balpha
