// Copyright 2026 The isingorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISINGORDER_LATTICE_HPP
#define ISINGORDER_LATTICE_HPP

#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isingorder/common.hpp"

namespace isingorder {

enum class LatticeKind { Chain, SquareLadder, TriangleLadder, TriangleGrid };

inline std::string to_string(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::Chain: return "chain";
        case LatticeKind::SquareLadder: return "square_ladder";
        case LatticeKind::TriangleLadder: return "triangle_ladder";
        case LatticeKind::TriangleGrid: return "triangle_grid";
    }
    return "unknown";
}

inline LatticeKind parse_lattice_kind(const std::string &name) {
    if (name == "chain") return LatticeKind::Chain;
    if (name == "square_ladder") return LatticeKind::SquareLadder;
    if (name == "triangle_ladder") return LatticeKind::TriangleLadder;
    if (name == "triangle_grid") return LatticeKind::TriangleGrid;
    throw Error("unknown lattice kind '" + name + "'");
}

struct Edge {
    std::size_t i;
    std::size_t j;  // i < j
    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Undirected interaction graph over qubit sites. Construct through the
/// build_* functions; the edge list is deduplicated and normalised (i < j).
class LatticeGraph {
   public:
    LatticeGraph(LatticeKind kind, std::size_t n_sites, std::vector<Edge> edges, std::size_t rows = 0,
                 std::size_t cols = 0)
        : kind_(kind), n_sites_(n_sites), rows_(rows), cols_(cols) {
        std::set<Edge> seen;
        for (auto e : edges) {
            if (e.i == e.j) throw Error("self-loop at site " + std::to_string(e.i));
            if (e.i > e.j) std::swap(e.i, e.j);
            if (e.j >= n_sites) throw Error("edge references site " + std::to_string(e.j) + " >= n_sites");
            if (!seen.insert(e).second) throw Error("duplicate edge");
            edges_.push_back(e);
        }
        neighbors_.resize(n_sites);
        for (const auto &e : edges_) {
            neighbors_[e.i].push_back(e.j);
            neighbors_[e.j].push_back(e.i);
        }
    }

    LatticeKind kind() const { return kind_; }
    std::size_t n_sites() const { return n_sites_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<std::size_t> &neighbors(std::size_t site) const { return neighbors_.at(site); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool has_edge(std::size_t a, std::size_t b) const {
        if (a > b) std::swap(a, b);
        return std::find(edges_.begin(), edges_.end(), Edge{a, b}) != edges_.end();
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto &nb : neighbors_) d = std::max(d, nb.size());
        return d;
    }

    bool is_connected() const {
        if (n_sites_ == 0) return true;
        std::vector<bool> seen(n_sites_, false);
        std::queue<std::size_t> q;
        q.push(0);
        seen[0] = true;
        std::size_t count = 1;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto v : neighbors_[u])
                if (!seen[v]) {
                    seen[v] = true;
                    ++count;
                    q.push(v);
                }
        }
        return count == n_sites_;
    }

    /// BFS two-colouring; nullopt when an odd cycle exists.
    std::optional<std::vector<int>> two_coloring() const {
        std::vector<int> color(n_sites_, -1);
        for (std::size_t start = 0; start < n_sites_; ++start) {
            if (color[start] != -1) continue;
            color[start] = 0;
            std::queue<std::size_t> q;
            q.push(start);
            while (!q.empty()) {
                auto u = q.front();
                q.pop();
                for (auto v : neighbors_[u]) {
                    if (color[v] == -1) {
                        color[v] = 1 - color[u];
                        q.push(v);
                    } else if (color[v] == color[u]) {
                        return std::nullopt;
                    }
                }
            }
        }
        return color;
    }

    bool is_bipartite() const { return two_coloring().has_value(); }

    bool has_triangle() const {
        for (const auto &e : edges_)
            for (auto k : neighbors_[e.i])
                if (k != e.j && has_edge(k, e.j)) return true;
        return false;
    }

    std::size_t count_triangles() const {
        std::size_t count = 0;
        for (const auto &e : edges_)
            for (auto k : neighbors_[e.i])
                if (k > e.j && has_edge(k, e.j)) ++count;
        return count;
    }

   private:
    LatticeKind kind_;
    std::size_t n_sites_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> neighbors_;
};

/// Open chain 0-1-...-(n-1).
inline LatticeGraph build_chain(std::size_t n) {
    if (n < 2) throw Error("chain needs n >= 2, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return LatticeGraph(LatticeKind::Chain, n, std::move(edges));
}

/// Two-leg ladder of n/2 rungs. Rung k holds sites (2k, 2k+1); the legs are
/// wired serpentine, (2k, 2k+3) and (2k+1, 2k+2), so index order walks the
/// ladder rung-leg-rung and index parity is a proper two-colouring.
inline LatticeGraph build_square_ladder(std::size_t n) {
    if (n < 4 || n % 2 != 0) throw Error("square ladder needs even n >= 4, got " + std::to_string(n));
    std::vector<Edge> edges;
    const std::size_t rungs = n / 2;
    for (std::size_t k = 0; k < rungs; ++k) edges.push_back({2 * k, 2 * k + 1});
    for (std::size_t k = 0; k + 1 < rungs; ++k) {
        edges.push_back({2 * k, 2 * k + 3});
        edges.push_back({2 * k + 1, 2 * k + 2});
    }
    return LatticeGraph(LatticeKind::SquareLadder, n, std::move(edges));
}

/// Triangulated two-leg ladder: the serpentine square ladder (rungs
/// (2k, 2k+1), legs (2k, 2k+3) and (2k+1, 2k+2)) with one diagonal (2k, 2k+2)
/// per plaquette. Odd n leaves a final half rung. Index order still walks
/// rung-leg-rung, so every (i, i+1) is a bond; the diagonals close triangles.
inline LatticeGraph build_triangle_ladder(std::size_t n) {
    if (n < 3) throw Error("triangle ladder needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    for (std::size_t i = 0; i + 2 < n; i += 2) edges.push_back({i, i + 2});
    for (std::size_t i = 0; i + 3 < n; i += 2) edges.push_back({i, i + 3});
    return LatticeGraph(LatticeKind::TriangleLadder, n, std::move(edges));
}

/// rows x cols triangular patch, row-major sites. Each unit square gets the
/// (r,c)-(r+1,c+1) diagonal.
inline LatticeGraph build_triangle_grid(std::size_t rows, std::size_t cols) {
    if (rows < 2 || cols < 2)
        throw Error("triangle grid needs rows, cols >= 2, got " + std::to_string(rows) + "x" + std::to_string(cols));
    auto at = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c + 1 < cols; ++c) edges.push_back({at(r, c), at(r, c + 1)});
    for (std::size_t r = 0; r + 1 < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) edges.push_back({at(r, c), at(r + 1, c)});
    for (std::size_t r = 0; r + 1 < rows; ++r)
        for (std::size_t c = 0; c + 1 < cols; ++c) edges.push_back({at(r, c), at(r + 1, c + 1)});
    return LatticeGraph(LatticeKind::TriangleGrid, rows * cols, std::move(edges), rows, cols);
}

/// Builds the lattice of a given kind with n sites. For triangle grids the
/// row count is fixed and n must be a multiple of it.
inline LatticeGraph build_lattice(LatticeKind kind, std::size_t n, std::size_t grid_rows = 3) {
    switch (kind) {
        case LatticeKind::Chain: return build_chain(n);
        case LatticeKind::SquareLadder: return build_square_ladder(n);
        case LatticeKind::TriangleLadder: return build_triangle_ladder(n);
        case LatticeKind::TriangleGrid:
            if (grid_rows == 0 || n % grid_rows != 0)
                throw Error("triangle grid with " + std::to_string(grid_rows) + " rows cannot hold " +
                            std::to_string(n) + " sites");
            return build_triangle_grid(grid_rows, n / grid_rows);
    }
    throw Error("unknown lattice kind");
}

struct SpinPattern {
    std::string name;
    SpinString spins;
};

inline SpinString flipped(const SpinString &s) {
    SpinString out(s.size());
    std::transform(s.begin(), s.end(), out.begin(), [](Spin v) { return static_cast<Spin>(-v); });
    return out;
}

inline SpinString af1_pattern(std::size_t n) {
    SpinString s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (i % 2 == 0) ? Spin{1} : Spin{-1};
    return s;
}

/// AF1 and AF2 for every lattice. Triangle grids also get stripe
/// ("zigzag-k", uniform along lattice direction k) and three-sublattice
/// ("graphene-k", sublattice k minority) templates, each with its flip.
inline std::vector<SpinPattern> reference_patterns(const LatticeGraph &lattice) {
    const std::size_t n = lattice.n_sites();
    std::vector<SpinPattern> out;
    out.push_back({"AF1", af1_pattern(n)});
    out.push_back({"AF2", flipped(af1_pattern(n))});
    if (lattice.kind() != LatticeKind::TriangleGrid) return out;

    const std::size_t rows = lattice.rows(), cols = lattice.cols();
    auto add_pair = [&](const std::string &name, auto &&spin_at) {
        SpinString s(n);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) s[r * cols + c] = spin_at(r, c);
        out.push_back({name, s});
        out.push_back({name + "/flip", flipped(s)});
    };
    auto alt = [](std::size_t k) { return k % 2 == 0 ? Spin{1} : Spin{-1}; };
    // Directions: 0 = along rows (c+1), 1 = along columns (r+1), 2 = diagonal (r+1, c+1).
    add_pair("zigzag-0", [&](std::size_t r, std::size_t) { return alt(r); });
    add_pair("zigzag-1", [&](std::size_t, std::size_t c) { return alt(c); });
    add_pair("zigzag-2", [&](std::size_t r, std::size_t c) { return alt(r + cols - c); });
    for (std::size_t k = 0; k < 3; ++k)
        add_pair("graphene-" + std::to_string(k),
                 [&](std::size_t r, std::size_t c) { return (r + c) % 3 == k ? Spin{-1} : Spin{1}; });
    return out;
}

}  // namespace isingorder

#endif  // ISINGORDER_LATTICE_HPP
