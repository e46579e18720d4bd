#pragma once

// Brute-force ground truth: exhaustive enumeration of fixed polyominoes on
// the square lattice and the shape predicates used to classify them.

#include <algorithm>
#include <compare>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "common.hpp"
#include "core.hpp"

namespace rowconvex {

struct Cell {
    int row = 0;  // grows upward
    int col = 0;  // grows rightward
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Maximal horizontal run of cells in one row.
struct RowRun {
    int row = 0;
    int offset = 0;  // leftmost column
    unsigned length = 1;
    friend bool operator==(const RowRun&, const RowRun&) = default;
};

/// Fixed polyomino: a non-empty 4-connected cell set, translated so the
/// minimum row and column are 0, cells sorted.
class Polyomino {
public:
    explicit Polyomino(std::vector<Cell> cells) : cells_(std::move(cells)) {
        if (cells_.empty()) throw std::invalid_argument("Polyomino: empty cell set");
        normalize();
        if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
            throw std::invalid_argument("Polyomino: duplicate cell");
        }
        if (!connected()) throw std::invalid_argument("Polyomino: cells are not 4-connected");
    }

    /// Parses text art: '#' is a cell, anything else empty; the first line
    /// is the top row.
    static Polyomino from_text(const std::string& art) {
        std::vector<std::string> lines;
        std::istringstream in(art);
        for (std::string line; std::getline(in, line);) {
            if (!line.empty()) lines.push_back(line);
        }
        std::vector<Cell> cells;
        const int height = static_cast<int>(lines.size());
        for (int i = 0; i < height; ++i) {
            for (int j = 0; j < static_cast<int>(lines[i].size()); ++j) {
                if (lines[i][j] == '#') cells.push_back({height - 1 - i, j});
            }
        }
        return Polyomino(std::move(cells));
    }

    const std::vector<Cell>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    int height() const noexcept { return cells_.back().row + 1; }
    int width() const noexcept {
        int w = 0;
        for (const auto& c : cells_) w = std::max(w, c.col + 1);
        return w;
    }

    bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

    /// '#' for cells, '.' for empty, top row first, newline after each row.
    std::string to_text() const {
        const int h = height(), w = width();
        std::string out;
        for (int r = h - 1; r >= 0; --r) {
            for (int c = 0; c < w; ++c) out += contains({r, c}) ? '#' : '.';
            out += '\n';
        }
        return out;
    }

    friend bool operator==(const Polyomino&, const Polyomino&) = default;
    friend auto operator<=>(const Polyomino& a, const Polyomino& b) { return a.cells_ <=> b.cells_; }

    /// Normalizes without checking connectivity or duplicates; for callers
    /// that construct valid animals by design.
    static Polyomino unchecked(std::vector<Cell> cells) {
        Polyomino p;
        p.cells_ = std::move(cells);
        p.normalize();
        return p;
    }

private:
    Polyomino() = default;

    void normalize() {
        int min_r = cells_.front().row, min_c = cells_.front().col;
        for (const auto& c : cells_) {
            min_r = std::min(min_r, c.row);
            min_c = std::min(min_c, c.col);
        }
        for (auto& c : cells_) {
            c.row -= min_r;
            c.col -= min_c;
        }
        std::sort(cells_.begin(), cells_.end());
    }

    bool connected() const {
        std::vector<char> seen(cells_.size(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const Cell c = cells_[stack.back()];
            stack.pop_back();
            for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1},
                            Cell{c.row, c.col - 1}}) {
                auto it = std::lower_bound(cells_.begin(), cells_.end(), nb);
                if (it == cells_.end() || *it != nb) continue;
                const auto idx = static_cast<std::size_t>(it - cells_.begin());
                if (!seen[idx]) {
                    seen[idx] = 1;
                    ++reached;
                    stack.push_back(idx);
                }
            }
        }
        return reached == cells_.size();
    }

    std::vector<Cell> cells_;
};

/// All maximal horizontal runs, by row then column.
inline std::vector<RowRun> row_runs(const Polyomino& p) {
    std::vector<RowRun> runs;
    for (const auto& c : p.cells()) {
        if (!runs.empty() && runs.back().row == c.row &&
            runs.back().offset + static_cast<int>(runs.back().length) == c.col) {
            ++runs.back().length;
        } else {
            runs.push_back({c.row, c.col, 1});
        }
    }
    return runs;
}

inline bool is_row_convex(const Polyomino& p) {
    const auto& cells = p.cells();
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].row == cells[i - 1].row && cells[i].col != cells[i - 1].col + 1) return false;
    }
    return true;
}

inline Polyomino reflect_vertical(const Polyomino& p) {
    std::vector<Cell> out;
    out.reserve(p.size());
    for (const auto& c : p.cells()) out.push_back({c.row, -c.col});
    return Polyomino(std::move(out));
}

/// Quarter turn clockwise: (row, col) -> (-col, row).
inline Polyomino rotate90(const Polyomino& p) {
    std::vector<Cell> out;
    out.reserve(p.size());
    for (const auto& c : p.cells()) out.push_back({-c.col, c.row});
    return Polyomino(std::move(out));
}

inline bool is_column_convex(const Polyomino& p) {
    std::vector<Cell> by_column;
    by_column.reserve(p.size());
    for (const auto& c : p.cells()) by_column.push_back({c.col, c.row});
    std::sort(by_column.begin(), by_column.end());
    for (std::size_t i = 1; i < by_column.size(); ++i) {
        if (by_column[i].row == by_column[i - 1].row && by_column[i].col != by_column[i - 1].col + 1) {
            return false;
        }
    }
    return true;
}

/// True iff every empty cell of the bounding box can reach the outside
/// through empty cells. Flood fill from the frame of a box padded by one.
inline bool is_hole_free(const Polyomino& p) {
    const int h = p.height() + 2, w = p.width() + 2;
    std::vector<char> grid(static_cast<std::size_t>(h * w), 0);  // 1 = cell, 2 = outside
    auto at = [&](int r, int c) -> char& { return grid[static_cast<std::size_t>(r * w + c)]; };
    for (const auto& c : p.cells()) at(c.row + 1, c.col + 1) = 1;
    std::vector<std::pair<int, int>> stack{{0, 0}};
    at(0, 0) = 2;
    while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        const int dr[] = {1, -1, 0, 0}, dc[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const int nr = r + dr[k], nc = c + dc[k];
            if (nr < 0 || nc < 0 || nr >= h || nc >= w || at(nr, nc) != 0) continue;
            at(nr, nc) = 2;
            stack.emplace_back(nr, nc);
        }
    }
    return std::find(grid.begin(), grid.end(), 0) == grid.end();
}

/// Calls visit(p) for every fixed polyomino of area n exactly once
/// (Redelmeier's growth search). Cells live in the half plane row > 0 or
/// (row == 0 and col >= 0) with the first cell at the origin, so every
/// animal is generated from its lowest-leftmost cell only; the "reached"
/// marks keep each cell from being offered twice along one branch. If
/// visit returns bool, false stops the search.
template <class F>
void for_each_fixed_polyomino(long long n, F&& visit, const Limits& limits = {}) {
    require_positive(n, "enumerate_fixed_polyominoes");
    if (n > static_cast<long long>(limits.oracle)) {
        throw resource_limit_error("oracle enumeration", static_cast<unsigned>(n), limits.oracle);
    }
    const int size = static_cast<int>(n);
    const int width = 2 * size + 1;
    auto index = [width, size](int row, int col) { return row * width + (col + size); };
    std::vector<char> reached(static_cast<std::size_t>((size + 1) * width), 0);
    std::vector<Cell> current;
    current.reserve(static_cast<std::size_t>(size));
    bool stop = false;

    auto emit = [&] {
        const Polyomino p = Polyomino::unchecked(current);
        if constexpr (std::is_same_v<std::invoke_result_t<F&, const Polyomino&>, bool>) {
            if (!visit(p)) stop = true;
        } else {
            visit(p);
        }
    };

    auto grow = [&](auto&& self, std::vector<Cell> untried) -> void {
        while (!untried.empty() && !stop) {
            const Cell c = untried.back();
            untried.pop_back();
            current.push_back(c);
            if (static_cast<int>(current.size()) == size) {
                emit();
            } else {
                std::vector<Cell> next = untried;
                const std::size_t fresh_from = next.size();
                for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1},
                                Cell{c.row, c.col - 1}}) {
                    if (nb.row < 0 || (nb.row == 0 && nb.col < 0)) continue;
                    auto& mark = reached[static_cast<std::size_t>(index(nb.row, nb.col))];
                    if (mark) continue;
                    mark = 1;
                    next.push_back(nb);
                }
                const std::vector<Cell> fresh(next.begin() + static_cast<std::ptrdiff_t>(fresh_from), next.end());
                self(self, std::move(next));
                for (Cell nb : fresh) reached[static_cast<std::size_t>(index(nb.row, nb.col))] = 0;
            }
            current.pop_back();
        }
    };

    reached[static_cast<std::size_t>(index(0, 0))] = 1;
    grow(grow, std::vector<Cell>{Cell{0, 0}});
}

inline std::vector<Polyomino> enumerate_fixed_polyominoes(long long n, const Limits& limits = {}) {
    std::vector<Polyomino> out;
    for_each_fixed_polyomino(n, [&](const Polyomino& p) { out.push_back(p); }, limits);
    return out;
}

/// Generate-and-canonicalize: grows every area n-1 shape by one neighbour
/// and deduplicates. Slow; used only to cross-check the growth search.
inline std::set<Polyomino> enumerate_fixed_polyominoes_naive(long long n, unsigned limit = 8) {
    require_positive(n, "enumerate_fixed_polyominoes_naive");
    if (n > static_cast<long long>(limit)) {
        throw resource_limit_error("naive oracle enumeration", static_cast<unsigned>(n), limit);
    }
    std::set<Polyomino> level{Polyomino({Cell{0, 0}})};
    for (long long k = 2; k <= n; ++k) {
        std::set<Polyomino> next;
        for (const auto& p : level) {
            for (const auto& c : p.cells()) {
                for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1},
                                Cell{c.row, c.col - 1}}) {
                    if (p.contains(nb)) continue;
                    std::vector<Cell> cells = p.cells();
                    cells.push_back(nb);
                    next.insert(Polyomino(std::move(cells)));
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

inline BigInt count_row_convex_oracle(long long n, const Limits& limits = {}) {
    std::uint64_t count = 0;
    for_each_fixed_polyomino(n, [&](const Polyomino& p) { count += is_row_convex(p) ? 1 : 0; }, limits);
    return count;
}

inline BigInt count_column_convex_oracle(long long n, const Limits& limits = {}) {
    std::uint64_t count = 0;
    for_each_fixed_polyomino(n, [&](const Polyomino& p) { count += is_column_convex(p) ? 1 : 0; }, limits);
    return count;
}

struct ReflectionCount {
    BigInt total;      // S(n): row-convex shapes
    BigInt distinct;   // D(n): classes under vertical-axis reflection
    BigInt symmetric;  // F(n): shapes equal to their mirror image
};

inline ReflectionCount count_distinct_up_to_reflection(long long n, const Limits& limits = {}) {
    std::set<Polyomino> classes;
    std::uint64_t total = 0, symmetric = 0;
    for_each_fixed_polyomino(
        n,
        [&](const Polyomino& p) {
            if (!is_row_convex(p)) return;
            ++total;
            Polyomino mirror = reflect_vertical(p);
            if (mirror == p) ++symmetric;
            classes.insert(std::min(p, mirror));
        },
        limits);
    return {total, BigInt(classes.size()), symmetric};
}

/// Text art for every row-convex shape of area n, blank line between shapes.
inline std::string dump_row_convex_shapes(long long n, const Limits& limits = {}) {
    std::string out;
    for_each_fixed_polyomino(
        n,
        [&](const Polyomino& p) {
            if (!is_row_convex(p)) return;
            if (!out.empty()) out += '\n';
            out += p.to_text();
        },
        limits);
    return out;
}

}  // namespace rowconvex
