#include "matroidkl/tableaux.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "matroidkl/errors.hpp"

namespace matroidkl {

namespace {

constexpr int kMaxCells = 22;

bool syt_valid(int a, int i, int b) {
    return a >= 1 && i >= 0 && b >= 0 && (i == 0 || a >= 2);
}

bool skyt_valid(int a, int i, int b) { return i >= 1 && a >= 2 && b >= 2; }

// Counts linear extensions of the cell poset (left and upper neighbors
// precede) with a given set of cells already placed first.
class ExtensionCounter {
  public:
    explicit ExtensionCounter(const std::vector<Cell>& cells) : cells_(cells) {
        int n = static_cast<int>(cells.size());
        if (n > kMaxCells)
            throw ShapeTooLarge("shape has " + std::to_string(n) + " cells");
        preds_.assign(n, 0);
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
                bool left = cells[d].row == cells[c].row &&
                            cells[d].col == cells[c].col - 1;
                bool up = cells[d].col == cells[c].col &&
                          cells[d].row == cells[c].row - 1;
                if (left || up) preds_[c] |= std::uint32_t{1} << d;
            }
        full_ = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
    }

    // mask: cells assumed already filled (must be downward closed).
    Int count(std::uint32_t mask) {
        if (mask == full_) return 1;
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        Int total = 0;
        for (int c = 0; c < static_cast<int>(cells_.size()); ++c) {
            std::uint32_t bit = std::uint32_t{1} << c;
            if ((mask & bit) == 0 && (preds_[c] & ~mask) == 0)
                total += count(mask | bit);
        }
        memo_.emplace(mask, total);
        return total;
    }

    // True when no other cell lists c as predecessor.
    bool is_maximal(int c) const {
        std::uint32_t bit = std::uint32_t{1} << c;
        for (auto p : preds_)
            if (p & bit) return false;
        return true;
    }

    std::uint32_t full() const { return full_; }
    const std::vector<std::uint32_t>& preds() const { return preds_; }

  private:
    const std::vector<Cell>& cells_;
    std::vector<std::uint32_t> preds_;
    std::uint32_t full_ = 0;
    std::unordered_map<std::uint32_t, Int> memo_;
};

int find_cell(const std::vector<Cell>& cells, int row, int col) {
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
        if (cells[c].row == row && cells[c].col == col) return c;
    return -1;
}

// Index of the lowest cell of a column.
int bottom_of_col(const std::vector<Cell>& cells, int col) {
    int best = -1;
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
        if (cells[c].col == col && (best < 0 || cells[c].row > cells[best].row))
            best = c;
    return best;
}

std::mutex memo_mutex;
std::map<std::tuple<int, int, int, int, int>, Int> count_memo;

Int count_uncached(const TableauShape& s);

Int count_cached(const TableauShape& s) {
    auto key = std::make_tuple(static_cast<int>(s.kind), s.a, s.i, s.b,
                               s.barred ? 1 : 0);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = count_memo.find(key);
        if (it != count_memo.end()) return it->second;
    }
    Int v = count_uncached(s);
    std::lock_guard<std::mutex> lock(memo_mutex);
    count_memo.emplace(key, v);
    return v;
}

Int count_uncached(const TableauShape& s) {
    if (s.b < 0 || s.i < 0 || s.a < 0) return 0;
    if (s.kind == ShapeKind::SKYT) {
        if (!s.barred && s.i == 0) return 1;  // paper convention
        if (s.barred && s.i == 0) return 0;   // paper convention
        if (!skyt_valid(s.a, s.i, s.b)) return 0;
        auto cells = shape_cells({ShapeKind::SKYT, s.a, s.i, s.b, false});
        ExtensionCounter ec(cells);
        if (!s.barred) return ec.count(0);
        // barred: entry 1 sits at the top of the left-most column
        int top_left = find_cell(cells, s.b - 2, 0);
        return ec.count(std::uint32_t{1} << top_left);
    }
    if (!syt_valid(s.a, s.i, s.b)) return 0;
    auto cells = shape_cells({ShapeKind::SYT, s.a, s.i, s.b, false});
    ExtensionCounter ec(cells);
    if (!s.barred) return ec.count(0);
    // barred: max entry at the bottom of the 1st or (i+1)-th column
    int c1 = bottom_of_col(cells, 0);
    int c2 = bottom_of_col(cells, s.i);
    // count fillings whose maximum lands on a given maximal cell by deleting it
    auto count_with_max_at = [&](int cand) -> Int {
        if (cand < 0 || !ec.is_maximal(cand)) return 0;
        std::vector<Cell> rest;
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            if (c != cand) rest.push_back(cells[c]);
        ExtensionCounter sub(rest);
        return sub.count(0);
    };
    Int total = count_with_max_at(c1);
    if (c2 != c1) total += count_with_max_at(c2);
    return total;
}

}  // namespace

std::vector<Cell> shape_cells(const TableauShape& s) {
    std::vector<Cell> cells;
    if (s.kind == ShapeKind::SYT) {
        if (!syt_valid(s.a, s.i, s.b))
            throw BadParameters("no SYT shape for (a,i,b)=(" +
                                std::to_string(s.a) + "," + std::to_string(s.i) +
                                "," + std::to_string(s.b) + ")");
        for (int c = 0; c <= s.i + s.b; ++c) cells.push_back({0, c});
        if (s.a >= 2)
            for (int c = 0; c <= s.i; ++c) cells.push_back({1, c});
        for (int r = 2; r < s.a; ++r) cells.push_back({r, 0});
        return cells;
    }
    if (!skyt_valid(s.a, s.i, s.b))
        throw BadParameters("no SKYT shape for (a,i,b)=(" + std::to_string(s.a) +
                            "," + std::to_string(s.i) + "," +
                            std::to_string(s.b) + ")");
    for (int r = 0; r <= s.b - 3; ++r) cells.push_back({r, s.i});
    for (int r = s.b - 2; r <= s.b - 1; ++r)
        for (int c = 0; c <= s.i; ++c) cells.push_back({r, c});
    for (int r = s.b; r <= s.b + s.a - 3; ++r) cells.push_back({r, 0});
    return cells;
}

Int syt_count(int a, int i, int b) {
    return count_cached({ShapeKind::SYT, a, i, b, false});
}
Int skyt_count(int a, int i, int b) {
    return count_cached({ShapeKind::SKYT, a, i, b, false});
}
Int bsyt_count(int a, int i, int b) {
    return count_cached({ShapeKind::SYT, a, i, b, true});
}
Int bskyt_count(int a, int i, int b) {
    return count_cached({ShapeKind::SKYT, a, i, b, true});
}
Int tableau_count(const TableauShape& s) { return count_cached(s); }

std::vector<std::vector<int>> enumerate_fillings(const TableauShape& s) {
    std::vector<std::vector<int>> out;
    TableauShape plain = s;
    plain.barred = false;
    if (s.kind == ShapeKind::SKYT && !skyt_valid(s.a, s.i, s.b)) return out;
    if (s.kind == ShapeKind::SYT && !syt_valid(s.a, s.i, s.b)) return out;
    auto cells = shape_cells(plain);
    int n = static_cast<int>(cells.size());
    ExtensionCounter ec(cells);
    std::vector<int> entries(n, 0);
    std::uint32_t mask = 0;
    auto bar_ok = [&]() {
        if (!s.barred) return true;
        if (s.kind == ShapeKind::SKYT) {
            int top_left = find_cell(cells, s.b - 2, 0);
            return entries[top_left] == 1;
        }
        int c1 = bottom_of_col(cells, 0);
        int c2 = bottom_of_col(cells, s.i);
        return entries[c1] == n || entries[c2] == n;
    };
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            if (bar_ok()) out.push_back(entries);
            return;
        }
        for (int c = 0; c < n; ++c) {
            std::uint32_t bit = std::uint32_t{1} << c;
            if ((mask & bit) == 0 && (ec.preds()[c] & ~mask) == 0) {
                entries[c] = next;
                mask |= bit;
                self(self, next + 1);
                mask &= ~bit;
                entries[c] = 0;
            }
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace matroidkl
