#pragma once

#include <vector>

#include "matroidkl/bigint.hpp"

namespace matroidkl {

// The two diagram families of the tableaux layer.
//
// SYT(a,i,b) is the straight shape with a first column of a cells, then i
// columns of height 2, then b extra cells extending the first row
// (a + 2i + b cells).
//
// SKYT(a,i,b) is the skew shape with a left column of a cells whose top two
// rows carry i-1 further height-2 columns and the bottom two cells of a right
// column of b cells rising b-2 cells above (a + 2i + b - 2 cells, i >= 1).
enum class ShapeKind { SYT, SKYT };

struct TableauShape {
    ShapeKind kind;
    int a = 0, i = 0, b = 0;
    bool barred = false;
};

struct Cell {
    int row, col;
    bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
};

// Cell list of a geometrically valid shape (row-major order). Degenerate
// parameter combinations that the counting conventions resolve to 0 or 1
// have no cell list; calling this for them throws BadParameters.
std::vector<Cell> shape_cells(const TableauShape& s);

Int syt_count(int a, int i, int b);
Int skyt_count(int a, int i, int b);
Int bsyt_count(int a, int i, int b);
Int bskyt_count(int a, int i, int b);
Int tableau_count(const TableauShape& s);

// All legal fillings; fillings[f][c] is the entry (1-based) placed in
// shape_cells(s)[c]. Respects the bar constraint when s.barred.
// Throws ShapeTooLarge above 22 cells.
std::vector<std::vector<int>> enumerate_fillings(const TableauShape& s);

}  // namespace matroidkl
