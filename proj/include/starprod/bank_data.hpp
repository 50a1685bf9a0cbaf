#pragma once

#include <utility>

namespace starprod::detail {

// Known-good star-coloring patterns for the small cycle/path products that
// seed every stitched and tiled construction. Each entry is a pattern CSV
// (same format as the on-disk bank); every one is re-verified on load, so a
// bad cell here cannot propagate silently. Entries marked "corrected" carry
// minimal repairs where the original matrices contained bicolored paths;
// the repaired cells are noted inline.
//
// Naming: "CmxCn" colors the tensor product of the m-cycle and the n-cycle,
// "CmxPn" the m-cycle and the n-path. Stitching compatibility relied on by
// the constructions:
//   - C3xC4 / C3xC7 / C3xC9 share their first three columns,
//   - C4xC4 / C4xC5, C5xC4 / C5xC5, C7xC4 / C7xC5 share their first three
//     columns,
//   - C4xC11 / C5xC11 and C4xP3 / C5xP3 share their first three rows,
//   - C4xC4 / C5xC4 and C4xC5 / C5xC5 share their first two rows and their
//     last row (block layouts).
inline constexpr std::pair<const char*, const char*> builtin_patterns[] = {
    {"C3xC4",
     "# rows=3 cols=4 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1\n"
     "3,2,2,3\n"
     "5,4,4,5\n"},
    // corrected: cell (2,0) 5 -> 4, the unique single-cell repair
    {"C3xC6",
     "# rows=3 cols=6 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,2,2,2\n"
     "3,2,4,4,1,3\n"
     "4,5,3,3,5,4\n"},
    {"C3xC7",
     "# rows=3 cols=7 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1,1,2,2\n"
     "3,2,2,3,3,4,3\n"
     "5,4,4,5,5,4,5\n"},
    {"C3xC9",
     "# rows=3 cols=9 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1,2,1,1,1,4\n"
     "3,2,2,3,3,3,2,2,3\n"
     "5,4,4,5,5,4,4,5,5\n"},
    {"C3xC10",
     "# rows=3 cols=10 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1,1,1,2,2,3,3\n"
     "4,4,2,2,4,4,3,5,5,2\n"
     "5,5,3,3,5,5,3,4,4,2\n"},
    {"C4xC4",
     "# rows=4 cols=4 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1\n"
     "3,2,4,5\n"
     "1,1,1,1\n"
     "5,4,2,3\n"},
    {"C4xC5",
     "# rows=4 cols=5 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1,2\n"
     "3,2,4,5,5\n"
     "1,1,1,1,4\n"
     "5,4,2,3,3\n"},
    {"C4xC6",
     "# rows=4 cols=6 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1,2,2\n"
     "3,2,2,3,3,3\n"
     "1,1,1,1,4,4\n"
     "5,4,4,5,5,5\n"},
    {"C4xC7",
     "# rows=4 cols=7 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1,1,1,2\n"
     "3,3,2,2,3,3,2\n"
     "1,1,1,1,1,1,4\n"
     "5,5,4,4,5,5,4\n"},
    {"C4xC11",
     "# rows=4 cols=11 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "4,3,5,2,4,3,5,2,4,3,5\n"
     "1,1,1,1,1,1,1,1,1,1,2\n"
     "3,4,2,5,3,4,2,5,3,4,2\n"
     "1,1,1,1,1,1,1,1,1,1,5\n"},
    {"C5xC4",
     "# rows=5 cols=4 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1\n"
     "3,2,4,5\n"
     "1,1,4,1\n"
     "2,3,5,3\n"
     "5,4,2,3\n"},
    {"C5xC5",
     "# rows=5 cols=5 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1,2\n"
     "3,2,4,5,5\n"
     "1,1,4,2,4\n"
     "2,3,5,1,4\n"
     "5,4,2,3,3\n"},
    {"C5xC6",
     "# rows=5 cols=6 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1,2,3\n"
     "2,2,3,4,5,4\n"
     "3,4,3,2,5,4\n"
     "1,5,5,1,3,4\n"
     "2,3,4,4,2,5\n"},
    {"C5xC7",
     "# rows=5 cols=7 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1,1,1,2\n"
     "3,4,2,5,3,4,2\n"
     "1,4,1,1,3,1,1\n"
     "2,3,5,2,4,2,5\n"
     "4,3,5,2,4,3,5\n"},
    {"C5xC11",
     "# rows=5 cols=11 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "4,3,5,2,4,3,5,2,4,3,5\n"
     "1,1,1,1,1,1,1,1,1,1,2\n"
     "3,4,2,5,3,4,2,5,3,4,2\n"
     "1,4,1,1,3,1,1,1,3,1,1\n"
     "2,3,5,2,4,2,5,2,4,2,5\n"},
    {"C7xC4",
     "# rows=7 cols=4 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "4,1,3,1\n"
     "3,1,4,1\n"
     "5,1,2,1\n"
     "2,1,5,1\n"
     "4,1,3,1\n"
     "3,1,4,1\n"
     "5,2,2,5\n"},
    {"C7xC5",
     "# rows=7 cols=5 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "4,1,3,1,2\n"
     "3,1,4,4,3\n"
     "5,1,2,1,5\n"
     "2,1,5,1,2\n"
     "4,1,3,3,4\n"
     "3,1,4,1,2\n"
     "5,2,2,1,5\n"},
    // corrected: cells (0,4) 1 -> 2 and (6,5) 5 -> 1 (first of the two
    // possible two-cell repairs in scan order)
    {"C7xC7",
     "# rows=7 cols=7 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1,2,1,4\n"
     "5,5,3,3,5,5,3\n"
     "1,1,1,1,2,1,3\n"
     "2,2,4,4,2,4,4\n"
     "5,5,3,3,5,5,3\n"
     "1,1,1,1,2,1,3\n"
     "2,2,4,4,2,1,4\n"},
    // corrected: cells (4,5) 2 -> 1 and (5,6) 5 -> 2, the unique
    // two-cell repair
    {"C7xC11",
     "# rows=7 cols=11 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,5,1,2,5,1,2,1,5,1,2\n"
     "1,5,1,2,5,1,2,1,5,1,2\n"
     "1,3,1,4,3,1,4,1,3,1,4\n"
     "1,3,1,4,3,1,4,1,3,1,4\n"
     "1,5,2,2,5,1,2,1,5,2,2\n"
     "1,5,1,4,5,1,2,1,5,1,5\n"
     "4,3,3,4,3,3,4,4,3,3,4\n"},
    // corrected: rows 8 and 9 re-derived by a constrained search that keeps
    // every other row fixed (the uncorrected closing band admits seven
    // bicolored paths and no small cell-level repair)
    {"C11xC11",
     "# rows=11 cols=11 wrap_rows=1 wrap_cols=1 source=builtin\n"
     "1,1,1,1,2,1,1,1,1,2,2\n"
     "3,2,2,3,3,3,2,2,3,3,3\n"
     "1,1,1,1,4,1,1,1,1,4,4\n"
     "5,4,4,5,5,5,4,4,5,5,5\n"
     "1,1,1,1,2,1,1,1,1,2,2\n"
     "3,2,2,3,3,3,2,2,3,3,3\n"
     "1,1,1,1,4,1,1,1,1,4,4\n"
     "5,4,4,5,5,5,4,4,5,5,5\n"
     "1,1,1,1,3,2,2,1,3,3,2\n"
     "3,3,2,2,3,1,3,1,2,4,2\n"
     "5,4,4,5,5,4,4,5,5,4,5\n"},
    {"C3xP3",
     "# rows=3 cols=3 wrap_rows=1 wrap_cols=0 source=builtin\n"
     "1,1,1\n"
     "2,2,2\n"
     "3,3,3\n"},
    {"C4xP3",
     "# rows=4 cols=3 wrap_rows=1 wrap_cols=0 source=builtin\n"
     "1,1,1\n"
     "2,3,2\n"
     "1,3,1\n"
     "2,2,2\n"},
    {"C5xP3",
     "# rows=5 cols=3 wrap_rows=1 wrap_cols=0 source=builtin\n"
     "1,1,1\n"
     "2,3,2\n"
     "1,3,1\n"
     "1,2,1\n"
     "3,2,3\n"},
    {"C7xP3",
     "# rows=7 cols=3 wrap_rows=1 wrap_cols=0 source=builtin\n"
     "1,1,1\n"
     "2,2,2\n"
     "1,3,1\n"
     "1,3,1\n"
     "1,2,1\n"
     "1,2,1\n"
     "3,3,3\n"},
    {"C11xP3",
     "# rows=11 cols=3 wrap_rows=1 wrap_cols=0 source=builtin\n"
     "1,1,1\n"
     "2,2,2\n"
     "1,3,1\n"
     "1,3,1\n"
     "1,2,1\n"
     "1,2,1\n"
     "1,3,1\n"
     "1,3,1\n"
     "1,2,1\n"
     "1,2,1\n"
     "3,3,3\n"},
    {"C3xP4",
     "# rows=3 cols=4 wrap_rows=1 wrap_cols=0 source=builtin\n"
     "1,2,2,2\n"
     "1,3,3,3\n"
     "1,4,4,4\n"},
    {"C3xP5",
     "# rows=3 cols=5 wrap_rows=1 wrap_cols=0 source=builtin\n"
     "1,2,2,2,1\n"
     "1,3,3,3,1\n"
     "1,4,4,4,1\n"},
};

}  // namespace starprod::detail
