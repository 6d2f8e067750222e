#pragma once

// Cell lists read off the drawings, in (column, row) with row 0 at the bottom.

#include <vector>

#include "eterdom/grid.hpp"

namespace fixtures {

// 10x10 snapshot of a D configuration.
inline const std::vector<eterdom::Vertex> kSnapshotD = {
    {0, 0}, {2, 1}, {4, 2}, {6, 3}, {8, 4}, {1, 4}, {3, 5}, {5, 6},
    {7, 7}, {9, 8}, {7, 0}, {9, 1}, {0, 7}, {2, 8}, {4, 9}};

// 10x10 snapshot of a D' configuration.
inline const std::vector<eterdom::Vertex> kSnapshotDprime = {
    {0, 0}, {1, 3}, {3, 2}, {5, 1}, {7, 0}, {0, 7}, {2, 6},
    {4, 5}, {6, 4}, {8, 3}, {3, 9}, {5, 8}, {7, 7}, {9, 6}};

// Interior guards of the drawn 9x9 starting layout.
inline const std::vector<eterdom::Vertex> kNineByNineInterior = {
    {2, 1}, {4, 2}, {6, 3}, {1, 4}, {3, 5}, {5, 6}, {7, 7}};

}  // namespace fixtures
