#pragma once

// Reference score tables for the toy network.

#include <array>
#include <vector>

#include "relflow/graph.hpp"

namespace relflow::testing {

// (SeekRel(x,y), FactRel(x,y), SurfRel(x->y), SurfRel(y->x)) at the
// x1000*maxwt display scale. Row x, column y; the diagonal is unused.
using ScoreTuple = std::array<int, 4>;

inline const std::array<std::array<ScoreTuple, 7>, 7>& toy7_score_table() {
  static const std::array<std::array<ScoreTuple, 7>, 7> table{{
      {{{0, 0, 0, 0}, {253, 0, 0, 0}, {368, 0, 368, 0}, {368, 0, 368, 0}, {0, 0, 368, 0}, {0, 0, 736, 0}, {0, 0, 368, 0}}},
      {{{253, 0, 0, 0}, {0, 0, 0, 0}, {253, 0, 0, 0}, {0, 0, 253, 0}, {0, 0, 253, 0}, {0, 0, 0, 0}, {0, 0, 253, 0}}},
      {{{368, 0, 0, 368}, {253, 0, 0, 0}, {0, 0, 0, 0}, {368, 0, 815, 0}, {0, 0, 368, 0}, {0, 368, 815, 0}, {0, 0, 1183, 0}}},
      {{{368, 0, 0, 368}, {0, 0, 0, 253}, {368, 0, 0, 815}, {0, 0, 0, 0}, {0, 0, 368, 0}, {0, 815, 0, 0}, {0, 815, 368, 0}}},
      {{{0, 0, 0, 368}, {0, 0, 0, 253}, {0, 0, 0, 368}, {0, 0, 0, 368}, {0, 0, 0, 0}, {0, 736, 0, 0}, {0, 368, 0, 0}}},
      {{{0, 0, 0, 736}, {0, 0, 0, 0}, {0, 368, 0, 815}, {0, 815, 0, 0}, {0, 736, 0, 0}, {0, 0, 0, 0}, {0, 1183, 0, 0}}},
      {{{0, 0, 0, 368}, {0, 0, 0, 253}, {0, 0, 0, 1183}, {0, 815, 0, 368}, {0, 368, 0, 0}, {0, 1183, 0, 0}, {0, 0, 0, 0}}},
  }};
  return table;
}

// High scorers per node: {SeekRel, FactRel, SurfRel->, SurfRel<-}; an empty
// list is a "None" cell.
using HighScorerRow = std::array<std::vector<PageId>, 4>;

inline const std::array<HighScorerRow, 7>& toy7_high_scorers() {
  static const std::array<HighScorerRow, 7> rows{{
      {{{2, 3}, {}, {5}, {}}},
      {{{0, 2}, {}, {3, 4, 6}, {}}},
      {{{0, 3}, {5}, {6}, {0}}},
      {{{0, 2}, {5, 6}, {4, 6}, {2}}},
      {{{}, {5}, {}, {0, 2, 3}}},
      {{{}, {6}, {}, {2}}},
      {{{}, {5}, {}, {2}}},
  }};
  return rows;
}

// SimRank scores of the toy network (decay 1).
inline const std::array<std::array<double, 7>, 7>& toy7_simrank() {
  static const std::array<std::array<double, 7>, 7> m{{
      {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 1.0, 0.0, 0.0, 0.5, 0.0},
      {0.0, 0.0, 0.0, 1.0, 0.0, 0.25, 0.25},
      {0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.5},
      {0.0, 0.0, 0.5, 0.25, 0.0, 1.0, 0.25},
      {0.0, 0.0, 0.0, 0.25, 0.5, 0.25, 1.0},
  }};
  return m;
}

// Reference PageSim scores of the toy network (parameters unknown;
// used only for shape comparisons).
inline const std::array<std::array<double, 7>, 7>& toy7_pagesim_reference() {
  static const std::array<std::array<double, 7>, 7> m{{
      {0.08, 0.0, 0.04, 0.01, 0.01, 0.05, 0.02},
      {0.0, 0.08, 0.0, 0.08, 0.04, 0.0, 0.04},
      {0.04, 0.0, 0.16, 0.05, 0.03, 0.08, 0.08},
      {0.01, 0.08, 0.05, 0.33, 0.16, 0.05, 0.19},
      {0.01, 0.04, 0.03, 0.16, 0.33, 0.03, 0.16},
      {0.05, 0.0, 0.08, 0.05, 0.03, 0.25, 0.06},
      {0.02, 0.04, 0.08, 0.19, 0.16, 0.06, 0.42},
  }};
  return m;
}

}  // namespace relflow::testing
