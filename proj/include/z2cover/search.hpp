#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "z2cover/analysis.hpp"

namespace z2cover {

struct SearchConfig {
  // curves available as branch components; defaults to e1..e4, h12..h34 and
  // max_pencil_members members per pencil
  std::optional<std::vector<NamedCurve>> catalog;
  // sigma labels allowed to carry a nonzero divisor; defaults to all 15
  std::optional<std::vector<GroupElement>> sigma_support;
  int max_pencil_members = 1;
  int component_budget = 2;  // max components per D_sigma
  bool symmetry = true;      // suppress duplicates up to the S4 action
  double time_budget_seconds = 0;  // 0 = unlimited
  int workers = 1;
};

struct SearchResult {
  BuildingData bd;
  Degree20Report report;
  std::string key;
};

struct SearchOutcome {
  std::vector<SearchResult> results;
  bool complete = true;  // false when the time budget cut the run short
};

/*
  Enumerates building data over the catalog satisfying all four hypotheses
  of the degree-20 criterion.  The three cosets 01**, 10**, 11** are filled
  with anticanonical curve sets first (the tightest constraint), contents are
  distributed to individual sigma slots, the L_chi are solved from the cover
  relations (L_chi is half the relation sum, which pins it uniquely since
  Pic(Y4) is torsion-free; non-divisible sums are pruned), and the remaining
  hypotheses are filtered last.  Every emitted result is re-verified with the
  full checker.  Emission order is deterministic for a fixed catalog order
  and independent of the worker count.
*/
SearchOutcome enumerate_covers(const SearchConfig& cfg);

// The S4 action on the four blown-up points: image[i-1] is the image of
// point i.  Permutes lattice coordinates and renames curves; the sigma and
// chi labels stay put.
BuildingData apply_point_permutation(const BuildingData& bd, const std::array<int, 4>& image);

// Serialized form of one representative, with pencil members renumbered by
// first appearance so the key ignores member labels.
std::string building_data_key(const BuildingData& bd);

// Lexicographically least serialized form over the orbit under S4 and
// pencil-member relabeling.
std::string canonicalize(const BuildingData& bd);

}  // namespace z2cover
