#pragma once

#include "thetapark/paths.hpp"
#include "thetapark/sym_func.hpp"

namespace thetapark {

// Combinatorial side of the main expansions: q^area grouped by the sorted
// e-composition, over gamma-parking functions of content lambda (kind 'e')
// or lattice gamma-parking functions of content lambda' (kind 's').
EExpansion combinatorial_expansion(char kind, const Partition& lambda, const Partition& gamma);

// q^area grouped by the sorted North-run lengths of the top path, over the
// S-labeled parallelogram polyominoes of content lambda and type gamma.
EExpansion s_labeled_expansion(SubsetStat s, const Partition& lambda, const Partition& gamma);

// Area generating function over parking functions with n ones and m twos.
QPoly two_car_area_gf(int n, int m);
// Area generating function over width x height parallelogram polyominoes.
QPoly polyomino_area_gf(int width, int height);

} // namespace thetapark
