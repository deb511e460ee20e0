#pragma once

#include "thetapark/cct.hpp"
#include "thetapark/paths.hpp"

namespace thetapark {

// Weight-preserving bijection from psi-fixed points to ascent labeled
// parallelogram polyominoes, and its inverse.
PathPair phi(const LCSeq& fixed_point);
LCSeq phi_inverse(const PathPair& polyomino);

} // namespace thetapark
