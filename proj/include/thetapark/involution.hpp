#pragma once

#include <optional>

#include "thetapark/cct.hpp"

namespace thetapark {

// Ascents in the word of `a` followed by the first letter of `b`'s word,
// counted over the positions of `a`.
int asc_between(const LabeledCCT& a, const LabeledCCT& b);

// Split at the first vertical bar; the columns after the bar gain
// d + |l^1| cells.  Empty when the tableau has a single block.
std::optional<std::pair<LabeledCCT, LabeledCCT>> try_split(const LabeledCCT& s);

bool can_join(const LabeledCCT& a, const LabeledCCT& b);
// Exact inverse of try_split; empty when the join inequality fails.
std::optional<LabeledCCT> try_join(const LabeledCCT& a, const LabeledCCT& b);

// The weight-preserving sign-reversing involution: split the first tableau if
// possible, else join it forward if possible, else recurse on the tail.
LCSeq psi(const LCSeq& seq);
bool is_psi_fixed(const LCSeq& seq);

// Direct enumeration of the fixed-point set U^gamma_{lambda,eta}: bar-free
// tableaux, first column height zero, chained by the strict inequality
// c(T_{i+1}) < c(T_i) + asc(T_i;T_{i+1}) + |l(T_i)|.
void for_each_fixed_point(const Partition& lambda, const Partition& eta, const Partition& gamma,
                          const std::function<void(const LCSeq&)>& visit);

} // namespace thetapark
