#pragma once

#include <functional>
#include <vector>

#include "thetapark/partition.hpp"
#include "thetapark/word.hpp"

namespace thetapark {

using WordVector = std::vector<Word>;

// The four families of word vectors with segment lengths beta.
//
//   WV: the letter i appears letter_mults[i-1] times in the concatenation and
//       the remaining positions are zeros (the lowest letters).
//   CR: each segment is a composition of beta_i and the concatenated parts
//       rearrange to alpha.
//   PR: as CR with each segment weakly decreasing (a partition).
//   LW: the concatenation is a lattice word of content lambda.

void for_each_wv(const std::vector<int>& letter_mults, const Composition& beta,
                 const std::function<void(const WordVector&)>& visit);
void for_each_cr(const Partition& alpha, const Composition& beta,
                 const std::function<void(const WordVector&)>& visit);
void for_each_pr(const Partition& alpha, const Composition& beta,
                 const std::function<void(const WordVector&)>& visit);
void for_each_lw(const Partition& lambda, const Composition& beta,
                 const std::function<void(const WordVector&)>& visit);

std::vector<WordVector> collect_wv(const std::vector<int>& letter_mults, const Composition& beta);
std::vector<WordVector> collect_pr(const Partition& alpha, const Composition& beta);
std::vector<WordVector> collect_lw(const Partition& lambda, const Composition& beta);

Word concatenate(const WordVector& wv);

} // namespace thetapark
