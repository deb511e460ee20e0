#pragma once

#include <functional>
#include <vector>

#include "thetapark/ints.hpp"
#include "thetapark/partition.hpp"

namespace thetapark {

// A word is a finite sequence of nonnegative integers; statistics below use
// 1-based positions.
using Word = std::vector<int>;

struct WordStats {
    std::vector<int> asc; // positions i with w_i < w_{i+1}
    std::vector<int> des; // positions i with w_i > w_{i+1}
    long maj = 0;         // sum of descent positions
    long comaj = 0;       // sum of (length - i) over descents
    long revmaj = 0;      // sum of (length - i) over ascents
    long revcomaj = 0;    // sum of ascent positions
};

WordStats word_stats(const Word& w);
long revmaj(const Word& w);
std::vector<int> ascent_set(const Word& w);

// multiplicity_type(w)[i] is the number of entries equal to i (index 0 included)
std::vector<int> multiplicity_type(const Word& w);

// content(w)[i-1] is the multiplicity of the letter i; zeros are ignored
std::vector<int> content(const Word& w);

// Every prefix of a lattice word contains at least as many j's as (j+1)'s.
bool is_lattice_word(const Word& w);

// All distinct rearrangements of the parts of mu, each exactly once.
void for_each_rearrangement(const Partition& mu, const std::function<void(const Composition&)>& visit);
std::vector<Composition> rearrangements(const Partition& mu);
Int count_rearrangements(const Partition& mu);

// All lattice words of content lambda.
void for_each_lattice_word(const Partition& lambda, const std::function<void(const Word&)>& visit);

} // namespace thetapark
