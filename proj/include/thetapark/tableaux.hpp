#pragma once

#include <functional>
#include <vector>

#include "thetapark/ints.hpp"
#include "thetapark/partition.hpp"
#include "thetapark/word.hpp"

namespace thetapark {

// Standard Young tableau, row-major with rows listed from the bottom; each row
// strictly increases left to right, each column strictly increases upward.
using SYT = std::vector<std::vector<int>>;

bool is_standard(const SYT& t);
Partition shape(const SYT& t);

// Mutually inverse encodings: letter i of the lattice word is the row of i.
SYT lattice_word_syt(const Word& w);
Word syt_lattice_word(const SYT& t);

// Block statistic: partition 1..n into consecutive blocks of sizes mu; for
// every j such that j and j+1 lie in the same block i and j+1 sits in a row
// above j, add mu_1 + ... + mu_i - j.
long comaj_block(const SYT& t, const Composition& mu);

void for_each_syt(const Partition& shape, const std::function<void(const SYT&)>& visit);
Int syt_count_hook(const Partition& shape);

// Number of semistandard tableaux of the given shape and content (Kostka number).
Int kostka_number(const Partition& shape, const Partition& content);

} // namespace thetapark
