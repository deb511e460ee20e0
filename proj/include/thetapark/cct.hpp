#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "thetapark/partition.hpp"
#include "thetapark/word.hpp"

namespace thetapark {

// Column-composition tableau: a base row of |alpha| columns segmented by the
// composition alpha, with c_i cells above column i; c is weakly increasing
// and may step up only at segment boundaries (so it is constant on blocks).
struct CCT {
    Composition alpha;
    std::vector<int> c;

    int length() const { return static_cast<int>(c.size()); }
    long size() const;
    Partition type() const { return alpha.sorted(); }
    int bars() const { return alpha.length() - 1; }
    bool valid() const;
};

struct LabeledCCT {
    CCT cct;
    Word w; // positive letters along the base
    Word l; // nonnegative labels beneath the base

    bool valid() const;
    friend bool operator==(const LabeledCCT&, const LabeledCCT&) = default;
};

bool operator==(const CCT& a, const CCT& b);

// Sequence of labeled column-composition tableaux.
struct LCSeq {
    std::vector<LabeledCCT> items;

    Composition beta() const; // base lengths
    Word word() const;        // concatenated base words
    Word labels() const;      // concatenated labels

    friend bool operator==(const LCSeq&, const LCSeq&) = default;
};

// u(l) = sum over positions j of l_j * (cells to the right of j)
long u_statistic(const Word& l);

long weight(const LabeledCCT& t);
int sign(const LabeledCCT& t); // (-1)^{number of bars}
std::pair<long, int> lc_weight_sign(const LCSeq& seq);

// Membership in LC^gamma_{lambda,eta}: c_1 of the first tableau is zero, the
// tableau types refine eta, the base words carry content lambda, and the
// labels rearrange to gamma padded with zeros.
bool valid_lcseq(const LCSeq& seq, const Partition& lambda, const Partition& eta, const Partition& gamma);

// All column-composition tableaux of the given type with size <= max_size.
void for_each_cct(const Partition& mu, long max_size, bool first_column_zero,
                  const std::function<void(const CCT&)>& visit);

// The weight-bounded slice of LC^gamma_{lambda,eta}, each element once.
void for_each_lc_sequence(const Partition& lambda, const Partition& eta, const Partition& gamma,
                          long max_weight, const std::function<void(const LCSeq&)>& visit);

} // namespace thetapark
