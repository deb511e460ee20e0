#pragma once

#include <functional>
#include <string>
#include <vector>

#include "thetapark/partition.hpp"
#include "thetapark/word.hpp"

namespace thetapark {

// Pair of North/East lattice paths from (0,0) to the same corner, the top
// path strictly above the bottom except at the endpoints.  Labels, when
// present, sit on the North steps of the top path, read bottom to top.
struct PathPair {
    std::string top;
    std::string bottom;
    Word labels;

    int height() const;
    int width() const;
    friend bool operator==(const PathPair&, const PathPair&) = default;
    friend auto operator<=>(const PathPair&, const PathPair&) = default;
};

bool valid_steps(const std::string& path);
int count_steps(const std::string& path, char step);

// x-coordinate of the North step crossing height y -> y+1, for y = 0..n-1.
std::vector<int> north_positions(const std::string& path);
// number of East steps at height y, for y = 0..n.
std::vector<int> east_counts(const std::string& path, int height);
std::string path_from_east_counts(const std::vector<int>& counts);
// lengths of maximal North runs, bottom to top
std::vector<int> north_runs(const std::string& path);

bool is_parallelogram_polyomino(const std::string& top, const std::string& bottom);
long polyomino_area(const std::string& top, const std::string& bottom);
long area(const PathPair& p);
Partition eta_partition(const std::string& top); // sorted North-run lengths

// labels strictly increase along consecutive North steps of the top path
bool labels_increase_on_runs(const std::string& top, const Word& labels);

// gamma-Dyck path: bottom has no NN and its row East-counts, with the first
// reduced by one, rearrange to gamma + 1^n.
bool is_gamma_dyck(const PathPair& p, const Partition& gamma);

// e-composition: prune from the top path the first East step after the i-th
// North step for every i outside Asc(labels), then read North-run lengths.
Composition e_composition(const PathPair& p);
// start coordinates (x, y) of the pruned East steps
std::vector<std::pair<int, int>> pruned_east_steps(const PathPair& p);

// Enumerations ---------------------------------------------------------

void for_each_polyomino(int width, int height,
                        const std::function<void(const std::string&, const std::string&)>& visit);
// all top paths lying strictly above the given bottom path
void for_each_top_above(const std::string& bottom,
                        const std::function<void(const std::string&)>& visit);
void for_each_gamma_dyck_bottom(const Partition& gamma, int n,
                                const std::function<void(const std::string&)>& visit);
// words of the given letter content whose values rise strictly along North
// runs of `top`; lattice words only when `lattice` is set
void for_each_run_labeling(const std::string& top, const std::vector<int>& letter_mults, bool lattice,
                           const std::function<void(const Word&)>& visit);

// gamma-parking functions of the given content (letter multiplicities)
void for_each_pf(const Partition& gamma, const std::vector<int>& content_mults,
                 const std::function<void(const PathPair&)>& visit);
// lattice gamma-parking functions of content lambda
void for_each_lpf(const Partition& gamma, const Partition& lambda,
                  const std::function<void(const PathPair&)>& visit);

// Subset-picking statistics for the generalized labelings.
enum class SubsetStat { Asc, Des };
std::vector<int> subset_positions(SubsetStat s, const Word& w);
long looks_right_stat(SubsetStat s, const Word& w);

// S-labeled parallelogram polyominoes whose label content and bottom-path
// East surpluses realize (content, gamma); Asc gives the ascent polyominoes.
void for_each_s_labeled_pp(SubsetStat s, const std::vector<int>& content_mults, const Partition& gamma,
                           const std::function<void(const PathPair&)>& visit);

// Bijection with ascent polyominoes: drop one East step of each path per
// non-ascent row; inverse reinstates them.
PathPair iota(const PathPair& p);
PathPair iota_inverse(const PathPair& p);

} // namespace thetapark
