#pragma once

#include <functional>
#include <string>
#include <vector>

#include "thetapark/partition.hpp"
#include "thetapark/qpoly.hpp"

namespace thetapark {

// Bottom path E N^n with extra East steps: one green per row in `greens`
// (distinct rows, from the e_{n-k} factor) and blue steps per row counts in
// `blues` (the h_m factor).  Rows are 1-based; within a row the order is
// mandatory step, green, blues.
struct ColoredBottom {
    int n = 0;
    std::vector<int> greens; // strictly increasing rows
    std::vector<int> blues;  // weakly increasing rows
    std::string path() const;
};

struct ColoredParking {
    ColoredBottom bottom;
    std::string top;
    long area() const;
    Partition eta() const;
};

// Dyck path with marked North steps (the would-be empty valleys) and
// decorated East steps (double falls); positions are step indices.
struct DecoratedDyck {
    std::string path;
    std::vector<int> marked;
    std::vector<int> stars;
    friend bool operator==(const DecoratedDyck&, const DecoratedDyck&) = default;
};

bool is_dyck(const std::string& path);
long decorated_area(const DecoratedDyck& d);
Partition decorated_eta(const DecoratedDyck& d);

// The five-step transformation from a colored parking object to a decorated
// Dyck path of size m + n; preserves the area and the e-composition.
DecoratedDyck extended_delta_map(const ColoredParking& source);

void for_each_colored_parking(int n, int k, int m, const std::function<void(const ColoredParking&)>& visit);
void for_each_decorated_dyck(int n, int k, int m, const std::function<void(const DecoratedDyck&)>& visit);

// Area generating functions by e-composition for the two families.
std::map<Partition, QPoly, CanonicalPartitionLess> colored_parking_gf(int n, int k, int m);
std::map<Partition, QPoly, CanonicalPartitionLess> decorated_dyck_gf(int n, int k, int m);

} // namespace thetapark
