#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetapark {

// Weakly decreasing sequence of positive integers.  The empty partition is
// allowed everywhere and denotes the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const;
    int part(int i) const { return parts_.at(static_cast<size_t>(i)); } // 0-based

    Partition conjugate() const;

    // Cell statistics; cells addressed as (row, col), both 1-based, rows from
    // the bottom.  arm/coarm count cells in the row, leg/coleg in the column.
    bool has_cell(int row, int col) const;
    int arm(int row, int col) const;
    int leg(int row, int col) const;
    int coarm(int row, int col) const { check_cell(row, col); return col - 1; }
    int coleg(int row, int col) const { check_cell(row, col); return row - 1; }

    // multiplicities()[i-1] is the number of parts equal to i, up to the largest part
    std::vector<int> multiplicities() const;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    void validate() const;
    void check_cell(int row, int col) const;
    std::vector<int> parts_;
};

// Ordered sequence of positive integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }
    Composition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const;
    int part(int i) const { return parts_.at(static_cast<size_t>(i)); } // 0-based

    Partition sorted() const;

    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
    void validate() const;
    std::vector<int> parts_;
};

// Canonical display/serialization order for partitions of equal size: shorter
// first, ties broken lexicographically with larger parts first, so for n = 4:
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
struct CanonicalPartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.parts() > b.parts();
    }
};

std::vector<Partition> partitions_of(int n);
std::vector<Composition> compositions_of(int n);

} // namespace thetapark
