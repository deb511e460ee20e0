#include "thetapark/partition.hpp"

#include <numeric>
#include <sstream>

namespace thetapark {

void Partition::validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(static_cast<size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    }
    return Partition(std::move(conj));
}

bool Partition::has_cell(int row, int col) const {
    return row >= 1 && col >= 1 && row <= length() && col <= parts_[static_cast<size_t>(row - 1)];
}

void Partition::check_cell(int row, int col) const {
    if (!has_cell(row, col)) throw std::out_of_range("cell outside partition diagram");
}

int Partition::arm(int row, int col) const {
    check_cell(row, col);
    return parts_[static_cast<size_t>(row - 1)] - col;
}

int Partition::leg(int row, int col) const {
    check_cell(row, col);
    int count = 0;
    for (int r = row + 1; r <= length(); ++r)
        if (parts_[static_cast<size_t>(r - 1)] >= col) ++count;
    return count;
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> mult;
    if (!parts_.empty()) {
        mult.resize(static_cast<size_t>(parts_[0]), 0);
        for (int p : parts_) ++mult[static_cast<size_t>(p - 1)];
    }
    return mult;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

void Composition::validate() const {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Composition::sorted() const {
    std::vector<int> s = parts_;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return Partition(std::move(s));
}

std::string Composition::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> result;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    if (n >= 0) recurse(recurse, n, n == 0 ? 1 : n);
    std::sort(result.begin(), result.end(), CanonicalPartitionLess{});
    return result;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> result;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p);
            current.pop_back();
        }
    };
    if (n >= 0) recurse(recurse, n);
    return result;
}

} // namespace thetapark
