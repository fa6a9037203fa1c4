#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "dt/characters_fwd.hpp"

namespace dt {

using Box = std::array<int, 3>;

/// A plane partition: finite downward-closed set of boxes in Z_{>=0}^3,
/// canonically stored as a sorted box list.
class PlanePartition {
public:
    PlanePartition() = default;
    explicit PlanePartition(std::vector<Box> boxes);

    static bool is_downward_closed(const std::vector<Box>& boxes);

    std::size_t size() const { return boxes_.size(); }
    const std::vector<Box>& boxes() const { return boxes_; }
    bool contains(const Box& b) const;

    friend bool operator==(const PlanePartition& a, const PlanePartition& b) { return a.boxes_ == b.boxes_; }
    friend bool operator<(const PlanePartition& a, const PlanePartition& b) { return a.boxes_ < b.boxes_; }

private:
    std::vector<Box> boxes_;  // sorted
};

/// An r-colored plane partition: ordered tuple of r plane partitions.
struct ColoredPartition {
    std::vector<PlanePartition> parts;

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& p : parts) n += p.size();
        return n;
    }
    int rank() const { return static_cast<int>(parts.size()); }
};

inline constexpr int kMaxPartitionSize = 12;

/// All plane partitions of size n, in a deterministic canonical order
/// (lexicographic on sorted box lists). n is capped at kMaxPartitionSize.
std::vector<PlanePartition> enumerate_plane_partitions(int n);

/// Stream all r-tuples of plane partitions with total size n.
void enumerate_colored(int r, int n, const std::function<void(const ColoredPartition&)>& sink);

/// Convenience: materialize the colored stream.
std::vector<ColoredPartition> enumerate_colored_list(int r, int n);

/// The character Q_pi = sum_{(i,j,k) in pi} t1^i t2^j t3^k of the length-|pi|
/// quotient cut out by the monomial ideal of pi.
VirtualCharacter ideal_character(const PlanePartition& pi);

}  // namespace dt
