#include "dt/partitions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dt/characters.hpp"

namespace dt {

PlanePartition::PlanePartition(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
    std::sort(boxes_.begin(), boxes_.end());
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
    if (!is_downward_closed(boxes_)) throw std::invalid_argument("PlanePartition: box set is not downward closed");
}

bool PlanePartition::is_downward_closed(const std::vector<Box>& boxes) {
    std::vector<Box> sorted = boxes;
    std::sort(sorted.begin(), sorted.end());
    for (const Box& b : boxes)
        for (int axis = 0; axis < 3; ++axis) {
            if (b[axis] == 0) continue;
            Box below = b;
            --below[axis];
            if (!std::binary_search(sorted.begin(), sorted.end(), below)) return false;
        }
    return true;
}

bool PlanePartition::contains(const Box& b) const { return std::binary_search(boxes_.begin(), boxes_.end(), b); }

namespace {

bool set_contains(const std::vector<Box>& sorted, const Box& b) {
    return std::binary_search(sorted.begin(), sorted.end(), b);
}

// A box is addable when it is absent and all its predecessors along the
// coordinate axes are present.
bool is_addable(const std::vector<Box>& sorted, const Box& b) {
    if (set_contains(sorted, b)) return false;
    for (int axis = 0; axis < 3; ++axis) {
        if (b[axis] == 0) continue;
        Box below = b;
        --below[axis];
        if (!set_contains(sorted, below)) return false;
    }
    return true;
}

// Grow by adding addable boxes strictly lex-greater than the current lex-max
// box. Every plane partition arises exactly once along this chain: removing
// the lex-max box always leaves a plane partition (nothing can sit above a
// lex-max box), so the generation history is forced.
void grow(std::vector<Box>& boxes, int remaining, std::vector<PlanePartition>& out) {
    if (remaining == 0) {
        out.emplace_back(boxes);
        return;
    }
    const Box lo = boxes.empty() ? Box{-1, -1, -1} : boxes.back();
    std::vector<Box> candidates;
    if (boxes.empty()) {
        candidates.push_back({0, 0, 0});
    } else {
        for (const Box& b : boxes)
            for (int axis = 0; axis < 3; ++axis) {
                Box up = b;
                ++up[axis];
                candidates.push_back(up);
            }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Box& c : candidates) {
        if (!(lo < c)) continue;
        if (!is_addable(boxes, c)) continue;
        boxes.push_back(c);  // stays sorted: c is lex-greater than everything present
        grow(boxes, remaining - 1, out);
        boxes.pop_back();
    }
}

const std::vector<PlanePartition>& cached_partitions(int n) {
    static std::map<int, std::vector<PlanePartition>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<PlanePartition> out;
    std::vector<Box> boxes;
    grow(boxes, n, out);
    std::sort(out.begin(), out.end());
    return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::vector<PlanePartition> enumerate_plane_partitions(int n) {
    if (n < 0 || n > kMaxPartitionSize) throw std::domain_error("enumerate_plane_partitions: size out of range");
    return cached_partitions(n);
}

void enumerate_colored(int r, int n, const std::function<void(const ColoredPartition&)>& sink) {
    if (r < 1) throw std::domain_error("enumerate_colored: rank must be positive");
    if (n < 0 || n > kMaxPartitionSize) throw std::domain_error("enumerate_colored: size out of range");
    ColoredPartition P;
    P.parts.assign(static_cast<std::size_t>(r), PlanePartition{});
    // Walk compositions of n into r parts in colex order, filling each color
    // from its canonical per-size list.
    std::function<void(int, int)> rec = [&](int color, int remaining) {
        if (color == r - 1) {
            for (const auto& pp : cached_partitions(remaining)) {
                P.parts[static_cast<std::size_t>(color)] = pp;
                sink(P);
            }
            return;
        }
        for (int k = 0; k <= remaining; ++k)
            for (const auto& pp : cached_partitions(k)) {
                P.parts[static_cast<std::size_t>(color)] = pp;
                rec(color + 1, remaining - k);
            }
    };
    rec(0, n);
}

std::vector<ColoredPartition> enumerate_colored_list(int r, int n) {
    std::vector<ColoredPartition> out;
    enumerate_colored(r, n, [&](const ColoredPartition& P) { out.push_back(P); });
    return out;
}

VirtualCharacter ideal_character(const PlanePartition& pi) {
    VirtualCharacter Q;
    for (const Box& b : pi.boxes()) Q.add(Monomial::t_power(b[0], b[1], b[2]));
    return Q;
}

}  // namespace dt
