#pragma once

#include <stdexcept>
#include <vector>

#include "prepatlas/algebraic.hpp"

namespace prepatlas {

struct AlgInterval {
    RealAlgebraic left;
    RealAlgebraic right;
};

/// Ordered finite union of disjoint closed real intervals.
class IntervalSet {
  public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<AlgInterval> iv) : iv_(std::move(iv)) {
        for (std::size_t i = 0; i < iv_.size(); ++i) {
            if (alg_compare(iv_[i].left, iv_[i].right) == Cmp::greater)
                throw std::invalid_argument("interval with left > right");
            if (i > 0 && alg_compare(iv_[i - 1].right, iv_[i].left) != Cmp::less)
                throw std::invalid_argument("intervals overlap or are unsorted");
        }
    }

    const std::vector<AlgInterval>& intervals() const { return iv_; }
    std::size_t size() const { return iv_.size(); }
    bool empty() const { return iv_.empty(); }
    const AlgInterval& operator[](std::size_t i) const { return iv_[i]; }

    bool contains(const RealAlgebraic& x) const {
        for (const auto& iv : iv_) {
            if (alg_compare(x, iv.left) != Cmp::less && alg_compare(x, iv.right) != Cmp::greater)
                return true;
        }
        return false;
    }

  private:
    std::vector<AlgInterval> iv_;
};

}  // namespace prepatlas
