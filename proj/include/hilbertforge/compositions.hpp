#pragma once

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace hilbertforge {

/// Enumerates all vectors of `parts` non-negative integers with the given
/// sum, in ascending lexicographic order, streaming with O(parts) memory.
/// There are C(total + parts - 1, parts - 1) of them; a negative total gives
/// the empty range.
class WeakCompositions {
public:
    WeakCompositions(long total, int parts) : total_(total), parts_(parts) {
        if (parts < 1) throw std::invalid_argument("weak compositions need parts >= 1");
    }

    static Int count(long total, int parts) {
        if (total < 0) return Int(0);
        return binomial(total + parts - 1, parts - 1);
    }

    class iterator {
    public:
        const std::vector<int>& operator*() const { return cur_; }

        iterator& operator++() {
            // Move one unit of mass left of the rightmost nonzero entry,
            // dumping everything to its right into the last slot.
            int z = -1;
            for (int i = static_cast<int>(cur_.size()) - 1; i >= 0; --i) {
                if (cur_[i] > 0) {
                    z = i;
                    break;
                }
            }
            if (z <= 0) {
                done_ = true;
                return *this;
            }
            int mass = cur_[z] - 1;
            cur_[z] = 0;
            cur_[z - 1] += 1;
            cur_.back() += mass;
            return *this;
        }

        bool operator!=(const iterator& o) const { return done_ != o.done_; }
        bool operator==(const iterator& o) const { return done_ == o.done_; }

    private:
        friend class WeakCompositions;
        iterator() : done_(true) {}
        iterator(long total, int parts) : cur_(parts, 0), done_(total < 0) {
            if (!done_) cur_.back() = static_cast<int>(total);
        }

        std::vector<int> cur_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(total_, parts_); }
    iterator end() const { return iterator(); }

private:
    long total_;
    int parts_;
};

}  // namespace hilbertforge
