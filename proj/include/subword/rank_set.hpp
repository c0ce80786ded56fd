#pragma once

#include <stdexcept>
#include <vector>

namespace subword {

// A set of selected ranks inside [1, k], kept strictly increasing.
struct RankSet {
    int k = 0;
    std::vector<int> ranks;

    RankSet() = default;
    RankSet(int k_, std::vector<int> r) : k(k_), ranks(std::move(r)) {
        for (size_t i = 0; i < ranks.size(); ++i) {
            if (ranks[i] < 1 || ranks[i] > k)
                throw std::invalid_argument("RankSet: rank outside [1, k]");
            if (i > 0 && ranks[i] <= ranks[i - 1])
                throw std::invalid_argument("RankSet: ranks must be strictly increasing");
        }
    }

    static RankSet full(int k_) {
        std::vector<int> r;
        for (int i = 1; i <= k_; ++i) r.push_back(i);
        return RankSet(k_, std::move(r));
    }

    int size() const { return static_cast<int>(ranks.size()); }
    bool empty() const { return ranks.empty(); }
    int max() const { return ranks.empty() ? 0 : ranks.back(); }

    bool operator==(const RankSet&) const = default;
};

} // namespace subword
