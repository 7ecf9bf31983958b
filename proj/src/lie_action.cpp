#include "mcone/lie_action.hpp"

#include <algorithm>

namespace mcone {

WeightIndex::WeightIndex(const RepSpec& spec) : spec_(spec), w_(mcone::weights(spec)) {
    for (int i = 0; i < static_cast<int>(w_.size()); ++i) {
        idx_[w_[i].index] = i;
        by_coords_[w_[i].coords] = i;
    }
}

int WeightIndex::find(const std::vector<int>& index) const {
    auto it = idx_.find(index);
    return it == idx_.end() ? -1 : it->second;
}

int WeightIndex::shift(int w, const Vec& delta) const {
    Vec c = w_[w].coords;
    for (size_t i = 0; i < c.size(); ++i) c[i] += delta[i];
    auto it = by_coords_.find(c);
    return it == by_coords_.end() ? -1 : it->second;
}

LieTerm WeightIndex::apply(int k, int a, int b, int w) const {
    const auto& idx = w_[w].index;
    switch (spec_.kind) {
    case Kind::Kronecker: {
        if (idx[k] != b) return {};
        if (a == b) return {1, w};
        auto t = idx;
        t[k] = a;
        return {1, find(t)};
    }
    case Kind::Fermion: {
        if (!std::binary_search(idx.begin(), idx.end(), b)) return {};
        if (a == b) return {1, w};
        if (std::binary_search(idx.begin(), idx.end(), a)) return {};
        int between = 0;
        for (int x : idx)
            if (x > std::min(a, b) && x < std::max(a, b)) ++between;
        auto t = idx;
        *std::find(t.begin(), t.end(), b) = a;
        std::sort(t.begin(), t.end());
        return {between % 2 ? -1L : 1L, find(t)};
    }
    case Kind::Boson: {
        long c = std::count(idx.begin(), idx.end(), b);
        if (c == 0) return {};
        if (a == b) return {c, w};
        auto t = idx;
        *std::find(t.begin(), t.end(), b) = a;
        std::sort(t.begin(), t.end());
        return {c, find(t)};
    }
    }
    return {};
}

}  // namespace mcone
