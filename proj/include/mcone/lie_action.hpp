// Action of the elementary matrices E^k_{ab} of gl(d_1) x ... x gl(d_s) on
// the weight basis of V.
#pragma once

#include "mcone/core.hpp"

#include <map>
#include <vector>

namespace mcone {

struct LieTerm {
    long coef = 0;
    int target = -1;
};

class WeightIndex {
public:
    explicit WeightIndex(const RepSpec& spec);
    const RepSpec& spec() const { return spec_; }
    const std::vector<Weight>& weights() const { return w_; }
    int size() const { return static_cast<int>(w_.size()); }
    int find(const std::vector<int>& index) const;
    // E^k_{ab} (a row, b column) applied to basis vector w; coef 0 if it vanishes.
    LieTerm apply(int k, int a, int b, int w) const;
    // Raising operator of the positive root (k,i,j): E^k_{ij}.
    LieTerm apply_root(const Root& beta, int w) const { return apply(beta.k, beta.i, beta.j, w); }
    // Weight index reached from w by adding coords delta, or -1.
    int shift(int w, const Vec& delta) const;

private:
    RepSpec spec_;
    std::vector<Weight> w_;
    std::map<std::vector<int>, int> idx_;
    std::map<Vec, int> by_coords_;
};

}  // namespace mcone
