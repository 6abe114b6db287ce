#ifndef GHW_COMBINATIONS_HPP
#define GHW_COMBINATIONS_HPP

#include <vector>

namespace ghw {

// Calls f(idx) for every r-subset of {0..n-1} as an ascending index vector,
// in lexicographic order. f returns false to stop early; the function then
// returns false as well.
template <class F>
bool for_each_combination(int n, int r, F&& f) {
    if (r < 0 || r > n) return true;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!f(static_cast<const std::vector<int>&>(idx))) return false;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace ghw

#endif  // GHW_COMBINATIONS_HPP
