#ifndef GHW_VERTEX_SET_HPP
#define GHW_VERTEX_SET_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ghw {

// Dense bit-indexed sets. A VertexSet is indexed by the vertex ids of the root
// hypergraph's universe, so sets from different induced subhypergraphs of the
// same root combine directly.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using EdgeIndexSet = boost::dynamic_bitset<std::uint64_t>;

inline VertexSet make_set(std::size_t universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.set(static_cast<std::size_t>(v));
    return s;
}

inline VertexSet make_set(std::size_t universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.set(static_cast<std::size_t>(v));
    return s;
}

template <class F>
void for_each_member(const VertexSet& s, F&& f) {
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) {
        f(static_cast<int>(i));
    }
}

inline std::vector<int> members(const VertexSet& s) {
    std::vector<int> out;
    out.reserve(s.count());
    for_each_member(s, [&](int v) { out.push_back(v); });
    return out;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) { return a.is_subset_of(b); }

// a \ b
inline VertexSet minus(const VertexSet& a, const VertexSet& b) { return a - b; }

}  // namespace ghw

#endif  // GHW_VERTEX_SET_HPP
