#ifndef GHW_GENERATORS_HPP
#define GHW_GENERATORS_HPP

#include "ghw/hypergraph.hpp"

#include <cstdint>
#include <stdexcept>

namespace ghw {

class Infeasible : public std::runtime_error {
public:
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

class Unsupported : public std::invalid_argument {
public:
    explicit Unsupported(const std::string& what) : std::invalid_argument(what) {}
};

// n vertices v.., m edges e.., pairwise intersections at most d, every vertex
// in some edge. Deterministic in seed. Throws std::invalid_argument on bad
// arguments and Infeasible when rejection sampling runs out of attempts.
Hypergraph gen_2d_hypergraph(int n, int m, int d, std::uint64_t seed);

// Five disjoint edges of 11 vertices plus 82 five-vertex edges each meeting
// all five, pairwise sharing at most one vertex. Only k = d = 1.
Hypergraph gen_shyg_instance(int k, int d);

}  // namespace ghw

#endif  // GHW_GENERATORS_HPP
