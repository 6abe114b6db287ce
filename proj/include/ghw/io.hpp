#ifndef GHW_IO_HPP
#define GHW_IO_HPP

#include "ghw/hypergraph.hpp"
#include "ghw/tree_decomposition.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghw {

class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, EmptyEdge, DuplicateEdge, UnknownName, BadHeader, NotATree };

    ParseError(Kind kind, int line, int column, const std::string& message);

    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    Kind kind_;
    int line_;
    int column_;
};

// Raised by parse_decomposition when the file is well formed but does not
// describe a valid decomposition of the hypergraph.
class InvalidDecomposition : public std::runtime_error {
public:
    explicit InvalidDecomposition(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// Edges written as NAME(V1,V2,...), each optionally followed by ',' or '.'.
// Names match [A-Za-z0-9_:.]+; '#' starts a comment; whitespace is ignored.
Hypergraph parse_hypergraph(std::string_view text);
std::string emit_hypergraph(const Hypergraph& h);

// s ghtd <num_nodes> <max_cover> <num_vertices> <num_edges>
// b <id> <vertex>...      one per node, ids 1-based
// c <id> <edge>...        cover of bag <id>, by edge name
// <id1> <id2>             tree edge
// Covers are computed for nodes that have none.
std::string emit_decomposition(const Hypergraph& h, const TreeDecomposition& td);

// With check set, the result is validated against h and InvalidDecomposition
// is thrown on any violation.
TreeDecomposition parse_decomposition(const Hypergraph& h, std::string_view text, bool check = true);

}  // namespace ghw

#endif  // GHW_IO_HPP
