#include "ghw/io.hpp"

#include "ghw/edge_cover.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ghw {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind_(kind), line_(line), column_(column) {}

InvalidDecomposition::InvalidDecomposition(ValidationReport report)
    : std::runtime_error("decomposition is invalid: " +
                         (report.violations.empty() ? std::string("?")
                                                    : std::string(to_string(report.violations.front().kind)) +
                                                          " (" + report.violations.front().detail + ")")),
      report_(std::move(report)) {}

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == ':' || c == '.';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    // Skips whitespace and comments; returns false at end of input.
    bool skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                advance();
            } else {
                return true;
            }
        }
        return false;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    std::string name() {
        skip();
        std::string out;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) {
            out.push_back(text_[pos_]);
            advance();
        }
        if (out.empty()) fail("expected a name");
        return out;
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg, ParseError::Kind kind = ParseError::Kind::Syntax) const {
        throw ParseError(kind, line_, col_, msg);
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& s, int line, int col) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(ParseError::Kind::Syntax, line, col, "expected an integer, got '" + s + "'");
    }
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    Lexer lex(text);
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    std::set<std::string> names;
    while (lex.skip()) {
        const int line = lex.line();
        const int col = lex.col();
        std::string name = lex.name();
        if (!names.insert(name).second) {
            throw ParseError(ParseError::Kind::DuplicateEdge, line, col, "duplicate edge name '" + name + "'");
        }
        lex.expect('(');
        std::vector<std::string> vs;
        lex.skip();
        if (lex.peek() == ')') {
            throw ParseError(ParseError::Kind::EmptyEdge, line, col, "edge '" + name + "' is empty");
        }
        while (true) {
            vs.push_back(lex.name());
            lex.skip();
            if (lex.peek() == ',') {
                lex.advance();
                lex.skip();
                if (lex.peek() == ')') break;  // trailing comma inside the list
                continue;
            }
            break;
        }
        lex.expect(')');
        if (lex.skip() && (lex.peek() == ',' || lex.peek() == '.')) lex.advance();
        edges.emplace_back(std::move(name), std::move(vs));
    }
    return Hypergraph::from_named_edges(std::move(edges));
}

std::string emit_hypergraph(const Hypergraph& h) {
    std::string out;
    for (const auto& e : h.edges()) {
        out += e.name;
        out += '(';
        bool first = true;
        for_each_member(e.vertices, [&](int v) {
            if (!first) out += ',';
            first = false;
            out += h.vertex_name(v);
        });
        out += ")\n";
    }
    return out;
}

std::string emit_decomposition(const Hypergraph& h, const TreeDecomposition& td) {
    std::vector<std::vector<int>> covers(static_cast<std::size_t>(td.size()));
    std::size_t max_cover = 0;
    for (int t = 0; t < td.size(); ++t) {
        const auto& c = td.covers[static_cast<std::size_t>(t)];
        if (c) {
            covers[static_cast<std::size_t>(t)] = *c;
        } else {
            auto mc = min_edge_cover(h, td.bag(t), static_cast<int>(h.num_edges()));
            if (mc) covers[static_cast<std::size_t>(t)] = to_root_edges(h, mc->edges);
        }
        max_cover = std::max(max_cover, covers[static_cast<std::size_t>(t)].size());
    }
    const auto& u = *h.universe();
    std::ostringstream out;
    out << "s ghtd " << td.size() << ' ' << max_cover << ' ' << h.num_vertices() << ' ' << h.num_edges() << '\n';
    for (int t = 0; t < td.size(); ++t) {
        out << "b " << t + 1;
        for_each_member(td.bag(t), [&](int v) { out << ' ' << h.vertex_name(v); });
        out << '\n';
    }
    for (int t = 0; t < td.size(); ++t) {
        out << "c " << t + 1;
        for (int e : covers[static_cast<std::size_t>(t)]) out << ' ' << u.edge_names[static_cast<std::size_t>(e)];
        out << '\n';
    }
    for (int t = 0; t < td.size(); ++t) {
        for (int n : td.adj[static_cast<std::size_t>(t)]) {
            if (t < n) out << t + 1 << ' ' << n + 1 << '\n';
        }
    }
    return out.str();
}

TreeDecomposition parse_decomposition(const Hypergraph& h, std::string_view text, bool check) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    int num_nodes = -1;
    TreeDecomposition td(h.universe_size());
    std::vector<char> bag_seen;
    std::vector<std::pair<int, int>> tree_edges;
    const auto& u = *h.universe();

    auto node_id = [&](const std::string& tok, int line) {
        int id = parse_int(tok, line, 1);
        if (id < 1 || id > num_nodes) {
            throw ParseError(ParseError::Kind::Syntax, line, 1, "node id " + tok + " out of range");
        }
        return id - 1;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto tok = split_ws(raw);
        if (tok.empty()) continue;
        if (num_nodes < 0) {
            if (tok.size() != 6 || tok[0] != "s" || tok[1] != "ghtd") {
                throw ParseError(ParseError::Kind::BadHeader, line_no, 1, "expected 's ghtd <nodes> <cover> <vertices> <edges>'");
            }
            num_nodes = parse_int(tok[2], line_no, 1);
            parse_int(tok[3], line_no, 1);
            const int nv = parse_int(tok[4], line_no, 1);
            const int ne = parse_int(tok[5], line_no, 1);
            if (num_nodes < 1) throw ParseError(ParseError::Kind::BadHeader, line_no, 1, "need at least one node");
            if (nv != static_cast<int>(h.num_vertices()) || ne != static_cast<int>(h.num_edges())) {
                throw ParseError(ParseError::Kind::BadHeader, line_no, 1, "header does not match the hypergraph");
            }
            for (int i = 0; i < num_nodes; ++i) td.add_node(h.empty_set());
            bag_seen.assign(static_cast<std::size_t>(num_nodes), 0);
            continue;
        }
        if (tok[0] == "b" || tok[0] == "c") {
            if (tok.size() < 2) throw ParseError(ParseError::Kind::Syntax, line_no, 1, "missing node id");
            const int t = node_id(tok[1], line_no);
            if (tok[0] == "b") {
                if (bag_seen[static_cast<std::size_t>(t)]) {
                    throw ParseError(ParseError::Kind::Syntax, line_no, 1, "bag " + tok[1] + " given twice");
                }
                bag_seen[static_cast<std::size_t>(t)] = 1;
                for (std::size_t i = 2; i < tok.size(); ++i) {
                    auto v = h.find_vertex(tok[i]);
                    if (!v) throw ParseError(ParseError::Kind::UnknownName, line_no, 1, "unknown vertex '" + tok[i] + "'");
                    td.bags[static_cast<std::size_t>(t)].set(static_cast<std::size_t>(*v));
                }
            } else {
                std::vector<int> cover;
                for (std::size_t i = 2; i < tok.size(); ++i) {
                    auto it = u.edge_index.find(tok[i]);
                    if (it == u.edge_index.end() || !h.find_edge(tok[i])) {
                        throw ParseError(ParseError::Kind::UnknownName, line_no, 1, "unknown edge '" + tok[i] + "'");
                    }
                    cover.push_back(it->second);
                }
                std::sort(cover.begin(), cover.end());
                td.covers[static_cast<std::size_t>(t)] = std::move(cover);
            }
            continue;
        }
        if (tok.size() != 2) throw ParseError(ParseError::Kind::Syntax, line_no, 1, "expected '<id1> <id2>'");
        tree_edges.emplace_back(node_id(tok[0], line_no), node_id(tok[1], line_no));
    }
    if (num_nodes < 0) throw ParseError(ParseError::Kind::BadHeader, line_no, 1, "missing header");

    if (static_cast<int>(tree_edges.size()) != num_nodes - 1) {
        throw ParseError(ParseError::Kind::NotATree, line_no, 1, "a tree on n nodes has n-1 edges");
    }
    for (auto [a, b] : tree_edges) {
        if (a == b) throw ParseError(ParseError::Kind::NotATree, line_no, 1, "self loop in tree edges");
        td.add_edge(a, b);
    }
    ValidationReport rep = validate(h, td);
    if (rep.has(ViolationKind::NotATree)) {
        throw ParseError(ParseError::Kind::NotATree, line_no, 1, "tree edges do not form a tree");
    }
    if (check && !rep.ok()) throw InvalidDecomposition(std::move(rep));
    return td;
}

}  // namespace ghw
