#include "vulngraph/graph_io.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <unordered_map>

namespace vulngraph {

namespace {

constexpr std::size_t kShortFormMax = 62;
constexpr std::size_t kLongFormMax = 258047;

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

bool is_graph6_char(char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kLongFormMax) {
        throw GraphError("graph6 supports at most " + std::to_string(kLongFormMax) + " vertices");
    }
    std::string out;
    if (n <= kShortFormMax) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    unsigned group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    }
    return out;
}

Graph from_graph6(std::string_view raw) {
    std::string text = trim(raw);
    if (text.rfind(">>graph6<<", 0) == 0) {
        text.erase(0, 10);
    }
    if (text.empty()) {
        throw ParseError("graph6: empty input");
    }
    for (char c : text) {
        if (!is_graph6_char(c)) {
            throw ParseError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                             " outside the printable range 63..126");
        }
    }
    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] != 126) {
        n = static_cast<std::size_t>(text[0] - 63);
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) {
            throw ParseError("graph6: only the short and 18-bit size forms are supported");
        }
        n = (static_cast<std::size_t>(text[1] - 63) << 12) | (static_cast<std::size_t>(text[2] - 63) << 6) |
            static_cast<std::size_t>(text[3] - 63);
        pos = 4;
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected) {
        throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for n = " +
                         std::to_string(n) + ", found " + std::to_string(text.size() - pos));
    }
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const unsigned byte = static_cast<unsigned>(text[pos + k / 6] - 63);
            if ((byte >> (5 - k % 6)) & 1U) {
                edges.emplace_back(i, j);
            }
        }
    }
    // Padding bits must be zero.
    if (bits % 6 != 0) {
        const unsigned last = static_cast<unsigned>(text.back() - 63);
        if ((last & ((1U << (6 - bits % 6)) - 1)) != 0) {
            throw ParseError("graph6: non-zero padding bits");
        }
    }
    return build_graph(n, edges);
}

GraphDocument read_edgelist(std::istream& in) {
    GraphDocument doc;
    doc.format = GraphFormat::edgelist;
    std::unordered_map<std::string, Vertex> index;
    std::vector<Edge> edges;
    auto vertex_of = [&](const std::string& token) {
        auto [it, inserted] = index.try_emplace(token, static_cast<Vertex>(doc.labels.size()));
        if (inserted) {
            doc.labels.push_back(token);
        }
        return it->second;
    };
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        std::istringstream fields(body);
        std::vector<std::string> tokens{std::istream_iterator<std::string>(fields), {}};
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected \"u v\", got \"" + body + "\"",
                             line_no);
        }
        if (tokens[0] == tokens[1]) {
            throw ParseError("line " + std::to_string(line_no) + ": self-loop on \"" + tokens[0] + "\"", line_no);
        }
        const Vertex u = vertex_of(tokens[0]);
        const Vertex v = vertex_of(tokens[1]);
        edges.emplace_back(u, v);
    }
    doc.graph = build_graph(doc.labels.size(), edges);
    return doc;
}

void write_edgelist(std::ostream& out, const Graph& g) {
    out << "# n=" << g.order() << " m=" << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

GraphDocument read_graph_document(std::istream& in, GraphFormat format) {
    if (format == GraphFormat::edgelist) {
        return read_edgelist(in);
    }
    std::string text{std::istreambuf_iterator<char>(in), {}};
    GraphDocument doc;
    doc.format = GraphFormat::graph6;
    doc.graph = from_graph6(text);
    return doc;
}

GraphDocument read_graph_document(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), {}};
    const std::string body = trim(text);
    const bool looks_graph6 = !body.empty() &&
                              (body.rfind(">>graph6<<", 0) == 0 || std::all_of(body.begin(), body.end(), is_graph6_char));
    std::istringstream again(text);
    return read_graph_document(again, looks_graph6 ? GraphFormat::graph6 : GraphFormat::edgelist);
}

}  // namespace vulngraph
