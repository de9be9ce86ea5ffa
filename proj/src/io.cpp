#include "gp/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace gp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int g6_char_value(char c) {
    if (c < 63 || c > 126) fail(errc::parse, std::string("illegal graph6 character '") + c + "'");
    return c - 63;
}

} // namespace

std::string g6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(char(63 + ((n >> 12) & 63)));
        out.push_back(char(63 + ((n >> 6) & 63)));
        out.push_back(char(63 + (n & 63)));
    } else {
        fail(errc::cap_exceeded, "graph order beyond graph6 encoder support");
    }
    int bit = 5;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= 1 << bit;
            if (bit-- == 0) {
                out.push_back(char(63 + cur));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(char(63 + cur));
    return out;
}

Graph g6_decode(std::string_view text) {
    std::string_view s = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) fail(errc::parse, "empty graph6 input");
    if (s.front() == ':' || s.front() == ';') fail(errc::parse, "sparse6 input not supported");

    size_t pos = 0;
    long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            fail(errc::cap_exceeded, "graph6 length form beyond decoder cap");
        if (s.size() < 4) fail(errc::parse, "truncated graph6 length header");
        n = (long(g6_char_value(s[1])) << 12) | (long(g6_char_value(s[2])) << 6) |
            long(g6_char_value(s[3]));
        if (n <= 62) fail(errc::parse, "non-canonical graph6 length header");
        pos = 4;
    } else {
        n = g6_char_value(s[0]);
        pos = 1;
    }
    if (n < 1) fail(errc::parse, "graph6 order must be at least 1");
    if (n > kG6DecodeOrderCap) fail(errc::cap_exceeded, "graph order beyond decoder cap");

    const long bits_needed = n * (n - 1) / 2;
    const size_t chars_needed = size_t((bits_needed + 5) / 6);
    if (s.size() - pos < chars_needed) fail(errc::parse, "truncated graph6 body");
    if (s.size() - pos > chars_needed) fail(errc::parse, "trailing characters after graph6 body");

    std::vector<std::pair<int, int>> edges;
    long bit_index = 0;
    int i = 0, j = 1; // column-major upper triangle walk
    for (size_t k = 0; k < chars_needed; ++k) {
        int v = g6_char_value(s[pos + k]);
        for (int b = 5; b >= 0; --b, ++bit_index) {
            const bool on = (v >> b) & 1;
            if (bit_index >= bits_needed) {
                if (on) fail(errc::parse, "nonzero trailing bits in graph6 body");
                continue;
            }
            if (on) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph(int(n), edges);
}

std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const EdgeRef& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph edge_list_parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n = 0, m = 0;
    if (!(in >> n >> m)) fail(errc::parse, "edge list header must be \"n m\"");
    if (n < 1) fail(errc::parse, "edge list order must be at least 1");
    if (m < 0) fail(errc::parse, "edge list size must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(m));
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v))
            fail(errc::parse, "edge list ends after " + std::to_string(i) + " of " +
                                  std::to_string(m) + " edges");
        edges.emplace_back(int(u), int(v));
    }
    std::string rest;
    if (in >> rest) fail(errc::parse, "trailing tokens after edge list");
    try {
        return Graph(int(n), edges);
    } catch (const error& e) {
        fail(errc::parse, std::string("invalid edge list: ") + e.what());
    }
}

} // namespace gp
