#include "thetakit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace thetakit {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char c) {
    const int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw ParseError("graph6: byte outside the printable range");
    return v;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Graph from_graph6(std::string_view raw) {
    std::string text = trim(raw);
    if (text.starts_with(kHeader)) text.erase(0, kHeader.size());
    if (text.empty()) throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != '~') {
        n = decode_byte(text[0]);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw ParseError("graph6: truncated size header");
        for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(text[i]);
        pos = 4;
    } else {
        if (text.size() < 8) throw ParseError("graph6: truncated size header");
        for (int i = 2; i <= 7; ++i) n = (n << 6) | decode_byte(text[i]);
        pos = 8;
    }
    if (n < 1) throw ParseError("graph6: graph must have at least one vertex");
    if (n > (1LL << 20)) throw ParseError("graph6: vertex count too large");

    const long long bits = n * (n - 1) / 2;
    const long long need = (bits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) != need)
        throw ParseError("graph6: bit stream length does not match vertex count");

    Graph g(static_cast<int>(n));
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = decode_byte(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const long long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph from_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0;
    if (!(in >> n)) throw ParseError("edge list: missing vertex count");
    if (n < 1 || n > (1LL << 20)) throw ParseError("edge list: invalid vertex count");
    std::vector<std::pair<int, int>> edges;
    long long u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("edge list: dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: endpoint out of range");
        if (u == v) throw ParseError("edge list: self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) throw ParseError("edge list: non-numeric token");
    return from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_graph6_file(const std::filesystem::path& path) {
    Graph g = from_graph6(slurp(path));
    g.meta().name = path.stem().string();
    return g;
}

Graph read_edge_list_file(const std::filesystem::path& path) {
    Graph g = from_edge_list_text(slurp(path));
    g.meta().name = path.stem().string();
    return g;
}

}  // namespace thetakit
