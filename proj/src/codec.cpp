#include <algorithm>
#include <string>
#include <vector>

#include "fr/graph.hpp"

namespace fr {

namespace {

constexpr int kLo = 63;  // '?'
constexpr int kHi = 126; // '~'

struct BitReader {
    const std::string& s;
    size_t pos;      // byte index into s
    int bit = 0;     // next bit within current byte, 0 = MSB of the 6

    explicit BitReader(const std::string& str, size_t start) : s(str), pos(start) {}

    bool has(int nbits) const {
        size_t avail = (s.size() - pos) * 6 - static_cast<size_t>(bit);
        return avail >= static_cast<size_t>(nbits);
    }

    int take1() {
        int byte = s[pos] - kLo;
        int b = (byte >> (5 - bit)) & 1;
        if (++bit == 6) {
            bit = 0;
            ++pos;
        }
        return b;
    }

    long take(int nbits) {
        long x = 0;
        for (int i = 0; i < nbits; ++i) x = (x << 1) | take1();
        return x;
    }
};

struct BitWriter {
    std::string out;
    int cur = 0, nbits = 0;

    void put1(int b) {
        cur = (cur << 1) | (b & 1);
        if (++nbits == 6) {
            out.push_back(static_cast<char>(cur + kLo));
            cur = 0;
            nbits = 0;
        }
    }

    void put(long x, int width) {
        for (int i = width - 1; i >= 0; --i) put1(static_cast<int>((x >> i) & 1));
    }

    int pending() const { return nbits; }

    void pad_ones() {
        while (nbits != 0) put1(1);
    }
};

void check_chars(const std::string& s, size_t from) {
    for (size_t i = from; i < s.size(); ++i)
        if (s[i] < kLo || s[i] > kHi)
            throw Error(ErrorCode::MalformedEncoding, "byte out of graph6 range");
}

int decode_n(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw Error(ErrorCode::MalformedEncoding, "empty encoding");
    int c = s[pos];
    if (c < kLo || c > kHi) throw Error(ErrorCode::MalformedEncoding, "bad size byte");
    if (c < kHi) {
        ++pos;
        return c - kLo;
    }
    // '~': 3-byte or '~~': 6-byte size
    if (pos + 1 < s.size() && s[pos + 1] == kHi) {
        if (pos + 8 > s.size()) throw Error(ErrorCode::MalformedEncoding, "truncated size");
        long n = 0;
        for (size_t i = pos + 2; i < pos + 8; ++i) n = (n << 6) | (s[i] - kLo);
        pos += 8;
        if (n > 1'000'000) throw Error(ErrorCode::MalformedEncoding, "graph too large");
        return static_cast<int>(n);
    }
    if (pos + 4 > s.size()) throw Error(ErrorCode::MalformedEncoding, "truncated size");
    long n = 0;
    for (size_t i = pos + 1; i < pos + 4; ++i) n = (n << 6) | (s[i] - kLo);
    pos += 4;
    return static_cast<int>(n);
}

void encode_n(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kLo));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kHi));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kLo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kLo));
        out.push_back(static_cast<char>((n & 63) + kLo));
    } else {
        out.push_back(static_cast<char>(kHi));
        out.push_back(static_cast<char>(kHi));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kLo));
    }
}

int bits_for(int n) {
    // bits needed for n-1, at least 1
    int k = 1;
    while ((1 << k) < n) ++k;
    return std::max(k, 1);
}

RawGraph decode_graph6_body(const std::string& s) {
    size_t pos = 0;
    int n = decode_n(s, pos);
    check_chars(s, pos);
    long need = static_cast<long>(n) * (n - 1) / 2;
    long have = static_cast<long>(s.size() - pos) * 6;
    if (have < need) throw Error(ErrorCode::MalformedEncoding, "truncated graph6 body");
    RawGraph g;
    g.n = n;
    BitReader r(s, pos);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (r.take1()) g.edges.emplace_back(i, j);
    return g;
}

RawGraph decode_sparse6_body(const std::string& s) {
    size_t pos = 1; // skip ':'
    int n = decode_n(s, pos);
    check_chars(s, pos);
    RawGraph g;
    g.n = n;
    if (n == 0) return g;
    int k = bits_for(n);
    BitReader r(s, pos);
    long v = 0;
    while (r.has(k + 1)) {
        int b = r.take1();
        long x = r.take(k);
        if (b) ++v;
        if (x >= n || v >= n) break;
        if (x > v)
            v = x;
        else
            g.edges.emplace_back(static_cast<int>(x), static_cast<int>(v));
    }
    return g;
}

} // namespace

RawGraph decode_graph_line(const std::string& line) {
    std::string s = line;
    // strip trailing whitespace
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.rfind(">>sparse6<<", 0) == 0) s = s.substr(11);
    if (s.empty()) throw Error(ErrorCode::MalformedEncoding, "empty line");
    if (s[0] == ':') return decode_sparse6_body(s);
    return decode_graph6_body(s);
}

std::string encode_graph6(const RawGraph& g) {
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (auto [u, v] : g.edges) {
        if (u == v) throw Error(ErrorCode::LoopPresent, "graph6 cannot encode loops");
        if (adj[u][v]) throw Error(ErrorCode::MalformedEncoding, "graph6 cannot encode parallel edges");
        adj[u][v] = adj[v][u] = 1;
    }
    std::string out;
    encode_n(out, g.n);
    BitWriter w;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) w.put1(adj[i][j]);
    while (w.pending() != 0) w.put1(0);
    return out + w.out;
}

std::string encode_sparse6(const RawGraph& g) {
    std::string out = ":";
    encode_n(out, g.n);
    int n = g.n;
    int k = bits_for(std::max(n, 2));
    auto edges = g.edges;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end(),
              [](auto a, auto b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
    BitWriter w;
    long curv = 0;
    for (auto [u, v] : edges) {
        if (v == curv) {
            w.put1(0);
            w.put(u, k);
        } else if (v == curv + 1) {
            ++curv;
            w.put1(1);
            w.put(u, k);
        } else {
            curv = v;
            w.put1(1);
            w.put(v, k);
            w.put1(0);
            w.put(u, k);
        }
    }
    // final-byte padding; the extra 0 keeps small power-of-two orders from
    // decoding a spurious loop on vertex n-1
    int rem = (6 - w.pending()) % 6;
    if (k < 6 && n == (1 << k) && rem >= k && curv < n - 1) w.put1(0);
    w.pad_ones();
    return out + w.out;
}

std::string encode_graph_line(const RawGraph& g) {
    std::vector<std::pair<int, int>> norm = g.edges;
    for (auto& [u, v] : norm)
        if (u > v) std::swap(u, v);
    std::sort(norm.begin(), norm.end());
    bool multi = std::adjacent_find(norm.begin(), norm.end()) != norm.end();
    return multi ? encode_sparse6(g) : encode_graph6(g);
}

CubicGraph parse_graph6(const std::string& text) {
    return CubicGraph::from_raw(decode_graph_line(text));
}

} // namespace fr
