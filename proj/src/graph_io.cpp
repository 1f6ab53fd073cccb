/*
   Copyright 2026 The nutforge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "nutforge/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace nutforge {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return trim(hash == std::string::npos ? line : line.substr(0, hash));
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

long parse_long(const std::string& tok, const std::string& context) {
    long value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
        throw ParseError(context + ": '" + tok + "' is not an integer");
    return value;
}

int parse_int(const std::string& tok, const std::string& context) {
    const long v = parse_long(tok, context);
    if (v < -(1L << 30) || v > (1L << 30)) throw ParseError(context + ": '" + tok + "' is out of range");
    return static_cast<int>(v);
}

std::vector<int> parse_int_list(const std::string& s, const std::string& context) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(parse_int(trim(s.substr(start, comma - start)), context));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::set<int> parse_set(const std::map<std::string, std::string>& kv, const std::string& key, int modulus,
                        const std::string& kind) {
    auto it = kv.find(key);
    if (it == kv.end()) return {};
    std::set<int> out;
    for (int v : parse_int_list(it->second, kind + " " + key)) {
        const int r = ((v % modulus) + modulus) % modulus;
        out.insert(r);
    }
    return out;
}

std::string join(const std::set<int>& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

void encode_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    }
}

bool looks_like_spec(const std::string& line) {
    const std::string head = line.substr(0, line.find_first_of(" \t"));
    return head == "circulant" || head == "dihedral" || head == "bicirculant";
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    encode_size(out, static_cast<std::uint64_t>(n));
    int acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + 63);
    return out;
}

Graph from_graph6(const std::string& raw) {
    std::string s = trim(raw);
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw ParseError("graph6: empty input");
    for (char c : s)
        if (c < 63 || c > 126) throw ParseError("graph6: invalid character in '" + s + "'");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&](int count) {
        std::uint64_t v = 0;
        for (int k = 0; k < count; ++k) {
            if (pos >= s.size()) throw ParseError("graph6: truncated size field");
            v = (v << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
        }
        return v;
    };
    if (s[0] != '~') {
        n = take(1);
    } else if (s.size() > 1 && s[1] == '~') {
        pos = 2;
        n = take(6);
    } else {
        pos = 1;
        n = take(3);
    }
    if (n > 100000) throw ParseError("graph6: order " + std::to_string(n) + " is too large");

    const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != need)
        throw ParseError("graph6: expected " + std::to_string(need) + " data bytes for order " + std::to_string(n) +
                         ", found " + std::to_string(s.size() - pos));

    Graph g(static_cast<int>(n));
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = s[pos + k / 6] - 63;
            if (byte >> (5 - k % 6) & 1) g.add_edge(i, j);
        }
    return g;
}

std::string to_adjacency_list(const Graph& g) {
    std::string out;
    for (int v = 0; v < g.order(); ++v) {
        out += std::to_string(v) + ':';
        for (int u : g.neighbours(v)) out += ' ' + std::to_string(u);
        out += '\n';
    }
    return out;
}

Graph from_adjacency_list(const std::string& text) {
    std::vector<std::pair<int, std::vector<int>>> rows;
    int max_vertex = -1;
    int lineno = 0;
    for (const std::string& raw : lines_of(text)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (line.empty()) continue;
        const std::string ctx = "adjacency list line " + std::to_string(lineno);
        std::replace(line.begin(), line.end(), ':', ' ');
        std::istringstream in(line);
        std::string tok;
        in >> tok;
        const int v = parse_int(tok, ctx);
        if (v < 0) throw ParseError(ctx + ": negative vertex");
        std::vector<int> nbrs;
        while (in >> tok) {
            const int u = parse_int(tok, ctx);
            if (u < 0) throw ParseError(ctx + ": negative vertex");
            if (u == v) throw ParseError(ctx + ": self-loop at vertex " + std::to_string(v));
            nbrs.push_back(u);
            max_vertex = std::max(max_vertex, u);
        }
        max_vertex = std::max(max_vertex, v);
        rows.emplace_back(v, std::move(nbrs));
    }
    if (rows.empty()) throw ParseError("adjacency list: no vertices");
    if (max_vertex > 100000) throw ParseError("adjacency list: vertex index too large");
    Graph g(max_vertex + 1);
    for (const auto& [v, nbrs] : rows)
        for (int u : nbrs) g.add_edge(v, u);
    return g;
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

GraphSpec parse_graph_spec(const std::string& raw) {
    const std::string line = strip_comment(raw);
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    std::map<std::string, std::string> kv;
    for (std::string tok; in >> tok;) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError(kind + ": expected key=value, got '" + tok + "'");
        if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
            throw ParseError(kind + ": duplicate key '" + tok.substr(0, eq) + "'");
    }
    auto require_keys = [&](std::initializer_list<const char*> allowed, const char* size_key) {
        for (const auto& [k, v] : kv)
            if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }) == allowed.end())
                throw ParseError(kind + ": unknown key '" + k + "'");
        auto it = kv.find(size_key);
        if (it == kv.end()) throw ParseError(kind + ": missing " + size_key + "=");
        const int size = parse_int(it->second, kind + " " + size_key);
        if (size < 3) throw ParseError(kind + ": " + size_key + " must be at least 3");
        return size;
    };

    try {
        if (kind == "circulant") {
            const int n = require_keys({"n", "jumps"}, "n");
            CirculantSpec spec{n, {}};
            for (int j : parse_set(kv, "jumps", n, kind)) spec.jumps.insert(std::min(j, n - j));
            spec.jumps.erase(0);
            spec.validate();
            return spec;
        }
        if (kind == "dihedral") {
            const int m = require_keys({"m", "rot", "refl"}, "m");
            DihedralSpec spec{m, parse_set(kv, "rot", m, kind), parse_set(kv, "refl", m, kind)};
            spec.validate();
            return spec;
        }
        if (kind == "bicirculant") {
            const int m = require_keys({"m", "s0", "s1", "s2"}, "m");
            BicirculantSpec spec{m, parse_set(kv, "s0", m, kind), parse_set(kv, "s1", m, kind),
                                 parse_set(kv, "s2", m, kind)};
            spec.validate();
            return spec;
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown graph family '" + kind + "' (expected circulant, dihedral or bicirculant)");
}

std::string to_string(const GraphSpec& spec) {
    struct Visitor {
        std::string operator()(const CirculantSpec& s) const {
            return "circulant n=" + std::to_string(s.n) + " jumps=" + join(s.jumps);
        }
        std::string operator()(const DihedralSpec& s) const {
            return "dihedral m=" + std::to_string(s.m) + " rot=" + join(s.rotations) + " refl=" + join(s.reflections);
        }
        std::string operator()(const BicirculantSpec& s) const {
            return "bicirculant m=" + std::to_string(s.m) + " s0=" + join(s.s0) + " s1=" + join(s.s1) +
                   " s2=" + join(s.s2);
        }
    };
    return std::visit(Visitor{}, spec);
}

Graph build_graph(const GraphSpec& spec) {
    struct Visitor {
        Graph operator()(const CirculantSpec& s) const { return build_circulant(s); }
        Graph operator()(const DihedralSpec& s) const { return build_dihedral(s); }
        Graph operator()(const BicirculantSpec& s) const { return build_bicirculant(s); }
    };
    return std::visit(Visitor{}, spec);
}

InputFormat parse_input_format(const std::string& name) {
    if (name == "auto") return InputFormat::automatic;
    if (name == "graph6" || name == "g6") return InputFormat::graph6;
    if (name == "adjlist" || name == "adjacency-list") return InputFormat::adjacency_list;
    if (name == "spec") return InputFormat::spec;
    throw ParseError("unknown input format '" + name + "'");
}

std::vector<GraphInput> read_graphs(const std::string& text, InputFormat format) {
    std::vector<std::string> content;
    for (const std::string& raw : lines_of(text)) {
        const std::string line = strip_comment(raw);
        if (!line.empty()) content.push_back(line);
    }
    if (content.empty()) throw ParseError("input contains no graph");

    if (format == InputFormat::automatic) {
        const std::string& first = content.front();
        if (looks_like_spec(first))
            format = InputFormat::spec;
        else if (first.find(':') != std::string::npos || first.find_first_of(" \t") != std::string::npos ||
                 std::all_of(first.begin(), first.end(), [](unsigned char c) { return std::isdigit(c); }))
            format = InputFormat::adjacency_list;
        else
            format = InputFormat::graph6;
    }

    std::vector<GraphInput> out;
    switch (format) {
        case InputFormat::adjacency_list:
            out.push_back({from_adjacency_list(text), "adjacency list", std::nullopt});
            break;
        case InputFormat::graph6:
            for (const auto& line : content) out.push_back({from_graph6(line), line, std::nullopt});
            break;
        case InputFormat::spec:
            for (const auto& line : content) {
                GraphSpec spec = parse_graph_spec(line);
                out.push_back({build_graph(spec), to_string(spec), spec});
            }
            break;
        case InputFormat::automatic:
            break;
    }
    return out;
}

}  // namespace nutforge
