// Trees, named tree families, and combinatorial primitives.
//
// Vertex indexing of the family constructors is fixed so that spectra and
// explicit eigenfunction constructions downstream are reproducible:
//   build_spider        center = 0, then part-major, leg-minor, increasing
//                       distance from the center
//   build_crab          first center u0 = 0, its legs (leg-major, increasing
//                       distance), then second center v0 = b1*r + 1, its legs
//   build_extra_special delegates to build_spider with parts
//                       [(1,p+2), (1,p+1), (b-2,p)]
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treespectra {

struct TreeGraph {
    int n = 0;
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
    std::vector<std::pair<int, int>> edges;   // u < v, lexicographically sorted

    static TreeGraph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }

    // Throws std::invalid_argument if any tree invariant is broken.
    void validate() const;
};

// Distinguished vertex subset acting as the boundary of the Steklov problem.
struct BoundarySet {
    std::vector<int> members;  // sorted, unique

    int size() const { return static_cast<int>(members.size()); }
};

inline TreeGraph TreeGraph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 1) throw std::invalid_argument("TreeGraph: vertex count must be >= 1");
    if (static_cast<int>(edge_list.size()) != n - 1)
        throw std::invalid_argument("TreeGraph: edge count must equal n - 1");
    TreeGraph t;
    t.n = n;
    t.adjacency.assign(n, {});
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("TreeGraph: vertex index out of range");
        if (u == v) throw std::invalid_argument("TreeGraph: self-loop");
        if (u > v) std::swap(u, v);
        t.adjacency[u].push_back(v);
        t.adjacency[v].push_back(u);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("TreeGraph: duplicate edge");
    t.edges = std::move(edge_list);
    for (auto& nb : t.adjacency) std::sort(nb.begin(), nb.end());
    // n-1 edges and connectivity together make a tree
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.adjacency[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) throw std::invalid_argument("TreeGraph: not connected");
    return t;
}

inline void TreeGraph::validate() const {
    TreeGraph copy = from_edges(n, edges);
    if (copy.adjacency != adjacency)
        throw std::invalid_argument("TreeGraph: adjacency inconsistent with edge list");
}

// ---------------------------------------------------------------------------
// Named families

inline TreeGraph build_path(int n) {
    if (n < 1) throw std::invalid_argument("build_path: n >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return TreeGraph::from_edges(n, std::move(e));
}

inline TreeGraph build_star(int n) {
    if (n < 2) throw std::invalid_argument("build_star: n >= 2 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return TreeGraph::from_edges(n, std::move(e));
}

// parts = [(p_1, l_1), (p_2, l_2), ...]: p_i legs of length l_i glued at one
// center. Lengths must be non-ascending and the total leg count >= 2.
// Parts with p_i = 0 are accepted and treated as absent.
inline TreeGraph build_spider(const std::vector<std::pair<int, int>>& parts) {
    long long total_legs = 0;
    int prev_len = INT32_MAX;
    for (auto [p, l] : parts) {
        if (p < 0) throw std::invalid_argument("build_spider: leg count must be >= 0");
        if (l < 1) throw std::invalid_argument("build_spider: leg length must be >= 1");
        if (l > prev_len) throw std::invalid_argument("build_spider: lengths must be non-ascending");
        prev_len = l;
        total_legs += p;
    }
    if (total_legs < 2) throw std::invalid_argument("build_spider: at least two legs required");
    std::vector<std::pair<int, int>> e;
    int idx = 1;
    for (auto [p, l] : parts)
        for (int leg = 0; leg < p; ++leg) {
            int prev = 0;
            for (int j = 0; j < l; ++j) {
                e.emplace_back(prev, idx);
                prev = idx++;
            }
        }
    return TreeGraph::from_edges(idx, std::move(e));
}

// Two centers u0 ~ v0 carrying b1 and b2 legs of length r.
inline TreeGraph build_crab(int b1, int b2, int r) {
    if (b1 < 1 || b2 < 1 || r < 1) throw std::invalid_argument("build_crab: b1, b2, r >= 1 required");
    std::vector<std::pair<int, int>> e;
    int idx = 1;
    for (int leg = 0; leg < b1; ++leg) {
        int prev = 0;
        for (int j = 0; j < r; ++j) {
            e.emplace_back(prev, idx);
            prev = idx++;
        }
    }
    const int v0 = idx++;
    e.emplace_back(0, v0);
    for (int leg = 0; leg < b2; ++leg) {
        int prev = v0;
        for (int j = 0; j < r; ++j) {
            e.emplace_back(prev, idx);
            prev = idx++;
        }
    }
    return TreeGraph::from_edges(idx, std::move(e));
}

inline TreeGraph build_extra_special(int b, int p) {
    if (b < 3 || p < 1) throw std::invalid_argument("build_extra_special: b >= 3, p >= 1 required");
    return build_spider({{1, p + 2}, {1, p + 1}, {b - 2, p}});
}

// ---------------------------------------------------------------------------
// Combinatorial primitives

inline BoundarySet leaves(const TreeGraph& t) {
    BoundarySet b;
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) == 1) b.members.push_back(v);
    return b;
}

namespace detail {
inline std::pair<int, int> bfs_farthest(const TreeGraph& t, int s) {
    std::vector<int> dist(t.n, -1);
    std::vector<int> queue = {s};
    dist[s] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (int w : t.adjacency[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    int far = s;
    for (int v = 0; v < t.n; ++v)
        if (dist[v] > dist[far]) far = v;
    return {far, dist[far]};
}
}  // namespace detail

inline int diameter(const TreeGraph& t) {
    if (t.n == 1) return 0;
    auto [a, _] = detail::bfs_farthest(t, 0);
    return detail::bfs_farthest(t, a).second;
}

// Maximum matching size via leaf stripping: process vertices children-first
// and match each free vertex to its free parent. Optimal on trees.
inline int matching_number(const TreeGraph& t) {
    if (t.n == 1) return 0;
    std::vector<int> parent(t.n, -1), order;
    order.reserve(t.n);
    std::vector<char> seen(t.n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : t.adjacency[v])
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    std::vector<char> matched(t.n, 0);
    int m = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (v == 0) continue;
        if (!matched[v] && !matched[parent[v]]) {
            matched[v] = matched[parent[v]] = 1;
            ++m;
        }
    }
    return m;
}

namespace detail {
inline std::vector<int> tree_centers(const TreeGraph& t) {
    if (t.n <= 2) {
        std::vector<int> c(t.n);
        for (int v = 0; v < t.n; ++v) c[v] = v;
        return c;
    }
    std::vector<int> deg(t.n);
    std::vector<char> removed(t.n, 0);
    std::vector<int> layer;
    for (int v = 0; v < t.n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = t.n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int w : t.adjacency[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < t.n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

inline std::string ahu_rooted(const TreeGraph& t, int root, int parent) {
    std::vector<std::string> child_codes;
    for (int w : t.adjacency[root])
        if (w != parent) child_codes.push_back(ahu_rooted(t, w, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (auto& c : child_codes) code += c;
    code += ")";
    return code;
}
}  // namespace detail

// AHU encoding rooted at the tree center; equal codes iff isomorphic.
// Bicentral trees concatenate the two half codes in sorted order, which
// cannot collide with a single-rooted code (one vs two top-level groups).
inline std::string canonical_code(const TreeGraph& t) {
    auto centers = detail::tree_centers(t);
    if (centers.size() == 1) return detail::ahu_rooted(t, centers[0], -1);
    std::string a = detail::ahu_rooted(t, centers[0], centers[1]);
    std::string b = detail::ahu_rooted(t, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return a + b;
}

inline bool is_isomorphic(const TreeGraph& a, const TreeGraph& b) {
    return a.n == b.n && canonical_code(a) == canonical_code(b);
}

// ---------------------------------------------------------------------------
// FamilySpec: symbolic descriptor of a named family instance.
// Text forms: path:n, star:n, spider:p1xL1,p2xL2,..., crab:b1,b2,r, es:b,p

struct FamilySpec {
    enum class Kind { path, star, spider, crab, extra_special };

    Kind kind = Kind::path;
    int n = 0;                              // path, star
    std::vector<std::pair<int, int>> parts; // spider: (count, length)
    int b1 = 0, b2 = 0, r = 0;              // crab
    int b = 0, p = 0;                       // extra special

    static FamilySpec path(int n) { FamilySpec f; f.kind = Kind::path; f.n = n; return f; }
    static FamilySpec star(int n) { FamilySpec f; f.kind = Kind::star; f.n = n; return f; }
    static FamilySpec spider(std::vector<std::pair<int, int>> parts) {
        FamilySpec f;
        f.kind = Kind::spider;
        f.parts = std::move(parts);
        return f;
    }
    static FamilySpec crab(int b1, int b2, int r) {
        FamilySpec f;
        f.kind = Kind::crab;
        f.b1 = b1; f.b2 = b2; f.r = r;
        return f;
    }
    static FamilySpec extra_special(int b, int p) {
        FamilySpec f;
        f.kind = Kind::extra_special;
        f.b = b; f.p = p;
        return f;
    }

    TreeGraph build() const {
        switch (kind) {
            case Kind::path: return build_path(n);
            case Kind::star: return build_star(n);
            case Kind::spider: return build_spider(parts);
            case Kind::crab: return build_crab(b1, b2, r);
            case Kind::extra_special: return build_extra_special(b, p);
        }
        throw std::logic_error("FamilySpec: bad kind");
    }

    std::string to_string() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::path: os << "path:" << n; break;
            case Kind::star: os << "star:" << n; break;
            case Kind::spider: {
                os << "spider:";
                for (size_t i = 0; i < parts.size(); ++i) {
                    if (i) os << ',';
                    os << parts[i].first << 'x' << parts[i].second;
                }
                break;
            }
            case Kind::crab: os << "crab:" << b1 << ',' << b2 << ',' << r; break;
            case Kind::extra_special: os << "es:" << b << ',' << p; break;
        }
        return os.str();
    }

    static FamilySpec parse(const std::string& text);
};

namespace detail {
inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline int parse_int(const std::string& s) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("FamilySpec: bad integer '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("FamilySpec: bad integer '" + s + "'");
    return v;
}
}  // namespace detail

inline FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("FamilySpec: expected '<kind>:<params>', got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (kind == "path") return path(detail::parse_int(rest));
    if (kind == "star") return star(detail::parse_int(rest));
    if (kind == "crab") {
        auto f = detail::split(rest, ',');
        if (f.size() != 3) throw std::invalid_argument("FamilySpec: crab wants b1,b2,r");
        return crab(detail::parse_int(f[0]), detail::parse_int(f[1]), detail::parse_int(f[2]));
    }
    if (kind == "es") {
        auto f = detail::split(rest, ',');
        if (f.size() != 2) throw std::invalid_argument("FamilySpec: es wants b,p");
        return extra_special(detail::parse_int(f[0]), detail::parse_int(f[1]));
    }
    if (kind == "spider") {
        std::vector<std::pair<int, int>> parts;
        for (const auto& item : detail::split(rest, ',')) {
            auto x = item.find('x');
            if (x == std::string::npos)
                throw std::invalid_argument("FamilySpec: spider wants p1xL1,p2xL2,...");
            parts.emplace_back(detail::parse_int(item.substr(0, x)),
                               detail::parse_int(item.substr(x + 1)));
        }
        return spider(std::move(parts));
    }
    throw std::invalid_argument("FamilySpec: unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Edge-list text format: first line n, then one "u v" pair per line, 0-indexed.

inline std::string to_edge_list_text(const TreeGraph& t) {
    std::ostringstream os;
    os << t.n << '\n';
    for (auto [u, v] : t.edges) os << u << ' ' << v << '\n';
    return os.str();
}

inline TreeGraph from_edge_list_text(const std::string& text) {
    std::istringstream is(text);
    int n;
    if (!(is >> n)) throw std::invalid_argument("edge list: missing vertex count");
    std::vector<std::pair<int, int>> e;
    int u, v;
    while (is >> u >> v) e.emplace_back(u, v);
    return TreeGraph::from_edges(n, std::move(e));
}

}  // namespace treespectra
