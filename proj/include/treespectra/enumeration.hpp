// Exhaustive generation of non-isomorphic free trees and class filters.
//
// Free trees are generated by the canonical level-sequence successor method
// of Wright, Richmond, Odlyzko and McKay: a Beyer-Hedetniemi rooted-tree
// successor restricted to sequences that are canonical for free trees, so no
// isomorphism dedup pass is needed. Trees of a given order are emitted in
// canonical-code lexicographic order.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "treespectra/graph.hpp"

namespace treespectra {

constexpr int kMaxEnumerationOrder = 20;

namespace detail {

// One iteration of the Beyer-Hedetniemi successor on a level sequence
// (levels 0-based, preorder). Returns false when the sequence is exhausted.
inline bool next_rooted_tree(std::vector<int>& seq, int p = -1) {
    if (p < 0) {
        p = static_cast<int>(seq.size()) - 1;
        while (seq[p] == 1) --p;
    }
    if (p == 0) return false;
    int q = p - 1;
    while (seq[q] != seq[p] - 1) --q;
    for (int i = p; i < static_cast<int>(seq.size()); ++i) seq[i] = seq[i - p + q];
    return true;
}

// Splits a layout into the first subtree of the root (levels shifted down by
// one) and the remainder (root kept).
inline void split_tree(const std::vector<int>& layout, std::vector<int>& left,
                       std::vector<int>& rest) {
    int m = static_cast<int>(layout.size());
    bool one_found = false;
    for (int i = 0; i < static_cast<int>(layout.size()); ++i)
        if (layout[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    left.clear();
    rest.clear();
    for (int i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    rest.push_back(0);
    for (int i = m; i < static_cast<int>(layout.size()); ++i) rest.push_back(layout[i]);
}

// One iteration of the WROM fixup: either accepts `layout` as a canonical
// free tree or advances it to the next candidate. Returns false at the end.
inline bool next_free_tree(std::vector<int>& layout) {
    std::vector<int> left, rest;
    split_tree(layout, left, rest);
    int left_height = 0, rest_height = 0;
    for (int v : left) left_height = std::max(left_height, v);
    for (int v : rest) rest_height = std::max(rest_height, v);

    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size())
            valid = false;
        else if (left.size() == rest.size() && left > rest)
            valid = false;
    }
    if (valid) return true;

    const int p = static_cast<int>(left.size());
    const int old_at_p = layout[p];
    if (!next_rooted_tree(layout, p)) return false;
    if (old_at_p > 2) {
        split_tree(layout, left, rest);
        int new_left_height = 0;
        for (int v : left) new_left_height = std::max(new_left_height, v);
        const int len = new_left_height + 1;
        const int start = static_cast<int>(layout.size()) - len;
        for (int i = 0; i < len; ++i) layout[start + i] = i + 1;
    }
    return true;
}

inline TreeGraph layout_to_tree(const std::vector<int>& layout) {
    const int n = static_cast<int>(layout.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        while (!stack.empty() && layout[stack.back()] >= layout[i]) stack.pop_back();
        if (!stack.empty()) edges.emplace_back(stack.back(), i);
        stack.push_back(i);
    }
    return TreeGraph::from_edges(n, std::move(edges));
}

}  // namespace detail

// Calls fn once per isomorphism class of free trees on n vertices, in
// canonical-code lexicographic order.
inline void for_each_free_tree(int n, const std::function<void(const TreeGraph&)>& fn) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("for_each_free_tree: order must be in [1, 20]");
    if (n == 1) {
        fn(TreeGraph::from_edges(1, {}));
        return;
    }
    // start at the path graph rooted at its center
    std::vector<int> layout;
    for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);

    std::vector<std::pair<std::string, std::vector<int>>> items;
    while (true) {
        if (!detail::next_free_tree(layout)) break;
        items.emplace_back(canonical_code(detail::layout_to_tree(layout)), layout);
        if (!detail::next_rooted_tree(layout)) break;
    }
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [code, seq] : items) fn(detail::layout_to_tree(seq));
}

inline std::vector<TreeGraph> enumerate_free_trees(int n) {
    std::vector<TreeGraph> out;
    for_each_free_tree(n, [&](const TreeGraph& t) { out.push_back(t); });
    return out;
}

inline long long count_free_trees(int n) {
    long long c = 0;
    for_each_free_tree(n, [&](const TreeGraph&) { ++c; });
    return c;
}

// ---------------------------------------------------------------------------
// Tree classes T(n, m) and T~(b, m)

struct TreeClassQuery {
    enum class Mode { by_vertices_matching, by_leaves_matching };

    Mode mode = Mode::by_vertices_matching;
    int n = 0;  // by_vertices_matching
    int b = 0;  // by_leaves_matching
    int m = 0;

    static TreeClassQuery by_vertices(int n, int m) {
        if (n < 2 || m < 1 || 2 * m > n)
            throw std::invalid_argument("TreeClassQuery: need n >= 2 and 1 <= m <= n/2");
        TreeClassQuery q;
        q.mode = Mode::by_vertices_matching;
        q.n = n;
        q.m = m;
        return q;
    }
    static TreeClassQuery by_leaves(int b, int m) {
        if (b < 2 || m < 1)
            throw std::invalid_argument("TreeClassQuery: need b >= 2 and m >= 1");
        TreeClassQuery q;
        q.mode = Mode::by_leaves_matching;
        q.b = b;
        q.m = m;
        return q;
    }

    std::string to_string() const {
        std::ostringstream os;
        if (mode == Mode::by_vertices_matching)
            os << "n=" << n << ",m=" << m;
        else
            os << "b=" << b << ",m=" << m;
        return os.str();
    }

    // Accepts "n=K,m=J" or "b=K,m=J".
    static TreeClassQuery parse(const std::string& text) {
        auto fields = detail::split(text, ',');
        if (fields.size() != 2)
            throw std::invalid_argument("TreeClassQuery: expected 'n=K,m=J' or 'b=K,m=J'");
        auto read = [](const std::string& s, const char* key) {
            if (s.size() < 3 || s[0] != key[0] || s[1] != '=')
                throw std::invalid_argument(std::string("TreeClassQuery: expected '") + key +
                                            "=...', got '" + s + "'");
            return detail::parse_int(s.substr(2));
        };
        if (fields[1].rfind("m=", 0) != 0)
            throw std::invalid_argument("TreeClassQuery: second field must be m=J");
        const int m = read(fields[1], "m");
        if (fields[0].rfind("n=", 0) == 0) return by_vertices(read(fields[0], "n"), m);
        if (fields[0].rfind("b=", 0) == 0) return by_leaves(read(fields[0], "b"), m);
        throw std::invalid_argument("TreeClassQuery: first field must be n=K or b=K");
    }
};

// Streams every tree of the class. For leaf classes the orders n = 2m .. 2m+b
// are enumerated and filtered; a qualifying tree at n = 2m+b would contradict
// the finiteness bound n <= 2m+b-1 and aborts with a diagnostic.
inline void for_each_tree_in_class(const TreeClassQuery& q,
                                   const std::function<void(const TreeGraph&)>& fn) {
    if (q.mode == TreeClassQuery::Mode::by_vertices_matching) {
        if (q.n > kMaxEnumerationOrder)
            throw std::invalid_argument("for_each_tree_in_class: order out of range");
        for_each_free_tree(q.n, [&](const TreeGraph& t) {
            if (matching_number(t) == q.m) fn(t);
        });
        return;
    }
    const int n_margin = 2 * q.m + q.b;
    if (n_margin > kMaxEnumerationOrder)
        throw std::invalid_argument("for_each_tree_in_class: class range exceeds order 20");
    for (int n = std::max(2, 2 * q.m); n <= n_margin; ++n) {
        for_each_free_tree(n, [&](const TreeGraph& t) {
            if (static_cast<int>(leaves(t).members.size()) != q.b || matching_number(t) != q.m)
                return;
            if (n == n_margin)
                throw std::logic_error("for_each_tree_in_class: finiteness margin violated, tree with b=" +
                                       std::to_string(q.b) + " m=" + std::to_string(q.m) +
                                       " found at n=" + std::to_string(n));
            fn(t);
        });
    }
}

inline std::vector<TreeGraph> trees_in_class(const TreeClassQuery& q) {
    std::vector<TreeGraph> out;
    for_each_tree_in_class(q, [&](const TreeGraph& t) { out.push_back(t); });
    return out;
}

// ---------------------------------------------------------------------------
// Randomized inputs for property tests

// Uniform over labeled trees via a random Pruefer code; deterministic per seed.
inline TreeGraph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n >= 1 required");
    if (n == 1) return TreeGraph::from_edges(1, {});
    if (n == 2) return TreeGraph::from_edges(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2);
    for (int& c : code) c = pick(rng);
    std::vector<int> deg(n, 1);
    for (int c : code) ++deg[c];
    std::vector<std::pair<int, int>> edges;
    // smallest-leaf decode
    std::vector<char> used(n, 0);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        edges.emplace_back(leaf, c);
        if (--deg[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return TreeGraph::from_edges(n, std::move(edges));
}

// Connected induced subtree with >= 2 vertices obtained by randomized leaf
// pruning; vertices are re-indexed in increasing original order.
inline TreeGraph random_subtree(const TreeGraph& t, std::uint64_t seed) {
    if (t.n < 2) throw std::invalid_argument("random_subtree: tree must have >= 2 vertices");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const int target = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(t.n - 1));
    std::vector<char> alive(t.n, 1);
    std::vector<int> deg(t.n);
    for (int v = 0; v < t.n; ++v) deg[v] = t.degree(v);
    int size = t.n;
    while (size > target) {
        std::vector<int> leaves_now;
        for (int v = 0; v < t.n; ++v)
            if (alive[v] && deg[v] <= 1) leaves_now.push_back(v);
        const int v = leaves_now[rng() % leaves_now.size()];
        alive[v] = 0;
        --size;
        for (int w : t.adjacency[v])
            if (alive[w]) --deg[w];
    }
    std::vector<int> remap(t.n, -1);
    int next = 0;
    for (int v = 0; v < t.n; ++v)
        if (alive[v]) remap[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : t.edges)
        if (alive[u] && alive[v]) edges.emplace_back(remap[u], remap[v]);
    return TreeGraph::from_edges(size, std::move(edges));
}

}  // namespace treespectra
