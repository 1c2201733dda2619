#ifndef CATWALK_TREES_HPP
#define CATWALK_TREES_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <catwalk/error.hpp>
#include <catwalk/perms.hpp>

namespace catwalk
{

// Plane binary tree stored as its preorder word: 1 for an internal vertex,
// 0 for a leaf.
class BinaryTree
{
public:
    BinaryTree() : code_{0} {}

    static BinaryTree leaf() { return BinaryTree(); }

    static BinaryTree node(const BinaryTree &left, const BinaryTree &right)
    {
        BinaryTree t;
        t.code_.clear();
        t.code_.reserve(1 + left.code_.size() + right.code_.size());
        t.code_.push_back(1);
        t.code_.insert(t.code_.end(), left.code_.begin(), left.code_.end());
        t.code_.insert(t.code_.end(), right.code_.begin(), right.code_.end());
        return t;
    }

    static BinaryTree from_preorder(std::vector<std::uint8_t> code)
    {
        long open = 1;
        for (std::size_t i = 0; i < code.size(); ++i) {
            detail::require(code[i] <= 1, "binary tree: preorder symbol must be 0 or 1");
            detail::require(open > 0, "binary tree: preorder word has trailing symbols");
            open += code[i] ? 1 : -1;
        }
        detail::require(open == 0, "binary tree: incomplete preorder word");
        BinaryTree t;
        t.code_ = std::move(code);
        return t;
    }

    const std::vector<std::uint8_t> &preorder() const noexcept { return code_; }
    bool is_leaf() const noexcept { return code_.size() == 1; }
    std::size_t leaf_count() const noexcept { return (code_.size() + 1) / 2; }
    std::size_t internal_count() const noexcept { return code_.size() / 2; }

    BinaryTree left() const
    {
        detail::require(!is_leaf(), "binary tree: a leaf has no children");
        return BinaryTree(sub(1));
    }

    BinaryTree right() const
    {
        detail::require(!is_leaf(), "binary tree: a leaf has no children");
        return BinaryTree(sub(1 + sub(1).size()));
    }

    friend bool operator==(const BinaryTree &, const BinaryTree &) = default;
    friend auto operator<=>(const BinaryTree &, const BinaryTree &) = default;

private:
    explicit BinaryTree(std::vector<std::uint8_t> code) : code_(std::move(code)) {}

    std::vector<std::uint8_t> sub(std::size_t start) const
    {
        long open = 1;
        std::size_t i = start;
        while (open > 0) {
            open += code_[i] ? 1 : -1;
            ++i;
        }
        return {code_.begin() + static_cast<std::ptrdiff_t>(start), code_.begin() + static_cast<std::ptrdiff_t>(i)};
    }

    std::vector<std::uint8_t> code_;
};

namespace detail
{

// Child indices into the preorder word, -1 for leaves.
struct PreorderLinks {
    std::vector<long> left, right;
};

inline PreorderLinks preorder_links(const std::vector<std::uint8_t> &code)
{
    const auto n = code.size();
    PreorderLinks lk{std::vector<long>(n, -1), std::vector<long>(n, -1)};
    // Stack of internal vertices still waiting for their right child.
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            const auto prev = i - 1;
            if (code[prev]) {
                lk.left[prev] = static_cast<long>(i);
            } else {
                const auto parent = pending.back();
                pending.pop_back();
                lk.right[parent] = static_cast<long>(i);
            }
        }
        if (code[i]) pending.push_back(i);
    }
    return lk;
}

} // namespace detail

struct LeafStats {
    std::size_t double_leaves = 0;
    std::size_t left_leaves = 0;
    std::size_t right_leaves = 0;

    std::size_t total() const noexcept { return double_leaves + left_leaves + right_leaves; }
    friend bool operator==(const LeafStats &, const LeafStats &) = default;
};

// The one-leaf tree has no sibling relation and yields all zeros.
inline LeafStats leaf_stats(const BinaryTree &t)
{
    const auto &code = t.preorder();
    const auto lk = detail::preorder_links(code);
    LeafStats st;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (!code[i]) continue;
        const bool l_leaf = !code[static_cast<std::size_t>(lk.left[i])];
        const bool r_leaf = !code[static_cast<std::size_t>(lk.right[i])];
        if (l_leaf && r_leaf) {
            st.double_leaves += 2;
        } else if (l_leaf) {
            ++st.left_leaves;
        } else if (r_leaf) {
            ++st.right_leaves;
        }
    }
    return st;
}

inline std::string to_text(const BinaryTree &t)
{
    const auto &code = t.preorder();
    std::string s;
    // Count of children already written for each open vertex.
    std::vector<int> written;
    for (auto c : code) {
        if (c) {
            s += '(';
            written.push_back(0);
            continue;
        }
        s += 'L';
        while (!written.empty()) {
            if (++written.back() == 1) {
                s += ' ';
                break;
            }
            s += ')';
            written.pop_back();
        }
    }
    return s;
}

inline BinaryTree parse_binary_tree(std::string_view text)
{
    std::vector<std::uint8_t> code;
    std::vector<int> state; // children seen per open parenthesis
    std::size_t i = 0;
    auto fail = [&]() { throw invalid_input("binary tree: malformed text \"" + std::string(text) + "\""); };
    while (i < text.size() && (text[i] == ' ' || text[i] == '\r' || text[i] == '\n')) ++i;
    std::size_t end = text.size();
    while (end > i && (text[end - 1] == ' ' || text[end - 1] == '\r' || text[end - 1] == '\n')) --end;
    bool done = false;
    while (i < end) {
        if (done) fail();
        const char c = text[i++];
        if (c == '(') {
            code.push_back(1);
            state.push_back(0);
        } else if (c == 'L') {
            code.push_back(0);
            if (state.empty()) {
                done = true;
            } else if (++state.back() == 1) {
                if (i >= end || text[i] != ' ') fail();
                ++i;
            } else {
                // Close every finished parenthesis.
                while (true) {
                    if (i >= end || text[i] != ')') fail();
                    ++i;
                    state.pop_back();
                    if (state.empty()) {
                        done = true;
                        break;
                    }
                    if (++state.back() == 1) {
                        if (i >= end || text[i] != ' ') fail();
                        ++i;
                        break;
                    }
                }
            }
        } else {
            fail();
        }
    }
    if (!done) fail();
    return BinaryTree::from_preorder(std::move(code));
}

// Plane tree with arities in {0,1,2}, stored as its breadth-first arity word.
class UBTree
{
public:
    UBTree() : arities_{0} {}

    static UBTree from_bfs_arities(std::vector<std::uint8_t> arities)
    {
        detail::require(!arities.empty(), "unary-binary tree: empty arity word");
        long open = 1;
        for (std::size_t i = 0; i < arities.size(); ++i) {
            detail::require(arities[i] <= 2, "unary-binary tree: arity above 2");
            detail::require(open > 0, "unary-binary tree: arity word has trailing vertices");
            open += static_cast<long>(arities[i]) - 1;
        }
        detail::require(open == 0, "unary-binary tree: arity word is incomplete");
        UBTree t;
        t.arities_ = std::move(arities);
        return t;
    }

    // From a depth-first (preorder) arity word.
    static UBTree from_dfs_arities(const std::vector<std::uint8_t> &dfs)
    {
        const auto n = dfs.size();
        detail::require(n > 0, "unary-binary tree: empty arity word");
        std::vector<std::vector<std::size_t>> kids(n);
        std::vector<std::size_t> stack; // vertices with unfilled child slots
        std::vector<std::uint8_t> need(dfs);
        for (std::size_t i = 0; i < n; ++i) {
            detail::require(dfs[i] <= 2, "unary-binary tree: arity above 2");
            if (i > 0) {
                detail::require(!stack.empty(), "unary-binary tree: arity word has trailing vertices");
                auto p = stack.back();
                kids[p].push_back(i);
                if (--need[p] == 0) stack.pop_back();
            }
            if (dfs[i] > 0) stack.push_back(i);
        }
        detail::require(stack.empty(), "unary-binary tree: arity word is incomplete");
        std::vector<std::uint8_t> bfs;
        bfs.reserve(n);
        std::vector<std::size_t> queue{0};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            bfs.push_back(dfs[queue[q]]);
            for (auto c : kids[queue[q]]) queue.push_back(c);
        }
        return from_bfs_arities(std::move(bfs));
    }

    const std::vector<std::uint8_t> &bfs_arities() const noexcept { return arities_; }
    std::size_t size() const noexcept { return arities_.size(); }

    // children(i) for 0-based BFS positions.
    std::vector<std::vector<std::size_t>> children() const
    {
        std::vector<std::vector<std::size_t>> kids(arities_.size());
        std::size_t next = 1;
        for (std::size_t i = 0; i < arities_.size(); ++i) {
            for (std::uint8_t c = 0; c < arities_[i]; ++c) kids[i].push_back(next++);
        }
        return kids;
    }

    std::vector<std::uint8_t> dfs_arities() const
    {
        const auto kids = children();
        std::vector<std::uint8_t> out;
        out.reserve(arities_.size());
        std::vector<std::size_t> stack{0};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            out.push_back(arities_[v]);
            for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.push_back(*it);
        }
        return out;
    }

    // 1-based BFS positions of vertices with at least one child.
    std::vector<std::size_t> node_indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < arities_.size(); ++i) {
            if (arities_[i] > 0) out.push_back(i + 1);
        }
        return out;
    }

    friend bool operator==(const UBTree &, const UBTree &) = default;

    // Leaf < unary < binary, then children left to right. The preorder arity
    // word is prefix-free, so its lexicographic order is exactly this.
    friend std::strong_ordering operator<=>(const UBTree &a, const UBTree &b)
    {
        return a.dfs_arities() <=> b.dfs_arities();
    }

private:
    std::vector<std::uint8_t> arities_;
};

inline const std::vector<std::uint8_t> &bfs_vertices(const UBTree &t) { return t.bfs_arities(); }

inline std::size_t unary_count(const UBTree &t)
{
    return static_cast<std::size_t>(std::count(t.bfs_arities().begin(), t.bfs_arities().end(), 1));
}

// All n-vertex unary-binary shapes in canonical order.
inline std::vector<UBTree> enumerate_shapes(std::size_t n)
{
    std::vector<UBTree> out;
    if (n == 0) return out;
    std::vector<std::uint8_t> word;
    word.reserve(n);
    auto rec = [&](auto &&self, long open) -> void {
        const auto placed = word.size();
        if (placed == n) {
            if (open == 0) out.push_back(UBTree::from_dfs_arities(word));
            return;
        }
        if (open <= 0) return;
        const long left = static_cast<long>(n - placed);
        for (std::uint8_t a = 0; a <= 2; ++a) {
            const long nopen = open + a - 1;
            // Each open slot needs a vertex; the remaining ones must fit.
            if (nopen > left - 1) continue;
            if (nopen == 0 && left - 1 > 0) continue;
            word.push_back(a);
            self(self, nopen);
            word.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Unary-binary shape with labels read in breadth-first order.
struct LabeledTree {
    UBTree shape;
    Permutation perm;

    friend bool operator==(const LabeledTree &, const LabeledTree &) = default;
    friend auto operator<=>(const LabeledTree &a, const LabeledTree &b)
    {
        if (auto c = a.shape <=> b.shape; c != 0) return c;
        return a.perm <=> b.perm;
    }
};

namespace detail
{

inline std::uint64_t node_mask(const UBTree &t)
{
    std::uint64_t mask = 0;
    for (auto i : t.node_indices()) mask |= std::uint64_t{1} << (i - 1);
    return mask;
}

} // namespace detail

// Increasing with a 213-avoiding reading word, checked as: the word avoids 213
// and every node position is a right-to-left minimum.
inline bool is_valid(const LabeledTree &lt)
{
    detail::require(lt.perm.size() == lt.shape.size(), "labeled tree: permutation size differs from vertex count");
    if (!avoids_213(lt.perm)) return false;
    const auto mins = rtl_min_indices(lt.perm);
    for (auto i : lt.shape.node_indices()) {
        if (!std::binary_search(mins.begin(), mins.end(), i)) return false;
    }
    return true;
}

inline constexpr std::size_t default_max_tree_size = 14;

// Valid labeled trees of n vertices, by canonical shape then lexicographic
// permutation. Each shape's valid permutations are the block products over
// its node positions.
inline std::vector<LabeledTree> enumerate_valid(std::size_t n, std::size_t max_size = default_max_tree_size)
{
    if (n > max_size) {
        throw resource_limit("labeled tree enumeration size", n, max_size);
    }
    std::vector<LabeledTree> out;
    if (n == 0) return out;
    std::vector<std::vector<Permutation>> by_size(n + 1);
    for (std::size_t s = 1; s <= n; ++s) by_size[s] = enumerate_avoiding(s, max_size);
    for (const auto &shape : enumerate_shapes(n)) {
        const auto nodes = shape.node_indices();
        // Cuts at node positions inside {1..n-1}; the last vertex is a leaf.
        std::vector<std::size_t> sizes;
        std::size_t prev = 0;
        for (auto a : nodes) {
            sizes.push_back(a - prev);
            prev = a;
        }
        sizes.push_back(n - prev);
        std::vector<Permutation> found;
        std::vector<std::size_t> idx(sizes.size(), 0);
        std::vector<Permutation> pieces(sizes.size());
        while (true) {
            for (std::size_t b = 0; b < sizes.size(); ++b) pieces[b] = by_size[sizes[b]][idx[b]];
            found.push_back(merge_blocks(pieces));
            bool advanced = false;
            for (std::size_t b = sizes.size(); b > 0 && !advanced; --b) {
                if (++idx[b - 1] < by_size[sizes[b - 1]].size()) {
                    advanced = true;
                } else {
                    idx[b - 1] = 0;
                }
            }
            if (!advanced) break;
        }
        std::sort(found.begin(), found.end());
        for (auto &p : found) out.push_back({shape, std::move(p)});
    }
    return out;
}

// Among the leaves after the last node in BFS order, the final one carries
// the smallest label. The one-vertex tree qualifies.
inline bool has_tail_leaf_min(const LabeledTree &lt)
{
    const auto nodes = lt.shape.node_indices();
    const std::size_t start = nodes.empty() ? 0 : nodes.back();
    const auto &v = lt.perm.values();
    const int last = v.back();
    for (std::size_t i = start; i < v.size(); ++i) {
        if (v[i] < last) return false;
    }
    return true;
}

// label | label(child) | label(child,child), written depth first.
inline std::string to_text(const LabeledTree &lt)
{
    detail::require(lt.perm.size() == lt.shape.size(), "labeled tree: permutation size differs from vertex count");
    const auto kids = lt.shape.children();
    std::string s;
    auto rec = [&](auto &&self, std::size_t v) -> void {
        s += std::to_string(lt.perm[v]);
        if (kids[v].empty()) return;
        s += '(';
        for (std::size_t c = 0; c < kids[v].size(); ++c) {
            if (c) s += ',';
            self(self, kids[v][c]);
        }
        s += ')';
    };
    rec(rec, 0);
    return s;
}

inline LabeledTree parse_labeled_tree(std::string_view text)
{
    std::size_t i = 0;
    std::size_t end = text.size();
    while (i < end && (text[i] == ' ' || text[i] == '\r' || text[i] == '\n')) ++i;
    while (end > i && (text[end - 1] == ' ' || text[end - 1] == '\r' || text[end - 1] == '\n')) --end;
    auto fail = [&]() { throw invalid_input("labeled tree: malformed text \"" + std::string(text) + "\""); };
    // Parsed vertices in preorder: label and child list.
    std::vector<int> labels;
    std::vector<std::vector<std::size_t>> kids;
    auto rec = [&](auto &&self, int depth) -> std::size_t {
        if (depth > 4096) fail();
        std::size_t j = i;
        while (j < end && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == i || j - i > 9) fail();
        const auto id = labels.size();
        labels.push_back(std::stoi(std::string(text.substr(i, j - i))));
        kids.emplace_back();
        i = j;
        if (i < end && text[i] == '(') {
            ++i;
            while (true) {
                const auto c = self(self, depth + 1);
                kids[id].push_back(c);
                if (i < end && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < end && text[i] == ')') {
                    ++i;
                    break;
                }
                fail();
            }
            if (kids[id].size() > 2) fail();
        }
        return id;
    };
    rec(rec, 0);
    if (i != end) fail();
    std::vector<std::uint8_t> arities;
    std::vector<int> perm;
    std::vector<std::size_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        arities.push_back(static_cast<std::uint8_t>(kids[queue[q]].size()));
        perm.push_back(labels[queue[q]]);
        for (auto c : kids[queue[q]]) queue.push_back(c);
    }
    return {UBTree::from_bfs_arities(std::move(arities)), Permutation(std::move(perm))};
}

} // namespace catwalk

#endif
