#ifndef CATWALK_PERMS_HPP
#define CATWALK_PERMS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <catwalk/error.hpp>
#include <catwalk/walks.hpp>

namespace catwalk
{

// A permutation of {1..n} in one-line notation. Positions are 1-based in the
// free functions below; operator[] is 0-based like a container.
class Permutation
{
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> values) : values_(std::move(values))
    {
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            detail::require(v >= 1 && static_cast<std::size_t>(v) <= values_.size() && !seen[v],
                            "permutation: entries are not a bijection of {1..n}");
            seen[v] = true;
        }
    }

    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

    static Permutation identity(std::size_t n)
    {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    const std::vector<int> &values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    int operator[](std::size_t i) const { return values_[i]; }

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
    std::vector<int> values_;
};

// Relabel distinct integers by rank.
inline Permutation renormalize(std::span<const int> vals)
{
    std::vector<std::size_t> order(vals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<int> out(vals.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        out[order[r]] = static_cast<int>(r + 1);
    }
    return Permutation(std::move(out));
}

// Single left-to-right pass. `bound` is the smallest entry already known to
// have a smaller entry after it; any later entry above it closes a 213.
inline bool avoids_213(const Permutation &p)
{
    int bound = std::numeric_limits<int>::max();
    std::vector<int> stack;
    stack.reserve(p.size());
    for (int x : p.values()) {
        if (x > bound) return false;
        while (!stack.empty() && x < stack.back()) {
            bound = stack.back();
            stack.pop_back();
        }
        stack.push_back(x);
    }
    return true;
}

inline std::vector<std::size_t> rtl_min_indices(const Permutation &p)
{
    std::vector<std::size_t> out;
    int m = std::numeric_limits<int>::max();
    for (std::size_t i = p.size(); i > 0; --i) {
        if (p[i - 1] < m) {
            m = p[i - 1];
            out.push_back(i);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// Bit i-1 set iff position i is a right-to-left minimum (n <= 64).
inline std::uint64_t rtl_min_mask(const Permutation &p)
{
    detail::require(p.size() <= 64, "rtl_min_mask: permutation longer than 64");
    std::uint64_t mask = 0;
    for (auto i : rtl_min_indices(p)) {
        mask |= std::uint64_t{1} << (i - 1);
    }
    return mask;
}

// Restrictions of p to the index blocks delimited by `cuts`, renormalized.
// Every cut must be a right-to-left minimum position in {1..n-1}.
inline std::vector<Permutation> split_blocks(const Permutation &p, std::span<const std::size_t> cuts)
{
    detail::require(avoids_213(p), "split_blocks: permutation contains 213");
    const auto mins = rtl_min_indices(p);
    std::size_t prev = 0;
    std::vector<Permutation> out;
    out.reserve(cuts.size() + 1);
    for (auto a : cuts) {
        detail::require(a > prev && a < p.size(), "split_blocks: cuts must be increasing within {1..n-1}");
        detail::require(std::binary_search(mins.begin(), mins.end(), a),
                        "split_blocks: cut is not a right-to-left minimum");
        out.push_back(renormalize(std::span(p.values()).subspan(prev, a - prev)));
        prev = a;
    }
    out.push_back(renormalize(std::span(p.values()).subspan(prev)));
    return out;
}

// Inverse of split_blocks. The right-to-left minima of all pieces take the
// values 1, 2, ... left to right; the remaining entries keep their blocks
// (maximal runs before each minimum), and earlier blocks take higher ranges.
inline Permutation merge_blocks(std::span<const Permutation> pieces)
{
    std::size_t n = 0;
    for (const auto &q : pieces) {
        detail::require(!q.empty(), "merge_blocks: empty piece");
        detail::require(avoids_213(q), "merge_blocks: piece contains 213");
        n += q.size();
    }
    std::vector<int> out(n, 0);
    // Blocks as lists of (position, value-in-piece).
    std::vector<std::vector<std::pair<std::size_t, int>>> blocks;
    int next_min = 1;
    std::size_t offset = 0;
    for (const auto &q : pieces) {
        const auto mins = rtl_min_indices(q);
        std::vector<bool> is_min(q.size() + 1, false);
        for (auto i : mins) is_min[i] = true;
        std::vector<std::pair<std::size_t, int>> cur;
        for (std::size_t i = 1; i <= q.size(); ++i) {
            if (is_min[i]) {
                out[offset + i - 1] = next_min++;
                if (!cur.empty()) {
                    blocks.push_back(std::move(cur));
                    cur.clear();
                }
            } else {
                cur.emplace_back(offset + i - 1, q[i - 1]);
            }
        }
        detail::ensure(cur.empty(), "merge_blocks: piece does not end at a minimum");
        offset += q.size();
    }
    int hi = static_cast<int>(n);
    for (auto &blk : blocks) {
        std::sort(blk.begin(), blk.end(), [](const auto &x, const auto &y) { return x.second < y.second; });
        const int lo = hi - static_cast<int>(blk.size()) + 1;
        for (std::size_t r = 0; r < blk.size(); ++r) {
            out[blk[r].first] = lo + static_cast<int>(r);
        }
        hi = lo - 1;
    }
    return Permutation(std::move(out));
}

inline Permutation merge_blocks(std::initializer_list<Permutation> pieces)
{
    return merge_blocks(std::span<const Permutation>(pieces.begin(), pieces.size()));
}

// Split around the entry 1: everything left of it is above everything right
// of it in a 213-avoider.
inline std::pair<Permutation, Permutation> catalan_split(const Permutation &p)
{
    detail::require(!p.empty(), "catalan_split: empty permutation");
    detail::require(avoids_213(p), "catalan_split: permutation contains 213");
    const auto pos = static_cast<std::size_t>(std::find(p.values().begin(), p.values().end(), 1) - p.values().begin());
    const std::span<const int> all(p.values());
    return {renormalize(all.subspan(0, pos)), renormalize(all.subspan(pos + 1))};
}

inline Permutation catalan_join(const Permutation &left, const Permutation &right)
{
    std::vector<int> out;
    out.reserve(left.size() + right.size() + 1);
    const int shift = static_cast<int>(right.size()) + 1;
    for (int v : left.values()) out.push_back(v + shift);
    out.push_back(1);
    for (int v : right.values()) out.push_back(v + 1);
    return Permutation(std::move(out));
}

inline constexpr std::size_t default_max_perm_size = 14;

// 213-avoiding permutations of size n, lexicographic. The search keeps the
// smallest entry that already has a smaller entry to its right; appending a
// value above it would complete a 213.
inline std::vector<Permutation> enumerate_avoiding(std::size_t n, std::size_t max_size = default_max_perm_size)
{
    if (n > max_size) {
        throw resource_limit("213-avoiding enumeration size", n, max_size);
    }
    std::vector<Permutation> out;
    std::vector<int> prefix;
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto &&self, int bound) -> void {
        if (prefix.size() == n) {
            out.emplace_back(prefix);
            return;
        }
        for (int v = 1; v <= static_cast<int>(n); ++v) {
            if (used[v] || v > bound) continue;
            int nb = bound;
            for (int x : prefix) {
                if (x > v) nb = std::min(nb, x);
            }
            used[v] = true;
            prefix.push_back(v);
            self(self, nb);
            prefix.pop_back();
            used[v] = false;
        }
    };
    rec(rec, std::numeric_limits<int>::max());
    return out;
}

inline std::string to_text(const Permutation &p)
{
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s;
}

inline Permutation parse_permutation(std::string_view text)
{
    return Permutation(detail::parse_int_list(text, "permutation"));
}

} // namespace catwalk

#endif
