#ifndef CATWALK_MOTZKIN_BRIDGE_HPP
#define CATWALK_MOTZKIN_BRIDGE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <catwalk/error.hpp>
#include <catwalk/perms.hpp>
#include <catwalk/trees.hpp>
#include <catwalk/walks.hpp>

namespace catwalk
{

// Motzkin steps in {-1,0,+1}; each maximal run of -1 steps carries a
// 213-avoiding permutation of size run length + 1, listed left to right.
struct DecoratedMotzkinWalk {
    std::vector<int> steps;
    std::vector<Permutation> decorations;

    std::size_t size() const noexcept { return steps.size(); }

    friend bool operator==(const DecoratedMotzkinWalk &, const DecoratedMotzkinWalk &) = default;
    friend auto operator<=>(const DecoratedMotzkinWalk &, const DecoratedMotzkinWalk &) = default;
};

// T: 0 -> 1, positive after the origin.
// M: a T-walk whose last non-descending step is +1.
enum class MClass { T, M };

struct Run {
    std::size_t start;  // 0-based step index
    std::size_t length; // number of -1 steps
};

inline std::vector<Run> descending_runs(const std::vector<int> &steps)
{
    std::vector<Run> runs;
    for (std::size_t i = 0; i < steps.size();) {
        if (steps[i] != -1) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < steps.size() && steps[j] == -1) ++j;
        runs.push_back({i, j - i});
        i = j;
    }
    return runs;
}

inline std::size_t zero_steps(const DecoratedMotzkinWalk &d)
{
    return static_cast<std::size_t>(std::count(d.steps.begin(), d.steps.end(), 0));
}

// Throws unless steps are Motzkin and decorations match the runs.
inline void check_decorations(const DecoratedMotzkinWalk &d)
{
    for (int s : d.steps) {
        detail::require(s >= -1 && s <= 1, "decorated walk: step outside {-1,0,+1}");
    }
    const auto runs = descending_runs(d.steps);
    detail::require(runs.size() == d.decorations.size(), "decorated walk: decoration count differs from run count");
    for (std::size_t r = 0; r < runs.size(); ++r) {
        detail::require(d.decorations[r].size() == runs[r].length + 1,
                        "decorated walk: decoration size must be run length + 1");
        detail::require(avoids_213(d.decorations[r]), "decorated walk: decoration contains 213");
    }
}

inline bool is_class(const DecoratedMotzkinWalk &d, MClass c)
{
    try {
        check_decorations(d);
    } catch (const invalid_input &) {
        return false;
    }
    if (d.steps.empty()) return false;
    int h = 0;
    for (int s : d.steps) {
        h += s;
        if (h < 1) return false;
    }
    if (h != 1) return false;
    if (c == MClass::M) {
        auto it = std::find_if(d.steps.rbegin(), d.steps.rend(), [](int s) { return s != -1; });
        return *it == 1;
    }
    return true;
}

namespace detail
{

inline std::vector<int> motzkin_heights(const std::vector<int> &steps)
{
    std::vector<int> h{0};
    h.reserve(steps.size() + 1);
    for (int s : steps) h.push_back(h.back() + s);
    return h;
}

// Steps [begin, end) with the decorations of the runs inside. Runs may not
// straddle either boundary.
inline DecoratedMotzkinWalk slice(const DecoratedMotzkinWalk &d, std::size_t begin, std::size_t end)
{
    ensure(begin <= end && end <= d.steps.size(), "decorated slice out of range");
    DecoratedMotzkinWalk out;
    out.steps.assign(d.steps.begin() + static_cast<std::ptrdiff_t>(begin),
                     d.steps.begin() + static_cast<std::ptrdiff_t>(end));
    const auto runs = descending_runs(d.steps);
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const auto rb = runs[r].start;
        const auto re = rb + runs[r].length;
        if (re <= begin || rb >= end) continue;
        ensure(rb >= begin && re <= end, "decorated slice cuts a descending run");
        out.decorations.push_back(d.decorations[r]);
    }
    return out;
}

inline void append(DecoratedMotzkinWalk &d, const DecoratedMotzkinWalk &tail)
{
    if (!tail.steps.empty() && !d.steps.empty()) {
        ensure(!(d.steps.back() == -1 && tail.steps.front() == -1), "decorated append would merge two runs");
    }
    d.steps.insert(d.steps.end(), tail.steps.begin(), tail.steps.end());
    d.decorations.insert(d.decorations.end(), tail.decorations.begin(), tail.decorations.end());
}

// Appends `k` descending steps carrying `perm` (size k + 1). A run of length
// zero carries the implicit permutation (1) and stores nothing.
inline void append_run(DecoratedMotzkinWalk &d, std::size_t k, const Permutation &perm)
{
    ensure(perm.size() == k + 1, "descending run decoration has the wrong size");
    if (k == 0) return;
    ensure(d.steps.empty() || d.steps.back() != -1, "descending run would merge with the previous one");
    d.steps.insert(d.steps.end(), k, -1);
    d.decorations.push_back(perm);
}

inline std::size_t last_non_descending(const std::vector<int> &steps)
{
    std::size_t q = steps.size();
    while (q > 0 && steps[q - 1] == -1) --q;
    ensure(q > 0, "walk has no non-descending step");
    return q - 1;
}

inline Permutation final_decoration(const DecoratedMotzkinWalk &d, std::size_t run_length)
{
    if (run_length == 0) return Permutation{1};
    return d.decorations.back();
}

} // namespace detail

// Breadth-first Lukasiewicz word prefixed by +1, with the label blocks between
// consecutive nodes attached to the descending runs.
inline DecoratedMotzkinWalk tree_to_motzkin(const LabeledTree &lt)
{
    detail::require(is_valid(lt), "tree_to_motzkin: labeled tree is not valid");
    const auto n = lt.shape.size();
    const auto &ar = lt.shape.bfs_arities();
    DecoratedMotzkinWalk d;
    d.steps.reserve(n);
    d.steps.push_back(1);
    for (std::size_t t = 0; t + 1 < n; ++t) d.steps.push_back(static_cast<int>(ar[t]) - 1);
    const auto nodes = lt.shape.node_indices();
    for (auto &piece : split_blocks(lt.perm, nodes)) {
        if (piece.size() >= 2) d.decorations.push_back(std::move(piece));
    }
    return d;
}

inline LabeledTree motzkin_to_tree(const DecoratedMotzkinWalk &d)
{
    check_decorations(d);
    detail::require(is_class(d, MClass::T), "motzkin_to_tree: not a T-walk");
    const auto n = d.size();
    std::vector<std::uint8_t> ar(n, 0);
    for (std::size_t t = 0; t + 1 < n; ++t) ar[t] = static_cast<std::uint8_t>(d.steps[t + 1] + 1);
    auto shape = UBTree::from_bfs_arities(std::move(ar));
    std::vector<Permutation> pieces;
    std::size_t prev = 0;
    std::size_t next_dec = 0;
    auto add_block = [&](std::size_t size) {
        if (size == 1) {
            pieces.push_back(Permutation{1});
            return;
        }
        detail::require(next_dec < d.decorations.size() && d.decorations[next_dec].size() == size,
                        "motzkin_to_tree: decoration does not match a leaf block");
        pieces.push_back(d.decorations[next_dec++]);
    };
    for (auto a : shape.node_indices()) {
        add_block(a - prev);
        prev = a;
    }
    add_block(n - prev);
    detail::require(next_dec == d.decorations.size(), "motzkin_to_tree: unused decorations");
    return {std::move(shape), merge_blocks(pieces)};
}

struct TSplit {
    std::optional<DecoratedMotzkinWalk> rest;
    DecoratedMotzkinWalk m;
};

// A T-walk ending in (0, -1^k) splits at the last visit of k before that
// 0-step: the middle part is a T-walk, and prefix + (+1, -1^k) is an M-walk.
inline TSplit t_split(const DecoratedMotzkinWalk &t)
{
    detail::require(is_class(t, MClass::T), "t_split: not a T-walk");
    if (is_class(t, MClass::M)) return {std::nullopt, t};
    const auto n = t.size();
    const auto q = detail::last_non_descending(t.steps);
    detail::ensure(t.steps[q] == 0, "t_split: expected a final 0-step");
    const auto k = n - 1 - q;
    const auto h = detail::motzkin_heights(t.steps);
    std::size_t tau = q;
    while (h[tau] != static_cast<int>(k)) --tau;
    DecoratedMotzkinWalk m = detail::slice(t, 0, tau);
    m.steps.push_back(1);
    detail::append_run(m, k, detail::final_decoration(t, k));
    return {detail::slice(t, tau, q), std::move(m)};
}

inline DecoratedMotzkinWalk t_join(const std::optional<DecoratedMotzkinWalk> &rest, const DecoratedMotzkinWalk &m)
{
    detail::require(is_class(m, MClass::M), "t_join: second component is not an M-walk");
    if (!rest) return m;
    detail::require(is_class(*rest, MClass::T), "t_join: first component is not a T-walk");
    const auto p = detail::last_non_descending(m.steps);
    const auto k = m.size() - 1 - p;
    DecoratedMotzkinWalk out = detail::slice(m, 0, p);
    detail::append(out, *rest);
    out.steps.push_back(0);
    detail::append_run(out, k, detail::final_decoration(m, k));
    return out;
}

// T-walk as its sequence of M-walks, innermost first.
inline std::vector<DecoratedMotzkinWalk> t_list(const DecoratedMotzkinWalk &t)
{
    std::vector<DecoratedMotzkinWalk> out;
    std::optional<DecoratedMotzkinWalk> cur = t;
    while (cur) {
        auto s = t_split(*cur);
        out.push_back(std::move(s.m));
        cur = std::move(s.rest);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

inline DecoratedMotzkinWalk t_from_list(const std::vector<DecoratedMotzkinWalk> &ms)
{
    detail::require(!ms.empty(), "t_from_list: empty list");
    std::optional<DecoratedMotzkinWalk> acc;
    for (const auto &m : ms) acc = t_join(acc, m);
    return std::move(*acc);
}

// The two optional slots of a non-trivial M-walk, each a T-walk ending with
// a 0-step. Both absent means the trivial walk (+1).
struct MSplit {
    std::optional<DecoratedMotzkinWalk> slot1;
    std::optional<DecoratedMotzkinWalk> slot2;

    friend bool operator==(const MSplit &, const MSplit &) = default;
};

inline MSplit m_split(const DecoratedMotzkinWalk &m)
{
    detail::require(is_class(m, MClass::M), "m_split: not an M-walk");
    const auto n = m.size();
    if (n == 1) return {};
    const auto p = detail::last_non_descending(m.steps);
    const auto k = n - 1 - p;
    detail::ensure(k >= 1, "m_split: non-trivial M-walk must end with a descending run");
    const auto [left, right] = catalan_split(m.decorations.back());
    const auto i = left.size();
    const auto h = detail::motzkin_heights(m.steps);
    std::size_t tau = p;
    while (h[tau] != static_cast<int>(i)) --tau;
    MSplit out;
    if (i >= 1) {
        auto s1 = detail::slice(m, 0, tau);
        s1.steps.push_back(0);
        detail::append_run(s1, i - 1, left);
        out.slot1 = std::move(s1);
    } else {
        detail::ensure(tau == 0, "m_split: empty first slot must start at the origin");
    }
    if (i < k) {
        auto s2 = detail::slice(m, tau, p);
        s2.steps.push_back(0);
        detail::append_run(s2, k - i - 1, right);
        out.slot2 = std::move(s2);
    } else {
        detail::ensure(tau == p, "m_split: empty second slot must end at the final +1");
    }
    return out;
}

inline DecoratedMotzkinWalk m_join(const MSplit &slots)
{
    if (!slots.slot1 && !slots.slot2) return {{1}, {}};
    struct Opened {
        DecoratedMotzkinWalk prefix;
        Permutation perm;
    };
    auto open = [](const DecoratedMotzkinWalk &s) {
        detail::require(is_class(s, MClass::T) && !is_class(s, MClass::M), "m_join: slot must be a T-walk ending with a 0-step");
        const auto q = detail::last_non_descending(s.steps);
        const auto j = s.size() - 1 - q;
        return Opened{detail::slice(s, 0, q), detail::final_decoration(s, j)};
    };
    DecoratedMotzkinWalk out;
    Permutation left, right;
    if (slots.slot1) {
        auto o = open(*slots.slot1);
        out = std::move(o.prefix);
        left = std::move(o.perm);
    }
    if (slots.slot2) {
        auto o = open(*slots.slot2);
        detail::append(out, o.prefix);
        right = std::move(o.perm);
    }
    const auto k = left.size() + right.size();
    out.steps.push_back(1);
    detail::append_run(out, k, catalan_join(left, right));
    return out;
}

// Excursion decomposition by the first return to 0.
enum class ACase {
    Empty,          // ()
    Paired,         // (+2) a1 (-2) a2
    BothTrivial,    // (+1) a1 (-1) a2
    FirstTrivial,   // (+1) a1 rev(b2) a2, b2 non-trivial
    SecondTrivial,  // b a1 (-1) a2, b non-trivial
    BothNontrivial, // b a1 rev(b2) a2
};

struct ASplit {
    ACase tag = ACase::Empty;
    Walk a1, a2;
    Walk b;  // B-walk up to the first visit of 1
    Walk b2; // B-walk whose reverse closes the first excursion

    friend bool operator==(const ASplit &, const ASplit &) = default;
};

inline ASplit a_split(const Walk &a)
{
    detail::require(is_class(a, WalkClass::A), "a_split: not an A-walk");
    if (a.empty()) return {};
    const auto h = detail::rel_heights(a);
    const auto n = a.size();
    const auto f = *detail::first_hit(h, 0, 1, n + 1);
    const auto one = detail::first_hit(h, 1, 1, f);
    ASplit s;
    if (!one) {
        detail::ensure(a[0] == 2 && a[f - 1] == -2, "a_split: excursion avoiding 1 must be (+2) ... (-2)");
        s.tag = ACase::Paired;
        s.a1 = a.slice(1, f - 1);
        s.a2 = a.slice(f, n);
        return s;
    }
    const auto last_one = *detail::last_hit(h, 1, 1, f);
    s.b = a.slice(0, *one);
    s.a1 = a.slice(*one, last_one);
    s.b2 = reverse(a.slice(last_one, f));
    s.a2 = a.slice(f, n);
    const bool t1 = (s.b.size() == 1);
    const bool t2 = (s.b2.size() == 1);
    s.tag = t1 && t2 ? ACase::BothTrivial : t1 ? ACase::FirstTrivial : t2 ? ACase::SecondTrivial : ACase::BothNontrivial;
    return s;
}

inline Walk a_join(const ASplit &s)
{
    switch (s.tag) {
        case ACase::Empty:
            return Walk{};
        case ACase::Paired:
            return concat(Walk{2}, s.a1, Walk{-2}, s.a2);
        default:
            return concat(s.b, s.a1, reverse(s.b2), s.a2);
    }
}

// A B-walk is (+1), or (+2) a rev(b') with a an excursion and b' a B-walk.
// It unfolds to the list of those excursions.
inline std::vector<Walk> b_list(const Walk &b)
{
    detail::require(is_class(b, WalkClass::B), "b_list: not a B-walk");
    std::vector<Walk> out;
    Walk cur = b;
    while (cur.size() > 1) {
        detail::ensure(cur[0] == 2, "b_list: non-trivial B-walk must start with +2");
        const auto h = detail::rel_heights(cur);
        const auto l2 = *detail::last_hit(h, 2, 1, cur.size());
        out.push_back(cur.slice(1, l2));
        cur = reverse(cur.slice(l2, cur.size()));
    }
    return out;
}

inline Walk b_build(const std::vector<Walk> &list)
{
    Walk cur{1};
    for (auto it = list.rbegin(); it != list.rend(); ++it) {
        cur = concat(Walk{2}, *it, reverse(cur));
    }
    return cur;
}

inline DecoratedMotzkinWalk alpha(const Walk &a);
inline Walk alpha_inv(const DecoratedMotzkinWalk &m);

namespace detail
{

inline std::vector<DecoratedMotzkinWalk> alpha_all(std::initializer_list<const Walk *> heads, const std::vector<Walk> &tail)
{
    std::vector<DecoratedMotzkinWalk> out;
    for (const Walk *w : heads) out.push_back(alpha(*w));
    for (const auto &w : tail) out.push_back(alpha(w));
    return out;
}

inline std::vector<Walk> alpha_inv_all(const std::vector<DecoratedMotzkinWalk> &ms, std::size_t from)
{
    std::vector<Walk> out;
    for (std::size_t i = from; i < ms.size(); ++i) out.push_back(alpha_inv(ms[i]));
    return out;
}

} // namespace detail

// Excursions a to M-walks with |alpha(a)| = |a| + 1. Slot lists:
//   Paired          slot1 = [a1, a2]
//   BothTrivial     slot2 = [a1, a2]
//   FirstTrivial    slot1 = [a1, a2, b_list(b2)...]
//   SecondTrivial   slot2 = [a1, a2, b_list(b)...]
//   BothNontrivial  slot1 = [a1, b_list(b)...], slot2 = [a2, b_list(b2)...]
// Staggered +-2 steps of a become 0-steps of alpha(a).
inline DecoratedMotzkinWalk alpha(const Walk &a)
{
    const auto s = a_split(a);
    MSplit slots;
    switch (s.tag) {
        case ACase::Empty:
            break;
        case ACase::Paired:
            slots.slot1 = t_from_list(detail::alpha_all({&s.a1, &s.a2}, {}));
            break;
        case ACase::BothTrivial:
            slots.slot2 = t_from_list(detail::alpha_all({&s.a1, &s.a2}, {}));
            break;
        case ACase::FirstTrivial:
            slots.slot1 = t_from_list(detail::alpha_all({&s.a1, &s.a2}, b_list(s.b2)));
            break;
        case ACase::SecondTrivial:
            slots.slot2 = t_from_list(detail::alpha_all({&s.a1, &s.a2}, b_list(s.b)));
            break;
        case ACase::BothNontrivial:
            slots.slot1 = t_from_list(detail::alpha_all({&s.a1}, b_list(s.b)));
            slots.slot2 = t_from_list(detail::alpha_all({&s.a2}, b_list(s.b2)));
            break;
    }
    return m_join(slots);
}

inline Walk alpha_inv(const DecoratedMotzkinWalk &m)
{
    const auto slots = m_split(m);
    ASplit s;
    if (!slots.slot1 && !slots.slot2) return Walk{};
    if (slots.slot1 && slots.slot2) {
        const auto l1 = t_list(*slots.slot1);
        const auto l2 = t_list(*slots.slot2);
        s.tag = ACase::BothNontrivial;
        s.a1 = alpha_inv(l1[0]);
        s.a2 = alpha_inv(l2[0]);
        s.b = b_build(detail::alpha_inv_all(l1, 1));
        s.b2 = b_build(detail::alpha_inv_all(l2, 1));
        return a_join(s);
    }
    const bool first = slots.slot1.has_value();
    const auto l = t_list(first ? *slots.slot1 : *slots.slot2);
    detail::ensure(l.size() >= 2, "alpha_inv: slot must hold at least two M-walks");
    s.a1 = alpha_inv(l[0]);
    s.a2 = alpha_inv(l[1]);
    if (l.size() == 2) {
        s.tag = first ? ACase::Paired : ACase::BothTrivial;
        if (!first) {
            s.b = Walk{1};
            s.b2 = Walk{1};
        }
        return a_join(s);
    }
    const Walk nontrivial = b_build(detail::alpha_inv_all(l, 2));
    if (first) {
        s.tag = ACase::FirstTrivial;
        s.b = Walk{1};
        s.b2 = nontrivial;
    } else {
        s.tag = ACase::SecondTrivial;
        s.b = nontrivial;
        s.b2 = Walk{1};
    }
    return a_join(s);
}

// G-walk = B-walk up to the first visit of 1, then an excursion at height 1.
// Blocks: the B-walk's excursion list followed by that final excursion.
inline std::vector<Walk> g_blocks(const Walk &g)
{
    detail::require(is_class(g, WalkClass::G), "g_blocks: not a G-walk");
    const auto h = detail::rel_heights(g);
    const auto f = *detail::first_hit(h, 1, 1, g.size() + 1);
    auto blocks = b_list(g.slice(0, f));
    blocks.push_back(g.slice(f, g.size()));
    return blocks;
}

inline Walk g_assemble(const std::vector<Walk> &blocks)
{
    detail::require(!blocks.empty(), "g_assemble: empty block list");
    for (const auto &a : blocks) detail::require(is_class(a, WalkClass::A), "g_assemble: block is not an A-walk");
    std::vector<Walk> head(blocks.begin(), blocks.end() - 1);
    return concat(b_build(head), blocks.back());
}

inline DecoratedMotzkinWalk g_to_motzkin(const Walk &g)
{
    std::vector<DecoratedMotzkinWalk> ms;
    for (const auto &a : g_blocks(g)) ms.push_back(alpha(a));
    return t_from_list(ms);
}

inline Walk motzkin_to_g(const DecoratedMotzkinWalk &t)
{
    detail::require(is_class(t, MClass::T), "motzkin_to_g: not a T-walk");
    std::vector<Walk> blocks;
    for (const auto &m : t_list(t)) blocks.push_back(alpha_inv(m));
    return g_assemble(blocks);
}

inline LabeledTree g_to_labeled_tree(const Walk &g) { return motzkin_to_tree(g_to_motzkin(g)); }

inline Walk labeled_tree_to_g(const LabeledTree &lt) { return motzkin_to_g(tree_to_motzkin(lt)); }

// Decorated T- or M-walks of length n: steps lexicographic (-1 < 0 < +1),
// then decorations lexicographic run by run.
inline std::vector<DecoratedMotzkinWalk> enumerate_decorated(MClass c, std::size_t n,
                                                             std::size_t max_length = default_max_walk_length)
{
    if (n > max_length) {
        throw resource_limit("decorated walk enumeration length", n, max_length);
    }
    std::vector<DecoratedMotzkinWalk> out;
    if (n == 0) return out;
    std::vector<std::vector<Permutation>> by_size(n + 1);
    std::vector<int> steps;
    auto emit = [&]() {
        const auto runs = descending_runs(steps);
        std::vector<std::size_t> idx(runs.size(), 0);
        for (const auto &r : runs) {
            if (by_size[r.length + 1].empty()) by_size[r.length + 1] = enumerate_avoiding(r.length + 1, n + 1);
        }
        while (true) {
            DecoratedMotzkinWalk d{steps, {}};
            for (std::size_t r = 0; r < runs.size(); ++r) d.decorations.push_back(by_size[runs[r].length + 1][idx[r]]);
            if (c == MClass::T || is_class(d, MClass::M)) out.push_back(std::move(d));
            bool advanced = false;
            for (std::size_t r = runs.size(); r > 0 && !advanced; --r) {
                if (++idx[r - 1] < by_size[runs[r - 1].length + 1].size()) {
                    advanced = true;
                } else {
                    idx[r - 1] = 0;
                }
            }
            if (!advanced) break;
        }
    };
    auto rec = [&](auto &&self, int h) -> void {
        const std::size_t t = steps.size();
        if (t == n) {
            if (h == 1) emit();
            return;
        }
        const int remaining = static_cast<int>(n - t) - 1;
        for (int s : {-1, 0, 1}) {
            const int nh = h + s;
            if (nh < 1 || std::abs(nh - 1) > remaining) continue;
            steps.push_back(s);
            self(self, nh);
            steps.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// "steps ; p1 | p2 | ..." with "-" for no decorations.
inline std::string to_text(const DecoratedMotzkinWalk &d)
{
    std::string s;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(d.steps[i]);
    }
    s += " ; ";
    if (d.decorations.empty()) {
        s += '-';
    }
    for (std::size_t r = 0; r < d.decorations.size(); ++r) {
        if (r) s += " | ";
        s += to_text(d.decorations[r]);
    }
    return s;
}

inline DecoratedMotzkinWalk parse_decorated(std::string_view text)
{
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw invalid_input("decorated walk: missing ';' separator");
    }
    DecoratedMotzkinWalk d;
    d.steps = detail::parse_int_list(text.substr(0, semi), "decorated walk");
    auto rest = text.substr(semi + 1);
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r' || v.back() == '\n')) v.remove_suffix(1);
        return v;
    };
    rest = trim(rest);
    if (rest != "-") {
        while (true) {
            const auto bar = rest.find('|');
            const auto piece = trim(rest.substr(0, bar));
            if (piece.empty()) throw invalid_input("decorated walk: empty decoration");
            d.decorations.push_back(parse_permutation(piece));
            if (bar == std::string_view::npos) break;
            rest = rest.substr(bar + 1);
        }
    }
    check_decorations(d);
    return d;
}

} // namespace catwalk

#endif
