#ifndef CATWALK_WALKS_HPP
#define CATWALK_WALKS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <catwalk/error.hpp>

namespace catwalk
{

inline bool is_basketball_step(int s) noexcept
{
    return s == -2 || s == -1 || s == 1 || s == 2;
}

// A basketball walk: steps in {-2,-1,+1,+2} starting from an origin height.
//
// Step sequences order lexicographically with -2 < -1 < +1 < +2, which is the
// integer order, so the defaulted comparison is the enumeration order.
class Walk
{
public:
    Walk() = default;

    explicit Walk(std::vector<int> steps, int origin = 0) : steps_(std::move(steps)), origin_(origin)
    {
        for (int s : steps_) {
            detail::require(is_basketball_step(s), "walk step outside {-2,-1,+1,+2}");
        }
    }

    Walk(std::initializer_list<int> steps) : Walk(std::vector<int>(steps)) {}

    const std::vector<int> &steps() const noexcept { return steps_; }
    int origin() const noexcept { return origin_; }
    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }
    int operator[](std::size_t i) const { return steps_[i]; }
    int back() const { return steps_.back(); }

    // Steps [begin, end) re-based to origin 0.
    Walk slice(std::size_t begin, std::size_t end) const
    {
        detail::ensure(begin <= end && end <= steps_.size(), "walk slice out of range");
        Walk w;
        w.steps_.assign(steps_.begin() + static_cast<std::ptrdiff_t>(begin),
                        steps_.begin() + static_cast<std::ptrdiff_t>(end));
        return w;
    }

    Walk with_origin(int origin) const
    {
        Walk w = *this;
        w.origin_ = origin;
        return w;
    }

    friend bool operator==(const Walk &, const Walk &) = default;
    friend auto operator<=>(const Walk &a, const Walk &b)
    {
        if (auto c = a.steps_ <=> b.steps_; c != 0) {
            return c;
        }
        return a.origin_ <=> b.origin_;
    }

private:
    std::vector<int> steps_;
    int origin_ = 0;
};

enum class WalkClass { A, B, C, G };

inline const char *to_string(WalkClass c) noexcept
{
    switch (c) {
        case WalkClass::A:
            return "A";
        case WalkClass::B:
            return "B";
        case WalkClass::C:
            return "C";
        case WalkClass::G:
            return "G";
    }
    return "?";
}

inline std::optional<WalkClass> parse_walk_class(std::string_view s)
{
    if (s == "A") return WalkClass::A;
    if (s == "B") return WalkClass::B;
    if (s == "C") return WalkClass::C;
    if (s == "G") return WalkClass::G;
    return std::nullopt;
}

inline std::vector<int> heights(const Walk &w)
{
    std::vector<int> h;
    h.reserve(w.size() + 1);
    int cur = w.origin();
    h.push_back(cur);
    for (int s : w.steps()) {
        cur += s;
        h.push_back(cur);
    }
    return h;
}

inline Walk reverse(const Walk &w, int origin = 0)
{
    std::vector<int> out(w.steps().rbegin(), w.steps().rend());
    for (int &s : out) {
        s = -s;
    }
    return Walk(std::move(out), origin);
}

inline Walk concat(const Walk &a, const Walk &b)
{
    std::vector<int> out = a.steps();
    out.insert(out.end(), b.steps().begin(), b.steps().end());
    return Walk(std::move(out), a.origin());
}

template <typename... Ws>
Walk concat(const Walk &a, const Walk &b, const Ws &...rest)
{
    return concat(concat(a, b), rest...);
}

// Class membership is decided on heights relative to the origin.
//   A: nonnegative, 0 -> 0
//   B: 0 -> 1, every intermediate height >= 2
//   C: 0 -> 0, visits 1, positive strictly inside
//   G: 0 -> 1, positive after the origin
inline bool is_class(const Walk &w, WalkClass c)
{
    const auto n = w.size();
    int h = 0;
    bool seen_one = false;
    for (std::size_t t = 0; t < n; ++t) {
        h += w[t];
        const bool last = (t + 1 == n);
        switch (c) {
            case WalkClass::A:
                if (h < 0) return false;
                break;
            case WalkClass::B:
                if (!last && h < 2) return false;
                break;
            case WalkClass::C:
                if (!last && h < 1) return false;
                if (!last && h == 1) seen_one = true;
                break;
            case WalkClass::G:
                if (h < 1) return false;
                break;
        }
    }
    switch (c) {
        case WalkClass::A:
            return h == 0;
        case WalkClass::B:
            return n >= 1 && h == 1;
        case WalkClass::C:
            return n >= 2 && h == 0 && seen_one;
        case WalkClass::G:
            return n >= 1 && h == 1;
    }
    return false;
}

namespace detail
{

struct WalkSearch {
    WalkClass cls;
    std::size_t n;
    int target;
    std::vector<int> prefix;
    std::function<void(const std::vector<int> &)> emit;

    void run(int h, bool seen_one)
    {
        const std::size_t t = prefix.size();
        if (t == n) {
            bool ok = (h == target);
            if (cls == WalkClass::B || cls == WalkClass::G) ok = ok && n >= 1;
            if (cls == WalkClass::C) ok = ok && n >= 2 && seen_one;
            if (ok) emit(prefix);
            return;
        }
        const int remaining = static_cast<int>(n - t) - 1;
        for (int s : {-2, -1, 1, 2}) {
            const int nh = h + s;
            const bool last = (remaining == 0);
            if (std::abs(target - nh) > 2 * remaining) continue;
            bool ok = true;
            switch (cls) {
                case WalkClass::A:
                    ok = nh >= 0;
                    break;
                case WalkClass::B:
                    ok = last ? nh == 1 : nh >= 2;
                    break;
                case WalkClass::C:
                    ok = last ? nh == 0 : nh >= 1;
                    break;
                case WalkClass::G:
                    ok = nh >= 1;
                    break;
            }
            if (!ok) continue;
            prefix.push_back(s);
            run(nh, seen_one || (!last && nh == 1));
            prefix.pop_back();
        }
    }
};

} // namespace detail

// Visits the walks of length n in class c, lexicographic under
// -2 < -1 < +1 < +2, without storing them.
template <typename F>
void for_each_walk(WalkClass c, std::size_t n, F &&f, std::size_t max_length = default_max_walk_length)
{
    if (n > max_length) {
        throw resource_limit("walk enumeration length", n, max_length);
    }
    detail::WalkSearch search{c, n, (c == WalkClass::B || c == WalkClass::G) ? 1 : 0, {},
                              [&](const std::vector<int> &steps) { f(Walk(steps)); }};
    search.prefix.reserve(n);
    search.run(0, false);
}

inline std::vector<Walk> enumerate(WalkClass c, std::size_t n, std::size_t max_length = default_max_walk_length)
{
    std::vector<Walk> out;
    for_each_walk(c, n, [&](Walk w) { out.push_back(std::move(w)); }, max_length);
    return out;
}

inline std::size_t count_walks(WalkClass c, std::size_t n, std::size_t max_length = default_max_walk_length)
{
    std::size_t k = 0;
    for_each_walk(c, n, [&](const Walk &) { ++k; }, max_length);
    return k;
}

// Step counts by parity class. A step is even/odd according to the height it
// starts from.
struct StepStats {
    std::size_t d = 0; // half the number of +-1 steps
    std::size_t l = 0; // odd +2 and even -2 steps
    std::size_t r = 0; // odd -2 and even +2 steps

    friend bool operator==(const StepStats &, const StepStats &) = default;
    friend auto operator<=>(const StepStats &, const StepStats &) = default;
};

inline StepStats step_stats(const Walk &w)
{
    StepStats st;
    std::size_t ones = 0;
    int h = w.origin();
    for (int s : w.steps()) {
        const bool even = (h % 2 == 0);
        if (s == 1 || s == -1) {
            ++ones;
        } else if ((s == 2) != even) {
            ++st.l;
        } else {
            ++st.r;
        }
        h += s;
    }
    detail::require(ones % 2 == 0, "step_stats: odd number of +-1 steps");
    st.d = ones / 2;
    return st;
}

// Pairing of +2/-2 steps. Indices are 1-based step positions.
struct StaggeredPairing {
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // sorted by opening index
    std::vector<std::size_t> staggered;                      // sorted
};

// A +2 at i pairs with a -2 at j when the walk first comes back down to the
// starting height of i exactly at j, through a -2. The first return is the
// only admissible j, so each step is in at most one pair.
inline StaggeredPairing staggered_pairing(const Walk &w)
{
    const auto h = heights(w);
    const auto n = w.size();
    std::vector<bool> paired(n + 1, false);
    StaggeredPairing res;
    for (std::size_t i = 1; i <= n; ++i) {
        if (w[i - 1] != 2) continue;
        const int base = h[i - 1];
        for (std::size_t k = i + 1; k <= n; ++k) {
            if (h[k] <= base) {
                if (h[k] == base && w[k - 1] == -2) {
                    res.pairs.emplace_back(i, k);
                    paired[i] = paired[k] = true;
                }
                break;
            }
        }
    }
    for (std::size_t i = 1; i <= n; ++i) {
        if ((w[i - 1] == 2 || w[i - 1] == -2) && !paired[i]) {
            res.staggered.push_back(i);
        }
    }
    return res;
}

inline std::size_t staggered_count(const Walk &w)
{
    return staggered_pairing(w).staggered.size();
}

// First / last time index t in [from, to) at which the relative height equals v.
namespace detail
{

inline std::optional<std::size_t> first_hit(const std::vector<int> &h, int v, std::size_t from, std::size_t to)
{
    for (std::size_t t = from; t < to; ++t) {
        if (h[t] == v) return t;
    }
    return std::nullopt;
}

inline std::optional<std::size_t> last_hit(const std::vector<int> &h, int v, std::size_t from, std::size_t to)
{
    for (std::size_t t = to; t > from; --t) {
        if (h[t - 1] == v) return t - 1;
    }
    return std::nullopt;
}

inline std::vector<int> rel_heights(const Walk &w)
{
    return heights(w.with_origin(0));
}

} // namespace detail

struct BabSplit {
    Walk b1;    // B-walk ending at the first visit of 1
    Walk a;     // A-walk at baseline 1
    Walk b2rev; // reversed B-walk from the last visit of 1
};

inline BabSplit c_split_bab(const Walk &w)
{
    detail::require(is_class(w, WalkClass::C), "c_split_bab: not a C-walk");
    const auto h = detail::rel_heights(w);
    const auto first = *detail::first_hit(h, 1, 1, w.size());
    const auto last = *detail::last_hit(h, 1, 1, w.size());
    return {w.slice(0, first), w.slice(first, last), w.slice(last, w.size())};
}

// Text form: space-separated integers, "+" accepted on input, emitted without.
inline std::string to_text(const Walk &w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

namespace detail
{

inline std::vector<int> parse_int_list(std::string_view text, const char *what)
{
    std::vector<int> out;
    std::size_t i = 0;
    const auto n = text.size();
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (i < n) {
        while (i < n && is_space(text[i])) ++i;
        if (i == n) break;
        std::size_t j = i;
        if (text[j] == '+' || text[j] == '-') ++j;
        const std::size_t digits = j;
        while (j < n && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == digits || (j < n && !is_space(text[j]))) {
            throw invalid_input(std::string(what) + ": malformed integer in \"" + std::string(text) + "\"");
        }
        std::string tok(text.substr(i, j - i));
        if (tok[0] == '+') tok.erase(0, 1);
        if (tok.size() > 9) {
            throw invalid_input(std::string(what) + ": integer out of range");
        }
        out.push_back(std::stoi(tok));
        i = j;
    }
    return out;
}

} // namespace detail

inline Walk parse_walk(std::string_view text)
{
    auto v = detail::parse_int_list(text, "walk");
    for (int s : v) {
        if (!is_basketball_step(s)) {
            throw invalid_input("walk: step " + std::to_string(s) + " outside {-2,-1,+1,+2}");
        }
    }
    return Walk(std::move(v));
}

} // namespace catwalk

#endif
