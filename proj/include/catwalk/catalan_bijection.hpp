#ifndef CATWALK_CATALAN_BIJECTION_HPP
#define CATWALK_CATALAN_BIJECTION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <catwalk/error.hpp>
#include <catwalk/trees.hpp>
#include <catwalk/walks.hpp>

namespace catwalk
{

// C-walk classes, read off the visits to heights 1 and 2:
//   I    (1)
//   II   2..2 1 2 2..2 1 x..x
//   III  2..2 1 2 2..2
//   IV1  2..2 2 1
//   IV2  2..2 1 1 x..x
enum class ClassTag { I, II, III, IV1, IV2 };

inline const char *to_string(ClassTag c) noexcept
{
    switch (c) {
        case ClassTag::I:
            return "I";
        case ClassTag::II:
            return "II";
        case ClassTag::III:
            return "III";
        case ClassTag::IV1:
            return "IV1";
        case ClassTag::IV2:
            return "IV2";
    }
    return "?";
}

// A pair of C-walks, either of which may be absent (a leaf). An absent
// component counts as size 1.
struct PhiImage {
    std::optional<Walk> first;
    std::optional<Walk> second;

    std::size_t size() const
    {
        return (first ? first->size() : 1) + (second ? second->size() : 1);
    }

    friend bool operator==(const PhiImage &, const PhiImage &) = default;
};

inline std::vector<int> restricted_visits(const Walk &w)
{
    detail::require(is_class(w, WalkClass::C), "restricted_visits: not a C-walk");
    const auto h = detail::rel_heights(w);
    std::vector<int> v;
    for (std::size_t t = 1; t < w.size(); ++t) {
        if (h[t] == 1 || h[t] == 2) v.push_back(h[t]);
    }
    return v;
}

inline ClassTag classify(const Walk &w)
{
    const auto v = restricted_visits(w);
    if (v.size() == 1 && v[0] == 1) return ClassTag::I;
    std::size_t p = 0;
    while (v[p] != 1) ++p;
    if (p + 1 == v.size()) return ClassTag::IV1;
    if (v[p + 1] == 1) return ClassTag::IV2;
    for (std::size_t q = p + 2; q < v.size(); ++q) {
        if (v[q] == 1) return ClassTag::II;
    }
    return ClassTag::III;
}

inline PhiImage phi(const Walk &w)
{
    const auto tag = classify(w);
    const auto h = detail::rel_heights(w);
    const auto n = w.size();
    switch (tag) {
        case ClassTag::I:
            return {};
        case ClassTag::II: {
            const auto f1 = *detail::first_hit(h, 1, 1, n);
            const auto f2 = *detail::first_hit(h, 1, f1 + 1, n);
            const auto l1 = *detail::last_hit(h, 1, 1, n);
            const Walk b1 = w.slice(0, f1);
            const Walk c = w.slice(f1, f2);
            const Walk a = w.slice(f2, l1);
            const Walk b2rev = w.slice(l1, n);
            return {reverse(c), concat(b1, a, b2rev)};
        }
        case ClassTag::III: {
            const auto f1 = *detail::first_hit(h, 1, 1, n);
            const auto g = *detail::first_hit(h, 2, f1 + 1, n);
            detail::ensure(h[n - 1] == 2 && w.back() == -2, "phi: class III walk must end with -2 from height 2");
            const Walk b1 = w.slice(0, f1);
            const Walk b2 = w.slice(f1, g);
            const Walk a = w.slice(g, n - 1);
            return {std::nullopt, concat(b1, reverse(a), reverse(b2))};
        }
        case ClassTag::IV1: {
            detail::ensure(w[0] == 2 && w.back() == -1, "phi: class IV1 walk must be (+2) ... (-1)");
            const auto l2 = *detail::last_hit(h, 2, 1, n - 1);
            const Walk a = w.slice(1, l2);
            const Walk b_rev = w.slice(l2, n - 1);
            return {concat(reverse(b_rev), reverse(a), Walk{-1}), std::nullopt};
        }
        case ClassTag::IV2: {
            const auto f1 = *detail::first_hit(h, 1, 1, n);
            const auto f2 = *detail::first_hit(h, 1, f1 + 1, n);
            detail::ensure(w[f1] == 2 && w[f2 - 1] == -2, "phi: class IV2 walk must leave and re-enter 1 by 2-steps");
            const auto l1 = *detail::last_hit(h, 1, 1, n);
            const Walk b1 = w.slice(0, f1);
            const Walk a1 = w.slice(f1 + 1, f2 - 1);
            const Walk a2 = w.slice(f2, l1);
            const Walk b2rev = w.slice(l1, n);
            return {concat(b1, a1, reverse(b2rev), reverse(a2), Walk{-2}), std::nullopt};
        }
    }
    throw internal_error("phi: unreachable class");
}

inline Walk phi_inverse(const PhiImage &img)
{
    if (img.first) detail::require(is_class(*img.first, WalkClass::C), "phi_inverse: first component is not a C-walk");
    if (img.second) detail::require(is_class(*img.second, WalkClass::C), "phi_inverse: second component is not a C-walk");

    if (!img.first && !img.second) return Walk{1, -1};

    if (img.first && img.second) {
        const auto s = c_split_bab(*img.second);
        return concat(s.b1, reverse(*img.first), s.a, s.b2rev);
    }

    if (img.second) {
        const auto s = c_split_bab(*img.second);
        return concat(s.b1, reverse(s.b2rev), reverse(s.a), Walk{-2});
    }

    const Walk &p = *img.first;
    const auto n = p.size();
    if (p.back() == -1) {
        const auto s = c_split_bab(p);
        detail::require(s.b2rev == Walk{-1}, "phi_inverse: malformed class IV1 image");
        return concat(Walk{2}, reverse(s.a), reverse(s.b1), Walk{-1});
    }
    if (p.back() == -2) {
        const auto h = detail::rel_heights(p);
        const auto f1 = *detail::first_hit(h, 1, 1, n);
        const auto l1 = *detail::last_hit(h, 1, 1, n);
        const auto g2 = detail::first_hit(h, 2, l1 + 1, n);
        detail::require(g2.has_value() && h[n - 1] == 2, "phi_inverse: malformed class IV2 image");
        const Walk b1 = p.slice(0, f1);
        const Walk a1 = p.slice(f1, l1);
        const Walk b2 = p.slice(l1, *g2);
        const Walk a2rev = p.slice(*g2, n - 1);
        return concat(b1, Walk{2}, a1, Walk{-2}, reverse(a2rev), reverse(b2));
    }
    throw invalid_input("phi_inverse: first component must end with -1 or -2");
}

// Builds the tree top-down: each C-walk becomes an internal vertex whose
// children are the two components of phi, absent components being leaves.
inline BinaryTree walk_to_tree(const Walk &w)
{
    detail::require(is_class(w, WalkClass::C), "walk_to_tree: not a C-walk");
    std::vector<std::uint8_t> code;
    code.reserve(2 * w.size());
    std::vector<std::optional<Walk>> work{w};
    while (!work.empty()) {
        auto cur = std::move(work.back());
        work.pop_back();
        if (!cur) {
            code.push_back(0);
            continue;
        }
        code.push_back(1);
        auto img = phi(*cur);
        work.push_back(std::move(img.second));
        work.push_back(std::move(img.first));
    }
    return BinaryTree::from_preorder(std::move(code));
}

inline Walk tree_to_walk(const BinaryTree &t)
{
    detail::require(!t.is_leaf(), "tree_to_walk: the one-leaf tree has no C-walk");
    const auto &code = t.preorder();
    const auto lk = detail::preorder_links(code);
    std::vector<std::optional<Walk>> value(code.size());
    // Children follow their parent in preorder.
    for (std::size_t i = code.size(); i > 0; --i) {
        const auto v = i - 1;
        if (!code[v]) continue;
        PhiImage img{std::move(value[static_cast<std::size_t>(lk.left[v])]),
                     std::move(value[static_cast<std::size_t>(lk.right[v])])};
        value[v] = phi_inverse(img);
    }
    return std::move(*value[0]);
}

} // namespace catwalk

#endif
