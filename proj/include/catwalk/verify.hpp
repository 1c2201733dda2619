#ifndef CATWALK_VERIFY_HPP
#define CATWALK_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include <catwalk/catalan_bijection.hpp>
#include <catwalk/error.hpp>
#include <catwalk/motzkin_bridge.hpp>
#include <catwalk/perms.hpp>
#include <catwalk/series.hpp>
#include <catwalk/trees.hpp>
#include <catwalk/walks.hpp>

namespace catwalk::verify
{

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

// Largest size each check sweeps when not capped by the caller.
inline constexpr std::size_t catalan_bound = 14;
inline constexpr std::size_t stats_bound = 12;
inline constexpr std::size_t phi_bound = 12;
inline constexpr std::size_t g_count_bound = 13;
inline constexpr std::size_t tree_bound = 10;
inline constexpr std::size_t excursion_bound = 14;
inline constexpr std::size_t excursion_refined_bound = 12;
inline constexpr std::size_t tail_min_bound = 10;
inline constexpr std::size_t dyck_half_bound = 7;
inline constexpr std::size_t roundtrip_bound = 9;
inline constexpr std::size_t series_order = 30;
inline constexpr std::size_t bivariate_order = 20;

namespace detail
{

// Records the first mismatch only; later ones are counted.
class Tally
{
public:
    explicit Tally(std::string name) { res_.name = std::move(name); }

    void expect(bool ok, const std::string &what)
    {
        if (ok) return;
        if (res_.passed) first_ = what;
        res_.passed = false;
        ++failures_;
    }

    template <typename A, typename B>
    void expect_eq(const A &a, const B &b, const std::string &what)
    {
        expect(a == b, what + ": got " + str(a) + ", expected " + str(b));
    }

    CheckResult finish(const std::string &summary)
    {
        res_.detail = res_.passed ? summary : first_ + " (" + std::to_string(failures_) + " mismatches)";
        return res_;
    }

private:
    template <typename T>
    static std::string str(const T &x)
    {
        if constexpr (std::is_same_v<T, BigInt>) return x.str();
        else return std::to_string(x);
    }

    CheckResult res_;
    std::string first_;
    std::size_t failures_ = 0;
};

inline std::string range_text(const char *var, std::size_t lo, std::size_t hi)
{
    return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

} // namespace detail

// 1. C-walks of length n are counted by catalan(n-1).
inline CheckResult catalan_counts(std::size_t max_n = catalan_bound)
{
    detail::Tally t("catalan-count");
    max_n = std::min(max_n, catalan_bound);
    for (std::size_t n = 2; n <= max_n; ++n) {
        t.expect_eq(BigInt(count_walks(WalkClass::C, n, max_n)), catalan(static_cast<std::int64_t>(n) - 1),
                    "n=" + std::to_string(n));
    }
    return t.finish(detail::range_text("n", 2, max_n));
}

// 2. (d,l,r) histogram of C-walks against the closed form.
inline CheckResult refined_c_counts(std::size_t max_n = stats_bound)
{
    detail::Tally t("refined-c-count");
    max_n = std::min(max_n, stats_bound);
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::map<StepStats, std::size_t> hist;
        for_each_walk(WalkClass::C, n, [&](const Walk &w) { ++hist[step_stats(w)]; }, max_n);
        std::size_t seen = 0;
        for (std::size_t d = 1; 2 * d <= n; ++d) {
            for (std::size_t l = 0; 2 * d + l <= n; ++l) {
                const std::size_t r = n - 2 * d - l;
                const StepStats key{d, l, r};
                const auto it = hist.find(key);
                const std::size_t got = it == hist.end() ? 0 : it->second;
                if (got) ++seen;
                t.expect_eq(BigInt(got),
                            prop_stats_count(static_cast<std::int64_t>(d), static_cast<std::int64_t>(l),
                                             static_cast<std::int64_t>(r)),
                            "n=" + std::to_string(n) + " (d,l,r)=(" + std::to_string(d) + "," + std::to_string(l) + "," +
                                std::to_string(r) + ")");
            }
        }
        t.expect_eq(seen, hist.size(), "n=" + std::to_string(n) + " histogram keys outside 2d+l+r=n");
    }
    return t.finish(detail::range_text("n", 2, max_n));
}

// 3. Phi: round trips, leaf count, (2d,l,r) = (double,left,right) leaves, and
// injectivity onto the catalan(n-1) binary trees with n leaves.
inline CheckResult phi_bijection(std::size_t max_n = phi_bound)
{
    detail::Tally t("phi-bijection");
    max_n = std::min(max_n, phi_bound);
    std::size_t total = 0;
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::set<std::vector<std::uint8_t>> images;
        for_each_walk(
            WalkClass::C, n,
            [&](const Walk &w) {
                const auto tree = walk_to_tree(w);
                const auto ls = leaf_stats(tree);
                const auto st = step_stats(w);
                const auto tag = to_text(w);
                t.expect(tree_to_walk(tree) == w, "tree_to_walk(walk_to_tree(w)) != w for " + tag);
                t.expect(tree.leaf_count() == n, "leaf count differs from length for " + tag);
                t.expect(ls.double_leaves == 2 * st.d && ls.left_leaves == st.l && ls.right_leaves == st.r,
                         "leaf types differ from (2d,l,r) for " + tag);
                const auto img = phi(w);
                t.expect(img.size() == n, "phi image size differs for " + tag);
                t.expect(phi_inverse(img) == w, "phi_inverse(phi(w)) != w for " + tag);
                t.expect(images.insert(tree.preorder()).second, "two walks share the tree of " + tag);
                ++total;
            },
            max_n);
        t.expect_eq(BigInt(images.size()), catalan(static_cast<std::int64_t>(n) - 1),
                    "n=" + std::to_string(n) + " distinct image trees");
    }
    return t.finish(detail::range_text("n", 2, max_n) + ", " + std::to_string(total) + " walks");
}

// 4. G-walk counts against both summation formulas.
inline CheckResult g_counts(std::size_t max_n = g_count_bound)
{
    detail::Tally t("g-count");
    max_n = std::min(max_n, g_count_bound);
    static constexpr std::size_t first_values[] = {1, 1, 3, 7, 22, 65};
    for (std::size_t n = 1; n <= max_n; ++n) {
        const auto brute = count_walks(WalkClass::G, n, max_n);
        if (n <= 6) t.expect_eq(brute, first_values[n - 1], "n=" + std::to_string(n) + " brute force");
        const auto nn = static_cast<std::int64_t>(n);
        t.expect_eq(BigInt(brute), g_count_sum1(nn), "n=" + std::to_string(n) + " alternating sum");
        t.expect_eq(BigInt(brute), g_count_sum2(nn), "n=" + std::to_string(n) + " trinomial sum");
    }
    return t.finish(detail::range_text("n", 1, max_n));
}

// 5. G-walks and valid labeled trees: equal counts, and g_to_labeled_tree
// maps one enumerated set onto the other with inverse labeled_tree_to_g.
inline CheckResult g_tree_bijection(std::size_t max_n = tree_bound)
{
    detail::Tally t("g-tree-bijection");
    max_n = std::min(max_n, tree_bound);
    for (std::size_t n = 1; n <= max_n; ++n) {
        const auto trees = enumerate_valid(n, max_n);
        std::vector<LabeledTree> images;
        for_each_walk(
            WalkClass::G, n,
            [&](const Walk &g) {
                auto lt = g_to_labeled_tree(g);
                t.expect(labeled_tree_to_g(lt) == g, "labeled_tree_to_g(g_to_labeled_tree(g)) != g for " + to_text(g));
                images.push_back(std::move(lt));
            },
            max_n);
        const auto ns = "n=" + std::to_string(n);
        t.expect_eq(images.size(), trees.size(), ns + " |G| vs |valid trees|");
        std::sort(images.begin(), images.end());
        t.expect(std::adjacent_find(images.begin(), images.end()) == images.end(), ns + " image trees are not distinct");
        t.expect(images == trees, ns + " image set differs from enumerate_valid");
    }
    return t.finish(detail::range_text("n", 1, max_n));
}

// 6. Staggered steps of G-walks are transported to unary nodes, and both
// histograms follow unary_refined with m = n-1-2k.
inline CheckResult staggered_unary(std::size_t max_n = tree_bound)
{
    detail::Tally t("staggered-unary");
    max_n = std::min(max_n, tree_bound);
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::map<std::size_t, std::size_t> stag, unary;
        for_each_walk(
            WalkClass::G, n,
            [&](const Walk &g) {
                const auto m = staggered_count(g);
                ++stag[m];
                t.expect(unary_count(g_to_labeled_tree(g).shape) == m, "unary count differs from staggered count for " + to_text(g));
            },
            max_n);
        for (const auto &lt : enumerate_valid(n, max_n)) ++unary[unary_count(lt.shape)];
        const auto ns = "n=" + std::to_string(n);
        t.expect(stag == unary, ns + " staggered and unary histograms differ");
        std::size_t covered = 0;
        for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
            const auto m = n - 1 - 2 * k;
            const auto it = stag.find(m);
            const std::size_t got = it == stag.end() ? 0 : it->second;
            covered += got;
            t.expect_eq(BigInt(got), unary_refined(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)),
                        ns + " m=" + std::to_string(m));
        }
        t.expect_eq(covered, count_walks(WalkClass::G, n, max_n), ns + " staggered counts off the parity grid");
    }
    return t.finish(detail::range_text("n", 1, max_n));
}

// 7. (n-1)-step excursions against excursion_refined, refined by staggered
// count for the smaller sizes.
inline CheckResult excursions(std::size_t max_n = excursion_bound)
{
    detail::Tally t("excursions");
    max_n = std::min(max_n, excursion_bound);
    const auto refined_to = std::min(max_n, excursion_refined_bound);
    for (std::size_t n = 2; n <= max_n; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        BigInt sum = 0;
        for (std::int64_t k = 0; 2 * k <= nn; ++k) sum += excursion_refined(nn, k);
        const auto ns = "n=" + std::to_string(n);
        if (n > refined_to) {
            t.expect_eq(BigInt(count_walks(WalkClass::A, n - 1, max_n)), sum, ns + " total");
            continue;
        }
        std::map<std::size_t, std::size_t> stag;
        std::size_t total = 0;
        for_each_walk(
            WalkClass::A, n - 1,
            [&](const Walk &a) {
                ++stag[staggered_count(a)];
                ++total;
            },
            max_n);
        t.expect_eq(BigInt(total), sum, ns + " total");
        std::size_t covered = 0;
        for (std::int64_t k = 0; 2 * k <= nn - 1; ++k) {
            const auto m = static_cast<std::size_t>(nn - 1 - 2 * k);
            const auto it = stag.find(m);
            const std::size_t got = it == stag.end() ? 0 : it->second;
            covered += got;
            t.expect_eq(BigInt(got), excursion_refined(nn, k), ns + " m=" + std::to_string(m));
        }
        t.expect_eq(covered, total, ns + " staggered counts off the parity grid");
    }
    return t.finish(detail::range_text("n", 2, max_n) + ", refined to n=" + std::to_string(refined_to));
}

// 8. Series identities.
inline CheckResult series_identities(std::size_t order = series_order, std::size_t biv_order = bivariate_order)
{
    detail::Tally t("series-identities");
    const auto uni = check_identities(solve_system(order, false));
    t.expect(uni.ok, "univariate order " + std::to_string(order) + ": " + uni.failure);
    const auto biv = check_identities(solve_system(biv_order, true));
    t.expect(biv.ok, "bivariate order " + std::to_string(biv_order) + ": " + biv.failure);
    return t.finish("order " + std::to_string(order) + " at u=1, bivariate order " + std::to_string(biv_order) + ", " +
                    std::to_string(uni.checked.size()) + " identities each");
}

// 9. Valid labeled trees whose last leaf block contains the minimum.
inline CheckResult tail_leaf_min(std::size_t max_n = tail_min_bound)
{
    detail::Tally t("tail-leaf-min");
    max_n = std::min(max_n, tail_min_bound);
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::size_t k = 0;
        for (const auto &lt : enumerate_valid(n, max_n)) k += has_tail_leaf_min(lt);
        t.expect_eq(BigInt(k), catalan(static_cast<std::int64_t>(n) - 1), "n=" + std::to_string(n));
    }
    return t.finish(detail::range_text("n", 1, max_n));
}

// 10. +-1-only C-walks are Dyck walks lifted by one; their trees have only
// double leaves.
inline CheckResult dyck_specialization(std::size_t max_half = dyck_half_bound)
{
    detail::Tally t("dyck-specialization");
    max_half = std::min(max_half, dyck_half_bound);
    for (std::size_t m = 1; m <= max_half; ++m) {
        std::size_t k = 0;
        for_each_walk(
            WalkClass::C, 2 * m,
            [&](const Walk &w) {
                if (std::any_of(w.steps().begin(), w.steps().end(), [](int s) { return s == 2 || s == -2; })) return;
                ++k;
                const auto ls = leaf_stats(walk_to_tree(w));
                t.expect(ls.left_leaves == 0 && ls.right_leaves == 0 && ls.double_leaves == 2 * m,
                         "tree of " + to_text(w) + " has a non-double leaf");
            },
            2 * max_half);
        t.expect_eq(BigInt(k), catalan(static_cast<std::int64_t>(m) - 1), "m=" + std::to_string(m));
    }
    return t.finish(detail::range_text("m", 1, max_half));
}

// Round trips of the Motzkin bridge and its pieces, exhaustively.
inline CheckResult bridge_roundtrips(std::size_t max_n = roundtrip_bound)
{
    detail::Tally t("bridge-roundtrips");
    max_n = std::min(max_n, roundtrip_bound);
    for (std::size_t n = 1; n <= max_n; ++n) {
        const auto ns = "n=" + std::to_string(n);
        for (const auto &lt : enumerate_valid(n, max_n)) {
            t.expect(motzkin_to_tree(tree_to_motzkin(lt)) == lt, ns + " tree->motzkin->tree: " + to_text(lt));
        }
        const auto ts = enumerate_decorated(MClass::T, n, max_n);
        t.expect_eq(ts.size(), count_walks(WalkClass::G, n, max_n), ns + " |T| vs |G|");
        for (const auto &w : ts) {
            const auto s = t_split(w);
            t.expect(t_join(s.rest, s.m) == w, ns + " t_join(t_split) for " + to_text(w));
            t.expect(t_from_list(t_list(w)) == w, ns + " t_from_list(t_list) for " + to_text(w));
            if (is_class(w, MClass::M)) {
                t.expect(m_join(m_split(w)) == w, ns + " m_join(m_split) for " + to_text(w));
                t.expect(alpha(alpha_inv(w)) == w, ns + " alpha(alpha_inv) for " + to_text(w));
            }
        }
        for_each_walk(
            WalkClass::A, n - 1,
            [&](const Walk &a) {
                const auto m = alpha(a);
                t.expect(alpha_inv(m) == a, ns + " alpha_inv(alpha) for " + to_text(a));
                t.expect(m.size() == a.size() + 1, ns + " |alpha(a)| != |a|+1 for " + to_text(a));
                t.expect(zero_steps(m) == staggered_count(a), ns + " 0-steps != staggered for " + to_text(a));
                t.expect(a_join(a_split(a)) == a, ns + " a_join(a_split) for " + to_text(a));
            },
            max_n);
        for_each_walk(
            WalkClass::G, n,
            [&](const Walk &g) {
                const auto blocks = g_blocks(g);
                std::size_t sz = 0;
                for (const auto &b : blocks) sz += b.size() + 1;
                t.expect(sz == n, ns + " block sizes for " + to_text(g));
                t.expect(g_assemble(blocks) == g, ns + " g_assemble(g_blocks) for " + to_text(g));
            },
            max_n);
    }
    return t.finish(detail::range_text("n", 1, max_n));
}

// Suites as exposed by the CLI; the argument caps every exhaustive bound.
inline std::vector<CheckResult> run_suite(const std::string &suite, std::size_t max_n)
{
    using F = std::function<CheckResult(std::size_t)>;
    const std::map<std::string, std::vector<F>> suites = {
        {"catalan",
         {[](std::size_t k) { return catalan_counts(k); }, [](std::size_t k) { return phi_bijection(k); },
          [](std::size_t k) { return tail_leaf_min(k); }, [](std::size_t k) { return dyck_specialization(k / 2); }}},
        {"stats", {[](std::size_t k) { return refined_c_counts(k); }}},
        {"unary",
         {[](std::size_t k) { return g_counts(k); }, [](std::size_t k) { return g_tree_bijection(k); },
          [](std::size_t k) { return staggered_unary(k); }}},
        {"excursions", {[](std::size_t k) { return excursions(k); }}},
        {"roundtrip", {[](std::size_t k) { return phi_bijection(k); }, [](std::size_t k) { return bridge_roundtrips(k); }}},
        {"series", {[](std::size_t) { return series_identities(); }}},
    };
    std::vector<F> todo;
    if (suite == "all") {
        // criterion order, then the bridge round trips
        todo = {[](std::size_t k) { return catalan_counts(k); },   [](std::size_t k) { return refined_c_counts(k); },
                [](std::size_t k) { return phi_bijection(k); },    [](std::size_t k) { return g_counts(k); },
                [](std::size_t k) { return g_tree_bijection(k); }, [](std::size_t k) { return staggered_unary(k); },
                [](std::size_t k) { return excursions(k); },       [](std::size_t) { return series_identities(); },
                [](std::size_t k) { return tail_leaf_min(k); },    [](std::size_t k) { return dyck_specialization(k / 2); },
                [](std::size_t k) { return bridge_roundtrips(k); }};
    } else {
        const auto it = suites.find(suite);
        if (it == suites.end()) throw invalid_input("unknown verify suite: " + suite);
        todo = it->second;
    }
    std::vector<CheckResult> out;
    for (const auto &f : todo) {
        try {
            out.push_back(f(max_n));
        } catch (const resource_limit &) {
            throw;
        } catch (const error &e) {
            out.push_back({"exception", false, e.what()});
        }
    }
    return out;
}

} // namespace catwalk::verify

#endif
