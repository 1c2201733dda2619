#ifndef CATWALK_SERIES_HPP
#define CATWALK_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <catwalk/error.hpp>

namespace catwalk
{

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binom(std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

inline BigInt catalan(std::int64_t n)
{
    detail::require(n >= 0, "catalan: negative index");
    return binom(2 * n, n) / (n + 1);
}

namespace detail
{

inline BigInt exact_div(const BigInt &num, std::int64_t den, const char *what)
{
    ensure(den != 0 && num % den == 0, what);
    return num / den;
}

} // namespace detail

// C-walks with d pairs of +-1 steps, l left and r right 2-steps.
inline BigInt prop_stats_count(std::int64_t d, std::int64_t l, std::int64_t r)
{
    detail::require(d >= 1, "prop_stats_count: d must be at least 1");
    detail::require(l >= 0 && r >= 0, "prop_stats_count: negative step count");
    const BigInt num = binom(2 * d - 2, d - 1) * binom(l + r + 2 * d - 2, l + r) * binom(l + r, l);
    return detail::exact_div(num, d, "prop_stats_count: division by d is not exact");
}

inline BigInt g_count_sum1(std::int64_t n)
{
    detail::require(n >= 1, "g_count_sum1: n must be at least 1");
    BigInt s = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        const BigInt t = binom(2 * k - 2, k - 1) * binom(2 * n, n - k);
        if (k % 2) s += t;
        else s -= t;
    }
    return detail::exact_div(s, n, "g_count_sum1: division by n is not exact");
}

inline BigInt g_count_sum2(std::int64_t n)
{
    detail::require(n >= 1, "g_count_sum2: n must be at least 1");
    BigInt s = 0;
    for (std::int64_t i = 0; i <= n; ++i) s += binom(n, i) * binom(n, 2 * n + 1 - 3 * i);
    return detail::exact_div(s, n, "g_count_sum2: division by n is not exact");
}

// n-vertex valid labeled trees with k binary nodes (n-1-2k unary nodes).
inline BigInt unary_refined(std::int64_t n, std::int64_t k)
{
    detail::require(n >= 1 && k >= 0, "unary_refined: need n >= 1 and k >= 0");
    return detail::exact_div(binom(2 * n, k) * binom(n - k, k + 1), n, "unary_refined: division by n is not exact");
}

// (n-1)-step excursions with n-1-2k staggered 2-steps.
inline BigInt excursion_refined(std::int64_t n, std::int64_t k)
{
    detail::require(n >= 2 && k >= 0, "excursion_refined: need n >= 2 and k >= 0");
    return detail::exact_div(binom(2 * n, k) * binom(n - k - 2, k - 1), n,
                             "excursion_refined: division by n is not exact");
}

// Power series in z truncated after z^order, with polynomial coefficients in u.
class Series2
{
public:
    explicit Series2(std::size_t order = 0) : rows_(order + 1) {}

    static Series2 constant(std::size_t order, const BigInt &c) { return monomial(order, 0, 0, c); }

    static Series2 monomial(std::size_t order, std::size_t n, std::size_t m, const BigInt &c = 1)
    {
        Series2 s(order);
        s.set(n, m, c);
        return s;
    }

    std::size_t order() const noexcept { return rows_.size() - 1; }

    BigInt coeff(std::size_t n, std::size_t m) const
    {
        if (n >= rows_.size() || m >= rows_[n].size()) return 0;
        return rows_[n][m];
    }

    // Coefficients of z^n, lowest u-degree first, trailing zeros trimmed.
    const std::vector<BigInt> &row(std::size_t n) const { return rows_.at(n); }

    void set(std::size_t n, std::size_t m, const BigInt &c)
    {
        if (n >= rows_.size()) return;
        auto &r = rows_[n];
        if (m >= r.size()) {
            if (c == 0) return;
            r.resize(m + 1);
        }
        r[m] = c;
        trim(r);
    }

    Series2 &operator+=(const Series2 &o)
    {
        combine(o, 1);
        return *this;
    }
    Series2 &operator-=(const Series2 &o)
    {
        combine(o, -1);
        return *this;
    }
    friend Series2 operator+(Series2 a, const Series2 &b) { return a += b; }
    friend Series2 operator-(Series2 a, const Series2 &b) { return a -= b; }

    friend Series2 operator*(const Series2 &a, const Series2 &b)
    {
        const auto N = std::min(a.order(), b.order());
        Series2 out(N);
        for (std::size_t i = 0; i <= N; ++i) {
            if (a.rows_[i].empty()) continue;
            for (std::size_t j = 0; i + j <= N; ++j) {
                const auto &ra = a.rows_[i];
                const auto &rb = b.rows_[j];
                if (rb.empty()) continue;
                auto &dst = out.rows_[i + j];
                if (dst.size() < ra.size() + rb.size() - 1) dst.resize(ra.size() + rb.size() - 1);
                for (std::size_t p = 0; p < ra.size(); ++p) {
                    if (ra[p] == 0) continue;
                    for (std::size_t q = 0; q < rb.size(); ++q) dst[p + q] += ra[p] * rb[q];
                }
            }
        }
        for (auto &r : out.rows_) trim(r);
        return out;
    }

    friend Series2 operator*(const BigInt &c, Series2 s)
    {
        for (auto &r : s.rows_) {
            for (auto &x : r) x *= c;
            trim(r);
        }
        return s;
    }

    Series2 shift_z(std::size_t k = 1) const
    {
        Series2 out(order());
        for (std::size_t n = 0; n + k <= order(); ++n) out.rows_[n + k] = rows_[n];
        return out;
    }

    Series2 mul_u() const
    {
        Series2 out = *this;
        for (auto &r : out.rows_) {
            if (!r.empty()) r.insert(r.begin(), BigInt(0));
        }
        return out;
    }

    Series2 at_u1() const
    {
        Series2 out(order());
        for (std::size_t n = 0; n <= order(); ++n) {
            BigInt s = 0;
            for (const auto &x : rows_[n]) s += x;
            out.set(n, 0, s);
        }
        return out;
    }

    // 1 / (1 - X) for X without constant term.
    Series2 inv_one_minus() const
    {
        detail::require(rows_[0].empty(), "inv_one_minus: series has a constant term");
        Series2 out = constant(order(), 1);
        Series2 pw = out;
        for (std::size_t k = 1; k <= order(); ++k) {
            pw = pw * *this;
            out += pw;
        }
        return out;
    }

    Series2 truncate(std::size_t order) const
    {
        Series2 out(order);
        for (std::size_t n = 0; n <= std::min(order, this->order()); ++n) out.rows_[n] = rows_[n];
        return out;
    }

    bool nonnegative() const
    {
        for (const auto &r : rows_) {
            for (const auto &x : r) {
                if (x < 0) return false;
            }
        }
        return true;
    }

    friend bool operator==(const Series2 &, const Series2 &) = default;

    // First (n, m) where the two series differ, up to the smaller order.
    friend std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Series2 &a, const Series2 &b)
    {
        const auto N = std::min(a.order(), b.order());
        for (std::size_t n = 0; n <= N; ++n) {
            const auto M = std::max(a.rows_[n].size(), b.rows_[n].size());
            for (std::size_t m = 0; m < M; ++m) {
                if (a.coeff(n, m) != b.coeff(n, m)) return std::pair{n, m};
            }
        }
        return std::nullopt;
    }

private:
    static void trim(std::vector<BigInt> &r)
    {
        while (!r.empty() && r.back() == 0) r.pop_back();
    }

    void combine(const Series2 &o, int sign)
    {
        detail::require(o.order() == order(), "series orders differ");
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            auto &r = rows_[n];
            const auto &s = o.rows_[n];
            if (r.size() < s.size()) r.resize(s.size());
            for (std::size_t m = 0; m < s.size(); ++m) {
                if (sign > 0) r[m] += s[m];
                else r[m] -= s[m];
            }
            trim(r);
        }
    }

    std::vector<std::vector<BigInt>> rows_;
};

// u marks staggered 2-steps (A, B, G) and 0-steps (M, T). Cat and C are
// univariate in both modes.
struct SeriesSystem {
    std::size_t order = 0;
    bool bivariate = false;
    Series2 A, B, G, M, T, Cat, C;

    const Series2 &get(std::string_view name) const
    {
        if (name == "A") return A;
        if (name == "B") return B;
        if (name == "G") return G;
        if (name == "M") return M;
        if (name == "T") return T;
        if (name == "C") return C;
        if (name == "catalan" || name == "Cat") return Cat;
        throw invalid_input("unknown series name: " + std::string(name));
    }
};

namespace detail
{

template <typename Step>
void iterate_to_fixpoint(std::size_t order, Step step, const char *what)
{
    const auto limit = 2 * order + 5;
    for (std::size_t it = 0; it < limit; ++it) {
        if (!step()) return;
    }
    throw internal_error(std::string(what) + ": fixed-point iteration did not converge");
}

} // namespace detail

inline SeriesSystem solve_system(std::size_t order, bool bivariate)
{
    detail::require(order >= 1, "solve_system: order must be at least 1");
    SeriesSystem s;
    s.order = order;
    s.bivariate = bivariate;
    auto U = [&](const Series2 &x) { return bivariate ? x.mul_u() : x; };
    const Series2 one = Series2::constant(order, 1);
    const Series2 z = Series2::monomial(order, 1, 0);

    // A = 1 + 2(zA)^2 + 2zA^2(B - z) + (zAB)^2 A^2,  B = z + u zAB
    Series2 A = one, B(order);
    detail::iterate_to_fixpoint(
        order,
        [&] {
            const Series2 zA = A.shift_z();
            const Series2 zAB = zA * B;
            Series2 nA = one + BigInt(2) * (zA * zA) + BigInt(2) * (zA * A * (B - z)) + zAB * zAB * A * A;
            Series2 nB = z + U(zAB);
            const bool changed = !(nA == A && nB == B);
            A = std::move(nA);
            B = std::move(nB);
            return changed;
        },
        "solve_system(A, B)");

    // M = z(1 + TM)^2,  T = M + u TM
    Series2 M(order), T(order);
    detail::iterate_to_fixpoint(
        order,
        [&] {
            const Series2 TM = T * M;
            const Series2 sq = one + TM;
            Series2 nM = (sq * sq).shift_z();
            Series2 nT = M + U(TM);
            const bool changed = !(nM == M && nT == T);
            M = std::move(nM);
            T = std::move(nT);
            return changed;
        },
        "solve_system(M, T)");

    Series2 Cat = one;
    detail::iterate_to_fixpoint(
        order,
        [&] {
            Series2 n = one + (Cat * Cat).shift_z();
            const bool changed = !(n == Cat);
            Cat = std::move(n);
            return changed;
        },
        "solve_system(Cat)");

    s.A = std::move(A);
    s.B = std::move(B);
    s.G = s.A * s.B;
    s.M = std::move(M);
    s.T = std::move(T);
    s.Cat = std::move(Cat);
    s.C = (s.B * s.A * s.B).at_u1();
    return s;
}

// [z^n] T by Lagrange inversion: (1/n) [y^(n-1)] psi'(y) phi(y)^n with
// psi'(y) = 1/(1-uy)^2 and phi(y) = (1 + y^2/(1-uy))^2.
inline std::vector<BigInt> lagrange_t_row(std::size_t n, bool bivariate)
{
    detail::require(n >= 1, "lagrange_t_row: n must be at least 1");
    const std::size_t N = n - 1;
    const Series2 one = Series2::constant(N, 1);
    Series2 uy = Series2::monomial(N, 1, bivariate ? 1 : 0);
    const Series2 geo = uy.inv_one_minus();
    const Series2 inner = one + Series2::monomial(N, 2, 0) * geo;
    const Series2 phi = inner * inner;
    Series2 acc = geo * geo;
    for (std::size_t i = 0; i < n; ++i) acc = acc * phi;
    std::vector<BigInt> row = acc.row(N);
    for (auto &x : row) x = detail::exact_div(x, static_cast<std::int64_t>(n), "lagrange_t_row: division by n is not exact");
    return row;
}

struct IdentityReport {
    bool ok = true;
    std::string failure; // first failing identity and coefficient
    std::vector<std::string> checked;
};

inline IdentityReport check_identities(const SeriesSystem &s)
{
    IdentityReport rep;
    const auto N = s.order;
    const Series2 one = Series2::constant(N, 1);
    auto U = [&](const Series2 &x) { return s.bivariate ? x.mul_u() : x; };
    auto check = [&](const std::string &name, const Series2 &lhs, const Series2 &rhs) {
        rep.checked.push_back(name);
        if (!rep.ok) return;
        if (auto d = first_difference(lhs, rhs)) {
            rep.ok = false;
            rep.failure = name + " fails at [z^" + std::to_string(d->first) + " u^" + std::to_string(d->second) +
                          "]: " + lhs.coeff(d->first, d->second).str() + " != " + rhs.coeff(d->first, d->second).str();
        }
    };
    const Series2 G1 = s.G.at_u1();
    check("1+G+G^2 = Cat", one + G1 + G1 * G1, s.Cat);
    check("C = z(Cat-1)", s.C, (s.Cat - one).shift_z());
    const Series2 zA = s.A.shift_z();
    check("M = zA", s.M, zA);
    check("T = M/(1-uM)", s.T, s.M * U(s.M).inv_one_minus());
    check("G = zA/(1-uzA)", s.G, zA * U(zA).inv_one_minus());
    Series2 lag(N);
    for (std::size_t n = 1; n <= N; ++n) {
        const auto row = lagrange_t_row(n, s.bivariate);
        for (std::size_t m = 0; m < row.size(); ++m) lag.set(n, m, row[m]);
    }
    check("Lagrange [z^n]T", s.T, lag);
    rep.checked.push_back("nonnegative coefficients");
    for (const auto *x : {&s.A, &s.B, &s.G, &s.M, &s.T, &s.Cat, &s.C}) {
        if (rep.ok && !x->nonnegative()) {
            rep.ok = false;
            rep.failure = "negative coefficient in a solved series";
        }
    }
    return rep;
}

} // namespace catwalk

#endif
