#include "edgebetti/sparse_rank.hpp"

#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

namespace edgebetti {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (p >= (1U << 31) || !is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not a prime below 2^31");
    return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    if (text == "rational" || text == "rationals" || text == "qq" || text == "QQ")
        return rationals();
    if (text == "gf2")
        return gf2();
    if (text.starts_with("gfp:")) {
        const std::string digits(text.substr(4));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
            digits.size() > 10)
            throw std::invalid_argument("bad field \"" + std::string(text) + "\"");
        const auto p = std::stoull(digits);
        if (p >= (1ULL << 31))
            throw std::invalid_argument("field characteristic too large");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("unknown field \"" + std::string(text) +
                                "\" (expected rational, gf2 or gfp:<p>)");
}

std::string FieldSpec::name() const
{
    if (is_rational())
        return "rational";
    return p_ == 2 ? "gf2" : "gfp:" + std::to_string(p_);
}

namespace {

struct PrimeArith {
    using Value = std::uint64_t;
    std::uint64_t p;

    Value convert(std::int64_t v) const
    {
        const auto m = static_cast<std::int64_t>(p);
        return static_cast<Value>(((v % m) + m) % m);
    }
    bool is_zero(const Value& v) const { return v == 0; }

    Value inverse(Value a) const
    {
        Value result = 1;
        Value base = a;
        for (Value e = p - 2; e > 0; e >>= 1) {
            if (e & 1U)
                result = result * base % p;
            base = base * base % p;
        }
        return result;
    }

    void normalize(std::vector<std::pair<int, Value>>& col) const
    {
        const Value inv = inverse(col.back().second);
        for (auto& entry : col)
            entry.second = entry.second * inv % p;
    }

    /// col - col.low * pivot, where pivot.low == 1.
    std::vector<std::pair<int, Value>> eliminate(const std::vector<std::pair<int, Value>>& col,
                                                 const std::vector<std::pair<int, Value>>& pivot) const
    {
        const Value factor = col.back().second;
        std::vector<std::pair<int, Value>> out;
        out.reserve(col.size() + pivot.size());
        std::size_t a = 0;
        std::size_t b = 0;
        while (a < col.size() || b < pivot.size()) {
            if (b == pivot.size() || (a < col.size() && col[a].first < pivot[b].first)) {
                out.push_back(col[a++]);
            } else if (a == col.size() || pivot[b].first < col[a].first) {
                out.emplace_back(pivot[b].first, (p - factor * pivot[b].second % p) % p);
                ++b;
            } else {
                const Value v = (col[a].second + p - factor * pivot[b].second % p) % p;
                if (v != 0)
                    out.emplace_back(col[a].first, v);
                ++a;
                ++b;
            }
        }
        return out;
    }
};

struct Overflow {};

/// Fraction-free elimination on int64 that throws Overflow instead of wrapping.
struct CheckedIntArith {
    using Value = std::int64_t;

    Value convert(std::int64_t v) const { return v; }
    bool is_zero(const Value& v) const { return v == 0; }

    void normalize(std::vector<std::pair<int, Value>>& col) const
    {
        std::int64_t content = 0;
        for (const auto& entry : col) {
            if (entry.second == INT64_MIN)
                throw Overflow{};
            content = std::gcd(content, entry.second);
            if (content == 1)
                return;
        }
        for (auto& entry : col)
            entry.second /= content;
    }

    static Value combine(Value a, Value x, Value b, Value y)
    {
        Value ax = 0;
        Value by = 0;
        Value out = 0;
        if (__builtin_mul_overflow(a, x, &ax) || __builtin_mul_overflow(b, y, &by) ||
            __builtin_sub_overflow(ax, by, &out))
            throw Overflow{};
        return out;
    }

    std::vector<std::pair<int, Value>> eliminate(const std::vector<std::pair<int, Value>>& col,
                                                 const std::vector<std::pair<int, Value>>& pivot) const
    {
        Value scale_col = pivot.back().second;
        Value scale_pivot = col.back().second;
        const Value g = std::gcd(scale_col, scale_pivot);
        scale_col /= g;
        scale_pivot /= g;
        std::vector<std::pair<int, Value>> out;
        out.reserve(col.size() + pivot.size());
        std::size_t a = 0;
        std::size_t b = 0;
        while (a < col.size() || b < pivot.size()) {
            if (b == pivot.size() || (a < col.size() && col[a].first < pivot[b].first)) {
                out.emplace_back(col[a].first, combine(scale_col, col[a].second, 0, 0));
                ++a;
            } else if (a == col.size() || pivot[b].first < col[a].first) {
                out.emplace_back(pivot[b].first, combine(0, 0, scale_pivot, pivot[b].second));
                ++b;
            } else {
                const Value v = combine(scale_col, col[a].second, scale_pivot, pivot[b].second);
                if (v != 0)
                    out.emplace_back(col[a].first, v);
                ++a;
                ++b;
            }
        }
        if (!out.empty())
            normalize(out);
        return out;
    }
};

struct IntegerArith {
    using Value = mpz_class;

    Value convert(std::int64_t v) const { return Value(static_cast<long>(v)); }
    bool is_zero(const Value& v) const { return sgn(v) == 0; }

    void normalize(std::vector<std::pair<int, Value>>& col) const
    {
        mpz_class content = 0;
        for (const auto& entry : col) {
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), entry.second.get_mpz_t());
            if (content == 1)
                return;
        }
        for (auto& entry : col)
            mpz_divexact(entry.second.get_mpz_t(), entry.second.get_mpz_t(), content.get_mpz_t());
    }

    /// pivot.low * col - col.low * pivot; the low entry cancels.
    std::vector<std::pair<int, Value>> eliminate(const std::vector<std::pair<int, Value>>& col,
                                                 const std::vector<std::pair<int, Value>>& pivot) const
    {
        mpz_class scale_col = pivot.back().second;
        mpz_class scale_pivot = col.back().second;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), scale_col.get_mpz_t(), scale_pivot.get_mpz_t());
        scale_col /= g;
        scale_pivot /= g;
        std::vector<std::pair<int, Value>> out;
        out.reserve(col.size() + pivot.size());
        std::size_t a = 0;
        std::size_t b = 0;
        while (a < col.size() || b < pivot.size()) {
            if (b == pivot.size() || (a < col.size() && col[a].first < pivot[b].first)) {
                out.emplace_back(col[a].first, scale_col * col[a].second);
                ++a;
            } else if (a == col.size() || pivot[b].first < col[a].first) {
                out.emplace_back(pivot[b].first, -scale_pivot * pivot[b].second);
                ++b;
            } else {
                mpz_class v = scale_col * col[a].second - scale_pivot * pivot[b].second;
                if (sgn(v) != 0)
                    out.emplace_back(col[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        if (!out.empty())
            normalize(out);
        return out;
    }
};

template <class Arith>
std::size_t reduce_columns(const std::vector<SparseColumn>& columns, int row_count, const Arith& ar)
{
    using Column = std::vector<std::pair<int, typename Arith::Value>>;
    std::vector<int> pivot_of_row(static_cast<std::size_t>(row_count), -1);
    std::vector<Column> pivots;
    for (const SparseColumn& input : columns) {
        Column col;
        col.reserve(input.size());
        for (const auto& [row, value] : input) {
            if (row < 0 || row >= row_count)
                throw std::out_of_range("sparse_rank: row index out of range");
            auto v = ar.convert(value);
            if (!ar.is_zero(v))
                col.emplace_back(row, std::move(v));
        }
        while (!col.empty()) {
            const int low = col.back().first;
            const int pivot = pivot_of_row[low];
            if (pivot < 0) {
                ar.normalize(col);
                pivot_of_row[low] = static_cast<int>(pivots.size());
                pivots.push_back(std::move(col));
                break;
            }
            col = ar.eliminate(col, pivots[pivot]);
        }
    }
    return pivots.size();
}

} // namespace

std::size_t sparse_rank(const std::vector<SparseColumn>& columns, int row_count,
                        const FieldSpec& field)
{
    if (field.is_rational()) {
        try {
            return reduce_columns(columns, row_count, CheckedIntArith{});
        } catch (const Overflow&) {
            return reduce_columns(columns, row_count, IntegerArith{});
        }
    }
    return reduce_columns(columns, row_count, PrimeArith{field.characteristic()});
}

} // namespace edgebetti
