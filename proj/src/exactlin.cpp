#include "pisys/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pisys {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact arithmetic (add)");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact arithmetic (sub)");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact arithmetic (mul)");
    return r;
}

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    // Safe for the magnitudes we allow; INT64_MIN never survives normalization
    // because checked arithmetic throws long before values grow that large.
    if (a < 0) a = checked_sub(0, a);
    if (b < 0) b = checked_sub(0, b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = checked_sub(0, n);
        d = checked_sub(0, d);
    }
    std::int64_t g = gcd64(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t g = gcd64(a.den, b.den);
    std::int64_t bd = b.den / g;
    std::int64_t n = checked_add(checked_mul(a.num, bd), checked_mul(b.num, a.den / g));
    return Rational(n, checked_mul(a.den, bd));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediates small.
    std::int64_t g1 = gcd64(a.num, b.den);
    std::int64_t g2 = gcd64(b.num, a.den);
    std::int64_t n = checked_mul(a.num / (g1 ? g1 : 1), b.num / (g2 ? g2 : 1));
    std::int64_t d = checked_mul(a.den / (g2 ? g2 : 1), b.den / (g1 ? g1 : 1));
    return Rational(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("rational division by zero");
    return a * Rational(b.den, b.num);
}

Rational parse_rational(const std::string& text) {
    auto parse_int = [](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rational literal: " + s);
        }
        if (pos != s.size()) throw std::invalid_argument("bad rational literal: " + s);
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

bool RationalVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

std::string RationalVector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << coords[i].str();
    }
    os << ")";
    return os.str();
}

namespace {

void require_same_dim(const RationalVector& a, const RationalVector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
}

}  // namespace

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    require_same_dim(a, b);
    RationalVector r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] = r[i] + b[i];
    return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
    require_same_dim(a, b);
    RationalVector r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] = r[i] - b[i];
    return r;
}

RationalVector operator-(const RationalVector& a) {
    RationalVector r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
    RationalVector r = v;
    for (auto& c : r.coords) c = s * c;
    return r;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

Rational dot(const RationalVector& u, const RationalVector& v) {
    require_same_dim(u, v);
    Rational acc;
    for (std::size_t i = 0; i < u.dim(); ++i) acc = acc + u[i] * v[i];
    return acc;
}

// ---------------------------------------------------------------------------
// SpanSolver: fraction-free (Bareiss) elimination of [B | I], scaled to
// integers row by row. The appended identity block tracks the row operations
// exactly (every Bareiss division is exact on appended columns too), so after
// elimination E * D * B == U with integer E, U and diagonal D. A later target
// t is resolved as U c == E * (D t) by back substitution over the pivot rows;
// the zero rows of U impose the span-membership conditions.
// ---------------------------------------------------------------------------

SpanSolver::SpanSolver(std::span<const RationalVector> basis) {
    ncols_ = basis.size();
    nrows_ = ncols_ ? basis[0].dim() : 0;
    for (const auto& v : basis)
        if (v.dim() != nrows_) throw std::invalid_argument("dimension mismatch in basis");

    row_scale_.assign(nrows_, 1);
    std::vector<std::vector<std::int64_t>> m(nrows_, std::vector<std::int64_t>(ncols_, 0));
    for (std::size_t r = 0; r < nrows_; ++r) {
        std::int64_t scale = 1;
        for (std::size_t c = 0; c < ncols_; ++c) {
            std::int64_t d = basis[c][r].den;
            scale = checked_mul(scale / gcd64(scale, d), d);
        }
        row_scale_[r] = scale;
        for (std::size_t c = 0; c < ncols_; ++c)
            m[r][c] = checked_mul(basis[c][r].num, scale / basis[c][r].den);
    }

    rowops_.assign(nrows_, std::vector<std::int64_t>(nrows_, 0));
    for (std::size_t r = 0; r < nrows_; ++r) rowops_[r][r] = 1;

    std::int64_t prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols_ && row < nrows_; ++col) {
        std::size_t pr = row;
        while (pr < nrows_ && m[pr][col] == 0) ++pr;
        if (pr == nrows_) continue;  // dependent column
        if (pr != row) {
            std::swap(m[pr], m[row]);
            std::swap(rowops_[pr], rowops_[row]);
        }
        std::int64_t piv = m[row][col];
        for (std::size_t i = row + 1; i < nrows_; ++i) {
            std::int64_t f = m[i][col];
            for (std::size_t j = 0; j < ncols_; ++j)
                m[i][j] = checked_sub(checked_mul(m[i][j], piv), checked_mul(f, m[row][j])) / prev;
            for (std::size_t j = 0; j < nrows_; ++j)
                rowops_[i][j] =
                    checked_sub(checked_mul(rowops_[i][j], piv), checked_mul(f, rowops_[row][j])) / prev;
        }
        pivot_col_.push_back(static_cast<int>(col));
        prev = piv;
        ++row;
    }
    rank_ = static_cast<int>(row);
    echelon_ = std::move(m);
}

std::optional<std::vector<Rational>> SpanSolver::coords(const RationalVector& target) const {
    if (ncols_ == 0) {
        // The empty span contains exactly the zero vector.
        if (target.is_zero()) return std::vector<Rational>{};
        return std::nullopt;
    }
    if (target.dim() != nrows_) throw std::invalid_argument("dimension mismatch in solve");

    // u = E * (D * target), exact rationals.
    std::vector<Rational> u(nrows_);
    std::vector<Rational> scaled(nrows_);
    for (std::size_t r = 0; r < nrows_; ++r)
        scaled[r] = Rational(row_scale_[r]) * target[r];
    for (std::size_t r = 0; r < nrows_; ++r) {
        Rational acc;
        for (std::size_t j = 0; j < nrows_; ++j) {
            if (rowops_[r][j] == 0) continue;
            acc = acc + Rational(rowops_[r][j]) * scaled[j];
        }
        u[r] = acc;
    }

    // Rows below the rank must vanish for the target to lie in the span.
    for (std::size_t r = rank_; r < nrows_; ++r)
        if (!u[r].is_zero()) return std::nullopt;

    // Back substitution on the echelon rows. Dependent (pivot-free) basis
    // columns cannot occur here: callers must pass an independent basis.
    std::vector<Rational> c(ncols_);
    for (int r = rank_ - 1; r >= 0; --r) {
        Rational acc = u[r];
        for (std::size_t j = pivot_col_[r] + 1; j < ncols_; ++j) {
            if (echelon_[r][j] == 0) continue;
            acc = acc - Rational(echelon_[r][j]) * c[j];
        }
        c[pivot_col_[r]] = acc / Rational(echelon_[r][pivot_col_[r]]);
    }
    return c;
}

bool SpanSolver::in_span(const RationalVector& target) const {
    return coords(target).has_value();
}

int rank_of(std::span<const RationalVector> vectors) {
    if (vectors.empty()) return 0;
    return SpanSolver(vectors).rank();
}

std::optional<std::vector<Rational>> solve_coords(std::span<const RationalVector> basis,
                                                  const RationalVector& target) {
    SpanSolver solver(basis);
    if (solver.rank() != static_cast<int>(basis.size()))
        throw std::invalid_argument("solve_coords requires a linearly independent basis");
    return solver.coords(target);
}

}  // namespace pisys
