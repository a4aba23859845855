// Exact rational scalars, coordinate vectors, and the fraction-free linear
// solves the rest of the library is built on. No floating point anywhere:
// every operation is exact, and any int64 overflow throws instead of wrapping.
#ifndef PISYS_EXACTLIN_HPP
#define PISYS_EXACTLIN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pisys {

// Checked machine-integer arithmetic. Coordinates and solve intermediates
// stay tiny at the scales this library handles (Bourbaki coordinates, rank
// <= 8), so fixed-width integers suffice; an overflow is a loud error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Exact fraction, always in lowest terms with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d);

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    std::string str() const;

    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// Parses "p", "p/q"; rejects anything else (floats in particular).
Rational parse_rational(const std::string& text);

// Coordinate vector of a root in the ambient Euclidean space. Equality is
// exact componentwise equality; dim is the coordinate count.
struct RationalVector {
    std::vector<Rational> coords;

    RationalVector() = default;
    explicit RationalVector(std::vector<Rational> c) : coords(std::move(c)) {}
    static RationalVector zero(std::size_t dim) {
        return RationalVector(std::vector<Rational>(dim));
    }

    std::size_t dim() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }
    bool is_zero() const;
    std::string str() const;

    friend RationalVector operator+(const RationalVector& a, const RationalVector& b);
    friend RationalVector operator-(const RationalVector& a, const RationalVector& b);
    friend RationalVector operator-(const RationalVector& a);
    friend RationalVector operator*(const Rational& s, const RationalVector& v);
    friend bool operator==(const RationalVector& a, const RationalVector& b) {
        return a.coords == b.coords;
    }
    friend bool operator!=(const RationalVector& a, const RationalVector& b) {
        return !(a == b);
    }
};

// Lexicographic coordinate order; the canonical order used for root sets,
// report output, and search determinism throughout the library.
bool lex_less(const RationalVector& a, const RationalVector& b);

// Euclidean inner product. Throws on dimension mismatch.
Rational dot(const RationalVector& u, const RationalVector& v);

// Exact rank via fraction-free (Bareiss) elimination.
int rank_of(std::span<const RationalVector> vectors);

// Solves the coordinates of `target` over a linearly independent `basis`:
// returns c with sum c_i * basis_i == target, or nullopt when target is
// outside the rational span. A dependent basis is a contract violation and
// throws (it is not the same thing as "no solution").
std::optional<std::vector<Rational>> solve_coords(std::span<const RationalVector> basis,
                                                  const RationalVector& target);

// Factored form of a span: one fraction-free elimination of the basis,
// reused for many membership/coordinate queries against the same span.
class SpanSolver {
public:
    explicit SpanSolver(std::span<const RationalVector> basis);

    int rank() const { return rank_; }
    std::size_t basis_size() const { return ncols_; }
    bool in_span(const RationalVector& target) const;
    std::optional<std::vector<Rational>> coords(const RationalVector& target) const;

private:
    std::size_t nrows_ = 0;  // ambient dimension
    std::size_t ncols_ = 0;  // basis size
    int rank_ = 0;
    std::vector<std::int64_t> row_scale_;           // per-row denominator clearing
    std::vector<std::vector<std::int64_t>> echelon_; // U, fraction-free echelon of the basis
    std::vector<std::vector<std::int64_t>> rowops_;  // E with E * diag(row_scale) * B == U
    std::vector<int> pivot_col_;                     // pivot column of each echelon row
};

}  // namespace pisys

#endif
