#include "pisys/rootsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pisys {

bool TypeLabel::admissible() const {
    switch (family) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 2;
        case Family::C: return rank >= 2;
        case Family::D: return rank >= 4;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

bool same_system(const TypeLabel& a, const TypeLabel& b) {
    if (a == b) return true;
    auto bc2 = [](const TypeLabel& t) {
        return t.rank == 2 && (t.family == Family::B || t.family == Family::C);
    };
    return bc2(a) && bc2(b);
}

TypeLabel parse_type_label(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("unknown type label: " + text);
    char f = text[0];
    if (f < 'A' || f > 'G') throw std::invalid_argument("unknown type label: " + text);
    int rank = 0;
    try {
        std::size_t pos = 0;
        rank = std::stoi(text.substr(1), &pos);
        if (pos + 1 != text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("unknown type label: " + text);
    }
    TypeLabel label{static_cast<Family>(f), rank};
    if (!label.admissible()) throw std::invalid_argument("inadmissible type label: " + text);
    return label;
}

std::vector<TypeLabel> admissible_labels(int min_rank, int max_rank) {
    std::vector<TypeLabel> out;
    for (int n = min_rank; n <= max_rank; ++n)
        for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
            TypeLabel t{f, n};
            if (t.admissible()) out.push_back(t);
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

RationalVector unit(std::size_t dim, std::size_t i, std::int64_t v = 1) {
    RationalVector r = RationalVector::zero(dim);
    r[i] = Rational(v);
    return r;
}

RationalVector make_vec(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> entries) {
    RationalVector r = RationalVector::zero(dim);
    for (const auto& [i, v] : entries) r[i] = v;
    return r;
}

void add_with_negatives(std::vector<RationalVector>& roots, const RationalVector& v) {
    roots.push_back(v);
    roots.push_back(-v);
}

// {±e_i ± e_j : i < j}
void add_pair_roots(std::vector<RationalVector>& roots, std::size_t dim, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
        for (std::size_t j = i + 1; j < upto; ++j) {
            add_with_negatives(roots, unit(dim, i) - unit(dim, j));
            add_with_negatives(roots, unit(dim, i) + unit(dim, j));
        }
}

// E8 roots: 112 integer pairs plus 128 half-sum vectors with an even number
// of minus signs.
std::vector<RationalVector> e8_roots() {
    std::vector<RationalVector> roots;
    add_pair_roots(roots, 8, 8);
    for (unsigned mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        RationalVector v = RationalVector::zero(8);
        for (std::size_t i = 0; i < 8; ++i)
            v[i] = (mask >> i) & 1u ? Rational(-1, 2) : Rational(1, 2);
        roots.push_back(v);
    }
    return roots;
}

std::vector<RationalVector> e8_simple() {
    Rational h(1, 2);
    std::vector<RationalVector> s;
    s.push_back(make_vec(8, {{0, h}, {1, -h}, {2, -h}, {3, -h}, {4, -h}, {5, -h}, {6, -h}, {7, h}}));
    s.push_back(unit(8, 0) + unit(8, 1));
    for (std::size_t i = 0; i + 1 < 7; ++i) s.push_back(unit(8, i + 1) - unit(8, i));
    return s;  // alpha1..alpha8, Bourbaki numbering
}

}  // namespace

RootSystem RootSystem::build(TypeLabel label) {
    if (!label.admissible())
        throw std::invalid_argument("inadmissible type label: " + label.str());

    RootSystem rs;
    rs.label_ = label;
    const std::size_t n = static_cast<std::size_t>(label.rank);
    std::vector<RationalVector> roots;
    std::vector<RationalVector> simple;

    switch (label.family) {
        case Family::A: {
            const std::size_t dim = n + 1;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    if (i != j) roots.push_back(unit(dim, i) - unit(dim, j));
            for (std::size_t i = 0; i < n; ++i) simple.push_back(unit(dim, i) - unit(dim, i + 1));
            break;
        }
        case Family::B: {
            add_pair_roots(roots, n, n);
            for (std::size_t i = 0; i < n; ++i) add_with_negatives(roots, unit(n, i));
            for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(unit(n, i) - unit(n, i + 1));
            simple.push_back(unit(n, n - 1));
            break;
        }
        case Family::C: {
            add_pair_roots(roots, n, n);
            for (std::size_t i = 0; i < n; ++i) add_with_negatives(roots, unit(n, i, 2));
            for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(unit(n, i) - unit(n, i + 1));
            simple.push_back(unit(n, n - 1, 2));
            break;
        }
        case Family::D: {
            add_pair_roots(roots, n, n);
            for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(unit(n, i) - unit(n, i + 1));
            simple.push_back(unit(n, n - 2) + unit(n, n - 1));
            break;
        }
        case Family::E: {
            auto all = e8_roots();
            auto s8 = e8_simple();
            simple.assign(s8.begin(), s8.begin() + n);
            if (n == 8) {
                roots = std::move(all);
            } else {
                // E7/E6 are the E8 roots inside the rational span of the
                // first 7 (resp. 6) simple roots.
                SpanSolver span(simple);
                for (const auto& r : all)
                    if (span.in_span(r)) roots.push_back(r);
            }
            break;
        }
        case Family::F: {
            add_pair_roots(roots, 4, 4);
            for (std::size_t i = 0; i < 4; ++i) add_with_negatives(roots, unit(4, i));
            for (unsigned mask = 0; mask < 16; ++mask) {
                RationalVector v = RationalVector::zero(4);
                for (std::size_t i = 0; i < 4; ++i)
                    v[i] = (mask >> i) & 1u ? Rational(-1, 2) : Rational(1, 2);
                roots.push_back(v);
            }
            Rational h(1, 2);
            simple.push_back(unit(4, 1) - unit(4, 2));
            simple.push_back(unit(4, 2) - unit(4, 3));
            simple.push_back(unit(4, 3));
            simple.push_back(make_vec(4, {{0, h}, {1, -h}, {2, -h}, {3, -h}}));
            break;
        }
        case Family::G: {
            // Sum-zero realization in dimension 3: short roots e_i - e_j,
            // long roots +-(2e_i - e_j - e_k).
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    if (i != j) roots.push_back(unit(3, i) - unit(3, j));
            for (std::size_t i = 0; i < 3; ++i) {
                RationalVector v = RationalVector::zero(3);
                for (std::size_t j = 0; j < 3; ++j) v[j] = Rational(j == i ? 2 : -1);
                add_with_negatives(roots, v);
            }
            simple.push_back(unit(3, 0) - unit(3, 1));
            simple.push_back(make_vec(3, {{0, Rational(-2)}, {1, Rational(1)}, {2, Rational(1)}}));
            break;
        }
    }

    rs.ambient_dim_ = roots.front().dim();
    std::sort(roots.begin(), roots.end(), lex_less);
    rs.roots_ = std::move(roots);
    rs.simple_ = std::move(simple);

    // Length classes.
    Rational lo = dot(rs.roots_.front(), rs.roots_.front());
    Rational hi = lo;
    for (const auto& r : rs.roots_) {
        Rational l = dot(r, r);
        if (l < lo) lo = l;
        if (hi < l) hi = l;
    }
    rs.long_len2_ = hi;
    rs.short_len2_ = lo;
    rs.multiply_laced_ = lo != hi;

    // Highest root: unique maximal height over the simple basis.
    SpanSolver span(rs.simple_);
    bool have = false;
    Rational best_height;
    for (const auto& r : rs.roots_) {
        auto c = span.coords(r);
        if (!c) throw std::logic_error("root outside simple-basis span in " + label.str());
        Rational h;
        for (const auto& ci : *c) h = h + ci;
        if (!have || best_height < h) {
            have = true;
            best_height = h;
            rs.highest_ = r;
        }
    }
    return rs;
}

bool RootSystem::is_root(const RationalVector& v) const {
    if (v.dim() != ambient_dim_)
        throw std::invalid_argument("dimension mismatch: vector has dim " + std::to_string(v.dim()) +
                                    ", system is ambient dim " + std::to_string(ambient_dim_));
    auto it = std::lower_bound(roots_.begin(), roots_.end(), v, lex_less);
    return it != roots_.end() && *it == v;
}

std::vector<RationalVector> RootSystem::roots_by_length(LengthClass which) const {
    std::vector<RationalVector> out;
    for (const auto& r : roots_) {
        Rational l = dot(r, r);
        bool is_short = multiply_laced_ && l == short_len2_;
        if ((which == LengthClass::Short) == is_short) out.push_back(r);
    }
    return out;
}

std::int64_t cartan_int(const RationalVector& alpha, const RationalVector& beta) {
    Rational bb = dot(beta, beta);
    if (bb.is_zero()) throw std::invalid_argument("cartan_int with zero beta");
    Rational c = Rational(2) * dot(alpha, beta) / bb;
    if (!c.is_integer())
        throw std::invalid_argument("non-integral Cartan number: inputs are not roots of one system");
    return c.num;
}

RationalVector reflect(const RationalVector& alpha, const RationalVector& v) {
    Rational aa = dot(alpha, alpha);
    if (aa.is_zero()) throw std::invalid_argument("reflect in zero vector");
    Rational c = Rational(2) * dot(v, alpha) / aa;
    return v - c * alpha;
}

}  // namespace pisys
