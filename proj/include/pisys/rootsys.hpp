// Indecomposable root systems in their Bourbaki coordinates, with the
// membership, length, and reflection queries everything downstream needs.
// A RootSystem is immutable after build(); all queries are pure.
#ifndef PISYS_ROOTSYS_HPP
#define PISYS_ROOTSYS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pisys/exactlin.hpp"

namespace pisys {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct TypeLabel {
    Family family;
    int rank;

    std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
    bool admissible() const;

    friend bool operator==(const TypeLabel& a, const TypeLabel& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator!=(const TypeLabel& a, const TypeLabel& b) { return !(a == b); }
    friend bool operator<(const TypeLabel& a, const TypeLabel& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.rank < b.rank;
    }
};

// B2 and C2 name the same root system; every label comparison that cares
// about the system rather than the Bourbaki numbering goes through this.
bool same_system(const TypeLabel& a, const TypeLabel& b);

TypeLabel parse_type_label(const std::string& text);

// All admissible labels with rank in [min_rank, max_rank].
std::vector<TypeLabel> admissible_labels(int min_rank, int max_rank);

enum class LengthClass { Long, Short };

class RootSystem {
public:
    // Standard realization of an admissible label: full root set, Bourbaki
    // simple basis with Bourbaki node numbering, roots in canonical sorted
    // order. E6/E7 live inside the 8-dimensional E8 ambient space.
    static RootSystem build(TypeLabel label);

    const TypeLabel& label() const { return label_; }
    int rank() const { return label_.rank; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<RationalVector>& roots() const { return roots_; }
    const std::vector<RationalVector>& simple() const { return simple_; }

    bool is_root(const RationalVector& v) const;

    // The unique root of maximal height over the simple basis; the lowest
    // root of the system is its negative.
    const RationalVector& highest_root() const { return highest_; }

    bool multiply_laced() const { return multiply_laced_; }
    const Rational& long_len2() const { return long_len2_; }
    const Rational& short_len2() const { return short_len2_; }

    // Partition by squared length. Simply laced systems: `Long` is all
    // roots, `Short` is empty.
    std::vector<RationalVector> roots_by_length(LengthClass which) const;

private:
    TypeLabel label_;
    std::size_t ambient_dim_ = 0;
    std::vector<RationalVector> roots_;
    std::vector<RationalVector> simple_;
    RationalVector highest_;
    Rational long_len2_;
    Rational short_len2_;
    bool multiply_laced_ = false;
};

// Cartan integer 2(alpha,beta)/(beta,beta). Throws on zero beta and on a
// non-integral result (the inputs were not roots of one common system).
std::int64_t cartan_int(const RationalVector& alpha, const RationalVector& beta);

// Reflection of v in the hyperplane orthogonal to alpha.
RationalVector reflect(const RationalVector& alpha, const RationalVector& v);

}  // namespace pisys

#endif
