#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kuramoto/error.hpp"

namespace kuramoto {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Always "p/q", integers included ("-2/1").
inline std::string to_fraction_string(const Rational& x) {
    return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_fraction(const std::string& text) {
    using boost::multiprecision::cpp_int;
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(cpp_int(text));
        const cpp_int den(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + text + "\"");
        return Rational(cpp_int(text.substr(0, slash)), den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw Error(ErrorCode::ParseError, "not a fraction: \"" + text + "\"");
    }
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

using RationalVector = std::vector<Rational>;

enum class SolutionKind { Empty, Point, Line, Plane, Space };

inline const char* to_string(SolutionKind kind) {
    switch (kind) {
    case SolutionKind::Empty: return "empty";
    case SolutionKind::Point: return "point";
    case SolutionKind::Line: return "line";
    case SolutionKind::Plane: return "plane";
    case SolutionKind::Space: return "space";
    }
    return "?";
}

/// { basepoint + sum_k t_k directions[k] }, or nothing when kind == Empty.
struct SolutionSet {
    SolutionKind kind = SolutionKind::Empty;
    RationalVector basepoint;
    std::vector<RationalVector> directions;

    bool empty() const noexcept { return kind == SolutionKind::Empty; }
    std::size_t dimension() const noexcept { return directions.size(); }
};

/// Exact Gauss-Jordan elimination of A x = b.
///
/// The reduced row echelon form gives the basepoint (free unknowns set to
/// zero) and one direction per free unknown. Every point of the returned
/// set satisfies every equation exactly.
inline SolutionSet solve_linear_system(std::vector<RationalVector> a, RationalVector b) {
    const auto rows = a.size();
    if (b.size() != rows) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
    const auto cols = rows ? a.front().size() : 0;
    for (const auto& row : a)
        if (row.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged coefficient matrix");

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(b[pivot], b[rank]);
        const Rational inv = 1 / a[rank][col];
        for (std::size_t c = col; c < cols; ++c) a[rank][c] *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
            b[r] -= factor * b[rank];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (b[r] != 0) return {};

    SolutionSet set;
    set.basepoint.assign(cols, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) set.basepoint[pivot_cols[r]] = b[r];
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivot_cols) is_pivot[c] = 1;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector d(cols, Rational(0));
        d[free] = 1;
        for (std::size_t r = 0; r < rank; ++r) d[pivot_cols[r]] = -a[r][free];
        set.directions.push_back(std::move(d));
    }
    switch (set.directions.size()) {
    case 0: set.kind = SolutionKind::Point; break;
    case 1: set.kind = SolutionKind::Line; break;
    case 2: set.kind = SolutionKind::Plane; break;
    default: set.kind = SolutionKind::Space; break;
    }
    return set;
}

} // namespace kuramoto
