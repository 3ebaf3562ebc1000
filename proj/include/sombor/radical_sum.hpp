#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace sombor {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value  sum_i c_i * sqrt(s_i)  with rational c_i and squarefree s_i >= 1.
///
/// The canonical form (squarefree radicands, no zero coefficients) is unique
/// because square roots of distinct squarefree integers are linearly
/// independent over Q, so equality is structural.
class RadicalSum {
public:
    using Terms = std::map<std::uint64_t, Rational>;

    RadicalSum() = default;

    /// coefficient * sqrt(radicand); radicand need not be squarefree.
    static RadicalSum term(const Rational& coefficient, std::uint64_t radicand);
    static RadicalSum rational(const Rational& value) { return term(value, 1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Coefficient of sqrt(radicand) for a squarefree radicand; zero if absent.
    Rational coefficient(std::uint64_t radicand) const;

    RadicalSum& operator+=(const RadicalSum& rhs);
    RadicalSum& operator-=(const RadicalSum& rhs);
    RadicalSum& operator*=(const Rational& factor);

    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
    friend RadicalSum operator*(RadicalSum a, const Rational& r) { return a *= r; }
    friend RadicalSum operator*(const Rational& r, RadicalSum a) { return a *= r; }
    RadicalSum operator-() const;

    friend bool operator==(const RadicalSum&, const RadicalSum&) = default;

    /// Sum of c_i * sqrt(s_i) in double precision.
    double to_double() const;

    /// `40√2 + 56√5`, `(1/2)√2`, `0`.
    std::string to_string() const;

private:
    void accumulate(std::uint64_t radicand, const Rational& coefficient);

    Terms terms_;
};

struct SquarefreeSplit {
    std::uint64_t outside = 1;  // c
    std::uint64_t radicand = 1;  // s, squarefree
};

/// n = c^2 * s with s squarefree, by trial division. Throws for n == 0.
SquarefreeSplit split_square(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// c * sqrt(s) for n = c^2 s.  Throws InvalidParameter for n <= 0.
RadicalSum radical_of(std::int64_t n);

inline RadicalSum add(const RadicalSum& a, const RadicalSum& b) { return a + b; }
inline RadicalSum subtract(const RadicalSum& a, const RadicalSum& b) { return a - b; }
inline RadicalSum negate(const RadicalSum& a) { return -a; }
inline RadicalSum scale(const RadicalSum& a, const Rational& r) { return a * r; }
inline bool eq_exact(const RadicalSum& a, const RadicalSum& b) { return a == b; }
inline double eval_float(const RadicalSum& a) { return a.to_double(); }

enum class Ordering { Less, Equal, Greater, Inconclusive };
const char* to_string(Ordering o) noexcept;

/// 1e-9 * max(1, |a|, |b|)
double default_margin(const RadicalSum& a, const RadicalSum& b);

/// Equal when the canonical forms agree; otherwise Less/Greater when
/// |eval(a - b)| exceeds the margin and Inconclusive when it does not.
Ordering cmp_numeric(const RadicalSum& a, const RadicalSum& b, double margin);
Ordering cmp_numeric(const RadicalSum& a, const RadicalSum& b);

/// [{"radicand": s, "num": p, "den": q}, ...] sorted by radicand. Numerators
/// and denominators outside the int64 range are written as decimal strings.
nlohmann::json terms_to_json(const RadicalSum& a);
/// {"terms": [...], "value": float}
nlohmann::json to_json(const RadicalSum& a);
RadicalSum from_json(const nlohmann::json& j);

}  // namespace sombor
