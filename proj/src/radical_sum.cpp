#include "sombor/radical_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sombor/error.hpp"

namespace sombor {

SquarefreeSplit split_square(std::uint64_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "cannot split 0 into c^2 * s");
    SquarefreeSplit out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % (p * p) == 0) {
            n /= p * p;
            out.outside *= p;
        }
        if (n % p == 0) {
            n /= p;
            out.radicand *= p;
        }
    }
    out.radicand *= n;
    return out;
}

bool is_squarefree(std::uint64_t n) {
    return n != 0 && split_square(n).outside == 1;
}

RadicalSum radical_of(std::int64_t n) {
    if (n <= 0) {
        throw Error(ErrorKind::InvalidParameter,
                    "radical_of needs a positive integer, got " + std::to_string(n));
    }
    const auto split = split_square(static_cast<std::uint64_t>(n));
    return RadicalSum::term(Rational(split.outside), split.radicand);
}

// ---------------------------------------------------------------------------

RadicalSum RadicalSum::term(const Rational& coefficient, std::uint64_t radicand) {
    RadicalSum out;
    if (coefficient == 0) return out;
    const auto split = split_square(radicand);
    out.accumulate(split.radicand, coefficient * split.outside);
    return out;
}

Rational RadicalSum::coefficient(std::uint64_t radicand) const {
    auto it = terms_.find(radicand);
    return it == terms_.end() ? Rational(0) : it->second;
}

void RadicalSum::accumulate(std::uint64_t radicand, const Rational& coefficient) {
    auto [it, inserted] = terms_.try_emplace(radicand, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& rhs) {
    for (const auto& [s, c] : rhs.terms_) accumulate(s, c);
    return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& rhs) {
    for (const auto& [s, c] : rhs.terms_) accumulate(s, -c);
    return *this;
}

RadicalSum& RadicalSum::operator*=(const Rational& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, c] : terms_) c *= factor;
    return *this;
}

RadicalSum RadicalSum::operator-() const {
    RadicalSum out = *this;
    for (auto& [s, c] : out.terms_) c = -c;
    return out;
}

double RadicalSum::to_double() const {
    double sum = 0.0;
    for (const auto& [s, c] : terms_) {
        sum += c.convert_to<double>() * std::sqrt(static_cast<double>(s));
    }
    return sum;
}

std::string RadicalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;

        const Integer num = boost::multiprecision::numerator(mag);
        const Integer den = boost::multiprecision::denominator(mag);
        if (s == 1) {
            out << num;
            if (den != 1) out << '/' << den;
            continue;
        }
        if (den != 1) {
            out << '(' << num << '/' << den << ')';
        } else if (num != 1) {
            out << num;
        }
        out << "√" << s;
    }
    return out.str();
}

const char* to_string(Ordering o) noexcept {
    switch (o) {
        case Ordering::Less: return "less";
        case Ordering::Equal: return "equal";
        case Ordering::Greater: return "greater";
        case Ordering::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

double default_margin(const RadicalSum& a, const RadicalSum& b) {
    return 1e-9 * std::max({1.0, std::abs(a.to_double()), std::abs(b.to_double())});
}

Ordering cmp_numeric(const RadicalSum& a, const RadicalSum& b, double margin) {
    if (a == b) return Ordering::Equal;
    const double gap = (a - b).to_double();
    if (gap > margin) return Ordering::Greater;
    if (gap < -margin) return Ordering::Less;
    return Ordering::Inconclusive;
}

Ordering cmp_numeric(const RadicalSum& a, const RadicalSum& b) {
    return cmp_numeric(a, b, default_margin(a, b));
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw Error(ErrorKind::Parse, "expected integer or decimal string");
}

}  // namespace

nlohmann::json terms_to_json(const RadicalSum& a) {
    auto arr = nlohmann::json::array();
    for (const auto& [s, c] : a.terms()) {
        arr.push_back({{"radicand", s},
                       {"num", integer_to_json(boost::multiprecision::numerator(c))},
                       {"den", integer_to_json(boost::multiprecision::denominator(c))}});
    }
    return arr;
}

nlohmann::json to_json(const RadicalSum& a) {
    return {{"terms", terms_to_json(a)}, {"value", a.to_double()}};
}

RadicalSum from_json(const nlohmann::json& j) {
    const auto& terms = j.is_object() ? j.at("terms") : j;
    if (!terms.is_array()) throw Error(ErrorKind::Parse, "RadicalSum JSON needs a terms array");
    RadicalSum out;
    for (const auto& t : terms) {
        const auto den = integer_from_json(t.at("den"));
        if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
        out += RadicalSum::term(Rational(integer_from_json(t.at("num")), den),
                                t.at("radicand").get<std::uint64_t>());
    }
    return out;
}

}  // namespace sombor
