#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sombor/constructions.hpp"
#include "sombor/graph.hpp"
#include "sombor/radical_sum.hpp"

namespace sombor {

/// K_m with every vertex identified with a vertex of its own K_n.
struct QSpec {
    std::uint32_t m = 1;
    std::uint32_t n = 1;
};

/// Chain of k cycles C_q; the two contacts of an internal cycle sit h apart.
struct SpiroSpec {
    std::uint32_t q = 3;
    std::uint32_t h = 1;
    std::uint32_t k = 1;
};

/// Link of k cycles C_q; the two contacts of an internal cycle sit h apart.
struct PolySpec {
    std::uint32_t q = 3;
    std::uint32_t h = 1;
    std::uint32_t k = 1;
};

enum class CactusName { T, Q, O, Oh, L, M };

/// Named cactus chains; each is a spiro chain with fixed q and h.
struct CactusSpec {
    CactusName name = CactusName::T;
    std::uint32_t n = 1;
};

struct TriangulaneSpec {
    std::uint32_t k = 1;
};

/// Ternary hexagon dendrimer D_3[n].
struct DendrimerSpec {
    std::uint32_t n = 0;
};

using FamilySpec =
    std::variant<QSpec, SpiroSpec, PolySpec, CactusSpec, TriangulaneSpec, DendrimerSpec>;

/// Throws InvalidParameter on any parameter out of range.
void validate(const FamilySpec& spec);

/// `q:m=5,n=4`, `spiro:q=6,h=2,k=8`, `poly:q=6,h=1,k=4`, `cactus:name=Qn,n=5`,
/// `triangulane:k=3`, `d3:n=2`.  Throws Parse on malformed text and
/// InvalidParameter on out-of-range values.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// The spiro chain a cactus alias stands for.
SpiroSpec spiro_equivalent(const CactusSpec& spec);
std::string_view to_string(CactusName name) noexcept;

Assembly generate(const FamilySpec& spec);

/// Closed-form SO value for the family.
RadicalSum closed_form(const FamilySpec& spec);

/// Degree-pair edge counts the family's structure predicts.
Census census_prediction(const FamilySpec& spec);

/// True when closed_form/census_prediction use the adjacent-contact (h = 1)
/// formula. For h = 1 and k = 1 the single cycle is handled by the h >= 2 form.
bool uses_adjacent_contact_formula(const FamilySpec& spec);

/// Q(m,n) 1<=m<=8, 2<=n<=8; spiro and poly 3<=q<=10, 1<=h<=q/2, 1<=k<=12;
/// the six cactus aliases for 2<=n<=12; triangulane k=1..6; D_3[n] n=0..5.
std::vector<FamilySpec> default_family_grid();
inline constexpr int kDefaultGridVersion = 1;

/// One spec per line; blank lines and `#` comments ignored.
std::vector<FamilySpec> read_family_grid(std::istream& in);

}  // namespace sombor
