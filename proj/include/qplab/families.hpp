#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qplab/partitions.hpp"
#include "qplab/qengine.hpp"

namespace qplab {

/// The named two-color partition families.
enum class Family { E, F, Tomega, Tpsi, Tnu, A, B, C };

inline constexpr std::array<Family, 8> kAllFamilies = {Family::E,    Family::F, Family::Tomega, Family::Tpsi,
                                                       Family::Tnu,  Family::A, Family::B,      Family::C};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Declarative part rules of a family, with its sign statistic.
FamilySpec family_spec(Family f);

/// Generating function of a family as a sum over the smallest part.
/// E and F have no anchor; their templates are a single product term.
struct FamilyInstanceGF {
    TermTemplate unsigned_gf;
    TermTemplate signed_gf;

    const TermTemplate& get(bool signed_variant) const { return signed_variant ? signed_gf : unsigned_gf; }
};

FamilyInstanceGF family_templates(Family f);

}  // namespace qplab
