#pragma once

namespace adele {

/// Global sign constants of the residue and product formulas.
///
///   nu:           the weight-1 residue of a one-cochain is nu * valuation and
///                 the weight-2 residue is the tame symbol raised to -nu
///   intersection: the intersection number is this sign times the sum of the
///                 flag residues
///   massey:       the Massey direct image equals the idelic pairing to this power
struct SignConventions {
    int nu = -1;
    int intersection = -1;
    int massey = -1;

    bool operator==(const SignConventions&) const = default;
};

inline constexpr SignConventions kSignConventions{};

}  // namespace adele
