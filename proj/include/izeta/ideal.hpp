#pragma once

#include <string>
#include <vector>

#include "izeta/poly.hpp"

namespace izeta {

// An ideal in Q[x,y] given by generators. Zero generators are dropped at
// construction; at least one nonzero generator must remain, and every
// generator must vanish at the origin.
struct Ideal {
    std::vector<BivariatePoly> generators;

    static Ideal from_generators(std::vector<BivariatePoly> gens);
    static Ideal from_text(const std::string& comma_separated);

    std::string to_string() const;
};

// I = (h) * (f1', ..., fr') with h the gcd of the generators and the
// residual ideal finitely supported (or the unit ideal when some quotient
// is a nonzero constant).
struct SplitIdeal {
    BivariatePoly h;                      // normalized gcd
    std::vector<BivariatePoly> residual;  // generators / h
    bool residual_is_unit = false;
};

SplitIdeal split_principal_part(const Ideal& ideal);

}  // namespace izeta
