#pragma once

#include <optional>
#include <string>
#include <vector>

#include "izeta/graph.hpp"
#include "izeta/poly.hpp"

namespace izeta {

// One reduced rational function of s whose denominator is a product of
// primitive linear factors (nu + s N) with gcd(nu, N) = 1.
struct DenFactor {
    long long nu = 1;
    long long N = 1;
    int mult = 1;
    Rational pole() const { return Rational(-nu, N); }
};

struct RationalFunctionS {
    UnivariatePoly numerator;         // in s, exact rational coefficients
    std::vector<DenFactor> factors;   // sorted by pole value, fully reduced

    // Defined away from the poles.
    std::optional<Rational> eval(const Rational& s) const;
    std::string to_string() const;
    bool operator==(const RationalFunctionS& o) const;
};

struct Pole {
    Rational value;
    int order = 1;                         // 0 when produced by the characterization
    std::vector<std::string> provenance;   // components with -nu/N equal to the value
    std::vector<std::string> conditions;   // satisfied characterization conditions
};
using PoleList = std::vector<Pole>;

// The local topological zeta function of the graph: strata over the origin
// weighted by their Euler characteristics, each component contributing the
// factor 1/(nu + s N).
RationalFunctionS topological_zeta_local(const DualGraph& g);

// Exact poles of the reduced function, ascending; provenance is filled when
// the graph is supplied.
PoleList poles_of(const RationalFunctionS& z, const DualGraph* g = nullptr);

// The pole set predicted combinatorially: a value is a pole exactly when it
// is -1/N for a weak component over the origin, or -nu/N for an exceptional
// curve met by the generic curve, or -nu/N for an exceptional curve meeting
// at least three other components.
PoleList pole_characterization(const DualGraph& g);

bool same_pole_values(const PoleList& a, const PoleList& b);

}  // namespace izeta
