#include "izeta/ideal.hpp"

#include <sstream>

namespace izeta {

Ideal Ideal::from_generators(std::vector<BivariatePoly> gens) {
    Ideal ideal;
    for (auto& g : gens)
        if (!g.is_zero()) ideal.generators.push_back(std::move(g));
    if (ideal.generators.empty()) throw InputError("ideal has no nonzero generator");
    for (const auto& g : ideal.generators)
        if (g.eval(Rational(0), Rational(0)) != 0)
            throw InputError("ideal does not vanish at the origin: generator " + g.to_string());
    return ideal;
}

Ideal Ideal::from_text(const std::string& comma_separated) {
    std::vector<BivariatePoly> gens;
    std::string current;
    std::istringstream in(comma_separated);
    while (std::getline(in, current, ',')) gens.push_back(parse_polynomial(current));
    if (gens.empty()) throw InputError("empty ideal text");
    return from_generators(std::move(gens));
}

std::string Ideal::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ", ";
        out += generators[i].to_string();
    }
    return out;
}

SplitIdeal split_principal_part(const Ideal& ideal) {
    SplitIdeal out;
    BivariatePoly h = ideal.generators.front().normalized();
    for (std::size_t i = 1; i < ideal.generators.size() && !h.is_constant(); ++i)
        h = gcd_bivariate(h, ideal.generators[i]);
    if (h.is_constant()) h = BivariatePoly(Rational(1));
    out.h = h;
    for (const auto& g : ideal.generators) {
        auto q = g.divide_exact(h);
        if (!q) throw InternalError("gcd does not divide a generator");
        out.residual.push_back(*q);
        if (q->is_constant()) out.residual_is_unit = true;
    }
    return out;
}

}  // namespace izeta
