#include "izeta/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <set>
#include <sstream>

namespace izeta {

std::optional<Rational> RationalFunctionS::eval(const Rational& s) const {
    Rational den(1);
    for (const auto& f : factors) {
        Rational lin = Rational(f.nu) + s * Rational(f.N);
        if (lin == 0) return std::nullopt;
        for (int i = 0; i < f.mult; ++i) den *= lin;
    }
    return numerator.eval(s) / den;
}

std::string RationalFunctionS::to_string() const {
    std::ostringstream out;
    out << "(" << numerator.to_string("s") << ")";
    if (!factors.empty()) {
        out << " / (";
        bool first = true;
        for (const auto& f : factors) {
            if (!first) out << " ";
            first = false;
            out << "(" << f.nu << (f.N == 1 ? "+s" : "+" + std::to_string(f.N) + "*s") << ")";
            if (f.mult > 1) out << "^" << f.mult;
        }
        out << ")";
    }
    return out.str();
}

bool RationalFunctionS::operator==(const RationalFunctionS& o) const {
    if (!(numerator == o.numerator) || factors.size() != o.factors.size()) return false;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].nu != o.factors[i].nu || factors[i].N != o.factors[i].N ||
            factors[i].mult != o.factors[i].mult)
            return false;
    return true;
}

namespace {

struct FactorKey {
    long long nu, N;  // primitive: gcd = 1, nu > 0
    auto operator<=>(const FactorKey&) const = default;
};

// (nu + s N) = g * (nu' + s N') with primitive (nu', N'); returns the key and g.
std::pair<FactorKey, long long> primitive_factor(long long nu, long long N) {
    long long g = std::gcd(nu, N);
    return {{nu / g, N / g}, g};
}

struct Term {
    Rational coeff;
    std::vector<FactorKey> denom;  // with repetition
};

UnivariatePoly linear_poly(const FactorKey& f) {
    return UnivariatePoly(std::vector<Rational>{Rational(f.nu), Rational(f.N)});
}

RationalFunctionS assemble(const std::vector<Term>& terms) {
    std::map<FactorKey, int> max_mult;
    for (const auto& t : terms) {
        std::map<FactorKey, int> local;
        for (const auto& f : t.denom) local[f] += 1;
        for (const auto& [f, m] : local) max_mult[f] = std::max(max_mult[f], m);
    }
    UnivariatePoly num;
    for (const auto& t : terms) {
        std::map<FactorKey, int> local;
        for (const auto& f : t.denom) local[f] += 1;
        UnivariatePoly part(t.coeff);
        for (const auto& [f, m] : max_mult) {
            int deficit = m - (local.count(f) ? local[f] : 0);
            for (int i = 0; i < deficit; ++i) part = part * linear_poly(f);
        }
        num = num + part;
    }
    RationalFunctionS z;
    for (const auto& [f, m] : max_mult) {
        if (num.is_zero()) break;
        int mult = m;
        Rational root(-f.nu, f.N);
        while (mult > 0 && !num.is_zero() && num.eval(root) == 0) {
            auto q = num.divide_exact(linear_poly(f));
            if (!q) throw InternalError("zeta reduction: inexact cancellation");
            num = *q;
            --mult;
        }
        if (mult > 0) z.factors.push_back({f.nu, f.N, mult});
    }
    if (num.is_zero()) z.factors.clear();
    z.numerator = num;
    std::sort(z.factors.begin(), z.factors.end(), [](const DenFactor& a, const DenFactor& b) {
        return a.pole() < b.pole();
    });
    return z;
}

}  // namespace

RationalFunctionS topological_zeta_local(const DualGraph& g) {
    bool any_over = false;
    for (const auto& c : g.components) any_over = any_over || c.over_origin;
    if (!any_over) throw InputError("origin not in support: no component lies over the origin");

    bool exc_over = false;
    for (const auto& c : g.components)
        if (c.kind == ComponentKind::Exceptional && c.over_origin) exc_over = true;

    std::vector<Term> terms;
    for (const auto& c : g.components) {
        if (!c.over_origin) continue;
        auto [key, scale] = primitive_factor(c.nu, c.N);
        if (c.kind == ComponentKind::Exceptional) {
            long long chi = chi_open(g, c.id);
            if (chi != 0)
                terms.push_back({Rational(chi) / Rational(scale), {key}});
        } else if (!exc_over) {
            // With no exceptional curve the fiber over the origin is the
            // origin itself: an isolated point of this branch unless the
            // branch crosses another one there.
            if (g.edge_endpoint_count(c.id) == 0)
                terms.push_back({Rational(1) / Rational(scale), {key}});
        }
    }
    for (const auto& e : g.edges) {
        const Component &a = g.at(e.a), &b = g.at(e.b);
        if (!a.over_origin || !b.over_origin) continue;
        auto [ka, sa] = primitive_factor(a.nu, a.N);
        auto [kb, sb] = primitive_factor(b.nu, b.N);
        terms.push_back({Rational(1) / (Rational(sa) * Rational(sb)), {ka, kb}});
    }
    if (terms.empty()) throw InputError("origin not in support: empty local stratification");
    return assemble(terms);
}

PoleList poles_of(const RationalFunctionS& z, const DualGraph* g) {
    PoleList out;
    for (const auto& f : z.factors) {
        Pole p;
        p.value = f.pole();
        p.order = f.mult;
        if (g) {
            for (const auto& c : g->components)
                if (Rational(-c.nu, c.N) == p.value) p.provenance.push_back(c.id);
        }
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const Pole& a, const Pole& b) { return a.value < b.value; });
    return out;
}

PoleList pole_characterization(const DualGraph& gin) {
    DualGraph g = with_generic_counts(gin);
    std::map<Rational, Pole> found;
    auto add = [&](const Rational& v, const std::string& comp, const std::string& cond) {
        auto& p = found[v];
        p.value = v;
        p.order = 0;  // existence only; orders come from the reduced function
        if (std::find(p.provenance.begin(), p.provenance.end(), comp) == p.provenance.end())
            p.provenance.push_back(comp);
        if (std::find(p.conditions.begin(), p.conditions.end(), cond) == p.conditions.end())
            p.conditions.push_back(cond);
    };
    for (const auto& c : g.components) {
        if (!c.over_origin) continue;
        if (c.kind == ComponentKind::Weak) {
            add(Rational(-1, c.N), c.id, "weak-transform component");
        } else {
            if (c.n_generic && *c.n_generic > 0)
                add(Rational(-c.nu, c.N), c.id, "meets the generic curve");
            if (g.edge_endpoint_count(c.id) >= 3)
                add(Rational(-c.nu, c.N), c.id, "meets at least three components");
        }
    }
    PoleList out;
    for (auto& [v, p] : found) out.push_back(std::move(p));
    return out;  // std::map iterates ascending
}

bool same_pole_values(const PoleList& a, const PoleList& b) {
    std::set<Rational> sa, sb;
    for (const auto& p : a) sa.insert(p.value);
    for (const auto& p : b) sb.insert(p.value);
    return sa == sb;
}

}  // namespace izeta
