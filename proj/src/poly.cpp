#include "izeta/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace izeta {

// ===========================================================================
// UnivariatePoly
// ===========================================================================

void UnivariatePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::variable() { return monomial(1, Rational(1)); }

UnivariatePoly UnivariatePoly::monomial(int k, Rational c) {
    UnivariatePoly p;
    if (c == 0) return p;
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    p.coeffs_.back() = std::move(c);
    return p;
}

const Rational& UnivariatePoly::leading() const {
    if (coeffs_.empty()) throw InternalError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational UnivariatePoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

UnivariatePoly UnivariatePoly::operator-() const {
    UnivariatePoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
    UnivariatePoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const { return *this + (-o); }

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    UnivariatePoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

UnivariatePoly UnivariatePoly::operator*(const Rational& c) const {
    if (c == 0) return {};
    UnivariatePoly r = *this;
    for (auto& a : r.coeffs_) a *= c;
    return r;
}

Rational UnivariatePoly::eval(const Rational& v) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    UnivariatePoly r;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(coeffs_[i] * Rational(static_cast<long long>(i)));
    r.trim();
    return r;
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& d) const {
    if (d.is_zero()) throw InternalError("division by zero polynomial");
    UnivariatePoly q, r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational c = r.leading() / d.leading();
        UnivariatePoly t = monomial(k, c);
        q = q + t;
        r = r - t * d;
    }
    return {q, r};
}

std::optional<UnivariatePoly> UnivariatePoly::divide_exact(const UnivariatePoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UnivariatePoly UnivariatePoly::normalized() const {
    if (is_zero()) return {};
    Int lcm_den(1), gcd_num(0);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        lcm_den = lcm_den / gcd_int(lcm_den, den(c)) * den(c);
        gcd_num = gcd_int(gcd_num, boost::multiprecision::abs(num(c)));
    }
    Rational scale(lcm_den, gcd_num);
    UnivariatePoly r = *this * scale;
    if (r.leading() < 0) r = -r;
    return r;
}

int UnivariatePoly::order_at_zero() const {
    if (is_zero()) throw InternalError("order of zero polynomial");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return 0;
}

UnivariatePoly UnivariatePoly::shift_down(int k) const {
    if (k == 0) return *this;
    if (is_zero()) return {};
    if (order_at_zero() < k) throw InternalError("shift_down not exact");
    UnivariatePoly r;
    r.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
    return r;
}

UnivariatePoly UnivariatePoly::translate(const Rational& t) const {
    // Horner: p(v + t)
    UnivariatePoly acc;
    UnivariatePoly shift = UnivariatePoly::variable() + UnivariatePoly(t);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * shift + UnivariatePoly(*it);
    return acc;
}

std::string UnivariatePoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? "-" : "+");
        }
        if (k == 0) {
            out << izeta::to_string(a);
        } else {
            if (a != 1) out << izeta::to_string(a) << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly p = a, q = b;
    while (!q.is_zero()) {
        auto [quot, rem] = p.divmod(q);
        (void)quot;
        p = q;
        q = rem;
    }
    return p.normalized();
}

UnivariatePoly squarefree_part(const UnivariatePoly& p) {
    if (p.is_zero()) throw InternalError("squarefree part of zero");
    if (p.degree() == 0) return UnivariatePoly(Rational(1));
    UnivariatePoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.normalized();
    auto q = p.divide_exact(g);
    if (!q) throw InternalError("squarefree_part: inexact division");
    return q->normalized();
}

namespace {

std::vector<Int> positive_divisors(Int n, std::size_t cap) {
    n = boost::multiprecision::abs(n);
    std::vector<std::pair<Int, int>> factors;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
        if (p > 2000000) break;  // defensive; divisor cap below guards correctness
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<Int> divs{Int(1)};
    for (auto& [p, e] : factors) {
        std::size_t sz = divs.size();
        Int pk(1);
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) {
                divs.push_back(divs[j] * pk);
                if (divs.size() > cap)
                    throw InternalError("rational root search: divisor bound exceeded");
            }
        }
    }
    return divs;
}

}  // namespace

RationalRoots rational_roots(const UnivariatePoly& p) {
    if (p.is_zero()) throw InternalError("rational_roots of zero polynomial");
    RationalRoots out;
    UnivariatePoly q = squarefree_part(p);
    int z = q.order_at_zero();
    if (z > 0) {
        out.roots.push_back(Rational(0));
        q = q.shift_down(z).normalized();
    }
    if (q.degree() >= 1) {
        // q now has integer coprime coefficients with nonzero constant term.
        Int a0 = num(q.coeff(0));
        Int ad = num(q.leading());
        auto ps = positive_divisors(a0, 4096);
        auto qs = positive_divisors(ad, 4096);
        std::vector<Rational> candidates;
        for (const Int& pp : ps)
            for (const Int& qq : qs) {
                Rational r(pp, qq);
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const Rational& r : candidates) {
            if (q.degree() < 1) break;
            if (q.eval(r) == 0) {
                out.roots.push_back(r);
                UnivariatePoly lin({-r, Rational(1)});
                auto d = q.divide_exact(lin);
                if (!d) throw InternalError("rational_roots: deflation failed");
                q = *d;
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.nonrational_cofactor = q.normalized();
    return out;
}

// ===========================================================================
// Generic fraction-free determinant (Bareiss). Works over any commutative
// ring with exact division; instantiated for Rational, UnivariatePoly and
// BivariatePoly to serve the plain and coefficient-lifted resultants.
// ===========================================================================

namespace {

template <typename T>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational sub(const Rational& a, const Rational& b) { return a - b; }
    static Rational div_exact(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingOps<UnivariatePoly> {
    static UnivariatePoly zero() { return {}; }
    static UnivariatePoly one() { return UnivariatePoly(Rational(1)); }
    static bool is_zero(const UnivariatePoly& a) { return a.is_zero(); }
    static UnivariatePoly mul(const UnivariatePoly& a, const UnivariatePoly& b) { return a * b; }
    static UnivariatePoly sub(const UnivariatePoly& a, const UnivariatePoly& b) { return a - b; }
    static UnivariatePoly div_exact(const UnivariatePoly& a, const UnivariatePoly& b) {
        auto q = a.divide_exact(b);
        if (!q) throw InternalError("Bareiss: inexact division");
        return *q;
    }
};

template <>
struct RingOps<BivariatePoly> {
    static BivariatePoly zero() { return {}; }
    static BivariatePoly one() { return BivariatePoly(Rational(1)); }
    static bool is_zero(const BivariatePoly& a) { return a.is_zero(); }
    static BivariatePoly mul(const BivariatePoly& a, const BivariatePoly& b) { return a * b; }
    static BivariatePoly sub(const BivariatePoly& a, const BivariatePoly& b) { return a - b; }
    static BivariatePoly div_exact(const BivariatePoly& a, const BivariatePoly& b) {
        auto q = a.divide_exact(b);
        if (!q) throw InternalError("Bareiss: inexact division");
        return *q;
    }
};

template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
    using R = RingOps<T>;
    const std::size_t n = m.size();
    if (n == 0) return R::one();
    bool negate = false;
    T prev = R::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (R::is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && R::is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return R::zero();
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T t = R::sub(R::mul(m[i][j], m[k][k]), R::mul(m[i][k], m[k][j]));
                m[i][j] = R::div_exact(t, prev);
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    if (negate) det = R::sub(R::zero(), det);
    return det;
}

// Sylvester matrix of (p, q) with q's rows first, so that the determinant
// equals lc(q)^deg(p) * prod p(roots of q). Coefficient lists ascending.
template <typename T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& p, const std::vector<T>& q) {
    using R = RingOps<T>;
    const int m = static_cast<int>(p.size()) - 1;  // deg p
    const int n = static_cast<int>(q.size()) - 1;  // deg q
    const int N = m + n;
    std::vector<std::vector<T>> s(static_cast<std::size_t>(N),
                                  std::vector<T>(static_cast<std::size_t>(N), R::zero()));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[r][r + j] = q[static_cast<std::size_t>(n - j)];
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[m + r][r + j] = p[static_cast<std::size_t>(m - j)];
    return s;
}

template <typename T>
T resultant_generic(std::vector<T> p, std::vector<T> q) {
    using R = RingOps<T>;
    auto trim = [](std::vector<T>& c) {
        while (!c.empty() && RingOps<T>::is_zero(c.back())) c.pop_back();
    };
    trim(p);
    trim(q);
    if (p.empty() && q.empty()) throw InternalError("resultant of two zero polynomials");
    if (p.empty() || q.empty()) return R::zero();
    const int m = static_cast<int>(p.size()) - 1;
    const int n = static_cast<int>(q.size()) - 1;
    if (m == 0 && n == 0) return R::one();
    if (n == 0) {
        // lc(q)^deg(p)
        T acc = R::one();
        for (int i = 0; i < m; ++i) acc = R::mul(acc, q[0]);
        return acc;
    }
    if (m == 0) {
        T acc = R::one();
        for (int i = 0; i < n; ++i) acc = R::mul(acc, p[0]);
        return acc;
    }
    return bareiss_determinant(sylvester(p, q));
}

}  // namespace

Rational resultant(const UnivariatePoly& p, const UnivariatePoly& q) {
    if (p.is_zero() && q.is_zero()) throw InputError("resultant of two zero polynomials");
    return resultant_generic<Rational>(p.coeffs(), q.coeffs());
}

UnivariatePoly resultant_lifted(const std::vector<UnivariatePoly>& p,
                                const std::vector<UnivariatePoly>& q) {
    return resultant_generic<UnivariatePoly>(p, q);
}

BivariatePoly resultant_bivariate_coeffs(const std::vector<BivariatePoly>& p,
                                         const std::vector<BivariatePoly>& q) {
    return resultant_generic<BivariatePoly>(p, q);
}

// ===========================================================================
// BivariatePoly
// ===========================================================================

BivariatePoly::BivariatePoly(Rational c) {
    if (c != 0) terms_[{0, 0}] = std::move(c);
}

BivariatePoly BivariatePoly::var_x() { return monomial(1, 0, Rational(1)); }
BivariatePoly BivariatePoly::var_y() { return monomial(0, 1, Rational(1)); }

BivariatePoly BivariatePoly::monomial(int a, int b, Rational c) {
    BivariatePoly p;
    if (c != 0) p.terms_[{a, b}] = std::move(c);
    return p;
}

bool BivariatePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Rational BivariatePoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw InternalError("constant_value of nonconstant polynomial");
    return terms_.begin()->second;
}

int BivariatePoly::degree_x() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x);
    return d;
}

int BivariatePoly::degree_y() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.y);
    return d;
}

int BivariatePoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.y);
    return d;
}

void BivariatePoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term({e1.x + e2.x, e1.y + e2.y}, c1 * c2);
    return r;
}

BivariatePoly BivariatePoly::operator*(const Rational& c) const {
    BivariatePoly r;
    if (c == 0) return r;
    for (const auto& [e, a] : terms_) r.terms_[e] = a * c;
    return r;
}

BivariatePoly BivariatePoly::pow(int e) const {
    BivariatePoly acc(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Rational BivariatePoly::eval(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < e.x; ++i) t *= x;
        for (int i = 0; i < e.y; ++i) t *= y;
        acc += t;
    }
    return acc;
}

BivariatePoly BivariatePoly::subst(const BivariatePoly& X, const BivariatePoly& Y) const {
    std::vector<BivariatePoly> xp{BivariatePoly(Rational(1))};
    std::vector<BivariatePoly> yp{BivariatePoly(Rational(1))};
    int dx = degree_x(), dy = degree_y();
    for (int i = 1; i <= dx; ++i) xp.push_back(xp.back() * X);
    for (int i = 1; i <= dy; ++i) yp.push_back(yp.back() * Y);
    BivariatePoly r;
    for (const auto& [e, c] : terms_)
        r = r + xp[static_cast<std::size_t>(e.x)] * yp[static_cast<std::size_t>(e.y)] * c;
    return r;
}

BivariatePoly BivariatePoly::derivative_x() const {
    BivariatePoly r;
    for (const auto& [e, c] : terms_)
        if (e.x > 0) r.add_term({e.x - 1, e.y}, c * Rational(e.x));
    return r;
}

BivariatePoly BivariatePoly::derivative_y() const {
    BivariatePoly r;
    for (const auto& [e, c] : terms_)
        if (e.y > 0) r.add_term({e.x, e.y - 1}, c * Rational(e.y));
    return r;
}

BivariatePoly BivariatePoly::swap_vars() const {
    BivariatePoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.y, e.x}] = c;
    return r;
}

int BivariatePoly::order_at_origin() const {
    if (is_zero()) throw InputError("order at origin of the zero polynomial is undefined");
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = e.x + e.y;
        if (d < 0 || t < d) d = t;
    }
    return d;
}

int BivariatePoly::order_x() const {
    if (is_zero()) return 0;
    int d = -1;
    for (const auto& [e, c] : terms_)
        if (d < 0 || e.x < d) d = e.x;
    return d;
}

int BivariatePoly::order_y() const {
    if (is_zero()) return 0;
    int d = -1;
    for (const auto& [e, c] : terms_)
        if (d < 0 || e.y < d) d = e.y;
    return d;
}

BivariatePoly BivariatePoly::shift_down_x(int k) const {
    if (k == 0) return *this;
    if (order_x() < k) throw InternalError("shift_down_x not exact");
    BivariatePoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.x - k, e.y}] = c;
    return r;
}

BivariatePoly BivariatePoly::shift_down_y(int k) const {
    if (k == 0) return *this;
    if (order_y() < k) throw InternalError("shift_down_y not exact");
    BivariatePoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.x, e.y - k}] = c;
    return r;
}

UnivariatePoly BivariatePoly::at_x_zero() const {
    std::vector<Rational> c;
    for (const auto& [e, a] : terms_) {
        if (e.x != 0) continue;
        if (static_cast<int>(c.size()) <= e.y) c.resize(static_cast<std::size_t>(e.y) + 1, Rational(0));
        c[static_cast<std::size_t>(e.y)] = a;
    }
    return UnivariatePoly(std::move(c));
}

UnivariatePoly BivariatePoly::at_y_zero() const {
    std::vector<Rational> c;
    for (const auto& [e, a] : terms_) {
        if (e.y != 0) continue;
        if (static_cast<int>(c.size()) <= e.x) c.resize(static_cast<std::size_t>(e.x) + 1, Rational(0));
        c[static_cast<std::size_t>(e.x)] = a;
    }
    return UnivariatePoly(std::move(c));
}

std::optional<BivariatePoly> BivariatePoly::divide_exact(const BivariatePoly& d) const {
    if (d.is_zero()) throw InternalError("division by zero polynomial");
    BivariatePoly q, r = *this;
    const auto dl = *d.terms_.rbegin();  // leading under canonical order
    while (!r.is_zero()) {
        const auto rl = *r.terms_.rbegin();
        if (rl.first.x < dl.first.x || rl.first.y < dl.first.y) return std::nullopt;
        Exponents e{rl.first.x - dl.first.x, rl.first.y - dl.first.y};
        Rational c = rl.second / dl.second;
        BivariatePoly t = monomial(e.x, e.y, c);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

std::pair<Rational, BivariatePoly> BivariatePoly::normal_form() const {
    if (is_zero()) return {Rational(1), BivariatePoly()};
    Int lcm_den(1), gcd_num(0);
    for (const auto& [e, c] : terms_) {
        lcm_den = lcm_den / gcd_int(lcm_den, den(c)) * den(c);
        gcd_num = gcd_int(gcd_num, boost::multiprecision::abs(num(c)));
    }
    Rational content(gcd_num, lcm_den);
    if (terms_.rbegin()->second < 0) content = -content;
    return {content, *this * (Rational(1) / content)};
}

BivariatePoly BivariatePoly::normalized() const { return normal_form().second; }

BivariatePoly BivariatePoly::from_univariate_x(const UnivariatePoly& p) {
    BivariatePoly r;
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) r.terms_[{k, 0}] = p.coeff(k);
    return r;
}

BivariatePoly BivariatePoly::from_univariate_y(const UnivariatePoly& p) {
    BivariatePoly r;
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) r.terms_[{0, k}] = p.coeff(k);
    return r;
}

std::optional<UnivariatePoly> BivariatePoly::to_univariate_x() const {
    if (degree_y() != 0) return std::nullopt;
    return at_y_zero();
}

std::optional<UnivariatePoly> BivariatePoly::to_univariate_y() const {
    if (degree_x() != 0) return std::nullopt;
    return at_x_zero();
}

std::string BivariatePoly::to_string() const {
    if (is_zero()) return "0";
    // Print by descending total degree, then descending x exponent.
    std::vector<std::pair<Exponents, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int ta = a.first.x + a.first.y, tb = b.first.x + b.first.y;
        if (ta != tb) return ta > tb;
        return a.first.x > b.first.x;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ts) {
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? "-" : "+");
        }
        bool has_var = e.x > 0 || e.y > 0;
        bool coeff_shown = !has_var || a != 1;
        if (coeff_shown) out << izeta::to_string(a);
        if (e.x > 0) {
            if (coeff_shown) out << "*";
            out << "x";
            if (e.x > 1) out << "^" << e.x;
        }
        if (e.y > 0) {
            if (coeff_shown || e.x > 0) out << "*";
            out << "y";
            if (e.y > 1) out << "^" << e.y;
        }
    }
    return out.str();
}

// ===========================================================================
// gcd and squarefree decomposition over Q[x,y]
// ===========================================================================

namespace {

// Coefficients of p as a polynomial in y, each a polynomial in x.
std::vector<BivariatePoly> y_coefficients(const BivariatePoly& p) {
    std::vector<BivariatePoly> c(static_cast<std::size_t>(p.degree_y()) + 1);
    for (const auto& [e, a] : p.terms())
        c[static_cast<std::size_t>(e.y)] =
            c[static_cast<std::size_t>(e.y)] + BivariatePoly::monomial(e.x, 0, a);
    return c;
}

BivariatePoly gcd_pure_x(const BivariatePoly& p, const BivariatePoly& q) {
    auto a = p.to_univariate_x();
    auto b = q.to_univariate_x();
    if (!a || !b) throw InternalError("gcd_pure_x on polynomial involving y");
    return BivariatePoly::from_univariate_x(gcd(*a, *b)).normalized();
}

// Content of p with respect to y: gcd over Q[x] of the y-coefficients.
BivariatePoly content_y(const BivariatePoly& p) {
    BivariatePoly c;
    for (const auto& part : y_coefficients(p)) {
        if (part.is_zero()) continue;
        c = c.is_zero() ? part.normalized() : gcd_pure_x(c, part);
        if (c.is_constant()) return BivariatePoly(Rational(1));
    }
    return c;
}

BivariatePoly leading_y_coeff(const BivariatePoly& p) {
    auto c = y_coefficients(p);
    return c.back();
}

// Pseudo-remainder of a by b with respect to y.
BivariatePoly prem_y(BivariatePoly a, const BivariatePoly& b) {
    const int db = b.degree_y();
    const BivariatePoly lb = leading_y_coeff(b);
    while (!a.is_zero() && a.degree_y() >= db) {
        const BivariatePoly la = leading_y_coeff(a);
        const int k = a.degree_y() - db;
        a = a * lb - b * la * BivariatePoly::monomial(0, k, Rational(1));
    }
    return a;
}

BivariatePoly primitive_y(const BivariatePoly& p) {
    if (p.is_zero()) return p;
    BivariatePoly c = content_y(p);
    auto q = p.divide_exact(c);
    if (!q) throw InternalError("primitive_y: content does not divide");
    return q->normalized();
}

}  // namespace

BivariatePoly gcd_bivariate(const BivariatePoly& p, const BivariatePoly& q) {
    if (p.is_zero() && q.is_zero()) throw InputError("gcd of two zero polynomials");
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();
    if (p.is_constant() || q.is_constant()) return BivariatePoly(Rational(1));
    if (p.degree_y() == 0 && q.degree_y() == 0) return gcd_pure_x(p, q);
    if (p.degree_y() == 0) return gcd_pure_x(p, content_y(q));
    if (q.degree_y() == 0) return gcd_pure_x(q, content_y(p));

    BivariatePoly cont = gcd_pure_x(content_y(p), content_y(q));
    BivariatePoly a = primitive_y(p), b = primitive_y(q);
    if (a.degree_y() < b.degree_y()) std::swap(a, b);
    // Primitive pseudo-remainder sequence.
    while (!b.is_zero()) {
        BivariatePoly r = prem_y(a, b);
        a = b;
        b = r.is_zero() ? r : primitive_y(r);
    }
    if (a.degree_y() == 0) a = BivariatePoly(Rational(1));
    return (cont * primitive_y(a)).normalized();
}

namespace {

// Yun's squarefree decomposition, parametrized by the derivative used.
// Valid as long as no irreducible factor of p is killed by the derivative.
std::vector<SquarefreeFactor> yun(const BivariatePoly& p,
                                  BivariatePoly (BivariatePoly::*deriv)() const) {
    std::vector<SquarefreeFactor> out;
    BivariatePoly dp = (p.*deriv)();
    BivariatePoly g = gcd_bivariate(p, dp);
    auto c0 = p.divide_exact(g);
    auto d0 = dp.divide_exact(g);
    if (!c0 || !d0) throw InternalError("yun: gcd does not divide");
    BivariatePoly c = *c0;
    BivariatePoly d = *d0 - (c.*deriv)();
    int i = 1;
    while (!c.is_constant()) {
        BivariatePoly a = gcd_bivariate(c, d);
        if (!a.is_constant()) out.push_back({a.normalized(), i});
        auto cn = c.divide_exact(a);
        if (!cn) throw InternalError("yun: factor does not divide");
        c = *cn;
        auto dn = d.divide_exact(a);
        if (!dn) throw InternalError("yun: derivative part does not divide");
        d = *dn - (c.*deriv)();
        ++i;
    }
    return out;
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(const BivariatePoly& p) {
    if (p.is_zero() || p.is_constant())
        throw InputError("squarefree decomposition requires a nonconstant polynomial");

    // Split off the part independent of x, so the x-derivative sees every
    // remaining irreducible factor; the pure-y content is handled by a
    // second Yun pass in y.
    BivariatePoly cont = content_y(p.swap_vars()).swap_vars();  // pure-y content
    auto ppart = p.divide_exact(cont);
    if (!ppart) throw InternalError("squarefree_decompose: content division failed");
    BivariatePoly pp = *ppart;

    std::map<int, BivariatePoly> merged;
    if (!cont.is_constant())
        for (auto& f : yun(cont, &BivariatePoly::derivative_y))
            merged[f.exponent] = merged.count(f.exponent)
                                     ? (merged[f.exponent] * f.factor).normalized()
                                     : f.factor;
    if (!pp.is_constant())
        for (auto& f : yun(pp, &BivariatePoly::derivative_x))
            merged[f.exponent] = merged.count(f.exponent)
                                     ? (merged[f.exponent] * f.factor).normalized()
                                     : f.factor;

    SquarefreeDecomposition out;
    BivariatePoly prod(Rational(1));
    for (auto& [e, f] : merged) {
        out.factors.push_back({f, e});
        prod = prod * f.pow(e);
    }
    auto u = p.divide_exact(prod);
    if (!u || !u->is_constant()) throw InternalError("squarefree_decompose: recomposition failed");
    out.unit = u->constant_value();
    return out;
}

}  // namespace izeta
