#include "crf/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crf {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = total_degree(a);
    unsigned db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

VariableList merge_variables(const VariableList& a, const VariableList& b) {
    VariableList out = a;
    for (const auto& name : b)
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    return out;
}

Polynomial::Polynomial(VariableList variables) : variables_(std::move(variables)) {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        for (std::size_t j = i + 1; j < variables_.size(); ++j)
            if (variables_[i] == variables_[j])
                throw MathError(ErrorCode::InvalidArgument, "duplicate variable '" + variables_[i] + "'");
}

Polynomial Polynomial::constant(const Rational& c, VariableList variables) {
    Polynomial p(std::move(variables));
    p.add_term(Monomial(p.variables_.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(const std::string& name, VariableList variables) {
    if (std::find(variables.begin(), variables.end(), name) == variables.end()) variables.push_back(name);
    Polynomial p(std::move(variables));
    Monomial m(p.variables_.size(), 0);
    m[*p.index_of(name)] = 1;
    p.add_term(m, Rational(1));
    return p;
}

Polynomial Polynomial::from_terms(VariableList variables,
                                  const std::vector<std::pair<Monomial, Rational>>& terms) {
    Polynomial p(std::move(variables));
    for (const auto& [m, c] : terms) {
        if (m.size() != p.variables_.size())
            throw MathError(ErrorCode::InvalidArgument, "monomial length does not match variable count");
        p.add_term(m, c);
    }
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && crf::total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
    if (terms_.empty()) return Rational(0);
    const auto& [m, c] = *terms_.begin();
    return crf::total_degree(m) == 0 ? c : Rational(0);
}

unsigned Polynomial::total_degree() const {
    if (terms_.empty()) return 0;
    return crf::total_degree(terms_.rbegin()->first);
}

std::optional<std::size_t> Polynomial::index_of(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables_.begin());
}

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

unsigned Polynomial::degree_in(const std::string& name) const {
    auto idx = index_of(name);
    return idx ? degree_in(*idx) : 0;
}

unsigned Polynomial::order_in(std::size_t var) const {
    if (terms_.empty()) return 0;
    unsigned d = terms_.begin()->first[var];
    for (const auto& [m, c] : terms_) d = std::min(d, m[var]);
    return d;
}

VariableList Polynomial::used_variables() const {
    VariableList out;
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (uses(i)) out.push_back(variables_[i]);
    return out;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw MathError(ErrorCode::InvalidArgument, "zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw MathError(ErrorCode::InvalidArgument, "zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

Polynomial Polynomial::with_variables(const VariableList& target) const {
    if (target == variables_) return *this;
    std::vector<std::size_t> position(variables_.size(), target.size());
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        auto it = std::find(target.begin(), target.end(), variables_[i]);
        if (it != target.end()) {
            position[i] = static_cast<std::size_t>(it - target.begin());
        } else if (uses(i)) {
            throw MathError(ErrorCode::InvalidArgument,
                            "variable '" + variables_[i] + "' missing from target variable list");
        }
    }
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        Monomial moved(target.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) moved[position[i]] = m[i];
        out.add_term(moved, c);
    }
    return out;
}

std::map<unsigned, Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    std::map<unsigned, Polynomial> out;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        unsigned k = rest[var];
        rest[var] = 0;
        auto [it, inserted] = out.try_emplace(k, Polynomial(variables_));
        it->second.add_term(rest, c);
    }
    return out;
}

std::pair<Polynomial, Polynomial> align(const Polynomial& a, const Polynomial& b) {
    if (a.variables() == b.variables()) return {a, b};
    VariableList merged = merge_variables(a.variables(), b.variables());
    return {a.with_variables(merged), b.with_variables(merged)};
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.variables_ != variables_) {
        auto [a, b] = align(*this, rhs);
        *this = std::move(a);
        for (const auto& [m, c] : b.terms_) add_term(m, c);
        return *this;
    }
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    auto [a, b] = align(lhs, rhs);
    Polynomial out(a.variables_);
    const std::size_t n = a.variables_.size();
    Monomial m(n);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = Polynomial::constant(Rational(1), variables_);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.variables_ == rhs.variables_) return lhs.terms_ == rhs.terms_;
    if (lhs.terms_.size() != rhs.terms_.size()) return false;
    auto [a, b] = align(lhs, rhs);
    return a.terms_ == b.terms_;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& assignment) const {
    std::vector<Polynomial> images;
    images.reserve(variables_.size());
    VariableList out_vars;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        auto it = assignment.find(variables_[i]);
        images.push_back(it != assignment.end() ? it->second
                                                : Polynomial::variable(variables_[i], {variables_[i]}));
        if (uses(i)) out_vars = merge_variables(out_vars, images.back().variables());
    }
    // Images of unused variables never enter the result.
    for (std::size_t i = 0; i < variables_.size(); ++i)
        images[i] = uses(i) ? images[i].with_variables(out_vars) : Polynomial(out_vars);
    return evaluate_with<Polynomial>(std::span<const Polynomial>(images), [&](const Rational& c) {
        return Polynomial::constant(c, out_vars);
    });
}

Polynomial Polynomial::set_variable(std::size_t var, const Rational& value) const {
    Polynomial out(variables_);
    std::vector<Rational> powers{Rational(1)};
    for (const auto& [m, c] : terms_) {
        while (powers.size() <= m[var]) powers.push_back(powers.back() * value);
        Monomial rest = m;
        rest[var] = 0;
        out.add_term(rest, c * powers[m[var]]);
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    return evaluate_with<Rational>(point, [](const Rational& c) { return c; });
}

double Polynomial::evaluate(std::span<const double> point) const {
    return evaluate_with<double>(point, [](const Rational& c) { return c.to_double(); });
}

PadicNumber Polynomial::evaluate(std::span<const PadicNumber> point, long prime, int precision) const {
    for (const auto& x : point)
        if (x.prime() != prime)
            throw MathError(ErrorCode::PrimeMismatch, "evaluation point is not over Q_" + std::to_string(prime));
    return evaluate_with<PadicNumber>(point, [&](const Rational& c) {
        return PadicNumber::from_rational(c, prime, precision);
    });
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational magnitude = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = crf::total_degree(m) == 0;
        bool need_star = false;
        if (constant || magnitude != Rational(1)) {
            os << magnitude.to_string();
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            os << variables_[i];
            if (m[i] > 1) os << "^" << m[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
    switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    }
    throw MathError(ErrorCode::InvalidArgument, "unknown polynomial op");
}

Rational primitive_scale(const Polynomial& p) {
    if (p.is_zero()) throw MathError(ErrorCode::InvalidArgument, "zero polynomial has no content");
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    Rational scale(num_gcd, den_lcm);
    return p.leading_coefficient().sign() < 0 ? -scale : scale;
}

Polynomial normalize_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * primitive_scale(p).inverse();
}

namespace {

bool divides(const Monomial& divisor, const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (divisor[i] > m[i]) return false;
    return true;
}

} // namespace

std::optional<Polynomial> divide_exact(const Polynomial& lhs, const Polynomial& rhs) {
    if (rhs.is_zero()) throw MathError(ErrorCode::DivisionByZero, "polynomial division by zero");
    auto [a, b] = align(lhs, rhs);
    const std::size_t n = a.variables().size();
    Polynomial quotient(a.variables());
    Polynomial rest = a;
    const Monomial& lead_b = b.leading_monomial();
    const Rational& lead_cb = b.leading_coefficient();
    while (!rest.is_zero()) {
        const Monomial& lead_r = rest.leading_monomial();
        if (!divides(lead_b, lead_r)) return std::nullopt;
        Monomial step(n);
        for (std::size_t i = 0; i < n; ++i) step[i] = lead_r[i] - lead_b[i];
        Polynomial term = Polynomial::from_terms(a.variables(), {{step, rest.leading_coefficient() / lead_cb}});
        quotient += term;
        rest -= term * b;
    }
    return quotient;
}

namespace {

Polynomial one_like(const Polynomial& p) { return Polynomial::constant(Rational(1), p.variables()); }

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw MathError(ErrorCode::InvalidArgument, "internal: expected exact division");
    return *q;
}

std::optional<std::size_t> main_variable(const Polynomial& a, const Polynomial& b) {
    for (std::size_t i = a.variables().size(); i-- > 0;)
        if (a.uses(i) || b.uses(i)) return i;
    return std::nullopt;
}

Polynomial monomial_gcd(const Polynomial& mono, const Polynomial& other) {
    Monomial m = mono.leading_monomial();
    for (const auto& [mo, c] : other.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], mo[i]);
    return Polynomial::from_terms(mono.variables(), {{m, Rational(1)}});
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial g(p.variables());
    for (const auto& [k, c] : p.coefficients_in(var)) {
        g = g.is_zero() ? c : gcd_recursive(g, c);
        if (g.is_constant()) return one_like(p);
    }
    return normalize_primitive(g);
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
    return normalize_primitive(exact_quotient(p, content_in(p, var)));
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var) {
    return p.coefficients_in(var).rbegin()->second;
}

// Pseudo-remainder of a by b in `var`, up to a factor lc(b)^k.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
    const unsigned db = b.degree_in(var);
    const Polynomial lead_b = leading_coefficient_in(b, var);
    Polynomial rest = a;
    while (!rest.is_zero() && rest.degree_in(var) >= db) {
        const unsigned dr = rest.degree_in(var);
        Polynomial lead_r = leading_coefficient_in(rest, var);
        Monomial shift(a.variables().size(), 0);
        shift[var] = dr - db;
        Polynomial x_shift = Polynomial::from_terms(a.variables(), {{shift, Rational(1)}});
        rest = lead_b * rest - lead_r * x_shift * b;
    }
    return rest;
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (a.is_constant() || b.is_constant()) return one_like(a);
    if (a.is_monomial()) return monomial_gcd(a, b);
    if (b.is_monomial()) return monomial_gcd(b, a);

    const std::size_t var = *main_variable(a, b);
    if (!a.uses(var)) return gcd_recursive(a, content_in(b, var));
    if (!b.uses(var)) return gcd_recursive(content_in(a, var), b);

    Polynomial ca = content_in(a, var);
    Polynomial cb = content_in(b, var);
    Polynomial content_gcd = gcd_recursive(ca, cb);
    Polynomial pa = normalize_primitive(exact_quotient(a, ca));
    Polynomial pb = normalize_primitive(exact_quotient(b, cb));
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

    // Primitive PRS: replace each pseudo-remainder by its primitive part.
    while (true) {
        Polynomial r = pseudo_remainder(pa, pb, var);
        if (r.is_zero()) break;
        if (!r.uses(var)) return content_gcd;
        pa = std::move(pb);
        pb = primitive_part_in(r, var);
    }
    return normalize_primitive(content_gcd * pb);
}

} // namespace

Polynomial poly_gcd(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() && rhs.is_zero())
        throw MathError(ErrorCode::InvalidArgument, "gcd(0, 0) is undefined");
    auto [a, b] = align(lhs, rhs);
    return normalize_primitive(gcd_recursive(a, b));
}

Polynomial homogenize(const Polynomial& g, const std::string& x1, const std::string& x2) {
    VariableList used = g.used_variables();
    if (used.size() > 1) throw MathError(ErrorCode::InvalidArgument, "homogenize expects a univariate polynomial");
    const unsigned d = g.total_degree();
    if (d < 2) throw MathError(ErrorCode::InvalidArgument, "homogenize expects degree > 1");
    if (g.leading_coefficient() != Rational(1))
        throw MathError(ErrorCode::InvalidArgument, "homogenize expects a monic polynomial");
    if (x1 == x2) throw MathError(ErrorCode::InvalidArgument, "homogenize needs two distinct variables");
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& [m, c] : g.terms()) {
        unsigned k = crf::total_degree(m);
        terms.push_back({Monomial{k, d - k}, c});
    }
    return Polynomial::from_terms({x1, x2}, terms);
}

} // namespace crf
