#include "seriesfair/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seriesfair {

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) {
        coeffs_.pop_back();
    }
}

double RealPolynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RealPolynomial RealPolynomial::derivative() const {
    if (coeffs_.size() <= 1) {
        return RealPolynomial{};
    }
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = static_cast<double>(i) * coeffs_[i];
    }
    return RealPolynomial(std::move(d));
}

void BivariatePolynomial::set(int deg_p, int deg_r, const Rational& c) {
    Key k{deg_p, deg_r};
    if (c.is_zero()) {
        terms_.erase(k);
    } else {
        terms_[k] = c;
    }
}

BivariatePolynomial BivariatePolynomial::constant(const Rational& c) {
    BivariatePolynomial q;
    q.set(0, 0, c);
    return q;
}

BivariatePolynomial BivariatePolynomial::var_p() {
    BivariatePolynomial q;
    q.set(1, 0, Rational(1));
    return q;
}

BivariatePolynomial BivariatePolynomial::var_r() {
    BivariatePolynomial q;
    q.set(0, 1, Rational(1));
    return q;
}

BivariatePolynomial BivariatePolynomial::monomial(const Rational& c, int deg_p, int deg_r) {
    if (deg_p < 0 || deg_r < 0) {
        throw std::domain_error("BivariatePolynomial::monomial: negative degree");
    }
    BivariatePolynomial q;
    q.set(deg_p, deg_r, c);
    return q;
}

int BivariatePolynomial::degree_p() const {
    int d = -1;
    for (const auto& [key, coeff] : terms_) {
        d = std::max(d, key.first);
    }
    return d;
}

int BivariatePolynomial::min_degree_p() const {
    if (terms_.empty()) {
        return 0;
    }
    int d = terms_.begin()->first.first;
    for (const auto& [key, coeff] : terms_) {
        d = std::min(d, key.first);
    }
    return d;
}

Rational BivariatePolynomial::coefficient(int deg_p, int deg_r) const {
    auto it = terms_.find(Key{deg_p, deg_r});
    return it == terms_.end() ? Rational(0) : it->second;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [key, coeff] : o.terms_) {
        set(key.first, key.second, coefficient(key.first, key.second) + coeff);
    }
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    for (const auto& [key, coeff] : o.terms_) {
        set(key.first, key.second, coefficient(key.first, key.second) - coeff);
    }
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& o) {
    BivariatePolynomial out;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            int dp = ka.first + kb.first;
            int dr = ka.second + kb.second;
            out.set(dp, dr, out.coefficient(dp, dr) + ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

BivariatePolynomial BivariatePolynomial::derivative_p() const {
    BivariatePolynomial out;
    for (const auto& [key, coeff] : terms_) {
        if (key.first == 0) {
            continue;
        }
        out.set(key.first - 1, key.second, coeff * Rational(key.first));
    }
    return out;
}

RealPolynomial BivariatePolynomial::fix_r(double r) const {
    if (!std::isfinite(r) || r <= 0.0) {
        throw std::domain_error("BivariatePolynomial::fix_r: r must be finite and positive");
    }
    const Rational rr = Rational::from_double(r);
    const int dp = degree_p();
    if (dp < 0) {
        return RealPolynomial{};
    }
    // Collect each p-degree's coefficient (a polynomial in r), evaluate it
    // exactly at rr, then round once.
    std::vector<Rational> exact(static_cast<std::size_t>(dp) + 1, Rational(0));
    for (const auto& [key, coeff] : terms_) {
        Rational rpow(1);
        for (int i = 0; i < key.second; ++i) {
            rpow *= rr;
        }
        exact[static_cast<std::size_t>(key.first)] += coeff * rpow;
    }
    std::vector<double> out(exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
        out[i] = exact[i].to_double();
    }
    return RealPolynomial(std::move(out));
}

Rational BivariatePolynomial::evaluate_exact(const Rational& p, const Rational& r) const {
    Rational acc(0);
    for (const auto& [key, coeff] : terms_) {
        Rational term = coeff;
        for (int i = 0; i < key.first; ++i) {
            term *= p;
        }
        for (int i = 0; i < key.second; ++i) {
            term *= r;
        }
        acc += term;
    }
    return acc;
}

double BivariatePolynomial::evaluate(double p, double r) const {
    return evaluate_exact(Rational::from_double(p), Rational::from_double(r)).to_double();
}

BivariatePolynomial BivariatePolynomial::divide_by_p(int k) const {
    if (k < 0) {
        throw std::domain_error("BivariatePolynomial::divide_by_p: negative power");
    }
    BivariatePolynomial out;
    for (const auto& [key, coeff] : terms_) {
        if (key.first < k) {
            throw std::domain_error("BivariatePolynomial::divide_by_p: polynomial not divisible by p^" +
                                    std::to_string(k));
        }
        out.set(key.first - k, key.second, coeff);
    }
    return out;
}

std::optional<BivariatePolynomial> BivariatePolynomial::divide_by_p_minus_one() const {
    const int dp = degree_p();
    if (dp < 0) {
        return BivariatePolynomial{}; // 0 = (p-1) * 0
    }
    // Synthetic division at p = 1, coefficients living in Q[r].  Each
    // p-coefficient is a map deg_r -> Rational.
    using RCoeff = std::map<int, Rational>;
    std::vector<RCoeff> a(static_cast<std::size_t>(dp) + 1);
    for (const auto& [key, coeff] : terms_) {
        a[static_cast<std::size_t>(key.first)][key.second] = coeff;
    }
    auto add_into = [](RCoeff& dst, const RCoeff& src) {
        for (const auto& [dr, c] : src) {
            auto [it, inserted] = dst.emplace(dr, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) {
                    dst.erase(it);
                }
            }
        }
    };
    std::vector<RCoeff> b(static_cast<std::size_t>(dp)); // quotient coefficients
    RCoeff carry = a[static_cast<std::size_t>(dp)];
    for (int i = dp - 1; i >= 0; --i) {
        b[static_cast<std::size_t>(i)] = carry;
        add_into(carry, a[static_cast<std::size_t>(i)]);
    }
    // After the loop, carry holds the remainder (the value at p = 1).
    if (!carry.empty()) {
        return std::nullopt;
    }
    BivariatePolynomial out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (const auto& [dr, c] : b[i]) {
            out.set(static_cast<int>(i), dr, c);
        }
    }
    return out;
}

namespace {

std::string power_text(const char* var, int k) {
    if (k == 0) {
        return "";
    }
    if (k == 1) {
        return var;
    }
    return std::string(var) + "^" + std::to_string(k);
}

// |c| r^dr p^dp with the conventional omissions (no "1" coefficient in front
// of a variable part, parentheses around non-integer rationals).
std::string monomial_text(const Rational& c_abs, int deg_r, int deg_p) {
    const bool has_var = deg_r > 0 || deg_p > 0;
    std::string out;
    if (!has_var || c_abs != Rational(1)) {
        if (!c_abs.is_integer() && has_var) {
            out += "(" + c_abs.str() + ")";
        } else {
            out += c_abs.str();
        }
    }
    out += power_text("r", deg_r);
    out += power_text("p", deg_p);
    return out;
}

struct DisplayTerm {
    int sign; // +1 or -1
    std::string body;
};

} // namespace

std::string BivariatePolynomial::str() const {
    if (terms_.empty()) {
        return "0";
    }
    // Group by p-degree; remember r-terms in descending r-degree.
    std::map<int, std::vector<std::pair<int, Rational>>, std::greater<int>> groups;
    for (const auto& [key, coeff] : terms_) {
        groups[key.first].push_back({key.second, coeff});
    }
    std::vector<DisplayTerm> parts;
    for (auto& [deg_p, rterms] : groups) {
        std::sort(rterms.begin(), rterms.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        if (rterms.size() == 1) {
            const auto& [deg_r, c] = rterms.front();
            Rational mag = c.sign() < 0 ? -c : c;
            parts.push_back({c.sign(), monomial_text(mag, deg_r, deg_p)});
            continue;
        }
        if (deg_p == 0) {
            // A multi-term pure-r coefficient at p^0 reads naturally as plain
            // top-level terms; parentheses would be noise.
            for (const auto& [deg_r, c] : rterms) {
                Rational mag = c.sign() < 0 ? -c : c;
                parts.push_back({c.sign(), monomial_text(mag, deg_r, 0)});
            }
            continue;
        }
        bool all_neg = true;
        bool all_pos = true;
        for (const auto& [deg_r, c] : rterms) {
            (c.sign() < 0 ? all_pos : all_neg) = false;
        }
        std::string inner;
        if (all_pos || all_neg) {
            for (std::size_t i = 0; i < rterms.size(); ++i) {
                const auto& [deg_r, c] = rterms[i];
                Rational mag = c.sign() < 0 ? -c : c;
                if (i > 0) {
                    inner += "+";
                }
                inner += monomial_text(mag, deg_r, 0);
            }
            parts.push_back({all_neg ? -1 : 1, "(" + inner + ")" + power_text("p", deg_p)});
        } else {
            for (std::size_t i = 0; i < rterms.size(); ++i) {
                const auto& [deg_r, c] = rterms[i];
                Rational mag = c.sign() < 0 ? -c : c;
                if (i > 0) {
                    inner += (c.sign() < 0 ? "-" : "+");
                } else if (c.sign() < 0) {
                    inner += "-";
                }
                inner += monomial_text(mag, deg_r, 0);
            }
            parts.push_back({1, "(" + inner + ")" + power_text("p", deg_p)});
        }
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0) {
            if (parts[i].sign < 0) {
                out += "-";
            }
        } else {
            out += (parts[i].sign < 0 ? "-" : "+");
        }
        out += parts[i].body;
    }
    return out;
}

} // namespace seriesfair
