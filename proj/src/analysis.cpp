#include "seriesfair/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace seriesfair {

namespace {

constexpr double kScanStep = 1e-3;
constexpr double kExternalScanStep = 0.05;
constexpr double kExternalScanHi = 2.0;

double bisect(const RealPolynomial& poly, double a, double b, double fa, double tol) {
    // Invariant: poly(a) and poly(b) have opposite signs.
    while (b - a > tol * 0.5 && b - a > 1e-15) {
        const double m = 0.5 * (a + b);
        const double fm = poly(m);
        if (fm == 0.0) {
            return m;
        }
        if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double newton_polish(const RealPolynomial& poly, const RealPolynomial& deriv, double x,
                     double lo, double hi) {
    for (int i = 0; i < 4; ++i) {
        const double d = deriv(x);
        if (d == 0.0 || !std::isfinite(d)) {
            break;
        }
        const double next = x - poly(x) / d;
        if (!(next >= lo && next <= hi)) {
            break; // keep the bisection result rather than leave the bracket
        }
        x = next;
    }
    return x;
}

} // namespace

std::vector<double> isolate_roots(const RealPolynomial& poly, double lo, double hi, double tol) {
    if (!(lo < hi)) {
        throw std::domain_error("isolate_roots: require lo < hi");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("isolate_roots: require tol > 0");
    }
    for (double c : poly.coefficients()) {
        if (!std::isfinite(c)) {
            throw std::domain_error("isolate_roots: non-finite coefficient");
        }
    }
    if (poly.degree() < 1) {
        return {};
    }

    const RealPolynomial deriv = poly.derivative();
    const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / kScanStep)));
    const double h = (hi - lo) / n;

    std::vector<double> roots;
    double prev_x = lo;
    double prev_v = poly(lo);
    if (prev_v == 0.0) {
        roots.push_back(lo);
    }
    for (int i = 1; i <= n; ++i) {
        const double x = (i == n) ? hi : lo + i * h;
        const double v = poly(x);
        if (v == 0.0) {
            roots.push_back(x);
        } else if (prev_v != 0.0 && (prev_v < 0.0) != (v < 0.0)) {
            double root = bisect(poly, prev_x, x, prev_v, tol);
            root = newton_polish(poly, deriv, root, prev_x, x);
            roots.push_back(root);
        }
        prev_x = x;
        prev_v = v;
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> merged;
    for (double r : roots) {
        if (merged.empty() || r - merged.back() >= tol) {
            merged.push_back(r);
        }
    }
    return merged;
}

BivariatePolynomial difference_function(const SeriesFormat& longer, const SeriesFormat& shorter) {
    return series_win_polynomial(longer, Side::Advantaged) -
           series_win_polynomial(shorter, Side::Advantaged);
}

ComparisonReport extreme_value_analysis(const BivariatePolynomial& difference, double r_value,
                                        double threshold) {
    if (!std::isfinite(r_value) || r_value <= 0.0) {
        throw std::domain_error("extreme_value_analysis: r must be finite and positive");
    }
    ComparisonReport report;
    report.difference = difference;
    report.r_value = r_value;
    report.threshold = threshold;

    // Critical points: roots of d/dp inside [0,1].  The derivative of every
    // series difference vanishes at p = 0 with even multiplicity in the
    // difference itself, so deflate the p factor first — a plain sign scan
    // cannot see that root — and reinstate p = 0 afterwards.
    const BivariatePolynomial deriv = difference.derivative_p();
    if (!deriv.is_zero()) {
        BivariatePolynomial reduced = deriv;
        const int zeros_at_origin = reduced.min_degree_p();
        if (zeros_at_origin > 0) {
            reduced = reduced.divide_by_p(zeros_at_origin);
            report.critical_points.push_back(0.0);
        }
        const RealPolynomial fixed = reduced.fix_r(r_value);
        for (double root : isolate_roots(fixed, 0.0, 1.0, 1e-9)) {
            report.critical_points.push_back(root);
        }
        std::sort(report.critical_points.begin(), report.critical_points.end());
        std::vector<double> dedup;
        for (double c : report.critical_points) {
            if (dedup.empty() || c - dedup.back() >= 1e-9) {
                dedup.push_back(c);
            }
        }
        report.critical_points = std::move(dedup);

        // IVT-style remark: where does the derivative change sign past the
        // probability interval?
        const RealPolynomial deriv_fixed = difference.fix_r(r_value).derivative();
        const int cells = static_cast<int>(std::round((kExternalScanHi - 1.0) / kExternalScanStep));
        for (int i = 0; i < cells; ++i) {
            const double a = 1.0 + i * kExternalScanStep;
            const double b = 1.0 + (i + 1) * kExternalScanStep;
            if (deriv_fixed(a) * deriv_fixed(b) < 0.0) {
                report.external_root_brackets.push_back({a, b});
            }
        }
    }

    // Candidate list for the extreme values: endpoints plus interior critical
    // points.  Evaluation goes through the exact rational path.
    std::vector<double> candidates;
    candidates.push_back(0.0);
    for (double c : report.critical_points) {
        if (c > 0.0 && c < 1.0) {
            candidates.push_back(c);
        }
    }
    candidates.push_back(1.0);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (double p : candidates) {
        report.values.push_back({p, difference.evaluate(p, r_value)});
    }
    report.max_advantage = report.values.front().second;
    report.min_advantage = report.values.front().second;
    for (const auto& [p, v] : report.values) {
        report.max_advantage = std::max(report.max_advantage, v);
        report.min_advantage = std::min(report.min_advantage, v);
    }
    report.significant = report.max_advantage >= threshold;
    return report;
}

std::vector<double> interior_crossings(const BivariatePolynomial& difference, double r_value) {
    if (!std::isfinite(r_value) || r_value <= 0.0) {
        throw std::domain_error("interior_crossings: r must be finite and positive");
    }
    if (difference.is_zero()) {
        return {};
    }
    // Both series polynomials vanish at p = 0 and reach 1 at p = 1, so the
    // difference always carries structural roots there.  Remove them exactly
    // before scanning; what is left changes sign at genuine crossings only.
    BivariatePolynomial reduced = difference;
    const int zeros_at_origin = reduced.min_degree_p();
    if (zeros_at_origin > 0) {
        reduced = reduced.divide_by_p(zeros_at_origin);
    }
    while (true) {
        auto quotient = reduced.divide_by_p_minus_one();
        if (!quotient || quotient->is_zero()) {
            break;
        }
        reduced = *quotient;
    }
    std::vector<double> out;
    for (double root : isolate_roots(reduced.fix_r(r_value), 0.0, 1.0, 1e-9)) {
        if (root > 0.0 && root < 1.0) {
            out.push_back(root);
        }
    }
    return out;
}

std::optional<double> crossover_point(const BivariatePolynomial& difference, double r_value) {
    const std::vector<double> crossings = interior_crossings(difference, r_value);
    if (crossings.empty()) {
        return std::nullopt;
    }
    if (crossings.size() > 1) {
        throw std::runtime_error("crossover_point: " + std::to_string(crossings.size()) +
                                 " interior crossings; the single-crossover assumption fails");
    }
    return crossings.front();
}

ComparisonReport fairness_verdict(const SeriesFormat& longer, const SeriesFormat& shorter,
                                  double r_value, double threshold) {
    const BivariatePolynomial diff = difference_function(longer, shorter);
    ComparisonReport report = extreme_value_analysis(diff, r_value, threshold);
    report.crossover = crossover_point(diff, r_value);
    return report;
}

namespace {

std::string fmt_fixed(double v, int digits) {
    if (v == 0.0) {
        v = 0.0; // normalize -0.0
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

} // namespace

std::string to_text(const ComparisonReport& report) {
    std::string out;
    out += "difference: " + report.difference.str() + "\n";
    out += "r: " + fmt_fixed(report.r_value, 9) + "\n";
    out += "orientation: positive values favor the longer format\n";
    out += "critical points in [0,1]:";
    if (report.critical_points.empty()) {
        out += " none";
    } else {
        for (double c : report.critical_points) {
            out += " " + fmt_fixed(c, 9);
        }
    }
    out += "\n";
    out += "values at endpoints and critical points:\n";
    for (const auto& [p, v] : report.values) {
        out += "  p=" + fmt_fixed(p, 9) + " value=" + fmt_fixed(v, 9) + "\n";
    }
    out += "max advantage: " + fmt_fixed(report.max_advantage, 9) + "\n";
    out += "min advantage: " + fmt_fixed(report.min_advantage, 9) + "\n";
    out += "crossover in (0,1): ";
    out += report.crossover ? fmt_fixed(*report.crossover, 6) : "none";
    out += "\n";
    out += "external derivative sign-change brackets above p=1:";
    if (report.external_root_brackets.empty()) {
        out += " none";
    } else {
        for (std::size_t i = 0; i < report.external_root_brackets.size(); ++i) {
            const auto& [lo, hi] = report.external_root_brackets[i];
            out += (i == 0 ? " " : ", ");
            out += "(" + fmt_fixed(lo, 2) + ", " + fmt_fixed(hi, 2) + ")";
        }
    }
    out += "\n";
    out += "threshold: " + fmt_fixed(report.threshold, 9) + "\n";
    out += "verdict: ";
    out += report.significant ? "significant" : "NOT significant";
    out += "\n";
    return out;
}

} // namespace seriesfair
