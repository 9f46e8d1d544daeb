#include "strofa/stats.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <vector>

namespace strofa {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-15;
    constexpr double kFpMin = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
        b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_two_tailed(double t, int df) {
    if (df < 1) throw DegenerateInputError("t-distribution needs at least 1 degree of freedom");
    if (std::isinf(t)) return 0.0;
    const double v = static_cast<double>(df);
    return regularized_incomplete_beta(v / 2.0, 0.5, v / (v + t * t));
}

Correlation pearson_r(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DegenerateInputError("input lengths differ");
    const std::size_t n = x.size();
    if (n < 3) throw DegenerateInputError("need at least 3 points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw DegenerateInputError("zero variance input to correlation");

    Correlation out;
    out.r = sxy / std::sqrt(sxx * syy);
    if (out.r > 1.0) out.r = 1.0;
    if (out.r < -1.0) out.r = -1.0;

    const double df = static_cast<double>(n - 2);
    const double denom = 1.0 - out.r * out.r;
    if (denom <= 0.0) {
        out.p = 0.0;
    } else {
        const double t = out.r * std::sqrt(df / denom);
        out.p = student_t_two_tailed(t, static_cast<int>(n) - 2);
    }
    return out;
}

double cohen_kappa(std::span<const std::string> a, std::span<const std::string> b) {
    if (a.size() != b.size()) throw DegenerateInputError("input lengths differ");
    if (a.empty()) throw DegenerateInputError("empty input to kappa");
    const double n = static_cast<double>(a.size());

    std::map<std::string, double> ma, mb;
    double agree = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma[a[i]] += 1.0;
        mb[b[i]] += 1.0;
        if (a[i] == b[i]) agree += 1.0;
    }
    const double po = agree / n;
    double pe = 0.0;
    for (const auto& [label, ca] : ma) {
        auto it = mb.find(label);
        if (it != mb.end()) pe += (ca / n) * (it->second / n);
    }
    if (pe >= 1.0) return po >= 1.0 ? 1.0 : 0.0;
    return (po - pe) / (1.0 - pe);
}

}  // namespace strofa
