#include "fibercalc/polyroots.hpp"

#include <algorithm>
#include <cmath>

#include "fibercalc/errors.hpp"

namespace fibercalc {

cxd CPoly::eval(cxd x) const {
    cxd v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

CPoly CPoly::derivative() const {
    CPoly d;
    for (size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * cxd(static_cast<double>(k), 0));
    return d;
}

void CPoly::trim(double rel_tol) {
    double mx = 0;
    for (const auto& v : c) mx = std::max(mx, std::abs(v));
    if (mx == 0) {
        c.assign(1, cxd(0));
        return;
    }
    while (c.size() > 1 && std::abs(c.back()) < rel_tol * mx) c.pop_back();
}

std::vector<cxd> roots(const CPoly& p0) {
    CPoly p = p0;
    p.trim();
    const int n = p.degree();
    if (n <= 0) return {};
    std::vector<cxd> a(p.c.begin(), p.c.end());
    const cxd lead = a.back();
    for (auto& v : a) v /= lead;

    double r = 0;
    for (int k = 0; k < n; ++k) r = std::max(r, std::abs(a[k]));
    r = 1.0 + r;

    std::vector<cxd> z(n);
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * M_PI * i / n + 0.42;
        z[i] = 0.5 * r * cxd(std::cos(th), std::sin(th));
    }
    CPoly mon;
    mon.c = a;
    const CPoly dmon = mon.derivative();

    for (int iter = 0; iter < 400; ++iter) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            const cxd num = mon.eval(z[i]);
            cxd den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            if (std::abs(den) < 1e-300) den = 1e-300;
            const cxd dz = num / den;
            z[i] -= dz;
            moved = std::max(moved, std::abs(dz));
        }
        if (moved < 1e-14 * (1 + r)) break;
    }
    for (int i = 0; i < n; ++i) {
        for (int it = 0; it < 8; ++it) {
            const cxd d = dmon.eval(z[i]);
            if (std::abs(d) < 1e-300) break;
            const cxd step = mon.eval(z[i]) / d;
            z[i] -= step;
            if (std::abs(step) < 1e-15 * (1 + std::abs(z[i]))) break;
        }
    }
    std::sort(z.begin(), z.end(), [](cxd a_, cxd b_) {
        if (std::abs(a_.real() - b_.real()) > 1e-12) return a_.real() < b_.real();
        return a_.imag() < b_.imag();
    });
    return z;
}

cxd sylvester_det(const CPoly& p, const CPoly& q) {
    const int n = p.degree(), m = q.degree();
    if (n < 0 || m < 0) throw ComputationError("sylvester_det: zero polynomial");
    const int N = n + m;
    std::vector<std::vector<cxd>> s(N, std::vector<cxd>(N, cxd(0)));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s[i][i + (n - k)] = p.c[k];
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[m + i][i + (m - k)] = q.c[k];
    cxd det = 1;
    for (int c = 0; c < N; ++c) {
        int piv = -1;
        double best = 0;
        for (int r = c; r < N; ++r)
            if (std::abs(s[r][c]) > best) {
                best = std::abs(s[r][c]);
                piv = r;
            }
        if (piv < 0 || best == 0) return 0;
        if (piv != c) {
            std::swap(s[piv], s[c]);
            det = -det;
        }
        det *= s[c][c];
        for (int r = c + 1; r < N; ++r) {
            const cxd f = s[r][c] / s[c][c];
            if (f == cxd(0)) continue;
            for (int k = c; k < N; ++k) s[r][k] -= f * s[c][k];
        }
    }
    return det;
}

CPoly resultant_in_t(const std::function<CPoly(cxd)>& p_of_t,
                     const std::function<CPoly(cxd)>& q_of_t, int degree_bound,
                     double sample_radius) {
    const int N = degree_bound + 1;
    std::vector<cxd> vals(N);
    for (int k = 0; k < N; ++k) {
        const double th = 2.0 * M_PI * k / N;
        const cxd t = sample_radius * cxd(std::cos(th), std::sin(th));
        vals[k] = sylvester_det(p_of_t(t), q_of_t(t));
    }
    CPoly out;
    out.c.resize(N);
    for (int j = 0; j < N; ++j) {
        cxd acc = 0;
        for (int k = 0; k < N; ++k) {
            const double th = -2.0 * M_PI * j * k / N;
            acc += vals[k] * cxd(std::cos(th), std::sin(th));
        }
        out.c[j] = acc / cxd(static_cast<double>(N), 0) / std::pow(sample_radius, j);
    }
    out.trim(1e-9);
    return out;
}

}  // namespace fibercalc
