#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace fibercalc {

using cxd = std::complex<double>;

// Dense univariate polynomial with complex coefficients, c[k] on x^k.
struct CPoly {
    std::vector<cxd> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    cxd eval(cxd x) const;
    CPoly derivative() const;
    void trim(double rel_tol = 1e-10);
};

// All roots by simultaneous (Durand-Kerner) iteration plus Newton polish.
// Deterministic starting configuration; intended for degree <= 16.
std::vector<cxd> roots(const CPoly& p);

// Resultant of p and q in x where the coefficients are functions of t,
// computed by sampling the Sylvester determinant on a circle and
// interpolating; degree_bound bounds the t-degree of the result.
CPoly resultant_in_t(const std::function<CPoly(cxd)>& p_of_t,
                     const std::function<CPoly(cxd)>& q_of_t, int degree_bound,
                     double sample_radius = 1.37);

cxd sylvester_det(const CPoly& p, const CPoly& q);

}  // namespace fibercalc
