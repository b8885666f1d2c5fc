#ifndef GESOLVE_TANGENT_HPP
#define GESOLVE_TANGENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gesolve/pfactor.hpp"

namespace gesolve {

struct TangentOptions {
    double tol = 1e-9;
    double slope_min = 1.5;  // log-log slope threshold for the o(t) verdict
    int max_iter = 200;
    std::uint64_t seed = 0;
    int premise_samples = 64;  // regularity sampling at representative t
};

/// Membership certificate for a direction: the curve corrections w(t) over
/// the grid, their inclusion residuals against the original problem, and the
/// fitted log-log slope of ||w|| against t. When every correction is at
/// numerical zero the slope is +inf and w_negligible is set.
struct TangentCertificate {
    Vector h_bar;
    std::vector<double> t_grid;
    std::vector<double> w_norms;
    std::vector<double> per_t_residuals;
    double loglog_slope = 0.0;
    bool accepted = false;
    bool w_negligible = false;
    bool kernel_ok = false;
    std::string reject_reason;
    double premise_c = 0.0;          // worst regularity ratio over sampled t
    int premise_empty_pairs = 0;     // fibre pairs unusable during sampling
};

/// Eight log-spaced points in [1e-3, 1e-1].
std::vector<double> default_t_grid();

/// True when 0 in f^{(p)}(y0)[t h_bar]^p + N_C(y0 + t h_bar) for every t in
/// the grid. Requires an unparameterized problem (m = 0).
bool kernel_check(const ProblemSpec& problem, const Vector& h_bar,
                  const std::vector<double>& t_grid, double tol);

/// Constructs w(t) per grid point via the contraction iteration on the
/// p-factor inverse, verifies the inclusion at y0 + t h_bar + w(t), and
/// decides o(t) from the fitted slope. Throws NotInKernel when the kernel
/// inclusion fails.
TangentCertificate certify_tangent(const ProblemSpec& problem, const Vector& h_bar,
                                   const std::vector<double>& t_grid,
                                   const TangentOptions& opts = {});

}  // namespace gesolve

#endif
