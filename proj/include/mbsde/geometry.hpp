#pragma once
#include <functional>
#include <vector>
#include <Eigen/Dense>

#include "mbsde/errors.hpp"

namespace mbsde {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Chart coordinates of a manifold point.
struct Point {
    Vec coords;
};

/// An n x d_w block of tangent vectors at `base`: column j is the j-th
/// tangent vector (row index = manifold dimension, column = Brownian one).
struct TangentMatrix {
    Vec base;
    Mat entries;
};

struct ChartDomain {
    enum class Shape { ball, box };
    Shape shape = Shape::ball;
    double radius = 1.0; // ball
    Vec lo, hi;          // box

    bool contains(const Vec& x) const {
        if (shape == Shape::ball) return x.norm() <= radius;
        for (int i = 0; i < x.size(); ++i)
            if (x[i] < lo[i] || x[i] > hi[i]) return false;
        return true;
    }
    static ChartDomain ball(double r) {
        ChartDomain d; d.shape = Shape::ball; d.radius = r; return d;
    }
    static ChartDomain box(Vec lo, Vec hi) {
        ChartDomain d; d.shape = Shape::box; d.lo = std::move(lo); d.hi = std::move(hi);
        return d;
    }
    /// Bounding box (used by rejection samplers).
    void bounds(int n, Vec& lo_out, Vec& hi_out) const {
        if (shape == Shape::ball) {
            lo_out = Vec::Constant(n, -radius);
            hi_out = Vec::Constant(n, radius);
        } else {
            lo_out = lo; hi_out = hi;
        }
    }
};

enum class ManifoldKind { euclidean, sphere, hyperbolic_disc, custom };

/// User-supplied chart geometry: metric and connection coefficients.
/// christoffel(x)[i](j,k) = Gamma^i_{jk}(x); must be symmetric in (j,k).
struct CustomChartFns {
    std::function<Mat(const Vec&)> metric;
    std::function<std::vector<Mat>(const Vec&)> christoffel;
};

/// Single-chart manifold with metric, connection, geodesics, exponential map
/// and parallel transport.
///
/// Built-in kinds use closed forms:
///   - euclidean:       flat metric, straight lines, identity transport
///   - sphere:          curvature K > 0, normal coordinates at the cap center
///                      (chart radius must stay below pi / (2 sqrt K))
///   - hyperbolic_disc: Poincare ball of curvature -1, metric 4/(1-|x|^2)^2 I
/// Custom charts integrate the geodesic / transport ODEs (RK4, fixed steps)
/// and solve point-to-point geodesics by shooting with a damped Newton.
/// The same ODE machinery is exposed for the built-in kinds as *_ode and
/// serves as the independent oracle in the test suite.
class ManifoldChart {
public:
    static ManifoldChart euclidean(int n, double chart_radius = 1e6);
    static ManifoldChart sphere(int n, double curvature, double chart_radius);
    static ManifoldChart hyperbolic_disc(int n, double chart_radius = 0.9);
    static ManifoldChart custom(int n, CustomChartFns fns, ChartDomain domain);

    int dim() const { return n_; }
    ManifoldKind kind() const { return kind_; }
    const ChartDomain& domain() const { return domain_; }
    double curvature() const { return curvature_; }

    void require_in_domain(const Vec& x) const;

    Mat metric(const Vec& x) const;
    /// Gamma[i](j,k) = Gamma^i_{jk}(x).
    std::vector<Mat> christoffel(const Vec& x) const;
    /// v^i = sum_{j,k} Gamma^i_{jk}(x) S_{kj}; with S = Z Z^T this is the
    /// quadratic term Gamma_{jk}([Z]^k | [Z]^j) of the coordinate BSDE.
    Vec christoffel_contract(const Vec& x, const Mat& s) const;

    double riem_norm(const Vec& x, const Vec& v) const;
    double riem_norm(const TangentMatrix& z) const;
    double riem_norm_mat(const Vec& x, const Mat& z) const;

    double distance(const Vec& x, const Vec& y) const;
    Vec exp_map(const Vec& x, const Vec& v) const;
    /// Initial velocity of the geodesic from x to y (inverse of exp_map).
    Vec log_map(const Vec& x, const Vec& y) const;
    /// Transports the columns of z along the geodesic from x to y.
    Mat parallel_transport(const Vec& x, const Vec& y, const Mat& z) const;

    // ODE reference paths (production for custom charts, oracle for built-ins).
    Vec exp_map_ode(const Vec& x, const Vec& v, int steps = 200) const;
    Vec log_map_ode(const Vec& x, const Vec& y, double tol = 1e-10,
                    int max_iter = 50, int steps = 200) const;
    Mat parallel_transport_ode(const Vec& x, const Vec& y, const Mat& z,
                               int steps = 200) const;
    double distance_ode(const Vec& x, const Vec& y) const;

private:
    ManifoldChart() = default;

    // sphere embedding helpers (R = 1/sqrt(K), chart = normal coords at pole)
    Vec sph_embed(const Vec& x) const;
    Vec sph_unembed(const Vec& q) const;
    Mat sph_push(const Vec& x) const;   // d(embed)/dx, (n+1) x n
    Vec sph_pull(const Vec& x, const Vec& V) const;

    // hyperboloid model helpers (Lorentz signature (-,+,...,+))
    Vec hyp_embed(const Vec& x) const;
    Vec hyp_unembed(const Vec& q) const;
    Mat hyp_push(const Vec& x) const;
    Vec hyp_pull(const Vec& x, const Vec& V) const;
    static double lorentz(const Vec& a, const Vec& b);

    ManifoldKind kind_ = ManifoldKind::euclidean;
    int n_ = 0;
    double curvature_ = 0.0; // K for sphere
    ChartDomain domain_;
    CustomChartFns fns_;
};

/// Levi-Civita Christoffel symbols of `metric_fn` at x by 4th-order central
/// differences; independent route used to validate closed-form connections.
std::vector<Mat> levi_civita_from_metric(
    const std::function<Mat(const Vec&)>& metric_fn, const Vec& x,
    double h = 1e-3);

struct TransportConstantResult {
    double c_hat = 0.0;       // smallest constant covering both inequalities
    double c_forward = 0.0;   // |Pz - z'|_r <= C (|z-z'| + d(x,x')(|z|+|z'|))
    double c_inverse = 0.0;   // |z-z'| <= C (|Pz - z'|_r + d(x,x')(|z|_r+|z'|_r))
    long samples = 0;
    uint64_t seed = 0;
};

/// Empirical constant of the two transport comparison inequalities over
/// `count` random tuples (x, x', z, z') in the chart domain.
TransportConstantResult transport_estimate_constant(const ManifoldChart& m,
                                                    uint64_t seed, int count);

} // namespace mbsde
