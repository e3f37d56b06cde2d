#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "gyrokit/core.hpp"
#include "gyrokit/format.hpp"
#include "gyrokit/rng.hpp"

namespace gyrokit {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

/// Relativistic velocity addition on the open ball of radius c. Vectors are
/// admissible when |v| < c strictly; operations throw domain_error outside.
class EinsteinModel {
  public:
    using element = Vec;

    explicit EinsteinModel(std::size_t dim = 3, double c = 1.0, double eps = 1e-9)
        : dim_(dim), c_(c), eps_(eps) {
        if (dim == 0) throw usage_error("EinsteinModel: dimension must be >= 1");
        if (c <= 0.0) throw usage_error("EinsteinModel: c must be positive");
        if (eps <= 0.0) throw usage_error("EinsteinModel: tolerance must be positive");
    }

    std::size_t dim() const { return dim_; }
    double c() const { return c_; }
    double tolerance() const { return eps_; }

    bool admissible(const Vec& u) const {
        return u.size() == dim_ && norm(u) < c_;
    }

    void require_admissible(const Vec& u) const {
        if (u.size() != dim_)
            throw domain_error("vector has dimension " + std::to_string(u.size()) +
                               ", model expects " + std::to_string(dim_));
        if (!(norm(u) < c_))
            throw domain_error("inadmissible velocity: |" + format_vector(u) +
                               "| >= c = " + format_double(c_));
    }

    /// Lorentz factor 1/sqrt(1 - |u|^2/c^2); always >= 1 on the open ball.
    double gamma(const Vec& u) const {
        require_admissible(u);
        return 1.0 / std::sqrt(1.0 - dot(u, u) / (c_ * c_));
    }

    Vec add(const Vec& u, const Vec& v) const {
        require_admissible(u);
        require_admissible(v);
        const double c2 = c_ * c_;
        const double uv = dot(u, v);
        const double gu = gamma(u);
        const double k = 1.0 / (1.0 + uv / c2);
        Vec out(dim_);
        const double cu = k * (1.0 + (gu / (1.0 + gu)) * (uv / c2));
        const double cv = k / gu;
        for (std::size_t i = 0; i < dim_; ++i) out[i] = cu * u[i] + cv * v[i];
        return out;
    }

    Vec neg(const Vec& u) const {
        require_admissible(u);
        Vec out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) out[i] = -u[i];
        return out;
    }

    Vec zero() const { return Vec(dim_, 0.0); }

    Vec gyration(const Vec& u, const Vec& v, const Vec& w) const {
        return gyr(*this, u, v, w);
    }

    /// True when a result sits within eps of the ball boundary.
    bool near_boundary(const Vec& u) const { return norm(u) >= c_ - eps_; }

    double deviation(const Vec& a, const Vec& b) const {
        double s = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
        return std::sqrt(s);
    }

    std::string describe(const Vec& a) const { return "(" + format_vector(a) + ")"; }

    std::vector<double> key(const Vec& a) const { return a; }

  private:
    std::size_t dim_;
    double c_;
    double eps_;
};

/// Seeded sample plan: tuples drawn uniformly from the ball of radius
/// 0.95 c, which keeps gamma bounded away from its boundary blow-up.
struct SamplePlan {
    std::uint64_t seed = 2024;
    std::size_t count = 1000;
    double radius_factor = 0.95;
};

inline auto sampled_domain(const EinsteinModel& m, const SamplePlan& plan) {
    return [&m, plan](const CaseFn<EinsteinModel>& f) {
        Rng rng(plan.seed);
        const double r = plan.radius_factor * m.c();
        for (std::size_t i = 0; i < plan.count; ++i) {
            Vec x = rng.next_in_ball(m.dim(), r);
            Vec y = rng.next_in_ball(m.dim(), r);
            Vec z = rng.next_in_ball(m.dim(), r);
            Vec w = rng.next_in_ball(m.dim(), r);
            f(x, y, z, w);
        }
    };
}

}  // namespace gyrokit
