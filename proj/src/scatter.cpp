#include "wgbind/scatter.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace wgbind {

namespace {

// Spatial order of the particles; identity while the configuration is
// ordered, a sorted permutation otherwise (breakup frames).
std::vector<Eigen::Index> spatial_order(const Eigen::VectorXd& x) {
    std::vector<Eigen::Index> order(static_cast<size_t>(x.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    if (!std::is_sorted(order.begin(), order.end(),
                        [&](Eigen::Index a, Eigen::Index b) { return x[a] < x[b]; }))
        std::stable_sort(order.begin(), order.end(),
                         [&](Eigen::Index a, Eigen::Index b) { return x[a] < x[b]; });
    return order;
}

}  // namespace

Eigen::VectorXd sample_intensity(const FieldState& fields,
                                 const ParticleConfiguration& config,
                                 const SystemParams& params,
                                 const Eigen::VectorXd& grid) {
    const Eigen::VectorXd& x = config.positions;
    const Eigen::Index n = x.size();
    const double k = params.wavenumber();
    const double i_eta = params.pump_intensity();
    const auto order = spatial_order(x);

    Eigen::VectorXd intensity(grid.size());
    for (Eigen::Index g = 0; g < grid.size(); ++g) {
        const double pos = grid[g];
        double value;
        if (pos <= x[order.front()]) {
            value = 0.5 * std::norm(fields.a(order.front()));
        } else if (pos > x[order.back()]) {
            value = 0.5 * std::norm(fields.d(order.back()));
        } else {
            // gap (x_j, x_{j+1}]; exact particle positions take the left gap
            Eigen::Index lo = 0, hi = n - 1;
            while (hi - lo > 1) {
                const Eigen::Index mid = (lo + hi) / 2;
                if (x[order[mid]] < pos)
                    lo = mid;
                else
                    hi = mid;
            }
            const Eigen::Index j = order[lo], jn = order[hi];
            const Complex right_going = fields.d(j) * std::polar(1.0, k * (pos - x[j]));
            const Complex left_going = fields.a(jn) * std::polar(1.0, k * (x[jn] - pos));
            value = 0.5 * std::norm(right_going + left_going);
        }
        intensity[g] = value / i_eta;
    }
    return intensity;
}

Eigen::VectorXd sample_intensity(const ParticleConfiguration& config,
                                 const SystemParams& params,
                                 const Eigen::VectorXd& grid) {
    return sample_intensity(solve_fields(config, params), config, params, grid);
}

} // namespace wgbind
