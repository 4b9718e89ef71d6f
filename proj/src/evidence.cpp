#include "symdyn/construction.hpp"
#include "symdyn/error.hpp"
#include "symdyn/kernels.hpp"

#include <algorithm>

namespace symdyn::construction {

EvidenceReport check_evp_x_0inf(std::size_t n, std::uint64_t time_horizon, std::uint64_t orbit_depth) {
    require(n >= 1, ErrorKind::Precondition, "need n >= 1");
    require(time_horizon <= 100'000'000 && orbit_depth <= 100'000'000, ErrorKind::MaterializationRefused,
            "horizon and orbit depth are capped at 10^8");
    const RleWord u_word = c_block(0, n);
    require(u_word.length() <= 10'000'000, ErrorKind::MaterializationRefused, "U word too long to sample");
    const std::size_t u_len = to_u64(u_word.length());
    const auto u = u_word.expand(u_len);

    const std::size_t y_len = orbit_depth + std::max<std::size_t>(time_horizon + n, u_len) + 1;
    const std::size_t x_len = time_horizon + n + 1;
    const auto y = point_y().materialize(y_len, y_len);
    const auto x = point_x().materialize(x_len, x_len);

    std::vector<std::uint64_t> offsets;
    for (std::uint64_t j = 0; j <= orbit_depth; ++j)
        if (std::equal(u.begin(), u.end(), y.begin() + j)) offsets.push_back(j);

    EvidenceReport r;
    r.n = n;
    r.time_horizon = time_horizon;
    r.orbit_depth = orbit_depth;
    r.points_checked = offsets.size();
    const auto zx = kernels::run_lengths(kernels::Text(x.data(), x.size()), 0);
    for (std::uint64_t l = 1; l <= time_horizon; ++l) r.times_checked += zx[l] >= n;

    auto v = kernels::parallel::zero_block_violations(kernels::Text(x.data(), x.size()),
                                                     kernels::Text(y.data(), y.size()), offsets, n, time_horizon);
    r.violation_count = v.size();
    for (std::size_t i = 0; i < v.size() && i < 100; ++i) r.violations.push_back({v[i].time, v[i].offset});
    return r;
}

nlohmann::json to_json(const EvidenceReport& r) {
    nlohmann::json viol = nlohmann::json::array();
    for (const auto& v : r.violations) viol.push_back({{"l", v.time}, {"j", v.offset}});
    return {{"n", r.n},
            {"U", "C_0..C_" + std::to_string(r.n)},
            {"V", "0^" + std::to_string(r.n)},
            {"time_horizon", r.time_horizon},
            {"orbit_depth", r.orbit_depth},
            {"times_checked", r.times_checked},
            {"points_checked", r.points_checked},
            {"violation_count", r.violation_count},
            {"violations", viol}};
}

}  // namespace symdyn::construction
