#include "waring/heur.hpp"

#include <cmath>
#include <string>
#include <thread>

#include "waring/errors.hpp"

namespace waring {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based uniform in [0, 1): the i-th draw of a stream is splitmix64(key + i).
double uniform_at(std::uint64_t key, std::uint64_t i) {
    return static_cast<double>(splitmix64(key + i) >> 11) * 0x1.0p-53;
}

double ipow(double x, unsigned k) {
    double r = 1.0;
    for (unsigned i = 0; i < k; ++i) r *= x;
    return r;
}

VolumeEstimate volume_quadrature(unsigned j, unsigned k, double tol, const VolumeOptions& opts) {
    VolumeEstimate est{j, k, 1.0, 0.0, VolumeMethod::quadrature};
    bool converged = true;
    // V(i) = V(i-1) * int_0^1 (1 - x^k)^((i-1)/k) dx: slicing at x leaves a copy
    // of the (i-1)-dimensional region scaled by (1 - x^k)^(1/k).
    for (unsigned i = 2; i <= j; ++i) {
        const double expo = static_cast<double>(i - 1) / k;
        auto f = [k, expo](double x) { return std::pow(std::max(0.0, 1.0 - ipow(x, k)), expo); };
        SimpsonStats st;
        const double slice = adaptive_simpson(f, 0.0, 1.0, tol / j, opts.max_depth, st);
        est.error = est.value * st.error + slice * est.error;
        est.value *= slice;
        converged = converged && st.converged;
    }
    if (!converged || est.error > tol) {
        throw ToleranceError("volume: quadrature did not reach tolerance " + std::to_string(tol) +
                                 " for V(" + std::to_string(j) + "," + std::to_string(k) + ")",
                             est);
    }
    return est;
}

VolumeEstimate volume_monte_carlo(unsigned j, unsigned k, double tol, const VolumeOptions& opts) {
    const unsigned shards = std::max(1u, opts.mc_shards);
    const std::uint64_t per_shard = opts.mc_samples / shards;
    std::vector<std::uint64_t> hits(shards, 0);
    {
        std::vector<std::jthread> pool;
        for (unsigned s = 0; s < shards; ++s) {
            pool.emplace_back([&, s] {
                const std::uint64_t key = splitmix64(opts.mc_seed ^ splitmix64(s + 1));
                std::uint64_t h = 0, ctr = 0;
                for (std::uint64_t t = 0; t < per_shard; ++t) {
                    double acc = 0.0;
                    for (unsigned d = 0; d < j; ++d) acc += ipow(uniform_at(key, ctr++), k);
                    h += acc <= 1.0;
                }
                hits[s] = h;
            });
        }
    }
    std::uint64_t total_hits = 0;
    for (auto h : hits) total_hits += h;  // fixed shard order
    const std::uint64_t n = per_shard * shards;
    const double p = static_cast<double>(total_hits) / static_cast<double>(n);
    VolumeEstimate est{j, k, p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), VolumeMethod::monte_carlo, n,
                       opts.mc_seed};
    if (est.error > tol) {
        throw ToleranceError("volume: Monte Carlo standard error " + std::to_string(est.error) + " exceeds tolerance " +
                                 std::to_string(tol),
                             est);
    }
    return est;
}

double factorial(unsigned n) {
    double r = 1.0;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

std::string_view to_string(VolumeMethod m) {
    return m == VolumeMethod::quadrature ? "quadrature" : "monte-carlo";
}

std::string_view to_string(ExponentRegime r) {
    switch (r) {
        case ExponentRegime::finite_expected: return "finite";
        case ExponentRegime::logarithmic: return "logarithmic";
        case ExponentRegime::infinite: return "infinite";
    }
    return "?";
}

VolumeEstimate volume(unsigned j, unsigned k, VolumeMethod method, double tol, const VolumeOptions& opts) {
    if (j < 1 || k < 1) throw PreconditionError("volume: j and k must be >= 1");
    if (!(tol > 0.0)) throw PreconditionError("volume: tolerance must be positive");
    if (j == 1) return {1, k, 1.0, 0.0, method};
    return method == VolumeMethod::quadrature ? volume_quadrature(j, k, tol, opts)
                                              : volume_monte_carlo(j, k, tol, opts);
}

HeuristicModel::HeuristicModel(unsigned k, const std::vector<unsigned>& js, VolumeMethod method, double tol,
                               const VolumeOptions& opts)
    : k_(k) {
    for (unsigned j : js) volumes_.emplace(j, waring::volume(j, k, method, tol, opts));
}

const VolumeEstimate& HeuristicModel::volume(unsigned j) const {
    auto it = volumes_.find(j);
    if (it == volumes_.end()) throw NotFoundError("HeuristicModel: no volume for j=" + std::to_string(j));
    return it->second;
}

double HeuristicModel::density_constant(unsigned j) const { return volume(j).value / (k_ * factorial(j - 1)); }

double HeuristicModel::count_constant(unsigned j) const { return volume(j).value / factorial(j); }

double density(double n, unsigned j, unsigned k, const HeuristicModel& model) {
    if (!(n >= 1.0)) throw PreconditionError("density: n must be >= 1");
    if (model.k() != k) throw PreconditionError("density: model built for a different k");
    return model.density_constant(j) * std::pow(n, static_cast<double>(j) / k - 1.0);
}

ExponentResult exponent_E(const std::vector<std::pair<unsigned, unsigned>>& pairs) {
    if (pairs.empty()) throw PreconditionError("exponent_E: empty pair list");
    Rational e(0);
    for (auto [j, k] : pairs) {
        if (k < 1) throw PreconditionError("exponent_E: k must be >= 1");
        e += Rational(j, k) - 1;
    }
    ExponentRegime r = e < Rational(-1) ? ExponentRegime::finite_expected
                       : e == Rational(-1) ? ExponentRegime::logarithmic
                                           : ExponentRegime::infinite;
    return {e, r};
}

CoincidenceResult expected_coincidences(double b, const std::vector<std::pair<unsigned, unsigned>>& pairs,
                                        const HeuristicModel& model) {
    if (!(b >= 1.0)) throw PreconditionError("expected_coincidences: lower bound must be >= 1");
    CoincidenceResult res{exponent_E(pairs), 1.0, std::nullopt};
    for (auto [j, k] : pairs) {
        if (k != model.k()) throw PreconditionError("expected_coincidences: pair k differs from the model's k");
        res.constant *= model.density_constant(j);
    }
    if (res.exponent.regime == ExponentRegime::finite_expected) {
        const double e1 = boost::rational_cast<double>(res.exponent.E + 1);
        res.value = res.constant * std::pow(b, e1) / std::abs(e1);
    }
    return res;
}

}  // namespace waring
