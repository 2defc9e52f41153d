#pragma once

// Heuristic density model for sums of k-th powers.
//
// V(j,k) is the volume of {x in [0,1]^j : x_1^k + ... + x_j^k <= 1}. The number
// of (j,k)-representations below n is modelled as n^(j/k) V(j,k) / j!, so the
// "probability" that n is (j,k)-representable is its derivative
// n^(j/k - 1) V(j,k) / (k (j-1)!).

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace waring {

using Rational = boost::rational<std::int64_t>;

enum class VolumeMethod { quadrature, monte_carlo };

std::string_view to_string(VolumeMethod m);

struct VolumeOptions {
    std::uint64_t mc_samples = 10'000'000;
    std::uint64_t mc_seed = 0x5eed'2024'0001ULL;
    unsigned mc_shards = 16;
    unsigned max_depth = 60;  // adaptive Simpson recursion limit
};

struct VolumeEstimate {
    unsigned j;
    unsigned k;
    double value;
    double error;  // quadrature: accumulated error estimate; Monte Carlo: standard error
    VolumeMethod method;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

class ToleranceError : public std::runtime_error {
public:
    ToleranceError(const std::string& what, VolumeEstimate best)
        : std::runtime_error(what), best_(best) {}
    const VolumeEstimate& best() const noexcept { return best_; }

private:
    VolumeEstimate best_;
};

struct SimpsonStats {
    double error = 0.0;  // accumulated |S2 - S1| / 15 over accepted panels
    bool converged = true;
    std::uint64_t evaluations = 0;
};

namespace detail {

template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                    unsigned depth, SimpsonStats& st) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    st.evaluations += 2;
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth == 0 || std::abs(delta) <= 15.0 * tol) {
        if (depth == 0 && std::abs(delta) > 15.0 * tol) st.converged = false;
        st.error += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, st) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, st);
}

}  // namespace detail

// Adaptive Simpson on [a, b] to absolute tolerance `tol`.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol, unsigned max_depth, SimpsonStats& st) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    st.evaluations += 3;
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth, st);
}

VolumeEstimate volume(unsigned j, unsigned k, VolumeMethod method, double tol = 1e-7, const VolumeOptions& opts = {});

class HeuristicModel {
public:
    HeuristicModel(unsigned k, const std::vector<unsigned>& js, VolumeMethod method = VolumeMethod::quadrature,
                   double tol = 1e-7, const VolumeOptions& opts = {});

    unsigned k() const noexcept { return k_; }
    const VolumeEstimate& volume(unsigned j) const;
    bool has(unsigned j) const { return volumes_.count(j) != 0; }
    // V(j,k) / (k (j-1)!), the coefficient of n^(j/k-1) in density().
    double density_constant(unsigned j) const;
    // V(j,k) / j!, the coefficient of n^(j/k) in the counting function.
    double count_constant(unsigned j) const;

private:
    unsigned k_;
    std::map<unsigned, VolumeEstimate> volumes_;
};

double density(double n, unsigned j, unsigned k, const HeuristicModel& model);

enum class ExponentRegime { finite_expected, logarithmic, infinite };

std::string_view to_string(ExponentRegime r);

struct ExponentResult {
    Rational E;
    ExponentRegime regime;
};

// E = sum j_i/k_i - m over the pairs (j_i, k_i).
ExponentResult exponent_E(const std::vector<std::pair<unsigned, unsigned>>& pairs);

struct CoincidenceResult {
    ExponentResult exponent;
    double constant;              // product of the density constants
    std::optional<double> value;  // C b^(E+1) / |E+1| when E < -1
};

// Expected number of integers >= b representable in every listed way.
CoincidenceResult expected_coincidences(double b, const std::vector<std::pair<unsigned, unsigned>>& pairs,
                                        const HeuristicModel& model);

}  // namespace waring
