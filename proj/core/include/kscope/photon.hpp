#ifndef KSCOPE_PHOTON_HPP
#define KSCOPE_PHOTON_HPP

#include <utility>
#include <vector>

namespace kscope {

/// Sampled curve of <N> against |alpha|^2 for one basis index s.
struct PhotonCurve {
    int n = 0;
    int s = 0;
    std::vector<std::pair<double, double>> points;  // (alpha_sq, expectation)
};

/// <s|N|s> = x f_{s-1 (mod n)}(x) / f_s(x) at x = alpha_sq, with the
/// analytic limit s at x = 0. Stable for large x: the dominant e^x factor
/// cancels inside the ratio, so arguments beyond the series range are fine.
double photon_expectation(int n, int s, double alpha_sq);

/// Uniform sampling of photon_expectation on [0, x_max]; steps+1 points.
PhotonCurve photon_curve(int n, int s, double x_max, int steps);

} // namespace kscope

#endif
