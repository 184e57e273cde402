#include "chordal/spectrum.hpp"

#include "chordal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace chordal {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagFactor = 1e-12;
constexpr double kResidualFactor = 1e-8;

double off_diagonal_frobenius(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double x = a[static_cast<std::size_t>(i) * n + j];
            s += 2.0 * x * x;
        }
    return std::sqrt(s);
}

} // namespace

Spectrum eigenvalues(const LaplacianMatrix& L) {
    const int n = L.order();
    Spectrum s;
    if (n == 0) return s;

    std::vector<double> a(static_cast<std::size_t>(n) * n);
    double frob = 0.0, inf_norm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row_abs = 0.0;
        for (int j = 0; j < n; ++j) {
            double x = static_cast<double>(L.at(i, j));
            a[static_cast<std::size_t>(i) * n + j] = x;
            frob += x * x;
            row_abs += std::fabs(x);
        }
        inf_norm = std::max(inf_norm, row_abs);
    }
    frob = std::sqrt(frob);

    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    const double threshold = kOffDiagFactor * frob;
    int sweep = 0;
    while (off_diagonal_frobenius(a, n) > threshold) {
        if (++sweep > kMaxSweeps)
            throw NumericalError("jacobi: no convergence after " + std::to_string(kMaxSweeps) +
                                 " sweeps, off-diagonal norm " +
                                 std::to_string(off_diagonal_frobenius(a, n)));
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[static_cast<std::size_t>(p) * n + q];
                if (apq == 0.0) continue;
                double app = a[static_cast<std::size_t>(p) * n + p];
                double aqq = a[static_cast<std::size_t>(q) * n + q];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double sn = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = a[static_cast<std::size_t>(k) * n + p];
                    double akq = a[static_cast<std::size_t>(k) * n + q];
                    a[static_cast<std::size_t>(k) * n + p] = c * akp - sn * akq;
                    a[static_cast<std::size_t>(k) * n + q] = sn * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[static_cast<std::size_t>(p) * n + k];
                    double aqk = a[static_cast<std::size_t>(q) * n + k];
                    a[static_cast<std::size_t>(p) * n + k] = c * apk - sn * aqk;
                    a[static_cast<std::size_t>(q) * n + k] = sn * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[static_cast<std::size_t>(k) * n + p];
                    double vkq = v[static_cast<std::size_t>(k) * n + q];
                    v[static_cast<std::size_t>(k) * n + p] = c * vkp - sn * vkq;
                    v[static_cast<std::size_t>(k) * n + q] = sn * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
        return a[static_cast<std::size_t>(i) * n + i] > a[static_cast<std::size_t>(j) * n + j];
    });

    s.values.resize(static_cast<std::size_t>(n));
    s.vectors.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r) {
        int i = idx[static_cast<std::size_t>(r)];
        s.values[static_cast<std::size_t>(r)] = a[static_cast<std::size_t>(i) * n + i];
        for (int k = 0; k < n; ++k)
            s.vectors[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                v[static_cast<std::size_t>(k) * n + i];
    }

    // residual check against the exact integer matrix
    double worst = 0.0;
    for (int r = 0; r < n; ++r) {
        const auto& vec = s.vectors[static_cast<std::size_t>(r)];
        double lam = s.values[static_cast<std::size_t>(r)];
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j)
                acc += static_cast<double>(L.at(i, j)) * vec[static_cast<std::size_t>(j)];
            worst = std::max(worst, std::fabs(acc - lam * vec[static_cast<std::size_t>(i)]));
        }
    }
    s.residual = worst;
    double bound = kResidualFactor * std::max(1.0, inf_norm);
    if (worst > bound)
        throw NumericalError("jacobi: residual " + std::to_string(worst) + " exceeds bound " +
                             std::to_string(bound));
    return s;
}

double algebraic_connectivity(const Spectrum& s) {
    if (s.order() < 2)
        throw PreconditionError("algebraic connectivity undefined for n < 2");
    return s.values[static_cast<std::size_t>(s.order() - 2)];
}

std::vector<IntegerGroup> integer_eigenvalues(const Spectrum& s, double tol) {
    if (tol <= 0.0) throw PreconditionError("integer tolerance must be positive");
    std::vector<IntegerGroup> groups;
    std::vector<std::int64_t> keys;
    for (double lam : s.values) {
        double r = std::round(lam);
        if (std::fabs(lam - r) > tol) continue;
        auto key = static_cast<std::int64_t>(r);
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            keys.push_back(key);
            groups.push_back({key, 1});
        } else {
            ++groups[static_cast<std::size_t>(it - keys.begin())].multiplicity;
        }
    }
    std::sort(groups.begin(), groups.end(),
              [](const IntegerGroup& a, const IntegerGroup& b) { return a.value < b.value; });
    return groups;
}

bool fiedler_check(const Graph& g, const Spectrum& s, int kappa) {
    if (!g.is_connected()) throw PreconditionError("fiedler_check requires a connected graph");
    return algebraic_connectivity(s) <= static_cast<double>(kappa) + 1e-7;
}

} // namespace chordal
