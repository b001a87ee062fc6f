#include "bohl/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bohl::oracles {

TridiagonalSystem make_tridiagonal(const LatticePotential& v) {
    TridiagonalSystem sys{v.window(), {}, -1.0};
    sys.diagonal.reserve(v.window().size());
    for (double x : v.values()) sys.diagonal.push_back(2.0 + x);
    return sys;
}

GreenMatrix green_by_inversion(const LatticePotential& v) {
    const TridiagonalSystem sys = make_tridiagonal(v);
    const std::size_t size = sys.window.size();
    const double off = sys.off_diagonal;

    // LU factors: pivots d_i and multipliers l_i (sub-diagonal of L).
    std::vector<double> pivot(size);
    std::vector<double> mult(size, 0.0);
    double scale = 0.0;
    for (double x : sys.diagonal) scale = std::max(scale, std::abs(x));
    scale = std::max(scale, 1.0);
    pivot[0] = sys.diagonal[0];
    for (std::size_t i = 0; i < size; ++i) {
        if (i > 0) {
            mult[i] = off / pivot[i - 1];
            pivot[i] = sys.diagonal[i] - mult[i] * off;
        }
        if (std::abs(pivot[i]) < 1e-13 * scale)
            throw Error(ErrorKind::singular_system,
                        "green_by_inversion: near-zero pivot at n = " +
                            std::to_string(sys.window.lo() + static_cast<long>(i)));
    }

    std::vector<cplx> entries(size * size);
    std::vector<double> col(size);
    for (std::size_t j = 0; j < size; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        col[j] = 1.0;
        for (std::size_t i = 1; i < size; ++i) col[i] -= mult[i] * col[i - 1];
        col[size - 1] /= pivot[size - 1];
        for (std::size_t i = size - 1; i-- > 0;) col[i] = (col[i] - off * col[i + 1]) / pivot[i];
        for (std::size_t i = 0; i < size; ++i) entries[i * size + j] = col[i];
    }
    return GreenMatrix(sys.window, std::move(entries));
}

ComplexSequence apply_operator(const LatticePotential& v, const ComplexSequence& f) {
    if (!(v.window() == f.window()))
        throw Error(ErrorKind::invalid_input, "apply_operator: windows differ");
    ComplexSequence out(v.window(), cplx(kNaN, kNaN));
    for (long n = v.lo() + 1; n < v.hi(); ++n)
        out[n] = -(f[n + 1] - 2.0 * f[n] + f[n - 1]) + v[n] * f[n];
    return out;
}

double recurrence_residual(const LatticePotential& v, const LatticeSolution& u) {
    if (!(v.window() == u.window()))
        throw Error(ErrorKind::invalid_input, "recurrence_residual: windows differ");
    double worst = 0.0;
    for (long n = v.lo() + 1; n < v.hi(); ++n) {
        const double r = std::abs(u[n + 1] + u[n - 1] - (2.0 + v[n]) * u[n]);
        worst = std::max(worst, r / std::max(1.0, std::abs(u[n])));
    }
    return worst;
}

namespace {

template <class T>
std::vector<T> second_difference(std::span<const T> f, const Grid& grid) {
    if (f.size() != grid.size())
        throw Error(ErrorKind::invalid_input, "fd_second_derivative: length does not match grid");
    const double h = grid.step();
    std::vector<T> out(f.size(), T(kNaN));
    for (std::size_t k = 1; k + 1 < f.size(); ++k)
        out[k] = (f[k + 1] - 2.0 * f[k] + f[k - 1]) / (h * h);
    return out;
}

} // namespace

std::vector<double> fd_second_derivative(std::span<const double> f, const Grid& grid) {
    return second_difference(f, grid);
}

std::vector<cplx> fd_second_derivative(std::span<const cplx> f, const Grid& grid) {
    return second_difference(f, grid);
}

cplx trapezoid(std::span<const cplx> f, double h) {
    if (f.size() < 2) return {};
    cplx sum = 0.5 * (f.front() + f.back());
    for (std::size_t k = 1; k + 1 < f.size(); ++k) sum += f[k];
    return sum * h;
}

} // namespace bohl::oracles
