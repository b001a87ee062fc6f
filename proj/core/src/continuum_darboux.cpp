#include "bohl/continuum_darboux.hpp"

#include <algorithm>
#include <cmath>

namespace bohl {

namespace {

void require_length(const DiagonalFunction& z, const std::vector<cplx>& f) {
    if (f.size() != z.grid.size())
        throw Error(ErrorKind::invalid_input, "darboux: function length does not match grid");
}

} // namespace

std::vector<cplx> darboux_apply(const DiagonalFunction& z, Sign sign, const std::vector<cplx>& f) {
    require_length(z, f);
    const double h = z.grid.step();
    const double s = sign == Sign::plus ? 1.0 : -1.0;
    std::vector<cplx> out(f.size(), cplx(kNaN, kNaN));
    for (std::size_t k = 1; k + 1 < f.size(); ++k) {
        const cplx df = (f[k + 1] - f[k - 1]) / (2.0 * h);
        out[k] = df - (z.dz[k] / z.z[k]) * f[k] - s * f[k] / (2.0 * z.z2[k]);
    }
    return out;
}

DarbouxResidual darboux_factorization_residual(const DiagonalFunction& z,
                                               const ContinuumPotential& v,
                                               const std::vector<cplx>& f) {
    require_length(z, f);
    const std::size_t n = f.size();
    if (n < 2 * kDarbouxPadding + 1)
        throw Error(ErrorKind::invalid_input, "darboux: grid too short for padding");
    for (std::size_t k = 0; k < kDarbouxPadding; ++k)
        if (f[k] != cplx{} || f[n - 1 - k] != cplx{})
            throw Error(ErrorKind::invalid_input,
                        "darboux: test function needs zero padding at both ends");

    const double h = z.grid.step();
    std::vector<cplx> direct(n, cplx{});
    for (std::size_t k = 1; k + 1 < n; ++k)
        direct[k] = -(f[k + 1] - 2.0 * f[k] + f[k - 1]) / (h * h) + v(z.grid.x(k)) * f[k];

    DarbouxResidual out{0.0, 0.0};
    for (Sign sign : {Sign::plus, Sign::minus}) {
        const std::vector<cplx> once = darboux_apply(z, sign, f);
        const std::vector<cplx> twice = darboux_apply(z, sign, once);
        double worst = 0.0;
        for (std::size_t k = 2; k + 2 < n; ++k) {
            const cplx d_once = (once[k + 1] - once[k - 1]) / (2.0 * h);
            const cplx composed = twice[k] - 2.0 * d_once;
            worst = std::max(worst, std::abs(composed - direct[k]));
        }
        (sign == Sign::plus ? out.plus : out.minus) = worst;
    }
    return out;
}

std::vector<cplx> bump_function(const Grid& grid, double center, double half_width) {
    std::vector<cplx> out(grid.size(), cplx{});
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = (grid.x(k) - center) / half_width;
        if (std::abs(t) < 1.0) out[k] = std::exp(1.0 - 1.0 / (1.0 - t * t));
    }
    return out;
}

} // namespace bohl
