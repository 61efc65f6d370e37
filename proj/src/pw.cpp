#include "weightfilt/pw.hpp"

#include <algorithm>
#include <string>

namespace wfl {

FiberedSurfaceData::FiberedSurfaceData(std::vector<std::size_t> betti_dims,
                                       std::map<int, RationalMatrix> restrictions)
    : betti_(std::move(betti_dims)), restrictions_(std::move(restrictions)) {
    for (int k = 0; k <= 2; ++k)
        if (!restrictions_.count(k))
            throw ShapeMismatch("missing restriction in degree " + std::to_string(k));
    for (const auto& [k, R] : restrictions_) {
        if (k < 0 || k > 2) throw ShapeMismatch("restriction degree outside 0..2");
        if (R.cols() != betti(k) || R.rows() != torus_betti(k))
            throw ShapeMismatch("restriction in degree " + std::to_string(k) + " has shape " +
                                std::to_string(R.rows()) + "x" + std::to_string(R.cols()) +
                                ", expected " + std::to_string(torus_betti(k)) + "x" +
                                std::to_string(betti(k)));
    }
}

std::size_t FiberedSurfaceData::betti(int degree) const {
    if (degree < 0 || static_cast<std::size_t>(degree) >= betti_.size()) return 0;
    return betti_[degree];
}

std::size_t FiberedSurfaceData::torus_betti(int degree) {
    switch (degree) {
        case 0:
        case 2:
            return 1;
        case 1:
            return 2;
        default:
            return 0;
    }
}

std::map<int, Filtration> perverse_filtration_surface(const FiberedSurfaceData& data) {
    std::map<int, Filtration> result;
    for (const auto& [k, R] : data.restrictions()) {
        std::map<int, RationalSubspace> steps;
        steps.emplace(k - 2, RationalSubspace::zero(data.betti(k)));
        steps.emplace(k - 1, kernel(R));
        steps.emplace(k, RationalSubspace::full(data.betti(k)));
        result.emplace(k, Filtration(data.betti(k), std::move(steps)));
    }
    return result;
}

bool pw_compare(const std::map<int, Filtration>& P, const std::map<int, Filtration>& W) {
    for (const auto& [degree, p] : P) {
        auto wit = W.find(degree);
        if (wit == W.end())
            throw DimensionMismatch("weight filtration missing in degree " +
                                    std::to_string(degree));
        const Filtration& w = wit->second;
        if (p.ambient_dim() != w.ambient_dim())
            throw DimensionMismatch("filtration ambient dims in degree " +
                                    std::to_string(degree));
        auto floor_half = [](int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };
        int lo = std::min(p.lowest_jump(), floor_half(w.lowest_jump())) - 1;
        int hi = std::max(p.highest_jump(), floor_half(w.highest_jump()) + 1) + 1;
        for (int m = lo; m <= hi; ++m) {
            if (p.step(m) != w.step(2 * m)) return false;
            if (p.step(m) != w.step(2 * m + 1)) return false;
        }
    }
    return true;
}

}  // namespace wfl
