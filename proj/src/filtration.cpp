#include "weightfilt/filtration.hpp"

#include <algorithm>
#include <string>

namespace wfl {

Filtration::Filtration(std::size_t ambient_dim, std::map<int, RationalSubspace> steps)
    : ambient_(ambient_dim), zero_(RationalSubspace::zero(ambient_dim)) {
    if (steps.empty()) throw InvalidFiltration("no steps given");
    for (const auto& [j, s] : steps)
        if (s.ambient_dim() != ambient_)
            throw InvalidFiltration("step " + std::to_string(j) + " lives in the wrong space");
    const RationalSubspace* prev = nullptr;
    for (const auto& [j, s] : steps) {
        if (prev && !s.contains(*prev))
            throw InvalidFiltration("steps not nested at index " + std::to_string(j));
        prev = &s;
    }
    if (!steps.rbegin()->second.is_full())
        throw InvalidFiltration("highest step is not the full space");
    // Sparsify: keep only jumps. A bottom step equal to zero is implied.
    const RationalSubspace* last = &zero_;
    for (auto& [j, s] : steps) {
        if (s == *last) continue;
        steps_.emplace(j, s);
        last = &steps_.rbegin()->second;
    }
    if (steps_.empty()) steps_.emplace(steps.rbegin()->first, steps.rbegin()->second);
}

const RationalSubspace& Filtration::step(int j) const {
    auto it = steps_.upper_bound(j);
    if (it == steps_.begin()) return zero_;
    return std::prev(it)->second;
}

int Filtration::lowest_jump() const { return steps_.begin()->first; }
int Filtration::highest_jump() const { return steps_.rbegin()->first; }

std::size_t Filtration::graded_dim(int j) const { return step(j).dim() - step(j - 1).dim(); }

std::map<int, std::size_t> Filtration::graded_dims() const {
    std::map<int, std::size_t> dims;
    for (int j = lowest_jump(); j <= highest_jump(); ++j) {
        std::size_t d = graded_dim(j);
        if (d > 0) dims[j] = d;
    }
    return dims;
}

Filtration Filtration::shifted(int offset) const {
    Filtration f;
    f.ambient_ = ambient_;
    f.zero_ = zero_;
    for (const auto& [j, s] : steps_) f.steps_.emplace(j + offset, s);
    return f;
}

bool Filtration::operator==(const Filtration& rhs) const {
    if (ambient_ != rhs.ambient_) return false;
    int lo = std::min(lowest_jump(), rhs.lowest_jump());
    int hi = std::max(highest_jump(), rhs.highest_jump());
    for (int j = lo; j <= hi; ++j)
        if (step(j) != rhs.step(j)) return false;
    return true;
}

bool Filtration::is_nested() const {
    const RationalSubspace* prev = &zero_;
    for (const auto& [j, s] : steps_) {
        if (!s.contains(*prev)) return false;
        prev = &s;
    }
    return true;
}

}  // namespace wfl
