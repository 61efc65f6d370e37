#pragma once

#include <map>

#include "weightfilt/subspace.hpp"

namespace wfl {

// An increasing filtration of Q^n by subspaces, stored sparsely: only indices
// where the subspace jumps are kept. Below the lowest stored index the
// filtration is the zero subspace; at and above the highest it is the full
// space (enforced at construction). Weight indices are small integers but
// carry meaning, so they are explicit everywhere.
class Filtration {
  public:
    Filtration() : ambient_(0) {}

    // Steps must be nested (increasing with the index) and reach the full
    // space at the top; violations raise InvalidFiltration. Redundant steps
    // are dropped.
    Filtration(std::size_t ambient_dim, std::map<int, RationalSubspace> steps);

    std::size_t ambient_dim() const { return ambient_; }

    // The subspace at index j, saturated outside the stored range.
    const RationalSubspace& step(int j) const;

    // Stored jump indices only.
    const std::map<int, RationalSubspace>& jumps() const { return steps_; }

    int lowest_jump() const;
    int highest_jump() const;

    // dim step(j) - dim step(j-1).
    std::size_t graded_dim(int j) const;
    std::map<int, std::size_t> graded_dims() const;

    Filtration shifted(int offset) const;

    // Semantic equality: same subspace at every index.
    bool operator==(const Filtration& rhs) const;

    // Re-assertable nesting check (true by construction).
    bool is_nested() const;

  private:
    std::size_t ambient_;
    std::map<int, RationalSubspace> steps_;
    RationalSubspace zero_;  // cached bottom value
};

}  // namespace wfl
