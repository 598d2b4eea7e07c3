#pragma once

#include <optional>
#include <vector>

#include "chessboard/scalar.hpp"

namespace chessboard::detail {

/// Expands `target` in the span of `basis` (vectors over the exact field).
/// Returns the coefficient list, or nullopt if target is outside the span.
std::optional<std::vector<ExactScalar>> solve_in_span(
    const std::vector<std::vector<ExactScalar>>& basis,
    const std::vector<ExactScalar>& target);

// Exact row-echelon accumulator: feed vectors one at a time, rank grows by
// one whenever the new vector is independent of everything seen so far.
class IncrementalRank {
  public:
    /// Returns true if the vector increased the rank.
    bool add(std::vector<ExactScalar> v);

    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    // reduced rows, each with its pivot position
    std::vector<std::pair<std::size_t, std::vector<ExactScalar>>> rows_;
};

// Rank accumulator over F_p (p = 15·2²⁷ + 1, which splits the 24th
// cyclotomic: ζ maps to a primitive 24th root of unity mod p, making
// reduction a ring homomorphism on our scalars).  Since any exact linear
// dependence survives reduction, rank_p ≤ exact rank — a full-width mod-p
// rank therefore *certifies* full exact rank, at a tiny fraction of the
// cost.  A deficient mod-p rank proves nothing and callers must fall back
// to IncrementalRank.
class ModRank {
  public:
    ModRank();

    bool add(const std::vector<ExactScalar>& v);

    int rank() const { return static_cast<int>(rows_.size()); }

    static constexpr std::uint64_t kPrime = 2013265921;  // 15·2²⁷ + 1

  private:
    std::uint64_t to_mod(const ExactScalar& x) const;

    std::array<std::uint64_t, 8> zeta_pow_{};  // images of ζ⁰..ζ⁷
    std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows_;
};

}  // namespace chessboard::detail
