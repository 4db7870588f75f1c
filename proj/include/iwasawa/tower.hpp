#pragma once

#include <cstdint>
#include <vector>

namespace iwasawa {

struct TowerLevel {
    std::uint64_t p;
    std::uint32_t r;
    std::uint32_t n;  // rank: the level is (Z/p^r)^n
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// An explicitly truncated inverse system of finite modules
/// A_0 <- A_1 <- ... <- A_{L-1}, each level (Z/p^{r_i})^{n_i}, with integer
/// transition matrices T_i : A_{i+1} -> A_i applied mod p^{r_i}.
class FiniteTower {
public:
    FiniteTower(std::vector<TowerLevel> levels, std::vector<IntMatrix> transitions);

    std::size_t length() const { return levels_.size(); }
    const TowerLevel& level(std::size_t i) const { return levels_[i]; }
    /// T_i maps level i+1 to level i; there are length() - 1 of them.
    const IntMatrix& transition(std::size_t i) const { return transitions_[i]; }

private:
    std::vector<TowerLevel> levels_;
    std::vector<IntMatrix> transitions_;
};

enum class MlKind { Stabilized, Zero, Undetermined };

/// Window-relative verdict: step is the first s with the reported property,
/// meaningless for Undetermined.
struct MlVerdict {
    MlKind kind;
    std::uint32_t step;

    bool operator==(const MlVerdict& o) const { return kind == o.kind && step == o.step; }
};

/// Diagnose the Mittag-Leffler behaviour of the tower at the base index:
/// computes the images Im(A_{base+s} -> A_base) for s = 1..L-1-base and
/// reports the first s with zero image (ZeroAt), else the first s whose
/// image equals the next one (StabilizedAt), else Undetermined. Images are
/// nested decreasing, so both verdicts persist under window extension; a
/// finite window can never certify the condition for the untruncated system.
MlVerdict ml_diagnose(const FiniteTower& tower, std::uint32_t base,
                      std::size_t enumeration_cap = std::size_t{1} << 20);

}  // namespace iwasawa
