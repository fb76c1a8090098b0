// Representations of one lattice by another: the lower-type relation, the
// exact local criterion on Jordan invariants, and a congruence search oracle.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyadic/lattice.hpp"

namespace dyadic {

enum class RepValue { Represented, NotRepresented, Unknown };

struct RepVerdict {
    RepValue value = RepValue::Unknown;
    std::string reason;
    /// Brute-force witness X (rows x cols, row-major) with X^T G_L X = G_l.
    int witness_rows = 0;
    int witness_cols = 0;
    std::vector<FieldElt> witness;

    bool represented() const { return value == RepValue::Represented; }
};

std::string to_string(RepValue v);

RepVerdict lower_type(const JordanLattice& l, const JordanLattice& L, const Field& F);
RepVerdict represents_lattice(const JordanLattice& l, const JordanLattice& L, const Field& F);

/// Precomputed component spaces; lets repeated queries against one lattice skip recomputation.
class LatticeProfile {
public:
    LatticeProfile(const JordanLattice& L, const Field& F);
    const JordanLattice& lattice() const { return lat_; }
    const std::vector<SpaceInv>& spaces() const { return spaces_; }

private:
    JordanLattice lat_;
    std::vector<SpaceInv> spaces_;
};

RepVerdict lower_type(const LatticeProfile& l, const LatticeProfile& L, const Field& F);
RepVerdict represents_lattice(const LatticeProfile& l, const LatticeProfile& L, const Field& F);

struct BruteForceOptions {
    int max_rank_small = 2;
    int max_rank_big = 4;
    std::uint64_t node_budget = 400000;
};

RepVerdict brute_force_represents(const GramMatrix& l_gram, const GramMatrix& L_gram, int modulus_exp,
                                  const Field& F, const BruteForceOptions& opts = {});

}  // namespace dyadic
