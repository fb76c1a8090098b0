// Closed-form universality classifiers, test-lattice enumerators, the
// representation-based oracle, and classifier-vs-oracle sweeps.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dyadic/representability.hpp"

namespace dyadic {

struct ClassifyVerdict {
    bool value = false;
    std::string clause;
    std::optional<JordanLattice> witness;
};

ClassifyVerdict classify_universal(const JordanLattice& L, const Field& F);
ClassifyVerdict classify_classic_universal(const JordanLattice& L, const Field& F);
ClassifyVerdict classify_k_universal(const JordanLattice& L, int k, const Field& F);
ClassifyVerdict classify_classic_k_universal(const JordanLattice& L, int k, const Field& F);
/// Dispatches on the classic flag.
ClassifyVerdict classify(const JordanLattice& L, int k, bool classic, const Field& F);

/// Dominant k-dimensional test lattices: improper 2^-1-modular, unimodular, proper 2-modular parts.
std::vector<JordanLattice> enumerate_dominant(int k, const Field& F);
/// Classic basic k-dimensional test lattices: unimodular and 2-modular parts.
std::vector<JordanLattice> enumerate_classic_basic(int k, const Field& F);

ClassifyVerdict oracle_k_universal(const JordanLattice& L, int k, bool classic, const Field& F);

/// Oracle against a prepared list of test lattices.
class Oracle {
public:
    Oracle(int k, bool classic, const Field& F);
    ClassifyVerdict evaluate(const JordanLattice& L) const;
    const std::vector<JordanLattice>& tests() const { return tests_; }

private:
    int k_;
    bool classic_;
    const Field& F_;
    std::vector<JordanLattice> tests_;
    std::vector<LatticeProfile> profiles_;
};

struct FamilyBounds {
    int max_components = 3;
    int scale_min = -1;
    int scale_max = 3;
    int max_comp_dim = 4;
    int max_total_dim = 5;
    bool classic = false;  // keep classic lattices; otherwise integral ones
    std::uint64_t max_instances = 50'000'000;
};

/// Visits every lattice of the family in a fixed order; returns the count.
/// Throws DomainError when the family exceeds max_instances.
std::uint64_t for_each_in_family(const FamilyBounds& b, const Field& F,
                                 const std::function<void(const JordanLattice&)>& visit);
std::uint64_t family_size(const FamilyBounds& b, const Field& F);
/// Seeded random members of the family (with repetition).
std::vector<JordanLattice> sample_family(const FamilyBounds& b, std::uint64_t count, std::uint64_t seed,
                                         const Field& F);

struct CrosscheckRecord {
    JordanLattice lattice;
    ClassifyVerdict classifier;
    ClassifyVerdict oracle;
    bool agree = false;
};

struct CrosscheckReport {
    std::uint64_t total = 0;
    std::uint64_t agreements = 0;
    std::vector<CrosscheckRecord> disagreements;
};

struct CrosscheckOptions {
    int k = 1;
    bool classic = false;
    int jobs = 1;
    std::optional<std::uint64_t> sample;  // random sample size instead of the full family
    std::uint64_t seed = 0;
    /// Called for every record, in family order.
    std::function<void(const CrosscheckRecord&)> sink;
};

CrosscheckReport crosscheck(const FamilyBounds& b, const CrosscheckOptions& opts, const Field& F);

}  // namespace dyadic
