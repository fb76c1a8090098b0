// Isometry classes of nonsingular quadratic spaces over F, kept as
// (dimension, discriminant class, Hasse symbol) with the i<j convention.
#pragma once

#include <vector>

#include "dyadic/field.hpp"

namespace dyadic {

struct SpaceInv {
    int dim = 0;
    SquareClass disc{};
    int hasse = 1;
    friend bool operator==(const SpaceInv&, const SpaceInv&) = default;
};

struct WittDecomposition {
    int witt_index = 0;
    SpaceInv kernel;
};

SpaceInv space_from_diagonal(const std::vector<FieldElt>& entries, const Field& F);
SpaceInv space_from_classes(const std::vector<SquareClass>& entries, const Field& F);
/// The hyperbolic space H^m.
SpaceInv hyperbolic(int m, const Field& F);

SpaceInv orthogonal_sum(const SpaceInv& U, const SpaceInv& V, const Field& F);
SquareClass signed_disc(const SpaceInv& V, const Field& F);
SpaceInv scale_space(const SpaceInv& V, SquareClass c, const Field& F);
SpaceInv scale_space(const SpaceInv& V, const FieldElt& c, const Field& F);

bool is_isotropic(const SpaceInv& V, const Field& F);
WittDecomposition witt_decompose(const SpaceInv& V, const Field& F);
/// Whether (dim, disc, hasse) is the invariant triple of an actual space.
bool is_realizable(const SpaceInv& V, const Field& F);

bool represents_element(const SpaceInv& V, SquareClass c, const Field& F);
bool represents_element(const SpaceInv& V, const FieldElt& c, const Field& F);
bool represents_ideal(const SpaceInv& V, const IdealExp& I, const Field& F);
bool represents_space(const SpaceInv& U, const SpaceInv& V, const Field& F);
/// V / U, the orthogonal complement of an embedded copy of U in V.
SpaceInv complement(const SpaceInv& U, const SpaceInv& V, const Field& F);

std::vector<SquareClass> diagonal_realization(const SpaceInv& V, const Field& F);
/// A diagonalization using unit classes only, or empty if none exists.
std::vector<SquareClass> unit_diagonal_realization(const SpaceInv& V, const Field& F);

}  // namespace dyadic
