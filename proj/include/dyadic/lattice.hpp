// Quadratic lattices over O held as Jordan splittings.
#pragma once

#include <string>
#include <vector>

#include "dyadic/field.hpp"
#include "dyadic/quad_space.hpp"

namespace dyadic {

enum class ImproperType { plain, delta };

/// One modular component. Proper: 2^s <e_1,...,e_n> with unit classes e_i.
/// Improper: 2^s A(0,0)^m (plain) or 2^s (A(0,0)^(m-1) ⊥ A(2,2rho)) (delta).
struct JordanComponent {
    int scale_exp = 0;
    int dim = 0;
    bool proper = true;
    std::vector<SquareClass> diag;  // proper only, sorted
    ImproperType type = ImproperType::plain;

    static JordanComponent make_proper(int scale, std::vector<SquareClass> diag);
    static JordanComponent make_improper(int scale, int m, ImproperType type);

    int norm_exp() const { return scale_exp + (proper ? 0 : 1); }
    int half_dim() const { return dim / 2; }
    friend bool operator==(const JordanComponent&, const JordanComponent&) = default;
};

class JordanLattice {
public:
    JordanLattice() = default;
    /// Validates scale ordering and component shapes; throws DomainError.
    JordanLattice(std::vector<JordanComponent> comps, const Field& F);
    /// For component lists taken from an already validated lattice.
    static JordanLattice unchecked(std::vector<JordanComponent> comps) {
        JordanLattice L;
        L.comps_ = std::move(comps);
        return L;
    }

    const std::vector<JordanComponent>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    int size() const { return static_cast<int>(comps_.size()); }
    int dim() const;
    /// 1-based component access; out-of-range yields nullptr (the zero lattice).
    const JordanComponent* comp(int r) const;

    friend bool operator==(const JordanLattice&, const JordanLattice&) = default;

private:
    std::vector<JordanComponent> comps_;
};

/// Symmetric matrix, row-major.
struct GramMatrix {
    int n = 0;
    std::vector<FieldElt> entries;
    const FieldElt& at(int i, int j) const { return entries[i * n + j]; }
    FieldElt& at(int i, int j) { return entries[i * n + j]; }
};

JordanLattice lattice_from_jordan(std::vector<JordanComponent> comps, const Field& F);
JordanLattice jordan_split(const GramMatrix& G, const Field& F);
GramMatrix gram_of(const JordanLattice& L, const Field& F);
GramMatrix A_lattice(const FieldElt& alpha, const FieldElt& beta, int scale, const Field& F);

IdealExp norm_ideal(const JordanLattice& L);
IdealExp scale_ideal(const JordanLattice& L);
bool is_integral(const JordanLattice& L);
bool is_classic(const JordanLattice& L);

enum class SubKind { le, paren, bracket };
JordanLattice sublattice(const JordanLattice& L, int i, SubKind kind);
IdealExp fd_ideal(const JordanLattice& L, int i);
IdealExp delta_ideal(const JordanLattice& L, int i);
bool has_proper_component(const JordanLattice& L, int scale);

SpaceInv component_space(const JordanComponent& c, const Field& F);
SpaceInv space_of(const JordanLattice& L, const Field& F);

/// Per-component data that is invariant under change of Jordan basis within a component.
struct ComponentInvariant {
    int scale_exp;
    int dim;
    bool proper;
    SpaceInv space;
    friend bool operator==(const ComponentInvariant&, const ComponentInvariant&) = default;
};
std::vector<ComponentInvariant> invariant_data(const JordanLattice& L, const Field& F);

/// Canonical text form, e.g. "[0:P<1,3>][1:I2d]".
std::string describe(const JordanLattice& L, const Field& F);

}  // namespace dyadic
