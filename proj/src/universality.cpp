#include "dyadic/universality.hpp"

namespace dyadic {

namespace {

// Read-only view of L_1, L_2, ... with the zero-lattice conventions for absent components.
class Chain {
public:
    Chain(const JordanLattice& L, const Field& F) : L_(L), F_(F) {}

    int dim(int r) const { return L_.comp(r) ? L_.comp(r)->dim : 0; }
    bool scale_is(int r, int e) const { return L_.comp(r) && L_.comp(r)->scale_exp == e; }
    bool norm_is(int r, int e) const { return L_.comp(r) && L_.comp(r)->norm_exp() == e; }
    /// s(L_r) = n(L_r) = 2^e O
    bool sn_is(int r, int e) const { return scale_is(r, e) && norm_is(r, e); }
    /// 2^e O ⊆ n(L_r)
    bool norm_contains(int r, int e) const { return L_.comp(r) && L_.comp(r)->norm_exp() <= e; }

    SpaceInv space(int r) const { return component_space(*L_.comp(r), F_); }
    bool isotropic(int r) const { return is_isotropic(space(r), F_); }
    /// d±(FL_r) lies in F*^2 or Delta F*^2
    bool dpm_trivial_or_delta(int r) const {
        const SquareClass d = signed_disc(space(r), F_);
        return d == F_.one_class() || d == F_.delta_class();
    }
    bool dpm_is(int r, SquareClass c) const { return signed_disc(space(r), F_) == c; }
    const Field& field() const { return F_; }

private:
    const JordanLattice& L_;
    const Field& F_;
};

ClassifyVerdict yes(std::string clause) { return {true, std::move(clause), std::nullopt}; }
ClassifyVerdict no(std::string clause) { return {false, std::move(clause), std::nullopt}; }

void require_integral(const JordanLattice& L) {
    if (!is_integral(L)) throw DomainError("lattice is not integral");
}
void require_classic(const JordanLattice& L) {
    if (!is_classic(L)) throw DomainError("lattice is not classic");
}

}  // namespace

ClassifyVerdict classify_universal(const JordanLattice& L, const Field& F) {
    require_integral(L);
    const Chain c(L, F);
    if (!c.norm_is(1, 0)) return no("gate: 𝔫(L₁) ≠ O_F");
    const std::string T = "Thm1.2";
    const int d1 = c.dim(1);
    if (d1 >= 4) return yes(T + "(1)");
    if (d1 == 3) {
        if (c.isotropic(1) || c.norm_contains(2, 2)) return yes(T + "(2)");
        return no(T + ": no condition holds");
    }
    if (d1 == 2) {
        if (c.scale_is(1, 0) && c.sn_is(2, 1)) {
            if (c.dim(2) >= 2) return yes(T + "(3)(a)(i)");
            if (c.dim(2) == 1 && is_isotropic(orthogonal_sum(c.space(1), c.space(2), F), F))
                return yes(T + "(3)(a)(ii)");
            if (c.dim(2) == 1 && c.norm_contains(3, 3)) return yes(T + "(3)(a)(iii)");
        }
        if (c.scale_is(1, -1)) {
            if (c.isotropic(1)) return yes(T + "(3)(b)(i)");
            if (c.dim(2) >= 2 && c.norm_contains(2, 1)) return yes(T + "(3)(b)(ii)");
            if (c.dim(2) == 1 && c.sn_is(2, 0)) return yes(T + "(3)(b)(iii)");
            if (c.dim(2) == 1 && c.sn_is(2, 1) && c.norm_contains(3, 3)) return yes(T + "(3)(b)(iv)");
        }
        return no(T + ": no condition holds");
    }
    if (d1 == 1 && c.sn_is(2, 1)) {
        if (c.dim(2) >= 3) return yes(T + "(4)(a)");
        if (c.dim(2) == 2 && c.sn_is(3, 2)) return yes(T + "(4)(b)");
        if (c.dim(2) == 1 && c.dim(3) >= 2 && c.sn_is(3, 2)) return yes(T + "(4)(c)");
        if (c.dim(2) == 1 && c.dim(3) == 1 && c.sn_is(3, 2) && c.sn_is(4, 3)) return yes(T + "(4)(d)");
    }
    return no(T + ": no condition holds");
}

ClassifyVerdict classify_classic_universal(const JordanLattice& L, const Field& F) {
    require_classic(L);
    const Chain c(L, F);
    if (!c.sn_is(1, 0)) return no("gate: 𝔰(L₁) = 𝔫(L₁) = O_F fails");
    const std::string T = "Cor4.10";
    const int d1 = c.dim(1);
    if (d1 >= 4) return yes(T + "(1)");
    if (d1 == 3) {
        if (c.isotropic(1) || c.norm_contains(2, 2)) return yes(T + "(2)");
        return no(T + ": no condition holds");
    }
    if (d1 == 2 && c.sn_is(2, 1)) {
        if (c.dim(2) >= 2) return yes(T + "(3)(a)");
        if (c.dim(2) == 1 && is_isotropic(orthogonal_sum(c.space(1), c.space(2), F), F)) return yes(T + "(3)(b)");
        if (c.dim(2) == 1 && c.norm_contains(3, 3)) return yes(T + "(3)(c)");
    }
    if (d1 == 1 && c.sn_is(2, 1)) {
        if (c.dim(2) >= 3) return yes(T + "(4)(a)");
        if (c.dim(2) == 2 && c.sn_is(3, 2)) return yes(T + "(4)(b)");
        if (c.dim(2) == 1 && c.dim(3) >= 2 && c.sn_is(3, 2)) return yes(T + "(4)(c)");
        if (c.dim(2) == 1 && c.dim(3) == 1 && c.sn_is(3, 2) && c.sn_is(4, 3)) return yes(T + "(4)(d)");
    }
    return no(T + ": no condition holds");
}

namespace {

ClassifyVerdict even_k(const JordanLattice& L, int k, const Field& F) {
    const Chain c(L, F);
    if (!c.norm_is(1, 0)) return no("gate: 𝔫(L₁) ≠ O_F");
    if (!c.scale_is(1, -1)) return no("gate: 𝔰(L₁) ≠ 2⁻¹O_F");
    const std::string T = "Thm1.3";
    const int d1 = c.dim(1);
    if (d1 >= k + 4) return yes(T + "(1)");
    if (d1 == k + 2) {
        if (c.dpm_is(1, F.one_class()) && (k <= 2 || c.norm_contains(2, 1))) return yes(T + "(2)(a)");
        if (c.dpm_is(1, F.delta_class()) && c.norm_contains(2, 1)) return yes(T + "(2)(b)");
    }
    if (d1 == k && c.dim(2) >= 2 && c.sn_is(2, 0)) {
        if (c.dim(2) >= 3) return yes(T + "(3)(a)");
        if (c.dim(2) == 2 && c.sn_is(3, 1)) return yes(T + "(3)(b)");
        if (c.dim(2) == 2 && !c.dpm_trivial_or_delta(2) && c.norm_is(3, 2)) return yes(T + "(3)(c)");
    }
    if (d1 == k && c.dim(2) == 1 && c.sn_is(2, 0) && c.sn_is(3, 1)) {
        if (c.dim(3) >= 2) return yes(T + "(4)(a)");
        if (c.dim(3) == 1 && c.norm_contains(4, 3)) return yes(T + "(4)(b)");
    }
    return no(T + ": no condition holds");
}

ClassifyVerdict odd_k(const JordanLattice& L, int k, const Field& F) {
    const Chain c(L, F);
    if (!c.norm_is(1, 0)) return no("gate: 𝔫(L₁) ≠ O_F");
    if (!c.scale_is(1, -1)) return no("gate: 𝔰(L₁) ≠ 2⁻¹O_F");
    const std::string T = "Thm6.10";
    const int d1 = c.dim(1);
    if (d1 >= k + 3) return yes(T + "(1)");
    if (d1 == k + 1) {
        if (c.dim(2) >= 2 && c.norm_contains(2, 1)) return yes(T + "(2)(a)");
        if (c.dim(2) == 1 && c.sn_is(2, 0) && c.norm_contains(3, 2)) return yes(T + "(2)(b)");
        if (c.dim(2) == 1 && c.sn_is(2, 1) && c.norm_contains(3, 3)) return yes(T + "(2)(c)");
    }
    if (d1 == k - 1 && c.sn_is(2, 0)) {
        if (c.dim(2) >= 4) return yes(T + "(3)(a)");
        if (c.dim(2) == 3 && c.norm_contains(3, 2)) return yes(T + "(3)(b)");
        if (c.dim(2) == 2 && c.dim(3) >= 2 && c.sn_is(3, 1)) return yes(T + "(3)(c)");
        if (c.dim(2) == 2 && c.dim(3) == 1 && c.sn_is(3, 1) && c.norm_contains(4, 3)) return yes(T + "(3)(d)");
    }
    if (d1 == k - 1 && c.dim(2) == 1 && c.sn_is(2, 0) && c.sn_is(3, 1)) {
        if (c.dim(3) >= 3) return yes(T + "(4)(a)");
        if (c.dim(3) == 2 && c.sn_is(4, 2)) return yes(T + "(4)(b)");
        if (c.dim(3) == 1 && c.dim(4) >= 2 && c.sn_is(4, 2)) return yes(T + "(4)(c)");
        if (c.dim(3) == 1 && c.dim(4) == 1 && c.sn_is(4, 2) && c.sn_is(5, 3)) return yes(T + "(4)(d)");
    }
    return no(T + ": no condition holds");
}

ClassifyVerdict classic_even_k(const JordanLattice& L, int k, const Field& F) {
    const Chain c(L, F);
    if (!c.sn_is(1, 0)) return no("gate: 𝔰(L₁) = 𝔫(L₁) = O_F fails");
    const std::string T = "Thm1.4";
    const int d1 = c.dim(1);
    if (d1 >= k + 3) return yes(T + "(1)");
    if (d1 == k + 2 && c.sn_is(2, 1)) return yes(T + "(2)");
    if (d1 == k + 2 && !c.dpm_trivial_or_delta(1) && c.norm_is(2, 2)) return yes(T + "(3)");
    if (d1 == k + 1 && c.dim(2) >= 2 && c.sn_is(2, 1)) return yes(T + "(4)");
    if (d1 == k + 1 && c.dim(2) == 1 && c.sn_is(2, 1) && c.norm_contains(3, 3)) return yes(T + "(5)");
    return no(T + ": no condition holds");
}

ClassifyVerdict classic_odd_k(const JordanLattice& L, int k, const Field& F) {
    const Chain c(L, F);
    if (!c.sn_is(1, 0)) return no("gate: 𝔰(L₁) = 𝔫(L₁) = O_F fails");
    const std::string T = "Thm6.16";
    const int d1 = c.dim(1);
    if (d1 >= k + 3) return yes(T + "(1)");
    if (d1 == k + 2 && c.norm_contains(2, 2)) return yes(T + "(2)");
    if (d1 == k + 1 && c.sn_is(2, 1)) {
        if (c.dim(2) >= 2) return yes(T + "(3)(a)");
        if (c.dim(2) == 1 && c.norm_contains(3, 3)) return yes(T + "(3)(b)");
    }
    if (d1 == k && c.sn_is(2, 1)) {
        if (c.dim(2) >= 3) return yes(T + "(4)(a)");
        if (c.dim(2) == 2 && c.sn_is(3, 2)) return yes(T + "(4)(b)");
        if (c.dim(2) == 1 && c.dim(3) >= 2 && c.sn_is(3, 2)) return yes(T + "(4)(c)");
        if (c.dim(2) == 1 && c.dim(3) == 1 && c.sn_is(3, 2) && c.sn_is(4, 3)) return yes(T + "(4)(d)");
    }
    return no(T + ": no condition holds");
}

}  // namespace

ClassifyVerdict classify_k_universal(const JordanLattice& L, int k, const Field& F) {
    if (k < 1) throw DomainError("k must be positive");
    require_integral(L);
    if (k == 1) return classify_universal(L, F);
    return k % 2 == 0 ? even_k(L, k, F) : odd_k(L, k, F);
}

ClassifyVerdict classify_classic_k_universal(const JordanLattice& L, int k, const Field& F) {
    if (k < 1) throw DomainError("k must be positive");
    require_classic(L);
    if (k == 1) return classify_classic_universal(L, F);
    return k % 2 == 0 ? classic_even_k(L, k, F) : classic_odd_k(L, k, F);
}

ClassifyVerdict classify(const JordanLattice& L, int k, bool classic, const Field& F) {
    return classic ? classify_classic_k_universal(L, k, F) : classify_k_universal(L, k, F);
}

}  // namespace dyadic
