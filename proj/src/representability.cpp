#include "dyadic/representability.hpp"

#include <algorithm>

namespace dyadic {

std::string to_string(RepValue v) {
    switch (v) {
    case RepValue::Represented: return "Represented";
    case RepValue::NotRepresented: return "NotRepresented";
    case RepValue::Unknown: return "Unknown";
    }
    return "Unknown";
}

LatticeProfile::LatticeProfile(const JordanLattice& L, const Field& F) : lat_(L) {
    for (const auto& c : L.components()) spaces_.push_back(component_space(c, F));
}

namespace {

RepVerdict fail(const std::string& clause, int i) {
    return {RepValue::NotRepresented, clause + "@i=" + std::to_string(i), 0, 0, {}};
}

struct Window {
    int lo, hi;
};

Window window_of(const JordanLattice& l, const JordanLattice& L) {
    int lo = 0, hi = 0;
    bool any = false;
    for (const auto* X : {&l, &L})
        for (const auto& c : X->components()) {
            lo = any ? std::min(lo, c.scale_exp) : c.scale_exp;
            hi = any ? std::max(hi, c.scale_exp) : c.scale_exp;
            any = true;
        }
    return {lo - 3, hi + 3};
}

int dim_le(const JordanLattice& L, int i) {
    int d = 0;
    for (const auto& c : L.components())
        if (c.scale_exp <= i) d += c.dim;
    return d;
}

template <class Pred>
SpaceInv span_where(const LatticeProfile& P, const Field& F, Pred keep) {
    SpaceInv V;
    const auto& comps = P.lattice().components();
    for (std::size_t r = 0; r < comps.size(); ++r)
        if (keep(comps[r])) V = orthogonal_sum(V, P.spaces()[r], F);
    return V;
}

SpaceInv span_le(const LatticeProfile& P, int i, const Field& F) {
    return span_where(P, F, [i](const JordanComponent& c) { return c.scale_exp <= i; });
}
SpaceInv span_paren(const LatticeProfile& P, int i, const Field& F) {
    return span_where(P, F, [i](const JordanComponent& c) { return c.norm_exp() <= i; });
}
SpaceInv span_bracket(const LatticeProfile& P, int i, const Field& F) {
    return span_where(P, F, [i](const JordanComponent& c) {
        return c.scale_exp <= i || (c.scale_exp == i + 1 && !c.proper);
    });
}

// C represents 2^i or 2^i Delta.
bool represents_twist(const SpaceInv& C, int i, const Field& F) {
    const SquareClass t = F.pow2_class(i);
    return represents_element(C, t, F) || represents_element(C, F.mul(t, F.delta_class()), F);
}

}  // namespace

RepVerdict lower_type(const LatticeProfile& lp, const LatticeProfile& Lp, const Field&) {
    const JordanLattice& l = lp.lattice();
    const JordanLattice& L = Lp.lattice();
    const Window w = window_of(l, L);
    for (int i = w.lo; i <= w.hi; ++i) {
        const int dl = dim_le(l, i);
        const int dL = dim_le(L, i);
        if (dl > dL) return fail("Def3.2(1)", i);
        int ord = 0;
        if (dl > 0 && dL > 0) ord = fd_ideal(l, i).exp() + fd_ideal(L, i).exp();
        const int parity = ((ord % 2) + 2) % 2;
        if (dl == dL && dl > 0 && parity != 0) return fail("Def3.2(2)", i);
        if (dl == dL) {
            if (has_proper_component(l, i + 1) && !has_proper_component(L, i + 1)) return fail("Def3.2(3)(a)", i);
            if (has_proper_component(L, i) && !has_proper_component(l, i)) return fail("Def3.2(3)(b)", i);
        }
        if (dl == dL - 1 && dl > 0) {
            const int ip = ((i % 2) + 2) % 2;
            if (parity == (ip ^ 1) && has_proper_component(L, i) && !has_proper_component(l, i))
                return fail("Def3.2(4)(a)", i);
            if (parity == ip && has_proper_component(l, i + 1) && !has_proper_component(L, i + 1))
                return fail("Def3.2(4)(b)", i);
        }
    }
    return {RepValue::Represented, "", 0, 0, {}};
}

RepVerdict represents_lattice(const LatticeProfile& lp, const LatticeProfile& Lp, const Field& F) {
    RepVerdict lt = lower_type(lp, Lp, F);
    if (!lt.represented()) return lt;
    const JordanLattice& l = lp.lattice();
    const JordanLattice& L = Lp.lattice();
    const Window w = window_of(l, L);
    for (int i = w.lo; i <= w.hi; ++i) {
        const IdealExp dl = delta_ideal(l, i);
        const IdealExp dL = delta_ideal(L, i);
        const SpaceInv lb = span_bracket(lp, i, F);

        // (1) and (2)
        {
            const SpaceInv V = span_paren(Lp, i + 2, F);
            if (!represents_space(lb, V, F)) return fail("Thm3.4(1)", i);
            const SpaceInv C = complement(lb, V, F);
            if (!represents_ideal(C, dl, F) || !represents_ideal(C, dL, F)) return fail("Thm3.4(1)", i);
            if (C == hyperbolic(1, F) && !(dl * dL).contained_in(dl * dl)) return fail("Thm3.4(2)", i);
        }
        const SpaceInv twist = space_from_classes({F.pow2_class(i)}, F);
        // (3)
        {
            const SpaceInv U = span_le(lp, i, F);
            const SpaceInv V = orthogonal_sum(span_paren(Lp, i + 1, F), twist, F);
            if (!represents_space(U, V, F)) return fail("Thm3.4(3)", i);
            if (!represents_twist(complement(U, V, F), i, F)) return fail("Thm3.4(3)", i);
        }
        // (4)
        {
            const SpaceInv V = orthogonal_sum(span_le(Lp, i + 1, F), twist, F);
            if (!represents_space(lb, V, F)) return fail("Thm3.4(4)", i);
            if (!represents_twist(complement(lb, V, F), i, F)) return fail("Thm3.4(4)", i);
        }
    }
    return {RepValue::Represented, "", 0, 0, {}};
}

RepVerdict lower_type(const JordanLattice& l, const JordanLattice& L, const Field& F) {
    return lower_type(LatticeProfile(l, F), LatticeProfile(L, F), F);
}

RepVerdict represents_lattice(const JordanLattice& l, const JordanLattice& L, const Field& F) {
    return represents_lattice(LatticeProfile(l, F), LatticeProfile(L, F), F);
}

}  // namespace dyadic
