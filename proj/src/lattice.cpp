#include "dyadic/lattice.hpp"

#include <algorithm>
#include <bit>
#include <climits>

namespace dyadic {

JordanComponent JordanComponent::make_proper(int scale, std::vector<SquareClass> diag) {
    JordanComponent c;
    c.scale_exp = scale;
    c.dim = static_cast<int>(diag.size());
    c.proper = true;
    std::sort(diag.begin(), diag.end());
    c.diag = std::move(diag);
    return c;
}

JordanComponent JordanComponent::make_improper(int scale, int m, ImproperType type) {
    JordanComponent c;
    c.scale_exp = scale;
    c.dim = 2 * m;
    c.proper = false;
    c.type = type;
    return c;
}

JordanLattice::JordanLattice(std::vector<JordanComponent> comps, const Field& F) : comps_(std::move(comps)) {
    for (std::size_t r = 0; r < comps_.size(); ++r) {
        JordanComponent& c = comps_[r];
        if (r > 0 && comps_[r - 1].scale_exp >= c.scale_exp)
            throw DomainError("Jordan component scales must be strictly increasing");
        if (c.proper) {
            if (c.diag.empty()) throw DomainError("proper component with empty diagonal");
            if (static_cast<int>(c.diag.size()) != c.dim) throw DomainError("proper component dimension mismatch");
            for (SquareClass e : c.diag)
                if (e.parity != 0 || e.unit < 0 || e.unit >= F.num_unit_classes())
                    throw DomainError("proper component diagonal entries must be units");
            std::sort(c.diag.begin(), c.diag.end());
        } else {
            if (c.dim < 2 || c.dim % 2) throw DomainError("improper component must have positive even dimension");
            c.diag.clear();
        }
    }
}

int JordanLattice::dim() const {
    int d = 0;
    for (const auto& c : comps_) d += c.dim;
    return d;
}

const JordanComponent* JordanLattice::comp(int r) const {
    if (r < 1 || r > size()) return nullptr;
    return &comps_[r - 1];
}

JordanLattice lattice_from_jordan(std::vector<JordanComponent> comps, const Field& F) {
    return JordanLattice(std::move(comps), F);
}

GramMatrix A_lattice(const FieldElt& alpha, const FieldElt& beta, int scale, const Field& F) {
    if (!F.is_integral(alpha) || !F.is_integral(beta)) throw DomainError("A(alpha, beta) needs integral alpha, beta");
    GramMatrix G{2, {F.mul_pow2(alpha, scale), F.mul_pow2(F.one(), scale), F.mul_pow2(F.one(), scale),
                     F.mul_pow2(beta, scale)}};
    return G;
}

GramMatrix gram_of(const JordanLattice& L, const Field& F) {
    const int n = L.dim();
    GramMatrix G{n, std::vector<FieldElt>(static_cast<std::size_t>(n) * n)};
    int pos = 0;
    auto place_block = [&](const GramMatrix& B) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) G.at(pos + i, pos + j) = B.at(i, j);
        pos += 2;
    };
    for (const auto& c : L.components()) {
        if (c.proper) {
            for (SquareClass e : c.diag) {
                G.at(pos, pos) = F.mul_pow2(F.representative(e), c.scale_exp);
                ++pos;
            }
            continue;
        }
        const int plain = c.type == ImproperType::plain ? c.half_dim() : c.half_dim() - 1;
        for (int i = 0; i < plain; ++i) place_block(A_lattice(F.zero(), F.zero(), c.scale_exp, F));
        if (c.type == ImproperType::delta)
            place_block(A_lattice(F.from_int(2), F.mul_pow2(F.rho(), 1), c.scale_exp, F));
    }
    return G;
}

namespace {

struct Block {
    int val;        // valuation in the integralized matrix
    bool improper;
    FieldElt entry;  // 1x1 entry, or -det for a 2x2 block
};

// The reduction runs in the widest field on signed representatives of the input;
// only the low F.precision() bits of each entry are trusted.
// Entries that passed through denominators up to 2^B may have lost B top bits,
// so they are compared modulo 2^(N - 2B).
bool agree(const FieldElt& a, const FieldElt& b, int B, const Field& F) {
    const FieldElt d = F.sub(a, b);
    return F.is_zero(d) || *F.valuation(d) >= F.precision() - 2 * B;
}

int low_bits(const FieldElt& x, const Field& W) {
    int w = 64;
    for (int i = 0; i < W.degree(); ++i)
        if (x.coeffs[i] != 0) w = std::min(w, std::countr_zero(x.coeffs[i]));
    return w;
}

}  // namespace

JordanLattice jordan_split(const GramMatrix& G, const Field& F) {
    const int n = G.n;
    if (n < 0 || static_cast<int>(G.entries.size()) != n * n) throw DomainError("malformed Gram matrix");
    const Field& W = Field::wide(F.degree());
    int B = 0;
    for (const auto& e : G.entries) B = std::max(B, e.den_exp);
    if (B > 8) throw DomainError("Gram entries with denominators beyond 2^8 are not supported");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (!agree(G.at(i, j), G.at(j, i), B, F))
                throw DomainError("Gram matrix is not symmetric: " + F.format(G.at(i, j)) + " vs " + F.format(G.at(j, i)));

    std::vector<FieldElt> M(G.entries.size());
    for (std::size_t k = 0; k < M.size(); ++k) M[k] = W.mul_pow2(W.lift(G.entries[k], F), B);
    auto at = [&](int i, int j) -> FieldElt& { return M[i * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) at(i, j) = at(j, i);

    const int known = F.precision() - B;  // entries of M are exact modulo 2^known
    int wide = Field::kWidePrecision;     // bits of W still meaningful after divisions
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;
    std::vector<Block> blocks;

    while (!active.empty()) {
        int vd = INT_MAX, pd = -1, vo = INT_MAX, pi = -1, pj = -1;
        for (std::size_t a = 0; a < active.size(); ++a) {
            const int i = active[a];
            if (!W.is_zero(at(i, i))) {
                const int v = low_bits(at(i, i), W);
                if (v < std::min(known, wide) && v < vd) vd = v, pd = i;
            }
            for (std::size_t b = a + 1; b < active.size(); ++b) {
                const int j = active[b];
                if (W.is_zero(at(i, j))) continue;
                const int v = low_bits(at(i, j), W);
                if (v < std::min(known, wide) && v < vo) vo = v, pi = i, pj = j;
            }
        }
        if (pd < 0 && pi < 0) throw PrecisionError("Gram matrix is singular or precision is exhausted");

        std::vector<int> rest;
        if (pd >= 0 && vd <= vo) {
            if (vd + 3 > std::min(known, wide)) throw PrecisionError("cannot certify the square class of a pivot");
            const FieldElt piv = at(pd, pd);
            blocks.push_back({vd, false, piv});
            const FieldElt uinv = W.unit_inverse(W.unit_part(piv));
            for (int r : active)
                if (r != pd) rest.push_back(r);
            std::vector<FieldElt> coef(n);
            for (int r : rest) coef[r] = W.mul(W.mul_pow2(at(r, pd), -vd), uinv);
            for (int r : rest)
                for (int k : rest) at(r, k) = W.sub(at(r, k), W.mul(coef[r], at(pd, k)));
        } else {
            const FieldElt a = at(pi, pi), b = at(pi, pj), d = at(pj, pj);
            const FieldElt det = W.sub(W.mul(a, d), W.mul(b, b));
            if (vo + 3 > std::min(known, wide)) throw PrecisionError("cannot certify the discriminant of an improper block");
            blocks.push_back({vo, true, W.neg(det)});
            const FieldElt dinv = W.unit_inverse(W.mul_pow2(det, -2 * vo));
            for (int r : active)
                if (r != pi && r != pj) rest.push_back(r);
            std::vector<FieldElt> c1(n), c2(n);
            for (int r : rest) {
                const FieldElt x = at(r, pi), y = at(r, pj);
                c1[r] = W.mul(W.mul_pow2(W.sub(W.mul(x, d), W.mul(y, b)), -2 * vo), dinv);
                c2[r] = W.mul(W.mul_pow2(W.sub(W.mul(y, a), W.mul(x, b)), -2 * vo), dinv);
            }
            for (int r : rest)
                for (int k : rest)
                    at(r, k) = W.sub(at(r, k), W.add(W.mul(c1[r], at(pi, k)), W.mul(c2[r], at(pj, k))));
            wide -= vo;
        }
        active = std::move(rest);
    }

    std::vector<JordanComponent> comps;
    for (std::size_t s = 0; s < blocks.size();) {
        std::size_t e = s;
        while (e < blocks.size() && blocks[e].val == blocks[s].val) ++e;
        const int v = blocks[s].val;
        bool any_proper = false;
        SpaceInv span;
        SquareClass improper_disc = F.one_class();
        int dim = 0, m = 0;
        std::vector<SquareClass> diag;
        for (std::size_t k = s; k < e; ++k) {
            const Block& b = blocks[k];
            if (!b.improper) {
                any_proper = true;
                const SquareClass c = W.square_class(b.entry);
                diag.push_back({0, c.unit});
                span = orthogonal_sum(span, space_from_classes({c}, W), W);
                ++dim;
                continue;
            }
            const SquareClass nd = W.square_class(W.mul_pow2(b.entry, -2 * v));
            improper_disc = W.mul(improper_disc, nd);
            SpaceInv bs;
            if (nd == W.one_class()) {
                bs = hyperbolic(1, W);
            } else if (nd == W.delta_class()) {
                const SquareClass t = W.pow2_class(v + 1);
                bs = space_from_classes({t, W.mul(t, W.mul(W.minus_one_class(), W.delta_class()))}, W);
            } else {
                throw std::logic_error("improper block with unexpected discriminant");
            }
            span = orthogonal_sum(span, bs, W);
            dim += 2;
            ++m;
        }
        const int scale = v - B;
        if (!any_proper) {
            comps.push_back(JordanComponent::make_improper(
                scale, m, improper_disc == W.one_class() ? ImproperType::plain : ImproperType::delta));
        } else {
            if (m > 0) {
                diag = unit_diagonal_realization(scale_space(span, W.pow2_class(v), W), W);
                if (diag.empty()) throw DomainError("proper modular component without a unit diagonal");
            }
            comps.push_back(JordanComponent::make_proper(scale, diag));
        }
        s = e;
    }
    return JordanLattice(std::move(comps), F);
}

IdealExp norm_ideal(const JordanLattice& L) {
    if (L.empty()) return IdealExp::zero();
    return IdealExp::power(L.components().front().norm_exp());
}

IdealExp scale_ideal(const JordanLattice& L) {
    if (L.empty()) return IdealExp::zero();
    return IdealExp::power(L.components().front().scale_exp);
}

bool is_integral(const JordanLattice& L) { return norm_ideal(L).contained_in(IdealExp::power(0)); }
bool is_classic(const JordanLattice& L) { return scale_ideal(L).contained_in(IdealExp::power(0)); }

JordanLattice sublattice(const JordanLattice& L, int i, SubKind kind) {
    std::vector<JordanComponent> out;
    for (const auto& c : L.components()) {
        bool keep = false;
        switch (kind) {
        case SubKind::le: keep = c.scale_exp <= i; break;
        case SubKind::paren: keep = c.norm_exp() <= i; break;
        case SubKind::bracket: keep = c.scale_exp <= i || (c.scale_exp == i + 1 && !c.proper); break;
        }
        if (keep) out.push_back(c);
    }
    return JordanLattice::unchecked(std::move(out));
}

bool has_proper_component(const JordanLattice& L, int scale) {
    for (const auto& c : L.components())
        if (c.proper && c.scale_exp == scale) return true;
    return false;
}

IdealExp fd_ideal(const JordanLattice& L, int i) {
    int e = 0;
    bool any = false;
    for (const auto& c : L.components())
        if (c.scale_exp <= i) {
            e += c.scale_exp * c.dim;
            any = true;
        }
    return any ? IdealExp::power(e) : IdealExp::zero();
}

IdealExp delta_ideal(const JordanLattice& L, int i) {
    if (has_proper_component(L, i + 1)) return IdealExp::power(i + 1);
    if (has_proper_component(L, i + 2)) return IdealExp::power(i + 2);
    return IdealExp::zero();
}

SpaceInv component_space(const JordanComponent& c, const Field& F) {
    if (c.proper) {
        std::vector<SquareClass> cls;
        for (SquareClass e : c.diag) cls.push_back(F.mul(e, F.pow2_class(c.scale_exp)));
        return space_from_classes(cls, F);
    }
    if (c.type == ImproperType::plain) return hyperbolic(c.half_dim(), F);
    // 2^s A(2, 2rho) spans <2^(s+1), -2^(s+1) Delta>.
    const SquareClass t = F.pow2_class(c.scale_exp + 1);
    const SpaceInv tail = space_from_classes({t, F.mul(t, F.mul(F.minus_one_class(), F.delta_class()))}, F);
    return orthogonal_sum(hyperbolic(c.half_dim() - 1, F), tail, F);
}

SpaceInv space_of(const JordanLattice& L, const Field& F) {
    SpaceInv V;
    for (const auto& c : L.components()) V = orthogonal_sum(V, component_space(c, F), F);
    return V;
}

std::vector<ComponentInvariant> invariant_data(const JordanLattice& L, const Field& F) {
    std::vector<ComponentInvariant> out;
    for (const auto& c : L.components()) out.push_back({c.scale_exp, c.dim, c.proper, component_space(c, F)});
    return out;
}

std::string describe(const JordanLattice& L, const Field& F) {
    std::string out;
    for (const auto& c : L.components()) {
        out += "[" + std::to_string(c.scale_exp) + ":";
        if (c.proper) {
            out += "P<";
            // entries with several coefficients are bracketed to keep the list unambiguous
            for (std::size_t k = 0; k < c.diag.size(); ++k) {
                const std::string e = F.format(c.diag[k]);
                out += (k ? "," : "") + (e.find(',') == std::string::npos ? e : "(" + e + ")");
            }
            out += ">";
        } else {
            out += "I" + std::to_string(c.half_dim()) + (c.type == ImproperType::plain ? "p" : "d");
        }
        out += "]";
    }
    return out.empty() ? "0" : out;
}

}  // namespace dyadic
