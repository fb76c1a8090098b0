#include "dyadic/quad_space.hpp"

namespace dyadic {

SpaceInv space_from_classes(const std::vector<SquareClass>& entries, const Field& F) {
    SpaceInv V;
    for (SquareClass a : entries) {
        V.hasse *= F.hilbert(V.disc, a);
        V.disc = F.mul(V.disc, a);
        ++V.dim;
    }
    return V;
}

SpaceInv space_from_diagonal(const std::vector<FieldElt>& entries, const Field& F) {
    std::vector<SquareClass> cls;
    cls.reserve(entries.size());
    for (const auto& e : entries) {
        if (F.is_zero(e)) throw DomainError("zero diagonal entry: singular space");
        cls.push_back(F.square_class(e));
    }
    return space_from_classes(cls, F);
}

SpaceInv hyperbolic(int m, const Field& F) {
    SpaceInv V;
    const SpaceInv H = space_from_classes({F.one_class(), F.minus_one_class()}, F);
    for (int i = 0; i < m; ++i) V = orthogonal_sum(V, H, F);
    return V;
}

SpaceInv orthogonal_sum(const SpaceInv& U, const SpaceInv& V, const Field& F) {
    return {U.dim + V.dim, F.mul(U.disc, V.disc), U.hasse * V.hasse * F.hilbert(U.disc, V.disc)};
}

SquareClass signed_disc(const SpaceInv& V, const Field& F) {
    if (V.dim < 1) throw DomainError("signed discriminant of the zero space");
    const int n = V.dim;
    return ((n * (n - 1) / 2) % 2) ? F.mul(V.disc, F.minus_one_class()) : V.disc;
}

SpaceInv scale_space(const SpaceInv& V, SquareClass c, const Field& F) {
    const int n = V.dim;
    SpaceInv W = V;
    if (n % 2) W.disc = F.mul(V.disc, c);
    if ((n * (n - 1) / 2) % 2) W.hasse *= F.hilbert(c, c);
    if ((n - 1) % 2 && n > 0) W.hasse *= F.hilbert(c, V.disc);
    return W;
}

SpaceInv scale_space(const SpaceInv& V, const FieldElt& c, const Field& F) {
    if (F.is_zero(c)) throw DomainError("scaling a space by zero");
    return scale_space(V, F.square_class(c), F);
}

bool is_isotropic(const SpaceInv& V, const Field& F) {
    switch (V.dim) {
    case 0:
    case 1:
        return false;
    case 2:
        return V.disc == F.minus_one_class();
    case 3:
        return V.hasse == F.hilbert(F.minus_one_class(), F.mul(F.minus_one_class(), V.disc));
    case 4:
        return V.disc != F.one_class() ||
               V.hasse == F.hilbert(F.minus_one_class(), F.minus_one_class());
    default:
        return true;
    }
}

WittDecomposition witt_decompose(const SpaceInv& V, const Field& F) {
    WittDecomposition out{0, V};
    while (is_isotropic(out.kernel, F)) {
        // V = H ⊥ V'  =>  d(V') = -d(V), hasse(V') = hasse(V) (-1, d(V'))
        SpaceInv& K = out.kernel;
        K.dim -= 2;
        K.disc = F.mul(K.disc, F.minus_one_class());
        K.hasse *= F.hilbert(F.minus_one_class(), K.disc);
        ++out.witt_index;
    }
    return out;
}

bool is_realizable(const SpaceInv& V, const Field& F) {
    if (V.dim < 0) return false;
    if (V.dim == 0) return V.disc == F.one_class() && V.hasse == 1;
    if (V.dim == 1) return V.hasse == 1;
    if (V.dim == 2) return !(V.disc == F.minus_one_class() && V.hasse != 1);
    return true;
}

bool represents_element(const SpaceInv& V, SquareClass c, const Field& F) {
    if (V.dim < 1) return false;
    const SpaceInv W = orthogonal_sum(V, space_from_classes({F.mul(c, F.minus_one_class())}, F), F);
    return is_isotropic(W, F);
}

bool represents_element(const SpaceInv& V, const FieldElt& c, const Field& F) {
    if (F.is_zero(c)) throw DomainError("represents_element of zero");
    return represents_element(V, F.square_class(c), F);
}

bool represents_ideal(const SpaceInv& V, const IdealExp& I, const Field& F) {
    if (I.is_zero()) return true;
    const int parity = ((I.exp() % 2) + 2) % 2;
    for (int u = 0; u < F.num_unit_classes(); ++u)
        if (represents_element(V, SquareClass{parity, u}, F)) return true;
    return false;
}

bool represents_space(const SpaceInv& U, const SpaceInv& V, const Field& F) {
    if (U.dim == 0) return true;
    if (U.dim > V.dim) return false;
    const SpaceInv W = orthogonal_sum(V, scale_space(U, F.minus_one_class(), F), F);
    return witt_decompose(W, F).witt_index >= U.dim;
}

SpaceInv complement(const SpaceInv& U, const SpaceInv& V, const Field& F) {
    if (!represents_space(U, V, F)) throw DomainError("complement: U is not represented by V");
    const SquareClass d = F.mul(U.disc, V.disc);
    return {V.dim - U.dim, d, V.hasse * U.hasse * F.hilbert(U.disc, d)};
}

namespace {

std::vector<SquareClass> realize(const SpaceInv& V, const Field& F, bool units_only) {
    if (V.dim < 1) throw DomainError("diagonal realization of the zero space");
    if (!is_realizable(V, F)) throw DomainError("invariant triple is not realizable");
    const std::vector<SquareClass> pool = units_only ? F.unit_classes() : F.square_class_reps();
    const int tail = std::min(V.dim, 3);
    std::vector<SquareClass> head(V.dim - tail, F.one_class());
    const SpaceInv H = space_from_classes(head, F);
    std::vector<SquareClass> pick(tail);
    const std::size_t n = pool.size();
    std::size_t total = 1;
    for (int i = 0; i < tail; ++i) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int i = 0; i < tail; ++i) {
            pick[i] = pool[c % n];
            c /= n;
        }
        if (orthogonal_sum(H, space_from_classes(pick, F), F) == V) {
            std::vector<SquareClass> out = head;
            out.insert(out.end(), pick.begin(), pick.end());
            return out;
        }
    }
    return {};
}

}  // namespace

std::vector<SquareClass> diagonal_realization(const SpaceInv& V, const Field& F) {
    auto out = realize(V, F, false);
    if (out.empty()) throw DomainError("no diagonal form found for the invariant triple");
    return out;
}

std::vector<SquareClass> unit_diagonal_realization(const SpaceInv& V, const Field& F) {
    if (V.disc.parity != 0 || !is_realizable(V, F)) return {};
    return realize(V, F, true);
}

}  // namespace dyadic
