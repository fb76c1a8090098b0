// Helpers shared by the unit tests and the acceptance binary.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "dyadic/universality.hpp"

namespace dyadic::testing {

// Primitive zero of sum a_i x_i^2 over Z_2, decided modulo 32. All a_i must have
// valuation <= 1; then some partial derivative has valuation <= 2 at a primitive
// point, and a zero modulo 2^5 lifts.
inline bool isotropic_mod32(const std::vector<std::int64_t>& a) {
    const int n = static_cast<int>(a.size());
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 32;
    for (std::int64_t code = 1; code < total; ++code) {
        std::int64_t c = code;
        bool primitive = false;
        std::int64_t q = 0;
        for (int i = 0; i < n; ++i) {
            const std::int64_t x = c % 32;
            c /= 32;
            if (x & 1) primitive = true;
            q += a[i] * x * x;
        }
        if (primitive && q % 32 == 0) return true;
    }
    return false;
}

/// Representative of a class of Q_2 as a small integer.
inline std::int64_t rep_int(const Field& F, SquareClass c) {
    return F.signed_coeff(F.representative(c).coeffs[0]);
}

/// Random lattice with Jordan scales in [scale_min, scale_max].
inline JordanLattice random_lattice(std::mt19937_64& rng, const Field& F, int max_components = 3,
                                    int scale_min = -1, int scale_max = 4, int max_comp_dim = 3) {
    std::vector<JordanComponent> comps;
    const auto units = F.unit_classes();
    const int count = std::uniform_int_distribution<int>(1, max_components)(rng);
    std::vector<int> scales;
    for (int s = scale_min; s <= scale_max; ++s) scales.push_back(s);
    std::shuffle(scales.begin(), scales.end(), rng);
    scales.resize(std::min<std::size_t>(count, scales.size()));
    std::sort(scales.begin(), scales.end());
    for (int s : scales) {
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
            const int m = std::uniform_int_distribution<int>(1, std::max(1, max_comp_dim / 2))(rng);
            comps.push_back(JordanComponent::make_improper(
                s, m, std::uniform_int_distribution<int>(0, 1)(rng) ? ImproperType::delta : ImproperType::plain));
        } else {
            const int d = std::uniform_int_distribution<int>(1, max_comp_dim)(rng);
            std::vector<SquareClass> diag;
            for (int i = 0; i < d; ++i)
                diag.push_back(units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)]);
            comps.push_back(JordanComponent::make_proper(s, std::move(diag)));
        }
    }
    return JordanLattice(std::move(comps), F);
}

/// Random nonsingular symmetric integral Gram matrix over Z_2 with entry valuations <= max_val.
inline GramMatrix random_gram(std::mt19937_64& rng, int n, int max_val, const Field& F) {
    std::uniform_int_distribution<int> val(0, max_val + 1), odd(0, 3);
    for (;;) {
        GramMatrix G{n, std::vector<FieldElt>(n * n)};
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const int v = val(rng);
                const std::int64_t x = v > max_val ? 0 : (std::int64_t{2 * odd(rng) + 1} << v);
                G.at(i, j) = G.at(j, i) = F.from_int(x);
            }
        try {
            jordan_split(G, F);
            return G;
        } catch (const DomainError&) {
        }
    }
}

// Closed-form conditions equivalent to "every test lattice of dimension k has a
// lower type than L". The zero lattice stands in for absent components.
namespace lower {

inline bool is_comp(const JordanLattice& L, int r, int scale, bool proper) {
    const JordanComponent* c = L.comp(r);
    return c && c->scale_exp == scale && c->proper == proper;
}
inline int dim(const JordanLattice& L, int r) { return L.comp(r) ? L.comp(r)->dim : 0; }

/// Units <e> and <2e>: n(L_1) = O, and dim L_1 = 1 forces s(L_2) = 2O.
inline bool unary(const JordanLattice& L) {
    const JordanComponent* c = L.comp(1);
    if (!c || c->norm_exp() != 0) return false;
    return c->dim != 1 || (L.comp(2) && L.comp(2)->scale_exp == 1);
}

/// Dominant lattices, k even, as the closed form is usually stated: dim L_1 = k forces 2O ⊆ s(L_2).
inline bool dominant_even(const JordanLattice& L, int k) {
    if (!is_comp(L, 1, -1, false) || dim(L, 1) < k) return false;
    return dim(L, 1) != k || (L.comp(2) && L.comp(2)->scale_exp <= 1);
}

/// The shape where the stated form is too generous: <e> + <2e'> fails clause (4)(b) at i = 0
/// unless the 2-modular component of L is proper.
inline bool dominant_even_gap(const JordanLattice& L, int k) {
    return is_comp(L, 1, -1, false) && dim(L, 1) == k && is_comp(L, 2, 1, false);
}

/// Dominant lattices, k even, with the gap removed.
inline bool dominant_even_exact(const JordanLattice& L, int k) {
    return dominant_even(L, k) && !dominant_even_gap(L, k);
}

/// Dominant lattices, k odd.
inline bool dominant_odd(const JordanLattice& L, int k) {
    if (!is_comp(L, 1, -1, false)) return false;
    if (dim(L, 1) >= k + 1) return true;
    if (dim(L, 1) != k - 1 || !is_comp(L, 2, 0, true)) return false;
    if (dim(L, 2) >= 2) return true;
    return is_comp(L, 3, 1, true);
}

/// Classic basic lattices, k even.
inline bool classic_even(const JordanLattice& L, int k) { return is_comp(L, 1, 0, true) && dim(L, 1) >= k + 1; }

/// Classic basic lattices, k odd.
inline bool classic_odd(const JordanLattice& L, int k) {
    if (!is_comp(L, 1, 0, true) || dim(L, 1) < k) return false;
    return dim(L, 1) != k || is_comp(L, 2, 1, true);
}

/// The closed forms as stated; exact = true swaps in dominant_even_exact.
inline bool closed_form(const JordanLattice& L, int k, bool classic, bool exact = false) {
    if (classic) return k % 2 == 0 ? classic_even(L, k) : classic_odd(L, k);
    if (k % 2 == 1) return dominant_odd(L, k);
    return exact ? dominant_even_exact(L, k) : dominant_even(L, k);
}

inline bool all_tests_lower(const JordanLattice& L, const std::vector<LatticeProfile>& tests, const Field& F) {
    const LatticeProfile P(L, F);
    for (const auto& t : tests)
        if (!lower_type(t, P, F).represented()) return false;
    return true;
}

inline std::vector<LatticeProfile> profiles(const std::vector<JordanLattice>& ls, const Field& F) {
    std::vector<LatticeProfile> out;
    for (const auto& l : ls) out.emplace_back(l, F);
    return out;
}

}  // namespace lower

}  // namespace dyadic::testing
