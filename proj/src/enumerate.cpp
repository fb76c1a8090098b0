#include <algorithm>
#include <random>

#include "dyadic/universality.hpp"

namespace dyadic {

namespace {

// All sorted unit-class multisets of size d.
std::vector<std::vector<SquareClass>> unit_multisets(int d, const Field& F) {
    std::vector<std::vector<SquareClass>> out;
    std::vector<SquareClass> cur;
    const int U = F.num_unit_classes();
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (int u = start; u < U; ++u) {
            cur.push_back({0, u});
            self(self, u);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Every modular component shape at scale s with dimension exactly d.
std::vector<JordanComponent> shapes(int s, int d, bool allow_proper, bool allow_improper, const Field& F) {
    std::vector<JordanComponent> out;
    if (allow_improper && d % 2 == 0 && d > 0) {
        out.push_back(JordanComponent::make_improper(s, d / 2, ImproperType::plain));
        out.push_back(JordanComponent::make_improper(s, d / 2, ImproperType::delta));
    }
    if (allow_proper && d > 0)
        for (auto& m : unit_multisets(d, F)) out.push_back(JordanComponent::make_proper(s, std::move(m)));
    return out;
}

struct Slot {
    int scale;
    bool proper;
    bool improper;
};

// Lattices with one optional component per slot (strictly increasing scales) and total dimension k.
std::vector<JordanLattice> by_slots(const std::vector<Slot>& slots, int k, const Field& F) {
    std::vector<JordanLattice> out;
    std::vector<JordanComponent> cur;
    auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
        if (idx == slots.size()) {
            if (left == 0) out.push_back(JordanLattice(cur, F));
            return;
        }
        self(self, idx + 1, left);
        for (int d = 1; d <= left; ++d)
            for (auto& c : shapes(slots[idx].scale, d, slots[idx].proper, slots[idx].improper, F)) {
                cur.push_back(std::move(c));
                self(self, idx + 1, left - d);
                cur.pop_back();
            }
    };
    rec(rec, 0, k);
    return out;
}

}  // namespace

// An improper and a proper part at the same scale merge into one proper
// modular component, which a proper multiset of the same dimension already covers.
std::vector<JordanLattice> enumerate_dominant(int k, const Field& F) {
    if (k < 1) throw DomainError("k must be positive");
    return by_slots({{-1, false, true}, {0, true, true}, {1, true, false}}, k, F);
}

std::vector<JordanLattice> enumerate_classic_basic(int k, const Field& F) {
    if (k < 1) throw DomainError("k must be positive");
    return by_slots({{0, true, true}, {1, true, true}}, k, F);
}

namespace {

bool admissible_first(const JordanComponent& c, bool classic) {
    return classic ? c.scale_exp >= 0 : c.norm_exp() >= 0;
}

std::uint64_t binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::uint64_t v = 1;
    for (int i = 1; i <= r; ++i) v = v * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    return v;
}

}  // namespace

std::uint64_t family_size(const FamilyBounds& b, const Field& F) {
    const int U = F.num_unit_classes();
    auto count_shapes = [&](int d, bool proper_only) -> std::uint64_t {
        std::uint64_t n = binom(d + U - 1, d);
        if (!proper_only && d % 2 == 0) n += 2;
        return n;
    };
    // f(scale index, components left, dims left, first?)
    std::uint64_t total = 0;
    auto rec = [&](auto&& self, int s, int comps_left, int dim_left, bool first, std::uint64_t mult) -> void {
        if (!first) total += mult;
        if (comps_left == 0) return;
        for (int t = s; t <= b.scale_max; ++t)
            for (int d = 1; d <= std::min(b.max_comp_dim, dim_left); ++d) {
                std::uint64_t n;
                if (first) {
                    // proper needs t >= 0 for both filters; improper needs t >= -1 (integral) or t >= 0 (classic)
                    const bool prop_ok = t >= 0;
                    const bool imp_ok = b.classic ? t >= 0 : t >= -1;
                    n = (prop_ok ? binom(d + U - 1, d) : 0) + (imp_ok && d % 2 == 0 ? 2 : 0);
                } else {
                    n = count_shapes(d, false);
                }
                if (n) self(self, t + 1, comps_left - 1, dim_left - d, false, mult * n);
            }
    };
    rec(rec, b.scale_min, b.max_components, b.max_total_dim, true, 1);
    return total;
}

std::uint64_t for_each_in_family(const FamilyBounds& b, const Field& F,
                                 const std::function<void(const JordanLattice&)>& visit) {
    const std::uint64_t size = family_size(b, F);
    if (size > b.max_instances)
        throw DomainError("family has " + std::to_string(size) + " members, above the instance budget of " +
                          std::to_string(b.max_instances));
    std::vector<std::vector<std::vector<JordanComponent>>> table;  // [scale idx][dim]
    for (int s = b.scale_min; s <= b.scale_max; ++s) {
        std::vector<std::vector<JordanComponent>> row(b.max_comp_dim + 1);
        for (int d = 1; d <= b.max_comp_dim; ++d) row[d] = shapes(s, d, true, true, F);
        table.push_back(std::move(row));
    }
    std::uint64_t count = 0;
    std::vector<JordanComponent> cur;
    auto rec = [&](auto&& self, int s, int dim_left) -> void {
        if (!cur.empty()) {
            visit(JordanLattice::unchecked(cur));
            ++count;
        }
        if (static_cast<int>(cur.size()) == b.max_components) return;
        for (int t = s; t <= b.scale_max; ++t)
            for (int d = 1; d <= std::min(b.max_comp_dim, dim_left); ++d)
                for (const auto& c : table[t - b.scale_min][d]) {
                    if (cur.empty() && !admissible_first(c, b.classic)) continue;
                    cur.push_back(c);
                    self(self, t + 1, dim_left - d);
                    cur.pop_back();
                }
    };
    rec(rec, b.scale_min, b.max_total_dim);
    return count;
}

std::vector<JordanLattice> sample_family(const FamilyBounds& b, std::uint64_t count, std::uint64_t seed,
                                         const Field& F) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int U = F.num_unit_classes();
    const int nscales = b.scale_max - b.scale_min + 1;
    if (nscales < 1 || b.max_components < 1 || b.max_total_dim < 1) return {};
    std::vector<JordanLattice> out;
    std::uint64_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 1000 * (count + 10)) throw DomainError("family too sparse to sample");
        const int ncomp = uniform(1, std::min(b.max_components, nscales));
        std::vector<int> scales(nscales);
        for (int i = 0; i < nscales; ++i) scales[i] = b.scale_min + i;
        std::shuffle(scales.begin(), scales.end(), rng);
        scales.resize(ncomp);
        std::sort(scales.begin(), scales.end());
        std::vector<JordanComponent> comps;
        int total = 0;
        for (int s : scales) {
            const int d = uniform(1, b.max_comp_dim);
            total += d;
            if (d % 2 == 0 && uniform(0, 2) == 0) {
                comps.push_back(JordanComponent::make_improper(
                    s, d / 2, uniform(0, 1) ? ImproperType::delta : ImproperType::plain));
            } else {
                std::vector<SquareClass> diag;
                for (int i = 0; i < d; ++i) diag.push_back({0, uniform(0, U - 1)});
                comps.push_back(JordanComponent::make_proper(s, std::move(diag)));
            }
        }
        if (total > b.max_total_dim || !admissible_first(comps.front(), b.classic)) continue;
        out.push_back(JordanLattice(std::move(comps), F));
    }
    return out;
}

}  // namespace dyadic
