// Congruence search for X with X^T G X = H, level by level modulo 2^k.
//
// A node at level k holds X mod 2^k whose residual R = X^T G X - H has
// diagonal entries divisible by 2^(k+1) and the others by 2^k; every
// truncation of an exact solution satisfies this. The children X + 2^k D
// form an affine space over F_2 in the digits of D: off the diagonal the
// condition is linear, and on it the quadratic part reduces to squaring
// mod 2, which is additive. Children are read off by elimination.
//
// With residual valuation r, A = X^T G whose maximal minors have least
// valuation t, and g the least valuation of G, one Newton step
// Y = -A^+ S (S + S^T = R) keeps X integral when r >= t + 1 and shrinks the
// residual to valuation >= 2(r - 1 - t) + g, which exceeds r once
// r >= 2t + 3 - g. Such nodes certify an exact representation.
#include <algorithm>
#include <bit>
#include <climits>

#include "dyadic/representability.hpp"

namespace dyadic {

namespace {

struct Equation {
    std::uint64_t mask = 0;
    int rhs = 0;
};

class Search {
public:
    Search(const Field& W, std::vector<FieldElt> G, std::vector<FieldElt> H, int n, int r, int e,
           std::uint64_t budget)
        : W_(W), G_(std::move(G)), H_(std::move(H)), n_(n), r_(r), e_(e), f_(W.degree()), budget_(budget) {
        g_ = INT_MAX;
        for (const auto& x : G_)
            if (auto v = W_.valuation(x)) g_ = std::min(g_, *v);
    }

    RepVerdict run() {
        root();
        RepVerdict out;
        out.witness_rows = n_;
        out.witness_cols = r_;
        if (found_) {
            out.value = RepValue::Represented;
            out.reason = "certified solution";
            out.witness = witness_;
        } else if (exhausted_budget_) {
            out.value = RepValue::Unknown;
            out.reason = "node budget exhausted";
            out.witness_rows = out.witness_cols = 0;
        } else if (reached_bottom_) {
            out.value = RepValue::Unknown;
            out.reason = "solutions modulo 2^" + std::to_string(e_) + " lack a lifting certificate";
            out.witness_rows = out.witness_cols = 0;
        } else {
            out.value = RepValue::NotRepresented;
            out.reason = "no solution modulo 2^" + std::to_string(e_);
            out.witness_rows = out.witness_cols = 0;
        }
        return out;
    }

private:
    FieldElt basis(int c) const {
        FieldElt u;
        u.coeffs[c] = 1;
        return u;
    }

    int bit(const FieldElt& x, int c) const { return static_cast<int>(x.coeffs[c] & 1u); }

    std::vector<FieldElt> gram_product(const std::vector<FieldElt>& X, std::vector<FieldElt>* A_out) const {
        // A = X^T G (r x n), R = A X - H (r x r)
        std::vector<FieldElt> A(static_cast<std::size_t>(r_) * n_);
        for (int a = 0; a < r_; ++a)
            for (int j = 0; j < n_; ++j) {
                FieldElt s;
                for (int i = 0; i < n_; ++i) s = W_.add(s, W_.mul(X[i * r_ + a], G_[i * n_ + j]));
                A[a * n_ + j] = s;
            }
        std::vector<FieldElt> R(static_cast<std::size_t>(r_) * r_);
        for (int a = 0; a < r_; ++a)
            for (int b = a; b < r_; ++b) {
                FieldElt s;
                for (int j = 0; j < n_; ++j) s = W_.add(s, W_.mul(A[a * n_ + j], X[j * r_ + b]));
                R[a * r_ + b] = R[b * r_ + a] = W_.sub(s, H_[a * r_ + b]);
            }
        if (A_out) *A_out = std::move(A);
        return R;
    }

    bool at_least(const FieldElt& x, int v) const {
        auto w = W_.valuation(x);
        return !w || *w >= v;
    }

    int min_val(const std::vector<FieldElt>& M) const {
        int v = INT_MAX;
        for (const auto& x : M)
            if (auto w = W_.valuation(x)) v = std::min(v, *w);
        return v;
    }

    int minor_val(const std::vector<FieldElt>& A) const {
        if (r_ == 1) return min_val(A);
        int t = INT_MAX;
        for (int j = 0; j < n_; ++j)
            for (int k = j + 1; k < n_; ++k) {
                const FieldElt m = W_.sub(W_.mul(A[j], A[n_ + k]), W_.mul(A[k], A[n_ + j]));
                if (auto w = W_.valuation(m)) t = std::min(t, *w);
            }
        return t;
    }

    bool count_node() {
        if (++nodes_ > budget_) exhausted_budget_ = true;
        return !exhausted_budget_;
    }

    // Level-one nodes: columns d_a mod 2 with Q(d_a) = h_aa mod 4 and B(d_a, d_b) = h_ab mod 2.
    void root() {
        const int digits = n_ * f_;
        std::vector<std::vector<std::vector<FieldElt>>> cols(r_);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << digits); ++code) {
            std::vector<FieldElt> d(n_);
            for (int u = 0; u < digits; ++u)
                if ((code >> u) & 1u) d[u / f_].coeffs[u % f_] = 1;
            FieldElt q;
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) q = W_.add(q, W_.mul(W_.mul(d[i], G_[i * n_ + j]), d[j]));
            for (int a = 0; a < r_; ++a)
                if (at_least(W_.sub(q, H_[a * r_ + a]), 2)) cols[a].push_back(d);
        }
        std::vector<FieldElt> X(static_cast<std::size_t>(n_) * r_);
        place(X, cols, 0);
    }

    void place(std::vector<FieldElt>& X, const std::vector<std::vector<std::vector<FieldElt>>>& cols, int a) {
        if (a == r_) {
            if (!count_node()) return;
            dfs(X, 1);
            return;
        }
        for (const auto& d : cols[a]) {
            bool ok = true;
            for (int b = 0; b < a && ok; ++b) {
                FieldElt s;
                for (int i = 0; i < n_; ++i)
                    for (int j = 0; j < n_; ++j) s = W_.add(s, W_.mul(W_.mul(X[i * r_ + b], G_[i * n_ + j]), d[j]));
                ok = at_least(W_.sub(s, H_[b * r_ + a]), 1);
            }
            if (!ok) continue;
            for (int i = 0; i < n_; ++i) X[i * r_ + a] = d[i];
            place(X, cols, a + 1);
            if (found_ || exhausted_budget_) return;
        }
    }

    // Adds the F_2-linear map d -> (m d) mod 2 on digit block (j, b) into equations at offset.
    void add_linear(std::vector<Equation>& eqs, std::size_t offset, const FieldElt& m, int j, int b,
                    bool frobenius) const {
        for (int c = 0; c < f_; ++c) {
            FieldElt x = basis(c);
            if (frobenius) x = W_.mul(x, x);
            const FieldElt img = W_.mul(m, x);
            const int u = (j * r_ + b) * f_ + c;
            for (int e = 0; e < f_; ++e)
                if (bit(img, e)) eqs[offset + e].mask ^= std::uint64_t{1} << u;
        }
    }

    void dfs(std::vector<FieldElt>& X, int k) {
        if (found_ || exhausted_budget_) return;
        std::vector<FieldElt> A;
        const auto R = gram_product(X, &A);
        const int rho = min_val(R);
        const int t = minor_val(A);
        if (rho == INT_MAX || (t != INT_MAX && g_ != INT_MAX && rho >= 2 * t + 3 - g_ && rho >= t + 1)) {
            found_ = true;
            witness_ = X;
            return;
        }
        if (k == e_) {
            reached_bottom_ = true;
            return;
        }
        for (int a = 0; a < r_; ++a)
            if (!at_least(R[a * r_ + a], k + 1)) return;
        // one block of f equations per entry a <= b of the next residual
        std::vector<Equation> eqs;
        for (int a = 0; a < r_; ++a)
            for (int b = a; b < r_; ++b) {
                const std::size_t off = eqs.size();
                eqs.resize(off + f_);
                const FieldElt c = W_.mul_pow2(R[a * r_ + b], -(a == b ? k + 1 : k));
                for (int e = 0; e < f_; ++e) eqs[off + e].rhs = bit(c, e);
                for (int j = 0; j < n_; ++j) {
                    add_linear(eqs, off, A[a * n_ + j], j, b, false);
                    if (a != b) add_linear(eqs, off, A[b * n_ + j], j, a, false);
                    else if (k == 1) add_linear(eqs, off, G_[j * n_ + j], j, a, true);
                }
            }
        // reduced row echelon form over F_2
        std::vector<int> pivots;
        std::size_t rank = 0;
        const int unknowns = n_ * r_ * f_;
        for (int u = 0; u < unknowns && rank < eqs.size(); ++u) {
            const std::uint64_t bitu = std::uint64_t{1} << u;
            std::size_t p = rank;
            while (p < eqs.size() && !(eqs[p].mask & bitu)) ++p;
            if (p == eqs.size()) continue;
            std::swap(eqs[p], eqs[rank]);
            for (std::size_t q = 0; q < eqs.size(); ++q)
                if (q != rank && (eqs[q].mask & bitu)) {
                    eqs[q].mask ^= eqs[rank].mask;
                    eqs[q].rhs ^= eqs[rank].rhs;
                }
            pivots.push_back(u);
            ++rank;
        }
        for (std::size_t q = rank; q < eqs.size(); ++q)
            if (eqs[q].rhs) return;
        std::uint64_t pivot_mask = 0;
        for (int u : pivots) pivot_mask |= std::uint64_t{1} << u;
        std::vector<int> free;
        for (int u = 0; u < unknowns; ++u)
            if (!((pivot_mask >> u) & 1u)) free.push_back(u);
        const FieldElt step = W_.mul_pow2(W_.one(), k);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << free.size()); ++code) {
            if (!count_node()) return;
            std::uint64_t digits = 0;
            for (std::size_t i = 0; i < free.size(); ++i)
                if ((code >> i) & 1u) digits |= std::uint64_t{1} << free[i];
            for (std::size_t q = 0; q < rank; ++q) {
                const int v = eqs[q].rhs ^ (std::popcount(eqs[q].mask & digits) & 1);
                if (v) digits |= std::uint64_t{1} << pivots[q];
            }
            std::vector<FieldElt> Y = X;
            for (int u = 0; u < unknowns; ++u)
                if ((digits >> u) & 1u) Y[u / f_] = W_.add(Y[u / f_], W_.mul(basis(u % f_), step));
            dfs(Y, k + 1);
            if (found_ || exhausted_budget_) return;
        }
    }

    const Field& W_;
    std::vector<FieldElt> G_, H_;
    int n_, r_, e_, f_;
    std::uint64_t budget_;
    int g_ = 0;
    std::uint64_t nodes_ = 0;
    bool found_ = false;
    bool reached_bottom_ = false;
    bool exhausted_budget_ = false;
    std::vector<FieldElt> witness_;
};

}  // namespace

RepVerdict brute_force_represents(const GramMatrix& l_gram, const GramMatrix& L_gram, int modulus_exp,
                                  const Field& F, const BruteForceOptions& opts) {
    const int r = l_gram.n, n = L_gram.n;
    if (r < 1 || n < 1) throw DomainError("brute force needs nonempty Gram matrices");
    if (r > opts.max_rank_small || n > opts.max_rank_big)
        throw DomainError("brute force rank guard: rank(l) <= " + std::to_string(opts.max_rank_small) +
                          ", rank(L) <= " + std::to_string(opts.max_rank_big));
    if (modulus_exp < 1 || modulus_exp > 30) throw DomainError("modulus exponent must lie in [1, 30]");
    if (r > n) return {RepValue::NotRepresented, "rank(l) exceeds rank(L)", 0, 0, {}};
    const Field& W = Field::wide(F.degree());
    int B = 0;
    for (const auto* M : {&l_gram, &L_gram})
        for (const auto& x : M->entries) B = std::max(B, x.den_exp);
    std::vector<FieldElt> G, H;
    for (const auto& x : L_gram.entries) G.push_back(W.mul_pow2(W.lift(x, F), B));
    for (const auto& x : l_gram.entries) H.push_back(W.mul_pow2(W.lift(x, F), B));
    Search s(W, std::move(G), std::move(H), n, r, modulus_exp, opts.node_budget);
    RepVerdict v = s.run();
    for (auto& x : v.witness) x = F.lift(x, W);
    return v;
}

}  // namespace dyadic
