// Arithmetic in an unramified extension F of Q_2 of residue degree f.
//
// Elements are truncated power-basis coordinates modulo 2^N over the ring
// of integers O = Z_2[x]/(g), with an optional dyadic denominator 2^-d.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyadic {

inline constexpr int kMaxDegree = 6;

/// Raised for invalid inputs and violated mathematical preconditions.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the working precision cannot certify a decision.
class PrecisionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A fractional ideal 2^e O, or the zero ideal (e = +inf).
class IdealExp {
public:
    IdealExp() = default;  // zero ideal
    static IdealExp zero() { return IdealExp(); }
    static IdealExp power(int e) {
        IdealExp r;
        r.finite_ = true;
        r.exp_ = e;
        return r;
    }

    bool is_zero() const { return !finite_; }
    int exp() const {
        if (!finite_) throw DomainError("exponent of the zero ideal");
        return exp_;
    }

    /// this ⊆ other
    bool contained_in(const IdealExp& other) const {
        if (!finite_) return true;
        if (!other.finite_) return false;
        return exp_ >= other.exp_;
    }

    friend IdealExp operator*(const IdealExp& a, const IdealExp& b) {
        if (!a.finite_ || !b.finite_) return zero();
        return power(a.exp_ + b.exp_);
    }
    friend bool operator==(const IdealExp& a, const IdealExp& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.exp_ == b.exp_;
    }

    std::string str() const { return finite_ ? std::to_string(exp_) : "inf"; }

private:
    bool finite_ = false;
    int exp_ = 0;
};

/// Value = (sum coeffs[i] x^i) / 2^den_exp, coefficients taken mod 2^N.
struct FieldElt {
    std::array<std::uint64_t, kMaxDegree> coeffs{};
    int den_exp = 0;
    friend bool operator==(const FieldElt&, const FieldElt&) = default;
};

/// Element of F*/F*^2: valuation parity and index of the unit coset.
struct SquareClass {
    int parity = 0;
    int unit = 0;
    friend bool operator==(const SquareClass&, const SquareClass&) = default;
    friend auto operator<=>(const SquareClass&, const SquareClass&) = default;
};

class Field {
public:
    /// Throws DomainError for f outside [1, kMaxDegree] or precision outside [5, 60].
    explicit Field(int f, int precision = 12);

    static constexpr int kWidePrecision = 60;
    /// Shared instance of degree f at the widest precision, for internal reductions.
    static const Field& wide(int f);
    /// Re-embeds an element of another field of the same degree via signed coordinates.
    FieldElt lift(const FieldElt& x, const Field& from) const;

    int degree() const { return f_; }
    int precision() const { return prec_; }
    /// Coefficients of the monic modulus, low to high, f+1 entries.
    std::vector<std::uint64_t> modulus() const;

    const FieldElt& rho() const { return rho_; }
    const FieldElt& delta() const { return delta_; }

    // Element construction and arithmetic.
    FieldElt from_int(std::int64_t v) const;
    FieldElt from_coeffs(const std::vector<std::int64_t>& c, int den_exp = 0) const;
    FieldElt zero() const { return FieldElt{}; }
    FieldElt one() const { return from_int(1); }
    FieldElt add(const FieldElt& a, const FieldElt& b) const;
    FieldElt sub(const FieldElt& a, const FieldElt& b) const;
    FieldElt neg(const FieldElt& a) const;
    FieldElt mul(const FieldElt& a, const FieldElt& b) const;
    /// a * 2^k for any integer k.
    FieldElt mul_pow2(const FieldElt& a, int k) const;
    /// Inverse of a unit of O.
    FieldElt unit_inverse(const FieldElt& u) const;
    /// Drops the 2-power: a / 2^v(a), known modulo 2^(N - shift).
    FieldElt unit_part(const FieldElt& a) const;

    bool is_zero(const FieldElt& a) const;
    bool is_integral(const FieldElt& a) const { return a.den_exp == 0; }
    /// nullopt encodes +inf.
    std::optional<int> valuation(const FieldElt& a) const;

    bool is_square(const FieldElt& a) const;
    SquareClass square_class(const FieldElt& a) const;
    IdealExp quadratic_defect(const FieldElt& u) const;
    int hilbert(const FieldElt& a, const FieldElt& b) const;

    // Square-class group.
    int num_classes() const { return 2 * num_units_; }
    int num_unit_classes() const { return num_units_; }
    int index_of(SquareClass c) const { return c.parity * num_units_ + c.unit; }
    SquareClass class_at(int index) const { return {index / num_units_, index % num_units_}; }
    SquareClass mul(SquareClass a, SquareClass b) const;
    int hilbert(SquareClass a, SquareClass b) const {
        return hilbert_[index_of(a) * num_classes() + index_of(b)];
    }
    SquareClass one_class() const { return {0, 0}; }
    SquareClass delta_class() const { return {0, delta_unit_}; }
    SquareClass minus_one_class() const { return {0, minus_one_unit_}; }
    SquareClass two_class() const { return {1, 0}; }
    /// Class of 2^e.
    SquareClass pow2_class(int e) const { return {e & 1, 0}; }
    /// Canonical representative: 2^parity times the least unit in the coset mod 8.
    FieldElt representative(SquareClass c) const;
    std::vector<SquareClass> square_class_reps() const;
    std::vector<SquareClass> unit_classes() const;
    std::vector<SquareClass> norm_group(SquareClass a) const;

    // Text encoding: "c0,c1,...[/2^k]".
    FieldElt parse(const std::string& text) const;
    std::string format(const FieldElt& a) const;
    std::string format(SquareClass c) const { return format(representative(c)); }
    SquareClass parse_class(const std::string& text) const { return square_class(parse(text)); }

    /// Signed residue of a coefficient in (-2^(N-1), 2^(N-1)].
    std::int64_t signed_coeff(std::uint64_t c) const;

private:
    using Coeffs = std::array<std::uint64_t, kMaxDegree>;
    Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint64_t mask) const;
    FieldElt normalize(FieldElt a) const;
    std::uint32_t key_mod8(const Coeffs& u) const;
    bool residue_trace_one(const Coeffs& y) const;
    void build_class_tables();
    void build_hilbert_table();

    int f_;
    int prec_;
    std::uint64_t mask_;
    Coeffs modulus_{};  // low coefficients of the monic modulus
    FieldElt rho_;
    FieldElt delta_;
    int num_units_ = 0;
    int delta_unit_ = 0;
    int minus_one_unit_ = 0;
    std::vector<int> unit_of_key_;          // key mod 8 -> unit class, -1 for non-units
    std::vector<std::uint32_t> unit_rep_;   // unit class -> least key
    std::vector<int> unit_mul_;             // unit x unit -> unit
    std::vector<signed char> hilbert_;      // class x class
};

}  // namespace dyadic
