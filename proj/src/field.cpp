#include "dyadic/field.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <memory>
#include <mutex>
#include <sstream>

namespace dyadic {

namespace {

// Low coefficients of x^f + ... over F_2, lifted to {0,1}; each is irreducible mod 2.
const std::vector<std::vector<int>> kResiduePolys = {
    {0},                 // x
    {1, 1},              // x^2 + x + 1
    {1, 1, 0},           // x^3 + x + 1
    {1, 1, 0, 0},        // x^4 + x + 1
    {1, 0, 1, 0, 0},     // x^5 + x^2 + 1
    {1, 1, 0, 0, 0, 0},  // x^6 + x + 1
};

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (b != e && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || b == e)
        throw DomainError("malformed integer '" + s + "' in field element");
    return v;
}

}  // namespace

Field::Field(int f, int precision) : f_(f), prec_(precision) {
    if (f < 1 || f > kMaxDegree)
        throw DomainError("residue degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
    if (precision < 5 || precision > 60) throw DomainError("precision must lie in [5, 60]");
    mask_ = (std::uint64_t{1} << prec_) - 1;
    const auto& low = kResiduePolys[f - 1];
    for (int i = 0; i < f; ++i) modulus_[i] = static_cast<std::uint64_t>(low[i]);

    // rho: least power-basis 0/1 combination with residue trace 1.
    for (std::uint32_t code = 1; code < (1u << f_); ++code) {
        Coeffs y{};
        for (int i = 0; i < f_; ++i) y[i] = (code >> i) & 1u;
        if (residue_trace_one(y)) {
            rho_.coeffs = y;
            break;
        }
    }
    delta_ = add(one(), mul_pow2(rho_, 2));
    build_class_tables();
    build_hilbert_table();
}

const Field& Field::wide(int f) {
    if (f < 1 || f > kMaxDegree) throw DomainError("residue degree out of range");
    static std::array<std::once_flag, kMaxDegree> once;
    static std::array<std::unique_ptr<Field>, kMaxDegree> fields;
    std::call_once(once[f - 1], [f] { fields[f - 1] = std::make_unique<Field>(f, kWidePrecision); });
    return *fields[f - 1];
}

FieldElt Field::lift(const FieldElt& x, const Field& from) const {
    if (from.degree() != f_) throw DomainError("lift between fields of different degree");
    std::vector<std::int64_t> c(f_);
    for (int i = 0; i < f_; ++i) c[i] = from.signed_coeff(x.coeffs[i]);
    return from_coeffs(c, x.den_exp);
}

std::vector<std::uint64_t> Field::modulus() const {
    std::vector<std::uint64_t> m(modulus_.begin(), modulus_.begin() + f_);
    m.push_back(1);
    return m;
}

Field::Coeffs Field::poly_mul(const Coeffs& a, const Coeffs& b, std::uint64_t mask) const {
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    for (int i = 0; i < f_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < f_; ++j) prod[i + j] += a[i] * b[j];
    }
    for (int d = 2 * f_ - 2; d >= f_; --d) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        for (int j = 0; j < f_; ++j) prod[d - f_ + j] -= c * modulus_[j];
    }
    Coeffs r{};
    for (int i = 0; i < f_; ++i) r[i] = prod[i] & mask;
    return r;
}

bool Field::residue_trace_one(const Coeffs& y) const {
    Coeffs z = y;
    Coeffs sum = y;
    for (int i = 1; i < f_; ++i) {
        z = poly_mul(z, z, 1);
        for (int j = 0; j < f_; ++j) sum[j] ^= z[j];
    }
    if (sum[0] != 1) return false;
    for (int j = 1; j < f_; ++j)
        if (sum[j] != 0) return false;
    return true;
}

FieldElt Field::normalize(FieldElt a) const {
    bool all_zero = true;
    for (int i = 0; i < f_; ++i) {
        a.coeffs[i] &= mask_;
        all_zero = all_zero && a.coeffs[i] == 0;
    }
    for (int i = f_; i < kMaxDegree; ++i) a.coeffs[i] = 0;
    if (all_zero) {
        a.den_exp = 0;
        return a;
    }
    while (a.den_exp > 0) {
        bool even = true;
        for (int i = 0; i < f_; ++i) even = even && (a.coeffs[i] & 1u) == 0;
        if (!even) break;
        for (int i = 0; i < f_; ++i) a.coeffs[i] >>= 1;
        --a.den_exp;
    }
    return a;
}

FieldElt Field::from_int(std::int64_t v) const {
    FieldElt r;
    r.coeffs[0] = static_cast<std::uint64_t>(v);
    return normalize(r);
}

FieldElt Field::from_coeffs(const std::vector<std::int64_t>& c, int den_exp) const {
    if (static_cast<int>(c.size()) > f_)
        throw DomainError("too many coordinates for residue degree " + std::to_string(f_));
    if (den_exp < 0) throw DomainError("negative denominator exponent");
    FieldElt r;
    for (std::size_t i = 0; i < c.size(); ++i) r.coeffs[i] = static_cast<std::uint64_t>(c[i]);
    r.den_exp = den_exp;
    return normalize(r);
}

FieldElt Field::add(const FieldElt& a, const FieldElt& b) const {
    FieldElt r;
    r.den_exp = std::max(a.den_exp, b.den_exp);
    const int sa = r.den_exp - a.den_exp;
    const int sb = r.den_exp - b.den_exp;
    for (int i = 0; i < f_; ++i)
        r.coeffs[i] = (sa >= 64 ? 0 : a.coeffs[i] << sa) + (sb >= 64 ? 0 : b.coeffs[i] << sb);
    return normalize(r);
}

FieldElt Field::neg(const FieldElt& a) const {
    FieldElt r = a;
    for (int i = 0; i < f_; ++i) r.coeffs[i] = (0 - a.coeffs[i]) & mask_;
    return r;
}

FieldElt Field::sub(const FieldElt& a, const FieldElt& b) const { return add(a, neg(b)); }

FieldElt Field::mul(const FieldElt& a, const FieldElt& b) const {
    FieldElt r;
    r.coeffs = poly_mul(a.coeffs, b.coeffs, mask_);
    r.den_exp = a.den_exp + b.den_exp;
    return normalize(r);
}

FieldElt Field::mul_pow2(const FieldElt& a, int k) const {
    FieldElt r = a;
    r.den_exp -= k;
    if (r.den_exp < 0) {
        const int s = -r.den_exp;
        for (int i = 0; i < f_; ++i) r.coeffs[i] = s >= 64 ? 0 : r.coeffs[i] << s;
        r.den_exp = 0;
    }
    return normalize(r);
}

bool Field::is_zero(const FieldElt& a) const {
    for (int i = 0; i < f_; ++i)
        if (a.coeffs[i] != 0) return false;
    return true;
}

std::optional<int> Field::valuation(const FieldElt& a) const {
    if (is_zero(a)) return std::nullopt;
    int w = 64;
    for (int i = 0; i < f_; ++i)
        if (a.coeffs[i] != 0) w = std::min(w, std::countr_zero(a.coeffs[i]));
    return w - a.den_exp;
}

FieldElt Field::unit_part(const FieldElt& a) const {
    if (is_zero(a)) throw DomainError("unit part of zero");
    int w = 64;
    for (int i = 0; i < f_; ++i)
        if (a.coeffs[i] != 0) w = std::min(w, std::countr_zero(a.coeffs[i]));
    FieldElt r;
    for (int i = 0; i < f_; ++i) r.coeffs[i] = a.coeffs[i] >> w;
    return r;
}

FieldElt Field::unit_inverse(const FieldElt& u) const {
    auto v = valuation(u);
    if (!v || *v != 0) throw DomainError("unit_inverse of a non-unit");
    Coeffs residue{};
    for (int i = 0; i < f_; ++i) residue[i] = u.coeffs[i] & 1u;
    Coeffs y{};
    for (std::uint32_t code = 1; code < (1u << f_); ++code) {
        Coeffs cand{};
        for (int i = 0; i < f_; ++i) cand[i] = (code >> i) & 1u;
        Coeffs p = poly_mul(residue, cand, 1);
        bool is_one = p[0] == 1;
        for (int i = 1; i < f_; ++i) is_one = is_one && p[i] == 0;
        if (is_one) {
            y = cand;
            break;
        }
    }
    // Newton: y <- y (2 - u y), doubling the number of correct bits.
    for (int bits = 1; bits < prec_; bits *= 2) {
        Coeffs uy = poly_mul(u.coeffs, y, mask_);
        Coeffs t{};
        for (int i = 0; i < f_; ++i) t[i] = (0 - uy[i]) & mask_;
        t[0] = (t[0] + 2) & mask_;
        y = poly_mul(y, t, mask_);
    }
    FieldElt r;
    r.coeffs = y;
    return r;
}

std::uint32_t Field::key_mod8(const Coeffs& u) const {
    std::uint32_t key = 0;
    for (int i = 0; i < f_; ++i) key |= static_cast<std::uint32_t>(u[i] & 7u) << (3 * i);
    return key;
}

void Field::build_class_tables() {
    const std::uint32_t nkeys = 1u << (3 * f_);
    auto coeffs_of = [&](std::uint32_t key) {
        Coeffs c{};
        for (int i = 0; i < f_; ++i) c[i] = (key >> (3 * i)) & 7u;
        return c;
    };
    auto is_unit_key = [&](std::uint32_t key) {
        for (int i = 0; i < f_; ++i)
            if ((key >> (3 * i)) & 1u) return true;
        return false;
    };
    std::vector<char> is_sq(nkeys, 0);
    std::vector<std::uint32_t> squares;
    for (std::uint32_t k = 0; k < nkeys; ++k) {
        if (!is_unit_key(k)) continue;
        Coeffs c = coeffs_of(k);
        std::uint32_t s = key_mod8(poly_mul(c, c, 7));
        if (!is_sq[s]) {
            is_sq[s] = 1;
            squares.push_back(s);
        }
    }
    unit_of_key_.assign(nkeys, -1);
    unit_rep_.clear();
    for (std::uint32_t k = 0; k < nkeys; ++k) {
        if (!is_unit_key(k) || unit_of_key_[k] >= 0) continue;
        const int idx = static_cast<int>(unit_rep_.size());
        unit_rep_.push_back(k);
        Coeffs c = coeffs_of(k);
        for (std::uint32_t s : squares) unit_of_key_[key_mod8(poly_mul(c, coeffs_of(s), 7))] = idx;
    }
    num_units_ = static_cast<int>(unit_rep_.size());
    if (num_units_ != (1 << (f_ + 1)))
        throw std::logic_error("unit square-class count mismatch");
    unit_mul_.assign(static_cast<std::size_t>(num_units_) * num_units_, 0);
    for (int a = 0; a < num_units_; ++a)
        for (int b = 0; b < num_units_; ++b)
            unit_mul_[a * num_units_ + b] =
                unit_of_key_[key_mod8(poly_mul(coeffs_of(unit_rep_[a]), coeffs_of(unit_rep_[b]), 7))];
    delta_unit_ = unit_of_key_[key_mod8(delta_.coeffs)];
    minus_one_unit_ = unit_of_key_[key_mod8(neg(one()).coeffs)];
}

SquareClass Field::mul(SquareClass a, SquareClass b) const {
    SquareClass r{a.parity ^ b.parity, unit_mul_[a.unit * num_units_ + b.unit]};
    // 2 * 2 = 4 is a square, so parities simply add mod 2.
    return r;
}

std::vector<SquareClass> Field::norm_group(SquareClass a) const {
    const int n = num_classes();
    std::vector<char> member(n, 0);
    std::vector<int> elems{index_of(one_class())};
    member[elems[0]] = 1;
    auto absorb = [&](SquareClass g) {
        if (member[index_of(g)]) return;
        const std::size_t sz = elems.size();
        for (std::size_t i = 0; i < sz; ++i) {
            const int p = index_of(mul(class_at(elems[i]), g));
            if (!member[p]) {
                member[p] = 1;
                elems.push_back(p);
            }
        }
    };
    if (a == one_class()) {
        for (int i = 0; i < n; ++i) absorb(class_at(i));
    } else {
        const FieldElt alpha = representative(a);
        const int target = n / 2;
        const std::uint32_t nkeys = 1u << (3 * f_);
        absorb(square_class(neg(alpha)));
        for (int j = 0; j <= 3 && static_cast<int>(elems.size()) < target; ++j) {
            for (std::uint32_t k = 1; k < nkeys && static_cast<int>(elems.size()) < target; ++k) {
                FieldElt s;
                for (int i = 0; i < f_; ++i) s.coeffs[i] = (k >> (3 * i)) & 7u;
                FieldElt t = mul_pow2(s, j);
                FieldElt w = sub(mul(t, t), alpha);
                if (is_zero(w)) continue;
                int lowest = 64;
                for (int i = 0; i < f_; ++i)
                    if (w.coeffs[i] != 0) lowest = std::min(lowest, std::countr_zero(w.coeffs[i]));
                if (prec_ - lowest < 3) continue;
                absorb(square_class(w));
            }
        }
        if (static_cast<int>(elems.size()) != target)
            throw std::logic_error("norm group search did not reach index 2");
    }
    std::sort(elems.begin(), elems.end());
    std::vector<SquareClass> out;
    for (int e : elems) out.push_back(class_at(e));
    return out;
}

void Field::build_hilbert_table() {
    const int n = num_classes();
    hilbert_.assign(static_cast<std::size_t>(n) * n, 1);
    for (int ia = 0; ia < n; ++ia) {
        const SquareClass a = class_at(ia);
        if (a == one_class()) continue;
        if (a == delta_class()) {
            for (int ib = 0; ib < n; ++ib) hilbert_[ia * n + ib] = class_at(ib).parity ? -1 : 1;
            continue;
        }
        std::vector<char> in(n, 0);
        for (SquareClass c : norm_group(a)) in[index_of(c)] = 1;
        for (int ib = 0; ib < n; ++ib) hilbert_[ia * n + ib] = in[ib] ? 1 : -1;
    }
}

SquareClass Field::square_class(const FieldElt& a) const {
    if (is_zero(a)) throw DomainError("square class of zero");
    int w = 64;
    for (int i = 0; i < f_; ++i)
        if (a.coeffs[i] != 0) w = std::min(w, std::countr_zero(a.coeffs[i]));
    if (prec_ - w < 3) throw PrecisionError("element too close to the precision limit to classify");
    Coeffs u{};
    for (int i = 0; i < f_; ++i) u[i] = a.coeffs[i] >> w;
    const int v = w - a.den_exp;
    return {((v % 2) + 2) % 2, unit_of_key_[key_mod8(u)]};
}

bool Field::is_square(const FieldElt& a) const {
    if (is_zero(a)) throw DomainError("is_square of zero");
    return square_class(a) == one_class();
}

IdealExp Field::quadratic_defect(const FieldElt& u) const {
    auto v = valuation(u);
    if (!v || *v != 0) throw DomainError("quadratic defect requires a unit");
    const SquareClass c = square_class(u);
    if (c == one_class()) return IdealExp::zero();
    if (c == delta_class()) return IdealExp::power(2);
    return IdealExp::power(1);
}

int Field::hilbert(const FieldElt& a, const FieldElt& b) const {
    if (is_zero(a) || is_zero(b)) throw DomainError("Hilbert symbol of zero");
    return hilbert(square_class(a), square_class(b));
}

FieldElt Field::representative(SquareClass c) const {
    FieldElt r;
    const std::uint32_t key = unit_rep_.at(c.unit);
    for (int i = 0; i < f_; ++i) r.coeffs[i] = (key >> (3 * i)) & 7u;
    return mul_pow2(r, c.parity);
}

std::vector<SquareClass> Field::square_class_reps() const {
    std::vector<SquareClass> out;
    for (int i = 0; i < num_classes(); ++i) out.push_back(class_at(i));
    return out;
}

std::vector<SquareClass> Field::unit_classes() const {
    std::vector<SquareClass> out;
    for (int u = 0; u < num_units_; ++u) out.push_back({0, u});
    return out;
}

std::int64_t Field::signed_coeff(std::uint64_t c) const {
    c &= mask_;
    if (c > (mask_ >> 1) + 1) return static_cast<std::int64_t>(c) - static_cast<std::int64_t>(mask_ + 1);
    return static_cast<std::int64_t>(c);
}

FieldElt Field::parse(const std::string& raw) const {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
    if (text.empty()) throw DomainError("empty field element");
    int den = 0;
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    if (slash != std::string::npos) {
        std::string d = text.substr(slash + 1);
        if (d.rfind("2^", 0) == 0) {
            den = static_cast<int>(parse_int(d.substr(2)));
        } else {
            std::int64_t q = parse_int(d);
            if (q <= 0 || (q & (q - 1)) != 0) throw DomainError("denominator must be a power of 2: " + d);
            den = std::countr_zero(static_cast<std::uint64_t>(q));
        }
        if (den < 0 || den > 60) throw DomainError("denominator exponent out of range");
    }
    std::vector<std::int64_t> coords;
    std::stringstream ss(num);
    std::string part;
    while (std::getline(ss, part, ',')) coords.push_back(parse_int(part));
    if (coords.empty()) throw DomainError("malformed field element '" + raw + "'");
    return from_coeffs(coords, den);
}

std::string Field::format(const FieldElt& a) const {
    int last = 0;
    for (int i = 0; i < f_; ++i)
        if (a.coeffs[i] != 0) last = i;
    std::string out;
    for (int i = 0; i <= last; ++i) {
        if (i) out += ",";
        out += std::to_string(signed_coeff(a.coeffs[i]));
    }
    if (a.den_exp > 0) out += "/2^" + std::to_string(a.den_exp);
    return out;
}

}  // namespace dyadic
