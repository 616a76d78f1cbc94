/*
   Copyright 2026 the linrel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LINREL_FIELDS_HPP
#define LINREL_FIELDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linrel/ast.hpp"
#include "linrel/errors.hpp"

namespace linrel {

// ---------------------------------------------------------------------------
// Residue-polynomial helpers over F_p. These power both the extension-field
// element arithmetic and the modulus validation, so they live below
// FieldElement and work on raw coefficient vectors (low degree first, no
// trailing zeros).
// ---------------------------------------------------------------------------

namespace detail::modp {

using u64 = std::uint64_t;
using Residues = std::vector<u64>;

inline u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
inline u64 mul(u64 a, u64 b, u64 p) { return (a * b) % p; }  // p < 2^31, so no overflow

inline u64 inv(u64 a, u64 p) {
    // extended Euclid on integers
    if (a % p == 0) fail(errc::division_by_zero, "inverse of 0 mod " + std::to_string(p));
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<u64>(t);
}

inline void trim(Residues& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Residues& f) { return static_cast<int>(f.size()) - 1; }  // -1 for zero

inline Residues poly_add(const Residues& f, const Residues& g, u64 p) {
    Residues r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 a = i < f.size() ? f[i] : 0;
        u64 b = i < g.size() ? g[i] : 0;
        r[i] = add(a, b, p);
    }
    trim(r);
    return r;
}

inline Residues poly_sub(const Residues& f, const Residues& g, u64 p) {
    Residues r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 a = i < f.size() ? f[i] : 0;
        u64 b = i < g.size() ? g[i] : 0;
        r[i] = sub(a, b, p);
    }
    trim(r);
    return r;
}

inline Residues poly_mul(const Residues& f, const Residues& g, u64 p) {
    if (f.empty() || g.empty()) return {};
    Residues r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    trim(r);
    return r;
}

// division with remainder; divisor need not be monic
inline std::pair<Residues, Residues> poly_divmod(const Residues& f, const Residues& g, u64 p) {
    if (g.empty()) fail(errc::division_by_zero, "polynomial division by zero");
    Residues rem = f;
    trim(rem);
    if (degree(rem) < degree(g)) return {{}, rem};
    Residues quot(rem.size() - g.size() + 1, 0);
    const u64 lead_inv = inv(g.back(), p);
    for (int d = degree(rem); d >= degree(g); --d) {
        if (static_cast<std::size_t>(d) >= rem.size() || rem[d] == 0) continue;
        const u64 c = mul(rem[d], lead_inv, p);
        const std::size_t shift = static_cast<std::size_t>(d - degree(g));
        quot[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i) rem[shift + i] = sub(rem[shift + i], mul(c, g[i], p), p);
    }
    trim(rem);
    trim(quot);
    return {quot, rem};
}

inline Residues poly_mod(const Residues& f, const Residues& g, u64 p) { return poly_divmod(f, g, p).second; }

// Bezout coefficient: returns s with s*f == gcd(f, m) mod m. Used for
// inverses in F_p[t]/(m) where gcd is forced to be 1.
inline Residues poly_invmod(const Residues& f, const Residues& m, u64 p) {
    Residues r0 = m, r1 = poly_mod(f, m, p);
    Residues s0, s1{1};
    if (r1.empty()) fail(errc::division_by_zero, "inverse of 0 in extension field");
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(r0, r1, p);
        Residues s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (degree(r0) != 0) fail(errc::internal_error, "modulus not coprime with element");
    const u64 scale = inv(r0[0], p);
    for (auto& c : s0) c = mul(c, scale, p);
    trim(s0);
    return poly_mod(s0, m, p);
}

// exhaustive factor search: irreducible iff no monic divisor of degree
// 1..deg/2 divides f (fields here are desk-scale)
inline bool poly_irreducible(const Residues& f, u64 p) {
    const int n = degree(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; 2 * d <= n; ++d) {
        // all monic candidates of degree d, low coefficients counted in base p
        u64 count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (u64 idx = 0; idx < count; ++idx) {
            Residues cand(d + 1, 0);
            u64 rest = idx;
            for (int i = 0; i < d; ++i) {
                cand[i] = rest % p;
                rest /= p;
            }
            cand[d] = 1;
            if (poly_mod(f, cand, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail::modp

// ---------------------------------------------------------------------------
// Field descriptors
// ---------------------------------------------------------------------------

/// Identifies one of the supported coefficient fields: the rationals
/// (characteristic 0), a prime field F_p, or an extension F_{p^k} presented by
/// an explicit monic irreducible modulus over F_p. Descriptors are immutable
/// and shared; elements keep a handle to theirs.
struct FieldDescriptor {
    std::uint64_t characteristic = 0;          // 0 for the rationals, prime p otherwise
    unsigned extension_degree = 1;             // k; 1 for Q and F_p
    std::vector<std::uint64_t> modulus;        // monic irreducible over F_p, size k+1, present iff k > 1
    std::optional<std::uint64_t> cardinality;  // p^k, or nullopt for "infinite"

    bool is_rational() const { return characteristic == 0; }
    bool is_finite() const { return characteristic != 0; }
};

using Field = std::shared_ptr<const FieldDescriptor>;

inline bool same_field(const Field& a, const Field& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->characteristic == b->characteristic && a->extension_degree == b->extension_degree &&
           a->modulus == b->modulus;
}

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_same_field(const Field& a, const Field& b, const char* what) {
    if (!same_field(a, b)) fail(errc::field_mismatch, std::string("operands of ") + what + " lie in different fields");
}

}  // namespace detail

inline Field rationals() {
    static const Field q = std::make_shared<FieldDescriptor>(FieldDescriptor{0, 1, {}, std::nullopt});
    return q;
}

inline Field prime_field(std::uint64_t p) {
    if (!detail::is_prime(p)) fail(errc::non_prime_characteristic, std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 31)) fail(errc::invalid_argument, "characteristic too large");
    return std::make_shared<FieldDescriptor>(FieldDescriptor{p, 1, {}, p});
}

/// F_{p^k} from an explicit modulus given as residues, low degree first.
inline Field extension_field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
    if (!detail::is_prime(p)) fail(errc::non_prime_characteristic, std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 31)) fail(errc::invalid_argument, "characteristic too large");
    if (k < 2) fail(errc::modulus_degree_mismatch, "extension degree must be at least 2");
    for (auto& c : modulus) c %= p;
    detail::modp::trim(modulus);
    if (detail::modp::degree(modulus) != static_cast<int>(k))
        fail(errc::modulus_degree_mismatch, "modulus degree does not match the extension degree");
    if (modulus.back() != 1) fail(errc::invalid_argument, "modulus must be monic");
    if (!detail::modp::poly_irreducible(modulus, p))
        fail(errc::reducible_modulus, "modulus factors over F_" + std::to_string(p));
    std::uint64_t card = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (card > (std::uint64_t{1} << 62) / p) fail(errc::invalid_argument, "field too large");
        card *= p;
    }
    return std::make_shared<FieldDescriptor>(FieldDescriptor{p, k, std::move(modulus), card});
}

// ---------------------------------------------------------------------------
// Field elements
// ---------------------------------------------------------------------------

/// An exact element of its field, always held in canonical form: a reduced
/// fraction with positive denominator over Q, or a residue polynomial of
/// degree < k over F_p (stored as exactly k residues). Values are immutable
/// and freely shareable.
class FieldElement {
public:
    static FieldElement zero(const Field& f) { return from_integer(f, 0); }
    static FieldElement one(const Field& f) { return from_integer(f, 1); }

    static FieldElement from_integer(const Field& f, long long n) {
        FieldElement e(f);
        if (f->is_rational()) {
            e.rat_ = mpq_class(static_cast<long>(n));
        } else {
            const auto p = static_cast<long long>(f->characteristic);
            long long r = n % p;
            if (r < 0) r += p;
            e.res_.assign(f->extension_degree, 0);
            e.res_[0] = static_cast<std::uint64_t>(r);
        }
        return e;
    }

    static FieldElement from_rational(const Field& f, mpq_class q) {
        if (!f->is_rational()) fail(errc::field_mismatch, "rational literal in a finite field");
        FieldElement e(f);
        q.canonicalize();
        e.rat_ = std::move(q);
        return e;
    }

    /// Finite fields only; residues are reduced mod p and padded/truncated to
    /// length k (entries beyond degree k-1 must be absent).
    static FieldElement from_residues(const Field& f, std::vector<std::uint64_t> residues) {
        if (!f->is_finite()) fail(errc::field_mismatch, "residue literal in the rationals");
        if (residues.size() > f->extension_degree) fail(errc::invalid_argument, "residue vector too long");
        FieldElement e(f);
        e.res_.assign(f->extension_degree, 0);
        for (std::size_t i = 0; i < residues.size(); ++i) e.res_[i] = residues[i] % f->characteristic;
        return e;
    }

    /// Enumeration index in [0, q): base-p digits of the residue vector.
    static FieldElement from_index(const Field& f, std::uint64_t index) {
        if (!f->is_finite()) fail(errc::infinite_field, "cannot index elements of an infinite field");
        FieldElement e(f);
        e.res_.assign(f->extension_degree, 0);
        for (unsigned i = 0; i < f->extension_degree; ++i) {
            e.res_[i] = index % f->characteristic;
            index /= f->characteristic;
        }
        return e;
    }

    std::uint64_t index() const {
        if (!field_->is_finite()) fail(errc::infinite_field, "cannot index elements of an infinite field");
        std::uint64_t idx = 0;
        for (std::size_t i = res_.size(); i-- > 0;) idx = idx * field_->characteristic + res_[i];
        return idx;
    }

    const Field& field() const { return field_; }

    bool is_zero() const {
        if (field_->is_rational()) return rat_ == 0;
        for (auto c : res_)
            if (c != 0) return false;
        return true;
    }

    bool is_one() const { return *this == one(field_); }

    const mpq_class& rational() const {
        if (!field_->is_rational()) fail(errc::field_mismatch, "not a rational value");
        return rat_;
    }

    const std::vector<std::uint64_t>& residues() const {
        if (!field_->is_finite()) fail(errc::field_mismatch, "not a finite-field value");
        return res_;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        detail::require_same_field(a.field_, b.field_, "+");
        FieldElement r(a.field_);
        if (a.field_->is_rational()) {
            r.rat_ = a.rat_ + b.rat_;
        } else {
            r.res_.resize(a.res_.size());
            for (std::size_t i = 0; i < r.res_.size(); ++i)
                r.res_[i] = detail::modp::add(a.res_[i], b.res_[i], a.field_->characteristic);
        }
        return r;
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        detail::require_same_field(a.field_, b.field_, "-");
        FieldElement r(a.field_);
        if (a.field_->is_rational()) {
            r.rat_ = a.rat_ - b.rat_;
        } else {
            r.res_.resize(a.res_.size());
            for (std::size_t i = 0; i < r.res_.size(); ++i)
                r.res_[i] = detail::modp::sub(a.res_[i], b.res_[i], a.field_->characteristic);
        }
        return r;
    }

    FieldElement operator-() const { return zero(field_) - *this; }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        detail::require_same_field(a.field_, b.field_, "*");
        FieldElement r(a.field_);
        const auto& f = *a.field_;
        if (f.is_rational()) {
            r.rat_ = a.rat_ * b.rat_;
        } else if (f.extension_degree == 1) {
            r.res_ = {detail::modp::mul(a.res_[0], b.res_[0], f.characteristic)};
        } else {
            auto prod = detail::modp::poly_mul(a.res_, b.res_, f.characteristic);
            prod = detail::modp::poly_mod(prod, f.modulus, f.characteristic);
            prod.resize(f.extension_degree, 0);
            r.res_ = std::move(prod);
        }
        return r;
    }

    FieldElement inverse() const {
        if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
        FieldElement r(field_);
        const auto& f = *field_;
        if (f.is_rational()) {
            r.rat_ = 1 / rat_;
        } else if (f.extension_degree == 1) {
            r.res_ = {detail::modp::inv(res_[0], f.characteristic)};
        } else {
            auto inv = detail::modp::poly_invmod(res_, f.modulus, f.characteristic);
            inv.resize(f.extension_degree, 0);
            r.res_ = std::move(inv);
        }
        return r;
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

    /// a^e with e any integer; negative exponents invert first. 0^0 = 1.
    FieldElement pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElement base = *this;
        FieldElement acc = one(field_);
        auto n = static_cast<unsigned long long>(e);
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        if (!same_field(a.field_, b.field_)) return false;
        return a.field_->is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    explicit FieldElement(Field f) : field_(std::move(f)) {}

    Field field_;
    mpq_class rat_;                    // characteristic 0
    std::vector<std::uint64_t> res_;   // characteristic p: exactly k residues
};

/// Deterministic total order on one field's elements, used for tie-breaking:
/// Q by numerator then denominator, finite fields by residue tuple (low
/// degree first).
inline bool canonical_less(const FieldElement& a, const FieldElement& b) {
    detail::require_same_field(a.field(), b.field(), "canonical_less");
    if (a.field()->is_rational()) {
        const int n = cmp(a.rational().get_num(), b.rational().get_num());
        if (n != 0) return n < 0;
        return cmp(a.rational().get_den(), b.rational().get_den()) < 0;
    }
    return a.residues() < b.residues();
}

// ---------------------------------------------------------------------------
// Orders and discrete logarithms
// ---------------------------------------------------------------------------

/// Smallest s >= 1 with a^s = 1, or nullopt when no power returns to 1
/// (possible only over Q). Errors on a = 0.
inline std::optional<std::uint64_t> multiplicative_order(const FieldElement& a) {
    if (a.is_zero()) fail(errc::zero_element, "multiplicative order of zero");
    const FieldElement one = FieldElement::one(a.field());
    if (a.field()->is_rational()) {
        if (a == one) return 1;
        if (a == -one) return 2;
        return std::nullopt;
    }
    const std::uint64_t q = *a.field()->cardinality;
    FieldElement power = a;
    std::uint64_t s = 1;
    while (power != one) {
        power = power * a;
        ++s;
        if (s > q) fail(errc::internal_error, "order search did not terminate");
    }
    return s;
}

/// All e in [0, bound] with alpha^e = gamma, by iterated multiplication. When
/// alpha has finite order s the result is an arithmetic progression with step
/// s; the empty set is a valid answer.
inline std::vector<std::uint64_t> discrete_log(const FieldElement& alpha, const FieldElement& gamma,
                                               std::uint64_t bound) {
    if (alpha.is_zero() || gamma.is_zero()) fail(errc::zero_element, "discrete log over zero");
    detail::require_same_field(alpha.field(), gamma.field(), "discrete_log");
    std::vector<std::uint64_t> hits;
    FieldElement power = FieldElement::one(alpha.field());
    for (std::uint64_t e = 0; e <= bound; ++e) {
        if (power == gamma) hits.push_back(e);
        power = power * alpha;
    }
    return hits;
}

// ---------------------------------------------------------------------------
// Field-spec text: `Q` | `F<p>` | `F<p>^<k> mod <monic polynomial in t>`
// (prime powers like `F4 mod t^2+t+1` are accepted as shorthand)
// ---------------------------------------------------------------------------

namespace detail {

// evaluate a modulus expression to residues in F_p[t]; 't' is the variable
inline modp::Residues eval_modulus_ast(const ExprNode& node, std::uint64_t p) {
    using modp::Residues;
    switch (node.kind) {
        case ExprNode::Kind::integer: {
            std::uint64_t r = 0;
            for (char c : node.literal) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
            return r == 0 ? Residues{} : Residues{r};
        }
        case ExprNode::Kind::generator: return Residues{0, 1};
        case ExprNode::Kind::variable:
            fail(errc::syntax_error, "'x' is not allowed in a field modulus (use 't') at position " +
                                         std::to_string(node.pos));
        case ExprNode::Kind::negate: {
            auto v = eval_modulus_ast(*node.lhs, p);
            for (auto& c : v) c = modp::sub(0, c, p);
            return v;
        }
        case ExprNode::Kind::add: return modp::poly_add(eval_modulus_ast(*node.lhs, p), eval_modulus_ast(*node.rhs, p), p);
        case ExprNode::Kind::sub: return modp::poly_sub(eval_modulus_ast(*node.lhs, p), eval_modulus_ast(*node.rhs, p), p);
        case ExprNode::Kind::mul: return modp::poly_mul(eval_modulus_ast(*node.lhs, p), eval_modulus_ast(*node.rhs, p), p);
        case ExprNode::Kind::div: {
            auto num = eval_modulus_ast(*node.lhs, p);
            auto den = eval_modulus_ast(*node.rhs, p);
            if (modp::degree(den) != 0)
                fail(errc::syntax_error, "modulus must be polynomial in t at position " + std::to_string(node.pos));
            const std::uint64_t s = modp::inv(den[0], p);
            for (auto& c : num) c = modp::mul(c, s, p);
            return num;
        }
        case ExprNode::Kind::pow: {
            if (node.exponent < 0)
                fail(errc::syntax_error, "negative exponent in modulus at position " + std::to_string(node.pos));
            auto base = eval_modulus_ast(*node.lhs, p);
            Residues acc{1};
            for (long long i = 0; i < node.exponent; ++i) acc = modp::poly_mul(acc, base, p);
            return acc;
        }
        case ExprNode::Kind::group: return eval_modulus_ast(*node.lhs, p);
    }
    fail(errc::internal_error, "unhandled AST node");
}

}  // namespace detail

/// Build a field from descriptor text, validating the modulus when present.
inline Field make_field(const std::string& spec) {
    // split an optional " mod <poly>" tail
    std::string head = spec, modtext;
    if (auto at = spec.find("mod"); at != std::string::npos) {
        head = spec.substr(0, at);
        modtext = spec.substr(at + 3);
    }
    auto strip = [](std::string s) {
        const char* ws = " \t";
        const auto b = s.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    };
    head = strip(head);
    modtext = strip(modtext);

    if (head == "Q") {
        if (!modtext.empty()) fail(errc::syntax_error, "the rationals take no modulus");
        return rationals();
    }
    if (head.empty() || head[0] != 'F') fail(errc::syntax_error, "field spec must be Q or F<q>[^<k>][ mod ...]");

    std::uint64_t q = 0;
    unsigned k = 0;
    std::size_t i = 1;
    auto read_uint = [&](std::uint64_t& out) {
        if (i >= head.size() || !std::isdigit(static_cast<unsigned char>(head[i])))
            fail(errc::syntax_error, "expected a number in field spec '" + head + "'");
        out = 0;
        while (i < head.size() && std::isdigit(static_cast<unsigned char>(head[i]))) {
            out = out * 10 + static_cast<std::uint64_t>(head[i] - '0');
            if (out > (std::uint64_t{1} << 62)) fail(errc::invalid_argument, "field spec number too large");
            ++i;
        }
    };
    read_uint(q);
    if (i < head.size() && head[i] == '^') {
        ++i;
        std::uint64_t kk = 0;
        read_uint(kk);
        if (kk == 0 || kk > 16) fail(errc::invalid_argument, "unsupported extension degree");
        k = static_cast<unsigned>(kk);
        if (!detail::is_prime(q))
            fail(errc::non_prime_characteristic, "F<p>^<k> requires prime p, got " + std::to_string(q));
    }
    if (i < head.size()) fail(errc::syntax_error, "trailing characters in field spec '" + head + "'");

    std::uint64_t p = q;
    if (k == 0) {
        // F<q>: q must be a prime power
        if (q < 2) fail(errc::non_prime_characteristic, "field cardinality must be at least 2");
        std::uint64_t base = q;
        for (std::uint64_t d = 2; d * d <= q; ++d) {
            if (q % d == 0) {
                base = d;
                break;
            }
        }
        unsigned e = 0;
        std::uint64_t rest = q;
        while (rest % base == 0) {
            rest /= base;
            ++e;
        }
        if (rest != 1 || !detail::is_prime(base))
            fail(errc::non_prime_characteristic, std::to_string(q) + " is not a prime power");
        p = base;
        k = e;
    }

    if (k == 1) {
        if (!modtext.empty()) fail(errc::modulus_degree_mismatch, "prime fields take no modulus");
        return prime_field(p);
    }
    if (modtext.empty())
        fail(errc::syntax_error, "extension field F_" + std::to_string(p) + "^" + std::to_string(k) +
                                     " requires 'mod <monic polynomial in t>'");
    auto ast = parse_expression_ast(modtext);
    auto residues = detail::eval_modulus_ast(*ast, p);
    return extension_field(p, k, std::move(residues));
}

}  // namespace linrel

#endif  // LINREL_FIELDS_HPP
