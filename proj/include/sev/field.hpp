/*
   Copyright 2026 the supereig authors

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

/**
 * @file field.hpp
 * @brief Exact arithmetic over the three supported coefficient fields:
 *        the rationals Q, prime fields GF(p) with p an odd prime, and real
 *        or imaginary quadratic extensions Q(sqrt(d)).
 *
 * Elements are immutable values in canonical form: equal elements have
 * identical representations. Rational components use GMP arbitrary
 * precision, so no operation can overflow. Characteristic 2 is rejected
 * at descriptor construction, as is any non-squarefree radicand.
 */

#ifndef SEV_FIELD_HPP
#define SEV_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace sev {

enum class FieldKind { Rationals, PrimeField, QuadraticExtension };

/// Identifies one of the supported fields. Cheap value type; descriptors
/// compare equal iff they denote the same field.
class FieldDescriptor {
  public:
    static FieldDescriptor rationals();
    /// GF(p). Throws unless p is an odd prime (3 <= p < 2^31).
    static FieldDescriptor prime_field(long p);
    /// Q(sqrt(d)). Throws unless d is squarefree and d not in {0, 1}.
    static FieldDescriptor quadratic_extension(long d);

    FieldKind kind() const { return kind_; }
    long prime() const;     // PrimeField only
    long radicand() const;  // QuadraticExtension only
    unsigned long characteristic() const;  // 0 for Q and Q(sqrt(d)), else p

    std::string name() const;  // "Q", "GF(7)", "Q(sqrt(2))"

    bool operator==(const FieldDescriptor&) const = default;

  private:
    FieldDescriptor(FieldKind k, long p, long d) : kind_(k), p_(p), d_(d) {}
    FieldKind kind_;
    long p_;
    long d_;
};

class FieldElement {
  public:
    static FieldElement zero(const FieldDescriptor& f);
    static FieldElement one(const FieldDescriptor& f);
    static FieldElement from_int(const FieldDescriptor& f, long v);
    /// Rational value; for PrimeField the value must have denominator
    /// coprime to p (it is mapped via a/b -> a * b^-1 mod p).
    static FieldElement from_rational(const FieldDescriptor& f, const mpq_class& v);
    /// Q(sqrt(d)) element a + b*sqrt(d).
    static FieldElement quadratic(const FieldDescriptor& f, const mpq_class& a,
                                  const mpq_class& b);

    const FieldDescriptor& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement inverse() const;  // throws on zero

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);  // throws on zero divisor

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// a + b*sqrt(d) -> a - b*sqrt(d). Throws unless the field is a
    /// quadratic extension.
    FieldElement conjugate() const;

    /// Decides squareness and, when the element is a square, returns the
    /// canonical witness w with w^2 = x: the root in [0, (p-1)/2] over
    /// GF(p), the non-negative root over Q, and over Q(sqrt(d)) the root
    /// with non-negative rational part (ties broken by non-negative
    /// sqrt coefficient).
    std::optional<FieldElement> sqrt_if_square() const;

    // Component accessors (throw on kind mismatch).
    const mpq_class& rational() const;   // Rationals
    unsigned long residue() const;       // PrimeField
    const mpq_class& quad_a() const;     // QuadraticExtension, rational part
    const mpq_class& quad_b() const;     // QuadraticExtension, sqrt coefficient

    std::string to_string() const;
    static FieldElement parse(const FieldDescriptor& f, std::string_view text);

  private:
    struct Quad {
        mpq_class a, b;
        bool operator==(const Quad&) const = default;
    };
    FieldElement(FieldDescriptor f, mpq_class q) : field_(f), v_(std::move(q)) {}
    FieldElement(FieldDescriptor f, unsigned long r) : field_(f), v_(r) {}
    FieldElement(FieldDescriptor f, Quad q) : field_(f), v_(std::move(q)) {}

    FieldDescriptor field_;
    std::variant<mpq_class, unsigned long, Quad> v_;
};

FieldElement operator+(FieldElement lhs, const FieldElement& rhs);
FieldElement operator-(FieldElement lhs, const FieldElement& rhs);
FieldElement operator*(FieldElement lhs, const FieldElement& rhs);
FieldElement operator/(FieldElement lhs, const FieldElement& rhs);

/// Total order used for canonical sorting and set keys; consistent with
/// numeric order on Q, residue order on GF(p), lexicographic (a, b) on
/// Q(sqrt(d)). Returns <0, 0, >0.
int cmp(const FieldElement& a, const FieldElement& b);

struct FieldElementLess {
    bool operator()(const FieldElement& a, const FieldElement& b) const {
        return cmp(a, b) < 0;
    }
};

/// x^e with e >= 0 (binary powering).
FieldElement pow(const FieldElement& x, const mpz_class& e);

}  // namespace sev

#endif
