#pragma once

// Exact scalars: the rationals, prime fields GF(p), and explicit finite
// extensions k[x]/(p(x)) of either, with a declared set of automorphisms
// given by the image of the generator.

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hforge/error.hpp"

namespace hforge {

enum class FieldKind { rational, prime, extension };

using Coords = boost::container::small_vector<mpq_class, 1>;
using BasePoly = std::vector<mpq_class>;  // little-endian, constant term first

struct FieldData;
class FieldElement;

/// Shared, immutable field descriptor.
///
/// Extensions are always stored flattened over their prime field (ℚ or GF(p)):
/// elements are coordinate vectors in the power basis of a single generator.
class Field {
public:
    Field() = default;

    static Field rational();
    static Field prime(const mpz_class& p);
    /// `minpoly` is monic over `base` (little-endian); `automorphisms` maps a
    /// label to the image of the generator in the power basis.
    static Field extension(const Field& base, const BasePoly& minpoly,
                           const std::map<std::string, BasePoly>& automorphisms);

    bool valid() const { return data_ != nullptr; }
    FieldKind kind() const;
    std::size_t degree() const;                // over the prime field
    const mpz_class& characteristic() const;   // 0 for ℚ-based fields
    bool is_finite() const;
    mpz_class order() const;                   // q for finite fields; throws otherwise
    Field prime_field() const;
    const BasePoly& minpoly() const;
    // False when irreducibility of the minimal polynomial was outside the
    // bounded checker and accepted unchecked.
    bool irreducibility_checked() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long long v) const;
    FieldElement from_rational(const mpq_class& v) const;
    FieldElement from_coords(std::span<const mpq_class> coords) const;
    FieldElement generator() const;
    /// "3/2", "-1", or "[c0,c1,...]" for extension coordinates.
    FieldElement parse(const std::string& text) const;
    /// Image of a prime-field element (of this or another descriptor with the
    /// same prime field) inside this field.
    FieldElement embed(const FieldElement& x) const;

    std::vector<std::string> automorphism_labels() const;
    bool has_automorphism(const std::string& label) const;
    FieldElement apply(const std::string& label, const FieldElement& x) const;
    /// Label of label_a ∘ label_b.
    std::string compose(const std::string& a, const std::string& b) const;
    std::string identity_automorphism() const;

    /// Elements in canonical order (base-p digits, constant term least significant).
    FieldElement element_at(const mpz_class& index) const;

    std::string describe() const;
    const FieldData& data() const { return *data_; }

    friend bool operator==(const Field& a, const Field& b);

private:
    explicit Field(std::shared_ptr<const FieldData> d) : data_(std::move(d)) {}
    std::shared_ptr<const FieldData> data_;
    friend class FieldElement;
};

class FieldElement {
public:
    FieldElement() = default;

    const Field& field() const { return field_; }
    std::span<const mpq_class> coords() const { return {coords_.data(), coords_.size()}; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the element lies in the prime field (all higher coordinates zero).
    bool in_prime_field() const;

    FieldElement inverse() const;
    FieldElement pow(long long e) const;
    FieldElement& operator+=(const FieldElement& b);
    FieldElement& operator-=(const FieldElement& b);
    FieldElement& operator*=(const FieldElement& b);
    FieldElement& operator/=(const FieldElement& b) { return *this *= b.inverse(); }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    FieldElement operator-() const;
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    /// Canonical total order (for deterministic tie-breaking only).
    friend bool canonical_less(const FieldElement& a, const FieldElement& b);

    std::string to_string() const;

private:
    FieldElement(Field f, Coords c) : field_(std::move(f)), coords_(std::move(c)) {}
    Field field_;
    Coords coords_;
    friend class Field;
    friend FieldElement apply_matrix(const FieldElement&, const std::vector<BasePoly>&);
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Smallest (in canonical order for finite fields) element of exact
/// multiplicative order n. Throws MathError "no primitive n-th root in F".
FieldElement roots_of_unity_subgroup(const Field& f, long long n);

/// Multiplicative order of a nonzero element, or nullopt if it exceeds `bound`.
std::optional<long long> multiplicative_order(const FieldElement& x, long long bound);

/// Irreducibility over a prime field. nullopt when the bounded checker
/// cannot decide (ℚ, degree > 4, or unfactorable coefficients).
std::optional<bool> is_irreducible(const Field& prime_field, const BasePoly& poly);

/// Integer coefficients of the n-th cyclotomic polynomial.
std::vector<mpz_class> cyclotomic_polynomial(long long n);

}  // namespace hforge
