#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "skewseries/errors.hpp"

namespace skewseries {

using Rational = boost::multiprecision::cpp_rational;

// Descriptor of the base field k: the rationals or a prime field F_p.
class Field {
  public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(std::int64_t p);

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::Prime; }
    std::int64_t modulus() const { return p_; }

    bool operator==(const Field& other) const = default;

    std::string describe() const;

  private:
    Field(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::int64_t p_;  // 0 for the rationals
};

// Exact scalar in a fixed base field. Rationals are kept in lowest terms with a
// positive denominator (cpp_rational maintains that); F_p residues are kept in 0..p-1.
class FieldElem {
  public:
    FieldElem(Field field, long value);
    FieldElem(Field field, const Rational& value);  // rationals only
    static FieldElem zero(Field field) { return FieldElem(field, 0); }
    static FieldElem one(Field field) { return FieldElem(field, 1); }

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& rhs) const;
    FieldElem operator-(const FieldElem& rhs) const;
    FieldElem operator*(const FieldElem& rhs) const;
    FieldElem inv() const;  // throws not_a_unit on zero
    FieldElem operator/(const FieldElem& rhs) const { return *this * rhs.inv(); }

    bool operator==(const FieldElem& rhs) const;
    bool operator!=(const FieldElem& rhs) const { return !(*this == rhs); }

    // "n", "-n" or "n/d"; prime-field residues print as canonical residues.
    std::string to_string() const;
    static FieldElem from_string(Field field, const std::string& text);

    // Rationals only.
    const Rational& rational() const;
    // Prime fields only.
    std::int64_t residue() const;

  private:
    void check_same_field(const FieldElem& other) const;

    Field field_;
    Rational rat_;        // used when field is the rationals
    std::int64_t res_{};  // used when field is F_p
};

}  // namespace skewseries
