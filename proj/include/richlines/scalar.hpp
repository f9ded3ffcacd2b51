#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace richlines {

/// Which exact subfield of the complex numbers a value (or a whole
/// configuration) lives in.
enum class Field { rational, gaussian };

std::string_view field_tag(Field f);  // "Q" or "Qi"
Field parse_field_tag(std::string_view tag);

/*
 * Scalar: an element of Q(i), stored as a pair of canonical GMP rationals.
 *
 * Q is the subset with zero imaginary part; every operation on two real
 * operands stays on the real fast path and never touches the imaginary
 * component. Ordering is lexicographic (real part, then imaginary part):
 * this is the order used to sort points along a line and to canonicalize
 * containers, not a field order.
 */
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /// Parses "p", "p/q", "p/q+r/s*i", "p/q-r/s*i", "r/s*i" and "i".
    static Scalar parse(std::string_view text);
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    /// "p/q" for rationals, "p/q+r/s*i" otherwise (denominator always printed).
    std::string str() const;

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return is_real() && re_ == 1; }
    Field field() const { return is_real() ? Field::rational : Field::gaussian; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// Least common multiple of the denominators of both components.
    mpz_class denominator_lcm() const;

    std::size_t hash() const;

private:
    mpq_class re_;
    mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

struct ScalarHash {
    std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

using Vec = std::vector<Scalar>;

struct VecHash {
    std::size_t operator()(const Vec& v) const;
};

/// Field spanned by a collection of values: gaussian iff any has nonzero imaginary part.
Field field_of(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);  // bilinear, no conjugation
bool is_zero(const Vec& v);

/// Index of the first nonzero entry, or v.size() if none.
std::size_t pivot_index(const Vec& v);

/// Scales v so its first nonzero entry is 1. Zero vectors are returned unchanged.
Vec pivot_normalized(const Vec& v);

/// Sign canonicalization for differences: the first nonzero entry has positive
/// real part, or zero real part and positive imaginary part.
bool is_sign_canonical(const Vec& v);

}  // namespace richlines
