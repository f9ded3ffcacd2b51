#include "richlines/scalar.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace richlines {

std::string_view field_tag(Field f) { return f == Field::rational ? "Q" : "Qi"; }

Field parse_field_tag(std::string_view tag) {
    if (tag == "Q") return Field::rational;
    if (tag == "Qi") return Field::gaussian;
    throw std::invalid_argument("unknown field tag '" + std::string(tag) + "'");
}

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
    if (text.empty()) throw std::invalid_argument("malformed scalar '" + std::string(whole) + "'");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    for (std::size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && k == 0);
        if (!ok) throw std::invalid_argument("malformed scalar '" + std::string(whole) + "'");
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed scalar '" + std::string(whole) + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    q.canonicalize();
    return q;
}

// "r/s*i", "r/s i"-less forms: "*i", "i", "-i", "+i".
mpq_class parse_imaginary(std::string_view text, std::string_view whole) {
    std::string_view body = text.substr(0, text.size() - 1);  // drop trailing 'i'
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);
    if (body.empty() || body == "+") return mpq_class(1);
    if (body == "-") return mpq_class(-1);
    return parse_rational(body, whole);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') compact.push_back(c);
    std::string_view s(compact);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rational(s, text));

    // Split the real and imaginary parts at the first sign after position 0.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return Scalar(mpq_class(0), parse_imaginary(s, text));
    std::string_view real_part = s.substr(0, split);
    std::string_view imag_part = s.substr(split);
    if (imag_part.size() > 1 && imag_part[0] == '+' && imag_part[1] == '-') imag_part.remove_prefix(1);
    return Scalar(parse_rational(real_part, text), parse_imaginary(imag_part, text));
}

namespace {
std::string fraction(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }
}  // namespace

std::string Scalar::str() const {
    if (is_real()) return fraction(re_);
    std::string out = fraction(re_);
    if (sgn(im_) < 0)
        out += "-" + fraction(mpq_class(-im_));
    else
        out += "+" + fraction(im_);
    return out + "*i";
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (is_real()) return Scalar(mpq_class(1) / re_);
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    if (!o.is_real()) im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (!o.is_real()) im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    if (is_real() && o.is_real()) {
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar out(*this);
    out.re_ = -out.re_;
    if (!is_real()) out.im_ = -out.im_;
    return out;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

mpz_class Scalar::denominator_lcm() const {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), re_.get_den_mpz_t(), im_.get_den_mpz_t());
    return l;
}

namespace {
std::size_t hash_mpz(mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(mpz_size(z)) * 0x9e3779b97f4a7c15ULL;
    if (mpz_size(z) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0)) + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(mpz_sgn(z) + 1);
}

void mix(std::size_t& seed, std::size_t v) { seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); }
}  // namespace

std::size_t Scalar::hash() const {
    std::size_t h = hash_mpz(re_.get_num_mpz_t());
    mix(h, hash_mpz(re_.get_den_mpz_t()));
    if (!is_real()) {
        mix(h, hash_mpz(im_.get_num_mpz_t()));
        mix(h, hash_mpz(im_.get_den_mpz_t()));
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

std::size_t VecHash::operator()(const Vec& v) const {
    std::size_t h = v.size();
    for (const auto& s : v) mix(h, s.hash());
    return h;
}

Field field_of(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_real()) return Field::gaussian;
    return Field::rational;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec out(a);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec out(a);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] -= b[k];
    return out;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec out(v);
    for (auto& x : out) x *= s;
    return out;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Scalar acc;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) acc += a[k] * b[k];
    return acc;
}

bool is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

std::size_t pivot_index(const Vec& v) {
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) return k;
    return v.size();
}

Vec pivot_normalized(const Vec& v) {
    std::size_t p = pivot_index(v);
    if (p == v.size() || v[p].is_one()) return v;
    Scalar inv = v[p].inverse();
    Vec out(v);
    for (std::size_t k = p; k < out.size(); ++k)
        if (!out[k].is_zero()) out[k] *= inv;
    return out;
}

bool is_sign_canonical(const Vec& v) {
    std::size_t p = pivot_index(v);
    if (p == v.size()) return false;
    int s = sgn(v[p].re());
    return s > 0 || (s == 0 && sgn(v[p].im()) > 0);
}

}  // namespace richlines
