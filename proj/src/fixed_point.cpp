#include "paircorr/fixed_point.hpp"

#include <utility>

namespace paircorr {

mpz_class pow2(unsigned long bits) {
    mpz_class p;
    mpz_setbit(p.get_mpz_t(), bits);
    return p;
}

FixedPoint::FixedPoint(mpz_class numerator, unsigned scale_bits)
    : num_(std::move(numerator)), bits_(scale_bits) {
    if (bits_ == 0) throw InvalidParamsError("scale_bits must be positive");
    if (num_ < 0 || mpz_sizeinbase(num_.get_mpz_t(), 2) > bits_)
        throw InvalidParamsError("numerator outside [0, 2^scale_bits)");
}

mpz_class dyadic_from_ratio(const mpz_class& num, const mpz_class& den, unsigned bits) {
    if (den <= 0) throw InvalidParamsError("denominator must be positive");
    mpz_class n = num % den;
    if (n < 0) n += den;
    // round half up: floor((2*n*2^bits + den) / (2*den))
    mpz_class q = (n << (bits + 1)) + den;
    q /= 2 * den;
    if (mpz_tstbit(q.get_mpz_t(), bits)) q = 0;  // rounded up to 1.0 == 0 on the circle
    return q;
}

FixedPoint FixedPoint::from_ratio(const mpz_class& num, const mpz_class& den,
                                  unsigned scale_bits) {
    return FixedPoint(dyadic_from_ratio(num, den, scale_bits), scale_bits);
}

mpq_class FixedPoint::value() const {
    mpq_class v(num_, pow2(bits_));
    v.canonicalize();
    return v;
}

double FixedPoint::to_double() const { return value().get_d(); }

bool FixedPoint::operator==(const FixedPoint& o) const {
    if (bits_ != o.bits_)
        throw PrecisionMismatchError("comparing FixedPoint values with different scale_bits");
    return num_ == o.num_;
}

mpq_class frac_dist(const FixedPoint& x, const FixedPoint& y) {
    if (x.scale_bits() != y.scale_bits())
        throw PrecisionMismatchError("frac_dist: scale_bits mismatch");
    mpz_class d = x.numerator() - y.numerator();
    if (d < 0) d = -d;
    mpz_class wrap = pow2(x.scale_bits()) - d;
    if (wrap < d) d = wrap;
    mpq_class r(d, pow2(x.scale_bits()));
    r.canonicalize();
    return r;
}

PointSet::PointSet(std::vector<mpz_class> numerators, unsigned scale_bits,
                   std::string provenance)
    : nums_(std::move(numerators)), bits_(scale_bits), provenance_(std::move(provenance)) {
    if (bits_ == 0) throw InvalidParamsError("scale_bits must be positive");
    if (nums_.empty()) throw DegenerateInputError("PointSet requires at least one point");
    const mpz_class one = pow2(bits_);
    for (const mpz_class& v : nums_)
        if (v < 0 || v >= one)
            throw InvalidParamsError("point numerator outside [0, 2^scale_bits)");
}

FixedPoint PointSet::at(std::size_t i) const {
    return FixedPoint(nums_.at(i), bits_);
}

PointSet PointSet::prefix(std::size_t n) const {
    if (n == 0 || n > nums_.size())
        throw InvalidParamsError("prefix length out of range");
    return PointSet(std::vector<mpz_class>(nums_.begin(), nums_.begin() + n),
                    bits_, provenance_);
}

std::string decimal_string(const mpz_class& num, unsigned bits, int sig_digits) {
    if (num == 0) return "0";
    if (sig_digits < 1) sig_digits = 1;
    const mpz_class denom = pow2(bits);
    // leading decimal zeros after the point: smallest z with num*10^(z+1) >= 2^bits
    unsigned long zeros = 0;
    mpz_class scaled = num * 10;
    while (scaled < denom) {
        scaled *= 10;
        ++zeros;
    }
    mpz_class ten_k;
    mpz_ui_pow_ui(ten_k.get_mpz_t(), 10, zeros + static_cast<unsigned long>(sig_digits));
    // round to nearest
    mpz_class digits = (num * ten_k * 2 + denom) / (2 * denom);
    std::string ds = digits.get_str();
    if (ds.size() > static_cast<std::size_t>(sig_digits)) {
        // rounding carried into a new leading digit (e.g. 0.0999.. -> 0.100..)
        if (zeros == 0) {
            // value rounded up to 1.0 at this many digits
            return "0." + std::string(static_cast<std::size_t>(sig_digits), '9');
        }
        --zeros;
        ds.pop_back();
    }
    std::string out = "0.";
    out.append(zeros, '0');
    out += ds;
    return out;
}

}  // namespace paircorr
