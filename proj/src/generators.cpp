#include "paircorr/generators.hpp"

#include <random>
#include <string>

namespace paircorr {

namespace {

bool is_prime(unsigned long v) {
    if (v < 2) return false;
    for (unsigned long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

void validate_digital(const DigitalParams& p) {
    if (!is_prime(p.base))
        throw UnsupportedBaseError("digital sequences need a prime base, got " +
                                   std::to_string(p.base));
    const std::size_t m = p.matrix.size();
    if (m == 0) throw InvalidParamsError("empty generator matrix");
    for (const auto& row : p.matrix) {
        if (row.size() != m) throw InvalidParamsError("generator matrix must be square");
        for (unsigned e : row)
            if (e >= p.base) throw InvalidParamsError("matrix entry outside {0..b-1}");
    }
}

}  // namespace

mpz_class ls_beta_numerator(const LSParams& p, unsigned bits) {
    if (p.L < 1 || p.L + p.S < 2)
        throw InvalidParamsError("LS parameters need L >= 1 and L + S >= 2");
    if (p.S == 0) {
        mpz_class b = pow2(bits) / p.L;
        return b;
    }
    // beta = (-L + sqrt(L^2 + 4S)) / (2S), truncated
    mpz_class disc = mpz_class(p.L) * p.L + 4 * mpz_class(p.S);
    mpz_class root = disc << (2 * bits);
    mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());  // floor(sqrt(disc) * 2^bits)
    mpz_class num = (root - (mpz_class(p.L) << bits)) / (2 * p.S);
    return num;
}

LSState ls_counts(const LSParams& p, unsigned level) {
    if (p.L < 1 || p.L + p.S < 2)
        throw InvalidParamsError("LS parameters need L >= 1 and L + S >= 2");
    LSState st;  // level 0: the trivial partition, one long interval
    for (unsigned i = 0; i < level; ++i) {
        const std::uint64_t l_next = p.L * st.l + st.s;
        const std::uint64_t s_next = p.S * st.l;
        st.l = l_next;
        st.s = s_next;
        st.t = st.l + st.s;
        ++st.level;
    }
    return st;
}

PointSet kronecker(const FixedPoint& alpha, std::uint64_t n,
                   const std::string& alpha_spec) {
    if (n == 0) throw InvalidParamsError("need at least one point");
    const mpz_class one = pow2(alpha.scale_bits());
    std::vector<mpz_class> pts;
    pts.reserve(n);
    mpz_class cur = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        cur += alpha.numerator();
        if (cur >= one) cur -= one;
        pts.push_back(cur);
    }
    const std::string spec =
        alpha_spec.empty() ? "bits:" + alpha.numerator().get_str(16) : alpha_spec;
    return PointSet(std::move(pts), alpha.scale_bits(), "kronecker:" + spec);
}

PointSet van_der_corput(unsigned base, std::uint64_t n, unsigned scale_bits) {
    if (base < 2) throw InvalidParamsError("base must be >= 2");
    if (n == 0) throw InvalidParamsError("need at least one point");
    std::vector<mpz_class> pts;
    pts.reserve(n);
    mpz_class den, rev;
    for (std::uint64_t i = 1; i <= n; ++i) {
        den = 1;
        rev = 0;
        std::uint64_t v = i;
        while (v > 0) {
            rev = rev * base + static_cast<unsigned long>(v % base);
            den *= base;
            v /= base;
        }
        pts.push_back(dyadic_from_ratio(rev, den, scale_bits));
    }
    return PointSet(std::move(pts), scale_bits, "vdc:" + std::to_string(base));
}

PointSet ls_sequence(const LSParams& p, std::uint64_t n, unsigned scale_bits) {
    if (n == 0) throw InvalidParamsError("need at least one point");
    const unsigned work_bits = scale_bits + 64;
    const mpz_class beta = ls_beta_numerator(p, work_bits);

    // beta powers on the working grid, truncated after each multiply
    std::vector<mpz_class> pow_beta = {pow2(work_bits), beta};
    auto beta_pow = [&](unsigned e) -> const mpz_class& {
        while (pow_beta.size() <= e) {
            mpz_class next = pow_beta.back() * beta;
            next >>= work_bits;
            pow_beta.push_back(next);
        }
        return pow_beta[e];
    };

    // level 1: left endpoints of rho(pi), ascending
    std::vector<mpz_class> seq;
    for (unsigned i = 0; i < p.L; ++i) seq.push_back(i * beta_pow(1));
    for (unsigned j = 0; j < p.S; ++j)
        seq.push_back(p.L * beta_pow(1) + j * beta_pow(2));

    LSState st = ls_counts(p, 1);
    while (seq.size() < n) {
        const unsigned lvl = st.level + 1;  // appending the points new to level lvl
        const std::uint64_t l_prev = st.l;
        for (unsigned i = 1; i <= p.L; ++i)
            for (std::uint64_t kpt = 0; kpt < l_prev; ++kpt)
                seq.push_back(seq[kpt] + i * beta_pow(lvl));
        for (unsigned j = 1; j < p.S; ++j)
            for (std::uint64_t kpt = 0; kpt < l_prev; ++kpt)
                seq.push_back(seq[kpt] + p.L * beta_pow(lvl) + j * beta_pow(lvl + 1));
        st = ls_counts(p, lvl);
        if (seq.size() != st.t)
            throw ConstructionFailedError("LS level size disagrees with the counting recursion");
    }

    seq.resize(n);
    const unsigned shift = work_bits - scale_bits;
    const mpz_class half = pow2(shift - 1);
    const mpz_class wrap = pow2(scale_bits);
    std::vector<mpz_class> pts;
    pts.reserve(n);
    for (mpz_class& v : seq) {
        mpz_class r = (v + half) >> shift;
        if (r >= wrap) r -= wrap;
        pts.push_back(std::move(r));
    }
    return PointSet(std::move(pts), scale_bits,
                    "ls:" + std::to_string(p.L) + "," + std::to_string(p.S));
}

PointSet digital_sequence(const DigitalParams& p, std::uint64_t n, unsigned scale_bits) {
    validate_digital(p);
    if (n == 0) throw InvalidParamsError("need at least one point");
    const unsigned m = static_cast<unsigned>(p.matrix.size());
    mpz_class capacity;
    mpz_ui_pow_ui(capacity.get_mpz_t(), p.base, m);
    if (mpz_class(static_cast<unsigned long>(n)) > capacity)
        throw InvalidParamsError("N exceeds b^m for the given matrix");

    std::vector<unsigned> digits(m, 0);   // b-adic digits of n, lowest first
    std::vector<unsigned> out(m, 0);      // C * digits mod b
    std::vector<mpz_class> place(m);      // b^(m-1-i) weights for the output value
    place[m - 1] = 1;
    for (int i = static_cast<int>(m) - 2; i >= 0; --i) place[i] = place[i + 1] * p.base;

    std::vector<mpz_class> pts;
    pts.reserve(n);
    mpz_class c;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        if (idx > 0) {
            // increment the digit vector, updating the output incrementally
            unsigned j = 0;
            for (;;) {
                const unsigned old = digits[j];
                const unsigned neu = (old + 1) % p.base;
                digits[j] = neu;
                const unsigned delta = (neu + p.base - old) % p.base;
                for (unsigned i = 0; i < m; ++i)
                    out[i] = (out[i] + p.matrix[i][j] * delta) % p.base;
                if (neu != 0) break;
                ++j;
            }
        }
        c = 0;
        for (unsigned i = 0; i < m; ++i)
            if (out[i] != 0) c += place[i] * out[i];
        pts.push_back(dyadic_from_ratio(c, capacity, scale_bits));
    }
    return PointSet(std::move(pts), scale_bits,
                    "digital:" + std::to_string(p.base) + ",m=" + std::to_string(m) +
                        ",t=" + std::to_string(p.t_quality));
}

DigitalParams digital_identity(unsigned base, unsigned m) {
    DigitalParams p;
    p.base = base;
    p.t_quality = 0;
    p.matrix.assign(m, std::vector<unsigned>(m, 0));
    for (unsigned i = 0; i < m; ++i) p.matrix[i][i] = 1;
    return p;
}

DigitalParams digital_duplicated_row(unsigned base, unsigned m) {
    if (m < 2) throw InvalidParamsError("duplicated-row matrix needs m >= 2");
    DigitalParams p = digital_identity(base, m);
    p.matrix[1] = p.matrix[0];
    p.t_quality = 1;
    return p;
}

PointSet shift_sequence(const DigitStream& stream, std::uint64_t n,
                        unsigned guard_digits, unsigned scale_bits) {
    if (n == 0) throw InvalidParamsError("need at least one point");
    if (guard_digits == 0) throw InvalidParamsError("guard_digits must be positive");
    const unsigned b = stream.base();

    // digits needed to pin scale_bits bits, plus guard
    unsigned fill = 0;
    mpz_class cap = 1;
    const mpz_class grid = pow2(scale_bits);
    while (cap < grid) {
        cap *= b;
        ++fill;
    }
    const unsigned window = fill + guard_digits;

    if (stream.length() && *stream.length() < n + window)
        throw InsufficientDigitsError(
            "stream '" + stream.descriptor() + "' has " +
            std::to_string(*stream.length()) + " digits, need " +
            std::to_string(n + window));

    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), b, window);
    mpz_class top;  // b^(window-1)
    mpz_ui_pow_ui(top.get_mpz_t(), b, window - 1);

    // x_1 reads digits a_2 .. a_{window+1}: stream positions 1..window
    mpz_class c = 0;
    for (unsigned i = 0; i < window; ++i) c = c * b + stream.digit(1 + i);

    std::vector<mpz_class> pts;
    pts.reserve(n);
    pts.push_back(dyadic_from_ratio(c, den, scale_bits));
    for (std::uint64_t i = 2; i <= n; ++i) {
        // slide: drop digit a_{i}, append digit a_{i+window}
        mpz_submul_ui(c.get_mpz_t(), top.get_mpz_t(), stream.digit(i - 1));
        c *= b;
        c += stream.digit(i - 1 + window);
        pts.push_back(dyadic_from_ratio(c, den, scale_bits));
    }
    return PointSet(std::move(pts), scale_bits,
                    "shift:" + stream.descriptor() + "," + std::to_string(b));
}

PointSet random_points(std::uint64_t n, std::uint64_t seed, unsigned scale_bits) {
    if (n == 0) throw InvalidParamsError("need at least one point");
    std::mt19937_64 eng(seed);
    const unsigned words = (scale_bits + 63) / 64;
    std::vector<std::uint64_t> buf(words);
    std::vector<mpz_class> pts;
    pts.reserve(n);
    mpz_class v;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (unsigned w = 0; w < words; ++w) buf[w] = eng();
        mpz_import(v.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
        mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), scale_bits);
        pts.push_back(v);
    }
    return PointSet(std::move(pts), scale_bits, "random:" + std::to_string(seed));
}

FixedPoint golden_ratio_alpha(unsigned scale_bits) {
    // (sqrt(5) - 1) / 2 truncated
    mpz_class r = mpz_class(5) << (2 * scale_bits);
    mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
    r -= pow2(scale_bits);
    r >>= 1;
    return FixedPoint(r, scale_bits);
}

FixedPoint sqrt_alpha(unsigned long k, unsigned scale_bits) {
    // {sqrt(k)} truncated
    mpz_class r = mpz_class(k) << (2 * scale_bits);
    mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
    mpz_class intpart;
    mpz_sqrt(intpart.get_mpz_t(), mpz_class(k).get_mpz_t());
    r -= intpart << scale_bits;
    return FixedPoint(r, scale_bits);
}

}  // namespace paircorr
