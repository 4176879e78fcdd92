#include <mpfr.h>

#include "dimerforge/matchings.hpp"

namespace dimerforge {

namespace {

class Interval {
public:
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
    }
    ~Interval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;

    mpfr_t lo, hi;
};

// Bounds on cos^2(j*pi/d) for 0 <= j*pi/d < pi/2, where cos is decreasing.
void cos_squared(Interval& out, const Interval& pi, unsigned long j, unsigned long d, mpfr_prec_t prec) {
    Interval angle(prec);
    mpfr_mul_ui(angle.lo, pi.lo, j, MPFR_RNDD);
    mpfr_div_ui(angle.lo, angle.lo, d, MPFR_RNDD);
    mpfr_mul_ui(angle.hi, pi.hi, j, MPFR_RNDU);
    mpfr_div_ui(angle.hi, angle.hi, d, MPFR_RNDU);
    mpfr_cos(out.lo, angle.hi, MPFR_RNDD);
    mpfr_cos(out.hi, angle.lo, MPFR_RNDU);
    if (mpfr_sgn(out.lo) < 0) mpfr_set_ui(out.lo, 0, MPFR_RNDD);
    mpfr_sqr(out.lo, out.lo, MPFR_RNDD);
    mpfr_sqr(out.hi, out.hi, MPFR_RNDU);
}

}  // namespace

BigInt kasteleyn_grid_count(int m, int n) {
    if (m < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "grid dimensions must be positive");
    for (mpfr_prec_t prec = 64; prec <= (1 << 18); prec *= 2) {
        Interval pi(prec), prod(prec), a(prec), b(prec);
        mpfr_const_pi(pi.lo, MPFR_RNDD);
        mpfr_const_pi(pi.hi, MPFR_RNDU);
        mpfr_set_ui(prod.lo, 1, MPFR_RNDD);
        mpfr_set_ui(prod.hi, 1, MPFR_RNDU);
        for (int j = 1; j <= m; ++j) {
            cos_squared(a, pi, j, 2 * m + 1, prec);
            for (int k = 1; k <= n; ++k) {
                cos_squared(b, pi, k, 2 * n + 1, prec);
                Interval s(prec);
                mpfr_add(s.lo, a.lo, b.lo, MPFR_RNDD);
                mpfr_add(s.hi, a.hi, b.hi, MPFR_RNDU);
                mpfr_mul(prod.lo, prod.lo, s.lo, MPFR_RNDD);
                mpfr_mul(prod.hi, prod.hi, s.hi, MPFR_RNDU);
            }
        }
        unsigned long shift = 2ul * static_cast<unsigned long>(m) * static_cast<unsigned long>(n);
        mpfr_mul_2ui(prod.lo, prod.lo, shift, MPFR_RNDD);
        mpfr_mul_2ui(prod.hi, prod.hi, shift, MPFR_RNDU);
        BigInt lo_int, hi_int;
        mpfr_get_z(lo_int.get_mpz_t(), prod.lo, MPFR_RNDU);
        mpfr_get_z(hi_int.get_mpz_t(), prod.hi, MPFR_RNDD);
        if (lo_int == hi_int) return lo_int;
    }
    throw Error(ErrorKind::PrecisionExhausted, "interval never isolated a single integer");
}

}  // namespace dimerforge
