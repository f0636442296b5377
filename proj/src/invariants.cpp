#include "scff/invariants.hpp"

#include "scff/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace scff {

ShanksField build_field(uint32_t q, const Poly& A, uint64_t seed) {
    Fq check(q);
    if (A.degree() < 1) throw std::domain_error("build_field: A must be non-constant");
    ShanksField f;
    f.q = q;
    f.A = A;
    f.canonical_A = frobenius_canonical(A);
    f.frobenius_power = is_frobenius_power(A);
    ShanksPoly sp(A);
    f.disc_f_base = sp.disc_base();
    f.cube_free = is_cube_free(f.disc_f_base, seed);
    StandardForm sf = standard_form(sp);
    const int dA = A.degree();
    f.regulator_upper = static_cast<int64_t>(dA) * dA;
    if (f.cube_free) {
        f.index = poly_gcd(f.disc_f_base, A.derivative());
        f.genus = 2 * dA - f.index.degree() - 2;
        f.regulator = f.regulator_upper;
        f.sf = sf;
        f.Q = Poly::constant(q, 1);
    } else {
        ReducedForm rf = reduce_standard_form(sf, seed);
        f.sf = rf.reduced;
        f.Q = rf.Q;
        f.index = rf.Q * rf.Q * rf.Q;
        f.genus = 2 * dA - f.index.degree() - 2;
        // otherwise the regulator is only known inside [deg(D_K)^2/16, deg(A)^2]
        if (f.index.degree() <= dA - 1) f.regulator = f.regulator_upper;
    }
    auto [base, rem] = f.disc_f_base.divmod(f.index);
    if (!rem.is_zero()) throw InconsistencyError("build_field: index does not divide A^2+3A+9");
    f.disc_K_base = base;
    if (f.genus < 0) throw InconsistencyError("build_field: negative genus");
    return f;
}

HWInterval hasse_weil(uint32_t q, int g) {
    if (g < 0) throw std::domain_error("hasse_weil: g >= 0");
    double s = std::sqrt(static_cast<double>(q));
    double lo = std::pow(s - 1.0, 2 * g);
    double hi = std::pow(s + 1.0, 2 * g);
    // outward rounding so membership is never falsely rejected
    lo = std::nextafter(lo, 0.0);
    hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    return {lo, hi};
}

double max_measure(int64_t hprime, uint32_t q, int g, int64_t R) {
    if (R < 1 || hprime < 1) throw std::domain_error("max_measure: R >= 1, h' >= 1");
    double s = std::sqrt(static_cast<double>(q));
    double lo = std::ceil(std::pow(s - 1.0, 2 * g) / static_cast<double>(R));
    double hi = std::floor(std::pow(s + 1.0, 2 * g) / static_cast<double>(R));
    double den = hi - lo;
    if (den == 0.0) throw std::domain_error("max_measure: undefined (degenerate interval)");
    return (static_cast<double>(hprime) - lo) / den;
}

std::optional<std::pair<int64_t, int64_t>> norm_form_decompose(int64_t hprime) {
    if (hprime < 1) throw std::domain_error("norm_form_decompose: h' >= 1");
    for (int64_t a = 0; a * a <= hprime; ++a) {
        int64_t r = hprime - a * a;
        if (r % 3) continue;
        int64_t s = r / 3;
        auto b = static_cast<int64_t>(std::sqrt(static_cast<double>(s)));
        while (b * b > s) --b;
        while ((b + 1) * (b + 1) <= s) ++b;
        if (b * b == s) return std::make_pair(a, b);
    }
    return std::nullopt;
}

RegulatorBounds regulator_bounds(const ShanksField& field) {
    RegulatorBounds rb;
    rb.deg_disc_K = 2 * field.disc_K_base.degree();
    rb.upper = field.regulator_upper;
    rb.pinned = field.deg_index() <= field.deg_A() - 1;
    auto lower = static_cast<int64_t>(std::ceil(static_cast<double>(rb.deg_disc_K) * rb.deg_disc_K / 16.0));
    for (int64_t r = std::max<int64_t>(lower, 1); r <= rb.upper; ++r)
        if (rb.upper % r == 0) rb.candidates.push_back(r);
    return rb;
}

int64_t class_number_relation(int64_t h, int64_t R) {
    if (R < 1) throw std::domain_error("class_number_relation: R >= 1");
    if (h % R != 0)
        throw InconsistencyError("class_number_relation: R does not divide h (wrong genus or regulator)");
    return h / R;
}

} // namespace scff
