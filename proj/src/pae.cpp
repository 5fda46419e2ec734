#include "tc/pae.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tc {

double StructurePolynomial::eval(double x) const {
    double p = c0;
    for (double q : roots) p *= (x - q);
    return p;
}

StructurePolynomial StructurePolynomial::heisenberg_weyl() { return {1.0, {0.0}}; }

StructurePolynomial StructurePolynomial::su2(HalfInt r) {
    if (r.twice < 0) throw std::invalid_argument("su2: r must be nonnegative");
    return {-1.0, {-r.value(), r.value() + 1.0}};
}

std::string IrrepClass::str() const {
    return "R(" + std::to_string(k_minus) + "," + std::to_string(k_plus) + "," +
           (dim > 0 ? std::to_string(dim) : std::string("inf")) + ")";
}

bool isomorphic(const IrrepClass& a, const IrrepClass& b) {
    if (a.dim != b.dim) return false;
    return (a.k_minus == b.k_minus && a.k_plus == b.k_plus) ||
           (a.k_minus == b.k_plus && a.k_plus == b.k_minus);
}

const char* zone_kind_name(ZoneKind k) {
    switch (k) {
        case ZoneKind::Nearby: return "nearby";
        case ZoneKind::Intermediate: return "intermediate";
        case ZoneKind::Remote: return "remote";
    }
    return "?";
}

StructurePolynomial tc_structure_polynomial(int M, HalfInt r) {
    if (M < 0) throw std::invalid_argument("tc_structure_polynomial: M must be >= 0");
    if (r.twice < 0) throw std::invalid_argument("tc_structure_polynomial: r must be >= 0");
    const double rv = r.value();
    std::vector<double> roots = {-(M - rv) / 2.0, (M - rv) / 2.0 - rv, (M - rv) / 2.0 + rv + 1.0};
    std::sort(roots.begin(), roots.end());
    return {-1.0, roots};
}

IrrepClass irrep_class_for_window(const StructurePolynomial& p, double left, int d) {
    IrrepClass c;
    c.dim = d;
    c.k_minus = 0;
    c.k_plus = 0;
    for (double q : p.roots) {
        if (std::abs(q - left) <= kRootTol) ++c.k_minus;
        if (std::abs(q - (left + d)) <= kRootTol) ++c.k_plus;
    }
    return c;
}

ZoneLabel classify_zone(int M, HalfInt r) {
    ZoneLabel z;
    z.M = M;
    z.r = r;
    const int d_nearby = M + 1;
    const int d_remote = r.twice + 1;
    z.dim = std::min(d_nearby, d_remote);
    if (M < r.twice)
        z.kind = ZoneKind::Nearby;
    else if (M == r.twice)
        z.kind = ZoneKind::Intermediate;
    else
        z.kind = ZoneKind::Remote;
    const StructurePolynomial p = tc_structure_polynomial(M, r);
    z.irrep = irrep_class_for_window(p, p.roots.back() - z.dim, z.dim);
    return z;
}

namespace {

// Product over all roots except one copy of the pivot, evaluated at
// (x + q_pivot - q_i) for the right realization.
double reduced_right(const StructurePolynomial& p, int pivot, double x) {
    double f = p.c0;
    const double q = p.roots[pivot];
    for (int i = 0; i < p.order(); ++i) {
        if (i == pivot) continue;
        f *= (x + q - p.roots[i]);
    }
    return f;
}

double reduced_left(const StructurePolynomial& p, int pivot, double x) {
    double f = -p.c0;
    const double q = p.roots[pivot];
    for (int i = 0; i < p.order(); ++i) {
        if (i == pivot) continue;
        f *= (q - p.roots[i] - x);
    }
    return f;
}

void check_pivot(const StructurePolynomial& p, int pivot, int d) {
    if (std::abs(std::abs(p.c0) - 1.0) > kRootTol)
        throw std::invalid_argument("realize_pae: structure polynomial must be normalized to |c0| = 1");
    if (pivot < 0 || pivot >= p.order()) throw std::invalid_argument("realize_pae: pivot index out of range");
    if (d < 1) throw std::invalid_argument("realize_pae: dimension must be >= 1");
}

double checked_sqrt(double v, const char* what) {
    if (v < -1e-12 * std::max(1.0, std::abs(v)))
        throw std::domain_error(std::string(what) +
                                ": structure polynomial negative on the spanned spectrum");
    return std::sqrt(std::max(v, 0.0));
}

}  // namespace

PaeGenerators realize_pae_right(const StructurePolynomial& p, int pivot_index, int d) {
    check_pivot(p, pivot_index, d);
    const double q = p.roots[pivot_index];
    PaeGenerators g;
    g.dim = d;
    g.poly = p;
    g.pivot_index = pivot_index;
    g.realization = Realization::Right;

    std::vector<double> a0(d);
    for (int n = 0; n < d; ++n) a0[n] = q + n;
    g.a0 = Mat::diag(a0);

    g.a_plus = Mat(d);
    for (int n = 0; n + 1 < d; ++n) {
        const double v = (n + 1) * reduced_right(p, pivot_index, n + 1.0);
        g.a_plus(n + 1, n) = checked_sqrt(v, "realize_pae_right");
    }
    g.a_minus = g.a_plus.adjoint();
    return g;
}

PaeGenerators realize_pae_left(const StructurePolynomial& p, int pivot_index, int d) {
    check_pivot(p, pivot_index, d);
    const double q = p.roots[pivot_index];
    PaeGenerators g;
    g.dim = d;
    g.poly = p;
    g.pivot_index = pivot_index;
    g.realization = Realization::Left;

    std::vector<double> a0(d);
    for (int n = 0; n < d; ++n) a0[n] = q - 1.0 - n;
    g.a0 = Mat::diag(a0);

    g.a_plus = Mat(d);
    for (int n = 1; n < d; ++n) {
        const double v = n * reduced_left(p, pivot_index, double(n));
        g.a_plus(n - 1, n) = checked_sqrt(v, "realize_pae_left");
    }
    g.a_minus = g.a_plus.adjoint();
    return g;
}

IrrepClass irrep_class_of(const PaeGenerators& g) {
    const double q = g.poly.roots[g.pivot_index];
    const double left = (g.realization == Realization::Right) ? q : q - g.dim;
    return irrep_class_for_window(g.poly, left, g.dim);
}

namespace {

// Linear-factor list of a polynomial c * prod (x - rho_i); cancellation of
// matching factors against another list happens before any evaluation, so
// 0/0 pairs at shared roots are removed exactly.
struct FactorList {
    double lead = 1.0;
    std::vector<double> roots;

    double eval(double x) const {
        double v = lead;
        for (double r : roots) v *= (x - r);
        return v;
    }
};

void cancel_common(FactorList& num, FactorList& den) {
    for (auto it = num.roots.begin(); it != num.roots.end();) {
        auto jt = std::find_if(den.roots.begin(), den.roots.end(),
                               [&](double q) { return std::abs(q - *it) <= kRootTol; });
        if (jt != den.roots.end()) {
            it = num.roots.erase(it);
            den.roots.erase(jt);
        } else {
            ++it;
        }
    }
}

}  // namespace

PaeGenerators isomorphism_map(const PaeGenerators& source, const StructurePolynomial& target_poly,
                              int target_pivot, MapOrientation orientation) {
    if (target_pivot < 0 || target_pivot >= target_poly.order())
        throw std::invalid_argument("isomorphism_map: target pivot out of range");
    const int d = source.dim;
    const double qs = source.poly.roots[source.pivot_index];
    const double qt = target_poly.roots[target_pivot];

    // Source spectrum (a0 is diagonal by construction).
    std::vector<double> x(d);
    for (int i = 0; i < d; ++i) x[i] = source.a0(i, i).real();
    const double x_min = *std::min_element(x.begin(), x.end());

    // Window the mapped spectrum will span, for the class compatibility check.
    double target_left;
    FactorList num, den;
    den.lead = source.poly.c0;
    den.roots = source.poly.roots;
    // Denominator factors are (x - q'_i') shifted to the source window: the
    // source polynomial is evaluated on the source spectrum directly.
    if (orientation == MapOrientation::Direct) {
        // a0 -> a0' + (q_j - q'_j'); ratio numerator is the target polynomial
        // evaluated at (x + q_j - q'_j').
        const double shift = qt - qs;
        num.lead = target_poly.c0;
        for (double qi : target_poly.roots) num.roots.push_back(qi - shift);
        target_left = x_min + shift;
    } else {
        // a0 -> (q'_j' + q_j - 1) - a0'; numerator factors (K - x - q_i)
        // rewritten as -(x - (K - q_i)).
        const double K = qs + qt;
        num.lead = target_poly.c0 * ((target_poly.order() % 2 == 0) ? 1.0 : -1.0);
        for (double qi : target_poly.roots) num.roots.push_back(K - qi);
        const double x_max = *std::max_element(x.begin(), x.end());
        target_left = K - 1.0 - x_max;
    }

    const IrrepClass src_class = irrep_class_of(source);
    const IrrepClass tgt_class = irrep_class_for_window(target_poly, target_left, d);
    if (!isomorphic(src_class, tgt_class))
        throw std::invalid_argument("isomorphism_map: representations are not isomorphic (" +
                                    src_class.str() + " vs " + tgt_class.str() + ")");

    cancel_common(num, den);

    // Evaluate the cancelled ratio on the source spectrum; the square-root
    // argument must stay strictly positive there.
    std::vector<double> ratio(d);
    for (int i = 0; i < d; ++i) {
        const double nv = num.eval(x[i]);
        const double dv = den.eval(x[i]);
        if (std::abs(dv) <= kRootTol)
            throw std::domain_error("isomorphism_map: zero denominator on the spectrum");
        const double v = nv / dv;
        if (v < -kRootTol) throw std::domain_error("isomorphism_map: negative argument under the square root");
        if (v <= kRootTol)
            throw std::domain_error("isomorphism_map: square-root argument vanishes on the spectrum");
        ratio[i] = v;
    }

    Mat sq(d);
    for (int i = 0; i < d; ++i) sq(i, i) = std::sqrt(ratio[i]);

    PaeGenerators out;
    out.dim = d;
    out.poly = target_poly;
    out.pivot_index = target_pivot;

    std::vector<double> a0(d);
    if (orientation == MapOrientation::Direct) {
        const double shift = qt - qs;
        for (int i = 0; i < d; ++i) a0[i] = x[i] + shift;
        out.a0 = Mat::diag(a0);
        out.a_plus = sq * source.a_plus;
        out.a_minus = source.a_minus * sq;
        out.realization = source.realization;
    } else {
        const double K = qs + qt;
        for (int i = 0; i < d; ++i) a0[i] = K - 1.0 - x[i];
        out.a0 = Mat::diag(a0);
        out.a_plus = source.a_minus * sq;
        out.a_minus = sq * source.a_plus;
        out.realization =
            (source.realization == Realization::Right) ? Realization::Left : Realization::Right;
    }
    return out;
}

SpinOps spin_ops(HalfInt r) {
    const PaeGenerators g = realize_pae_right(StructurePolynomial::su2(r), 0, r.twice + 1);
    SpinOps s;
    s.r = r;
    s.dim = g.dim;
    s.s3 = g.a0;
    s.sp = g.a_plus;
    s.sm = g.a_minus;
    return s;
}

}  // namespace tc
