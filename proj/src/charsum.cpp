#include "pvlab/charsum.hpp"

#include <algorithm>
#include <cmath>

namespace pvlab {

std::vector<std::complex<double>> root_table(uint64_t q) {
    std::vector<std::complex<double>> roots(q);
    for (uint64_t t = 0; t < q; ++t) roots[t] = unit_root(static_cast<int64_t>(t), q);
    return roots;
}

PrefixWalk prefix_walk(const CharacterTable& t) {
    PrefixWalk w;
    w.q = t.q;
    w.points.resize(t.q);
    std::complex<double> acc{0.0, 0.0};
    w.points[0] = acc;
    for (uint64_t n = 1; n < t.q; ++n) {
        acc += t.value(n);
        w.points[n] = acc;
    }
    w.period_sum = acc + t.value(0); // n = q closes the period
    return w;
}

PrefixWalk prefix_walk(const DirichletCharacter& chi) {
    return prefix_walk(character_table(chi));
}

IntervalSumRecord partial_sum(const PrefixWalk& w, int64_t M, uint64_t N) {
    uint64_t m0 = floor_mod(M, w.q);
    std::complex<double> v = w.prefix(m0 + N) - w.prefix(m0);
    return {M, N, v, std::abs(v)};
}

IntervalSumRecord partial_sum(const DirichletCharacter& chi, int64_t M, uint64_t N) {
    return partial_sum(prefix_walk(chi), M, N);
}

// ---------------------------------------------------------------------------
// Diameter of a point set: Andrew monotone chain hull, then antipodal pairs.
// ---------------------------------------------------------------------------
namespace {

double cross(const std::complex<double>& o, const std::complex<double>& a,
             const std::complex<double>& b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double dist2(const std::complex<double>& a, const std::complex<double>& b) {
    double dx = a.real() - b.real(), dy = a.imag() - b.imag();
    return dx * dx + dy * dy;
}

} // namespace

Diameter point_set_diameter(std::span<const std::complex<double>> pts) {
    std::vector<size_t> order(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (pts[a].real() != pts[b].real()) return pts[a].real() < pts[b].real();
        return pts[a].imag() < pts[b].imag();
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](size_t a, size_t b) { return pts[a] == pts[b]; }),
                order.end());

    const size_t n = order.size();
    if (n == 1) return {order[0], order[0], 0.0};

    // monotone chain, strict turns (collinear interior points dropped)
    std::vector<size_t> hull(2 * n);
    size_t h = 0;
    for (size_t ii = 0; ii < n; ++ii) {
        size_t i = order[ii];
        while (h >= 2 && cross(pts[hull[h - 2]], pts[hull[h - 1]], pts[i]) <= 0) --h;
        hull[h++] = i;
    }
    size_t lower = h + 1;
    for (size_t ii = n - 1; ii-- > 0;) {
        size_t i = order[ii];
        while (h >= lower && cross(pts[hull[h - 2]], pts[hull[h - 1]], pts[i]) <= 0) --h;
        hull[h++] = i;
    }
    hull.resize(h - 1); // last point repeats the first
    const size_t hn = hull.size();

    Diameter best{hull[0], hull[0], 0.0};
    auto consider = [&](size_t a, size_t b) {
        double d = dist2(pts[a], pts[b]);
        if (d > best.dist2) best = {a, b, d};
    };
    if (hn == 2) {
        consider(hull[0], hull[1]);
        return best;
    }
    // rotating calipers: advance the antipodal vertex j while its incident
    // edge still turns against the edge at i; the hull is strictly convex
    auto edge_cross = [&](size_t a, size_t b) {
        // cross(edge at a, edge at b)
        const auto &pa = pts[hull[a]], &pa1 = pts[hull[(a + 1) % hn]];
        const auto &pb = pts[hull[b]], &pb1 = pts[hull[(b + 1) % hn]];
        return (pa1.real() - pa.real()) * (pb1.imag() - pb.imag()) -
               (pa1.imag() - pa.imag()) * (pb1.real() - pb.real());
    };
    size_t j = 1;
    for (size_t i = 0; i < j; ++i) { // j only grows and stops once it wraps
        for (;; j = (j + 1) % hn) {
            consider(hull[i], hull[j]);
            if (edge_cross(j, i) >= 0) break;
        }
    }
    // walks revisit points, leaving float twins a few ulps apart; the hull
    // keeps one twin, so polish endpoints against the full set until stable
    bool improved = true;
    while (improved) {
        improved = false;
        Diameter cur = best;
        for (size_t t = 0; t < pts.size(); ++t) {
            consider(cur.a, t);
            consider(t, cur.b);
        }
        improved = best.dist2 > cur.dist2;
    }
    return best;
}

IntervalSumRecord max_interval_sum(const PrefixWalk& w, bool real_valued) {
    size_t s, t;
    if (real_valued) {
        size_t lo = 0, hi = 0;
        for (size_t i = 1; i < w.points.size(); ++i) {
            if (w.points[i].real() < w.points[lo].real()) lo = i;
            if (w.points[i].real() > w.points[hi].real()) hi = i;
        }
        s = lo; t = hi;
    } else {
        Diameter d = point_set_diameter(w.points);
        s = d.a; t = d.b;
    }
    if (s > t) std::swap(s, t);
    IntervalSumRecord rec;
    rec.M = static_cast<int64_t>(s);
    rec.N = static_cast<uint64_t>(t - s);
    rec.value = w.points[t] - w.points[s];
    rec.abs = std::abs(rec.value);
    return rec;
}

IntervalSumRecord max_interval_sum(const DirichletCharacter& chi) {
    if (chi.is_principal()) throw PrincipalCharacter("max_interval_sum: principal character");
    bool real_valued = attributes(chi).order <= 2;
    return max_interval_sum(prefix_walk(chi), real_valued);
}

std::complex<double> gauss_sum(const CharacterTable& t, std::span<const std::complex<double>> eq) {
    PairwiseAccumulator<std::complex<double>> acc;
    for (uint64_t n = 1; n < t.q; ++n) {
        if (!t.is_unit(n)) continue;
        acc.add(t.value(n) * eq[n]);
    }
    return acc.total();
}

std::complex<double> gauss_sum(const CharacterTable& t) {
    auto roots = root_table(t.q);
    return gauss_sum(t, roots);
}

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
    return gauss_sum(character_table(chi));
}

double max_windowed_abs(const PrefixWalk& w, uint64_t N) {
    if (N >= w.q) throw Error("max_windowed_abs: N must be < q");
    double best = 0.0;
    for (uint64_t m = 0; m < w.q; ++m) {
        uint64_t t = m + N;
        if (t >= w.q) t -= w.q;
        // valid for characters with vanishing full-period sum
        std::complex<double> s = w.points[t] - w.points[m];
        double d2 = s.real() * s.real() + s.imag() * s.imag();
        if (d2 > best) best = d2;
    }
    return std::sqrt(best);
}

GaussExpansionCheck gauss_expansion_check(const DirichletCharacter& chi, int64_t M, uint64_t N) {
    const uint64_t q = chi.q();
    if (q % 2 == 0) throw EvenModulus("gauss_expansion_check: q must be odd");
    if (!is_primitive(chi)) throw NotPrimitive("gauss_expansion_check: chi must be primitive");
    if (N >= q) throw Error("gauss_expansion_check: N must be < q");
    GaussExpansionCheck out;
    if (N == 0) return out;

    CharacterTable tab = character_table(chi);
    DirichletCharacter chibar = chi.conjugate();
    CharacterTable tabbar = character_table(chibar);

    out.lhs = partial_sum(prefix_walk(tab), M, N).value * gauss_sum(tabbar);

    // rhs: inner geometric sum  sum_{M<n<=M+N} e_q(mn)
    auto roots = root_table(q);
    uint64_t m0 = floor_mod(M, q);
    PairwiseAccumulator<std::complex<double>> acc;
    for (uint64_t half = 1; half <= (q - 1) / 2; ++half) {
        for (int sign = 0; sign < 2; ++sign) {
            uint64_t m = (sign == 0) ? half : q - half; // m and -m mod q
            // e_q(m) != 1 since 0 < m < q
            std::complex<double> em = roots[m];
            std::complex<double> geo =
                roots[mul_mod(m, m0 % q, q)] *
                (roots[mul_mod(m, N + 1, q)] - em) / (em - 1.0);
            acc.add(tabbar.value(m) * geo);
        }
    }
    out.rhs = acc.total();
    out.diff = std::abs(out.lhs - out.rhs);
    return out;
}

std::complex<double> twisted_sum(const CharacterTable& t, double alpha, uint64_t N) {
    if (N > t.q) throw Error("twisted_sum: N must be <= q");
    PairwiseAccumulator<std::complex<double>> acc;
    for (uint64_t n = 1; n <= N; ++n) {
        if (!t.is_unit(n % t.q)) continue;
        double frac = std::fmod(alpha * static_cast<double>(n), 1.0);
        std::complex<double> tw{std::cos(2.0 * kPi * frac), std::sin(2.0 * kPi * frac)};
        acc.add(t.value(n % t.q) * tw);
    }
    return acc.total();
}

std::complex<double> twisted_sum(const DirichletCharacter& chi, double alpha, uint64_t N) {
    return twisted_sum(character_table(chi), alpha, N);
}

std::complex<double> psi_twisted_sum(const CharacterTable& chi, const CharacterTable& psi,
                                     int64_t M, uint64_t N) {
    PairwiseAccumulator<std::complex<double>> acc;
    uint64_t rq = floor_mod(M, chi.q), rk = floor_mod(M, psi.q);
    for (uint64_t j = 0; j < N; ++j) {
        rq = (rq + 1 == chi.q) ? 0 : rq + 1;
        rk = (rk + 1 == psi.q) ? 0 : rk + 1;
        if (!chi.is_unit(rq) || !psi.is_unit(rk)) continue;
        acc.add(chi.value(rq) * psi.value(rk));
    }
    return acc.total();
}

std::complex<double> psi_twisted_sum(const DirichletCharacter& chi, const DirichletCharacter& psi,
                                     int64_t M, uint64_t N) {
    return psi_twisted_sum(character_table(chi), character_table(psi), M, N);
}

double pv_constant(const DirichletCharacter& chi) {
    const uint64_t q = chi.q();
    if (q < 3) throw Error("pv_constant: q must be >= 3");
    IntervalSumRecord rec = max_interval_sum(chi); // throws PrincipalCharacter
    double dq = static_cast<double>(q);
    return rec.abs / (std::sqrt(dq) * std::log(dq));
}

} // namespace pvlab
