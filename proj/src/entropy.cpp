#include "mukai/entropy.hpp"

#include <cstdlib>
#include <future>
#include <thread>

namespace mukai {

QuadraticReal spectral_radius(const FMMatrix& A) {
    const Int tau = A.trace();
    if (tau <= 2) return QuadraticReal::rational(1);
    // alpha^2 = (tau^2 - 2 + tau sqrt(tau^2 - 4)) / 2
    const Int disc = tau * tau - 4;
    return QuadraticReal(Rat(tau * tau - 2) / 2, Rat(tau) / 2, disc);
}

EntropyFunction entropy_closed(const FMMatrix& A) {
    const Int tau = A.trace();
    const QuadraticReal one = QuadraticReal::rational(1);
    if (A.b() == 0) return {one, Rat(0)};
    if (A.b() > 0) {
        if (tau >= 2) return {spectral_radius(A), Rat(0)};
        if (tau == 1) return {one, Rat(-2, 3)};
        return {one, Rat(-1)};
    }
    if (tau >= 2) return {spectral_radius(A), Rat(-2)};
    if (tau == 1) return {one, Rat(-4, 3)};
    return {one, Rat(-1)};
}

Rat slope_step(const FMMatrix& A, const Rat& x) {
    const Rat denom = Rat(A.a()) + Rat(A.b() * A.D()) * x;
    if (denom == 0) throw PoleHit("slope_step: a + bDx = 0");
    return (Rat(A.c()) + Rat(A.d()) * x) / denom;
}

QuadraticReal slope_step(const FMMatrix& A, const QuadraticReal& x) {
    const QuadraticReal denom =
        QuadraticReal::rational(Rat(A.a())) + QuadraticReal::rational(Rat(A.b() * A.D())) * x;
    if (denom.sign() == 0) throw PoleHit("slope_step: a + bDx = 0");
    return (QuadraticReal::rational(Rat(A.c())) + QuadraticReal::rational(Rat(A.d())) * x) / denom;
}

QuadraticReal slope_fixed_point(const FMMatrix& A) {
    if (A.b() == 0) throw NotApplicable("slope_fixed_point: b = 0 has no Moebius fixed point slope");
    const Int tau = A.trace();
    if (tau < 2) throw ComplexEigenvalues("slope_fixed_point: tr A < 2 has no real eigenvector slope");
    const auto [alpha, beta] = eigenvalues(tau);
    const QuadraticReal bD = QuadraticReal::rational(Rat(A.b() * A.D()));
    return (alpha - QuadraticReal::rational(Rat(A.a()))) / bD;
}

Rat shift_drift(const FMMatrix& A) {
    return entropy_closed(A).slope;
}

Int choose_twist(const FMMatrix& A) {
    if (A.b() == 0 || A.trace() < 2)
        throw NotApplicable("choose_twist: requires b != 0 and tr A >= 2");
    const QuadraticReal s = slope_fixed_point(A);
    Int m = 1;
    // smallest m >= 1 with m + s > 1, so q_n/p_n > -m holds with margin 1
    while ((QuadraticReal::rational(Rat(m)) + s - QuadraticReal::rational(1)).sign() <= 0) ++m;
    return m;
}

namespace {

unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("MUKAI_ENTROPY_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned long>(v) < hw) return static_cast<unsigned>(v);
        if (v >= 1) return static_cast<unsigned>(std::min<unsigned long>(v, hw));
    }
    return hw;
}

Int delta0_at(const Mat2& An, const SurfaceParams& P, const Int& m) {
    Int total = 0;
    for (int j = 1; j <= 3; ++j) {
        const auto [pj, qj] = transform_pq(An, P.D, Int(1), Int(j) * m);
        for (int i = -3; i <= -1; ++i) {
            // chi = D (q_{j,n} - i m p_{j,n})^2, already non-negative
            const Int det = qj - Int(i) * m * pj;
            total += P.D * det * det;
        }
    }
    return total;
}

std::vector<Int> delta0_range(const FMMatrix& A, const Int& m, unsigned long long lo,
                              unsigned long long hi) {
    std::vector<Int> out;
    out.reserve(hi - lo + 1);
    Mat2 An = power(A, lo);
    const Mat2 step = mat2_of(A);
    for (unsigned long long n = lo;; ++n) {
        out.push_back(delta0_at(An, A.params(), m));
        if (n == hi) break;
        An = mat2_mul(An, step, A.D());
    }
    return out;
}

}  // namespace

GrowthSequence delta0_sequence(const FMMatrix& A, const Int& m, unsigned long long n_max) {
    if (m < 1) throw InvalidInput("delta0_sequence: twist m must be positive");
    if (n_max < 2) throw InvalidInput("delta0_sequence: n_max must be at least 2");

    GrowthSequence seq;
    const unsigned threads = std::min<unsigned long long>(thread_budget(), n_max);
    if (threads <= 1 || n_max < 64) {
        seq.delta_values = delta0_range(A, m, 1, n_max);
    } else {
        std::vector<std::future<std::vector<Int>>> parts;
        const unsigned long long chunk = (n_max + threads - 1) / threads;
        for (unsigned long long lo = 1; lo <= n_max; lo += chunk) {
            const unsigned long long hi = std::min(n_max, lo + chunk - 1);
            parts.push_back(std::async(std::launch::async,
                                       [&A, &m, lo, hi] { return delta0_range(A, m, lo, hi); }));
        }
        for (auto& f : parts) {
            auto part = f.get();
            seq.delta_values.insert(seq.delta_values.end(), part.begin(), part.end());
        }
    }
    seq.n_values.resize(n_max);
    for (unsigned long long n = 1; n <= n_max; ++n) seq.n_values[n - 1] = n;
    for (std::size_t i = 0; i + 1 < seq.delta_values.size(); ++i) {
        if (seq.delta_values[i] > 0 && seq.delta_values[i + 1] > 0) {
            seq.ratio_estimates.push_back(log_big(seq.delta_values[i + 1]) -
                                          log_big(seq.delta_values[i]));
        } else {
            seq.ratio_estimates.push_back(0.0);
        }
    }
    return seq;
}

double entropy_estimate(const FMMatrix& A, double t, unsigned long long n_max) {
    const Int tau = A.trace();
    const double drift = to_double(shift_drift(A));
    if (tau == 0 || tau == 1) return drift * t;  // periodic: growth is pure shift
    if (n_max < 3) throw InvalidInput("entropy_estimate: n_max must be at least 3");

    Int m(1);
    if (A.b() != 0) m = choose_twist(A);
    const GrowthSequence seq = delta0_sequence(A, m, n_max);
    for (std::size_t k = seq.delta_values.size() - 3; k < seq.delta_values.size(); ++k) {
        if (seq.delta_values[k] == 0)
            throw DegenerateSequence("entropy_estimate: delta'_0 vanished near n_max");
    }
    // ratio r_k = log(delta(k+1)/delta(k)) has a c/k tail for the polynomial
    // cases; the Richardson step k r_k - (k-1) r_{k-1} removes it.
    const std::size_t last = seq.ratio_estimates.size() - 1;
    const double rk = seq.ratio_estimates[last];
    const double rk1 = seq.ratio_estimates[last - 1];
    const double k = static_cast<double>(last + 1);
    const double est0 = k * rk - (k - 1.0) * rk1;
    return est0 + drift * t;
}

double mass_growth_estimate(const FMMatrix& A, const std::complex<double>& z, const Int& m,
                            unsigned long long n_max) {
    if (A.trace() <= 2) throw NotApplicable("mass_growth_estimate: requires tr A > 2");
    if (z.imag() <= 0) throw NotUpperHalfPlane("mass_growth_estimate: Im(z) must be positive");
    if (m < 1) throw InvalidInput("mass_growth_estimate: twist m must be positive");
    if (n_max < 3) throw InvalidInput("mass_growth_estimate: n_max must be at least 3");

    const SurfaceParams& P = A.params();
    const ComplexRat zr{Rat(z.real()), Rat(z.imag())};
    std::vector<double> log_mass;
    log_mass.reserve(n_max);
    Mat2 An = mat2_of(A);
    const Mat2 step = mat2_of(A);
    for (unsigned long long n = 1; n <= n_max; ++n) {
        Float mass = 0;
        for (int j = 1; j <= 3; ++j) {
            const MukaiVector v = act_on_vector(An, P, exp_vector(Int(j) * m, P));
            const ComplexRat Z = central_charge(zr, v, P);
            const Float re = Z.re.convert_to<Float>();
            const Float im = Z.im.convert_to<Float>();
            mass += boost::multiprecision::sqrt(re * re + im * im);
        }
        if (mass == 0) throw DegenerateSequence("mass_growth_estimate: zero mass");
        log_mass.push_back(boost::multiprecision::log(mass).convert_to<double>());
        if (n < n_max) An = mat2_mul(An, step, P.D);
    }
    const std::size_t last = log_mass.size() - 1;
    const double rk = log_mass[last] - log_mass[last - 1];
    const double rk1 = log_mass[last - 1] - log_mass[last - 2];
    const double k = static_cast<double>(last);
    return k * rk - (k - 1.0) * rk1;
}

KTReport kt_check(const FMMatrix& A, unsigned long long n_max, double tol) {
    const double est = entropy_estimate(A, 0.0, n_max);
    const double closed = std::log(spectral_radius(A).to_double());
    const double diff = std::abs(est - closed);
    return {est, closed, diff, diff < tol};
}

}  // namespace mukai
