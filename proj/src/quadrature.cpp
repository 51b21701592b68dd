#include "loglap/quadrature.hpp"

#include "loglap/special.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <tuple>

namespace loglap::quad {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel kronrod15(const Integrand& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    double resabs = std::abs(resk);
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        fv1[j] = f(c - x);
        fv2[j] = f(c + x);
        const double s = fv1[j] + fv2[j];
        resk += kWgk[j] * s;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * s;
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
    const double value = resk * h;
    resasc *= std::abs(h);
    resabs *= std::abs(h);
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50 * eps)) err = std::max(err, 50 * eps * resabs);
    return {a, b, value, err};
}

// Globally adaptive Gauss-Kronrod over an initial partition.
QuadratureResult adaptive(const Integrand& f, const std::vector<double>& cuts, const QuadratureSpec& spec)
{
    std::priority_queue<Panel> heap;
    double total = 0.0, err = 0.0;
    long evals = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i + 1] > cuts[i])) continue;
        Panel p = kronrod15(f, cuts[i], cuts[i + 1]);
        evals += 15;
        total += p.value;
        err += p.error;
        heap.push(p);
    }
    int splits = 0;
    while (err > spec.tolerance(total)) {
        if (heap.empty()) break;
        Panel p = heap.top();
        const double mid = 0.5 * (p.a + p.b);
        if (splits >= spec.max_subdivisions || !(mid > p.a && mid < p.b)) {
            if (!std::isfinite(total) || err > 1e3 * spec.tolerance(total))
                throw QuadratureError("integrate: tolerance not reached", total, err);
            break;
        }
        heap.pop();
        Panel l = kronrod15(f, p.a, mid);
        Panel r = kronrod15(f, mid, p.b);
        evals += 30;
        ++splits;
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
    }
    if (!std::isfinite(total)) throw QuadratureError("integrate: non-finite integrand", total, err);
    // recompute from the panels to shed accumulated cancellation
    double t2 = 0.0, e2 = 0.0;
    while (!heap.empty()) {
        t2 += heap.top().value;
        e2 += heap.top().error;
        heap.pop();
    }
    return {t2, e2, evals};
}

// Double-exponential rule on [a, b]; robust to endpoint singularities of unknown strength.
QuadratureResult tanh_sinh(const Integrand& f, double a, double b, const QuadratureSpec& spec)
{
    const double half = 0.5 * (b - a);
    const double pi2 = 0.5 * std::numbers::pi;
    long evals = 0;
    auto term = [&](double tau) {
        const double u = pi2 * std::sinh(tau);
        const double ch = std::cosh(u);
        const double w = pi2 * std::cosh(tau) / (ch * ch);
        // distance to the nearer endpoint computed without cancellation
        const double comp = 1.0 / (std::exp(std::abs(u)) * ch);
        if (!(comp > 0.0) || w == 0.0) return 0.0;
        const double xl = a + half * comp;
        const double xr = b - half * comp;
        double s = 0.0;
        if (tau == 0.0) {
            s = f(0.5 * (a + b)) * w;
            ++evals;
        } else {
            s = (f(xl) + f(xr)) * w;
            evals += 2;
        }
        return s;
    };
    const double tmax = 6.5;
    double h = 1.0;
    double sum = term(0.0);
    for (double tau = h; tau <= tmax; tau += h) sum += term(tau);
    double prev = sum * h;
    double err = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        for (double tau = h; tau <= tmax; tau += 2 * h) sum += term(tau);
        const double est = sum * h * half;
        err = std::abs(est - prev * (level == 1 ? half : 1.0));
        prev = est;
        if (level >= 3 && err <= spec.tolerance(est)) return {est, err, evals};
    }
    if (!std::isfinite(prev) || err > 1e3 * spec.tolerance(prev))
        throw QuadratureError("integrate: double-exponential rule did not converge", prev, err);
    return {prev, err, evals};
}

QuadratureResult oscillatory_tail(const Integrand& f, double a, const QuadratureSpec& spec)
{
    const double w = spec.frequency;
    const double period = std::numbers::pi / w;
    // first zero of sin(w x - phase) beyond a
    double k = std::ceil((w * a - spec.phase) / std::numbers::pi);
    double x = (spec.phase + k * std::numbers::pi) / w;
    if (x <= a) x += period;
    QuadratureSpec inner = spec;
    inner.oscillatory_mode = OscillatoryMode::none;
    inner.endpoint_mode = EndpointMode::none;
    inner.abs_tol = spec.abs_tol * 1e-2;
    QuadratureResult out = adaptive(f, {a, x}, inner);
    std::vector<double> sums;
    double running = out.value;
    double best = running, best_err = std::numeric_limits<double>::infinity();
    double prev_ext = std::numeric_limits<double>::quiet_NaN();
    int stable = 0;
    for (int n = 0; n < spec.max_half_periods; ++n) {
        QuadratureResult piece = adaptive(f, {x, x + period}, inner);
        out.evaluations += piece.evaluations;
        out.error += piece.error;
        x += period;
        running += piece.value;
        sums.push_back(running);
        if (sums.size() < 6) continue;
        double e = 0.0;
        const std::size_t keep = std::min<std::size_t>(sums.size(), 40);
        std::vector<double> tail(sums.end() - keep, sums.end());
        const double ext = wynn_epsilon(tail, &e);
        const double change = std::isnan(prev_ext) ? std::numeric_limits<double>::infinity() : std::abs(ext - prev_ext);
        prev_ext = ext;
        const double est_err = std::max(change, e);
        if (est_err < best_err) {
            best = ext;
            best_err = est_err;
        }
        if (est_err <= spec.tolerance(ext)) {
            if (++stable >= 2) return {ext, out.error + est_err, out.evaluations};
        } else {
            stable = 0;
        }
    }
    if (best_err > 1e3 * spec.tolerance(best))
        throw QuadratureError("integrate: oscillatory tail did not converge", best, best_err);
    return {best, out.error + best_err, out.evaluations};
}

QuadratureResult decaying(const Integrand& f, double a, double b, const QuadratureSpec& spec)
{
    const double scale = 1.0 / spec.decay_rate;
    std::vector<double> cuts{a};
    double step = scale;
    double x = a;
    while (true) {
        x += step;
        if (x >= b) break;
        cuts.push_back(x);
        step *= 2.0;
        if (!std::isfinite(b) && x - a > 60.0 * scale) break;
    }
    QuadratureSpec inner = spec;
    inner.endpoint_mode = EndpointMode::none;
    if (std::isfinite(b)) {
        cuts.push_back(b);
        return adaptive(f, cuts, inner);
    }
    QuadratureResult head = adaptive(f, cuts, inner);
    // whatever is left beyond 60 decay lengths goes through the generic mapping
    QuadratureResult tail = integrate(f, cuts.back(), b, inner);
    head += tail;
    return head;
}

}  // namespace

double apply_rule(const GaussRule& rule, const Integrand& f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(c + h * rule.nodes[i]);
    return s * h;
}

std::shared_ptr<const GaussRule> gauss_jacobi(int n, double alpha, double beta)
{
    if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
    if (!(alpha > -1.0) || !(beta > -1.0)) throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
    static std::mutex mutex;
    static std::map<std::tuple<int, double, double>, std::shared_ptr<const GaussRule>> cache;
    const auto key = std::make_tuple(n, alpha, beta);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    // Golub-Welsch on the Jacobi matrix of the Jacobi polynomials
    const double ab = alpha + beta;
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    diag[0] = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        diag[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        double num, den;
        if (k == 1) {
            num = 4.0 * (1.0 + alpha) * (1.0 + beta);
            den = (2.0 + ab) * (2.0 + ab) * (3.0 + ab);
        } else {
            num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
            den = s * s * (s + 1.0) * (s - 1.0);
        }
        sub[k - 1] = std::sqrt(num / den);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + special::log_gamma(alpha + 1.0) +
                                special::log_gamma(beta + 1.0) - special::log_gamma(ab + 2.0));
    auto rule = std::make_shared<GaussRule>();
    rule->nodes = solver.eigenvalues().array();
    rule->weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double v = solver.eigenvectors()(0, i);
        rule->weights[i] = mu0 * v * v;
    }
    if (alpha == beta) {
        // symmetrise to remove eigen-solver noise
        for (int i = 0; i < n / 2; ++i) {
            const double x = 0.5 * (rule->nodes[n - 1 - i] - rule->nodes[i]);
            const double w = 0.5 * (rule->weights[i] + rule->weights[n - 1 - i]);
            rule->nodes[i] = -x;
            rule->nodes[n - 1 - i] = x;
            rule->weights[i] = rule->weights[n - 1 - i] = w;
        }
        if (n % 2 == 1) rule->nodes[n / 2] = 0.0;
    }
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(rule));
    return it->second;
}

std::shared_ptr<const GaussRule> gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

double wynn_epsilon(const std::vector<double>& s, double* error)
{
    const std::size_t n = s.size();
    if (n == 0) return 0.0;
    if (n < 3) {
        if (error) *error = n == 2 ? std::abs(s[1] - s[0]) : std::numeric_limits<double>::infinity();
        return s.back();
    }
    // columns eps_{k-1}, eps_k of the epsilon table; even k carry the estimates
    std::vector<double> older(n + 1, 0.0);
    std::vector<double> col(s);
    double best = s.back();
    double change = std::abs(s[n - 1] - s[n - 2]);
    for (std::size_t k = 0; col.size() >= 2; ++k) {
        std::vector<double> next(col.size() - 1);
        bool finite = true;
        for (std::size_t i = 0; i + 1 < col.size(); ++i) {
            const double diff = col[i + 1] - col[i];
            if (diff == 0.0) {
                finite = false;
                break;
            }
            next[i] = older[i + 1] + 1.0 / diff;
            if (!std::isfinite(next[i])) {
                finite = false;
                break;
            }
        }
        if (!finite) break;
        if ((k + 1) % 2 == 0) {
            change = std::abs(next.back() - best);
            best = next.back();
        }
        older = std::move(col);
        col = std::move(next);
    }
    if (error) *error = change;
    return best;
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec)
{
    if (std::isnan(a) || std::isnan(b)) throw std::invalid_argument("integrate: NaN limit");
    if (a == b) return {};
    if (a > b) {
        QuadratureResult r = integrate(f, b, a, spec);
        r.value = -r.value;
        return r;
    }
    if (!std::isfinite(a)) throw std::invalid_argument("integrate: lower limit must be finite");
    if (!std::isfinite(b)) {
        if (spec.oscillatory_mode == OscillatoryMode::half_period) return oscillatory_tail(f, a, spec);
        if (spec.endpoint_mode == EndpointMode::exponential_decay && spec.decay_rate > 0)
            return decaying(f, a, b, spec);
        // x = a + (1 - u) / u
        auto g = [&](double u) {
            const double x = a + (1.0 - u) / u;
            return f(x) / (u * u);
        };
        QuadratureSpec inner = spec;
        inner.endpoint_mode = EndpointMode::none;
        return adaptive(g, {0.0, 0.25, 1.0}, inner);
    }
    switch (spec.endpoint_mode) {
    case EndpointMode::algebraic_singularity: {
        const bool left = !std::isnan(spec.left_exponent);
        const bool right = !std::isnan(spec.right_exponent);
        if (!left && !right) return tanh_sinh(f, a, b, spec);
        QuadratureSpec inner = spec;
        inner.endpoint_mode = EndpointMode::none;
        const double m = left && right ? 0.5 * (a + b) : (left ? b : a);
        QuadratureResult out;
        if (left) {
            const double beta = 1.0 / (1.0 + spec.left_exponent);
            const double h = m - a;
            auto g = [&](double v) {
                const double vb = std::pow(v, beta);
                double x = a + h * vb;
                if (x == a) x = std::nextafter(a, b);
                return f(x) * h * beta * vb / v;
            };
            out += adaptive(g, {0.0, 1.0}, inner);
        }
        if (right) {
            const double beta = 1.0 / (1.0 + spec.right_exponent);
            const double h = b - m;
            auto g = [&](double v) {
                const double vb = std::pow(v, beta);
                double x = b - h * vb;
                if (x == b) x = std::nextafter(b, a);
                return f(x) * h * beta * vb / v;
            };
            out += adaptive(g, {0.0, 1.0}, inner);
        }
        if (!left) out += adaptive(f, {a, m}, inner);
        if (!right && left) out += adaptive(f, {m, b}, inner);
        return out;
    }
    case EndpointMode::exponential_decay:
        if (spec.decay_rate > 0) return decaying(f, a, b, spec);
        return adaptive(f, {a, b}, spec);
    case EndpointMode::none:
    default:
        return adaptive(f, {a, b}, spec);
    }
}

QuadratureResult integrate_algebraic(const Integrand& g, double a, double b, double alpha,
                                     const QuadratureSpec& spec)
{
    if (!(alpha > -1.0)) throw std::invalid_argument("integrate_algebraic: exponent must exceed -1");
    if (!(b > a)) return {};
    const double h = b - a;
    QuadratureSpec inner = spec;
    inner.endpoint_mode = EndpointMode::none;
    inner.oscillatory_mode = OscillatoryMode::none;
    if (alpha >= 0.0) {
        auto f = [&](double d) { return g(d) * std::pow(d, alpha); };
        return adaptive(f, {0.0, h}, inner);
    }
    // d = h v^beta turns d^alpha dd into h^{alpha+1} beta dv
    const double beta = 1.0 / (1.0 + alpha);
    const double factor = std::pow(h, alpha + 1.0) * beta;
    auto f = [&](double v) { return g(h * std::pow(v, beta)) * factor; };
    return adaptive(f, {0.0, 1.0}, inner);
}

}  // namespace loglap::quad
