#include "flashhelp/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "flashhelp/entropy.hpp"
#include "flashhelp/errors.hpp"
#include "flashhelp/typeclass.hpp"

namespace flashhelp {

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
    // splitmix64 finalizer over master and a golden-ratio spaced trial offset
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

AwgnFlashConfig::AwgnFlashConfig(AwgnParams awgn_, FlashDesign design_, long t, double amplitude)
    : awgn(awgn_), design(design_), segment_length(t), amplitude_bound(amplitude) {
    if (design.mode != HelperMode::FixedRate)
        throw std::invalid_argument("AwgnFlashConfig: simulation covers the fixed-rate design");
    if (segment_length < 1) throw std::invalid_argument("AwgnFlashConfig: t must be >= 1");
    if (!(design.slack >= 0.0)) throw std::invalid_argument("AwgnFlashConfig: slack must be >= 0");
    if (!(step() > 0.0)) throw std::invalid_argument("AwgnFlashConfig: step must be > 0");
    if (amplitude_bound < step() / 2.0)
        throw std::invalid_argument("AwgnFlashConfig: amplitude bound below half a step");
}

double AwgnFlashConfig::step() const {
    return design.step(awgn.sigma2);
}

long AwgnFlashConfig::grid_points_per_coord() const {
    return static_cast<long>(std::floor(2.0 * amplitude_bound / step())) + 1;
}

double AwgnFlashConfig::cube_rate_per_coord() const {
    return std::log(static_cast<double>(grid_points_per_coord()));
}

double SimResult::error_rate() const {
    return trials > 0 ? static_cast<double>(errors_total) / static_cast<double>(trials) : 0.0;
}

ConfInterval SimResult::ci95() const {
    return clopper_pearson(errors_total, trials, 0.95);
}

double SimResult::realized_power_mean() const {
    return power_samples > 0 ? realized_power_sum / static_cast<double>(power_samples) : 0.0;
}

void SimResult::merge(const SimResult& other) {
    trials += other.trials;
    errors_total += other.errors_total;
    helper_failures += other.helper_failures;
    decode_errors += other.decode_errors;
    power_samples += other.power_samples;
    realized_power_sum += other.realized_power_sum;
    max_abs_residual = std::max(max_abs_residual, other.max_abs_residual);
    block_length = std::max(block_length, other.block_length);
}

namespace {

// Trials are split into fixed-size blocks and merged in block order, so the
// floating-point accumulation order never depends on the worker count.
constexpr long long kTrialBlock = 16384;

template <class TrialFn>
SimResult run_trials(long long trials, const RngPlan& plan, long block_length, TrialFn&& fn) {
    if (trials <= 0) throw std::invalid_argument("run_trials: trials must be > 0");
    const long long blocks = (trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<SimResult> partial(static_cast<std::size_t>(blocks));
    int workers = plan.stream_count;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<long long>(workers, blocks));

    std::atomic<long long> next_block{0};
    auto body = [&]() {
        for (;;) {
            long long b = next_block.fetch_add(1);
            if (b >= blocks) break;
            SimResult local;
            const long long begin = b * kTrialBlock;
            const long long end = std::min(trials, begin + kTrialBlock);
            for (long long i = begin; i < end; ++i) fn(local, static_cast<std::uint64_t>(i));
            local.trials = end - begin;
            partial[static_cast<std::size_t>(b)] = local;
        }
    };

    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }

    SimResult total;
    total.block_length = block_length;
    for (const auto& part : partial) total.merge(part);
    return total;
}

}  // namespace

SimResult simulate_flash_awgn(const AwgnFlashConfig& cfg, long long trials, const RngPlan& rng) {
    const long t = cfg.segment_length;
    const double sigma = std::sqrt(cfg.awgn.sigma2);
    const double radius2 = static_cast<double>(t) * cfg.awgn.sigma2 * (1.0 + cfg.design.slack);
    const double delta = cfg.step();
    const long grid_points = cfg.grid_points_per_coord();
    const double grid_origin = -0.5 * static_cast<double>(grid_points - 1) * delta;

    SimResult result = run_trials(trials, rng, t, [&](SimResult& acc, std::uint64_t i) {
        thread_local std::vector<double> noise;
        std::mt19937_64 eng(trial_seed(rng.master_seed, i));
        std::normal_distribution<double> gauss(0.0, sigma);
        noise.resize(static_cast<std::size_t>(t));
        double norm2 = 0.0;
        for (long k = 0; k < t; ++k) {
            double z = gauss(eng);
            noise[static_cast<std::size_t>(k)] = z;
            norm2 += z * z;
        }
        if (norm2 > radius2) {
            ++acc.helper_failures;
            ++acc.errors_total;
            return;
        }
        std::uniform_int_distribution<long> pick(0, grid_points - 1);
        bool decode_error = false;
        double power = 0.0;
        for (long k = 0; k < t; ++k) {
            const double z = noise[static_cast<std::size_t>(k)];
            // cell centers at (j + 1/2)*Delta; residual in [-Delta/2, Delta/2)
            const double q = (std::floor(z / delta) + 0.5) * delta;
            const double residual = z - q;
            acc.max_abs_residual = std::max(acc.max_abs_residual, std::abs(residual));
            const long j = pick(eng);
            const double codeword = grid_origin + static_cast<double>(j) * delta;
            const double sent = codeword - q;
            power += sent * sent;
            const double y = codeword + residual;  // = sent + z
            long decoded = static_cast<long>(std::floor((y - grid_origin) / delta + 0.5));
            decoded = std::clamp(decoded, 0L, grid_points - 1);
            if (decoded != j) decode_error = true;
        }
        acc.realized_power_sum += power / static_cast<double>(t);
        ++acc.power_samples;
        if (decode_error) {
            ++acc.decode_errors;
            ++acc.errors_total;
        }
    });
    if (result.max_abs_residual > delta / 2.0)
        throw InvariantError("simulate_flash_awgn: quantization residual exceeded Delta/2");
    return result;
}

namespace {

std::vector<double> cumulative(const Pmf& p) {
    std::vector<double> cum(static_cast<std::size_t>(p.size()));
    double s = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        s += p[i];
        cum[static_cast<std::size_t>(i)] = s;
    }
    cum.back() = 1.0;
    return cum;
}

int draw_symbol(const std::vector<double>& cum, double u) {
    for (std::size_t i = 0; i < cum.size(); ++i)
        if (u < cum[i]) return static_cast<int>(i);
    return static_cast<int>(cum.size()) - 1;
}

}  // namespace

SimResult simulate_modulo_fixed(const ModuloParams& mp, double theta, long t,
                                long long trials, const RngPlan& rng) {
    if (t < 1) throw std::invalid_argument("simulate_modulo_fixed: t must be >= 1");
    if (theta < 0.0) throw std::invalid_argument("simulate_modulo_fixed: theta must be >= 0");
    const auto cum = cumulative(mp.noise);
    const auto lp = mp.noise.log_probs();
    const double budget = static_cast<double>(t) * theta;
    return run_trials(trials, rng, t, [&](SimResult& acc, std::uint64_t i) {
        std::mt19937_64 eng(trial_seed(rng.master_seed, i));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double cost = 0.0;  // -ln P(z^t)
        for (long k = 0; k < t; ++k) cost -= lp[static_cast<std::size_t>(draw_symbol(cum, uni(eng)))];
        // described iff P(z^t) >= e^{-t theta}; ties are described
        if (cost > budget) {
            ++acc.helper_failures;
            ++acc.errors_total;
        }
    });
}

double exact_error_modulo_fixed(const ModuloParams& mp, double theta, long t) {
    if (t < 1) throw std::invalid_argument("exact_error_modulo_fixed: t must be >= 1");
    if (theta < 0.0) throw std::invalid_argument("exact_error_modulo_fixed: theta must be >= 0");
    const auto lp = mp.noise.log_probs();
    const double budget = static_cast<double>(t) * theta;
    TypeEnumeration en(mp.alphabet_size(), t);
    double acc = -std::numeric_limits<double>::infinity();
    while (auto tp = en.next()) {
        const auto& c = tp->counts();
        double cost = 0.0;
        double log_mass = log_multinomial(*tp);
        bool off_support = false;
        for (std::size_t z = 0; z < c.size(); ++z) {
            if (c[z] == 0) continue;
            if (mp.noise[static_cast<int>(z)] == 0.0) {
                off_support = true;
                break;
            }
            cost -= static_cast<double>(c[z]) * lp[z];
            log_mass += static_cast<double>(c[z]) * lp[z];
        }
        if (off_support) continue;  // zero probability mass
        if (cost > budget) {
            if (acc == -std::numeric_limits<double>::infinity()) {
                acc = log_mass;
            } else {
                double m = std::max(acc, log_mass);
                acc = m + std::log(std::exp(acc - m) + std::exp(log_mass - m));
            }
        }
    }
    return acc == -std::numeric_limits<double>::infinity() ? 0.0 : std::exp(acc);
}

double description_length(const std::vector<long long>& counts, long t, int K,
                          double overhead_const) {
    double h = 0.0;  // empirical entropy
    for (long long c : counts) {
        if (c > 0) h -= xlogx(static_cast<double>(c) / static_cast<double>(t));
    }
    return static_cast<double>(t) * h +
           overhead_const * static_cast<double>(K - 1) * std::log(static_cast<double>(t) + 1.0);
}

SimResult simulate_modulo_variable(const ModuloParams& mp, double helper_rate, double tau,
                                   long n, long long trials, const RngPlan& rng,
                                   double overhead_const) {
    if (n < 1) throw std::invalid_argument("simulate_modulo_variable: n must be >= 1");
    if (!(tau > 0.0 && tau < 1.0))
        throw std::invalid_argument("simulate_modulo_variable: tau in (0,1)");
    const long t = std::max(1L, std::lround(tau * static_cast<double>(n)));
    const auto cum = cumulative(mp.noise);
    const int K = mp.alphabet_size();
    const double buffer = static_cast<double>(n) * helper_rate;
    return run_trials(trials, rng, n, [&](SimResult& acc, std::uint64_t i) {
        thread_local std::vector<long long> counts;
        std::mt19937_64 eng(trial_seed(rng.master_seed, i));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        counts.assign(static_cast<std::size_t>(K), 0);
        for (long k = 0; k < t; ++k) ++counts[static_cast<std::size_t>(draw_symbol(cum, uni(eng)))];
        if (description_length(counts, t, K, overhead_const) >= buffer) {
            ++acc.helper_failures;  // buffer overflow
            ++acc.errors_total;
        }
    });
}

double exact_overflow_modulo(const ModuloParams& mp, double helper_rate, double tau, long n,
                             double overhead_const) {
    if (n < 1) throw std::invalid_argument("exact_overflow_modulo: n must be >= 1");
    if (!(tau > 0.0 && tau < 1.0))
        throw std::invalid_argument("exact_overflow_modulo: tau in (0,1)");
    const long t = std::max(1L, std::lround(tau * static_cast<double>(n)));
    const auto lp = mp.noise.log_probs();
    const int K = mp.alphabet_size();
    const double buffer = static_cast<double>(n) * helper_rate;
    TypeEnumeration en(K, t);
    double acc = -std::numeric_limits<double>::infinity();
    while (auto tp = en.next()) {
        const auto& c = tp->counts();
        if (description_length(c, t, K, overhead_const) < buffer) continue;
        double log_mass = log_multinomial(*tp);
        bool off_support = false;
        for (std::size_t z = 0; z < c.size(); ++z) {
            if (c[z] == 0) continue;
            if (mp.noise[static_cast<int>(z)] == 0.0) {
                off_support = true;
                break;
            }
            log_mass += static_cast<double>(c[z]) * lp[z];
        }
        if (off_support) continue;
        if (acc == -std::numeric_limits<double>::infinity()) {
            acc = log_mass;
        } else {
            double m = std::max(acc, log_mass);
            acc = m + std::log(std::exp(acc - m) + std::exp(log_mass - m));
        }
    }
    return acc == -std::numeric_limits<double>::infinity() ? 0.0 : std::exp(acc);
}

ExponentEstimate estimate_exponent(const SimResult& sr, long n) {
    if (sr.trials <= 0) throw std::invalid_argument("estimate_exponent: empty result");
    if (n < 1) throw std::invalid_argument("estimate_exponent: n must be >= 1");
    ExponentEstimate est;
    est.block_length = n;
    const double nn = static_cast<double>(n);
    if (sr.errors_total == 0) {
        est.censored = true;
        est.value = -std::log(rule_of_three(sr.trials)) / nn;
        est.ci_lo = est.value;
        est.ci_hi = std::numeric_limits<double>::infinity();
        return est;
    }
    ConfInterval ci = sr.ci95();
    est.value = -std::log(sr.error_rate()) / nn;
    est.ci_lo = -std::log(ci.hi) / nn;
    est.ci_hi = ci.lo > 0.0 ? -std::log(ci.lo) / nn : std::numeric_limits<double>::infinity();
    return est;
}

}  // namespace flashhelp
