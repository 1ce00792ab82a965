#include "mfadams/homology.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

namespace mfadams {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MFADAMS_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(size_t jobs, int threads, const std::function<void(size_t)>& body) {
    threads = static_cast<int>(
        std::min<size_t>(static_cast<size_t>(std::max(threads, 1)), jobs));
    if (threads <= 1 || jobs <= 1) {
        for (size_t i = 0; i < jobs; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= jobs) break;
                body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

// Monomial bases of every degree in a closed interval, with index lookup.
class BasisTable {
  public:
    BasisTable(const RingSpec& ring, long lo, long hi) : lo_(lo) {
        if (hi < lo) hi = lo - 1;
        bases_.reserve(static_cast<size_t>(hi - lo + 1));
        for (long d = lo; d <= hi; ++d) {
            bases_.push_back(monomial_basis(ring, d));
            std::map<Exponents, int> pos;
            for (size_t i = 0; i < bases_.back().size(); ++i)
                pos.emplace(bases_.back()[i], static_cast<int>(i));
            positions_.push_back(std::move(pos));
        }
    }

    size_t count(long d) const {
        if (d < lo_ || d >= lo_ + static_cast<long>(bases_.size())) return 0;
        return bases_[static_cast<size_t>(d - lo_)].size();
    }
    const std::vector<Exponents>& basis(long d) const {
        static const std::vector<Exponents> empty;
        if (d < lo_ || d >= lo_ + static_cast<long>(bases_.size())) return empty;
        return bases_[static_cast<size_t>(d - lo_)];
    }
    int position(long d, const Exponents& e) const {
        if (d < lo_ || d >= lo_ + static_cast<long>(bases_.size())) return -1;
        const auto& pos = positions_[static_cast<size_t>(d - lo_)];
        auto it = pos.find(e);
        return it == pos.end() ? -1 : it->second;
    }

  private:
    long lo_;
    std::vector<std::vector<Exponents>> bases_;
    std::vector<std::map<Exponents, int>> positions_;
};

size_t strand_dim(const FreeGradedModule& mod, long d, const BasisTable& table) {
    size_t dim = 0;
    for (long gd : mod.generator_degrees) dim += table.count(d - gd);
    return dim;
}

// Sparse columns of the degree-d component of m (source degree d).
std::vector<SparseColumn> strand_columns(const GradedMap& m, long d, const BasisTable& table) {
    const FreeGradedModule& src = m.source();
    const FreeGradedModule& tgt = m.target();
    const long e = d + m.shift();
    std::vector<size_t> tgt_offset(tgt.rank() + 1, 0);
    for (size_t i = 0; i < tgt.rank(); ++i)
        tgt_offset[i + 1] = tgt_offset[i] + table.count(e - tgt.degree_of(i));
    std::vector<SparseColumn> columns;
    for (size_t j = 0; j < src.rank(); ++j) {
        const auto& basis = table.basis(d - src.degree_of(j));
        for (const auto& mono : basis) {
            SparseColumn col;
            for (size_t i = 0; i < tgt.rank(); ++i) {
                const GradedPoly& entry = m.at(i, j);
                if (entry.is_zero()) continue;
                for (const auto& [exp, coeff] : entry.terms()) {
                    Exponents target_mono(mono.size());
                    for (size_t v = 0; v < mono.size(); ++v) target_mono[v] = mono[v] + exp[v];
                    int p = table.position(e - tgt.degree_of(i), target_mono);
                    if (p < 0) throw DomainError("internal: strand basis lookup failed");
                    col.emplace_back(static_cast<int>(tgt_offset[i]) + p, coeff);
                }
            }
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            columns.push_back(std::move(col));
        }
    }
    return columns;
}

long max_entry_degree(const GradedMap& m) {
    long deg = 0;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            const GradedPoly& e = m.at(i, j);
            if (e.is_zero()) continue;
            for (const auto& [exp, c] : e.terms())
                deg = std::max(deg, weighted_degree_of(*m.ring(), exp));
        }
    }
    return deg;
}

}  // namespace

std::pair<long, long> default_homology_bounds(const LinearFactorization& x) {
    long dmin = 0, dmax = 0;
    bool any = false;
    for (const auto& mod : {x.even, x.odd}) {
        for (long d : mod.generator_degrees) {
            if (!any) {
                dmin = dmax = d;
                any = true;
            } else {
                dmin = std::min(dmin, d);
                dmax = std::max(dmax, d);
            }
        }
    }
    long spread = any ? dmax - dmin : 0;
    long entry_deg = std::max({max_entry_degree(x.alpha), max_entry_degree(x.beta), 1L});
    long window = spread + entry_deg + 2;
    long cutoff = dmin + 4 * window;
    return {cutoff, window};
}

HomologyReport homology_report(const LinearFactorization& x, const HomologyOptions& opts) {
    if (!x.potential.is_zero())
        throw DomainError("homology requires potential zero, got " + x.potential.to_string());

    auto [def_cutoff, def_window] = default_homology_bounds(x);
    long cutoff = opts.cutoff.value_or(def_cutoff);
    long window = opts.window.value_or(def_window);
    if (cutoff < 0 && !opts.cutoff) cutoff = 0;
    if (window < 1) window = 1;

    long dmin = 0;
    bool any = false;
    for (const auto& mod : {x.even, x.odd}) {
        for (long d : mod.generator_degrees) {
            if (!any || d < dmin) dmin = d;
            any = true;
        }
    }
    if (!any) dmin = 0;
    if (cutoff < dmin) cutoff = dmin;
    if (cutoff - dmin > 1000000)
        throw DomainError("homology degree range " + std::to_string(dmin) + ".." +
                          std::to_string(cutoff) + " is too large");

    const long sa = x.alpha.shift();
    const long sb = x.beta.shift();

    // Ranks of alpha and beta strands are needed at the scan degrees and at
    // the degrees feeding into them.
    long lo = std::min({dmin, dmin - sa, dmin - sb});
    long hi = std::max({cutoff, cutoff - sa, cutoff - sb});
    long gmin = 0, gmax = 0;
    for (const auto& mod : {x.even, x.odd}) {
        for (long d : mod.generator_degrees) {
            gmin = std::min(gmin, d);
            gmax = std::max(gmax, d);
        }
    }
    long entry_deg = std::max({max_entry_degree(x.alpha), max_entry_degree(x.beta), 0L});
    long slack = std::abs(sa) + std::abs(sb) + entry_deg;
    BasisTable table(*x.ring, lo - gmax - slack, hi - gmin + slack);

    struct Job {
        bool is_alpha;
        long degree;
    };
    std::vector<Job> jobs;
    std::map<long, size_t> rank_alpha, rank_beta;
    for (long d = dmin; d <= cutoff; ++d) {
        // alpha ranks needed at d (for H^1) and d - sa (for H^0)
        rank_alpha.emplace(d, 0);
        rank_alpha.emplace(d - sa, 0);
        rank_beta.emplace(d, 0);
        rank_beta.emplace(d - sb, 0);
    }
    for (auto& [d, r] : rank_alpha) jobs.push_back({true, d});
    for (auto& [d, r] : rank_beta) jobs.push_back({false, d});
    std::vector<size_t> results(jobs.size(), 0);

    int threads = resolve_threads(opts.threads);
    parallel_for(jobs.size(), threads, [&](size_t i) {
        const Job& job = jobs[i];
        const GradedMap& m = job.is_alpha ? x.alpha : x.beta;
        auto cols = strand_columns(m, job.degree, table);
        size_t nrows = strand_dim(m.target(), job.degree + m.shift(), table);
        results[i] = sparse_rank(x.ring->prime, nrows, std::move(cols));
    });
    for (size_t i = 0; i < jobs.size(); ++i) {
        if (jobs[i].is_alpha)
            rank_alpha[jobs[i].degree] = results[i];
        else
            rank_beta[jobs[i].degree] = results[i];
    }

    HomologyReport report;
    report.cutoff_used = cutoff;
    report.window_used = window;
    long last_nonzero = dmin - 1;
    for (long d = dmin; d <= cutoff; ++d) {
        size_t dim0 = strand_dim(x.even, d, table);
        size_t dim1 = strand_dim(x.odd, d, table);
        size_t ra_in = rank_alpha.count(d - sa) ? rank_alpha[d - sa] : 0;
        size_t rb_in = rank_beta.count(d - sb) ? rank_beta[d - sb] : 0;
        size_t ra = rank_alpha[d];
        size_t rb = rank_beta[d];
        if (dim0 < rb + ra_in || dim1 < ra + rb_in)
            throw DomainError("internal: negative homology dimension (potential nonzero?)");
        size_t h0 = dim0 - rb - ra_in;
        size_t h1 = dim1 - ra - rb_in;
        report.len_h0 += h0;
        report.len_h1 += h1;
        if (h0 || h1) {
            report.per_degree.push_back({d, h0, h1});
            last_nonzero = d;
        }
    }
    report.chi = static_cast<long>(report.len_h0) - static_cast<long>(report.len_h1);
    report.tail_window_clear = last_nonzero <= cutoff - window;
    if (!report.tail_window_clear) {
        report.warnings.push_back(
            "homology does not vanish in the final window (degrees " +
            std::to_string(cutoff - window + 1) + ".." + std::to_string(cutoff) +
            "); finite length unverified, consider raising the cutoff");
    }
    return report;
}

long euler_characteristic(const LinearFactorization& x, const HomologyOptions& opts) {
    HomologyReport report = homology_report(x, opts);
    if (!report.tail_window_clear && opts.strict)
        throw TailUnverifiedError("euler characteristic with unverified finite length: " +
                                  report.warnings.front());
    return report.chi;
}

bool is_acyclic(const LinearFactorization& x, const HomologyOptions& opts) {
    HomologyReport report = homology_report(x, opts);
    if (!report.tail_window_clear && opts.strict)
        throw TailUnverifiedError("acyclicity with unverified finite length");
    return report.len_h0 == 0 && report.len_h1 == 0 && report.tail_window_clear;
}

DenseMatrix graded_component(const GradedMap& m, long degree) {
    const RingSpec& ring = *m.ring();
    long gmin = 0, gmax = 0;
    for (const auto& mod : {m.source(), m.target()}) {
        for (long d : mod.generator_degrees) {
            gmin = std::min(gmin, d);
            gmax = std::max(gmax, d);
        }
    }
    long entry_deg = std::max(max_entry_degree(m), 0L);
    long e = degree + m.shift();
    BasisTable table(ring, std::min(degree, e) - gmax - entry_deg,
                     std::max(degree, e) + entry_deg - gmin);
    auto cols = strand_columns(m, degree, table);
    size_t nrows = strand_dim(m.target(), e, table);
    DenseMatrix out(ring.prime, nrows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        for (const auto& [row, val] : cols[j]) out.at(static_cast<size_t>(row), j) = val;
    }
    return out;
}

}  // namespace mfadams
