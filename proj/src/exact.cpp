#include "thetakit/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "thetakit/spectral.hpp"

namespace thetakit {
namespace {

using Word = Graph::Word;
using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point start = Clock::now();
    Clock::time_point end;
    long long ticks = 0;
    bool expired = false;

    explicit Deadline(std::chrono::duration<double> budget)
        : end(start + std::chrono::duration_cast<Clock::duration>(budget)) {}

    bool tick() {
        if (!expired && (++ticks & 1023) == 0 && Clock::now() >= end) expired = true;
        return expired;
    }
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
    std::chrono::duration<double> remaining() const {
        return std::max(std::chrono::duration<double>(0), std::chrono::duration<double>(end - Clock::now()));
    }
};

// Ratio bound floor(-n lmin/(d - lmin)) on alpha for regular graphs with edges.
std::optional<long long> ratio_bound(const Graph& g, const SolveOptions& opt) {
    if (!opt.spectral_bound || g.n() > opt.spectral_bound_max_n || g.n() < 2) return std::nullopt;
    const auto d = g.regular_degree();
    if (!d || *d == 0) return std::nullopt;
    const double lmin = lambda_min(g);
    const double h = -g.n() * lmin / (*d - lmin);
    return static_cast<long long>(std::floor(h + 1e-6));
}

// Bitset branch and bound for maximum cliques: greedy colour classes bound each
// subproblem, vertices are numbered in a degeneracy order.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, long long target, Deadline& dl) : n_(g.n()), w_(g.words()), target_(target), dl_(dl) {
        order_ = degeneracy_order(g);
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
        adj_.assign(static_cast<std::size_t>(n_) * w_, 0);
        for (int i = 0; i < n_; ++i)
            for (int u : g.neighbors(order_[i])) set(row(i), pos[u]);
    }

    void set_target(long long t) { target_ = t; }

    void seed(const std::vector<int>& clique_original) {
        best_.clear();
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
        for (int v : clique_original) best_.push_back(pos[v]);
    }

    long long root_colour_bound() {
        std::vector<Word> p(w_, 0);
        for (int i = 0; i < n_; ++i) set(p.data(), i);
        std::vector<Word> u = p, q(w_);
        long long k = 0;
        while (any(u)) {
            ++k;
            q = u;
            while (any(q)) {
                const int v = first(q);
                clear(u.data(), v);
                clear(q.data(), v);
                for (int i = 0; i < w_; ++i) q[i] &= ~row(v)[i];
            }
        }
        return k;
    }

    void run() {
        std::vector<Word> p(w_, 0);
        for (int i = 0; i < n_; ++i) set(p.data(), i);
        current_.clear();
        if (static_cast<long long>(best_.size()) < target_) expand(p, 0);
    }

    std::vector<int> best() const {
        std::vector<int> out;
        for (int v : best_) out.push_back(order_[v]);
        std::sort(out.begin(), out.end());
        return out;
    }
    long long nodes() const { return nodes_; }

private:
    static void set(Word* b, int v) { b[v >> 6] |= Word{1} << (v & 63); }
    static void clear(Word* b, int v) { b[v >> 6] &= ~(Word{1} << (v & 63)); }
    bool any(const std::vector<Word>& b) const {
        return std::any_of(b.begin(), b.end(), [](Word x) { return x != 0; });
    }
    int first(const std::vector<Word>& b) const {
        for (int i = 0; i < w_; ++i)
            if (b[i]) return i * 64 + std::countr_zero(b[i]);
        return -1;
    }
    Word* row(int v) { return adj_.data() + static_cast<std::size_t>(v) * w_; }

    static std::vector<int> degeneracy_order(const Graph& g) {
        const int n = g.n();
        std::vector<int> deg = g.degrees(), out(n);
        std::vector<char> gone(n, 0);
        for (int slot = n - 1; slot >= 0; --slot) {
            int v = -1;
            for (int u = 0; u < n; ++u)
                if (!gone[u] && (v < 0 || deg[u] < deg[v])) v = u;
            gone[v] = 1;
            out[slot] = v;
            for (int u : g.neighbors(v))
                if (!gone[u]) --deg[u];
        }
        return out;
    }

    void expand(std::vector<Word>& p, int depth) {
        ++nodes_;
        if (dl_.tick()) return;
        const long long best = static_cast<long long>(best_.size());
        long long kmin = best - depth + 1;
        if (kmin < 1) kmin = 1;

        std::vector<int> verts, colours;
        std::vector<Word> u = p, q(w_);
        long long k = 0;
        while (any(u)) {
            ++k;
            q = u;
            while (any(q)) {
                const int v = first(q);
                clear(u.data(), v);
                clear(q.data(), v);
                for (int i = 0; i < w_; ++i) q[i] &= ~row(v)[i];
                if (k >= kmin) {
                    verts.push_back(v);
                    colours.push_back(static_cast<int>(k));
                }
            }
        }

        std::vector<Word> np(w_);
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (depth + colours[i] <= static_cast<long long>(best_.size())) return;
            const int v = verts[i];
            current_.push_back(v);
            bool nonempty = false;
            for (int j = 0; j < w_; ++j) {
                np[j] = p[j] & row(v)[j];
                nonempty |= np[j] != 0;
            }
            if (!nonempty) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(np, depth + 1);
            }
            current_.pop_back();
            clear(p.data(), v);
            if (static_cast<long long>(best_.size()) >= target_ || dl_.expired) return;
        }
    }

    int n_, w_;
    long long target_;
    Deadline& dl_;
    std::vector<int> order_;
    std::vector<Word> adj_;
    std::vector<int> best_, current_;
    long long nodes_ = 0;
};

std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> best;
    const auto deg = g.degrees();
    std::vector<int> by_degree(g.n());
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> c{s};
        for (int v : by_degree) {
            if (v == s) continue;
            if (std::all_of(c.begin(), c.end(), [&](int u) { return g.adjacent(u, v); })) c.push_back(v);
        }
        if (c.size() > best.size()) best = std::move(c);
    }
    return best;
}

SolveResult max_clique(const Graph& h, std::optional<long long> upper_hint, Deadline& dl) {
    SolveResult r;
    const int n = h.n();
    CliqueSearch run(h, n, dl);
    long long upper = std::min<long long>(n, run.root_colour_bound());
    if (upper_hint) upper = std::min(upper, *upper_hint);
    run.set_target(upper);
    run.seed(greedy_clique(h));
    run.run();
    r.witness = run.best();
    r.value = r.lower = static_cast<long long>(r.witness.size());
    r.nodes = run.nodes();
    if (dl.expired && r.value < upper) {
        r.status = SolveStatus::Timeout;
        r.upper = upper;
    } else {
        r.status = SolveStatus::Exact;
        r.upper = r.value;
    }
    r.elapsed_seconds = dl.elapsed();
    return r;
}

// DSATUR branch and bound; the vertices of a known clique are pre-coloured 0..k-1.
class ColouringSearch {
public:
    ColouringSearch(const Graph& g, long long lower, Deadline& dl)
        : g_(g), n_(g.n()), lower_(lower), dl_(dl), colour_(n_, -1), sat_(n_, 0),
          count_(static_cast<std::size_t>(n_) * (n_ + 1), 0), deg_(g.degrees()) {
        for (int v = 0; v < n_; ++v) nbrs_.push_back(g.neighbors(v));
        best_ = n_ + 1;
    }

    void run(const std::vector<int>& clique) {
        int used = 0;
        for (int v : clique) assign(v, used++);
        search(static_cast<int>(clique.size()), used);
    }

    long long best() const { return best_; }
    const std::vector<int>& best_colouring() const { return best_colouring_; }
    long long nodes() const { return nodes_; }

private:
    int& cnt(int v, int c) { return count_[static_cast<std::size_t>(v) * (n_ + 1) + c]; }

    void assign(int v, int c) {
        colour_[v] = c;
        for (int u : nbrs_[v])
            if (cnt(u, c)++ == 0) ++sat_[u];
    }
    void unassign(int v) {
        const int c = colour_[v];
        colour_[v] = -1;
        for (int u : nbrs_[v])
            if (--cnt(u, c) == 0) --sat_[u];
    }

    void search(int coloured, int used) {
        ++nodes_;
        if (dl_.tick()) return;
        if (used >= best_) return;
        if (coloured == n_) {
            best_ = used;
            best_colouring_ = colour_;
            return;
        }
        int v = -1;
        for (int u = 0; u < n_; ++u) {
            if (colour_[u] >= 0) continue;
            if (v < 0 || sat_[u] > sat_[v] || (sat_[u] == sat_[v] && deg_[u] > deg_[v])) v = u;
        }
        for (int c = 0; c < used; ++c) {
            if (cnt(v, c) != 0) continue;
            assign(v, c);
            search(coloured + 1, used);
            unassign(v);
            if (best_ <= lower_ || dl_.expired) return;
        }
        if (used + 1 < best_) {
            assign(v, used);
            search(coloured + 1, used + 1);
            unassign(v);
        }
    }

    const Graph& g_;
    int n_;
    long long lower_;
    Deadline& dl_;
    std::vector<int> colour_, sat_, count_, deg_;
    std::vector<std::vector<int>> nbrs_;
    long long best_;
    std::vector<int> best_colouring_;
    long long nodes_ = 0;
};

}  // namespace

const char* status_name(SolveStatus s) { return s == SolveStatus::Exact ? "exact" : "timeout"; }

bool is_independent_set(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_clique(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.n()) return false;
    if (std::any_of(colors.begin(), colors.end(), [](int c) { return c < 0; })) return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

SolveResult independence_number(const Graph& g, const SolveOptions& opt) {
    Deadline dl(opt.budget);
    auto hint = opt.upper_hint;
    if (auto rb = ratio_bound(g, opt)) hint = hint ? std::min(*hint, *rb) : *rb;
    auto r = max_clique(complement(g), hint, dl);
    r.elapsed_seconds = dl.elapsed();
    return r;
}

SolveResult clique_number(const Graph& g, const SolveOptions& opt) {
    Deadline dl(opt.budget);
    auto hint = opt.upper_hint;
    if (!g.is_complete())
        if (auto rb = ratio_bound(complement(g), opt)) hint = hint ? std::min(*hint, *rb) : *rb;
    auto r = max_clique(g, hint, dl);
    r.elapsed_seconds = dl.elapsed();
    return r;
}

SolveResult chromatic_number(const Graph& g, const SolveOptions& opt) {
    Deadline dl(opt.budget);
    const int n = g.n();
    SolveOptions sub = opt;
    sub.upper_hint.reset();

    sub.budget = dl.remaining() / 4;
    const auto omega = clique_number(g, sub);
    long long lower = std::max<long long>(1, omega.value);

    sub.budget = dl.remaining() / 3;
    const auto alpha = independence_number(g, sub);
    lower = std::max(lower, (n + alpha.upper - 1) / alpha.upper);

    const auto d = g.regular_degree();
    if (opt.spectral_bound && d && *d > 0 && n <= opt.spectral_bound_max_n) {
        const double lmin = lambda_min(g);
        lower = std::max(lower, static_cast<long long>(std::ceil(1 - *d / lmin - 1e-9)));
    }

    ColouringSearch search(g, lower, dl);
    search.run(omega.witness);

    SolveResult r;
    r.witness = omega.witness;
    r.coloring = search.best_colouring();
    r.value = r.upper = search.best();
    // A search that ran to completion proves optimality on its own.
    r.lower = dl.expired ? std::min(lower, r.upper) : r.upper;
    r.nodes = search.nodes() + omega.nodes + alpha.nodes;
    r.status = r.lower == r.upper ? SolveStatus::Exact : SolveStatus::Timeout;
    r.elapsed_seconds = dl.elapsed();
    return r;
}

CapacityCertificate capacity_certificate(const Graph& g, double theta, std::string theta_source,
                                         const SolveOptions& opt) {
    CapacityCertificate c;
    c.theta = theta;
    c.theta_source = std::move(theta_source);
    SolveOptions o = opt;
    const long long cap = static_cast<long long>(std::floor(theta + 1e-6));
    o.upper_hint = o.upper_hint ? std::min(*o.upper_hint, cap) : cap;
    c.alpha = independence_number(g, o);
    if (c.alpha.exact() && std::abs(theta - static_cast<double>(c.alpha.value)) < 1e-6) {
        c.status = CapacityStatus::Determined;
        c.capacity = static_cast<double>(c.alpha.value);
    }
    return c;
}

std::vector<PowerLowerBound> capacity_power_lb(const Graph& g, int k_max, const SolveOptions& opt,
                                               const ProductLimits& lim) {
    std::vector<PowerLowerBound> out;
    for (int k = 1; k <= k_max; ++k) {
        double order = std::pow(static_cast<double>(g.n()), k);
        if (order > static_cast<double>(lim.max_order)) break;
        const Graph p = strong_power(g, k, lim);
        PowerLowerBound b;
        b.k = k;
        b.alpha = independence_number(p, opt);
        b.root = std::pow(static_cast<double>(b.alpha.value), 1.0 / k);
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace thetakit
