#include "hubrank/rankers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "hubrank/error.hpp"
#include "hubrank/power.hpp"
#include "parallel.hpp"

namespace hubrank {
namespace {

ScoreVector make_scores(std::string method, Side side, std::vector<double> scores)
{
    ScoreVector sv;
    sv.method = std::move(method);
    sv.side = side;
    sv.scores = std::move(scores);
    return sv;
}

double norm2(const std::vector<double>& x)
{
    double s = 0.0;
    for (double t : x) {
        s += t * t;
    }
    return std::sqrt(s);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

double max_abs(const std::vector<double>& a)
{
    double d = 0.0;
    for (double t : a) {
        d = std::max(d, std::abs(t));
    }
    return d;
}

void scale_to_unit_sum(std::vector<double>& x)
{
    const double s = std::accumulate(x.begin(), x.end(), 0.0);
    if (s > 0.0) {
        for (double& t : x) {
            t /= s;
        }
    }
}

void require_dense_size(const DirectedGraph& g, const char* what)
{
    if (2 * g.node_count() > kDenseThreshold) {
        throw ParameterError(std::string(what) + " needs 2n <= " + std::to_string(kDenseThreshold) +
                             " (graph has n = " + std::to_string(g.node_count()) + ")");
    }
}

// Radau brackets for every index of the bipartite operator, refined with
// p = 3, 5, ... until each is narrow enough or p_max is reached.
std::vector<NodeBounds> diagonal_brackets(const DirectedGraph& g, const SpectrumInterval& iv,
                                          const MatrixFunction& f, const QuadratureOptions& opts)
{
    if (opts.p_max == 0) {
        throw ParameterError("p_max must be positive");
    }
    if (!(opts.width_tol >= 0.0)) {
        throw ParameterError("width tolerance must be nonnegative");
    }
    const BipartiteOperator op(g);
    const std::size_t n = g.node_count();
    const double tol = breakdown_tolerance(iv);
    std::vector<NodeBounds> out(2 * n);
    detail::parallel_for(2 * n, opts.threads, [&](std::size_t idx) {
        LanczosProcess proc(op, idx, tol);
        std::size_t p = std::min<std::size_t>(3, opts.p_max);
        NodeBounds nb;
        for (;;) {
            proc.extend_to(p);
            nb = radau_bounds(proc, idx, iv, f);
            const bool narrow = nb.width() <= opts.width_tol * std::max(1.0, std::abs(nb.lower));
            if (nb.exact || narrow || p >= opts.p_max) {
                break;
            }
            p = std::min(p + 2, opts.p_max);
        }
        nb.node = idx < n ? idx : idx - n;
        out[idx] = nb;
    });
    return out;
}

QuadratureScores collect_brackets(const DirectedGraph& g, std::vector<NodeBounds> all, const std::string& method,
                                  const QuadratureOptions& opts)
{
    const std::size_t n = g.node_count();
    QuadratureScores qs;
    qs.hub_bounds.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
    qs.authority_bounds.assign(all.begin() + static_cast<std::ptrdiff_t>(n), all.end());

    auto build = [&](const std::vector<NodeBounds>& bounds, Side side) {
        std::vector<double> mid(n);
        std::size_t unresolved = 0;
        std::size_t max_p = 0;
        double max_width = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const NodeBounds& b = bounds[i];
            mid[i] = b.midpoint();
            max_p = std::max(max_p, b.p);
            max_width = std::max(max_width, b.width());
            if (!b.exact && b.width() > opts.width_tol * std::max(1.0, std::abs(b.lower))) {
                ++unresolved;
            }
        }
        ScoreVector sv = make_scores(method, side, std::move(mid));
        sv.parameters["p_max"] = static_cast<double>(opts.p_max);
        sv.diagnostics.iterations = max_p;
        sv.diagnostics.residual = max_width;
        sv.diagnostics.values["unresolved"] = static_cast<double>(unresolved);
        if (unresolved > 0) {
            sv.diagnostics.converged = false;
            sv.diagnostics.add_flag(kFlagUnresolved);
        }
        return sv;
    };
    qs.scores.hub = build(qs.hub_bounds, Side::hub);
    qs.scores.authority = build(qs.authority_bounds, Side::authority);
    return qs;
}

struct Triplets {
    std::vector<double> sigma;  // descending
    Eigen::MatrixXd u;          // n x count
    Eigen::MatrixXd v;          // n x count
    bool converged = true;
    std::size_t iterations = 0;
};

Triplets dense_triplets(const DirectedGraph& g)
{
    const Eigen::MatrixXd a = dense_adjacency(g);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Triplets t;
    t.sigma.assign(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
    t.u = svd.matrixU();
    t.v = svd.matrixV();
    return t;
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& w)
{
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(w);
    return qr.householderQ() * Eigen::MatrixXd::Identity(w.rows(), w.cols());
}

Eigen::MatrixXd gram_action(const DirectedGraph& g, const Eigen::MatrixXd& x)
{
    const std::size_t n = g.node_count();
    Eigen::MatrixXd w(x.rows(), x.cols());
    std::vector<double> col(n), ax(n), out(n);
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        Eigen::Map<Eigen::VectorXd>(col.data(), static_cast<Eigen::Index>(n)) = x.col(j);
        spmv(g, col, ax, Transpose::no);
        spmv(g, ax, out, Transpose::yes);
        w.col(j) = Eigen::Map<const Eigen::VectorXd>(out.data(), static_cast<Eigen::Index>(n));
    }
    return w;
}

// Leading r right singular vectors from block power iteration on A^T A with
// a Rayleigh-Ritz step per sweep. A few extra columns speed up convergence
// and provide an estimate of sigma_{r+1}.
Triplets subspace_triplets(const DirectedGraph& g, std::size_t r, double tol, std::size_t max_iter)
{
    const std::size_t n = g.node_count();
    const auto block = static_cast<Eigen::Index>(std::min(n, 2 * r + 8));
    const auto rows = static_cast<Eigen::Index>(n);

    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::MatrixXd v(rows, block);
    for (Eigen::Index j = 0; j < block; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            v(i, j) = dist(rng);
        }
    }
    v = orthonormalize(v);

    Triplets t;
    t.converged = false;
    Eigen::VectorXd theta;
    Eigen::MatrixXd ritz;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        const Eigen::MatrixXd w = gram_action(g, v);
        const Eigen::MatrixXd h = v.transpose() * w;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (h + h.transpose()));
        // descending order
        theta = eig.eigenvalues().reverse();
        const Eigen::MatrixXd s = eig.eigenvectors().rowwise().reverse();
        ritz = v * s;
        const Eigen::MatrixXd wr = w * s;
        double worst = 0.0;
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(r); ++j) {
            worst = std::max(worst, (wr.col(j) - theta(j) * ritz.col(j)).norm());
        }
        t.iterations = it;
        if (worst <= tol * std::max(theta(0), 1e-300)) {
            t.converged = true;
            break;
        }
        v = orthonormalize(wr);
    }

    t.sigma.resize(static_cast<std::size_t>(block));
    t.u.resize(rows, static_cast<Eigen::Index>(r));
    t.v = ritz.leftCols(static_cast<Eigen::Index>(r));
    std::vector<double> col(n), ax(n);
    for (Eigen::Index j = 0; j < block; ++j) {
        t.sigma[static_cast<std::size_t>(j)] = std::sqrt(std::max(theta(j), 0.0));
    }
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(r); ++j) {
        Eigen::Map<Eigen::VectorXd>(col.data(), rows) = t.v.col(j);
        spmv(g, col, ax, Transpose::no);
        const Eigen::Map<const Eigen::VectorXd> av(ax.data(), rows);
        const double s = av.norm();
        if (!(s > 1e-12 * std::max(t.sigma[0], 1e-300))) {
            throw ParameterError("truncated: k exceeds the numerical rank of A; use the dense solver");
        }
        t.sigma[static_cast<std::size_t>(j)] = s;
        t.u.col(j) = av / s;
    }
    return t;
}

std::vector<double> katz_solve(const DirectedGraph& g, double c, Transpose tr, const KatzOptions& opts,
                               Diagnostics& diag)
{
    const std::size_t n = g.node_count();
    std::vector<double> y(n, 1.0), next(n);
    for (std::size_t it = 1; it <= opts.max_iter; ++it) {
        spmv(g, y, next, tr);
        for (double& t : next) {
            t = 1.0 + c * t;
        }
        // next - y is the residual of the current iterate
        const double residual = max_abs_diff(next, y);
        if (!std::isfinite(residual)) {
            throw NumericalError("Katz iteration diverged; c is too large for this graph");
        }
        diag.iterations = it;
        diag.residual = residual;
        if (residual <= opts.tol) {
            return y;
        }
        y.swap(next);
    }
    throw NumericalError("Katz iteration did not converge in " + std::to_string(opts.max_iter) +
                         " iterations; c * rho(A) is too close to 1");
}

} // namespace

HubAuthority hits(const DirectedGraph& g, const HitsOptions& opts)
{
    if (!(opts.tol > 0.0)) {
        throw ParameterError("HITS tolerance must be positive");
    }
    if (g.edge_count() == 0) {
        throw NumericalError("HITS is undefined on a graph without edges");
    }
    const std::size_t n = g.node_count();
    std::vector<double> x(n, 1.0);
    if (!opts.init.empty()) {
        if (opts.init.size() != n) {
            throw ParameterError("HITS starting vector has the wrong length");
        }
        for (double t : opts.init) {
            if (!(t >= 0.0) || !std::isfinite(t)) {
                throw ParameterError("HITS starting vector must be nonnegative and finite");
            }
        }
        x = opts.init;
    }
    const double nx = norm2(x);
    if (!(nx > 0.0)) {
        throw ParameterError("HITS starting vector must be nonzero");
    }
    for (double& t : x) {
        t /= nx;
    }

    std::vector<double> y(n, 0.0), y_new(n), x_new(n);
    Diagnostics diag;
    diag.converged = false;
    for (std::size_t it = 1; it <= opts.max_iter; ++it) {
        spmv(g, x, y_new, Transpose::no);
        const double ny = norm2(y_new);
        if (!(ny > 0.0)) {
            throw NumericalError("HITS iterate vanished; the starting vector misses every linked authority");
        }
        for (double& t : y_new) {
            t /= ny;
        }
        spmv(g, y_new, x_new, Transpose::yes);
        const double nxn = norm2(x_new);
        for (double& t : x_new) {
            t /= nxn;
        }
        const double change = std::max(max_abs_diff(x_new, x), max_abs_diff(y_new, y));
        x.swap(x_new);
        y.swap(y_new);
        diag.iterations = it;
        diag.residual = change;
        if (change < opts.tol) {
            diag.converged = true;
            break;
        }
    }
    if (!diag.converged) {
        diag.add_flag(kFlagNotConverged);
    }

    const SpectralEstimate est = power_singular_pair(g);
    diag.values["sigma1"] = est.sigma1;
    diag.values["sigma2"] = est.sigma2;
    if (n >= 2 && est.sigma1 - est.sigma2 < opts.tol * est.sigma1) {
        diag.add_flag(kFlagDegenerate);
    }

    scale_to_unit_sum(y);
    scale_to_unit_sum(x);
    HubAuthority out{make_scores("hits", Side::hub, std::move(y)), make_scores("hits", Side::authority, std::move(x))};
    for (ScoreVector* sv : {&out.hub, &out.authority}) {
        sv->parameters["tol"] = opts.tol;
        sv->diagnostics = diag;
    }
    return out;
}

HubAuthority exp_centrality_exact(const DirectedGraph& g)
{
    require_dense_size(g, "exp-exact");
    const std::size_t n = g.node_count();
    const Eigen::MatrixXd e = dense_expm(BipartiteOperator(g).to_dense());
    std::vector<double> hub(n), auth(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        hub[i] = e(k, k);
        auth[i] = e(k + static_cast<Eigen::Index>(n), k + static_cast<Eigen::Index>(n));
    }
    HubAuthority out{make_scores("exp-exact", Side::hub, std::move(hub)),
                     make_scores("exp-exact", Side::authority, std::move(auth))};
    out.hub.diagnostics.values["trace"] = e.trace();
    out.authority.diagnostics.values["trace"] = e.trace();
    return out;
}

QuadratureScores exp_centrality_quadrature(const DirectedGraph& g, const QuadratureOptions& opts)
{
    const SpectrumInterval iv = spectrum_interval(g);
    QuadratureScores qs =
        collect_brackets(g, diagonal_brackets(g, iv, MatrixFunction::exponential(), opts), "exp-quad", opts);
    for (ScoreVector* sv : {&qs.scores.hub, &qs.scores.authority}) {
        sv->parameters["width_tol"] = opts.width_tol;
        sv->diagnostics.values["interval_b"] = iv.b;
    }
    return qs;
}

HubAuthority truncated_spectral_scores(const DirectedGraph& g, std::size_t k, const TruncatedOptions& opts)
{
    const std::size_t n = g.node_count();
    if (k == 0 || k > 2 * n) {
        throw ParameterError("truncated: k must lie in [1, 2n] (2n = " + std::to_string(2 * n) + ")");
    }
    using Solver = TruncatedOptions::Solver;
    Solver solver = opts.solver;
    if (solver == Solver::automatic) {
        solver = 2 * n <= kDenseThreshold ? Solver::dense : Solver::subspace;
    }
    if (solver == Solver::subspace && (k > n || g.edge_count() == 0)) {
        require_dense_size(g, "truncated with k > n");
        solver = Solver::dense;
    }

    const Triplets t = solver == Solver::dense ? dense_triplets(g)
                                               : subspace_triplets(g, k, opts.tol, opts.max_iter);

    struct Eigenpair {
        double lambda;
        std::size_t index;
    };
    std::vector<Eigenpair> pairs;
    const std::size_t with_vectors = static_cast<std::size_t>(t.v.cols());
    for (std::size_t i = 0; i < t.sigma.size(); ++i) {
        pairs.push_back({t.sigma[i], i});
        if (solver == Solver::dense) {
            pairs.push_back({-t.sigma[i], i});
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Eigenpair& a, const Eigenpair& b) { return a.lambda > b.lambda; });

    std::vector<double> hub(n, 0.0), auth(n, 0.0);
    for (std::size_t m = 0; m < k; ++m) {
        const Eigenpair& e = pairs[m];
        if (e.index >= with_vectors) {
            throw NumericalError("truncated: missing singular vector");
        }
        const double w = 0.5 * std::exp(e.lambda);
        const auto col = static_cast<Eigen::Index>(e.index);
        for (std::size_t i = 0; i < n; ++i) {
            const auto r = static_cast<Eigen::Index>(i);
            hub[i] += w * t.u(r, col) * t.u(r, col);
            auth[i] += w * t.v(r, col) * t.v(r, col);
        }
    }

    Diagnostics diag;
    diag.iterations = t.iterations;
    diag.converged = t.converged;
    if (!t.converged) {
        diag.add_flag(kFlagNotConverged);
    }
    const double s1 = t.sigma.empty() ? 0.0 : t.sigma[0];
    const double s2 = t.sigma.size() > 1 ? t.sigma[1] : 0.0;
    diag.values["sigma1"] = s1;
    diag.values["sigma2"] = s2;
    if (n >= 2 && s1 > 0.0 && s1 - s2 < opts.tol * s1) {
        diag.add_flag(kFlagDegenerate);
    }
    if (k < pairs.size()) {
        const double a = pairs[k - 1].lambda;
        const double b = pairs[k].lambda;
        if (std::abs(a - b) <= opts.tol * std::max(1.0, std::abs(a))) {
            diag.add_flag(kFlagAmbiguousTruncation);
        }
    }
    HubAuthority out{make_scores("truncated", Side::hub, std::move(hub)),
                     make_scores("truncated", Side::authority, std::move(auth))};
    for (ScoreVector* sv : {&out.hub, &out.authority}) {
        sv->parameters["k"] = static_cast<double>(k);
        sv->diagnostics = diag;
    }
    return out;
}

HubAuthority katz_row_col(const DirectedGraph& g, const KatzOptions& opts)
{
    if (!(opts.tol > 0.0)) {
        throw ParameterError("Katz tolerance must be positive");
    }
    const SpectralRadius rho = spectral_radius(g);
    const double c = opts.c.value_or(1.0 / (rho.value + 0.1));
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw ParameterError("Katz parameter c must be positive");
    }
    // a fallback bound is not an estimate, so only reject on a certified rho
    if (!rho.is_bound && c * rho.value >= 1.0) {
        throw ParameterError("Katz parameter c = " + std::to_string(c) + " needs c * rho(A) < 1 (rho(A) = " +
                             std::to_string(rho.value) + ")");
    }
    Diagnostics dh, da;
    std::vector<double> hub = katz_solve(g, c, Transpose::no, opts, dh);
    std::vector<double> auth = katz_solve(g, c, Transpose::yes, opts, da);
    HubAuthority out{make_scores("katz", Side::hub, std::move(hub)),
                     make_scores("katz", Side::authority, std::move(auth))};
    out.hub.diagnostics = dh;
    out.authority.diagnostics = da;
    for (ScoreVector* sv : {&out.hub, &out.authority}) {
        sv->parameters["c"] = c;
        sv->diagnostics.values["rho"] = rho.value;
    }
    return out;
}

HubAuthority resolvent_bipartite(const DirectedGraph& g, const ResolventOptions& opts)
{
    const std::size_t n = g.node_count();
    const double sigma1 = g.edge_count() > 0 ? power_singular_pair(g).sigma1 : 0.0;
    const double c = opts.c.value_or(sigma1 > 0.0 ? 0.9 / sigma1 : 0.9);
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw ParameterError("resolvent parameter c must be positive");
    }
    if (c * sigma1 >= 1.0) {
        throw ParameterError("resolvent parameter c = " + std::to_string(c) + " needs c * sigma1 < 1 (sigma1 = " +
                             std::to_string(sigma1) + ")");
    }
    EvaluationMode mode = opts.mode;
    if (mode == EvaluationMode::automatic) {
        mode = n <= 2000 ? EvaluationMode::dense : EvaluationMode::quadrature;
    }

    HubAuthority out;
    if (mode == EvaluationMode::dense) {
        require_dense_size(g, "dense resolvent");
        const Eigen::MatrixXd a = dense_adjacency(g);
        const auto dim = static_cast<Eigen::Index>(n);
        const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
        const Eigen::MatrixXd rh = Eigen::PartialPivLU<Eigen::MatrixXd>(id - c * c * a * a.transpose()).inverse();
        const Eigen::MatrixXd ra = Eigen::PartialPivLU<Eigen::MatrixXd>(id - c * c * a.transpose() * a).inverse();
        std::vector<double> hub(n), auth(n);
        for (Eigen::Index i = 0; i < dim; ++i) {
            hub[static_cast<std::size_t>(i)] = rh(i, i);
            auth[static_cast<std::size_t>(i)] = ra(i, i);
        }
        out = {make_scores("resolvent", Side::hub, std::move(hub)),
               make_scores("resolvent", Side::authority, std::move(auth))};
    } else {
        SpectrumInterval iv = spectrum_interval(g);
        if (c * iv.b >= 1.0) {
            iv.b = std::min(iv.b, 0.5 * (sigma1 + 1.0 / c));
            iv.a = -iv.b;
        }
        out = collect_brackets(g, diagonal_brackets(g, iv, MatrixFunction::resolvent(c), opts.quadrature),
                               "resolvent", opts.quadrature)
                  .scores;
    }
    for (ScoreVector* sv : {&out.hub, &out.authority}) {
        sv->parameters["c"] = c;
        sv->diagnostics.values["sigma1"] = sigma1;
    }
    return out;
}

HubAuthority expA_row_col_sums(const DirectedGraph& g, ExpmActionMethod method)
{
    const std::vector<double> ones(g.node_count(), 1.0);
    return {make_scores("expA", Side::hub, expm_action(g, ones, Transpose::no, method)),
            make_scores("expA", Side::authority, expm_action(g, ones, Transpose::yes, method))};
}

ScoreVector pagerank(const DirectedGraph& g, const PageRankOptions& opts)
{
    if (!(opts.alpha >= 0.0 && opts.alpha < 1.0)) {
        throw ParameterError("PageRank damping alpha must lie in [0, 1)");
    }
    if (!(opts.tol > 0.0)) {
        throw ParameterError("PageRank tolerance must be positive");
    }
    DirectedGraph reversed_graph = opts.reverse ? g.reversed() : g;
    const DirectedGraph& h = reversed_graph;
    const std::size_t n = h.node_count();
    const double inv_n = 1.0 / static_cast<double>(n);

    std::vector<double> out_weight(n);
    for (NodeId i = 0; i < n; ++i) {
        out_weight[i] = h.weighted_out_degree(i);
    }
    std::vector<double> x(n, inv_n), next(n);
    Diagnostics diag;
    diag.converged = false;
    for (std::size_t it = 1; it <= opts.max_iter; ++it) {
        std::fill(next.begin(), next.end(), 0.0);
        double dangling = 0.0;
        double total = 0.0;
        for (NodeId i = 0; i < n; ++i) {
            total += x[i];
            if (out_weight[i] == 0.0) {
                dangling += x[i];
                continue;
            }
            const double share = opts.alpha * x[i] / out_weight[i];
            const auto targets = h.successors(i);
            const auto weights = h.successor_weights(i);
            for (std::size_t e = 0; e < targets.size(); ++e) {
                next[targets[e]] += share * weights[e];
            }
        }
        const double spread = (opts.alpha * dangling + (1.0 - opts.alpha) * total) * inv_n;
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] += spread;
            change += std::abs(next[i] - x[i]);
        }
        x.swap(next);
        diag.iterations = it;
        diag.residual = change;
        if (change < opts.tol) {
            diag.converged = true;
            break;
        }
    }
    if (!diag.converged) {
        diag.add_flag(kFlagNotConverged);
    }
    scale_to_unit_sum(x);
    ScoreVector sv = make_scores(opts.reverse ? "reverse-pagerank" : "pagerank",
                                 opts.reverse ? Side::hub : Side::authority, std::move(x));
    sv.parameters["alpha"] = opts.alpha;
    sv.diagnostics = diag;
    return sv;
}

HubAuthority degree_scores(const DirectedGraph& g)
{
    const std::size_t n = g.node_count();
    std::vector<double> out(n), in(n);
    for (NodeId i = 0; i < n; ++i) {
        out[i] = static_cast<double>(g.out_degree(i));
        in[i] = static_cast<double>(g.in_degree(i));
    }
    return {make_scores("degree", Side::hub, std::move(out)), make_scores("degree", Side::authority, std::move(in))};
}

double communicability(const DirectedGraph& g, NodeId i, NodeId j, CommunicabilityKind kind, EvaluationMode mode,
                       std::size_t p)
{
    const std::size_t n = g.node_count();
    if (i >= n || j >= n) {
        throw ParameterError("communicability: node out of range");
    }
    std::size_t r = i;
    std::size_t c = j;
    if (kind == CommunicabilityKind::authority) {
        r += n;
        c += n;
    } else if (kind == CommunicabilityKind::hub_authority) {
        c += n;
    }
    if (mode == EvaluationMode::dense || (mode == EvaluationMode::automatic && 2 * n <= kDenseThreshold)) {
        require_dense_size(g, "dense communicability");
        const Eigen::MatrixXd e = dense_expm(BipartiteOperator(g).to_dense());
        return e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
    const BipartiteOperator op(g);
    const double tol = breakdown_tolerance(spectrum_interval(g));
    if (r == c) {
        LanczosProcess proc(op, r, tol);
        proc.extend_to(p);
        return gauss_estimate(proc.jacobi(), MatrixFunction::exponential());
    }
    return bilinear_estimate(op, r, c, p, MatrixFunction::exponential(), tol);
}

const std::vector<std::string>& method_ids()
{
    static const std::vector<std::string> ids{"exp-exact", "exp-quad", "hits",     "truncated", "katz",
                                              "resolvent", "expA",     "pagerank", "degree"};
    return ids;
}

ScoreVector rank_nodes(const DirectedGraph& g, const MethodConfig& config, Side side)
{
    const std::string& id = config.id;
    if (id == "exp-exact") {
        return exp_centrality_exact(g).get(side);
    }
    if (id == "exp-quad") {
        QuadratureOptions q;
        q.p_max = config.p_max;
        q.width_tol = config.width_tol;
        q.threads = config.threads;
        return exp_centrality_quadrature(g, q).scores.get(side);
    }
    if (id == "hits") {
        HitsOptions h;
        h.tol = config.tol.value_or(h.tol);
        return hits(g, h).get(side);
    }
    if (id == "truncated") {
        TruncatedOptions t;
        t.tol = config.tol.value_or(t.tol);
        return truncated_spectral_scores(g, config.k, t).get(side);
    }
    if (id == "katz") {
        KatzOptions k;
        k.c = config.c;
        k.tol = config.tol.value_or(k.tol);
        return katz_row_col(g, k).get(side);
    }
    if (id == "resolvent") {
        ResolventOptions r;
        r.c = config.c;
        r.quadrature.threads = config.threads;
        return resolvent_bipartite(g, r).get(side);
    }
    if (id == "expA") {
        return expA_row_col_sums(g).get(side);
    }
    if (id == "pagerank") {
        PageRankOptions p;
        p.alpha = config.alpha;
        p.tol = config.tol.value_or(p.tol);
        p.reverse = side == Side::hub;
        return pagerank(g, p);
    }
    if (id == "degree") {
        return degree_scores(g).get(side);
    }
    throw ParameterError("unknown method '" + id + "'");
}

} // namespace hubrank
