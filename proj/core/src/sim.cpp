#include "spinwit/sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

constexpr cplx kImag{0.0, 1.0};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void check_sites(int n_sites) {
    if (n_sites < 1) throw std::invalid_argument("sim: need at least one site");
}

// site digit of a basis index; site 0 is the most significant digit
struct SiteIndexer {
    int site_dim;
    int n_sites;
    std::vector<long> stride;

    SiteIndexer(int dim, int n) : site_dim(dim), n_sites(n), stride(n) {
        long acc = 1;
        for (int k = n - 1; k >= 0; --k) {
            stride[k] = acc;
            acc *= dim;
        }
    }
    int digit(long idx, int site) const {
        return static_cast<int>((idx / stride[site]) % site_dim);
    }
};

// out += (op at site k) applied to psi
void accumulate_site_op(const DenseMatrix& op, const SiteIndexer& ix, int site,
                        const std::vector<cplx>& psi, std::vector<cplx>& out) {
    long dim = static_cast<long>(psi.size());
    long stride = ix.stride[site];
    for (long idx = 0; idx < dim; ++idx) {
        if (psi[idx] == cplx{}) continue;
        int d = ix.digit(idx, site);
        for (int d2 = 0; d2 < ix.site_dim; ++d2) {
            cplx amp = op.at(d2, d);
            if (amp == cplx{}) continue;
            out[idx + (d2 - d) * stride] += amp * psi[idx];
        }
    }
}

// dense total operator sum_k (op at site k)
DenseMatrix total_site_op(const DenseMatrix& op, const SiteIndexer& ix, long dim) {
    DenseMatrix total(static_cast<int>(dim));
    for (long idx = 0; idx < dim; ++idx) {
        for (int site = 0; site < ix.n_sites; ++site) {
            int d = ix.digit(idx, site);
            long stride = ix.stride[site];
            for (int d2 = 0; d2 < ix.site_dim; ++d2) {
                cplx amp = op.at(d2, d);
                if (amp == cplx{}) continue;
                total.at(static_cast<int>(idx + (d2 - d) * stride),
                         static_cast<int>(idx)) += amp;
            }
        }
    }
    return total;
}

// dense two-site product (opa at site ka) * (opb at site kb), ka != kb
DenseMatrix two_site_op(const DenseMatrix& opa, int ka, const DenseMatrix& opb, int kb,
                        const SiteIndexer& ix, long dim) {
    DenseMatrix out(static_cast<int>(dim));
    long sa = ix.stride[ka], sb = ix.stride[kb];
    for (long idx = 0; idx < dim; ++idx) {
        int da = ix.digit(idx, ka), db = ix.digit(idx, kb);
        for (int da2 = 0; da2 < ix.site_dim; ++da2) {
            cplx va = opa.at(da2, da);
            if (va == cplx{}) continue;
            for (int db2 = 0; db2 < ix.site_dim; ++db2) {
                cplx vb = opb.at(db2, db);
                if (vb == cplx{}) continue;
                long idx2 = idx + (da2 - da) * sa + (db2 - db) * sb;
                out.at(static_cast<int>(idx2), static_cast<int>(idx)) += va * vb;
            }
        }
    }
    return out;
}

std::vector<std::vector<long>> magnetization_groups(const SiteIndexer& ix, long dim) {
    int max_sum = ix.n_sites * (ix.site_dim - 1);
    std::vector<std::vector<long>> groups(max_sum + 1);
    for (long idx = 0; idx < dim; ++idx) {
        int acc = 0;
        for (int k = 0; k < ix.n_sites; ++k) acc += ix.digit(idx, k);
        groups[acc].push_back(idx);
    }
    return groups;
}

void require_real_symmetric(const DenseMatrix& m, const char* name) {
    if (m.max_abs_imag() > 1e-12)
        throw std::runtime_error(std::string(name) + ": imaginary parts exceed 1e-12");
    if (!m.is_hermitian(1e-12))
        throw std::runtime_error(std::string(name) + ": not hermitian to 1e-12");
}

}  // namespace

SpinMatrices single_spin_matrices(TwiceSpin s) {
    int sigma = s.twice();
    int dim = sigma + 1;
    SpinMatrices ops{DenseMatrix(dim), DenseMatrix(dim), DenseMatrix(dim)};
    for (int i = 0; i < dim; ++i) ops.sz.at(i, i) = 0.5 * (sigma - 2 * i);
    for (int i = 1; i < dim; ++i) {
        // raising amplitude between m = s - i and m + 1
        double amp = std::sqrt(static_cast<double>(i) * (sigma - i + 1));
        ops.sx.at(i - 1, i) = 0.5 * amp;
        ops.sx.at(i, i - 1) = 0.5 * amp;
        ops.sy.at(i - 1, i) = -0.5 * amp * kImag;
        ops.sy.at(i, i - 1) = 0.5 * amp * kImag;
    }
    return ops;
}

long hilbert_dim(TwiceSpin s, int n_sites, SimLimits limits) {
    check_sites(n_sites);
    long dim = 1;
    int site_dim = s.twice() + 1;
    for (int k = 0; k < n_sites; ++k) {
        dim *= site_dim;
        if (dim > limits.dim_cap)
            throw CapExceededError("Hilbert-space dimension exceeds cap " +
                                   std::to_string(limits.dim_cap));
    }
    return dim;
}

DenseMatrix total_witness(TwiceSpin s, int n_sites, SimLimits limits) {
    long dim = hilbert_dim(s, n_sites, limits);
    SiteIndexer ix(s.twice() + 1, n_sites);
    SpinMatrices ops = single_spin_matrices(s);
    DenseMatrix w(static_cast<int>(dim));
    for (const DenseMatrix* op : {&ops.sx, &ops.sy, &ops.sz}) {
        DenseMatrix j = total_site_op(*op, ix, dim);
        DenseMatrix jj = matmul(j, j);
        axpy(w, 1.0, jj);
    }
    require_real_symmetric(w, "total_witness");
    return w;
}

std::vector<cplx> apply_total_axis(TwiceSpin s, int n_sites, int axis,
                                   const std::vector<cplx>& psi) {
    check_sites(n_sites);
    if (axis < 0 || axis > 2) throw std::invalid_argument("apply_total_axis: axis must be 0..2");
    SiteIndexer ix(s.twice() + 1, n_sites);
    SpinMatrices ops = single_spin_matrices(s);
    const DenseMatrix& op = axis == 0 ? ops.sx : axis == 1 ? ops.sy : ops.sz;
    std::vector<cplx> out(psi.size());
    for (int site = 0; site < n_sites; ++site) accumulate_site_op(op, ix, site, psi, out);
    return out;
}

double witness_expectation(TwiceSpin s, int n_sites, const std::vector<cplx>& psi) {
    double acc = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        std::vector<cplx> jpsi = apply_total_axis(s, n_sites, axis, psi);
        double n = norm(jpsi);
        acc += n * n;
    }
    return acc;
}

std::map<int, long long> spectrum_degeneracies(TwiceSpin s, int n_sites, SimLimits limits) {
    DenseMatrix w = total_witness(s, n_sites, limits);
    long dim = w.dim;
    SiteIndexer ix(s.twice() + 1, n_sites);

    long top = static_cast<long>(n_sites) * s.twice();
    int parity = static_cast<int>(top % 2);

    std::map<int, long long> counts;
    for (const std::vector<long>& group : magnetization_groups(ix, dim)) {
        if (group.empty()) continue;
        int m = static_cast<int>(group.size());
        std::vector<double> block(static_cast<std::size_t>(m) * m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                block[static_cast<std::size_t>(r) * m + c] =
                    w.at(static_cast<int>(group[r]), static_cast<int>(group[c])).real();
        JacobiResult eig = jacobi_eigh(std::move(block), m, false);
        for (double lambda : eig.eigenvalues) {
            // nearest admissible level j(j+1) with 2j in the parity class
            double j_est = 0.5 * (std::sqrt(1.0 + 4.0 * std::max(lambda, 0.0)) - 1.0);
            long t_near = std::lround(2.0 * j_est);
            long best_t = -1;
            double best_err = 1e300;
            for (long t = std::max<long>(parity, t_near - 3); t <= std::min(top, t_near + 3);
                 ++t) {
                if ((t - parity) % 2 != 0) continue;
                double err = std::abs(lambda - 0.25 * static_cast<double>(t) * (t + 2));
                if (err < best_err) {
                    best_err = err;
                    best_t = t;
                }
            }
            if (best_t < 0 || best_err > 1e-6)
                throw ClusteringError("eigenvalue " + std::to_string(lambda) +
                                      " matches no admissible level");
            counts[static_cast<int>(best_t)] += 1;
        }
    }
    return counts;
}

void ProductState::validate() const {
    int dim = s.twice() + 1;
    if (locals.empty()) throw std::invalid_argument("ProductState: no sites");
    for (const std::vector<cplx>& v : locals) {
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("ProductState: local dimension mismatch");
        double acc = 0.0;
        for (const cplx& z : v) acc += std::norm(z);
        if (std::abs(acc - 1.0) > 1e-12)
            throw std::invalid_argument("ProductState: local vector not normalized");
    }
}

ProductState stretched_product_state(TwiceSpin s, int n_sites) {
    check_sites(n_sites);
    std::vector<cplx> up(s.twice() + 1);
    up[0] = 1.0;  // m = +s
    return ProductState{s, std::vector<std::vector<cplx>>(n_sites, up)};
}

ProductState random_product_state(TwiceSpin s, int n_sites, std::uint64_t seed) {
    check_sites(n_sites);
    int dim = s.twice() + 1;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ProductState state{s, {}};
    state.locals.reserve(n_sites);
    for (int k = 0; k < n_sites; ++k) {
        std::vector<cplx> v(dim);
        double acc = 0.0;
        for (cplx& z : v) {
            z = cplx(gauss(rng), gauss(rng));
            acc += std::norm(z);
        }
        double inv = 1.0 / std::sqrt(acc);
        for (cplx& z : v) z *= inv;
        state.locals.push_back(std::move(v));
    }
    return state;
}

std::vector<cplx> full_vector(const ProductState& state, SimLimits limits) {
    state.validate();
    long dim = hilbert_dim(state.s, state.n_sites(), limits);
    std::vector<cplx> psi{cplx(1.0)};
    psi.reserve(dim);
    for (const std::vector<cplx>& v : state.locals) {
        std::vector<cplx> next(psi.size() * v.size());
        std::size_t pos = 0;
        for (const cplx& z : psi)
            for (const cplx& w : v) next[pos++] = z * w;
        psi.swap(next);
    }
    return psi;
}

double product_state_witness_value(const ProductState& state) {
    state.validate();
    SpinMatrices ops = single_spin_matrices(state.s);
    double sx = 0, sy = 0, sz = 0, self = 0;
    for (const std::vector<cplx>& v : state.locals) {
        double vx = expectation(ops.sx, v);
        double vy = expectation(ops.sy, v);
        double vz = expectation(ops.sz, v);
        sx += vx;
        sy += vy;
        sz += vz;
        self += vx * vx + vy * vy + vz * vz;
    }
    double s_val = state.s.value();
    return state.n_sites() * s_val * (s_val + 1.0) + (sx * sx + sy * sy + sz * sz) - self;
}

McBoundResult separable_bound_mc(TwiceSpin s, int n_sites, long trials,
                                 std::uint64_t seed, SimLimits) {
    check_sites(n_sites);
    if (trials < 1) throw std::invalid_argument("separable_bound_mc: trials must be >= 1");
    McBoundResult result;
    result.trials = trials;
    result.seed = seed;
    result.bound = n_sites * s.value();
    result.min_value = 0.0;
    for (long trial = 0; trial < trials; ++trial) {
        // independent per-trial stream: distinct seeds shift the sequence
        // by a multiple of the golden ratio, never by a trial offset
        std::uint64_t sub =
            splitmix64(seed + static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ULL);
        ProductState state = random_product_state(s, n_sites, sub);
        double value = product_state_witness_value(state);
        if (trial == 0 || value < result.min_value) {
            result.min_value = value;
            result.argmin = std::move(state);
        }
    }
    return result;
}

DenseMatrix heisenberg_chain(TwiceSpin s, int n_sites, double coupling, bool periodic,
                             SimLimits limits) {
    long dim = hilbert_dim(s, n_sites, limits);
    if (n_sites < 2) throw std::invalid_argument("heisenberg_chain: need at least 2 sites");
    SiteIndexer ix(s.twice() + 1, n_sites);
    SpinMatrices ops = single_spin_matrices(s);
    DenseMatrix h(static_cast<int>(dim));
    int bonds = periodic ? n_sites : n_sites - 1;
    for (int k = 0; k < bonds; ++k) {
        int k2 = (k + 1) % n_sites;
        for (const DenseMatrix* op : {&ops.sx, &ops.sy, &ops.sz})
            axpy(h, 0.5 * coupling, two_site_op(*op, k, *op, k2, ix, dim));
    }
    require_real_symmetric(h, "heisenberg_chain");
    return h;
}

GroundSolution ground_state(const DenseMatrix& op, TwiceSpin s, int n_sites) {
    check_sites(n_sites);
    require_real_symmetric(op, "ground_state");
    SiteIndexer ix(s.twice() + 1, n_sites);
    long dim = op.dim;

    GroundSolution best;
    bool have = false;
    for (const std::vector<long>& group : magnetization_groups(ix, dim)) {
        if (group.empty()) continue;
        int m = static_cast<int>(group.size());
        std::vector<double> block(static_cast<std::size_t>(m) * m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                block[static_cast<std::size_t>(r) * m + c] =
                    op.at(static_cast<int>(group[r]), static_cast<int>(group[c])).real();
        JacobiResult eig = jacobi_eigh(std::move(block), m, true);
        if (!have || eig.eigenvalues[0] < best.energy) {
            have = true;
            best.energy = eig.eigenvalues[0];
            best.state.assign(dim, cplx{});
            for (int r = 0; r < m; ++r) best.state[group[r]] = eig.vector_entry(r, 0);
        }
    }
    return best;
}

CommutatorReport commutator_check(TwiceSpin s, int n_sites, std::uint64_t seed,
                                  double coupling, bool periodic, SimLimits limits) {
    long dim = hilbert_dim(s, n_sites, limits);
    if (n_sites < 2) throw std::invalid_argument("commutator_check: need at least 2 sites");
    SiteIndexer ix(s.twice() + 1, n_sites);
    SpinMatrices ops = single_spin_matrices(s);

    DenseMatrix w = total_witness(s, n_sites, limits);
    DenseMatrix h = heisenberg_chain(s, n_sites, coupling, periodic, limits);
    DenseMatrix lhs = commutator(h, w);

    DenseMatrix jx = total_site_op(ops.sx, ix, dim);
    DenseMatrix jy = total_site_op(ops.sy, ix, dim);
    DenseMatrix jz = total_site_op(ops.sz, ix, dim);

    DenseMatrix rhs(static_cast<int>(dim));
    int bonds = periodic ? n_sites : n_sites - 1;
    for (int k = 0; k < bonds; ++k) {
        int k2 = (k + 1) % n_sites;
        axpy(rhs, kImag * coupling,
             commutator(jx, two_site_op(ops.sy, k, ops.sz, k2, ix, dim)));
        axpy(rhs, kImag * coupling,
             commutator(jy, two_site_op(ops.sz, k, ops.sx, k2, ix, dim)));
        axpy(rhs, kImag * coupling,
             commutator(jz, two_site_op(ops.sx, k, ops.sy, k2, ix, dim)));
    }

    CommutatorReport report;
    report.n_sites = n_sites;
    report.dim = dim;
    report.coupling = coupling;
    report.seed = seed;
    report.identity_dev = max_abs_diff(lhs, rhs);

    GroundSolution ground = ground_state(h, s, n_sites);
    report.ground_energy = ground.energy;
    report.ground_witness = witness_expectation(s, n_sites, ground.state);
    report.norm_ground = norm(spinwit::apply(lhs, ground.state));

    std::vector<cplx> stretched = full_vector(stretched_product_state(s, n_sites), limits);
    report.norm_stretched = norm(spinwit::apply(lhs, stretched));

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> random(dim);
    double acc = 0.0;
    for (cplx& z : random) {
        z = cplx(gauss(rng), gauss(rng));
        acc += std::norm(z);
    }
    double inv = 1.0 / std::sqrt(acc);
    for (cplx& z : random) z *= inv;
    report.norm_random = norm(spinwit::apply(lhs, random));

    return report;
}

}  // namespace spinwit
