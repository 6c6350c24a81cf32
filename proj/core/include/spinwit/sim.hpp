#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "spinwit/dense.hpp"
#include "spinwit/spin.hpp"

namespace spinwit {

struct SimLimits {
    long dim_cap = 4096;  // largest full Hilbert-space dimension to touch
};

// Single-site spin operators in the z-basis, dimension 2s+1, basis index i
// corresponding to projection m = s - i (highest weight first).
struct SpinMatrices {
    DenseMatrix sx, sy, sz;
};

SpinMatrices single_spin_matrices(TwiceSpin s);

long hilbert_dim(TwiceSpin s, int n_sites, SimLimits limits = {});  // throws past dim_cap

// W = Jx^2 + Jy^2 + Jz^2 on the N-site product space. Real symmetric in
// this basis; construction verifies hermiticity and that imaginary parts
// vanish to 1e-12.
DenseMatrix total_witness(TwiceSpin s, int n_sites, SimLimits limits = {});

// J_axis applied matrix-free (axis 0, 1, 2 for x, y, z).
std::vector<cplx> apply_total_axis(TwiceSpin s, int n_sites, int axis,
                                   const std::vector<cplx>& psi);

// <psi|W|psi> = sum_axis |J_axis psi|^2, no dense matrix involved.
double witness_expectation(TwiceSpin s, int n_sites, const std::vector<cplx>& psi);

// Spectrum of W resolved per eigenvalue: twice_j -> number of eigenvalues
// clustering to j(j+1). Diagonalization runs per magnetization block; an
// eigenvalue farther than 1e-6 from every admissible level raises
// ClusteringError.
std::map<int, long long> spectrum_degeneracies(TwiceSpin s, int n_sites,
                                               SimLimits limits = {});

// Product state: one normalized local vector per site.
struct ProductState {
    TwiceSpin s;
    std::vector<std::vector<cplx>> locals;

    int n_sites() const { return static_cast<int>(locals.size()); }
    void validate() const;  // dimensions and unit norms to 1e-12
};

ProductState stretched_product_state(TwiceSpin s, int n_sites);
ProductState random_product_state(TwiceSpin s, int n_sites, std::uint64_t seed);

std::vector<cplx> full_vector(const ProductState& state, SimLimits limits = {});

// <W> on a product state from local Bloch vectors alone:
// N s (s+1) + |sum_k v_k|^2 - sum_k |v_k|^2, cost linear in N.
double product_state_witness_value(const ProductState& state);

struct McBoundResult {
    long trials = 0;
    std::uint64_t seed = 0;
    double min_value = 0.0;   // smallest <W> seen
    double bound = 0.0;       // N * s, which no product state goes below
    ProductState argmin;
};

// Random-search check of the product-state floor: every trial draws an
// independent product state (per-trial sub-seed derived from `seed`).
McBoundResult separable_bound_mc(TwiceSpin s, int n_sites, long trials,
                                 std::uint64_t seed, SimLimits limits = {});

// H = (coupling / 2) * sum_k s^k . s^{k+1} over nearest-neighbor bonds,
// site N+1 identified with site 1 when periodic.
DenseMatrix heisenberg_chain(TwiceSpin s, int n_sites, double coupling,
                             bool periodic = true, SimLimits limits = {});

struct GroundSolution {
    double energy = 0.0;
    std::vector<cplx> state;
};

// Global ground state of a real-symmetric magnetization-conserving
// operator, found block by block.
GroundSolution ground_state(const DenseMatrix& op, TwiceSpin s, int n_sites);

struct CommutatorReport {
    int n_sites = 0;
    long dim = 0;
    double coupling = 0.0;
    std::uint64_t seed = 0;
    double identity_dev = 0.0;    // max |[H,W] - site-resolved right side|
    double norm_ground = 0.0;     // |[H,W] psi| on the chain ground state
    double norm_stretched = 0.0;  // ... on the all-aligned product state
    double norm_random = 0.0;     // ... on a Haar-random state
    double ground_energy = 0.0;
    double ground_witness = 0.0;  // <W> in the ground state
};

// Evaluates [H, W] against its expansion into single-bond commutators,
// iJ sum_i ([Jx, sy_i sz_{i+1}] + [Jy, sz_i sx_{i+1}] + [Jz, sx_i sy_{i+1}]),
// the sum running over the same bonds as H, and sizes the commutator on
// representative states.
CommutatorReport commutator_check(TwiceSpin s, int n_sites, std::uint64_t seed = 1,
                                  double coupling = 1.0, bool periodic = true,
                                  SimLimits limits = {});

}  // namespace spinwit
