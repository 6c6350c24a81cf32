#include "spinwit/lattice_paths.hpp"

#include <stdexcept>

#include "spinwit/errors.hpp"

namespace spinwit {

bool LatticePath::valid() const {
    if (twice_heights.empty() || twice_heights.front() != 0) return false;
    for (std::size_t i = 0; i + 1 < twice_heights.size(); ++i) {
        int a = twice_heights[i], b = twice_heights[i + 1];
        if (a < 0 || b < 0) return false;
        if (tp_coeff(TwiceSpin(a), s, TwiceSpin(b)) != 1) return false;
    }
    return true;
}

namespace {

struct Search {
    long n;
    int target;  // twice_j
    long long budget;
    long long nodes = 0;
    mpz_class hits = 0;

    // collect limit < 0 means count only
    long long collect_limit = -1;
    std::vector<int> stack;
    std::vector<LatticePath>* out = nullptr;
    TwiceSpin s;

    void visit(int y, long depth) {
        if (++nodes > budget)
            throw CapExceededError("path search exceeded node budget");
        if (depth == n) {
            if (y == target) {
                hits += 1;
                if (out) {
                    if (static_cast<long long>(out->size()) >= collect_limit)
                        throw CapExceededError("path enumeration exceeded requested limit");
                    out->push_back(LatticePath{s, stack});
                }
            }
            return;
        }
        // Largest step first: the walks come out in lexicographically
        // decreasing order of their height sequences.
        StepRange steps = allowed_steps(s, TwiceSpin(y));
        for (int d = steps.twice_hi; d >= steps.twice_lo; d -= 2) {
            int y2 = y + d;
            if (out) stack.push_back(y2);
            visit(y2, depth + 1);
            if (out) stack.pop_back();
        }
    }
};

}  // namespace

mpz_class count_paths(TwiceSpin s, long n, TwiceSpin j, PathLimits limits) {
    if (n < 0) throw std::invalid_argument("count_paths: N must be non-negative");
    Search search;
    search.s = s;
    search.n = n;
    search.target = j.twice();
    search.budget = limits.node_budget;
    search.visit(0, 0);
    return search.hits;
}

std::vector<LatticePath> list_paths(TwiceSpin s, long n, TwiceSpin j,
                                    long long max_paths, PathLimits limits) {
    if (n < 0) throw std::invalid_argument("list_paths: N must be non-negative");
    if (max_paths < 0) throw std::invalid_argument("list_paths: limit must be non-negative");
    std::vector<LatticePath> out;
    Search search;
    search.s = s;
    search.n = n;
    search.target = j.twice();
    search.budget = limits.node_budget;
    search.collect_limit = max_paths;
    search.out = &out;
    search.stack = {0};
    search.visit(0, 0);
    return out;
}

}  // namespace spinwit
