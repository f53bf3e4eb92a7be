#include "blockers/rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace blockers {

namespace {

using Int = boost::multiprecision::cpp_int;

/// Divides the row by the gcd of its entries and makes the first nonzero
/// entry positive. No-op on the zero row.
void reduce_content(std::vector<Int>& row) {
    Int g = 0;
    for (const Int& x : row) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    if (g == 0) return;
    Int lead = 0;
    for (const Int& x : row) {
        if (x != 0) {
            lead = x;
            break;
        }
    }
    if (lead < 0) g = -g;
    if (g == 1) return;
    for (Int& x : row) x /= g;
}

} // namespace

int rank_of_matrices(const std::vector<Permutation>& perms, int n) {
    if (n < 0)
        throw_error(errc::invalid_spec, "negative order " + std::to_string(n));
    for (const Permutation& p : perms)
        if (p.order() != n)
            throw_error(errc::order_mismatch,
                        "permutation order " + std::to_string(p.order()) +
                            " != expected " + std::to_string(n));
    const int dim = n * n;
    // basis[piv] is a reduced integer row whose first nonzero column is piv;
    // iteration in ascending pivot order keeps elimination triangular.
    std::map<int, std::vector<Int>> basis;
    for (const Permutation& p : perms) {
        std::vector<Int> v(static_cast<std::size_t>(dim), 0);
        for (int i = 1; i <= n; ++i)
            v[static_cast<std::size_t>((i - 1) * n + (p.at(i) - 1))] = 1;
        for (const auto& [piv, row] : basis) {
            const Int& b = v[static_cast<std::size_t>(piv)];
            if (b == 0) continue;
            const Int a = row[static_cast<std::size_t>(piv)];
            const Int bb = b;
            for (int k = piv; k < dim; ++k)
                v[static_cast<std::size_t>(k)] =
                    v[static_cast<std::size_t>(k)] * a - row[static_cast<std::size_t>(k)] * bb;
            reduce_content(v);
        }
        int piv = -1;
        for (int k = 0; k < dim; ++k) {
            if (v[static_cast<std::size_t>(k)] != 0) {
                piv = k;
                break;
            }
        }
        if (piv >= 0) {
            reduce_content(v);
            basis.emplace(piv, std::move(v));
        }
    }
    return static_cast<int>(basis.size());
}

namespace {

void fill_bounds(FaceReport& report, const FlagSpec& spec) {
    report.spec = spec;
    const int slack = spec.n - spec.m;
    report.upper_bound = ambient_rank(spec.n) - spec.t * slack;
    // The flag lower-bound formula is proved by induction on n-m starting at
    // n-m = 1. At n-m = 0 it degenerates to the ambient rank, yet a proper
    // L-shape spans exactly (n-1)^2 (one affine constraint beyond the
    // doubly-stochastic ones), so the L-shape guarantee applies instead.
    report.lower_bound = slack > 0 ? ambient_rank(spec.n) - (spec.t + 2) * slack
                                   : (spec.n - 1) * (spec.n - 1);
    report.meets_upper = (report.rank == *report.upper_bound);
    report.within_bounds =
        (*report.lower_bound <= report.rank && report.rank <= *report.upper_bound);
}

} // namespace

FaceReport face_rank(const PositionSet& B, int order_limit) {
    FaceReport report;
    report.n = B.order();
    const std::vector<Permutation> once = once_intersecting_avoiders(B, order_limit);
    report.once_count = static_cast<int>(once.size());
    report.rank = rank_of_matrices(once, report.n);
    report.affine_dim = report.rank - 1;
    if (auto spec = recognize_flag(B)) fill_bounds(report, *spec);
    return report;
}

FaceReport face_rank(const FlagSpec& spec, int order_limit) {
    spec.validate();
    FaceReport report;
    report.n = spec.n;
    const std::vector<Permutation> once =
        once_intersecting_avoiders(flag_positions(spec), order_limit);
    report.once_count = static_cast<int>(once.size());
    report.rank = rank_of_matrices(once, report.n);
    report.affine_dim = report.rank - 1;
    fill_bounds(report, spec);
    return report;
}

bool check_forbidden_corner(const FlagSpec& spec, int order_limit) {
    const PositionSet region = corner_forbidden_region(spec);
    if (region.is_empty()) return true;
    for (const Permutation& p : once_intersecting_avoiders(flag_positions(spec), order_limit))
        for (Cell c : region.cells())
            if (p.at(c.row) == c.col) return false;
    return true;
}

} // namespace blockers
