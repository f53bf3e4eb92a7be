#include "blockers/search.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "blockers/cardinality.hpp"

namespace blockers {

namespace {

std::uint64_t cell_bit(int id) { return std::uint64_t{1} << id; }

void validate_config(const SearchConfig& cfg) {
    if (cfg.n < 2)
        throw_error(errc::invalid_spec, "search order " + std::to_string(cfg.n) + " below 2");
    if (cfg.n > kMaxSearchOrder)
        throw_error(errc::order_too_large,
                    "search order " + std::to_string(cfg.n) + " exceeds hard cap " +
                        std::to_string(kMaxSearchOrder));
    if (cfg.n > cfg.order_limit && !cfg.budget)
        throw_error(errc::order_too_large,
                    "search order " + std::to_string(cfg.n) + " exceeds exhaustive limit " +
                        std::to_string(cfg.order_limit) + " and no budget was given");
    if (cfg.max_cardinality && *cfg.max_cardinality < cfg.n)
        throw_error(errc::invalid_spec,
                    "cardinality cap " + std::to_string(*cfg.max_cardinality) +
                        " below order " + std::to_string(cfg.n));
    if (cfg.threads < 1)
        throw_error(errc::invalid_spec, "thread count " + std::to_string(cfg.threads) + " below 1");
}

/// Depth-first enumeration of the inclusion-minimal hitting sets of the
/// avoider cell-set family, capped by cardinality. Each node branches on the
/// first unhit avoider; uniqueness comes from excluding, inside each branch,
/// the branch avoider's cells that precede the chosen one. crit_[k] holds
/// the avoiders hit exactly once, at chosen_[k]; a path dies as soon as some
/// crit_[k] empties, because no superset can make that cell necessary again.
class Kernel {
public:
    Kernel(int n, int cap, std::optional<std::uint64_t> budget,
           const std::vector<Permutation>& avoiders)
        : cap_(cap), budget_(budget) {
        edges_.reserve(avoiders.size());
        cell_edges_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (const Permutation& p : avoiders) {
            const int id = static_cast<int>(edges_.size());
            std::uint64_t mask = 0;
            for (int i = 1; i <= n; ++i) {
                const int cell = (i - 1) * n + (p.at(i) - 1);
                mask |= cell_bit(cell);
                cell_edges_[static_cast<std::size_t>(cell)].push_back(id);
            }
            edges_.push_back(mask);
        }
        cover_.assign(edges_.size(), 0);
    }

    void run_branches(const std::vector<int>& branches) {
        if (edges_.empty() || cap_ < 1) return;
        std::vector<int> root_cells;
        for (std::uint64_t rem = edges_[0]; rem != 0; rem &= rem - 1)
            root_cells.push_back(std::countr_zero(rem));
        for (int b : branches) {
            std::uint64_t excluded = 0;
            for (int i = 0; i < b; ++i) excluded |= cell_bit(root_cells[static_cast<std::size_t>(i)]);
            const Frame frame = add(root_cells[static_cast<std::size_t>(b)]);
            if (frame.ok) expand(excluded);
            remove(root_cells[static_cast<std::size_t>(b)], frame);
            if (aborted_) return;
        }
    }

    bool aborted() const noexcept { return aborted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::vector<std::uint64_t>& found() const noexcept { return found_; }

private:
    struct Frame {
        bool ok = true;
        std::vector<std::pair<int, int>> stolen; // (chosen index, edge id)
    };

    Frame add(int cell) {
        Frame frame;
        std::vector<int> crit_new;
        for (int e : cell_edges_[static_cast<std::size_t>(cell)])
            if (++cover_[static_cast<std::size_t>(e)] == 1) crit_new.push_back(e);
        if (crit_new.empty()) frame.ok = false;
        const std::uint64_t b = cell_bit(cell);
        for (std::size_t k = 0; k < crit_.size(); ++k) {
            std::vector<int>& ck = crit_[k];
            for (std::size_t i = 0; i < ck.size();) {
                if (edges_[static_cast<std::size_t>(ck[i])] & b) {
                    frame.stolen.emplace_back(static_cast<int>(k), ck[i]);
                    ck[i] = ck.back();
                    ck.pop_back();
                } else {
                    ++i;
                }
            }
            if (ck.empty()) frame.ok = false;
        }
        chosen_mask_ |= b;
        chosen_count_ += 1;
        crit_.push_back(std::move(crit_new));
        return frame;
    }

    void remove(int cell, const Frame& frame) {
        crit_.pop_back();
        chosen_count_ -= 1;
        chosen_mask_ &= ~cell_bit(cell);
        for (const auto& [k, e] : frame.stolen)
            crit_[static_cast<std::size_t>(k)].push_back(e);
        for (int e : cell_edges_[static_cast<std::size_t>(cell)])
            --cover_[static_cast<std::size_t>(e)];
    }

    void expand(std::uint64_t excluded) {
        if (budget_ && nodes_ >= *budget_) {
            aborted_ = true;
            return;
        }
        ++nodes_;
        int next = -1;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (cover_[e] == 0) {
                next = static_cast<int>(e);
                break;
            }
        }
        if (next < 0) {
            found_.push_back(chosen_mask_);
            return;
        }
        if (chosen_count_ >= cap_) return;
        for (std::uint64_t rem = edges_[static_cast<std::size_t>(next)] & ~excluded; rem != 0;
             rem &= rem - 1) {
            const int cell = std::countr_zero(rem);
            const Frame frame = add(cell);
            if (frame.ok) expand(excluded);
            remove(cell, frame);
            if (aborted_) return;
            excluded |= cell_bit(cell);
        }
    }

    int cap_ = 0;
    std::optional<std::uint64_t> budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::uint64_t> edges_;
    std::vector<std::vector<int>> cell_edges_;
    std::vector<int> cover_;
    std::vector<std::vector<int>> crit_;
    std::uint64_t chosen_mask_ = 0;
    int chosen_count_ = 0;
    std::vector<std::uint64_t> found_;
};

PositionSet mask_to_set(int n, std::uint64_t mask) {
    std::vector<Cell> cells;
    for (; mask != 0; mask &= mask - 1) {
        const int id = std::countr_zero(mask);
        cells.push_back({id / n + 1, id % n + 1});
    }
    return PositionSet(n, std::move(cells));
}

int oracle_limit(const SearchConfig& cfg) { return std::max(cfg.n, cfg.order_limit); }

} // namespace

int root_branch_count(const SearchConfig& cfg) {
    validate_config(cfg);
    return cfg.n;
}

std::vector<SearchResult> finalize_results(const SearchConfig& cfg,
                                           std::vector<PositionSet> raw_blockers) {
    for (const PositionSet& ps : raw_blockers)
        if (ps.order() != cfg.n)
            throw_error(errc::order_mismatch,
                        "result order " + std::to_string(ps.order()) + " != search order " +
                            std::to_string(cfg.n));
    if (cfg.dedup_symmetry)
        for (PositionSet& ps : raw_blockers) ps = canonical_form(ps);
    std::sort(raw_blockers.begin(), raw_blockers.end(),
              [](const PositionSet& a, const PositionSet& b) {
                  if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
                  return a < b;
              });
    raw_blockers.erase(std::unique(raw_blockers.begin(), raw_blockers.end()), raw_blockers.end());

    std::vector<SearchResult> results;
    results.reserve(raw_blockers.size());
    for (PositionSet& ps : raw_blockers) {
        auto certificates = minimum_certificates(ps, oracle_limit(cfg));
        if (!certificates) continue; // not a verified minimum blocker
        SearchResult r;
        r.cardinality = ps.cardinality();
        r.is_verified_minimum = true;
        r.private_witnesses = std::move(*certificates);
        r.symmetry_class_size = symmetry_class_size(ps);
        r.blocker = std::move(ps);
        results.push_back(std::move(r));
    }
    return results;
}

SearchOutcome run_search_branches(const SearchConfig& cfg, const std::vector<int>& branches) {
    validate_config(cfg);
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (branches[i] < 0 || branches[i] >= cfg.n)
            throw_error(errc::index_out_of_range,
                        "branch " + std::to_string(branches[i]) + " outside 0.." +
                            std::to_string(cfg.n - 1));
        if (i > 0 && branches[i - 1] >= branches[i])
            throw_error(errc::invalid_spec, "branch indices must be strictly ascending");
    }
    const int cap = cfg.max_cardinality.value_or(max_cardinality(cfg.n));
    const std::vector<Permutation>& avoiders = avoider_list(cfg.n, oracle_limit(cfg));

    SearchOutcome outcome;
    std::vector<PositionSet> raw;
    const int workers =
        cfg.budget ? 1 : std::min<int>(cfg.threads, static_cast<int>(branches.size()));
    if (workers <= 1) {
        Kernel kernel(cfg.n, cap, cfg.budget, avoiders);
        kernel.run_branches(branches);
        outcome.nodes_expanded = kernel.nodes();
        outcome.complete = !kernel.aborted();
        for (std::uint64_t mask : kernel.found()) raw.push_back(mask_to_set(cfg.n, mask));
    } else {
        std::vector<std::vector<int>> parts(static_cast<std::size_t>(workers));
        for (std::size_t i = 0; i < branches.size(); ++i)
            parts[i % static_cast<std::size_t>(workers)].push_back(branches[i]);
        std::vector<Kernel> kernels;
        kernels.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) kernels.emplace_back(cfg.n, cap, std::nullopt, avoiders);
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&kernels, &parts, w] {
                kernels[static_cast<std::size_t>(w)].run_branches(
                    parts[static_cast<std::size_t>(w)]);
            });
        for (std::thread& t : threads) t.join();
        for (const Kernel& kernel : kernels) {
            outcome.nodes_expanded += kernel.nodes();
            for (std::uint64_t mask : kernel.found()) raw.push_back(mask_to_set(cfg.n, mask));
        }
    }
    outcome.results = finalize_results(cfg, std::move(raw));
    return outcome;
}

SearchOutcome enumerate_minimum_blockers(const SearchConfig& cfg) {
    validate_config(cfg);
    std::vector<int> branches(static_cast<std::size_t>(cfg.n));
    for (int i = 0; i < cfg.n; ++i) branches[static_cast<std::size_t>(i)] = i;
    return run_search_branches(cfg, branches);
}

int conjecture_target(int n) {
    if (n < 1)
        throw_error(errc::invalid_spec, "order " + std::to_string(n) + " must be positive");
    return ((n + 1) / 2) * ((n + 2) / 2);
}

ConjectureReport conjecture_probe(int n, std::optional<std::uint64_t> budget, int order_limit) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.order_limit = order_limit;
    cfg.budget = budget;
    cfg.max_cardinality = conjecture_target(n) + 1;
    const SearchOutcome outcome = enumerate_minimum_blockers(cfg);

    ConjectureReport report;
    report.n = n;
    report.target = conjecture_target(n);
    report.complete = outcome.complete;
    report.nodes_expanded = outcome.nodes_expanded;
    for (const SearchResult& r : outcome.results) {
        if (r.cardinality > report.max_found) {
            report.max_found = r.cardinality;
            report.witness = r.blocker;
        }
    }
    report.falsified = report.max_found > report.target;
    return report;
}

} // namespace blockers
