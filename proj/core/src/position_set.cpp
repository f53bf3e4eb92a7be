#include "blockers/position_set.hpp"

#include <algorithm>
#include <array>

namespace blockers {

namespace {

void validate_cell(int n, Cell c) {
    if (c.row < 1 || c.row > n || c.col < 1 || c.col > n)
        throw_error(errc::index_out_of_range,
                    "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                        ") outside [1," + std::to_string(n) + "]^2");
}

} // namespace

PositionSet::PositionSet(int n, std::vector<Cell> cells) : n_(n), cells_(std::move(cells)) {
    if (n_ < 1)
        throw_error(errc::invalid_spec, "order " + std::to_string(n_) + " must be positive");
    for (Cell c : cells_) validate_cell(n_, c);
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

PositionSet PositionSet::empty(int n) {
    return PositionSet(n, {});
}

bool PositionSet::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

PositionSet PositionSet::with(Cell c) const {
    validate_cell(n_, c);
    std::vector<Cell> next = cells_;
    next.push_back(c);
    return PositionSet(n_, std::move(next));
}

PositionSet PositionSet::without(Cell c) const {
    std::vector<Cell> next;
    next.reserve(cells_.size());
    for (Cell x : cells_)
        if (x != c) next.push_back(x);
    return PositionSet(n_, std::move(next));
}

int cardinality(const PositionSet& ps) {
    return ps.cardinality();
}

PositionSet apply_symmetry(const PositionSet& ps, Symmetry sym) {
    const int n = ps.order();
    std::vector<Cell> mapped;
    mapped.reserve(ps.cells().size());
    for (Cell c : ps.cells()) {
        switch (sym) {
        case Symmetry::transpose:
            mapped.push_back({c.col, c.row});
            break;
        case Symmetry::hankel_transpose:
            mapped.push_back({n + 1 - c.col, n + 1 - c.row});
            break;
        case Symmetry::rot180:
            mapped.push_back({n + 1 - c.row, n + 1 - c.col});
            break;
        }
    }
    return PositionSet(n, std::move(mapped));
}

PositionSet canonical_form(const PositionSet& ps) {
    PositionSet best = ps;
    for (Symmetry sym : {Symmetry::transpose, Symmetry::hankel_transpose, Symmetry::rot180}) {
        PositionSet image = apply_symmetry(ps, sym);
        if (image < best) best = std::move(image);
    }
    return best;
}

int symmetry_class_size(const PositionSet& ps) {
    std::array<PositionSet, 4> images{
        ps,
        apply_symmetry(ps, Symmetry::transpose),
        apply_symmetry(ps, Symmetry::hankel_transpose),
        apply_symmetry(ps, Symmetry::rot180),
    };
    std::sort(images.begin(), images.end());
    return static_cast<int>(std::unique(images.begin(), images.end()) - images.begin());
}

bool FlagSpec::is_valid() const noexcept {
    return n >= 1 && m >= 1 && m <= n && t >= 0 && t <= m - 1;
}

void FlagSpec::validate() const {
    if (!is_valid())
        throw_error(errc::invalid_spec,
                    "flag spec (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                        ", t=" + std::to_string(t) + ") violates 1 <= m <= n, 0 <= t <= m-1");
}

std::vector<FlagSpec> all_flag_specs(int n) {
    if (n < 1)
        throw_error(errc::invalid_spec, "order " + std::to_string(n) + " must be positive");
    std::vector<FlagSpec> out;
    for (int m = 1; m <= n; ++m)
        for (int t = 0; t <= m - 1; ++t)
            out.push_back({n, m, t});
    return out;
}

PositionSet flag_positions(const FlagSpec& spec) {
    spec.validate();
    std::vector<Cell> cells;
    for (int i = 1; i <= spec.n - spec.t; ++i)
        cells.push_back({i, spec.m});
    for (int i = 1; i <= spec.n - spec.m + 1; ++i)
        for (int j = spec.m - spec.t; j <= spec.m - 1; ++j)
            cells.push_back({i, j});
    return PositionSet(spec.n, std::move(cells));
}

PositionSet l_shape_positions(int n, int s, int r) {
    if (n < 1 || s < 1 || r < 1 || r + s != n + 1)
        throw_error(errc::invalid_spec,
                    "l-shape (n=" + std::to_string(n) + ", s=" + std::to_string(s) +
                        ", r=" + std::to_string(r) + ") requires r + s = n + 1 with s, r >= 1");
    return flag_positions({n, n, s - 1});
}

PositionSet corner_forbidden_region(const FlagSpec& spec) {
    spec.validate();
    std::vector<Cell> cells;
    for (int i = spec.n - spec.t + 1; i <= spec.n; ++i)
        for (int j = spec.m + 1; j <= spec.n; ++j)
            cells.push_back({i, j});
    return PositionSet(spec.n, std::move(cells));
}

std::optional<FlagSpec> recognize_flag(const PositionSet& ps) {
    const int n = ps.order();
    if (n < 1 || ps.is_empty()) return std::nullopt;
    for (const FlagSpec& spec : all_flag_specs(n))
        if (flag_positions(spec) == ps) return spec;
    return std::nullopt;
}

PositionSet parse_grid(std::string_view text) {
    std::vector<std::string> rows;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            if (!current.empty()) rows.push_back(current);
            current.clear();
        } else if (ch == '\r') {
            continue;
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) rows.push_back(current);
    if (rows.empty())
        throw_error(errc::parse_error, "empty grid");
    const int n = static_cast<int>(rows.size());
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw_error(errc::parse_error,
                        "row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                            " cells, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            const char ch = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (ch == 'X' || ch == 'x')
                cells.push_back({i + 1, j + 1});
            else if (ch != '.')
                throw_error(errc::parse_error,
                            std::string("unexpected character '") + ch + "' at row " +
                                std::to_string(i + 1) + ", column " + std::to_string(j + 1));
        }
    }
    return PositionSet(n, std::move(cells));
}

std::string render_grid(const PositionSet& ps) {
    const int n = ps.order();
    std::string out;
    out.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1));
    std::vector<std::string> rows(static_cast<std::size_t>(n),
                                  std::string(static_cast<std::size_t>(n), '.'));
    for (Cell c : ps.cells())
        rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = 'X';
    for (const std::string& row : rows) {
        out += row;
        out += '\n';
    }
    return out;
}

} // namespace blockers
