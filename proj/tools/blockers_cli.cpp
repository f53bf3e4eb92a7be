// blockers: verification and exploration CLI for flag-shaped blockers of
// 123-avoiding permutation matrices.
//
// Exit codes: 0 success and all checked properties hold, 1 a property
// violation was found, 2 usage/input error, 3 budget exhausted.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "blockers/cardinality.hpp"
#include "blockers/json_io.hpp"
#include "blockers/oracle.hpp"
#include "blockers/permutation.hpp"
#include "blockers/position_set.hpp"
#include "blockers/rank.hpp"
#include "blockers/search.hpp"
#include "blockers/version.hpp"

namespace fs = std::filesystem;
using blockers::Cell;
using blockers::Error;
using blockers::FlagSpec;
using blockers::Permutation;
using blockers::PositionSet;
using nlohmann::json;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string iso_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Manifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::string started_at = iso_now();
    std::optional<std::string> input_hash;
    std::string outcome = "success";
};

json manifest_json(const Manifest& m) {
    json params = json::object();
    for (const auto& [k, v] : m.parameters) params[k] = v;
    json j{{"command", m.command},
           {"parameters", std::move(params)},
           {"tool_version", blockers::kVersion},
           {"started_at", m.started_at},
           {"finished_at", iso_now()},
           {"input_hash", nullptr},
           {"outcome", m.outcome}};
    if (m.input_hash) j["input_hash"] = *m.input_hash;
    return j;
}

// Shared per-subcommand output options.
struct OutputOpts {
    bool json_mode = false;
    std::string out_path;
};

void write_text(const OutputOpts& out, const std::string& text) {
    if (out.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.out_path, std::ios::binary | std::ios::trunc);
    if (!f) blockers::throw_error(blockers::errc::parse_error, "cannot open " + out.out_path);
    f << text;
}

void emit(const OutputOpts& out, const Manifest& manifest, const json& report,
          const std::string& human) {
    if (out.json_mode) {
        const json envelope{{"manifest", manifest_json(manifest)}, {"report", report}};
        write_text(out, envelope.dump(2) + "\n");
    } else {
        write_text(out, human);
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) blockers::throw_error(blockers::errc::parse_error, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string join_image(const std::vector<int>& image) {
    std::string s;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(image[i]);
    }
    return s;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Avoider list disk cache. A pure performance layer: a cached list is fully
// re-validated through seed_avoider_list before use, so a stale or corrupt
// file can never change a result.

fs::path cache_dir() {
    if (const char* env = std::getenv("BLOCKER_CACHE_DIR")) return fs::path(env);
    return fs::path(".blocker-cache");
}

fs::path cache_path(int n) {
    return cache_dir() /
           ("avoiders-v" + std::string(blockers::kVersion) + "-n" + std::to_string(n) + ".bin");
}

constexpr char kCacheMagic[4] = {'B', 'A', 'V', '1'};

bool load_avoider_cache(int n) {
    std::ifstream f(cache_path(n), std::ios::binary);
    if (!f) return false;
    char magic[4];
    std::uint8_t order = 0;
    std::uint64_t count = 0;
    f.read(magic, 4);
    f.read(reinterpret_cast<char*>(&order), 1);
    f.read(reinterpret_cast<char*>(&count), 8);
    if (!f || std::memcmp(magic, kCacheMagic, 4) != 0 || order != n) return false;
    if (count == 0 || count > 100000000ULL) return false;
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(count) * static_cast<std::size_t>(n));
    f.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f || f.peek() != EOF) return false;
    std::vector<Permutation> list;
    list.reserve(static_cast<std::size_t>(count));
    try {
        for (std::uint64_t k = 0; k < count; ++k) {
            std::vector<int> image(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                image[static_cast<std::size_t>(i)] =
                    bytes[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(i)];
            list.emplace_back(std::move(image));
        }
    } catch (const Error&) {
        return false;
    }
    return blockers::seed_avoider_list(n, list);
}

void store_avoider_cache(int n, const std::vector<Permutation>& list) {
    std::error_code ec;
    fs::create_directories(cache_dir(), ec);
    if (ec) return;
    const fs::path final_path = cache_path(n);
    const fs::path tmp_path = final_path.string() + ".tmp";
    {
        std::ofstream f(tmp_path, std::ios::binary | std::ios::trunc);
        if (!f) return;
        f.write(kCacheMagic, 4);
        const std::uint8_t order = static_cast<std::uint8_t>(n);
        const std::uint64_t count = list.size();
        f.write(reinterpret_cast<const char*>(&order), 1);
        f.write(reinterpret_cast<const char*>(&count), 8);
        for (const Permutation& p : list)
            for (int v : p.image()) {
                const std::uint8_t byte = static_cast<std::uint8_t>(v);
                f.write(reinterpret_cast<const char*>(&byte), 1);
            }
        if (!f) return;
    }
    fs::rename(tmp_path, final_path, ec);
}

/// Seeds the in-process avoider list for order n from the disk cache, or
/// computes it and writes the cache. Never required for correctness.
void prepare_avoiders(int n, int limit) {
    if (n < 1 || n > limit || n > 30) return; // out-of-range errors surface later
    if (fs::exists(cache_path(n)) && load_avoider_cache(n)) return;
    store_avoider_cache(n, blockers::avoider_list(n, limit));
}

// ---------------------------------------------------------------------------
// Subcommand handlers. Each returns the process exit code.

struct CommonOpts {
    OutputOpts out;
    int limit = 0;

    int oracle_limit() const { return limit > 0 ? limit : blockers::kDefaultOrderLimit; }
    int search_limit() const { return limit > 0 ? limit : blockers::kDefaultSearchLimit; }
};

int run_avoiders(const CommonOpts& opts, int n, bool count_only) {
    Manifest manifest{"avoiders",
                      {{"n", std::to_string(n)},
                       {"count_only", count_only ? "true" : "false"},
                       {"limit", std::to_string(opts.oracle_limit())}}};
    prepare_avoiders(n, opts.oracle_limit());
    const auto& list = blockers::avoider_list(n, opts.oracle_limit());

    json report{{"n", n}, {"count", list.size()}, {"avoiders", nullptr}};
    std::string human;
    if (count_only) {
        human = std::to_string(list.size()) + "\n";
    } else {
        json arr = json::array();
        for (const Permutation& p : list) arr.push_back(blockers::to_json(p));
        report["avoiders"] = std::move(arr);
        for (const Permutation& p : list) human += join_image(p.image()) + "\n";
    }
    emit(opts.out, manifest, report, human);
    return kExitSuccess;
}

int run_hankel(const CommonOpts& opts, int n) {
    if (n < 1) blockers::throw_error(blockers::errc::range_error, "order must be at least 1");
    Manifest manifest{"hankel", {{"n", std::to_string(n)}}};
    json labels = json::array();
    std::string human;
    json letters = nullptr;
    if (n <= 26) letters = json::array();
    for (int i = 1; i <= n; ++i) {
        json row = json::array();
        std::string line;
        for (int j = 1; j <= n; ++j) {
            const int v = blockers::hankel_label(n, i, j).value;
            row.push_back(v);
            if (n <= 26) {
                line += static_cast<char>('a' + v);
            } else {
                if (j > 1) line += ' ';
                line += std::to_string(v);
            }
        }
        labels.push_back(std::move(row));
        if (n <= 26) letters.push_back(line);
        human += line + "\n";
    }
    const json report{{"n", n}, {"labels", std::move(labels)}, {"letters", std::move(letters)}};
    emit(opts.out, manifest, report, human);
    return kExitSuccess;
}

int run_flag(const CommonOpts& opts, const FlagSpec& spec) {
    Manifest manifest{"flag",
                      {{"n", std::to_string(spec.n)},
                       {"m", std::to_string(spec.m)},
                       {"t", std::to_string(spec.t)}}};
    const PositionSet B = blockers::flag_positions(spec);
    const std::string grid = blockers::render_grid(B);
    const json report{{"spec", blockers::to_json(spec)},
                      {"cardinality", B.cardinality()},
                      {"positions", blockers::to_json(B)},
                      {"grid", grid}};
    emit(opts.out, manifest, report, grid);
    return kExitSuccess;
}

int run_lshape(const CommonOpts& opts, int n, int s, int r) {
    Manifest manifest{"lshape",
                      {{"n", std::to_string(n)},
                       {"s", std::to_string(s)},
                       {"r", std::to_string(r)}}};
    const PositionSet B = blockers::l_shape_positions(n, s, r);
    const std::string grid = blockers::render_grid(B);
    const json report{{"n", n},
                      {"s", s},
                      {"r", r},
                      {"spec", blockers::to_json(FlagSpec{n, n, s - 1})},
                      {"cardinality", B.cardinality()},
                      {"positions", blockers::to_json(B)},
                      {"grid", grid}};
    emit(opts.out, manifest, report, grid);
    return kExitSuccess;
}

int run_verify(const CommonOpts& opts, const std::string& file, const std::string& check) {
    const std::string body = read_input(file);
    Manifest manifest{"verify", {{"file", file}, {"check", check}}};
    manifest.input_hash = fnv1a64_hex(body);
    const PositionSet B = blockers::load_position_set(body);
    prepare_avoiders(B.order(), opts.oracle_limit());

    const blockers::BlockerVerdict verdict = blockers::is_blocker(B, opts.oracle_limit());
    bool holds = verdict.is_blocker;
    json certificates = nullptr;
    if (check == "minimum") {
        const auto certs = blockers::minimum_certificates(B, opts.oracle_limit());
        holds = certs.has_value();
        if (certs) {
            certificates = json::array();
            for (const auto& [cell, witness] : *certs)
                certificates.push_back(json{{"cell", json::array({cell.row, cell.col})},
                                            {"witness", blockers::to_json(witness)}});
        }
    } else if (check == "minimal") {
        holds = verdict.is_blocker && B.cardinality() == B.order();
    }

    const json report{{"check", check},
                      {"input", blockers::to_json(B)},
                      {"cardinality", B.cardinality()},
                      {"is_blocker", verdict.is_blocker},
                      {"witness", verdict.witness ? blockers::to_json(*verdict.witness) : json()},
                      {"holds", holds},
                      {"certificates", std::move(certificates)}};

    std::string human;
    human += "check: " + check + "\n";
    human += "n: " + std::to_string(B.order()) + "\n";
    human += "cardinality: " + std::to_string(B.cardinality()) + "\n";
    human += "is_blocker: " + yesno(verdict.is_blocker) + "\n";
    if (verdict.witness) human += "witness: " + join_image(verdict.witness->image()) + "\n";
    human += "holds: " + yesno(holds) + "\n";
    emit(opts.out, manifest, report, human);
    return holds ? kExitSuccess : kExitViolation;
}

int run_once(const CommonOpts& opts, const std::string& file,
             const std::optional<FlagSpec>& spec) {
    Manifest manifest{"once", {}};
    PositionSet B = PositionSet::empty(1);
    if (spec) {
        manifest.parameters = {{"n", std::to_string(spec->n)},
                               {"m", std::to_string(spec->m)},
                               {"t", std::to_string(spec->t)}};
        B = blockers::flag_positions(*spec);
    } else {
        const std::string body = read_input(file);
        manifest.parameters = {{"file", file}};
        manifest.input_hash = fnv1a64_hex(body);
        B = blockers::load_position_set(body);
    }
    prepare_avoiders(B.order(), opts.oracle_limit());
    const auto once = blockers::once_intersecting_avoiders(B, opts.oracle_limit());

    json arr = json::array();
    std::string human = "count: " + std::to_string(once.size()) + "\n";
    for (const Permutation& p : once) {
        arr.push_back(blockers::to_json(p));
        human += join_image(p.image()) + "\n";
    }
    const json report{{"input", blockers::to_json(B)},
                      {"count", once.size()},
                      {"avoiders", std::move(arr)}};
    emit(opts.out, manifest, report, human);
    return kExitSuccess;
}

std::string csv_row(const blockers::FaceReport& r) {
    std::string row;
    if (r.spec) {
        row += std::to_string(r.spec->n) + "," + std::to_string(r.spec->m) + "," +
               std::to_string(r.spec->t);
    } else {
        row += std::to_string(r.n) + ",,";
    }
    row += "," + std::to_string(r.once_count) + "," + std::to_string(r.rank);
    row += ",";
    if (r.lower_bound) row += std::to_string(*r.lower_bound);
    row += ",";
    if (r.upper_bound) row += std::to_string(*r.upper_bound);
    row += ",";
    if (r.meets_upper) row += *r.meets_upper ? "true" : "false";
    return row + "\n";
}

constexpr const char* kCsvHeader = "n,m,t,once_count,rank,lower,upper,meets_upper\n";

int run_face_rank(const CommonOpts& opts, const std::string& file,
                  const std::optional<FlagSpec>& spec, int all_flags_n, bool csv) {
    Manifest manifest{"face-rank", {{"limit", std::to_string(opts.oracle_limit())}}};
    std::vector<blockers::FaceReport> reports;
    if (all_flags_n > 0) {
        manifest.parameters["n"] = std::to_string(all_flags_n);
        manifest.parameters["all_flags"] = "true";
        prepare_avoiders(all_flags_n, opts.oracle_limit());
        for (const FlagSpec& s : blockers::all_flag_specs(all_flags_n))
            reports.push_back(blockers::face_rank(s, opts.oracle_limit()));
    } else if (spec) {
        manifest.parameters["n"] = std::to_string(spec->n);
        manifest.parameters["m"] = std::to_string(spec->m);
        manifest.parameters["t"] = std::to_string(spec->t);
        prepare_avoiders(spec->n, opts.oracle_limit());
        reports.push_back(blockers::face_rank(*spec, opts.oracle_limit()));
    } else {
        const std::string body = read_input(file);
        manifest.parameters["file"] = file;
        manifest.input_hash = fnv1a64_hex(body);
        const PositionSet B = blockers::load_position_set(body);
        prepare_avoiders(B.order(), opts.oracle_limit());
        reports.push_back(blockers::face_rank(B, opts.oracle_limit()));
    }

    bool all_within = true;
    for (const auto& r : reports)
        if (r.within_bounds && !*r.within_bounds) all_within = false;

    std::string human;
    if (csv || all_flags_n > 0) {
        human = kCsvHeader;
        for (const auto& r : reports) human += csv_row(r);
    } else {
        const auto& r = reports.front();
        human += "n: " + std::to_string(r.n) + "\n";
        if (r.spec)
            human += "spec: m=" + std::to_string(r.spec->m) + " t=" + std::to_string(r.spec->t) +
                     "\n";
        else
            human += "spec: not a flag\n";
        human += "once_count: " + std::to_string(r.once_count) + "\n";
        human += "rank: " + std::to_string(r.rank) + "\n";
        human += "affine_dim: " + std::to_string(r.affine_dim) + "\n";
        if (r.lower_bound && r.upper_bound)
            human += "bounds: [" + std::to_string(*r.lower_bound) + ", " +
                     std::to_string(*r.upper_bound) + "]\n";
        if (r.meets_upper) human += "meets_upper: " + yesno(*r.meets_upper) + "\n";
        if (r.within_bounds) human += "within_bounds: " + yesno(*r.within_bounds) + "\n";
    }

    json report;
    if (all_flags_n > 0) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(blockers::to_json(r));
        report = json{{"n", all_flags_n},
                      {"all_within_bounds", all_within},
                      {"reports", std::move(arr)}};
    } else {
        report = blockers::to_json(reports.front());
    }
    emit(opts.out, manifest, report, human);
    return all_within ? kExitSuccess : kExitViolation;
}

int run_corner_check(const CommonOpts& opts, const std::optional<FlagSpec>& spec,
                     int all_flags_n) {
    Manifest manifest{"corner-check", {{"limit", std::to_string(opts.oracle_limit())}}};
    std::vector<FlagSpec> specs;
    int n = 0;
    if (all_flags_n > 0) {
        n = all_flags_n;
        manifest.parameters["n"] = std::to_string(n);
        manifest.parameters["all_flags"] = "true";
        specs = blockers::all_flag_specs(n);
    } else {
        n = spec->n;
        manifest.parameters["n"] = std::to_string(spec->n);
        manifest.parameters["m"] = std::to_string(spec->m);
        manifest.parameters["t"] = std::to_string(spec->t);
        specs.push_back(*spec);
    }
    prepare_avoiders(n, opts.oracle_limit());

    bool all_clean = true;
    json checks = json::array();
    std::string human;
    for (const FlagSpec& s : specs) {
        const bool clean = blockers::check_forbidden_corner(s, opts.oracle_limit());
        all_clean = all_clean && clean;
        checks.push_back(json{{"spec", blockers::to_json(s)}, {"clean", clean}});
        human += "m=" + std::to_string(s.m) + " t=" + std::to_string(s.t) +
                 " clean=" + yesno(clean) + "\n";
    }
    human = "n=" + std::to_string(n) + " all_clean=" + yesno(all_clean) + "\n" + human;
    const json report{{"n", n}, {"all_clean", all_clean}, {"checks", std::move(checks)}};
    emit(opts.out, manifest, report, human);
    return all_clean ? kExitSuccess : kExitViolation;
}

int run_card_audit(const CommonOpts& opts, int n, int max_n) {
    Manifest manifest{"card-audit", {}};
    int lo = n, hi = n;
    if (max_n > 0) {
        lo = 1;
        hi = max_n;
        manifest.parameters["max_n"] = std::to_string(max_n);
    } else {
        manifest.parameters["n"] = std::to_string(n);
    }

    json audits = json::array();
    std::string human;
    for (int k = lo; k <= hi; ++k) {
        const blockers::CardinalityAudit a = blockers::audit(k);
        audits.push_back(blockers::to_json(a));
        human += "n=" + std::to_string(k) + " max=" + std::to_string(a.max_cardinality) + "\n";
        human += "p achievable predicate\n";
        for (int p = k; p <= a.max_cardinality; ++p) {
            const bool in_oracle =
                std::binary_search(a.achievable.begin(), a.achievable.end(), p);
            const bool in_pred = std::binary_search(a.paper_predicate_set.begin(),
                                                    a.paper_predicate_set.end(), p);
            human += std::to_string(p) + " " + yesno(in_oracle) + " " + yesno(in_pred);
            if (in_oracle != in_pred) human += "  <-- discrepancy";
            human += "\n";
        }
        std::string disc;
        for (std::size_t i = 0; i < a.discrepancies.size(); ++i) {
            if (i) disc += ",";
            disc += std::to_string(a.discrepancies[static_cast<std::size_t>(i)]);
        }
        human += "discrepancies: " + (disc.empty() ? std::string("none") : disc) + "\n";
        if (k < hi) human += "\n";
    }
    const json report{{"audits", std::move(audits)}};
    emit(opts.out, manifest, report, human);
    // Discrepancies are findings to report, not failures.
    return kExitSuccess;
}

json search_config_json(const blockers::SearchConfig& cfg) {
    json j{{"n", cfg.n},
           {"max_cardinality",
            cfg.max_cardinality ? json(*cfg.max_cardinality) : json()},
           {"dedup_symmetry", cfg.dedup_symmetry},
           {"budget", cfg.budget ? json(*cfg.budget) : json()},
           {"order_limit", cfg.order_limit},
           {"threads", cfg.threads}};
    return j;
}

// Checkpoint fingerprint: the fields that determine the result stream.
json checkpoint_fingerprint(const blockers::SearchConfig& cfg) {
    return json{{"tool_version", blockers::kVersion},
                {"n", cfg.n},
                {"max_cardinality",
                 cfg.max_cardinality ? json(*cfg.max_cardinality) : json()},
                {"dedup_symmetry", cfg.dedup_symmetry},
                {"order_limit", cfg.order_limit}};
}

void save_checkpoint(const std::string& path, const json& fingerprint,
                     const std::vector<int>& completed, std::uint64_t nodes,
                     const std::vector<PositionSet>& raw) {
    json raw_json = json::array();
    for (const PositionSet& ps : raw) raw_json.push_back(blockers::to_json(ps));
    const json j{{"config", fingerprint},
                 {"completed_branches", completed},
                 {"nodes_so_far", nodes},
                 {"raw_blockers", std::move(raw_json)}};
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) blockers::throw_error(blockers::errc::parse_error, "cannot write " + tmp);
        f << j.dump(2) << "\n";
    }
    fs::rename(tmp, path);
}

std::string search_result_line(const blockers::SearchResult& r) {
    std::string line = "cardinality=" + std::to_string(r.cardinality);
    line += " class_size=" + std::to_string(r.symmetry_class_size);
    line += " cells=";
    for (Cell c : r.blocker.cells())
        line += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    return line + "\n";
}

int run_search(const CommonOpts& opts, blockers::SearchConfig cfg, bool jsonl,
               const std::string& checkpoint, bool resume) {
    cfg.order_limit = opts.search_limit();
    if (!cfg.max_cardinality) cfg.max_cardinality = blockers::max_cardinality(cfg.n);
    Manifest manifest{"search",
                      {{"n", std::to_string(cfg.n)},
                       {"max_cardinality", std::to_string(*cfg.max_cardinality)},
                       {"dedup_symmetry", cfg.dedup_symmetry ? "true" : "false"},
                       {"order_limit", std::to_string(cfg.order_limit)},
                       {"threads", std::to_string(cfg.threads)}}};
    if (cfg.budget) manifest.parameters["budget"] = std::to_string(*cfg.budget);
    if (!checkpoint.empty()) manifest.parameters["checkpoint"] = checkpoint;
    if (resume) manifest.parameters["resume"] = "true";
    prepare_avoiders(cfg.n, std::max(cfg.n, cfg.order_limit));

    blockers::SearchOutcome outcome;
    if (checkpoint.empty()) {
        outcome = blockers::enumerate_minimum_blockers(cfg);
    } else {
        const json fingerprint = checkpoint_fingerprint(cfg);
        std::vector<int> completed;
        std::vector<PositionSet> raw;
        std::uint64_t nodes = 0;
        if (fs::exists(checkpoint)) {
            if (!resume)
                blockers::throw_error(blockers::errc::invalid_spec,
                                      "checkpoint file exists; pass --resume to continue or "
                                      "remove it");
            json j;
            try {
                std::ifstream f(checkpoint);
                j = json::parse(f);
            } catch (const json::exception& e) {
                blockers::throw_error(blockers::errc::parse_error,
                                      std::string("bad checkpoint: ") + e.what());
            }
            if (!j.contains("config") || j.at("config") != fingerprint)
                blockers::throw_error(blockers::errc::invalid_spec,
                                      "checkpoint was written with a different configuration");
            completed = j.at("completed_branches").get<std::vector<int>>();
            nodes = j.at("nodes_so_far").get<std::uint64_t>();
            for (const json& ps : j.at("raw_blockers"))
                raw.push_back(blockers::position_set_from_json(ps));
        }

        bool exhausted = false;
        std::optional<std::uint64_t> remaining = cfg.budget;
        for (int b = 0; b < blockers::root_branch_count(cfg); ++b) {
            if (std::find(completed.begin(), completed.end(), b) != completed.end()) continue;
            blockers::SearchConfig branch_cfg = cfg;
            branch_cfg.budget = remaining;
            const blockers::SearchOutcome part = blockers::run_search_branches(branch_cfg, {b});
            nodes += part.nodes_expanded;
            if (remaining) *remaining -= std::min(*remaining, part.nodes_expanded);
            if (!part.complete) {
                exhausted = true;
                break;
            }
            for (const auto& r : part.results) raw.push_back(r.blocker);
            completed.push_back(b);
            save_checkpoint(checkpoint, fingerprint, completed, nodes, raw);
        }
        outcome.nodes_expanded = nodes;
        outcome.complete = !exhausted;
        outcome.results = blockers::finalize_results(cfg, std::move(raw));
        if (outcome.complete) {
            std::error_code ec;
            fs::remove(checkpoint, ec);
        }
    }

    if (!outcome.complete) manifest.outcome = "incomplete";

    if (jsonl) {
        std::string lines;
        for (const auto& r : outcome.results) lines += blockers::to_json(r).dump() + "\n";
        write_text(opts.out, lines);
        return outcome.complete ? kExitSuccess : kExitBudget;
    }

    json results = json::array();
    std::string human;
    std::map<int, int> by_card;
    for (const auto& r : outcome.results) {
        results.push_back(blockers::to_json(r));
        human += search_result_line(r);
        ++by_card[r.cardinality];
    }
    std::string summary = "found " + std::to_string(outcome.results.size()) +
                          " minimum blockers (" +
                          (outcome.complete ? "complete" : "incomplete") + "), nodes expanded " +
                          std::to_string(outcome.nodes_expanded) + "\n";
    for (const auto& [card, count] : by_card)
        summary += "cardinality " + std::to_string(card) + ": " + std::to_string(count) + "\n";
    human = summary + human;

    const json report{{"config", search_config_json(cfg)},
                      {"complete", outcome.complete},
                      {"nodes_expanded", outcome.nodes_expanded},
                      {"result_count", outcome.results.size()},
                      {"results", std::move(results)}};
    emit(opts.out, manifest, report, human);
    return outcome.complete ? kExitSuccess : kExitBudget;
}

int run_conjecture(const CommonOpts& opts, int n, std::optional<std::uint64_t> budget) {
    Manifest manifest{"conjecture",
                      {{"n", std::to_string(n)},
                       {"order_limit", std::to_string(opts.search_limit())}}};
    if (budget) manifest.parameters["budget"] = std::to_string(*budget);
    prepare_avoiders(n, std::max(n, opts.search_limit()));
    const blockers::ConjectureReport r = blockers::conjecture_probe(n, budget, opts.search_limit());
    if (!r.complete) manifest.outcome = "incomplete";

    std::string human = "n=" + std::to_string(r.n) + " target=" + std::to_string(r.target) +
                        " max_found=" + std::to_string(r.max_found) + " status=" +
                        (r.falsified ? "FALSIFIED" : (r.complete ? "holds" : "inconclusive")) +
                        " complete=" + yesno(r.complete) + " nodes=" +
                        std::to_string(r.nodes_expanded) + "\n";
    if (r.witness) {
        human += "witness (cardinality " + std::to_string(r.witness->cardinality()) + "):\n";
        human += blockers::render_grid(*r.witness);
    }
    emit(opts.out, manifest, blockers::to_json(r), human);
    if (r.falsified) return kExitViolation;
    return r.complete ? kExitSuccess : kExitBudget;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag-shaped blockers of 123-avoiding permutation matrices"};
    app.set_version_flag("--version", blockers::kVersion);
    app.require_subcommand(1);

    // Shared option storage; each subcommand binds its own copies.
    struct {
        CommonOpts common;
        int n = 0, m = 0, t = 0, s = 0, r = 0, max_n = 0, all_flags_n = 0;
        int max_cardinality = 0;
        int threads = 1;
        std::uint64_t budget = 0;
        bool count_only = false, csv = false, no_dedup = false, jsonl = false, resume = false;
        std::string file, check = "blocker", checkpoint;
    } o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.common.out.json_mode, "machine-readable JSON report");
        sub->add_option("--limit", o.common.limit, "override the order cap");
        sub->add_option("--out", o.common.out.out_path, "write the report to a file");
    };

    CLI::App* avoiders = app.add_subcommand("avoiders", "enumerate 123-avoiding permutations");
    avoiders->add_option("--n", o.n, "order")->required();
    avoiders->add_flag("--count-only", o.count_only, "print only the count");
    add_common(avoiders);

    CLI::App* hankel = app.add_subcommand("hankel", "print the cyclic-Hankel label matrix");
    hankel->add_option("--n", o.n, "order")->required();
    add_common(hankel);

    CLI::App* flag = app.add_subcommand("flag", "emit the flag-shaped blocker B_n(m,t)");
    flag->add_option("--n", o.n, "order")->required();
    flag->add_option("--m", o.m, "pole column")->required();
    flag->add_option("--t", o.t, "flag height")->required();
    add_common(flag);

    CLI::App* lshape = app.add_subcommand("lshape", "emit the L-shaped blocker L_n(s,r)");
    lshape->add_option("--n", o.n, "order")->required();
    lshape->add_option("--s", o.s, "width")->required();
    lshape->add_option("--r", o.r, "height")->required();
    add_common(lshape);

    CLI::App* verify = app.add_subcommand("verify", "check blocker / minimum / minimal");
    verify->add_option("--file", o.file, "position set (JSON or grid; '-' for stdin)")
        ->required();
    verify->add_flag_callback("--blocker", [&] { o.check = "blocker"; },
                              "require: every avoider intersects the set (default)");
    verify->add_flag_callback("--minimum", [&] { o.check = "minimum"; },
                              "require: blocker and every cell is necessary");
    verify->add_flag_callback("--minimal", [&] { o.check = "minimal"; },
                              "require: blocker with exactly n cells");
    add_common(verify);

    CLI::App* once = app.add_subcommand("once", "list once-intersecting avoiders");
    once->add_option("--file", o.file, "position set (JSON or grid; '-' for stdin)");
    once->add_option("--n", o.n, "flag order");
    once->add_option("--m", o.m, "pole column");
    once->add_option("--t", o.t, "flag height");
    add_common(once);

    CLI::App* face_rank = app.add_subcommand("face-rank", "rank of the once-intersecting face");
    face_rank->add_option("--file", o.file, "position set (JSON or grid; '-' for stdin)");
    face_rank->add_option("--n", o.n, "flag order");
    face_rank->add_option("--m", o.m, "pole column");
    face_rank->add_option("--t", o.t, "flag height");
    bool fr_all_flags = false;
    face_rank->add_flag("--all-flags", fr_all_flags, "scan every admissible (m,t) for --n");
    bool fr_csv = false;
    face_rank->add_flag("--csv", fr_csv, "CSV rows: n,m,t,once_count,rank,lower,upper,meets_upper");
    add_common(face_rank);

    CLI::App* corner = app.add_subcommand("corner-check", "forbidden-corner verification");
    corner->add_option("--n", o.n, "flag order")->required();
    corner->add_option("--m", o.m, "pole column");
    corner->add_option("--t", o.t, "flag height");
    bool corner_all = false;
    corner->add_flag("--all-flags", corner_all, "scan every admissible (m,t) for --n");
    add_common(corner);

    CLI::App* card = app.add_subcommand("card-audit", "achievable-cardinality audit");
    card->add_option("--n", o.n, "single order to audit");
    card->add_option("--max-n", o.max_n, "audit every order 1..max-n");
    add_common(card);

    CLI::App* search = app.add_subcommand("search", "enumerate minimum blockers");
    search->add_option("--n", o.n, "order")->required();
    search->add_option("--max-cardinality", o.max_cardinality, "cardinality cap");
    search->add_flag("--no-dedup", o.no_dedup, "emit every blocker, not class representatives");
    search->add_option("--budget", o.budget, "node-count budget");
    search->add_option("--threads", o.threads, "worker count for root branches");
    search->add_flag("--jsonl", o.jsonl, "stream one SearchResult JSON object per line");
    search->add_option("--checkpoint", o.checkpoint, "checkpoint file for resumable runs");
    search->add_flag("--resume", o.resume, "resume from --checkpoint");
    add_common(search);

    CLI::App* conjecture = app.add_subcommand("conjecture", "probe the r*s cardinality bound");
    conjecture->add_option("--n", o.n, "order")->required();
    conjecture->add_option("--budget", o.budget, "node-count budget");
    add_common(conjecture);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (app.got_subcommand(avoiders)) return run_avoiders(o.common, o.n, o.count_only);
        if (app.got_subcommand(hankel)) return run_hankel(o.common, o.n);
        if (app.got_subcommand(flag)) return run_flag(o.common, FlagSpec{o.n, o.m, o.t});
        if (app.got_subcommand(lshape)) return run_lshape(o.common, o.n, o.s, o.r);
        if (app.got_subcommand(verify)) return run_verify(o.common, o.file, o.check);
        if (app.got_subcommand(once)) {
            std::optional<FlagSpec> spec;
            if (once->count("--n")) {
                if (!once->count("--m") || !once->count("--t"))
                    blockers::throw_error(blockers::errc::invalid_spec,
                                          "--n requires --m and --t");
                spec = FlagSpec{o.n, o.m, o.t};
            } else if (o.file.empty()) {
                blockers::throw_error(blockers::errc::invalid_spec,
                                      "need --file or --n/--m/--t");
            }
            return run_once(o.common, o.file, spec);
        }
        if (app.got_subcommand(face_rank)) {
            std::optional<FlagSpec> spec;
            int all_n = 0;
            if (fr_all_flags) {
                if (!face_rank->count("--n"))
                    blockers::throw_error(blockers::errc::invalid_spec,
                                          "--all-flags requires --n");
                all_n = o.n;
            } else if (face_rank->count("--n")) {
                if (!face_rank->count("--m") || !face_rank->count("--t"))
                    blockers::throw_error(blockers::errc::invalid_spec,
                                          "--n requires --m and --t (or --all-flags)");
                spec = FlagSpec{o.n, o.m, o.t};
            } else if (o.file.empty()) {
                blockers::throw_error(blockers::errc::invalid_spec,
                                      "need --file, --n/--m/--t, or --n --all-flags");
            }
            return run_face_rank(o.common, o.file, spec, all_n, fr_csv);
        }
        if (app.got_subcommand(corner)) {
            std::optional<FlagSpec> spec;
            int all_n = 0;
            if (corner_all) {
                all_n = o.n;
            } else {
                if (!corner->count("--m") || !corner->count("--t"))
                    blockers::throw_error(blockers::errc::invalid_spec,
                                          "need --m and --t (or --all-flags)");
                spec = FlagSpec{o.n, o.m, o.t};
            }
            return run_corner_check(o.common, spec, all_n);
        }
        if (app.got_subcommand(card)) {
            if (!card->count("--n") && !card->count("--max-n"))
                blockers::throw_error(blockers::errc::invalid_spec, "need --n or --max-n");
            return run_card_audit(o.common, o.n, card->count("--max-n") ? o.max_n : 0);
        }
        if (app.got_subcommand(search)) {
            blockers::SearchConfig cfg;
            cfg.n = o.n;
            if (search->count("--max-cardinality")) cfg.max_cardinality = o.max_cardinality;
            cfg.dedup_symmetry = !o.no_dedup;
            if (search->count("--budget")) cfg.budget = o.budget;
            cfg.threads = o.threads;
            if (o.resume && o.checkpoint.empty())
                blockers::throw_error(blockers::errc::invalid_spec,
                                      "--resume requires --checkpoint");
            if (o.jsonl && o.common.out.json_mode)
                blockers::throw_error(blockers::errc::invalid_spec,
                                      "--jsonl and --json are mutually exclusive");
            return run_search(o.common, cfg, o.jsonl, o.checkpoint, o.resume);
        }
        if (app.got_subcommand(conjecture)) {
            std::optional<std::uint64_t> budget;
            if (conjecture->count("--budget")) budget = o.budget;
            return run_conjecture(o.common, o.n, budget);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
