// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/scan.hpp>

#include <symvqe/fci.hpp>
#include <symvqe/vqe.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace symvqe {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw ConfigError("config:" + std::to_string(line) + ": " + what);
}

double to_double(const std::string& v, int line) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        fail(line, "invalid number '" + v + "'");
    }
    if (pos != v.size() || !(out > 0.0)) fail(line, "expected a positive number, got '" + v + "'");
    return out;
}

int to_int(const std::string& v, int line) {
    std::size_t pos = 0;
    int out = 0;
    try {
        out = std::stoi(v, &pos);
    } catch (const std::exception&) {
        fail(line, "invalid integer '" + v + "'");
    }
    if (pos != v.size() || out < 1) fail(line, "expected a positive integer, got '" + v + "'");
    return out;
}

void write_file(const fs::path& path, const std::string& body) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << body;
    }
    fs::rename(tmp, path);
}

/** Existing completed rows keyed by geometry tag. */
std::map<std::string, std::string> read_rows(const fs::path& path) {
    std::map<std::string, std::string> rows;
    std::ifstream in(path);
    if (!in) return rows;
    std::string line;
    if (!std::getline(in, line) || line != kSectorCsvHeader) return rows;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        if (std::count(line.begin(), line.end(), ',') != 7) continue;
        rows[line.substr(0, comma)] = line;
    }
    return rows;
}

struct Geometry {
    GeometryEntry entry;
    std::shared_ptr<const CompiledSystem> compiled;
    std::shared_ptr<const FciSolution> fci;
};

} // namespace

SectorLabel SectorLabel::parse(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.size() < 2 || (text[0] != '1' && text[0] != '3')) {
        throw ConfigError("invalid sector '" + raw + "'; expected <multiplicity><irrep> such as 1A1 or 3B2");
    }
    SectorLabel s;
    s.spin = text[0] == '1' ? SpinState::Singlet : SpinState::Triplet;
    s.irrep = text.substr(1);
    return s;
}

std::string SectorLabel::to_string() const { return (spin == SpinState::Singlet ? "1" : "3") + irrep; }

ScanConfig parse_scan_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    return parse_scan_config(in, path.parent_path());
}

ScanConfig parse_scan_config(std::istream& in, const fs::path& base) {
    ScanConfig cfg;
    auto resolve = [&base](const std::string& p) {
        const fs::path q(p);
        return q.is_absolute() ? q : base / q;
    };
    std::set<std::string> tags;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) fail(line_no, "empty value for '" + key + "'");
        if (key == "output_dir") {
            cfg.output_dir = resolve(value);
        } else if (key == "reps") {
            cfg.reps = to_int(value, line_no);
        } else if (key == "tying") {
            try {
                cfg.tying = parse_tying(value);
            } catch (const std::invalid_argument& e) {
                fail(line_no, e.what());
            }
        } else if (key == "tol_energy") {
            cfg.optimizer.tol_energy = to_double(value, line_no);
        } else if (key == "tol_gradient") {
            cfg.optimizer.tol_gradient = to_double(value, line_no);
        } else if (key == "max_iterations") {
            cfg.optimizer.max_iterations = to_int(value, line_no);
        } else if (key == "sectors") {
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (trim(item).empty()) continue;
                try {
                    cfg.sectors.push_back(SectorLabel::parse(item));
                } catch (const ConfigError& e) {
                    fail(line_no, e.what());
                }
            }
        } else if (key.rfind("geometry", 0) == 0 && key.size() > 8 && std::isspace(static_cast<unsigned char>(key[8]))) {
            const std::string tag = trim(key.substr(8));
            if (tag.find_first_of(", \t/") != std::string::npos) fail(line_no, "invalid geometry tag '" + tag + "'");
            if (!tags.insert(tag).second) fail(line_no, "duplicate geometry tag '" + tag + "'");
            cfg.geometries.push_back({tag, resolve(value)});
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }
    if (cfg.geometries.empty()) throw ConfigError("config lists no geometries");
    if (cfg.sectors.empty()) throw ConfigError("config lists no sectors");
    return cfg;
}

ScanReport run_scan(const ScanConfig& cfg, const ScanRunOptions& opt) {
    if (cfg.geometries.empty()) throw ConfigError("config lists no geometries");
    if (cfg.sectors.empty()) throw ConfigError("config lists no sectors");

    // Validate every input before running anything.
    std::vector<Geometry> geoms;
    std::vector<MolecularSystem> systems;
    for (const auto& g : cfg.geometries) {
        try {
            systems.push_back(parse_system(g.path));
        } catch (const std::exception& e) {
            throw ConfigError("geometry '" + g.tag + "': " + e.what());
        }
    }
    std::vector<std::vector<StateSpec>> specs(systems.size());
    for (std::size_t gi = 0; gi < systems.size(); ++gi) {
        const auto& sys = systems[gi];
        for (const auto& s : cfg.sectors) {
            try {
                const Determinant hf = hartree_fock_determinant(sys);
                specs[gi].push_back(build_reference(parse_irrep(s.irrep, sys.point_group), s.spin, sys, hf));
            } catch (const std::exception& e) {
                throw ConfigError("geometry '" + cfg.geometries[gi].tag + "', sector " + s.to_string() + ": " + e.what());
            }
        }
    }

    fs::create_directories(cfg.output_dir / "trace");
    fs::create_directories(cfg.output_dir / "overlap");
    fs::create_directories(cfg.output_dir / "oracle");

    std::vector<std::map<std::string, std::string>> rows(cfg.sectors.size());
    auto sector_path = [&cfg](const SectorLabel& s) { return cfg.output_dir / (s.to_string() + ".csv"); };
    if (!opt.force)
        for (std::size_t si = 0; si < cfg.sectors.size(); ++si) rows[si] = read_rows(sector_path(cfg.sectors[si]));

    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    ScanReport report;
    for (std::size_t gi = 0; gi < systems.size(); ++gi)
        for (std::size_t si = 0; si < cfg.sectors.size(); ++si) {
            if (rows[si].count(cfg.geometries[gi].tag)) {
                ++report.skipped;
            } else {
                jobs.emplace_back(gi, si);
            }
        }

    geoms.resize(systems.size());
    std::set<std::size_t> needed;
    for (const auto& [gi, si] : jobs) needed.insert(gi);
    for (std::size_t gi = 0; gi < systems.size(); ++gi) {
        geoms[gi].entry = cfg.geometries[gi];
        auto fci = std::make_shared<const FciSolution>(solve(systems[gi]));
        write_file(cfg.output_dir / "oracle" / (cfg.geometries[gi].tag + ".csv"), oracle_csv(*fci));
        if (needed.count(gi)) {
            geoms[gi].fci = std::move(fci);
            geoms[gi].compiled = std::make_shared<const CompiledSystem>(systems[gi]);
        }
    }

    std::mutex mu;
    auto flush_sector = [&](std::size_t si) {
        std::ostringstream body;
        body << kSectorCsvHeader << '\n';
        for (const auto& g : cfg.geometries) {
            auto it = rows[si].find(g.tag);
            if (it != rows[si].end()) body << it->second << '\n';
        }
        write_file(sector_path(cfg.sectors[si]), body.str());
    };
    auto log = [&](const std::string& line) {
        if (opt.log) *opt.log << line << '\n' << std::flush;
    };

    VqeOptions vopt;
    vopt.reps = cfg.reps;
    vopt.tying = cfg.tying;
    vopt.optimizer = cfg.optimizer;

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) {
            const auto [gi, si] = jobs[j];
            const auto& g = geoms[gi];
            const std::string name = g.entry.tag + "_" + cfg.sectors[si].to_string();
            try {
                const StateSpec& spec = specs[gi][si];
                const FciRoot& exact = sector_minimum(*g.fci, spec.sigma, spec.spin);
                const Statevector target = g.fci->embed(exact);
                const VqeResult r = minimize(*g.compiled, spec, vopt, &target);

                std::ostringstream ov;
                ov << "iter,one_minus_overlap2\n";
                for (const auto& t : r.trace) ov << t.iteration << ',' << fmt(1.0 - t.overlap2.value_or(0.0)) << '\n';
                write_file(cfg.output_dir / "trace" / (name + ".csv"), trace_csv(r.trace));
                write_file(cfg.output_dir / "overlap" / (name + ".csv"), ov.str());

                const double ov2 = std::norm(overlap(r.final_state, target));
                std::ostringstream row;
                row << g.entry.tag << ',' << fmt(r.energy) << ',' << fmt(exact.energy) << ','
                    << fmt(r.energy - exact.energy) << ',' << (r.dipole_z ? fmt(*r.dipole_z) : "") << ','
                    << (exact.dipole_z ? fmt(*exact.dipole_z) : "") << ',' << fmt(ov2) << ','
                    << (r.converged() ? "true" : "false");
                std::lock_guard lock(mu);
                rows[si][g.entry.tag] = row.str();
                flush_sector(si);
                ++report.completed;
                if (!r.converged()) ++report.unconverged;
                log(name + ": E=" + fmt(r.energy) + " dE=" + fmt(r.energy - exact.energy) + " iters=" +
                    std::to_string(r.iterations) + " " + to_string(r.status));
            } catch (const std::exception& e) {
                std::lock_guard lock(mu);
                ++report.failed;
                log(name + ": error: " + e.what());
            }
        }
    };
    const int n_threads = std::max(1, std::min<int>(opt.jobs, static_cast<int>(jobs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t si = 0; si < cfg.sectors.size(); ++si) flush_sector(si);
    return report;
}

} // namespace symvqe
