// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/molecular_system.hpp>

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace symvqe {

ParseError::ParseError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

TwoElectronIntegrals::TwoElectronIntegrals(int n_orbitals)
    : n_(n_orbitals),
      values_(static_cast<std::size_t>(n_orbitals) * n_orbitals * n_orbitals * n_orbitals, 0.0) {}

void TwoElectronIntegrals::set(int p, int q, int r, int s, double value) noexcept {
    for (const auto& [a, b, c, d] : std::array<std::array<int, 4>, 8>{{{p, q, r, s},
                                                                       {q, p, r, s},
                                                                       {p, q, s, r},
                                                                       {q, p, s, r},
                                                                       {r, s, p, q},
                                                                       {s, r, p, q},
                                                                       {r, s, q, p},
                                                                       {s, r, q, p}}}) {
        values_[index(a, b, c, d)] = value;
    }
}

namespace {

constexpr double kSymmetryTolerance = 1e-10;

std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string upper(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

double parse_double(std::string_view tok, const std::string& source, int line) {
    // strtod accepts Fortran-style D exponents once they are rewritten.
    std::string buf(tok);
    for (auto& c : buf) {
        if (c == 'D' || c == 'd') c = 'e';
    }
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
        throw ParseError(source, line, "invalid number '" + std::string(tok) + "'");
    }
    return v;
}

int parse_int(std::string_view tok, const std::string& source, int line) {
    int v = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(source, line, "invalid integer '" + std::string(tok) + "'");
    }
    return v;
}

/** Tracks which entries were explicitly given so conflicting duplicates are caught. */
class Assigned {
public:
    void put(const std::string& source, int line, std::map<std::array<int, 4>, double>& seen,
             std::array<int, 4> key, double value) {
        auto [it, inserted] = seen.emplace(key, value);
        if (!inserted && std::abs(it->second - value) > kSymmetryTolerance) {
            throw ValidationError(source + ":" + std::to_string(line) +
                                  ": integral conflicts with a symmetry-equivalent entry (" +
                                  std::to_string(it->second) + " vs " + std::to_string(value) + ")");
        }
    }
};

void write_value(std::ostream& out, double v) {
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17e", v);
    out << buf.data();
}

} // namespace

MolecularSystem parse_system(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open system dump '" + path.string() + "'");
    return parse_system(in, path.string());
}

MolecularSystem parse_system(std::istream& in, const std::string& source) {
    MolecularSystem sys;
    bool have_header = false;
    bool have_orbsym = false;
    std::vector<std::string> orbsym_tokens;
    int orbsym_line = 0;

    std::map<std::array<int, 4>, double> seen_h2, seen_h1, seen_d;
    Assigned assigned;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#' || line.front() == '!') {
            auto text = trim(line.substr(1));
            sys.comments.emplace_back(text);
            continue;
        }
        if (line.front() == '&') {
            if (have_header) throw ParseError(source, line_no, "duplicate header");
            std::istringstream ss{std::string(line)};
            std::string tok;
            ss >> tok;
            if (upper(tok) != "&SYS") throw ParseError(source, line_no, "expected '&SYS' header");
            bool norb = false, nelec = false;
            std::string group_tag = "C1";
            while (ss >> tok) {
                if (upper(tok) == "&END" || tok == "/") break;
                const auto eq = tok.find('=');
                if (eq == std::string::npos) {
                    throw ParseError(source, line_no, "malformed header field '" + tok + "'");
                }
                const auto key = upper(std::string_view(tok).substr(0, eq));
                auto value = std::string_view(tok).substr(eq + 1);
                if (!value.empty() && value.back() == ',') value.remove_suffix(1);
                if (key == "NORB") {
                    sys.n_spatial = parse_int(value, source, line_no);
                    norb = true;
                } else if (key == "NELEC") {
                    sys.n_electrons = parse_int(value, source, line_no);
                    nelec = true;
                } else if (key == "GROUP") {
                    group_tag = std::string(value);
                } else if (key == "EHF") {
                    sys.reference_energy = parse_double(value, source, line_no);
                }
                // Unknown keys (MS2, ISYM, ...) are ignored.
            }
            if (!norb || !nelec) throw ParseError(source, line_no, "header requires NORB and NELEC");
            if (sys.n_spatial <= 0 || sys.n_spatial > 31) {
                throw ParseError(source, line_no, "NORB must be in [1, 31]");
            }
            if (sys.n_electrons < 0 || sys.n_electrons > 2 * sys.n_spatial) {
                throw ParseError(source, line_no, "NELEC out of range");
            }
            try {
                sys.point_group = parse_point_group(group_tag);
            } catch (const SymmetryError& e) {
                throw ParseError(source, line_no, e.what());
            }
            sys.h1 = Eigen::MatrixXd::Zero(sys.n_spatial, sys.n_spatial);
            sys.h2 = TwoElectronIntegrals(sys.n_spatial);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(source, line_no, "data before '&SYS' header");

        if (upper(line.substr(0, std::min<std::size_t>(line.size(), 7))) == "ORBSYM=") {
            if (have_orbsym) throw ParseError(source, line_no, "duplicate ORBSYM line");
            std::string list(line.substr(7));
            std::stringstream ss(list);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto t = trim(item);
                if (!t.empty()) orbsym_tokens.emplace_back(t);
            }
            have_orbsym = true;
            orbsym_line = line_no;
            continue;
        }

        std::istringstream ss{std::string(line)};
        std::array<std::string, 5> tok;
        for (auto& t : tok) {
            if (!(ss >> t)) throw ParseError(source, line_no, "expected '<value> p q r s'");
        }
        if (std::string extra; ss >> extra) {
            throw ParseError(source, line_no, "trailing tokens after integral record");
        }
        const double v = parse_double(tok[0], source, line_no);
        const int p = parse_int(tok[1], source, line_no);
        const int q = parse_int(tok[2], source, line_no);
        const int r = parse_int(tok[3], source, line_no);
        const int s = parse_int(tok[4], source, line_no);
        const int n = sys.n_spatial;
        auto in_range = [n](int i) { return i >= 1 && i <= n; };

        if (p == 0 && q == 0 && r == 0 && s == 0) {
            sys.core_energy = v;
        } else if (p == 0 && q == 0 && r == 0 && s == -1) {
            sys.nuclear_dipole_z = v;
        } else if (r == -1 && s == -1) {
            if (!in_range(p) || !in_range(q)) throw ParseError(source, line_no, "dipole index out of range");
            if (!sys.dipole_z) sys.dipole_z = Eigen::MatrixXd::Zero(n, n);
            assigned.put(source, line_no, seen_d, {std::max(p, q), std::min(p, q), 0, 0}, v);
            (*sys.dipole_z)(p - 1, q - 1) = v;
            (*sys.dipole_z)(q - 1, p - 1) = v;
        } else if (p > 0 && q == 0 && r == 0 && s == 0) {
            if (!in_range(p)) throw ParseError(source, line_no, "dipole index out of range");
            if (!sys.dipole_z) sys.dipole_z = Eigen::MatrixXd::Zero(n, n);
            assigned.put(source, line_no, seen_d, {p, p, 0, 0}, v);
            (*sys.dipole_z)(p - 1, p - 1) = v;
        } else if (r == 0 && s == 0) {
            if (!in_range(p) || !in_range(q)) throw ParseError(source, line_no, "one-electron index out of range");
            assigned.put(source, line_no, seen_h1, {std::max(p, q), std::min(p, q), 0, 0}, v);
            sys.h1(p - 1, q - 1) = v;
            sys.h1(q - 1, p - 1) = v;
        } else {
            if (!in_range(p) || !in_range(q) || !in_range(r) || !in_range(s)) {
                throw ParseError(source, line_no, "two-electron index out of range");
            }
            // Canonical representative of the 8-fold orbit.
            int a = std::max(p, q), b = std::min(p, q), c = std::max(r, s), d = std::min(r, s);
            if (std::pair(a, b) < std::pair(c, d)) {
                std::swap(a, c);
                std::swap(b, d);
            }
            assigned.put(source, line_no, seen_h2, {a, b, c, d}, v);
            sys.h2.set(p - 1, q - 1, r - 1, s - 1, v);
        }
    }
    if (!have_header) throw ParseError(source, line_no, "missing '&SYS' header");

    if (!have_orbsym) {
        sys.irreps.assign(static_cast<std::size_t>(sys.n_spatial), totally_symmetric(sys.point_group));
    } else {
        if (static_cast<int>(orbsym_tokens.size()) != sys.n_spatial) {
            throw ValidationError(source + ":" + std::to_string(orbsym_line) + ": ORBSYM lists " +
                                  std::to_string(orbsym_tokens.size()) + " labels for NORB=" +
                                  std::to_string(sys.n_spatial));
        }
        for (const auto& t : orbsym_tokens) {
            try {
                sys.irreps.push_back(parse_irrep(t, sys.point_group));
            } catch (const SymmetryError& e) {
                throw ValidationError(source + ":" + std::to_string(orbsym_line) + ": " + e.what());
            }
        }
    }
    validate(sys);
    return sys;
}

void validate(const MolecularSystem& sys, double tol) {
    const int n = sys.n_spatial;
    if (n <= 0) throw ValidationError("system has no orbitals");
    if (sys.h1.rows() != n || sys.h1.cols() != n) throw ValidationError("h1 has wrong shape");
    if (sys.h2.size() != n) throw ValidationError("h2 has wrong shape");
    if (static_cast<int>(sys.irreps.size()) != n) {
        throw ValidationError("irrep list has " + std::to_string(sys.irreps.size()) +
                              " entries for " + std::to_string(n) + " orbitals");
    }
    for (const auto& ir : sys.irreps) {
        if (ir.group != sys.point_group || ir.bits >= irrep_count(sys.point_group)) {
            throw ValidationError("orbital irrep is not valid for point group " +
                                  std::string(to_string(sys.point_group)));
        }
    }
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (std::abs(sys.h1(p, q) - sys.h1(q, p)) > tol) throw ValidationError("h1 is not symmetric");
            if (sys.dipole_z && std::abs((*sys.dipole_z)(p, q) - (*sys.dipole_z)(q, p)) > tol) {
                throw ValidationError("dipole matrix is not symmetric");
            }
        }
    }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    const double v = sys.h2(p, q, r, s);
                    if (std::abs(v - sys.h2(q, p, r, s)) > tol || std::abs(v - sys.h2(p, q, s, r)) > tol ||
                        std::abs(v - sys.h2(r, s, p, q)) > tol) {
                        throw ValidationError("h2 violates 8-fold permutational symmetry");
                    }
                }
}

void write_system(std::ostream& out, const MolecularSystem& sys) {
    const int n = sys.n_spatial;
    out << "&SYS NORB=" << n << " NELEC=" << sys.n_electrons << " GROUP=" << to_string(sys.point_group);
    if (sys.reference_energy) {
        out << " EHF=";
        write_value(out, *sys.reference_energy);
    }
    out << '\n';
    for (const auto& c : sys.comments) out << "# " << c << '\n';
    out << "ORBSYM=";
    for (int p = 0; p < n; ++p) out << (p ? "," : "") << irrep_name(sys.irreps[p]);
    out << '\n';
    auto record = [&out](double v, int p, int q, int r, int s) {
        write_value(out, v);
        out << ' ' << p << ' ' << q << ' ' << r << ' ' << s << '\n';
    };
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= p; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s <= r; ++s) {
                    if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
                    if (const double v = sys.h2(p, q, r, s); v != 0.0) record(v, p + 1, q + 1, r + 1, s + 1);
                }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= p; ++q)
            if (const double v = sys.h1(p, q); v != 0.0) record(v, p + 1, q + 1, 0, 0);
    if (sys.dipole_z) {
        for (int p = 0; p < n; ++p)
            for (int q = 0; q <= p; ++q)
                if (const double v = (*sys.dipole_z)(p, q); v != 0.0) record(v, p + 1, q + 1, -1, -1);
        record(sys.nuclear_dipole_z, 0, 0, 0, -1);
    }
    record(sys.core_energy, 0, 0, 0, 0);
}

double hartree_fock_energy(const MolecularSystem& sys) {
    const int n_occ = sys.n_electrons / 2;
    double e = sys.core_energy;
    for (int i = 0; i < n_occ; ++i) {
        e += 2.0 * sys.h1(i, i);
        for (int j = 0; j < n_occ; ++j) e += 2.0 * sys.h2(i, i, j, j) - sys.h2(i, j, j, i);
    }
    return e;
}

} // namespace symvqe
