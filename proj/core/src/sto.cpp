#include "sdlmc/sto.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "sdlmc/errors.hpp"

namespace sdlmc {

namespace {

constexpr double kNormWarn = 1e-6;
constexpr double kNormHard = 1e-4;
constexpr double kOccTol = 1e-9;

double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= static_cast<double>(i);
    return f;
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    long line_no = 0;

    bool next_line(std::string& out) {
        if (pos >= text.size()) return false;
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        out.assign(text.substr(pos, nl - pos));
        if (!out.empty() && out.back() == '\r') out.pop_back();
        pos = nl + 1;
        ++line_no;
        return true;
    }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// "key=value" accessor over the tokens following the directive word.
std::string get_field(const std::vector<std::string>& toks, const std::string& key, long line) {
    const std::string prefix = key + "=";
    for (std::size_t i = 1; i < toks.size(); ++i)
        if (toks[i].rfind(prefix, 0) == 0) return toks[i].substr(prefix.size());
    throw ParseError("missing field '" + key + "'", line);
}

double parse_real(const std::string& s, const std::string& key, long line) {
    char* endp = nullptr;
    const double v = std::strtod(s.c_str(), &endp);
    if (endp == s.c_str() || *endp != '\0')
        throw ParseError("field '" + key + "' has malformed value '" + s + "'", line);
    return v;
}

int parse_int(const std::string& s, const std::string& key, long line) {
    char* endp = nullptr;
    const long v = std::strtol(s.c_str(), &endp, 10);
    if (endp == s.c_str() || *endp != '\0')
        throw ParseError("field '" + key + "' has malformed value '" + s + "'", line);
    return static_cast<int>(v);
}

} // namespace

double StoPrimitive::normalization() const {
    return std::pow(2.0 * zeta, n + 0.5) / std::sqrt(factorial(2 * n));
}

double Orbital::radial(double r) const {
    double v = 0.0;
    for (const OrbitalTerm& t : terms) {
        const double zr = t.primitive.zeta * r;
        if (zr > 700.0) continue; // underflow
        v += t.coefficient * t.primitive.normalization() *
             std::pow(r, t.primitive.n - 1) * std::exp(-zr);
    }
    return v;
}

double Orbital::radial_norm() const {
    double s = 0.0;
    for (const OrbitalTerm& a : terms) {
        for (const OrbitalTerm& b : terms) {
            const int m = a.primitive.n + b.primitive.n;
            const double z = a.primitive.zeta + b.primitive.zeta;
            s += a.coefficient * b.coefficient * a.primitive.normalization() *
                 b.primitive.normalization() * factorial(m) / std::pow(z, m + 1);
        }
    }
    return s;
}

double AtomBasis::electron_count() const {
    double n = 0.0;
    for (const Orbital& o : orbitals) n += o.occupation;
    return n;
}

double AtomBasis::zeta_min() const {
    double z = 0.0;
    bool first = true;
    for (const Orbital& o : orbitals)
        for (const OrbitalTerm& t : o.terms) {
            if (first || t.primitive.zeta < z) z = t.primitive.zeta;
            first = false;
        }
    return z;
}

double AtomBasis::zeta_max() const {
    double z = 0.0;
    for (const Orbital& o : orbitals)
        for (const OrbitalTerm& t : o.terms)
            if (t.primitive.zeta > z) z = t.primitive.zeta;
    return z;
}

int AtomBasis::max_l() const {
    int l = 0;
    for (const Orbital& o : orbitals)
        if (o.l > l) l = o.l;
    return l;
}

const AtomBasis* BasisLibrary::find(int Z) const {
    for (const AtomBasis& a : atoms)
        if (a.Z == Z) return &a;
    return nullptr;
}

BasisLibrary parse_basis_library(std::string_view text) {
    BasisLibrary lib;
    Cursor cur{text};
    std::string line;

    bool in_atom = false;
    AtomBasis atom;
    long atom_line = 0;
    std::vector<long> orbital_lines;

    auto close_orbital_check = [&](const Orbital& o, long oline) {
        if (o.terms.empty())
            throw ParseError("orbital '" + o.label + "' has no terms", oline);
    };

    while (cur.next_line(line)) {
        const long ln = cur.line_no;
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        const std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& kind = toks[0];

        if (kind == "atom") {
            if (in_atom) throw ParseError("'atom' before previous block was closed with 'end'", ln);
            atom = AtomBasis{};
            atom.Z = parse_int(get_field(toks, "Z", ln), "Z", ln);
            atom.symbol = get_field(toks, "symbol", ln);
            if (atom.Z < 1) throw ParseError("Z must be >= 1", ln);
            in_atom = true;
            atom_line = ln;
            orbital_lines.clear();
        } else if (kind == "orbital") {
            if (!in_atom) throw ParseError("'orbital' outside an atom block", ln);
            if (!atom.orbitals.empty())
                close_orbital_check(atom.orbitals.back(), orbital_lines.back());
            Orbital o;
            o.label = get_field(toks, "label", ln);
            o.l = parse_int(get_field(toks, "l", ln), "l", ln);
            o.occupation = parse_real(get_field(toks, "occ", ln), "occ", ln);
            if (o.l < 0) throw ParseError("l must be >= 0", ln);
            const double occ_cap = 2.0 * (2.0 * o.l + 1.0);
            if (!(o.occupation > 0.0) || o.occupation > occ_cap + kOccTol) {
                char msg[128];
                std::snprintf(msg, sizeof msg,
                              "occupation %g outside (0, %g] for l=%d", o.occupation,
                              occ_cap, o.l);
                throw ParseError(msg, ln);
            }
            atom.orbitals.push_back(std::move(o));
            orbital_lines.push_back(ln);
        } else if (kind == "term") {
            if (!in_atom || atom.orbitals.empty())
                throw ParseError("'term' outside an orbital block", ln);
            Orbital& o = atom.orbitals.back();
            OrbitalTerm t;
            t.coefficient = parse_real(get_field(toks, "c", ln), "c", ln);
            t.primitive.n = parse_int(get_field(toks, "n", ln), "n", ln);
            t.primitive.zeta = parse_real(get_field(toks, "zeta", ln), "zeta", ln);
            if (t.primitive.n < o.l + 1)
                throw ParseError("term n=" + std::to_string(t.primitive.n) +
                                     " incompatible with l=" + std::to_string(o.l) +
                                     " (need n >= l+1)",
                                 ln);
            if (!(t.primitive.zeta > 0.0)) throw ParseError("zeta must be positive", ln);
            o.terms.push_back(t);
        } else if (kind == "end") {
            if (!in_atom) throw ParseError("'end' without an open atom block", ln);
            if (atom.orbitals.empty()) throw ParseError("atom block has no orbitals", ln);
            close_orbital_check(atom.orbitals.back(), orbital_lines.back());

            const double ne = atom.electron_count();
            if (std::abs(ne - atom.Z) > kOccTol) {
                char msg[128];
                std::snprintf(msg, sizeof msg,
                              "atom Z=%d: occupations sum to %.12g, expected a neutral atom",
                              atom.Z, ne);
                throw ParseError(msg, atom_line);
            }

            for (std::size_t i = 0; i < atom.orbitals.size(); ++i) {
                Orbital& o = atom.orbitals[i];
                const double norm = o.radial_norm();
                const double residual = std::abs(norm - 1.0);
                lib.diagnostics.push_back(
                    {atom.Z, atom.symbol, o.label, residual, orbital_lines[i]});
                if (residual > kNormHard) {
                    char msg[160];
                    std::snprintf(msg, sizeof msg,
                                  "orbital %s of %s: radial norm %.8g is off by more than 1e-4 "
                                  "(transcription error?)",
                                  o.label.c_str(), atom.symbol.c_str(), norm);
                    throw ParseError(msg, orbital_lines[i]);
                }
                if (residual > kNormWarn) {
                    char msg[160];
                    std::snprintf(msg, sizeof msg,
                                  "line %ld: orbital %s of %s: radial norm off by %.3g",
                                  orbital_lines[i], o.label.c_str(), atom.symbol.c_str(),
                                  residual);
                    lib.warnings.push_back(msg);
                }
                const double rescale = 1.0 / std::sqrt(norm);
                for (OrbitalTerm& t : o.terms) t.coefficient *= rescale;
            }
            lib.atoms.push_back(std::move(atom));
            in_atom = false;
        } else {
            throw ParseError("unknown directive '" + kind + "'", ln);
        }
    }
    if (in_atom)
        throw ParseError("file ended inside atom block started here", atom_line);
    return lib;
}

AtomBasis hydrogenic_basis(int Z) {
    if (Z < 1) throw DomainError("hydrogenic_basis: Z must be >= 1");
    AtomBasis atom;
    atom.Z = Z;
    atom.symbol = "Z" + std::to_string(Z);
    if (Z == 1) atom.symbol = "H";
    Orbital o;
    o.label = "1S";
    o.l = 0;
    o.occupation = 1.0;
    o.terms.push_back({1.0, {1, static_cast<double>(Z)}});
    atom.orbitals.push_back(std::move(o));
    return atom;
}

std::string format_atom_block(const AtomBasis& atom, int coefficient_digits) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "atom Z=%d symbol=%s\n", atom.Z, atom.symbol.c_str());
    out += buf;
    for (const Orbital& o : atom.orbitals) {
        std::snprintf(buf, sizeof buf, "orbital label=%s l=%d occ=%.10g\n", o.label.c_str(),
                      o.l, o.occupation);
        out += buf;
        for (const OrbitalTerm& t : o.terms) {
            std::snprintf(buf, sizeof buf, "term c=%.*f n=%d zeta=%.10f\n", coefficient_digits,
                          t.coefficient, t.primitive.n, t.primitive.zeta);
            out += buf;
        }
    }
    out += "end\n";
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<ManifestEntry> manifest_entries(std::string_view library_text) {
    std::vector<ManifestEntry> out;
    Cursor cur{library_text};
    std::string line;
    bool in_atom = false;
    std::string block;
    ManifestEntry entry;

    while (cur.next_line(line)) {
        const std::vector<std::string> toks = split_ws(line);
        if (!in_atom) {
            if (!toks.empty() && toks[0] == "atom") {
                in_atom = true;
                entry = ManifestEntry{};
                entry.Z = parse_int(get_field(toks, "Z", cur.line_no), "Z", cur.line_no);
                entry.symbol = get_field(toks, "symbol", cur.line_no);
                block = line;
                block += '\n';
            }
            continue;
        }
        block += line;
        block += '\n';
        if (!toks.empty() && toks[0] == "orbital") ++entry.n_orbitals;
        if (!toks.empty() && toks[0] == "end") {
            entry.checksum = fnv1a64(block);
            out.push_back(entry);
            in_atom = false;
        }
    }
    return out;
}

std::string format_manifest(const std::vector<ManifestEntry>& entries) {
    std::string out;
    char buf[128];
    for (const ManifestEntry& e : entries) {
        std::snprintf(buf, sizeof buf, "%d %s %d %016llx\n", e.Z, e.symbol.c_str(),
                      e.n_orbitals, static_cast<unsigned long long>(e.checksum));
        out += buf;
    }
    return out;
}

} // namespace sdlmc
