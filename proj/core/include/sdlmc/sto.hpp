#ifndef SDLMC_STO_HPP
#define SDLMC_STO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sdlmc {

/// Normalized Slater-type radial primitive N r^(n-1) exp(-zeta r).
struct StoPrimitive {
    int n = 1;         // principal-type integer, power r^(n-1)
    double zeta = 1.0; // orbital exponent, 1/bohr

    /// N = (2 zeta)^(n+1/2) / sqrt((2n)!)
    double normalization() const;
};

struct OrbitalTerm {
    double coefficient = 0.0;
    StoPrimitive primitive;
};

/// One subshell: R(r) = sum_j c_j N_j r^(n_j - 1) exp(-zeta_j r), with
/// occupation electrons. The parser rescales coefficients so the radial
/// norm integral R^2 r^2 dr is exactly one.
struct Orbital {
    std::string label; // e.g. "2P"
    int l = 0;
    double occupation = 0.0;
    std::vector<OrbitalTerm> terms;

    double radial(double r) const;

    /// Analytic radial norm integral R^2 r^2 dr.
    double radial_norm() const;
};

struct AtomBasis {
    int Z = 0;
    std::string symbol;
    std::vector<Orbital> orbitals;

    double electron_count() const;
    double zeta_min() const;
    double zeta_max() const;
    int max_l() const;
};

/// Residual of each orbital's radial normalization before rescaling,
/// reported for the validate command and for transcription checks.
struct OrbitalDiagnostic {
    int Z = 0;
    std::string atom_symbol;
    std::string orbital_label;
    double norm_residual = 0.0; // |norm - 1| as parsed
    long line = 0;
};

struct BasisLibrary {
    std::vector<AtomBasis> atoms;
    std::vector<OrbitalDiagnostic> diagnostics;
    std::vector<std::string> warnings; // norm residual in (1e-6, 1e-4]

    const AtomBasis* find(int Z) const;
};

/// Parse the line-oriented basis format:
///
///   # comment
///   atom Z=<int> symbol=<token>
///   orbital label=<token> l=<int> occ=<real>
///   term c=<real> n=<int> zeta=<real>
///   end
///
/// Throws ParseError with a line number on malformed records, occupation
/// bounds, n < l+1, non-neutral atoms, or norm residuals beyond 1e-4.
BasisLibrary parse_basis_library(std::string_view text);

/// Exact one-electron ground state: a single 1s Slater function with
/// zeta = Z and occupation 1. The analytic oracle family.
AtomBasis hydrogenic_basis(int Z);

/// Canonical text block for one atom in the library format.
std::string format_atom_block(const AtomBasis& atom, int coefficient_digits = 12);

/// Manifest support: one line per atom, "Z symbol n_orbitals checksum",
/// where the checksum is FNV-1a 64 of the atom's raw block (from the
/// "atom" line through "end", newlines included).
struct ManifestEntry {
    int Z = 0;
    std::string symbol;
    int n_orbitals = 0;
    std::uint64_t checksum = 0;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::vector<ManifestEntry> manifest_entries(std::string_view library_text);
std::string format_manifest(const std::vector<ManifestEntry>& entries);

} // namespace sdlmc

#endif
