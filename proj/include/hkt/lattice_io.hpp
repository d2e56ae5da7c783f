#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

#include "hkt/exact_linalg.hpp"

namespace hkt {

/// Raw lattice input: a Gram matrix plus the three triple vectors, before any
/// validation beyond shape.
struct LatticeSpec {
    std::string name;
    GramLattice lattice;
    std::array<RationalVector, 3> triple;
};

/// "U3" (three hyperbolic planes), "K3" (U^3 + E8(-1)^2) or "diag222". Triple
/// is e_i + f_i on the three hyperbolic planes, or the standard basis.
LatticeSpec builtin_lattice(std::string_view name);
bool is_builtin_lattice(std::string_view name);

/// {"rank": r, "gram": [[int,...],...], "triple": [[rat,...],x3]}, rat being an
/// integer or a "p/q" string. Throws ParseError or DimensionMismatch.
LatticeSpec parse_lattice_json(std::string_view text, std::string name = "json");
LatticeSpec load_lattice_file(const std::filesystem::path& path);

/// A built-in name or a path to a JSON file.
LatticeSpec load_lattice(std::string_view source);

std::string to_json(const LatticeSpec& spec);

Matrix<Integer> e8_gram();

}  // namespace hkt
