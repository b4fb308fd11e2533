#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "axial/algebra.hpp"

namespace axial {

/// Algebra files are JSON documents of the form
///
///   {"field": {"kind": "Fp", "p": 7}, "dim": 3, "basis": ["a", "b", "y"],
///    "table": [[[[0, "1"]], [[2, "3"]], ...], ...]}
///
/// table[i][j] lists the nonzero coefficients [k, "c"] of basis_i * basis_j.
/// The field is {"kind": "Q"} or {"kind": "Fp", "p": p}. Scalars are strings
/// ("-3/4" over Q, a residue or fraction over F_p). Unknown keys are rejected.

/// Throws ParseError. Syntax errors carry "line L, column C" (the last
/// character of the offending token); structural errors name the offending
/// path, e.g. "table[1][0][2]".
AlgebraPtr parse_algebra(std::string_view text);

/// Canonical text: fixed key order, one table row per line, entries sorted by
/// k with zero coefficients dropped, scalars in lowest terms. Parsing the
/// output and serializing again reproduces it byte for byte.
std::string serialize_algebra(const Algebra& alg);

/// Throw IOFailure when the file cannot be read or written.
AlgebraPtr load_algebra(const std::filesystem::path& path);
void save_algebra(const std::filesystem::path& path, const Algebra& alg);

}  // namespace axial
