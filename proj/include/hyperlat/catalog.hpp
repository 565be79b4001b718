#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperlat/quantum_module.hpp"

namespace hyperlat {

struct CatalogEntry {
  std::string name;
  int level;
  std::size_t rank;
};

/// The modules with golden data: A0..A6, D3, D6, E5, E9, E21.
std::vector<CatalogEntry> supported_modules();

/// Expected number of simple objects for a (name, level) pair, if known.
std::optional<std::size_t> expected_rank(const std::string& name, int level);

/// Directory holding the bundled module files; HYPERLAT_DATA_DIR wins over the
/// compiled-in default.
std::filesystem::path data_dir();

/// A: built in for any k >= 0. D (k = 0 mod 3) and E5/E9/E21 are read from
/// `data_dir()` and validated.
QuantumModule get_module(const std::string& name, int level);

QuantumModule parse_module(std::istream& in);
QuantumModule load_module_file(const std::filesystem::path& path);
void write_module(std::ostream& out, const QuantumModule& m);

/// Structural checks: shape, trialities in 0..2, grading compatibility of the
/// edges, rank formula (when known), non-negative alcove fusion and a valid
/// twist P. Throws ValidationError naming the first violated invariant.
void validate_module(const QuantumModule& m);

}  // namespace hyperlat
