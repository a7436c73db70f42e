#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mteam/eval.hpp"
#include "mteam/formula.hpp"
#include "mteam/multiteam.hpp"
#include "mteam/structure.hpp"

namespace mteam {

/// Everything needed for one check.
struct Instance {
    Multistructure structure;
    Multiteam team;
    Formula formula;
    SemanticsConfig config;
};

/// CSV: a header of variable names, optionally ending in `#count`, then
/// one row per assignment. Without `#count` every row counts once.
/// Repeated rows add up. Throws ParseError on ragged rows, bad counts and
/// repeated header names.
Multiteam load_multiteam(std::string_view text);
/// Canonical CSV: sorted columns, `#count` last, rows in order, no zero rows.
std::string dump_multiteam(const Multiteam& t);

/// Line format:
///   domain: a b*2 c
///   rel R/2: (a,b) (b,c)
/// Blank lines and lines starting with `#` are ignored.
Multistructure load_structure(std::string_view text);
std::string dump_structure(const Multistructure& A);

/// Throws InputError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

struct InstanceFiles {
    std::filesystem::path structure, team, formula;
};

/// Writes <stem>.struct, <stem>.csv and <stem>.formula into `dir`.
InstanceFiles write_instance(const Instance& inst, const std::filesystem::path& dir, const std::string& stem);
Instance read_instance(const InstanceFiles& files, const SemanticsConfig& cfg = {});

}  // namespace mteam
