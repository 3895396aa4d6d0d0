#pragma once

#include <string>

#include "tropf/seeds.hpp"

namespace tropf::cli {

/// Reads a JSON seed description:
///
///   { "n": 2, "m": 4,
///     "B": [[0,1],[-1,0],[1,0],[0,1]],      // m x n, row-major
///     "lambda": [[...]],                     // optional m x m
///     "lambda0": [[0,0],[0,0]], "S": [1,1],  // or: principal pair built from these
///     "names": ["x1","x2","x3","x4"] }       // optional
///
/// With lambda0/S, B may also be given as the n x n exchange matrix.
/// Syntax errors report line and column; shape errors report a JSON pointer.
RootConfig parse_seed_text(const std::string& text, const std::string& origin = "<seed>");
RootConfig load_seed_file(const std::string& path);

}  // namespace tropf::cli
